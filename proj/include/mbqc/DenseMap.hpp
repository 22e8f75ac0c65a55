#pragma once

#include "mbqc/Definitions.hpp"

#include <complex>
#include <vector>

namespace mbqc {

/// Dense complex matrix, 2^{outputs} x 2^{inputs}, row-major.
/// Basis convention: the first qubit in a list is the most significant bit.
struct DenseMap {
    std::size_t rows = 1;
    std::size_t cols = 1;
    std::vector<std::complex<double>> data;

    DenseMap() : data(1, 1.0) {}
    DenseMap(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    std::complex<double>& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    [[nodiscard]] const std::complex<double>& at(std::size_t r, std::size_t c) const {
        return data[r * cols + c];
    }

    [[nodiscard]] double maxAbs() const;
    [[nodiscard]] DenseMap dagger() const;
    [[nodiscard]] DenseMap operator*(const DenseMap& o) const;
    [[nodiscard]] std::size_t rank(double tol = 1e-9) const;
};

} // namespace mbqc
