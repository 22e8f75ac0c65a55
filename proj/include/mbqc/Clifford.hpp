#pragma once

#include "mbqc/Definitions.hpp"

#include <array>
#include <complex>

namespace mbqc {

using Mat2 = std::array<std::complex<double>, 4>; // row-major 2x2

/// One of the 24 single-qubit Clifford unitaries, stored as the canonical
/// Euler triple (a, b, c) of quarter turns meaning Z_{a pi/2} X_{b pi/2} Z_{c pi/2}
/// (rightmost factor applied first). Equality is modulo global phase.
class LocalClifford {
public:
    LocalClifford() = default; // identity, triple (0,0,0)

    static LocalClifford identity() { return {}; }
    static LocalClifford zQuarter(int k);
    static LocalClifford xQuarter(int k);
    static LocalClifford hadamard();
    static LocalClifford fromTriple(int a, int b, int c);
    static LocalClifford fromMatrix(const Mat2& m);

    [[nodiscard]] bool isIdentity() const { return index_ == 0; }
    /// True when the unitary is a power of Z (diagonal modulo phase).
    [[nodiscard]] bool isDiagonal() const;
    /// For diagonal elements: k with this ∝ Z_{k pi/2}.
    [[nodiscard]] int diagonalQuarter() const;

    [[nodiscard]] std::array<int, 3> zxzTriple() const;
    [[nodiscard]] std::array<int, 3> xzxTriple() const;
    [[nodiscard]] const Mat2& matrix() const;

    /// Composition: (a.then(b)) acts as b∘a (a applied first).
    [[nodiscard]] LocalClifford then(const LocalClifford& later) const;
    /// Matrix product this∘earlier (earlier applied first).
    [[nodiscard]] LocalClifford after(const LocalClifford& earlier) const;

    bool operator==(const LocalClifford& o) const = default;

    static constexpr std::size_t groupOrder = 24;

private:
    explicit LocalClifford(std::size_t index) : index_(index) {}
    std::size_t index_ = 0;
};

/// True iff a ∝ z*b for some unit-modulus z, elementwise within tol.
bool matEqualUpToPhase(const Mat2& a, const Mat2& b, double tol = 1e-9);

Mat2 matMul(const Mat2& a, const Mat2& b);
Mat2 zPhaseMat(double radians);
Mat2 xPhaseMat(double radians);
Mat2 hadamardMat();

} // namespace mbqc
