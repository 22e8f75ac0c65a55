#pragma once

#include "mbqc/Definitions.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace mbqc {

/// A row addition: row[target] ^= row[source].
struct RowOp {
    std::size_t source;
    std::size_t target;
    bool operator==(const RowOp&) const = default;
};

using RowOpLog = std::vector<RowOp>;

/// Dense bit matrix over F_2, word-packed row-major.
class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    [[nodiscard]] bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool v);

    void addRow(std::size_t source, std::size_t target); // target ^= source
    [[nodiscard]] bool rowIsZero(std::size_t r, std::size_t colLimit) const;
    [[nodiscard]] std::size_t rowPopcount(std::size_t r) const;

    [[nodiscard]] GF2Matrix transposed() const;
    bool operator==(const GF2Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t wordsPerRow_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct EliminationResult {
    GF2Matrix matrix;
    RowOpLog log;
    std::size_t rank = 0;
};

/// Full Gaussian elimination to reduced row-echelon form. Pivots are chosen as
/// the first nonzero row scanning top-down; row swaps are realized as three
/// row additions so the log consists of additions only and replays exactly.
EliminationResult eliminate(const GF2Matrix& m);

/// Replays a row-op log on a copy of m.
GF2Matrix replay(const RowOpLog& log, GF2Matrix m);

/// Solves a*x = b; free variables are fixed to 0. Empty optional if inconsistent.
std::optional<std::vector<bool>> solve(const GF2Matrix& a, const std::vector<bool>& b);

/// Shared-elimination solve of a*x = b_j for many right-hand sides at once.
std::vector<std::optional<std::vector<bool>>>
solveMany(const GF2Matrix& a, const std::vector<std::vector<bool>>& bs);

std::vector<bool> multiply(const GF2Matrix& a, const std::vector<bool>& x);

} // namespace mbqc
