#include "mbqc/GF2.hpp"

#include <bit>

namespace mbqc {

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wordsPerRow_((cols + 63) / 64), bits_(rows * wordsPerRow_, 0) {}

bool GF2Matrix::get(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) {
        throw MbqcError("GF2Matrix access out of range");
    }
    return (bits_[r * wordsPerRow_ + c / 64] >> (c % 64)) & 1U;
}

void GF2Matrix::set(std::size_t r, std::size_t c, bool v) {
    if (r >= rows_ || c >= cols_) {
        throw MbqcError("GF2Matrix access out of range");
    }
    auto& w = bits_[r * wordsPerRow_ + c / 64];
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    w = v ? (w | mask) : (w & ~mask);
}

void GF2Matrix::addRow(std::size_t source, std::size_t target) {
    if (source >= rows_ || target >= rows_) {
        throw MbqcError("GF2Matrix row index out of range");
    }
    const auto* src = bits_.data() + source * wordsPerRow_;
    auto* dst = bits_.data() + target * wordsPerRow_;
    for (std::size_t w = 0; w < wordsPerRow_; ++w) {
        dst[w] ^= src[w];
    }
}

bool GF2Matrix::rowIsZero(std::size_t r, std::size_t colLimit) const {
    for (std::size_t c = 0; c < colLimit; ++c) {
        if (get(r, c)) {
            return false;
        }
    }
    return true;
}

std::size_t GF2Matrix::rowPopcount(std::size_t r) const {
    std::size_t n = 0;
    for (std::size_t w = 0; w < wordsPerRow_; ++w) {
        n += static_cast<std::size_t>(std::popcount(bits_[r * wordsPerRow_ + w]));
    }
    return n;
}

GF2Matrix GF2Matrix::transposed() const {
    GF2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) {
                t.set(c, r, true);
            }
        }
    }
    return t;
}

namespace {

// RREF with pivot search limited to the first pivotCols columns.
EliminationResult eliminateUpTo(GF2Matrix m, std::size_t pivotCols) {
    RowOpLog log;
    std::size_t pivotRow = 0;
    for (std::size_t c = 0; c < pivotCols && pivotRow < m.rows(); ++c) {
        std::size_t hit = m.rows();
        for (std::size_t r = pivotRow; r < m.rows(); ++r) {
            if (m.get(r, c)) {
                hit = r;
                break;
            }
        }
        if (hit == m.rows()) {
            continue;
        }
        if (hit != pivotRow) {
            for (const auto& op : {RowOp{hit, pivotRow}, RowOp{pivotRow, hit}, RowOp{hit, pivotRow}}) {
                m.addRow(op.source, op.target);
                log.push_back(op);
            }
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != pivotRow && m.get(r, c)) {
                m.addRow(pivotRow, r);
                log.push_back({pivotRow, r});
            }
        }
        ++pivotRow;
    }
    return {std::move(m), std::move(log), pivotRow};
}

} // namespace

EliminationResult eliminate(const GF2Matrix& m) {
    return eliminateUpTo(m, m.cols());
}

GF2Matrix replay(const RowOpLog& log, GF2Matrix m) {
    for (const auto& op : log) {
        m.addRow(op.source, op.target);
    }
    return m;
}

std::vector<std::optional<std::vector<bool>>>
solveMany(const GF2Matrix& a, const std::vector<std::vector<bool>>& bs) {
    for (const auto& b : bs) {
        if (b.size() != a.rows()) {
            throw MbqcError("solve: rhs length does not match row count");
        }
    }
    GF2Matrix aug(a.rows(), a.cols() + bs.size());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (a.get(r, c)) {
                aug.set(r, c, true);
            }
        }
        for (std::size_t j = 0; j < bs.size(); ++j) {
            if (bs[j][r]) {
                aug.set(r, a.cols() + j, true);
            }
        }
    }
    auto red = eliminateUpTo(std::move(aug), a.cols());

    // pivot column of each pivot row
    std::vector<std::size_t> pivotCol(red.rank);
    for (std::size_t r = 0; r < red.rank; ++r) {
        std::size_t c = 0;
        while (c < a.cols() && !red.matrix.get(r, c)) {
            ++c;
        }
        pivotCol[r] = c;
    }

    std::vector<std::optional<std::vector<bool>>> out(bs.size());
    for (std::size_t j = 0; j < bs.size(); ++j) {
        bool consistent = true;
        for (std::size_t r = red.rank; r < a.rows(); ++r) {
            if (red.matrix.get(r, a.cols() + j)) {
                consistent = false;
                break;
            }
        }
        if (!consistent) {
            continue;
        }
        std::vector<bool> x(a.cols(), false);
        for (std::size_t r = 0; r < red.rank; ++r) {
            x[pivotCol[r]] = red.matrix.get(r, a.cols() + j);
        }
        out[j] = std::move(x);
    }
    return out;
}

std::optional<std::vector<bool>> solve(const GF2Matrix& a, const std::vector<bool>& b) {
    return solveMany(a, {b})[0];
}

std::vector<bool> multiply(const GF2Matrix& a, const std::vector<bool>& x) {
    if (x.size() != a.cols()) {
        throw MbqcError("multiply: vector length does not match column count");
    }
    std::vector<bool> y(a.rows(), false);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        bool acc = false;
        for (std::size_t c = 0; c < a.cols(); ++c) {
            acc ^= (a.get(r, c) && x[c]);
        }
        y[r] = acc;
    }
    return y;
}

} // namespace mbqc
