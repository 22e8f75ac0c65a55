#include "mbqc/Clifford.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace mbqc {

namespace {

constexpr double kPhaseTol = 1e-9;

struct GroupEntry {
    std::array<int, 3> zxz;
    std::array<int, 3> xzx;
    Mat2 mat;
};

std::complex<double> maxAbsEntry(const Mat2& m) {
    std::complex<double> best = m[0];
    for (const auto& e : m) {
        if (std::abs(e) > std::abs(best)) {
            best = e;
        }
    }
    return best;
}

} // namespace

Mat2 matMul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 zPhaseMat(double radians) {
    return {1.0, 0.0, 0.0, std::exp(std::complex<double>(0, radians))};
}

Mat2 hadamardMat() {
    const double s = 1.0 / std::numbers::sqrt2;
    return {s, s, s, -s};
}

Mat2 xPhaseMat(double radians) {
    return matMul(hadamardMat(), matMul(zPhaseMat(radians), hadamardMat()));
}

bool matEqualUpToPhase(const Mat2& a, const Mat2& b, double tol) {
    const auto refB = maxAbsEntry(b);
    if (std::abs(refB) < tol) {
        return std::abs(maxAbsEntry(a)) < tol;
    }
    // locate the same reference position in a
    std::size_t k = 0;
    for (std::size_t i = 1; i < 4; ++i) {
        if (std::abs(b[i]) > std::abs(b[k])) {
            k = i;
        }
    }
    const auto z = a[k] / b[k];
    if (std::abs(std::abs(z) - 1.0) > 1e-6) {
        return false;
    }
    for (std::size_t i = 0; i < 4; ++i) {
        if (std::abs(a[i] - z * b[i]) > tol) {
            return false;
        }
    }
    return true;
}

namespace {

Mat2 tripleMatZXZ(int a, int b, int c) {
    const double q = std::numbers::pi / 2;
    return matMul(zPhaseMat(a * q), matMul(xPhaseMat(b * q), zPhaseMat(c * q)));
}

Mat2 tripleMatXZX(int a, int b, int c) {
    const double q = std::numbers::pi / 2;
    return matMul(xPhaseMat(a * q), matMul(zPhaseMat(b * q), xPhaseMat(c * q)));
}

const std::vector<GroupEntry>& table() {
    static const std::vector<GroupEntry> tab = [] {
        std::vector<GroupEntry> entries;
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                for (int c = 0; c < 4; ++c) {
                    const auto m = tripleMatZXZ(a, b, c);
                    bool known = false;
                    for (const auto& e : entries) {
                        if (matEqualUpToPhase(m, e.mat, kPhaseTol)) {
                            known = true;
                            break;
                        }
                    }
                    if (!known) {
                        entries.push_back({{a, b, c}, {0, 0, 0}, m});
                    }
                }
            }
        }
        for (auto& e : entries) {
            bool found = false;
            for (int a = 0; a < 4 && !found; ++a) {
                for (int b = 0; b < 4 && !found; ++b) {
                    for (int c = 0; c < 4 && !found; ++c) {
                        if (matEqualUpToPhase(tripleMatXZX(a, b, c), e.mat, kPhaseTol)) {
                            e.xzx = {a, b, c};
                            found = true;
                        }
                    }
                }
            }
        }
        return entries;
    }();
    return tab;
}

std::size_t lookup(const Mat2& m) {
    const auto& tab = table();
    for (std::size_t i = 0; i < tab.size(); ++i) {
        if (matEqualUpToPhase(m, tab[i].mat, kPhaseTol)) {
            return i;
        }
    }
    throw MbqcError("matrix is not a single-qubit Clifford");
}

} // namespace

LocalClifford LocalClifford::fromMatrix(const Mat2& m) {
    return LocalClifford(lookup(m));
}

LocalClifford LocalClifford::fromTriple(int a, int b, int c) {
    return fromMatrix(tripleMatZXZ(((a % 4) + 4) % 4, ((b % 4) + 4) % 4, ((c % 4) + 4) % 4));
}

LocalClifford LocalClifford::zQuarter(int k) {
    return fromTriple(k, 0, 0);
}

LocalClifford LocalClifford::xQuarter(int k) {
    return fromTriple(0, k, 0);
}

LocalClifford LocalClifford::hadamard() {
    return fromMatrix(hadamardMat());
}

const Mat2& LocalClifford::matrix() const {
    return table()[index_].mat;
}

std::array<int, 3> LocalClifford::zxzTriple() const {
    return table()[index_].zxz;
}

std::array<int, 3> LocalClifford::xzxTriple() const {
    return table()[index_].xzx;
}

bool LocalClifford::isDiagonal() const {
    const auto& m = matrix();
    return std::abs(m[1]) < kPhaseTol && std::abs(m[2]) < kPhaseTol;
}

int LocalClifford::diagonalQuarter() const {
    if (!isDiagonal()) {
        throw MbqcError("diagonalQuarter on non-diagonal Clifford");
    }
    for (int k = 0; k < 4; ++k) {
        if (matEqualUpToPhase(matrix(), zPhaseMat(k * std::numbers::pi / 2), kPhaseTol)) {
            return k;
        }
    }
    throw MbqcError("unreachable: diagonal Clifford is a Z power");
}

LocalClifford LocalClifford::then(const LocalClifford& later) const {
    return fromMatrix(matMul(later.matrix(), matrix()));
}

LocalClifford LocalClifford::after(const LocalClifford& earlier) const {
    return fromMatrix(matMul(matrix(), earlier.matrix()));
}

} // namespace mbqc
