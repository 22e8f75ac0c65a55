#include "mbqc/Angle.hpp"

#include <numbers>
#include <numeric>

namespace mbqc {

Angle::Angle(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw MbqcError("angle denominator must be nonzero");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const auto g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    num %= 2 * den;
    if (num < 0) {
        num += 2 * den;
    }
    num_ = num;
    den_ = den;
}

Angle Angle::operator+(const Angle& o) const {
    return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

Angle Angle::operator-(const Angle& o) const {
    return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
}

Angle Angle::operator-() const {
    return {-num_, den_};
}

double Angle::radians() const {
    return std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
}

int Angle::quarterTurns() const {
    if (!isClifford()) {
        throw MbqcError("quarterTurns on non-Clifford angle " + toString());
    }
    return static_cast<int>(den_ == 1 ? 2 * num_ : num_);
}

Angle Angle::quarter(int k) {
    return {k, 2};
}

std::string Angle::toString() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Angle Angle::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return {std::stoll(text), 1};
        }
        const auto num = std::stoll(text.substr(0, slash));
        const auto den = std::stoll(text.substr(slash + 1));
        return {num, den};
    } catch (const std::logic_error&) {
        throw MbqcError("malformed angle '" + text + "' (expected num/den multiple of pi)");
    }
}

} // namespace mbqc
