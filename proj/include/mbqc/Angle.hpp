#pragma once

#include "mbqc/Definitions.hpp"

#include <cstdint>
#include <string>

namespace mbqc {

/// Exact angle as a rational multiple of pi, normalized into [0, 2pi).
/// Invariants: den > 0, gcd(|num|, den) == 1, 0 <= num < 2*den.
class Angle {
public:
    Angle() = default;
    Angle(std::int64_t num, std::int64_t den);

    [[nodiscard]] std::int64_t num() const { return num_; }
    [[nodiscard]] std::int64_t den() const { return den_; }

    [[nodiscard]] bool isZero() const { return num_ == 0; }
    [[nodiscard]] bool isClifford() const { return den_ <= 2; }
    [[nodiscard]] bool isPauli() const { return den_ == 1; }

    [[nodiscard]] Angle operator+(const Angle& o) const;
    [[nodiscard]] Angle operator-(const Angle& o) const;
    [[nodiscard]] Angle operator-() const;
    bool operator==(const Angle& o) const = default;

    [[nodiscard]] double radians() const;

    /// Quarter turns: value as multiple of pi/2, valid only when isClifford().
    [[nodiscard]] int quarterTurns() const;

    [[nodiscard]] std::string toString() const;
    static Angle parse(const std::string& text);

    static Angle zero() { return {}; }
    static Angle pi() { return {1, 1}; }
    static Angle quarter(int k);   // k * pi/2

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace mbqc
