#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace superwav {

// Thrown when exact integer arithmetic would overflow 64 bits.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Exact fraction num/den, den > 0, reduced. Used for angles (as fractions of
// 2*pi), grid origins and grid spacings. All arithmetic goes through 128-bit
// intermediates and throws capacity_error if the reduced result leaves int64.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t num, std::int64_t den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        num_ = g ? num / g : num;
        den_ = g ? den / g : den;
    }
    // NOLINTNEXTLINE(google-explicit-constructor): integers are exact rationals
    Rational(std::int64_t n) : num_(n), den_(1) {}

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const { return Rational(-num_, den_, already_reduced{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Reduction into [0, 1); this is "mod 2*pi" for angles stored as turns.
    Rational mod1() const {
        std::int64_t r = num_ % den_;
        if (r < 0) r += den_;
        return Rational(r, den_, already_reduced{});
    }

    bool is_integer() const { return den_ == 1; }

    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    using i128 = __int128;
    struct already_reduced {};
    Rational(std::int64_t n, std::int64_t d, already_reduced) : num_(n), den_(d) {}

    static Rational from128(i128 n, i128 d) {
        if (d < 0) { n = -n; d = -d; }
        i128 an = n < 0 ? -n : n;
        i128 g = gcd128(an, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi)
            throw capacity_error("Rational: 64-bit overflow in exact arithmetic");
        return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d),
                        already_reduced{});
    }
    static i128 gcd128(i128 a, i128 b) {
        while (b) { i128 t = a % b; a = b; b = t; }
        return a;
    }

    std::int64_t num_;
    std::int64_t den_;
};

// Angle on the circle as an exact fraction of a full turn (theta = 2*pi*value),
// kept in [0, 1).
class RationalAngle {
public:
    RationalAngle() : turns_() {}
    explicit RationalAngle(Rational turns) : turns_(turns.mod1()) {}
    RationalAngle(std::int64_t num, std::int64_t den) : turns_(Rational(num, den).mod1()) {}

    const Rational& turns() const { return turns_; }
    double radians() const;

    // Image under the map theta -> N*theta (z -> z^N on the circle).
    RationalAngle times(std::int64_t n) const {
        return RationalAngle(turns_ * Rational(n));
    }

    friend bool operator==(const RationalAngle& a, const RationalAngle& b) {
        return a.turns_ == b.turns_;
    }
    friend bool operator!=(const RationalAngle& a, const RationalAngle& b) { return !(a == b); }
    friend bool operator<(const RationalAngle& a, const RationalAngle& b) {
        return a.turns_ < b.turns_;
    }

    std::string str() const { return turns_.str() + " of 2pi"; }

private:
    Rational turns_;
};

}  // namespace superwav
