#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace coinchain {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always stored normalized: denominator > 0, gcd(|num|, den) == 1.
/// The quantities handled here (transition probabilities, coin tallies,
/// average change counts) have denominators of at most a few hundred, so
/// 64 bits leave ample headroom.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(long long value) : num_(value) {}  // NOLINT: implicit by design
    constexpr Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

    constexpr long long num() const { return num_; }
    constexpr long long den() const { return den_; }

    constexpr Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    constexpr Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    constexpr Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    constexpr Rational operator/(const Rational& o) const {
        return Rational(num_ * o.den_, den_ * o.num_);
    }
    constexpr Rational operator-() const { return Rational(-num_, den_); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    constexpr bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    constexpr bool operator!=(const Rational& o) const { return !(*this == o); }
    constexpr bool operator<(const Rational& o) const {
        return num_ * o.den_ < o.num_ * den_;
    }
    constexpr bool operator<=(const Rational& o) const { return !(o < *this); }
    constexpr bool operator>(const Rational& o) const { return o < *this; }
    constexpr bool operator>=(const Rational& o) const { return !(*this < o); }

    constexpr double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// "389/100", or just "389" when the denominator is 1.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    constexpr void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    long long num_ = 0;
    long long den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

inline long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

}  // namespace coinchain
