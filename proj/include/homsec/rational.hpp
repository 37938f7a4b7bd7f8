#pragma once

// Exact rational arithmetic for certified bounds.  Values here are tiny
// (numerators and denominators bounded by the participant count), so a
// normalized int64 pair is plenty.

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace homsec {

class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}

    constexpr Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    constexpr Rational(std::int64_t whole) : num_(whole), den_(1) {}

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }

    friend constexpr bool operator==(const Rational& a, const Rational& b) = default;

    friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // cross-multiplication; operands stay far below the int64 range here
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

private:
    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace homsec
