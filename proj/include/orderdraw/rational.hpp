#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace orderdraw {

/// Exact fraction with 64-bit terms, always normalised (den > 0, gcd 1).
/// Plane coordinates stay small integers plus perturbation offsets, so
/// overflow is not a concern at drawing scale.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value) {} // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) {
            throw std::domain_error("zero denominator");
        }
        normalise();
    }

    /// Nearest fraction with the given denominator.
    static Rational approximate(double value, std::int64_t den = 1000) {
        return {static_cast<std::int64_t>(value * static_cast<double>(den) + (value < 0 ? -0.5 : 0.5)), den};
    }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string to_string() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator+(const Rational &a, const Rational &b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator-(const Rational &a, const Rational &b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator*(const Rational &a, const Rational &b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend Rational operator-(const Rational &a) { return {-a.num_, a.den_}; }

    friend bool operator==(const Rational &a, const Rational &b) = default;
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

private:
    void normalise() {
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

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace orderdraw
