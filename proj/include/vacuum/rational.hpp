#pragma once

#include <cstdint>
#include <compare>
#include <string>

namespace vacuum {

/// Exact rational number with a normalised, strictly positive denominator.
class Rational
{
  public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {} // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }
    constexpr bool is_integer() const { return den_ == 1; }
    constexpr bool is_zero() const { return num_ == 0; }
    constexpr double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// "3", "-1/2"
    std::string str() const;
    /// Parses "n" or "n/d".
    static Rational parse(const std::string& text);

    friend Rational operator+(Rational a, Rational b);
    friend Rational operator-(Rational a, Rational b);
    friend Rational operator*(Rational a, Rational b);
    friend Rational operator/(Rational a, Rational b);
    friend Rational operator-(Rational a) { return Rational(-a.num_, a.den_); }

    friend constexpr bool operator==(Rational a, Rational b) = default;
    friend std::strong_ordering operator<=>(Rational a, Rational b);

  private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace vacuum
