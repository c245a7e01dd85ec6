#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "vacuum/rational.hpp"

namespace vacuum {

/// SI base dimension exponents, in the order
/// length, mass, time, current, temperature, amount, luminosity.
class Dimension
{
  public:
    static constexpr std::size_t size = 7;
    using Exponents = std::array<Rational, size>;

    constexpr Dimension() = default;
    explicit constexpr Dimension(const Exponents& e) : exp_(e) {}

    /// Integer exponents for the first four base dimensions.
    static Dimension of(int length, int mass, int time, int current = 0);

    const Exponents& exponents() const { return exp_; }
    Rational operator[](std::size_t i) const { return exp_[i]; }
    bool dimensionless() const;

    /// "m^2*kg*s^-2", "1" when dimensionless.
    std::string str() const;

    friend Dimension operator+(const Dimension& a, const Dimension& b);
    friend Dimension operator-(const Dimension& a, const Dimension& b);
    friend Dimension operator*(const Dimension& a, Rational p);
    friend bool operator==(const Dimension& a, const Dimension& b) = default;

  private:
    Exponents exp_{};
};

namespace dim {
// clang-format off
inline const Dimension none           = Dimension::of( 0,  0,  0);
inline const Dimension length         = Dimension::of( 1,  0,  0);
inline const Dimension mass           = Dimension::of( 0,  1,  0);
inline const Dimension time           = Dimension::of( 0,  0,  1);
inline const Dimension current        = Dimension::of( 0,  0,  0,  1);
inline const Dimension charge         = Dimension::of( 0,  0,  1,  1);
inline const Dimension energy         = Dimension::of( 2,  1, -2);
inline const Dimension action         = Dimension::of( 2,  1, -1);
inline const Dimension speed          = Dimension::of( 1,  0, -1);
inline const Dimension rate           = Dimension::of( 0,  0, -1);
inline const Dimension number_density = Dimension::of(-3,  0,  0);
inline const Dimension spring         = Dimension::of( 0,  1, -2);
inline const Dimension permittivity   = Dimension::of(-3, -1,  4,  2);
inline const Dimension permeability   = Dimension::of( 1,  1, -2, -2);
inline const Dimension electric_field = Dimension::of( 1,  1, -3, -1);
inline const Dimension dipole_moment  = Dimension::of( 1,  0,  1,  1);
// clang-format on
} // namespace dim

/// Finite real value carrying an SI dimension. Construction and every
/// arithmetic result reject NaN and infinity.
class Quantity
{
  public:
    Quantity() = default;
    Quantity(double value, const Dimension& d);
    static Quantity scalar(double value) { return Quantity(value, dim::none); }

    double value() const { return value_; }
    const Dimension& dimension() const { return dim_; }

    /// Value after asserting the dimension; `what` names the argument in the error.
    double in(const Dimension& expected, std::string_view what = "quantity") const;

    std::string str() const;

    friend Quantity operator*(const Quantity& a, const Quantity& b);
    friend Quantity operator/(const Quantity& a, const Quantity& b);
    friend Quantity operator+(const Quantity& a, const Quantity& b);
    friend Quantity operator-(const Quantity& a, const Quantity& b);
    friend Quantity operator-(const Quantity& a);
    friend Quantity operator*(double s, const Quantity& q);
    friend Quantity operator*(const Quantity& q, double s) { return s * q; }
    friend Quantity operator/(const Quantity& q, double s);

  private:
    double value_ = 0.0;
    Dimension dim_{};
};

Quantity q_mul(const Quantity& a, const Quantity& b);
Quantity q_div(const Quantity& a, const Quantity& b);
Quantity q_add(const Quantity& a, const Quantity& b);
/// Fractional powers require a strictly positive base.
Quantity q_pow(const Quantity& a, Rational p);
Quantity sqrt(const Quantity& a);
Quantity abs(const Quantity& a);

/// Throws DimensionError unless `q` has dimension `expected`.
void require_dimension(const Quantity& q, const Dimension& expected, std::string_view what);

/// Relative difference |a-b|/max(|a|,|b|); zero when both are zero.
double relative_difference(double a, double b);

enum class EnergyUnit { J, eV, keV, MeV, GeV };

EnergyUnit parse_energy_unit(std::string_view name);
std::string_view to_string(EnergyUnit u);

/// Converts between joules and the electron-volt family. `joules_per_ev`
/// is numerically the elementary charge of the loaded constants.
double energy_convert(double value, EnergyUnit from, EnergyUnit to, double joules_per_ev);

} // namespace vacuum
