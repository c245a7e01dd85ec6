#pragma once

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include "vacuum/quantity.hpp"
#include "vacuum/species.hpp"

namespace vacuum {

/// Which reading of the first-order excited amplitude to use. `paper`
/// keeps a1 = lambda e^{i tau}, which is not zero at tau = 0; `literal`
/// is the antiderivative lambda (e^{i tau} - 1) with a1(0) = 0.
enum class Branch { paper, literal };

std::string_view to_string(Branch b);
Branch parse_branch(std::string_view s);

/// Above this |lambda| the first-order amplitudes are not trusted.
inline constexpr double first_order_lambda_limit = 0.1;

/// Dimensionless coupling q E0 <x>_{1,0} / (hbar omega0).
class CouplingLambda
{
  public:
    explicit CouplingLambda(double value);
    double value() const { return value_; }
    bool first_order_valid() const;

  private:
    double value_;
};

CouplingLambda coupling_lambda(const OscillatorSpec& o, const Quantity& charge, const Quantity& field_e0);

struct AmplitudePair
{
    std::complex<double> a0{1.0, 0.0};
    std::complex<double> a1{0.0, 0.0};
    double tau = 0.0; ///< omega0 t

    double norm_squared() const { return std::norm(a0) + std::norm(a1); }
};

/// First-order amplitudes at tau; a0 stays 1 in both branches.
AmplitudePair amplitudes_analytic(double tau, CouplingLambda lam, Branch branch = Branch::paper);

/// Default ODE tolerance and the admissible range.
inline constexpr double default_ode_tolerance = 1e-10;
inline constexpr double min_ode_tolerance = 1e-12;
inline constexpr double max_ode_tolerance = 1e-6;

/// Integrates the full two-level system
///   da0/dtau = i lambda a1 e^{-i tau},  da1/dtau = i lambda a0 e^{+i tau}
/// from (1, 0) at tau = 0. Keeps the back-reaction on a0 that the analytic
/// branches drop.
AmplitudePair amplitudes_ode(double tau_end, CouplingLambda lam, double tolerance = default_ode_tolerance);

/// Least-squares slope of log|a0(tau) - 1| against log lambda. The grid needs
/// at least four distinct points in [1e-4, 1e-2].
double scaling_exponent(std::span<const double> lambda_grid, double tau, double tolerance = min_ode_tolerance);

struct DipoleSample
{
    double tau;
    Quantity dipole; ///< C m
};

/// <p>(tau) = 2 q <x>_{1,0} Re[a1 e^{-i tau}] with a0 = 1.
std::vector<DipoleSample> dipole_trajectory(const OscillatorSpec& o, const Quantity& charge, const Quantity& field_e0,
                                            Branch branch, std::span<const double> taus);

/// Mean dipole over one period of tau by the periodic trapezoid rule.
Quantity dipole_time_average(const OscillatorSpec& o, const Quantity& charge, const Quantity& field_e0,
                             Branch branch, int samples = 64);

} // namespace vacuum
