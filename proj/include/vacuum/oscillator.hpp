#pragma once

#include <functional>

#include "vacuum/gauss_hermite.hpp"
#include "vacuum/quantity.hpp"
#include "vacuum/species.hpp"

namespace vacuum {

/// Highest oscillator level the numerics support.
inline constexpr int max_level = 10;

/// Polynomial part h_n(x) = psi_n(x) exp(x^2/2) of the normalised Hermite
/// function, by the stable three-term recurrence. Real, positive leading
/// coefficient.
template <typename Scalar>
Scalar hermite_polynomial_part(int n, Scalar x)
{
    using std::sqrt;
    Scalar prev(0);
    Scalar cur = Scalar(1) / sqrt(sqrt(std::numbers::pi_v<Scalar>));
    for (int k = 0; k < n; ++k) {
        Scalar next = sqrt(Scalar(2) / Scalar(k + 1)) * x * cur - sqrt(Scalar(k) / Scalar(k + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Normalised eigenfunction psi_n(x), x in natural units.
template <typename Scalar>
Scalar hermite_function(int n, Scalar x)
{
    using std::exp;
    return hermite_polynomial_part(n, x) * exp(-x * x / Scalar(2));
}

/// psi_n at dimensionless x = position / natural_length(o). The oscillator
/// only fixes the length scale; n must lie in [0, max_level].
double eigenfunction(int n, double x, const OscillatorSpec& o);

/// sqrt(hbar / (mu omega0))
Quantity natural_length(const OscillatorSpec& o);

struct QuadratureResult
{
    double value = 0.0;
    double error_estimate = 0.0; ///< absolute
    double scale = 0.0; ///< sum of |w_i f(x_i)|, the reference for relative error
    int nodes = 0;
};

/// Node counts of the primary rule and of the comparison rule used for the
/// error estimate.
inline constexpr int quadrature_nodes = 32;
inline constexpr int quadrature_check_nodes = 24;

/// Default acceptance threshold on error_estimate / scale.
inline constexpr double quadrature_tolerance = 1e-10;

/// Gauss-Hermite evaluation of int psi_a(x) x^power psi_b(x) dx in natural
/// units. The error estimate is the 32-vs-24-node difference plus a rounding
/// floor of 4 eps times the absolute sum; ConvergenceError when it exceeds
/// `tolerance` relative to that sum.
QuadratureResult hermite_moment(int a, int b, int power, double tolerance = quadrature_tolerance);

/// <x>_{n',n} by quadrature, rescaled to metres.
Quantity matrix_element_x_quadrature(int n_prime, int n, const OscillatorSpec& o,
                                     double tolerance = quadrature_tolerance);

/// sqrt(hbar / (2 mu omega0)), the closed-form <x>_{1,0}.
Quantity matrix_element_x_analytic(const OscillatorSpec& o);

/// U(x) in joules for x in metres. The evaluator must be finite on the
/// search interval and safe to call concurrently.
struct Potential1D
{
    std::function<double(double)> energy;
    double x_lo = 0.0;
    double x_hi = 0.0;
};

struct HarmonicFit
{
    Quantity x_e; ///< m
    Quantity k_spring; ///< kg s^-2
    Quantity u0; ///< J
};

/// Locates the interior minimum of U by Brent's method, polishes it with
/// Newton steps on extrapolated finite differences and returns the local
/// quadratic model U(x_e) + K (x - x_e)^2 / 2.
HarmonicFit harmonic_approximation(const Potential1D& p);

/// (q^2/mu) E0 / omega0^2, dipole moment of the field-polarised ground state.
Quantity dipole_expectation_static(const OscillatorSpec& o, const Quantity& charge, const Quantity& field_e0);

/// The same moment written as 2 q^2 E0 <x>_{1,0}^2 / (hbar omega0).
Quantity dipole_expectation_from_matrix_element(const OscillatorSpec& o, const Quantity& charge,
                                                const Quantity& field_e0);

} // namespace vacuum
