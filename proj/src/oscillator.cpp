#include "vacuum/oscillator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include <fmt/format.h>

#include "vacuum/error.hpp"

namespace vacuum {

namespace {

void check_level(int n)
{
    if (n < 0 || n > max_level)
        throw NumericError("oscillator level " + std::to_string(n) + " outside [0, " + std::to_string(max_level) + "]");
}

const GaussHermiteRule<double>& primary_rule()
{
    static const GaussHermiteRule<double> rule = gauss_hermite_rule<double>(quadrature_nodes);
    return rule;
}

const GaussHermiteRule<double>& check_rule()
{
    static const GaussHermiteRule<double> rule = gauss_hermite_rule<double>(quadrature_check_nodes);
    return rule;
}

} // namespace

double eigenfunction(int n, double x, const OscillatorSpec& /*o*/)
{
    check_level(n);
    if (!std::isfinite(x))
        throw NumericError("eigenfunction argument must be finite");
    return hermite_function(n, x);
}

Quantity natural_length(const OscillatorSpec& o) { return sqrt(o.hbar / (o.reduced_mass * o.omega0)); }

QuadratureResult hermite_moment(int a, int b, int power, double tolerance)
{
    check_level(a);
    check_level(b);
    if (power < 0 || power > 4)
        throw NumericError("moment power must lie in [0, 4]");
    if (!(tolerance > 0.0))
        throw NumericError("quadrature tolerance must be positive");

    auto integrand = [&](double x) {
        return hermite_polynomial_part(a, x) * std::pow(x, power) * hermite_polynomial_part(b, x);
    };

    const auto& rule = primary_rule();
    QuadratureResult r;
    r.nodes = static_cast<int>(rule.size());
    for (Eigen::Index i = 0; i < rule.size(); ++i) {
        double term = rule.weights[i] * integrand(rule.nodes[i]);
        r.value += term;
        r.scale += std::fabs(term);
    }
    double coarse = check_rule().integrate(integrand);
    r.error_estimate = std::fabs(r.value - coarse) + 4.0 * std::numeric_limits<double>::epsilon() * r.scale;
    if (r.error_estimate > tolerance * r.scale)
        throw ConvergenceError(fmt::format("quadrature error estimate {:.3g} (relative) exceeds tolerance {:.3g}",
                                           r.error_estimate / r.scale, tolerance));
    return r;
}

Quantity matrix_element_x_quadrature(int n_prime, int n, const OscillatorSpec& o, double tolerance)
{
    return hermite_moment(n_prime, n, 1, tolerance).value * natural_length(o);
}

Quantity matrix_element_x_analytic(const OscillatorSpec& o)
{
    return sqrt(o.hbar / (2.0 * o.reduced_mass * o.omega0));
}

//---------------------------------------------------------------------------//
// Harmonic approximation
//---------------------------------------------------------------------------//

namespace {

struct Estimate
{
    double value;
    double error;
};

/// Ridders' polynomial extrapolation of a finite-difference estimate whose
/// truncation error is even in h, starting from step h0.
template <typename Difference>
Estimate ridders(Difference&& diff, double h0)
{
    constexpr int ntab = 10;
    constexpr double con = 1.4;
    constexpr double con2 = con * con;
    std::array<std::array<double, ntab>, ntab> a{};
    double h = h0;
    a[0][0] = diff(h);
    Estimate best{a[0][0], std::numeric_limits<double>::max()};
    for (int i = 1; i < ntab; ++i) {
        h /= con;
        a[0][i] = diff(h);
        double fac = con2;
        for (int j = 1; j <= i; ++j) {
            a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1.0);
            fac *= con2;
            double errt = std::max(std::fabs(a[j][i] - a[j - 1][i]), std::fabs(a[j][i] - a[j - 1][i - 1]));
            if (errt <= best.error)
                best = {a[j][i], errt};
        }
        if (std::fabs(a[i][i] - a[i - 1][i - 1]) >= 2.0 * best.error)
            break;
    }
    return best;
}

/// Brent's minimiser on [lo, hi]; stops once the bracket is narrower than
/// `width_tol`.
std::pair<double, double> brent_minimize(const std::function<double(double)>& f, double lo, double hi,
                                         double width_tol)
{
    constexpr double golden = 0.3819660112501051;
    constexpr int max_iter = 500;
    double a = lo, b = hi;
    double x = a + golden * (b - a);
    double w = x, v = x;
    double fx = f(x), fw = fx, fv = fx;
    double d = 0.0, e = 0.0;
    for (int iter = 0; iter < max_iter; ++iter) {
        double xm = 0.5 * (a + b);
        double tol1 = 0.25 * width_tol + std::numeric_limits<double>::epsilon() * std::fabs(x);
        double tol2 = 2.0 * tol1;
        if (std::fabs(x - xm) <= tol2 - 0.5 * (b - a))
            return {x, fx};
        bool golden_step = true;
        if (std::fabs(e) > tol1) {
            double r = (x - w) * (fx - fv);
            double q = (x - v) * (fx - fw);
            double p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if (q > 0.0)
                p = -p;
            q = std::fabs(q);
            double etemp = e;
            e = d;
            if (!(std::fabs(p) >= std::fabs(0.5 * q * etemp) || p <= q * (a - x) || p >= q * (b - x))) {
                d = p / q;
                double u = x + d;
                if (u - a < tol2 || b - u < tol2)
                    d = std::copysign(tol1, xm - x);
                golden_step = false;
            }
        }
        if (golden_step) {
            e = (x >= xm) ? a - x : b - x;
            d = golden * e;
        }
        double u = std::fabs(d) >= tol1 ? x + d : x + std::copysign(tol1, d);
        double fu = f(u);
        if (fu <= fx) {
            if (u >= x)
                a = x;
            else
                b = x;
            v = w, fv = fw;
            w = x, fw = fx;
            x = u, fx = fu;
        } else {
            if (u < x)
                a = u;
            else
                b = u;
            if (fu <= fw || w == x) {
                v = w, fv = fw;
                w = u, fw = fu;
            } else if (fu <= fv || v == x || v == w) {
                v = u, fv = fu;
            }
        }
    }
    throw ConvergenceError("minimiser did not converge");
}

} // namespace

HarmonicFit harmonic_approximation(const Potential1D& p)
{
    if (!p.energy)
        throw NumericError("potential has no evaluator");
    if (!(p.x_lo < p.x_hi) || !std::isfinite(p.x_lo) || !std::isfinite(p.x_hi))
        throw NumericError("search interval must be finite with x_lo < x_hi");
    const auto& U = p.energy;
    const double width = p.x_hi - p.x_lo;

    auto [x, ux] = brent_minimize(U, p.x_lo, p.x_hi, 1e-10 * width);

    auto interior = [&](double xe) {
        double margin = 1e-6 * width;
        return xe - p.x_lo > margin && p.x_hi - xe > margin;
    };
    if (!interior(x) || !(ux < U(p.x_lo)) || !(ux < U(p.x_hi)))
        throw ConvergenceError(fmt::format("no interior minimum found in [{:g}, {:g}]", p.x_lo, p.x_hi));

    auto first_step = [&](double xe) { return std::min(0.9 * std::min(xe - p.x_lo, p.x_hi - xe), 0.25 * width); };
    auto second_derivative = [&](double xe) {
        double u0 = U(xe);
        return ridders([&](double h) { return (U(xe + h) - 2.0 * u0 + U(xe - h)) / (h * h); }, first_step(xe));
    };
    auto first_derivative = [&](double xe) {
        return ridders([&](double h) { return (U(xe + h) - U(xe - h)) / (2.0 * h); }, first_step(xe));
    };

    // Newton polish on the extrapolated derivative. Brent alone resolves x_e
    // only to about sqrt(eps) of the energy scale.
    const double brent_x = x;
    for (int iter = 0; iter < 8; ++iter) {
        double k = second_derivative(x).value;
        if (!(k > 0.0))
            break;
        double step = -first_derivative(x).value / k;
        double next = x + step;
        if (!std::isfinite(next) || std::fabs(next - brent_x) > 1e-3 * width || !interior(next))
            break;
        x = next;
        if (std::fabs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::fabs(x)))
            break;
    }

    double k = second_derivative(x).value;
    double u0 = U(x);
    if (!(k > 0.0))
        throw ConvergenceError(fmt::format("second derivative at the minimum is not positive (K = {:.3g})", k));
    // A quadratic term that explains a negligible part of the rise across the
    // interval means the minimum is degenerate (e.g. U = x^4).
    double reach = std::max(x - p.x_lo, p.x_hi - x);
    double rise = std::max(U(p.x_lo), U(p.x_hi)) - u0;
    if (0.5 * k * reach * reach < 1e-6 * rise)
        throw ConvergenceError(fmt::format("degenerate minimum: quadratic term vanishes (K = {:.3g})", k));

    return HarmonicFit{Quantity(x, dim::length), Quantity(k, dim::spring), Quantity(u0, dim::energy)};
}

//---------------------------------------------------------------------------//

Quantity dipole_expectation_static(const OscillatorSpec& o, const Quantity& charge, const Quantity& field_e0)
{
    require_dimension(charge, dim::charge, "charge");
    require_dimension(field_e0, dim::electric_field, "field");
    return charge * charge / o.reduced_mass * field_e0 / (o.omega0 * o.omega0);
}

Quantity dipole_expectation_from_matrix_element(const OscillatorSpec& o, const Quantity& charge,
                                                const Quantity& field_e0)
{
    require_dimension(charge, dim::charge, "charge");
    require_dimension(field_e0, dim::electric_field, "field");
    Quantity x10 = matrix_element_x_analytic(o);
    return 2.0 * charge * charge * field_e0 * x10 * x10 / (o.hbar * o.omega0);
}

} // namespace vacuum
