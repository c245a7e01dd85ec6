#include "vacuum/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "vacuum/dormand_prince.hpp"
#include "vacuum/error.hpp"
#include "vacuum/oscillator.hpp"

namespace vacuum {

using namespace std::complex_literals;

std::string_view to_string(Branch b) { return b == Branch::paper ? "paper" : "literal"; }

Branch parse_branch(std::string_view s)
{
    if (s == "paper")
        return Branch::paper;
    if (s == "literal")
        return Branch::literal;
    throw InputError("branch must be 'paper' or 'literal', got '" + std::string(s) + "'");
}

CouplingLambda::CouplingLambda(double value) : value_(value)
{
    if (!std::isfinite(value))
        throw NumericError("coupling lambda must be finite");
}

bool CouplingLambda::first_order_valid() const { return std::fabs(value_) < first_order_lambda_limit; }

CouplingLambda coupling_lambda(const OscillatorSpec& o, const Quantity& charge, const Quantity& field_e0)
{
    require_dimension(charge, dim::charge, "charge");
    require_dimension(field_e0, dim::electric_field, "field");
    Quantity lam = charge * field_e0 * matrix_element_x_analytic(o) / (o.hbar * o.omega0);
    return CouplingLambda(lam.in(dim::none, "lambda"));
}

AmplitudePair amplitudes_analytic(double tau, CouplingLambda lam, Branch branch)
{
    if (!std::isfinite(tau))
        throw NumericError("tau must be finite");
    std::complex<double> phase = std::exp(1i * tau);
    AmplitudePair out;
    out.tau = tau;
    out.a1 = lam.value() * (branch == Branch::paper ? phase : phase - 1.0);
    return out;
}

AmplitudePair amplitudes_ode(double tau_end, CouplingLambda lam, double tolerance)
{
    if (!(tolerance >= min_ode_tolerance && tolerance <= max_ode_tolerance))
        throw NumericError("ODE tolerance must lie in [1e-12, 1e-6]");
    if (!std::isfinite(tau_end) || tau_end < 0.0)
        throw NumericError("tau_end must be finite and non-negative");

    using State = Eigen::Vector2cd;
    const double l = lam.value();
    auto rhs = [l](double tau, const State& y) {
        std::complex<double> phase = std::exp(1i * tau);
        State dy;
        dy[0] = 1i * l * y[1] * std::conj(phase);
        dy[1] = 1i * l * y[0] * phase;
        return dy;
    };
    Dopri5Options opt;
    opt.rtol = tolerance;
    opt.atol = tolerance;
    State y = integrate_dopri5(rhs, State(1.0, 0.0), 0.0, tau_end, opt);
    AmplitudePair out;
    out.a0 = y[0];
    out.a1 = y[1];
    out.tau = tau_end;
    return out;
}

double scaling_exponent(std::span<const double> lambda_grid, double tau, double tolerance)
{
    if (lambda_grid.size() < 4)
        throw NumericError("scaling fit needs at least four lambda values");
    for (double l : lambda_grid)
        if (!(l >= 1e-4 && l <= 1e-2))
            throw NumericError("scaling fit lambda values must lie in [1e-4, 1e-2]");
    auto [lo, hi] = std::minmax_element(lambda_grid.begin(), lambda_grid.end());
    if (std::log(*hi / *lo) < 1e-6)
        throw NumericError("degenerate lambda grid: all values coincide");

    const auto n = static_cast<Eigen::Index>(lambda_grid.size());
    Eigen::MatrixX2d design(n, 2);
    Eigen::VectorXd response(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double l = lambda_grid[static_cast<std::size_t>(i)];
        double dev = std::abs(amplitudes_ode(tau, CouplingLambda(l), tolerance).a0 - 1.0);
        if (!(dev > 0.0))
            throw NumericError("a0 correction vanished; choose tau > 0");
        design(i, 0) = std::log(l);
        design(i, 1) = 1.0;
        response[i] = std::log(dev);
    }
    Eigen::Vector2d fit = design.colPivHouseholderQr().solve(response);
    return fit[0];
}

std::vector<DipoleSample> dipole_trajectory(const OscillatorSpec& o, const Quantity& charge, const Quantity& field_e0,
                                            Branch branch, std::span<const double> taus)
{
    CouplingLambda lam = coupling_lambda(o, charge, field_e0);
    Quantity prefactor = 2.0 * charge * matrix_element_x_analytic(o);
    std::vector<DipoleSample> out;
    out.reserve(taus.size());
    for (double tau : taus) {
        AmplitudePair a = amplitudes_analytic(tau, lam, branch);
        double response = std::real(a.a1 * std::exp(-1i * tau));
        out.push_back({tau, response * prefactor});
    }
    return out;
}

Quantity dipole_time_average(const OscillatorSpec& o, const Quantity& charge, const Quantity& field_e0,
                             Branch branch, int samples)
{
    if (samples < 3)
        throw NumericError("time average needs at least three samples");
    std::vector<double> taus(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k)
        taus[static_cast<std::size_t>(k)] = 2.0 * std::numbers::pi * k / samples;
    auto traj = dipole_trajectory(o, charge, field_e0, branch, taus);
    double sum = 0.0;
    for (const auto& s : traj)
        sum += s.dipole.value();
    return Quantity(sum / samples, dim::dipole_moment);
}

} // namespace vacuum
