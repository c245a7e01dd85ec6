#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Core>

#include "vacuum/error.hpp"

namespace vacuum {

struct Dopri5Options
{
    double rtol = 1e-10;
    double atol = 1e-10;
    long max_steps = 2'000'000;
};

struct Dopri5Stats
{
    long accepted = 0;
    long rejected = 0;
};

/// Integrates y' = f(t, y) from t0 to t1 with the Dormand-Prince 5(4)
/// embedded pair and a standard step-size controller. `State` is any
/// Eigen column vector (real or complex). Throws ConvergenceError on step
/// collapse or when max_steps is exhausted.
template <typename State, typename Rhs>
State integrate_dopri5(Rhs&& f, State y, double t0, double t1, const Dopri5Options& opt = {},
                       Dopri5Stats* stats = nullptr)
{
    // clang-format off
    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                     a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                     e6 = 22.0 / 525, e7 = -1.0 / 40;
    // clang-format on

    if (t1 == t0)
        return y;
    const double span = t1 - t0;
    const double direction = span > 0 ? 1.0 : -1.0;
    double h = direction * std::min(std::fabs(span), 0.01 * std::fabs(span) + std::pow(opt.rtol, 0.2));
    double t = t0;

    State k1 = f(t, y);
    Dopri5Stats local;
    while (direction * (t1 - t) > 0) {
        if (local.accepted + local.rejected >= opt.max_steps)
            throw ConvergenceError("ODE integration exceeded the step budget");
        if (direction * (t + h - t1) > 0)
            h = t1 - t;

        State k2 = f(t + c2 * h, State(y + h * a21 * k1));
        State k3 = f(t + c3 * h, State(y + h * (a31 * k1 + a32 * k2)));
        State k4 = f(t + c4 * h, State(y + h * (a41 * k1 + a42 * k2 + a43 * k3)));
        State k5 = f(t + c5 * h, State(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4)));
        State k6 = f(t + h, State(y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5)));
        State y_new = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        State k7 = f(t + h, y_new);
        State err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        double norm = 0.0;
        for (Eigen::Index i = 0; i < y.size(); ++i) {
            double sc = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(y_new[i]));
            double r = std::abs(err[i]) / sc;
            norm += r * r;
        }
        norm = std::sqrt(norm / static_cast<double>(y.size()));
        if (!std::isfinite(norm))
            throw ConvergenceError("ODE integration produced a non-finite error estimate");

        double factor = norm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(norm, -0.2), 0.2, 5.0);
        if (norm <= 1.0) {
            t += h;
            y = y_new;
            k1 = k7;
            ++local.accepted;
        } else {
            ++local.rejected;
            factor = std::min(factor, 1.0);
        }
        h *= factor;
        if (std::fabs(h) < 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::fabs(t)))
            throw ConvergenceError("ODE step size collapsed at t = " + std::to_string(t));
    }
    if (stats != nullptr)
        *stats = local;
    return y;
}

} // namespace vacuum
