// Acceptance gate: one PASS/FAIL line per criterion.

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "oracles.hpp"
#include "vacuum/constants.hpp"
#include "vacuum/error.hpp"
#include "vacuum/historical.hpp"
#include "vacuum/oscillator.hpp"
#include "vacuum/permittivity.hpp"
#include "vacuum/perturbation.hpp"
#include "vacuum/species.hpp"

using namespace vacuum;
using oracle::rel;

namespace {

constexpr double pi = std::numbers::pi;
int failures = 0;

/// Runs one criterion; `body` returns (passed, detail).
void criterion(int id, const char* title, const std::function<std::pair<bool, std::string>()>& body)
{
    bool ok = false;
    std::string detail;
    try {
        std::tie(ok, detail) = body();
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    if (!ok)
        ++failures;
    std::printf("%s %2d %s: %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
}

std::string describe(const char* f, double a, double b = 0, double c = 0, double d = 0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

} // namespace

int main()
{
    const ConstantsSet& k = load_default_constants();
    const PredictionReport closed = closed_form_report(k, 3);

    criterion(1, "epsilon0 closed form", [&] {
        double v = closed.epsilon0_model.value();
        double r = rel(v, 9.10e-12);
        return std::pair{r <= 3e-3, describe("%.6e F/m vs 9.10e-12, rel %.2e <= 3e-3", v, r)};
    });

    criterion(2, "speed of light", [&] {
        double v = closed.c_model.value();
        double r = rel(v, 2.96e8);
        return std::pair{r <= 3e-3, describe("%.6e m/s vs 2.96e8, rel %.2e <= 3e-3", v, r)};
    });

    criterion(3, "inverse alpha 8^2 sqrt(3 pi/2)", [&] {
        double v = closed.inv_alpha_model;
        double big = oracle::inv_alpha_model_big().convert_to<double>();
        double r = rel(v, big);
        bool ok = std::fabs(v - 138.93) <= 0.01 && r <= 1e-10;
        return std::pair{ok, describe("%.10f, |v-138.93| = %.2e <= 0.01, vs 50-digit %.2e <= 1e-10", v,
                                 std::fabs(v - 138.93), r)};
    });

    criterion(4, "number densities", [&] {
        double ne = number_density(resolve_species(k, "e"), k, k.ref_c()).value();
        double nt = number_density(resolve_species(k, "tau"), k, k.ref_c()).value();
        double re = rel(ne, 1.12e39), rt = rel(nt, 4.70e49);
        return std::pair{re <= 0.01 && rt <= 0.01,
                         describe("e %.4e (rel %.2e), tau %.4e (rel %.2e), each <= 1e-2", ne, re, nt, rt)};
    });

    criterion(5, "reference deltas", [&] {
        const auto& d = closed.reference_deltas;
        double de = std::fabs(d.epsilon0 + 2.8), dc = std::fabs(d.c - 1.3), da = std::fabs(d.inv_alpha + 1.4);
        bool ok = de <= 0.15 && dc <= 0.15 && da <= 0.15;
        return std::pair{ok, describe("eps %+.3f%%, c %+.3f%%, 1/alpha %+.3f%% (each within 0.15 pp)", d.epsilon0, d.c,
                                 d.inv_alpha)};
    });

    criterion(6, "quarkonium bounds", [&] {
        double c_ = quarkonium_contribution(resolve_species(k, "eta_c"), k, k.ref_c()).in_alpha_units;
        double b_ = quarkonium_contribution(resolve_species(k, "eta_b"), k, k.ref_c(), WidthChoice::max).in_alpha_units;
        double fc = std::max(c_ / 1.3e-3, 1.3e-3 / c_), fb = std::max(b_ / 2.6e-5, 2.6e-5 / b_);
        return std::pair{fc <= 1.5 && fb <= 1.5,
                         describe("eta_c %.3e (factor %.3f), eta_b %.3e (factor %.3f), each <= 1.5", c_, fc, b_, fb)};
    });

    criterion(7, "quadrature oracle", [&] {
        std::mt19937_64 rng(2024);
        std::uniform_real_distribution<double> decade(-6.0, 6.0);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            OscillatorSpec o(Quantity(4.55e-31 * std::pow(10.0, decade(rng)), dim::mass),
                             Quantity(1e16 * std::pow(10.0, decade(rng)), dim::rate), k.hbar());
            worst = std::max(worst, rel(matrix_element_x_quadrature(1, 0, o).value(), matrix_element_x_analytic(o).value()));
        }
        double parity = 0.0;
        for (int a = 0; a <= max_level; ++a)
            for (int b = 0; b <= max_level; ++b)
                if ((a + b) % 2 == 0)
                    parity = std::max(parity, std::fabs(hermite_moment(a, b, 1).value));
        return std::pair{worst <= 1e-10 && parity < 1e-10,
                         describe("20 random specs max rel %.2e <= 1e-10; parity-forbidden max %.2e < 1e-10", worst, parity)};
    });

    criterion(8, "ODE oracle", [&] {
        double worst = 0.0, leak = 0.0;
        for (double l : {1e-4, 1e-3})
            for (double t : {pi, 2 * pi, 4 * pi}) {
                AmplitudePair num = amplitudes_ode(t, CouplingLambda(l));
                AmplitudePair lit = amplitudes_analytic(t, CouplingLambda(l), Branch::literal);
                double err = std::max(std::abs(num.a0 - lit.a0), std::abs(num.a1 - lit.a1));
                worst = std::max(worst, err / (50 * l * l));
                leak = std::max(leak, std::fabs(amplitudes_ode(t, CouplingLambda(l), 1e-12).norm_squared() - 1.0));
            }
        return std::pair{worst <= 1.0 && leak <= 1e-9,
                         describe("max error / 50 lambda^2 = %.3f <= 1; unitarity leak %.2e <= 1e-9", worst, leak)};
    });

    criterion(9, "a0 scaling exponent", [&] {
        std::array<double, 4> grid{1e-4, 3e-4, 1e-3, 3e-3};
        double p = scaling_exponent(grid, pi);
        return std::pair{std::fabs(p - 2.0) <= 0.05, describe("%.6f, |p - 2| <= 0.05", p)};
    });

    criterion(10, "mass cancellation and fixed point", [&] {
        auto leptons = default_species(k, false);
        double alpha = k.ref_alpha();
        double te = lepton_contribution(leptons[0], k, alpha, k.ref_c()).epsilon_term.value();
        double spread = 0.0;
        for (const auto& s : leptons)
            spread = std::max(spread, rel(lepton_contribution(s, k, alpha, k.ref_c()).epsilon_term.value(), te));
        PredictionReport fp = epsilon0_self_consistent(leptons, k);
        double r = rel(fp.epsilon0_model.value(), closed.epsilon0_model.value());
        bool ok = spread <= 1e-12 && r <= 1e-12 && fp.iterations <= 5;
        return std::pair{ok, describe("e/mu/tau spread %.2e <= 1e-12; fixed point vs closed %.2e <= 1e-12; %g iterations <= 5",
                                 spread, r, fp.iterations)};
    });

    criterion(11, "time-averaged literal dipole", [&] {
        OscillatorSpec o = resonant_frequency(resolve_species(k, "e"), k, k.ref_epsilon0(), k.ref_c());
        Quantity field(1.0, dim::electric_field);
        double lit = dipole_time_average(o, k.e(), field, Branch::literal).value();
        double pap = dipole_trajectory(o, k.e(), field, Branch::paper, std::array{0.0}).front().dipole.value();
        double r = rel(lit, pap);
        return std::pair{r <= 1e-10, describe("rel %.2e <= 1e-10", r)};
    });

    criterion(12, "dimension audit", [&] {
        bool dims = closed.epsilon0_model.dimension() == dim::permittivity && closed.c_model.dimension() == dim::speed;
        Quantity inv_alpha_q = 4 * pi * closed.epsilon0_model * k.hbar() * closed.c_model / (k.e() * k.e());
        dims = dims && inv_alpha_q.dimension() == dim::none;

        std::mt19937_64 rng(12);
        std::uniform_int_distribution<int> ex(-3, 3), slot(0, 6);
        int cases = 0, rejected = 0;
        while (cases < 1000) {
            Dimension::Exponents a{};
            for (auto& r : a)
                r = Rational(ex(rng));
            Dimension::Exponents b = a;
            b[slot(rng)] = b[slot(rng)] + Rational(1 + ex(rng) * ex(rng), 2);
            if (Dimension(a) == Dimension(b))
                continue;
            ++cases;
            try {
                (void)q_add(Quantity(1.0, Dimension(a)), Quantity(1.0, Dimension(b)));
            } catch (const DimensionError&) {
                ++rejected;
            }
        }
        return std::pair{dims && rejected == cases,
                         std::string("emitted F/m, m/s, 1: ") + (dims ? "ok" : "wrong")
                             + describe("; %g of %g mismatched additions rejected", rejected, cases)};
    });

    criterion(13, "Wyler value", [&] {
        double w = wyler_inverse_alpha();
        return std::pair{std::fabs(w - 137.03608) <= 1e-5, describe("%.8f, |w - 137.03608| <= 1e-5", w)};
    });

    std::printf("%s: %d of 13 criteria failed\n", failures ? "ACCEPTANCE FAILED" : "acceptance passed", failures);
    return failures ? 1 : 0;
}
