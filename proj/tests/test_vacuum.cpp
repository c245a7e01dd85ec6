#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "vacuum/constants.hpp"
#include "vacuum/error.hpp"
#include "vacuum/historical.hpp"
#include "vacuum/permittivity.hpp"

using namespace vacuum;
using oracle::rel;

namespace {

constexpr double pi = std::numbers::pi;
const ConstantsSet& K() { return load_default_constants(); }

/// e^2/(hbar c) from raw numbers.
double coulomb(double c) { return oracle::e * oracle::e / (oracle::hbar * c); }

} // namespace

TEST_CASE("closed form against 50-digit evaluation")
{
    Quantity eps = epsilon0_closed_form(K(), 3);
    CHECK(eps.dimension() == dim::permittivity);
    double ref = oracle::epsilon0_model_big().convert_to<double>();
    CHECK(rel(eps.value(), ref) < 1e-14);
    CHECK(rel(eps.value(), 9.10e-12) < 0.003);
}

TEST_CASE("closed form is linear in the species count")
{
    Quantity three = epsilon0_closed_form(K(), 3);
    for (int n = 1; n <= 6; ++n)
        CHECK(rel(epsilon0_closed_form(K(), n).value(), three.value() * n / 3.0) < 1e-15);
    CHECK_THROWS_AS(epsilon0_closed_form(K(), 0), NumericError);
}

TEST_CASE("speed of light and inverse alpha")
{
    Quantity eps = epsilon0_closed_form(K(), 3);
    Quantity c = speed_of_light(eps, K());
    CHECK(c.dimension() == dim::speed);
    // sqrt(pi/6) hbar / (8 e^2 mu0)
    double identity = std::sqrt(pi / 6) * oracle::hbar / (8 * oracle::e * oracle::e * oracle::mu0);
    CHECK(rel(c.value(), identity) < 1e-12);
    CHECK(rel(c.value(), 2.96e8) < 0.003);

    double ia = inverse_alpha(eps, c, K());
    double ref = oracle::inv_alpha_model_big().convert_to<double>();
    CHECK(rel(ia, ref) < 1e-12);
    CHECK(std::fabs(ia - 138.93) <= 0.01);

    Quantity c_ref = speed_of_light(K().ref_epsilon0(), K());
    CHECK(rel(c_ref.value(), oracle::c_ref) < 1e-9);
    CHECK(std::fabs(inverse_alpha(K().ref_epsilon0(), c_ref, K()) - 137.036) <= 0.001);

    CHECK_THROWS_AS(speed_of_light(Quantity(1.0, dim::speed), K()), DimensionError);
    CHECK_THROWS_AS(speed_of_light(Quantity(-1.0, dim::permittivity), K()), NumericError);
}

TEST_CASE("n = 1 gives 1/alpha = 138.93/sqrt(3)")
{
    Quantity eps = epsilon0_closed_form(K(), 1);
    double ia = inverse_alpha(eps, speed_of_light(eps, K()), K());
    CHECK(rel(ia, oracle::inv_alpha_model_big().convert_to<double>() / std::sqrt(3.0)) < 1e-12);
    CHECK(ia == doctest::Approx(80.21).epsilon(1e-4));
}

TEST_CASE("lepton contribution: value, routes and mass independence")
{
    const double alpha = K().ref_alpha();
    const Quantity c = K().ref_c();
    double expected = 512 * alpha * coulomb(oracle::c_ref);
    for (Branch b : {Branch::paper, Branch::literal})
        for (const auto& s : default_species(K(), false)) {
            CAPTURE(s.name);
            auto t = lepton_contribution(s, K(), alpha, c, b);
            CHECK(t.species_name == s.name);
            CHECK(t.epsilon_term.dimension() == dim::permittivity);
            CHECK(rel(t.epsilon_term.value(), expected) < 1e-12);
            CHECK(rel(t.in_alpha_units, 512 * alpha) < 1e-12);
            CHECK(rel(t.epsilon_term.value(), t.in_alpha_units * coulomb(oracle::c_ref)) < 1e-12);
        }
    CHECK(rel(expected, 3.03e-12) < 0.01);
    CHECK(rel(512 * alpha, 3.736) < 1e-3);
    CHECK(rel(lepton_contribution_closed(K(), alpha, c).value(), expected) < 1e-14);
    CHECK_THROWS_AS(lepton_contribution(resolve_species(K(), "eta_c"), K(), alpha, c), UnsupportedSpeciesError);
}

TEST_CASE("mass cancellation over random scalings")
{
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> decade(-2.0, 6.0);
    const double alpha = K().ref_alpha();
    const Quantity c = K().ref_c();
    SpeciesSpec e = resolve_species(K(), "e");
    double base = lepton_contribution(e, K(), alpha, c).epsilon_term.value();
    for (int i = 0; i < 200; ++i) {
        double f = std::pow(10.0, decade(rng));
        CAPTURE(f);
        CHECK(rel(lepton_contribution(with_scaled_mass(e, f), K(), alpha, c).epsilon_term.value(), base) < 1e-12);
    }
}

TEST_CASE("quarkonium upper bounds")
{
    const Quantity c = K().ref_c();
    auto etac = quarkonium_contribution(resolve_species(K(), "eta_c"), K(), c);
    auto etab = quarkonium_contribution(resolve_species(K(), "eta_b"), K(), c, WidthChoice::max);
    auto etab_min = quarkonium_contribution(resolve_species(K(), "eta_b"), K(), c, WidthChoice::min);

    // 8c (M/hbar)^2 Gamma (q^2/(m/2)) / omega^2 from raw numbers.
    auto direct = [&](double m_gev, double M_gev, double frac, double gamma) {
        double cc = oracle::c_ref * oracle::c_ref;
        double m = m_gev * oracle::gev / cc, M = M_gev * oracle::gev / cc;
        double w = (M_gev - 2 * m_gev) * oracle::gev / oracle::hbar;
        double q = frac * oracle::e;
        return 8 * oracle::c_ref * std::pow(M / oracle::hbar, 2) * gamma * (q * q / (m / 2)) / (w * w);
    };
    CHECK(rel(etac.epsilon_term.value(), direct(1.27, 2.98, 2.0 / 3, 7.69e18)) < 1e-12);
    CHECK(rel(etab.epsilon_term.value(), direct(4.3, 9.40, 1.0 / 3, 450 * oracle::e / oracle::hbar)) < 1e-12);
    CHECK(rel(etab.in_alpha_units * coulomb(oracle::c_ref), etab.epsilon_term.value()) < 1e-12);

    CHECK(etac.in_alpha_units / 1.3e-3 < 1.5);
    CHECK(1.3e-3 / etac.in_alpha_units < 1.5);
    CHECK(etab.in_alpha_units / 2.6e-5 < 1.5);
    CHECK(2.6e-5 / etab.in_alpha_units < 1.5);
    CHECK(etab_min.epsilon_term.value() < etab.epsilon_term.value());

    // About 1e-4 of the three-lepton total.
    double leptons = 3 * 512 * K().ref_alpha() * coulomb(oracle::c_ref);
    double ratio = etac.epsilon_term.value() / leptons;
    CHECK(ratio > 0.5e-4);
    CHECK(ratio < 5e-4);

    CHECK_THROWS_AS(quarkonium_contribution(resolve_species(K(), "e"), K(), c), UnsupportedSpeciesError);
}

TEST_CASE("self-consistent solution, lepton-only")
{
    PredictionReport r = epsilon0_self_consistent(default_species(K(), false), K());
    CHECK(r.method == Method::self_consistent);
    CHECK(rel(r.epsilon0_model.value(), epsilon0_closed_form(K(), 3).value()) < 1e-12);
    CHECK(r.iterations <= 2);
    CHECK(r.contributions.size() == 3);
    CHECK(r.constants_source == "built-in");
}

TEST_CASE("self-consistent solution equals the general-n closed form")
{
    auto leptons = default_species(K(), false);
    for (int n = 1; n <= 4; ++n) {
        std::vector<SpeciesSpec> list;
        for (int i = 0; i < n; ++i)
            list.push_back(leptons[i % 3]);
        PredictionReport r = epsilon0_self_consistent(list, K());
        CHECK(rel(r.epsilon0_model.value(), epsilon0_closed_form(K(), n).value()) < 1e-12);
    }
}

TEST_CASE("quark terms shift the fixed point")
{
    PredictionReport base = epsilon0_self_consistent(default_species(K(), false), K());
    PredictionReport quarks = epsilon0_self_consistent(default_species(K(), true), K());
    double shift = quarks.epsilon0_model.value() / base.epsilon0_model.value() - 1.0;
    CHECK(shift == doctest::Approx(1.2e-4).epsilon(0.05));
    CHECK(quarks.iterations <= 5);

    // Fixed-point residual.
    auto terms = contributions_at(default_species(K(), true), K(), quarks.epsilon0_model);
    double sum = 0.0;
    for (const auto& t : terms)
        sum += t.epsilon_term.value();
    CHECK(rel(sum, quarks.epsilon0_model.value()) < 1e-12);
}

TEST_CASE("adding any quarkonium raises epsilon0, lowers c and lowers alpha")
{
    // 1/alpha grows as sqrt(epsilon0), so alpha falls when epsilon0 rises.
    auto leptons = default_species(K(), false);
    PredictionReport base = epsilon0_self_consistent(leptons, K());
    for (const char* q : {"eta_c", "eta_b"})
        for (WidthChoice w : {WidthChoice::min, WidthChoice::max}) {
            auto list = leptons;
            list.push_back(resolve_species(K(), q));
            SolverOptions so;
            so.width = w;
            PredictionReport r = epsilon0_self_consistent(list, K(), so);
            CAPTURE(q);
            CHECK(r.epsilon0_model.value() > base.epsilon0_model.value());
            CHECK(r.c_model.value() < base.c_model.value());
            CHECK(r.inv_alpha_model > base.inv_alpha_model);
        }
}

TEST_CASE("solver preconditions")
{
    CHECK_THROWS_AS(epsilon0_self_consistent({}, K()), InputError);
    CHECK_THROWS_AS(epsilon0_self_consistent({resolve_species(K(), "eta_c")}, K()), InputError);
    SolverOptions so;
    so.tolerance = 1e-20;
    CHECK_THROWS_AS(epsilon0_self_consistent(default_species(K(), false), K(), so), NumericError);
    so.tolerance = 1e-12;
    so.max_iter = 1;
    CHECK_THROWS_AS(epsilon0_self_consistent(default_species(K(), true), K(), so), ConvergenceError);
}

TEST_CASE("reference deltas")
{
    PredictionReport r = closed_form_report(K(), 3);
    CHECK(std::fabs(r.reference_deltas.epsilon0 - (-2.8)) <= 0.15);
    CHECK(std::fabs(r.reference_deltas.c - 1.3) <= 0.15);
    CHECK(std::fabs(r.reference_deltas.inv_alpha - (-1.4)) <= 0.15);
    double eps = r.epsilon0_model.value();
    CHECK(rel(r.reference_deltas.epsilon0, (oracle::eps_ref - eps) / eps * 100) < 1e-12);
}

TEST_CASE("report invariants hold for every route")
{
    auto check = [](const PredictionReport& r) {
        double c = 1.0 / std::sqrt(oracle::mu0 * r.epsilon0_model.value());
        CHECK(rel(c, r.c_model.value()) < 1e-12);
        double ia = 4 * pi * r.epsilon0_model.value() * oracle::hbar * r.c_model.value() / (oracle::e * oracle::e);
        CHECK(rel(ia, r.inv_alpha_model) < 1e-12);
        for (const auto& t : r.contributions)
            CHECK(t.epsilon_term.value() > 0.0);
    };
    check(closed_form_report(K(), 3));
    check(epsilon0_self_consistent(default_species(K(), true), K()));
    check(epsilon0_sum(default_species(K(), true), K(), K().ref_alpha(), K().ref_c()));
}

TEST_CASE("method names")
{
    CHECK(to_string(Method::closed_form) == "closed-form");
    CHECK(parse_method("self-consistent") == Method::self_consistent);
    CHECK_THROWS_AS(parse_method("guess"), InputError);
}

TEST_CASE("historical formulas")
{
    CHECK(rel(wyler_inverse_alpha(), oracle::wyler_big().convert_to<double>()) < 1e-14);
    CHECK(std::fabs(wyler_inverse_alpha() - 137.03608) <= 1e-5);
    CHECK(bethe_t0(1 / 137.036) == doctest::Approx(-273.072).epsilon(1e-6));
    HistoricalValues h = historical_values(K());
    CHECK(h.allen_ten_alpha_squared == doctest::Approx(5.325e-4).epsilon(1e-3));
    CHECK(h.allen_mass_ratio == doctest::Approx(oracle::m_e / oracle::m_u).epsilon(1e-14));
    CHECK_THROWS_AS(bethe_t0(0.0), NumericError);
}
