#include "vacuum/permittivity.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "vacuum/error.hpp"
#include "vacuum/oscillator.hpp"

namespace vacuum {

namespace {

constexpr double route_tolerance = 1e-12;
constexpr double pi = std::numbers::pi;

} // namespace

std::string_view to_string(Method m)
{
    switch (m) {
    case Method::sum: return "sum";
    case Method::closed_form: return "closed-form";
    case Method::self_consistent: return "self-consistent";
    }
    return "?";
}

Method parse_method(std::string_view s)
{
    if (s == "sum")
        return Method::sum;
    if (s == "closed-form")
        return Method::closed_form;
    if (s == "self-consistent")
        return Method::self_consistent;
    throw InputError("unknown method '" + std::string(s) + "'");
}

Quantity coulomb_unit(const ConstantsSet& k, const Quantity& c)
{
    require_dimension(c, dim::speed, "speed of light");
    Quantity e = k.e();
    return e * e / (k.hbar() * c);
}

Quantity lepton_contribution_closed(const ConstantsSet& k, double alpha, const Quantity& c)
{
    return 512.0 * alpha * coulomb_unit(k, c);
}

SpeciesContribution lepton_contribution(const SpeciesSpec& s, const ConstantsSet& k, double alpha, const Quantity& c,
                                        Branch branch)
{
    if (!s.is_lepton())
        throw UnsupportedSpeciesError("'" + s.name + "' is not a lepton pair");
    if (!(alpha > 0.0))
        throw NumericError("alpha must be positive");

    // Permittivity consistent with (alpha, c), so both binding-energy forms agree.
    Quantity e = k.e();
    Quantity epsilon = e * e / (4.0 * pi * alpha * k.hbar() * c);

    Quantity density =
        interacting_density(s, k, Quantity::scalar(alpha), c, DensityMode::linearized);
    OscillatorSpec osc = resonant_frequency(s, k, epsilon, c);
    Quantity charge = species_charge(s, k);
    // The response is linear in the field, so any nonzero probe field works.
    Quantity probe(1.0, dim::electric_field);
    Quantity dipole = branch == Branch::paper
                          ? dipole_trajectory(osc, charge, probe, branch, std::array{0.0}).front().dipole
                          : dipole_time_average(osc, charge, probe, branch);
    Quantity composed = density * dipole / probe;

    Quantity closed = lepton_contribution_closed(k, alpha, c);
    double rel = relative_difference(composed.in(dim::permittivity, "lepton term"), closed.value());
    if (rel > route_tolerance)
        throw NumericError(fmt::format("lepton term routes disagree for '{}': relative difference {:.3g}", s.name, rel));

    return SpeciesContribution{s.name, composed, (composed / coulomb_unit(k, c)).in(dim::none)};
}

SpeciesContribution quarkonium_contribution(const SpeciesSpec& s, const ConstantsSet& k, const Quantity& c,
                                            WidthChoice width)
{
    if (s.is_lepton())
        throw UnsupportedSpeciesError("'" + s.name + "' is not a quarkonium state");
    // alpha only enters lepton decay rates; any positive value is inert here.
    Quantity density = interacting_density(s, k, Quantity::scalar(1.0), c, DensityMode::linearized, width);
    OscillatorSpec osc(reduced_mass(s), *s.e_min / k.hbar(), k.hbar());
    Quantity charge = species_charge(s, k);
    Quantity polarizability = charge * charge / osc.reduced_mass / (osc.omega0 * osc.omega0);
    Quantity term = density * polarizability;
    return SpeciesContribution{s.name, term, (term / coulomb_unit(k, c)).in(dim::none)};
}

Quantity epsilon0_closed_form(const ConstantsSet& k, int n_species)
{
    if (n_species < 1)
        throw NumericError("closed form needs at least one species");
    Quantity e2_over_hbar = k.e() * k.e() / k.hbar();
    return (n_species * 512.0 / (4.0 * pi)) * k.mu0() * e2_over_hbar * e2_over_hbar;
}

Quantity speed_of_light(const Quantity& epsilon0, const ConstantsSet& k)
{
    require_dimension(epsilon0, dim::permittivity, "epsilon0");
    if (!(epsilon0.value() > 0.0))
        throw NumericError("epsilon0 must be positive");
    return Quantity::scalar(1.0) / sqrt(k.mu0() * epsilon0);
}

double inverse_alpha(const Quantity& epsilon0, const Quantity& c, const ConstantsSet& k)
{
    require_dimension(epsilon0, dim::permittivity, "epsilon0");
    require_dimension(c, dim::speed, "speed of light");
    return (4.0 * pi * epsilon0 * k.hbar() * c / (k.e() * k.e())).in(dim::none, "1/alpha");
}

double alpha_at(const Quantity& epsilon, const ConstantsSet& k)
{
    return 1.0 / inverse_alpha(epsilon, speed_of_light(epsilon, k), k);
}

ReferenceDeltas compare_to_reference(const PredictionReport& r, const ConstantsSet& k)
{
    auto pct = [](double ref, double model) { return (ref - model) / model * 100.0; };
    return ReferenceDeltas{pct(k.ref_epsilon0().value(), r.epsilon0_model.value()),
                           pct(k.ref_c().value(), r.c_model.value()), pct(k.ref_inv_alpha(), r.inv_alpha_model)};
}

PredictionReport make_report(const Quantity& epsilon0, std::vector<SpeciesContribution> contributions, Method method,
                             const ConstantsSet& k)
{
    PredictionReport r;
    r.epsilon0_model = epsilon0;
    r.c_model = speed_of_light(epsilon0, k);
    r.inv_alpha_model = inverse_alpha(epsilon0, r.c_model, k);
    r.contributions = std::move(contributions);
    r.method = method;
    r.constants_source = k.origin();
    r.reference_deltas = compare_to_reference(r, k);
    return r;
}

std::vector<SpeciesContribution> contributions_at(const std::vector<SpeciesSpec>& species, const ConstantsSet& k,
                                                  const Quantity& epsilon, const SolverOptions& opt)
{
    Quantity c = speed_of_light(epsilon, k);
    double alpha = 1.0 / inverse_alpha(epsilon, c, k);
    std::vector<SpeciesContribution> out;
    out.reserve(species.size());
    for (const auto& s : species)
        out.push_back(s.is_lepton() ? lepton_contribution(s, k, alpha, c, opt.branch)
                                    : quarkonium_contribution(s, k, c, opt.width));
    return out;
}

namespace {

void require_lepton(const std::vector<SpeciesSpec>& species)
{
    for (const auto& s : species)
        if (s.is_lepton())
            return;
    throw InputError("at least one lepton-pair species is required");
}

Quantity total(const std::vector<SpeciesContribution>& terms)
{
    // Fixed species order keeps the sum reproducible.
    Quantity sum(0.0, dim::permittivity);
    for (const auto& t : terms)
        sum = sum + t.epsilon_term;
    return sum;
}

} // namespace

PredictionReport epsilon0_self_consistent(const std::vector<SpeciesSpec>& species, const ConstantsSet& k,
                                          const SolverOptions& opt)
{
    require_lepton(species);
    if (!(opt.tolerance >= 1e-15 && opt.tolerance <= 1e-6))
        throw NumericError("fixed-point tolerance must lie in [1e-15, 1e-6]");
    if (opt.max_iter < 1)
        throw NumericError("max_iter must be positive");

    Quantity eps = k.ref_epsilon0();
    double damping = 1.0;
    double last_delta = 0.0;
    for (int iter = 1; iter <= opt.max_iter; ++iter) {
        auto terms = contributions_at(species, k, eps, opt);
        Quantity mapped = total(terms);
        double delta = mapped.value() - eps.value();
        if (iter > 1 && delta * last_delta < 0.0 && std::fabs(delta) >= std::fabs(last_delta))
            damping *= 0.5;
        last_delta = delta;
        Quantity next = eps + damping * (mapped - eps);
        if (std::fabs(next.value() - eps.value()) <= opt.tolerance * std::fabs(next.value())) {
            // Report the contributions evaluated at the converged point.
            PredictionReport r = make_report(next, contributions_at(species, k, next, opt), Method::self_consistent, k);
            r.iterations = iter;
            return r;
        }
        eps = next;
    }
    throw ConvergenceError("fixed-point iteration did not converge in " + std::to_string(opt.max_iter)
                           + " iterations");
}

PredictionReport epsilon0_sum(const std::vector<SpeciesSpec>& species, const ConstantsSet& k, double alpha,
                              const Quantity& c, const SolverOptions& opt)
{
    require_lepton(species);
    std::vector<SpeciesContribution> terms;
    for (const auto& s : species)
        terms.push_back(s.is_lepton() ? lepton_contribution(s, k, alpha, c, opt.branch)
                                      : quarkonium_contribution(s, k, c, opt.width));
    Quantity eps = total(terms);
    return make_report(eps, std::move(terms), Method::sum, k);
}

PredictionReport closed_form_report(const ConstantsSet& k, int n_species)
{
    Quantity eps = epsilon0_closed_form(k, n_species);
    Quantity c = speed_of_light(eps, k);
    double alpha = 1.0 / inverse_alpha(eps, c, k);
    std::vector<SpeciesContribution> terms;
    Quantity unit = coulomb_unit(k, c);
    static constexpr const char* lepton_names[] = {"e", "mu", "tau"};
    for (int i = 0; i < n_species; ++i) {
        std::string name = i < 3 ? lepton_names[i] : "lepton-" + std::to_string(i + 1);
        Quantity term = lepton_contribution_closed(k, alpha, c);
        terms.push_back({name, term, (term / unit).in(dim::none)});
    }
    return make_report(eps, std::move(terms), Method::closed_form, k);
}

} // namespace vacuum
