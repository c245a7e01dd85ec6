#include "vacuum/species.hpp"

#include <cmath>
#include <numbers>

#include "vacuum/error.hpp"

namespace vacuum {

std::string_view to_string(SpeciesKind k) { return k == SpeciesKind::lepton_pair ? "lepton-pair" : "quarkonium"; }

std::string_view to_string(WidthChoice w) { return w == WidthChoice::min ? "min" : "max"; }

WidthChoice parse_width_choice(std::string_view s)
{
    if (s == "min")
        return WidthChoice::min;
    if (s == "max")
        return WidthChoice::max;
    throw InputError("width choice must be 'min' or 'max', got '" + std::string(s) + "'");
}

Quantity SpeciesSpec::two_photon_width(WidthChoice w) const
{
    const auto& width = w == WidthChoice::min ? two_photon_width_min : two_photon_width_max;
    if (!width)
        throw InputError("species '" + name + "' has no two-photon width");
    return *width;
}

OscillatorSpec::OscillatorSpec(Quantity mu, Quantity w0, Quantity h)
    : reduced_mass(std::move(mu)), omega0(std::move(w0)), hbar(std::move(h))
{
    require_dimension(reduced_mass, dim::mass, "reduced mass");
    require_dimension(omega0, dim::rate, "omega0");
    require_dimension(hbar, dim::action, "hbar");
    if (!(reduced_mass.value() > 0.0) || !(omega0.value() > 0.0) || !(hbar.value() > 0.0))
        throw NumericError("oscillator parameters must be strictly positive");
}

void validate(const SpeciesSpec& s)
{
    auto fail = [&](const std::string& why) { throw InputError("species '" + s.name + "': " + why); };
    if (s.constituent_mass.dimension() != dim::mass || !(s.constituent_mass.value() > 0.0))
        fail("constituent mass must be a positive mass");
    if (s.charge_fraction != Rational(1) && s.charge_fraction != Rational(2, 3) && s.charge_fraction != Rational(1, 3))
        fail("charge fraction must be 1, 2/3 or 1/3");
    bool quark = s.kind == SpeciesKind::quarkonium;
    bool fields = s.bound_state_mass && s.two_photon_width_min && s.two_photon_width_max && s.e_min;
    bool any = s.bound_state_mass || s.two_photon_width_min || s.two_photon_width_max || s.e_min;
    if (quark && !fields)
        fail("quarkonium needs bound-state mass, two-photon widths and E_min");
    if (!quark && any)
        fail("lepton pairs carry no quarkonium fields");
    if (quark) {
        if (s.bound_state_mass->dimension() != dim::mass || !(s.bound_state_mass->value() > 0.0))
            fail("bound-state mass must be a positive mass");
        for (const auto* w : {&*s.two_photon_width_min, &*s.two_photon_width_max})
            if (w->dimension() != dim::rate || !(w->value() > 0.0))
                fail("two-photon width must be a positive rate");
        if (s.e_min->dimension() != dim::energy || !(s.e_min->value() > 0.0))
            fail("E_min must be a positive energy");
    }
}

namespace {

Quantity as_mass(const ConstantsSet& k, const std::string& key)
{
    Quantity q = k.get(key);
    if (q.dimension() == dim::mass)
        return q;
    if (q.dimension() == dim::energy) {
        Quantity c = k.ref_c();
        return q / (c * c);
    }
    throw InputError("constant '" + key + "' is not a mass");
}

Quantity as_rate(const ConstantsSet& k, const std::string& key)
{
    Quantity q = k.get(key);
    if (q.dimension() == dim::rate)
        return q;
    if (q.dimension() == dim::energy)
        return q / k.hbar();
    throw InputError("constant '" + key + "' is not a width (rate or energy)");
}

void require_speed(const Quantity& c) { require_dimension(c, dim::speed, "speed of light"); }

} // namespace

SpeciesSpec resolve_species(const ConstantsSet& k, std::string_view name)
{
    if (name == "eta_t")
        throw UnsupportedSpeciesError("eta_t: no experimental information on the eta_t(1S) bound state exists, "
                                      "so its mass and two-photon width are unavailable");
    if (name == "pi0" || name == "eta" || name == "eta_prime")
        throw UnsupportedSpeciesError(std::string(name)
                                      + ": light-quark bound states need a fully relativistic treatment");

    const SpeciesRecord* rec = nullptr;
    for (const auto& r : k.species())
        if (r.name == name)
            rec = &r;
    if (rec == nullptr)
        throw InputError("unknown species '" + std::string(name) + "'");

    SpeciesSpec s;
    s.name = rec->name;
    s.kind = rec->kind == "quarkonium" ? SpeciesKind::quarkonium : SpeciesKind::lepton_pair;
    s.constituent_mass = as_mass(k, rec->constituent_mass);
    s.charge_fraction = rec->charge_fraction;
    if (s.kind == SpeciesKind::quarkonium) {
        s.bound_state_mass = as_mass(k, rec->bound_state_mass);
        s.two_photon_width_min = as_rate(k, rec->two_photon_width_min);
        s.two_photon_width_max = as_rate(k, rec->two_photon_width_max);
        if (s.two_photon_width_min->value() > s.two_photon_width_max->value())
            throw InputError("species '" + s.name + "': minimum width exceeds maximum width");
        Quantity c = k.ref_c();
        s.e_min = (*s.bound_state_mass - 2.0 * s.constituent_mass) * c * c;
    }
    validate(s);
    return s;
}

std::vector<SpeciesSpec> default_species(const ConstantsSet& k, bool include_quarks)
{
    std::vector<SpeciesSpec> out;
    for (const char* name : {"e", "mu", "tau"})
        out.push_back(resolve_species(k, name));
    if (include_quarks)
        for (const auto& r : k.species())
            if (r.kind == "quarkonium")
                out.push_back(resolve_species(k, r.name));
    return out;
}

SpeciesSpec with_scaled_mass(const SpeciesSpec& s, double factor)
{
    SpeciesSpec out = s;
    out.constituent_mass = factor * s.constituent_mass;
    validate(out);
    return out;
}

Quantity reduced_mass(const SpeciesSpec& s) { return s.constituent_mass / 2.0; }

Quantity species_charge(const SpeciesSpec& s, const ConstantsSet& k) { return s.charge_fraction.to_double() * k.e(); }

Quantity vf_lifetime(const SpeciesSpec& s, const ConstantsSet& k, const Quantity& c)
{
    require_speed(c);
    Quantity c2 = c * c;
    if (s.is_lepton())
        return k.hbar() / (4.0 * s.constituent_mass * c2);
    return k.hbar() / (2.0 * *s.bound_state_mass * c2);
}

Quantity coherence_length(const SpeciesSpec& s, const ConstantsSet& k, const Quantity& c)
{
    return c * vf_lifetime(s, k, c);
}

Quantity number_density(const SpeciesSpec& s, const ConstantsSet& k, const Quantity& c)
{
    return Quantity::scalar(1.0) / q_pow(coherence_length(s, k, c), 3);
}

Quantity binding_energy(const SpeciesSpec& s, const ConstantsSet& k, const Quantity& epsilon, const Quantity& c)
{
    if (!s.is_lepton())
        throw UnsupportedSpeciesError("binding energy is defined for lepton pairs only, not '" + s.name + "'");
    require_dimension(epsilon, dim::permittivity, "permittivity");
    require_speed(c);
    Quantity q = species_charge(s, k);
    Quantity four_pi_eps = 4.0 * std::numbers::pi * epsilon;
    Quantity hbar = k.hbar();
    return -(reduced_mass(s) * q_pow(q, 4)) / (2.0 * four_pi_eps * four_pi_eps * hbar * hbar);
}

Quantity binding_energy_alpha_form(const SpeciesSpec& s, const ConstantsSet& k, const Quantity& epsilon,
                                   const Quantity& c)
{
    if (!s.is_lepton())
        throw UnsupportedSpeciesError("binding energy is defined for lepton pairs only, not '" + s.name + "'");
    require_dimension(epsilon, dim::permittivity, "permittivity");
    require_speed(c);
    Quantity q = species_charge(s, k);
    Quantity alpha = q * q / (4.0 * std::numbers::pi * epsilon * k.hbar() * c);
    return -(s.constituent_mass * alpha * alpha * c * c) / 4.0;
}

OscillatorSpec resonant_frequency(const SpeciesSpec& s, const ConstantsSet& k, const Quantity& epsilon,
                                  const Quantity& c)
{
    Quantity energy = s.is_lepton() ? abs(binding_energy(s, k, epsilon, c)) : *s.e_min;
    return OscillatorSpec(reduced_mass(s), energy / k.hbar(), k.hbar());
}

Quantity spring_constant(const OscillatorSpec& o) { return o.reduced_mass * o.omega0 * o.omega0; }

Quantity decay_rate(const SpeciesSpec& s, const ConstantsSet& k, const Quantity& alpha, const Quantity& c,
                    WidthChoice width)
{
    require_dimension(alpha, dim::none, "alpha");
    if (!(alpha.value() > 0.0))
        throw NumericError("alpha must be positive");
    require_speed(c);
    if (s.is_lepton())
        return q_pow(alpha, 5) * s.constituent_mass * c * c / k.hbar();
    return 2.0 * s.two_photon_width(width);
}

Quantity interacting_density(const SpeciesSpec& s, const ConstantsSet& k, const Quantity& alpha, const Quantity& c,
                             DensityMode mode, WidthChoice width)
{
    Quantity n = number_density(s, k, c);
    double x = (decay_rate(s, k, alpha, c, width) * vf_lifetime(s, k, c)).in(dim::none, "Gamma*dt");
    double fraction = mode == DensityMode::linearized ? x : -std::expm1(-x);
    return fraction * n;
}

Quantity lepton_interacting_density_closed(const SpeciesSpec& s, const ConstantsSet& k, double alpha,
                                           const Quantity& c)
{
    require_speed(c);
    return std::pow(alpha, 5) / 4.0 * q_pow(4.0 * s.constituent_mass * c / k.hbar(), 3);
}

} // namespace vacuum
