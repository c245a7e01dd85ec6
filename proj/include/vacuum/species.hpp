#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vacuum/constants.hpp"
#include "vacuum/quantity.hpp"

namespace vacuum {

enum class SpeciesKind { lepton_pair, quarkonium };
enum class WidthChoice { min, max };
enum class DensityMode { exact, linearized };

std::string_view to_string(SpeciesKind k);
std::string_view to_string(WidthChoice w);
WidthChoice parse_width_choice(std::string_view s);

/// One vacuum-fluctuation species. Quarkonium-only fields are engaged iff
/// kind == quarkonium.
struct SpeciesSpec
{
    std::string name;
    SpeciesKind kind = SpeciesKind::lepton_pair;
    Quantity constituent_mass; ///< kg
    Rational charge_fraction{1};

    std::optional<Quantity> bound_state_mass; ///< kg
    std::optional<Quantity> two_photon_width_min; ///< s^-1
    std::optional<Quantity> two_photon_width_max; ///< s^-1
    std::optional<Quantity> e_min; ///< J, bound-state mass minus both constituents

    bool is_lepton() const { return kind == SpeciesKind::lepton_pair; }
    Quantity two_photon_width(WidthChoice w) const;
};

/// Effective 1-D harmonic oscillator of a species. `hbar` fixes the
/// natural length sqrt(hbar/(mu*omega0)) used by the oscillator numerics.
struct OscillatorSpec
{
    Quantity reduced_mass; ///< kg
    Quantity omega0; ///< rad/s
    Quantity hbar; ///< J*s

    OscillatorSpec(Quantity mu, Quantity w0, Quantity h);
};

/// Throws InputError if any SpeciesSpec invariant is violated.
void validate(const SpeciesSpec& s);

/// Builds a species from its definition in `k`. Rest energies are turned
/// into masses with the reference speed of light. "eta_t" is recognised and
/// rejected with UnsupportedSpeciesError.
SpeciesSpec resolve_species(const ConstantsSet& k, std::string_view name);

/// e, mu, tau pairs, plus the quarkonia of the set when requested.
std::vector<SpeciesSpec> default_species(const ConstantsSet& k, bool include_quarks);

/// Copy of `s` with the constituent mass multiplied by `factor`.
SpeciesSpec with_scaled_mass(const SpeciesSpec& s, double factor);

Quantity reduced_mass(const SpeciesSpec& s);
/// q = charge_fraction * e
Quantity species_charge(const SpeciesSpec& s, const ConstantsSet& k);

/// Uncertainty-principle lifetime: hbar/(4 m c^2) for lepton pairs,
/// hbar/(2 M c^2) for quarkonia.
Quantity vf_lifetime(const SpeciesSpec& s, const ConstantsSet& k, const Quantity& c);
/// c times the lifetime.
Quantity coherence_length(const SpeciesSpec& s, const ConstantsSet& k, const Quantity& c);
/// 1/L^3
Quantity number_density(const SpeciesSpec& s, const ConstantsSet& k, const Quantity& c);

/// Non-relativistic ground-state energy -mu q^4 / (2 (4 pi eps)^2 hbar^2).
/// Lepton pairs only.
Quantity binding_energy(const SpeciesSpec& s, const ConstantsSet& k, const Quantity& epsilon, const Quantity& c);
/// Same energy written as -m alpha^2 c^2 / 4 with alpha taken from (epsilon, c).
Quantity binding_energy_alpha_form(const SpeciesSpec& s, const ConstantsSet& k, const Quantity& epsilon,
                                   const Quantity& c);

OscillatorSpec resonant_frequency(const SpeciesSpec& s, const ConstantsSet& k, const Quantity& epsilon,
                                  const Quantity& c);

/// K = mu * omega0^2
Quantity spring_constant(const OscillatorSpec& o);

/// Photon-excited decay rate: alpha^5 m c^2 / hbar for lepton pairs, twice
/// the selected two-photon width for quarkonia.
Quantity decay_rate(const SpeciesSpec& s, const ConstantsSet& k, const Quantity& alpha, const Quantity& c,
                    WidthChoice width = WidthChoice::max);

/// Density of fluctuations that absorb a photon: (1/L^3)(1 - exp(-Gamma dt)),
/// or its linearisation (1/L^3) Gamma dt.
Quantity interacting_density(const SpeciesSpec& s, const ConstantsSet& k, const Quantity& alpha, const Quantity& c,
                             DensityMode mode, WidthChoice width = WidthChoice::max);

/// (alpha^5/4)(4 m c/hbar)^3, the lepton-pair linearised density in closed form.
Quantity lepton_interacting_density_closed(const SpeciesSpec& s, const ConstantsSet& k, double alpha,
                                           const Quantity& c);

} // namespace vacuum
