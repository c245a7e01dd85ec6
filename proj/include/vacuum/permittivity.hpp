#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vacuum/constants.hpp"
#include "vacuum/perturbation.hpp"
#include "vacuum/quantity.hpp"
#include "vacuum/species.hpp"

namespace vacuum {

/// One species' share of the vacuum permittivity.
struct SpeciesContribution
{
    std::string species_name;
    Quantity epsilon_term; ///< F/m
    double in_alpha_units = 0.0; ///< coefficient of e^2/(hbar c)
};

enum class Method { sum, closed_form, self_consistent };

std::string_view to_string(Method m);
Method parse_method(std::string_view s);

/// Signed (reference - model)/model, in percent.
struct ReferenceDeltas
{
    double epsilon0 = 0.0;
    double c = 0.0;
    double inv_alpha = 0.0;
};

struct PredictionReport
{
    Quantity epsilon0_model; ///< F/m
    Quantity c_model; ///< m/s
    double inv_alpha_model = 0.0;
    std::vector<SpeciesContribution> contributions;
    Method method = Method::closed_form;
    ReferenceDeltas reference_deltas;
    int iterations = 0;
    std::string constants_source;
};

/// e^2/(hbar c) at the given c.
Quantity coulomb_unit(const ConstantsSet& k, const Quantity& c);

/// Lepton-pair term N (q^2/mu)/omega0^2, built from the species and
/// perturbation operations with the dipole of `branch`, and cross-checked
/// against the mass-free closed form 8^3 alpha e^2/(hbar c). Throws
/// NumericError if the two routes disagree beyond 1e-12 relative.
SpeciesContribution lepton_contribution(const SpeciesSpec& s, const ConstantsSet& k, double alpha, const Quantity& c,
                                        Branch branch = Branch::paper);

/// 8^3 alpha e^2/(hbar c)
Quantity lepton_contribution_closed(const ConstantsSet& k, double alpha, const Quantity& c);

/// Upper-bound estimate 8c (M/hbar)^2 Gamma_gg (q^2/(m/2)) / omega0^2 with
/// omega0 = E_min/hbar.
SpeciesContribution quarkonium_contribution(const SpeciesSpec& s, const ConstantsSet& k, const Quantity& c,
                                            WidthChoice width = WidthChoice::max);

/// (n 8^3 / 4 pi) mu0 (e^2/hbar)^2; n = 3 gives (6 mu0/pi)(8 e^2/hbar)^2.
Quantity epsilon0_closed_form(const ConstantsSet& k, int n_species);

/// 1/sqrt(mu0 epsilon0)
Quantity speed_of_light(const Quantity& epsilon0, const ConstantsSet& k);

/// 4 pi epsilon0 hbar c / e^2
double inverse_alpha(const Quantity& epsilon0, const Quantity& c, const ConstantsSet& k);

/// alpha and c expressed through a trial permittivity.
double alpha_at(const Quantity& epsilon, const ConstantsSet& k);

ReferenceDeltas compare_to_reference(const PredictionReport& r, const ConstantsSet& k);

struct SolverOptions
{
    double tolerance = 1e-12;
    int max_iter = 50;
    WidthChoice width = WidthChoice::max;
    Branch branch = Branch::paper;
};

/// Sum of all species contributions at a given trial permittivity.
std::vector<SpeciesContribution> contributions_at(const std::vector<SpeciesSpec>& species, const ConstantsSet& k,
                                                  const Quantity& epsilon, const SolverOptions& opt = {});

/// Solves eps = F(eps), where F sums every species contribution with alpha
/// and c written through eps. Picard iteration from the reference
/// permittivity, halving the step while the update keeps changing sign
/// without shrinking.
PredictionReport epsilon0_self_consistent(const std::vector<SpeciesSpec>& species, const ConstantsSet& k,
                                          const SolverOptions& opt = {});

/// Direct sum at fixed alpha and c (no self-consistency).
PredictionReport epsilon0_sum(const std::vector<SpeciesSpec>& species, const ConstantsSet& k, double alpha,
                              const Quantity& c, const SolverOptions& opt = {});

/// Report for the n-species closed form, with n identical lepton terms listed.
PredictionReport closed_form_report(const ConstantsSet& k, int n_species = 3);

/// Fills c, 1/alpha and the reference deltas from epsilon0.
PredictionReport make_report(const Quantity& epsilon0, std::vector<SpeciesContribution> contributions, Method method,
                             const ConstantsSet& k);

} // namespace vacuum
