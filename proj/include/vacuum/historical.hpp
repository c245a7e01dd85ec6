#pragma once

#include "vacuum/constants.hpp"

namespace vacuum {

/// Numerological formulas for alpha. Kept for illustration only; none of
/// them is a derivation.
struct HistoricalValues
{
    double alpha = 0.0; ///< alpha used in the Bethe and Allen rows
    double bethe_t0_celsius = 0.0; ///< -(2/alpha - 1)
    double allen_ten_alpha_squared = 0.0; ///< 10 alpha^2
    double allen_mass_ratio = 0.0; ///< m_e / u
    double wyler_inv_alpha = 0.0; ///< 16 pi^3/9 (5!/pi)^{1/4}
};

/// -(2/alpha - 1)
double bethe_t0(double alpha);

/// 10 alpha^2
double allen_ten_alpha_squared(double alpha);

/// 16 pi^3/9 (5!/pi)^{1/4}
double wyler_inverse_alpha();

/// All three, with alpha = 1/ref_inv_alpha.
HistoricalValues historical_values(const ConstantsSet& k);

} // namespace vacuum
