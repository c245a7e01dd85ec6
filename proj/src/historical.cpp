#include "vacuum/historical.hpp"

#include <cmath>
#include <numbers>

#include "vacuum/error.hpp"

namespace vacuum {

double bethe_t0(double alpha)
{
    if (!(alpha > 0.0))
        throw NumericError("alpha must be positive");
    return -(2.0 / alpha - 1.0);
}

double allen_ten_alpha_squared(double alpha) { return 10.0 * alpha * alpha; }

double wyler_inverse_alpha()
{
    constexpr double pi = std::numbers::pi;
    return 16.0 * pi * pi * pi / 9.0 * std::pow(120.0 / pi, 0.25);
}

HistoricalValues historical_values(const ConstantsSet& k)
{
    HistoricalValues h;
    h.alpha = k.ref_alpha();
    h.bethe_t0_celsius = bethe_t0(h.alpha);
    h.allen_ten_alpha_squared = allen_ten_alpha_squared(h.alpha);
    h.allen_mass_ratio = (k.get("m_e") / k.get("m_u")).in(dim::none, "m_e/u");
    h.wyler_inv_alpha = wyler_inverse_alpha();
    return h;
}

} // namespace vacuum
