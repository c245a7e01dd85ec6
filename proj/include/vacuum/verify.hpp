#pragma once

#include <string>
#include <vector>

#include "vacuum/constants.hpp"
#include "vacuum/oscillator.hpp"
#include "vacuum/perturbation.hpp"

namespace vacuum {

struct CheckResult
{
    std::string name;
    double tolerance = 0.0;
    double measured = 0.0; ///< NaN when the check threw
    bool passed = false;
    std::string detail;
};

struct VerifyOptions
{
    double quadrature_tolerance = vacuum::quadrature_tolerance;
    Branch branch = Branch::paper;
};

/// Self-checks on the bundled constants: quadrature against closed forms,
/// parity and orthonormality, ODE against first-order amplitudes,
/// unitarity, scaling, fixed point against closed form, mass cancellation,
/// time averaging and dimension audits.
std::vector<CheckResult> run_verification(const ConstantsSet& k, const VerifyOptions& opt = {});

bool all_passed(const std::vector<CheckResult>& results);

} // namespace vacuum
