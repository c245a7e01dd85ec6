#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "vacuum/constants.hpp"
#include "vacuum/permittivity.hpp"
#include "vacuum/perturbation.hpp"
#include "vacuum/species.hpp"

namespace vacuum {

enum class Subcommand { predict, species, verify, sensitivity, historical };
enum class OutputFormat { table, json, csv };

std::string_view to_string(Subcommand s);
std::string_view to_string(OutputFormat f);
OutputFormat parse_output_format(std::string_view s);

/// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_input_error = 2;

struct RunConfig
{
    Subcommand subcommand = Subcommand::predict;
    std::optional<std::filesystem::path> constants_path;
    bool include_quarks = false;
    WidthChoice width = WidthChoice::max;
    Branch branch = Branch::paper;
    OutputFormat format = OutputFormat::table;
    std::optional<int> precision; ///< significant figures
    std::optional<double> tolerance; ///< quadrature tolerance for verify, fixed-point tolerance otherwise
};

/// Significant-figure formatting: fixed notation for 1e-3 <= |v| < 1e5,
/// scientific otherwise.
std::string format_number(double v, int significant);

/// JSON document for a prediction. Keys: model, reference, deltas_percent,
/// contributions, method, constants_source, iterations.
std::string report_to_json(const PredictionReport& r, const ConstantsSet& k);

/// Inverse of report_to_json; throws InputError on malformed input.
PredictionReport report_from_json(std::string_view text);

/// Runs one subcommand. Normal output goes to `out`, diagnostics to `err`.
/// Returns exit_ok, exit_failure (failed check or computation) or
/// exit_input_error (bad configuration or constants).
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_predict(const RunConfig& cfg, const ConstantsSet& k, std::ostream& out, std::ostream& err);
int cmd_species(const RunConfig& cfg, const ConstantsSet& k, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, const ConstantsSet& k, std::ostream& out, std::ostream& err);
int cmd_sensitivity(const RunConfig& cfg, const ConstantsSet& k, std::ostream& out, std::ostream& err);
int cmd_historical(const RunConfig& cfg, const ConstantsSet& k, std::ostream& out, std::ostream& err);

} // namespace vacuum
