#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "vacuum/error.hpp"
#include "vacuum/report.hpp"

namespace {

void add_common_options(CLI::App& sub, vacuum::RunConfig& cfg, std::string& constants, std::string& width,
                        std::string& branch, std::string& format)
{
    sub.add_option("--constants", constants, "constants file (JSON); default: $VACUUM_DATA_DIR/constants.json, "
                                             "then the built-in set");
    sub.add_flag("--include-quarks", cfg.include_quarks, "add the eta_c and eta_b quarkonium terms");
    sub.add_option("--width", width, "eta_b two-photon width bound")->check(CLI::IsMember({"min", "max"}));
    sub.add_option("--branch", branch, "first-order amplitude reading")->check(CLI::IsMember({"paper", "literal"}));
    sub.add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json", "csv"}));
    sub.add_option("--precision", cfg.precision, "significant figures in printed numbers")
        ->check(CLI::Range(1, 17));
    sub.add_option("--tolerance", cfg.tolerance,
                   "quadrature tolerance (verify) or fixed-point tolerance (predict)");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Vacuum permittivity, speed of light and fine-structure constant from vacuum fluctuations"};
    app.require_subcommand(1, 1);

    const std::map<std::string, vacuum::Subcommand> commands = {
        {"predict", vacuum::Subcommand::predict},
        {"species", vacuum::Subcommand::species},
        {"verify", vacuum::Subcommand::verify},
        {"sensitivity", vacuum::Subcommand::sensitivity},
        {"historical", vacuum::Subcommand::historical},
    };
    const std::map<std::string, std::string> help = {
        {"predict", "epsilon0, c and 1/alpha with reference deltas"},
        {"species", "per-species lifetimes, densities, frequencies and decay rates"},
        {"verify", "numerical self-checks; exit 1 on any failure"},
        {"sensitivity", "sweeps over species count, coupling strength and time"},
        {"historical", "historical numerological formulas for alpha"},
    };

    vacuum::RunConfig cfg;
    std::string constants, width = "max", branch = "paper", format = "table";
    for (const auto& [name, _] : commands) {
        CLI::App* sub = app.add_subcommand(name, help.at(name));
        add_common_options(*sub, cfg, constants, width, branch, format);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return vacuum::exit_input_error;
    }

    for (const auto& [name, cmd] : commands)
        if (app.got_subcommand(name))
            cfg.subcommand = cmd;
    if (!constants.empty())
        cfg.constants_path = constants;
    try {
        cfg.width = vacuum::parse_width_choice(width);
        cfg.branch = vacuum::parse_branch(branch);
        cfg.format = vacuum::parse_output_format(format);
    } catch (const vacuum::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return vacuum::exit_input_error;
    }
    return vacuum::run(cfg, std::cout, std::cerr);
}
