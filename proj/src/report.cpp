#include "vacuum/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <ostream>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

#include "vacuum/error.hpp"
#include "vacuum/historical.hpp"
#include "vacuum/verify.hpp"

namespace vacuum {

using nlohmann::json;

namespace {

constexpr double pi = std::numbers::pi;
constexpr int default_precision = 3;
constexpr int historical_precision = 8;

int precision_of(const RunConfig& cfg, int fallback = default_precision)
{
    return cfg.precision.value_or(fallback);
}

/// Left-aligned text table with a header row.
class Table
{
  public:
    explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& os) const
    {
        std::vector<std::size_t> width;
        for (const auto& r : rows_) {
            width.resize(std::max(width.size(), r.size()), 0);
            for (std::size_t i = 0; i < r.size(); ++i)
                width[i] = std::max(width[i], r[i].size());
        }
        for (const auto& r : rows_) {
            std::string line;
            for (std::size_t i = 0; i < r.size(); ++i) {
                line += r[i];
                if (i + 1 < r.size())
                    line += std::string(width[i] - r[i].size() + 2, ' ');
            }
            os << line << '\n';
        }
    }

    void print_csv(std::ostream& os) const
    {
        for (const auto& r : rows_) {
            for (std::size_t i = 0; i < r.size(); ++i)
                os << (i ? "," : "") << csv_field(r[i]);
            os << '\n';
        }
    }

  private:
    static std::string csv_field(const std::string& s)
    {
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string q = "\"";
        for (char c : s)
            q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    }

    std::vector<std::vector<std::string>> rows_;
};

json report_json(const PredictionReport& r, const ConstantsSet& k)
{
    json contributions = json::array();
    for (const auto& t : r.contributions)
        contributions.push_back(
            {{"species", t.species_name}, {"epsilon_term", t.epsilon_term.value()}, {"in_alpha_units", t.in_alpha_units}});
    return json{
        {"model", {{"epsilon0", r.epsilon0_model.value()}, {"c", r.c_model.value()}, {"inv_alpha", r.inv_alpha_model}}},
        {"reference",
         {{"epsilon0", k.ref_epsilon0().value()}, {"c", k.ref_c().value()}, {"inv_alpha", k.ref_inv_alpha()}}},
        {"deltas_percent",
         {{"epsilon0", r.reference_deltas.epsilon0},
          {"c", r.reference_deltas.c},
          {"inv_alpha", r.reference_deltas.inv_alpha}}},
        {"units", {{"epsilon0", "F/m"}, {"c", "m/s"}, {"inv_alpha", "1"}, {"epsilon_term", "F/m"}}},
        {"contributions", contributions},
        {"method", to_string(r.method)},
        {"iterations", r.iterations},
        {"constants_source", r.constants_source},
    };
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string quark_label(const RunConfig& cfg)
{
    return cfg.include_quarks ? fmt::format("on (width {})", to_string(cfg.width)) : "off";
}

SolverOptions solver_options(const RunConfig& cfg)
{
    SolverOptions so;
    so.width = cfg.width;
    so.branch = cfg.branch;
    if (cfg.tolerance) {
        if (!(*cfg.tolerance >= 1e-15 && *cfg.tolerance <= 1e-6))
            throw InputError("--tolerance for predict must lie in [1e-15, 1e-6]");
        so.tolerance = *cfg.tolerance;
    }
    return so;
}

} // namespace

std::string_view to_string(Subcommand s)
{
    switch (s) {
    case Subcommand::predict: return "predict";
    case Subcommand::species: return "species";
    case Subcommand::verify: return "verify";
    case Subcommand::sensitivity: return "sensitivity";
    case Subcommand::historical: return "historical";
    }
    return "?";
}

std::string_view to_string(OutputFormat f)
{
    switch (f) {
    case OutputFormat::table: return "table";
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    }
    return "?";
}

OutputFormat parse_output_format(std::string_view s)
{
    if (s == "table")
        return OutputFormat::table;
    if (s == "json")
        return OutputFormat::json;
    if (s == "csv")
        return OutputFormat::csv;
    throw InputError("unknown output format '" + std::string(s) + "'");
}

std::string format_number(double v, int significant)
{
    if (significant < 1 || significant > 17)
        throw InputError("precision must lie in [1, 17]");
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    double a = std::fabs(v);
    if (a == 0.0)
        return fmt::format("{:.{}f}", 0.0, significant - 1);
    if (a >= 1e-3 && a < 1e5) {
        // Exponent after rounding, so 99.96 at 3 figures prints as 100.
        std::string sci = fmt::format("{:.{}e}", v, significant - 1);
        int exponent = std::stoi(sci.substr(sci.find('e') + 1));
        int decimals = std::max(0, significant - 1 - exponent);
        return fmt::format("{:.{}f}", v, decimals);
    }
    return fmt::format("{:.{}e}", v, significant - 1);
}

std::string report_to_json(const PredictionReport& r, const ConstantsSet& k) { return report_json(r, k).dump(2); }

PredictionReport report_from_json(std::string_view text)
{
    try {
        json j = json::parse(text);
        PredictionReport r;
        r.epsilon0_model = Quantity(j.at("model").at("epsilon0").get<double>(), dim::permittivity);
        r.c_model = Quantity(j.at("model").at("c").get<double>(), dim::speed);
        r.inv_alpha_model = j.at("model").at("inv_alpha").get<double>();
        for (const auto& t : j.at("contributions"))
            r.contributions.push_back({t.at("species").get<std::string>(),
                                       Quantity(t.at("epsilon_term").get<double>(), dim::permittivity),
                                       t.at("in_alpha_units").get<double>()});
        r.method = parse_method(j.at("method").get<std::string>());
        const auto& d = j.at("deltas_percent");
        r.reference_deltas = {d.at("epsilon0").get<double>(), d.at("c").get<double>(), d.at("inv_alpha").get<double>()};
        r.iterations = j.value("iterations", 0);
        r.constants_source = j.at("constants_source").get<std::string>();
        return r;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed report document: ") + e.what());
    } catch (const NumericError& e) {
        throw InputError(std::string("malformed report document: ") + e.what());
    }
}

//---------------------------------------------------------------------------//
// predict
//---------------------------------------------------------------------------//

int cmd_predict(const RunConfig& cfg, const ConstantsSet& k, std::ostream& out, std::ostream&)
{
    PredictionReport closed = closed_form_report(k, 3);
    PredictionReport sc = epsilon0_self_consistent(default_species(k, cfg.include_quarks), k, solver_options(cfg));
    int p = precision_of(cfg);
    auto num = [p](double v) { return format_number(v, p); };

    if (cfg.format == OutputFormat::json) {
        json j = report_json(sc, k);
        j["closed_form"] = {{"epsilon0", closed.epsilon0_model.value()},
                            {"c", closed.c_model.value()},
                            {"inv_alpha", closed.inv_alpha_model},
                            {"n_species", 3}};
        j["include_quarks"] = cfg.include_quarks;
        j["branch"] = to_string(cfg.branch);
        print_json(out, j);
        return exit_ok;
    }

    if (cfg.format == OutputFormat::csv) {
        Table t({"method", "item", "value", "unit"});
        for (const auto* r : {&closed, &sc}) {
            std::string m(to_string(r->method));
            t.add({m, "epsilon0", num(r->epsilon0_model.value()), "F/m"});
            t.add({m, "c", num(r->c_model.value()), "m/s"});
            t.add({m, "inv_alpha", num(r->inv_alpha_model), "1"});
            t.add({m, "delta_epsilon0", num(r->reference_deltas.epsilon0), "%"});
            t.add({m, "delta_c", num(r->reference_deltas.c), "%"});
            t.add({m, "delta_inv_alpha", num(r->reference_deltas.inv_alpha), "%"});
        }
        for (const auto& c : sc.contributions)
            t.add({std::string(to_string(sc.method)), "contribution:" + c.species_name, num(c.epsilon_term.value()),
                   "F/m"});
        t.print_csv(out);
        return exit_ok;
    }

    out << "Vacuum permittivity from vacuum-fluctuation polarizability\n";
    out << "constants: " << k.origin() << "\n";
    out << "quark terms: " << quark_label(cfg) << "\n";
    out << "amplitude branch: " << to_string(cfg.branch) << "\n\n";

    auto block = [&](const std::string& title, const PredictionReport& r) {
        out << title << "\n";
        out << "  epsilon0 = " << num(r.epsilon0_model.value()) << " F/m\n";
        out << "  c        = " << num(r.c_model.value()) << " m/s\n";
        out << "  1/alpha  = " << num(r.inv_alpha_model) << "\n\n";
    };
    block("closed form, 3 lepton species", closed);
    block(fmt::format("self-consistent, {} iteration{}", sc.iterations, sc.iterations == 1 ? "" : "s"), sc);

    Table contrib({"species", "epsilon_term [F/m]", "in e^2/(hbar c)"});
    for (const auto& c : sc.contributions)
        contrib.add({c.species_name, num(c.epsilon_term.value()), num(c.in_alpha_units)});
    out << "contributions (self-consistent)\n";
    contrib.print(out);

    out << "\nreference comparison, (reference - model)/model\n";
    Table ref({"quantity", "model", "reference", "delta [%]"});
    ref.add({"epsilon0 [F/m]", num(sc.epsilon0_model.value()), num(k.ref_epsilon0().value()),
             num(sc.reference_deltas.epsilon0)});
    ref.add({"c [m/s]", num(sc.c_model.value()), num(k.ref_c().value()), num(sc.reference_deltas.c)});
    ref.add({"1/alpha", num(sc.inv_alpha_model), num(k.ref_inv_alpha()), num(sc.reference_deltas.inv_alpha)});
    ref.print(out);
    return exit_ok;
}

//---------------------------------------------------------------------------//
// species
//---------------------------------------------------------------------------//

int cmd_species(const RunConfig& cfg, const ConstantsSet& k, std::ostream& out, std::ostream&)
{
    const Quantity c = k.ref_c();
    const Quantity eps = k.ref_epsilon0();
    const Quantity alpha = Quantity::scalar(k.ref_alpha());
    int p = precision_of(cfg);
    auto num = [p](double v) { return format_number(v, p); };

    Table t({"species", "kind", "dt [s]", "L [m]", "1/L^3 [m^-3]", "omega0 [rad/s]", "Gamma [1/s]", "N_VF [m^-3]"});
    json rows = json::array();
    for (const auto& s : default_species(k, true)) {
        double dt = vf_lifetime(s, k, c).value();
        double L = coherence_length(s, k, c).value();
        double n = number_density(s, k, c).value();
        double w = resonant_frequency(s, k, eps, c).omega0.value();
        double g = decay_rate(s, k, alpha, c, cfg.width).value();
        double nvf = interacting_density(s, k, alpha, c, DensityMode::exact, cfg.width).value();
        t.add({s.name, std::string(to_string(s.kind)), num(dt), num(L), num(n), num(w), num(g), num(nvf)});
        rows.push_back({{"species", s.name},
                        {"kind", to_string(s.kind)},
                        {"lifetime", dt},
                        {"coherence_length", L},
                        {"number_density", n},
                        {"omega0", w},
                        {"decay_rate", g},
                        {"interacting_density", nvf}});
    }

    if (cfg.format == OutputFormat::json) {
        print_json(out, {{"species", rows}, {"width", to_string(cfg.width)}, {"constants_source", k.origin()}});
    } else if (cfg.format == OutputFormat::csv) {
        t.print_csv(out);
    } else {
        out << "Vacuum-fluctuation species at reference alpha and c (two-photon width: " << to_string(cfg.width)
            << ")\n";
        t.print(out);
    }
    return exit_ok;
}

//---------------------------------------------------------------------------//
// verify
//---------------------------------------------------------------------------//

int cmd_verify(const RunConfig& cfg, const ConstantsSet& k, std::ostream& out, std::ostream&)
{
    VerifyOptions vo;
    vo.branch = cfg.branch;
    if (cfg.tolerance) {
        if (!(*cfg.tolerance > 0.0) || !std::isfinite(*cfg.tolerance))
            throw InputError("--tolerance must be a positive number");
        vo.quadrature_tolerance = *cfg.tolerance;
    }
    auto results = run_verification(k, vo);
    bool ok = all_passed(results);
    int p = precision_of(cfg);

    if (cfg.format == OutputFormat::json) {
        json checks = json::array();
        for (const auto& r : results)
            checks.push_back({{"name", r.name},
                              {"tolerance", r.tolerance},
                              {"measured", std::isnan(r.measured) ? json(nullptr) : json(r.measured)},
                              {"passed", r.passed},
                              {"detail", r.detail}});
        print_json(out, {{"checks", checks}, {"passed", ok}});
    } else {
        Table t({"check", "tolerance", "measured", "result"});
        for (const auto& r : results)
            t.add({r.name, format_number(r.tolerance, p), std::isnan(r.measured) ? "-" : format_number(r.measured, p),
                   r.passed ? "PASS" : "FAIL" + (r.detail.empty() ? "" : ": " + r.detail)});
        if (cfg.format == OutputFormat::csv) {
            t.print_csv(out);
        } else {
            t.print(out);
            out << (ok ? "all checks passed\n" : "verification FAILED\n");
        }
    }
    return ok ? exit_ok : exit_failure;
}

//---------------------------------------------------------------------------//
// sensitivity
//---------------------------------------------------------------------------//

int cmd_sensitivity(const RunConfig& cfg, const ConstantsSet& k, std::ostream& out, std::ostream& err)
{
    int p = precision_of(cfg);
    auto num = [p](double v) { return format_number(v, p); };

    Table species_sweep({"n", "epsilon0 [F/m]", "c [m/s]", "1/alpha"});
    json n_rows = json::array();
    for (int n = 1; n <= 6; ++n) {
        PredictionReport r = closed_form_report(k, n);
        species_sweep.add({std::to_string(n), num(r.epsilon0_model.value()), num(r.c_model.value()),
                           num(r.inv_alpha_model)});
        n_rows.push_back(
            {{"n", n}, {"epsilon0", r.epsilon0_model.value()}, {"c", r.c_model.value()}, {"inv_alpha", r.inv_alpha_model}});
    }

    const std::array<double, 5> grid{1e-4, 3e-4, 1e-3, 3e-3, 1e-2};
    const double tau = pi;
    Table lambda_sweep({"lambda", "|a0 - 1|", "|a0 - 1|/lambda^2"});
    json l_rows = json::array();
    for (double l : grid) {
        double d = std::abs(amplitudes_ode(tau, CouplingLambda(l), min_ode_tolerance).a0 - 1.0);
        lambda_sweep.add({num(l), num(d), num(d / (l * l))});
        l_rows.push_back({{"lambda", l}, {"a0_correction", d}});
    }
    double exponent = scaling_exponent(grid, tau);

    // Dipole of the electron pair in a weak probe field over one period.
    SpeciesSpec e_pair = default_species(k, false).front();
    OscillatorSpec osc = resonant_frequency(e_pair, k, k.ref_epsilon0(), k.ref_c());
    Quantity charge = species_charge(e_pair, k);
    Quantity field(1.0, dim::electric_field);
    CouplingLambda lam = coupling_lambda(osc, charge, field);
    if (!lam.first_order_valid())
        err << "warning: coupling lambda = " << lam.value() << " exceeds the first-order limit "
            << first_order_lambda_limit << "\n";
    std::vector<double> taus;
    for (int i = 0; i <= 8; ++i)
        taus.push_back(2.0 * pi * i / 8.0);
    auto paper = dipole_trajectory(osc, charge, field, Branch::paper, taus);
    auto literal = dipole_trajectory(osc, charge, field, Branch::literal, taus);
    Table dipole_sweep({"tau", "dipole paper [C m]", "dipole literal [C m]"});
    json d_rows = json::array();
    for (std::size_t i = 0; i < taus.size(); ++i) {
        dipole_sweep.add({num(taus[i]), num(paper[i].dipole.value()), num(literal[i].dipole.value())});
        d_rows.push_back({{"tau", taus[i]}, {"paper", paper[i].dipole.value()}, {"literal", literal[i].dipole.value()}});
    }

    if (cfg.format == OutputFormat::json) {
        print_json(out, {{"species_count", n_rows},
                         {"lambda", l_rows},
                         {"tau", tau},
                         {"scaling_exponent", exponent},
                         {"dipole", d_rows},
                         {"probe_field", field.value()},
                         {"coupling_lambda", lam.value()}});
        return exit_ok;
    }
    if (cfg.format == OutputFormat::csv) {
        Table t({"sweep", "parameter", "quantity", "value"});
        for (const auto& r : n_rows) {
            std::string n = std::to_string(r["n"].get<int>());
            t.add({"species_count", n, "epsilon0", num(r["epsilon0"])});
            t.add({"species_count", n, "c", num(r["c"])});
            t.add({"species_count", n, "inv_alpha", num(r["inv_alpha"])});
        }
        for (const auto& r : l_rows)
            t.add({"lambda", num(r["lambda"]), "a0_correction", num(r["a0_correction"])});
        t.add({"lambda", "fit", "scaling_exponent", num(exponent)});
        for (const auto& r : d_rows) {
            t.add({"dipole", num(r["tau"]), "paper", num(r["paper"])});
            t.add({"dipole", num(r["tau"]), "literal", num(r["literal"])});
        }
        t.print_csv(out);
        return exit_ok;
    }

    out << "closed form against the number of lepton species n\n";
    species_sweep.print(out);
    out << "\na0 correction at tau = pi against lambda (ODE)\n";
    lambda_sweep.print(out);
    out << "scaling exponent = " << num(exponent) << "\n";
    out << "\nelectron-pair dipole in a " << num(field.value()) << " V/m probe field (lambda = " << num(lam.value())
        << ")\n";
    dipole_sweep.print(out);
    return exit_ok;
}

//---------------------------------------------------------------------------//
// historical
//---------------------------------------------------------------------------//

int cmd_historical(const RunConfig& cfg, const ConstantsSet& k, std::ostream& out, std::ostream&)
{
    HistoricalValues h = historical_values(k);
    int p = precision_of(cfg, historical_precision);
    auto num = [p](double v) { return format_number(v, p); };

    if (cfg.format == OutputFormat::json) {
        print_json(out, {{"label", "historical/numerological"},
                         {"alpha", h.alpha},
                         {"bethe_t0_celsius", h.bethe_t0_celsius},
                         {"allen_ten_alpha_squared", h.allen_ten_alpha_squared},
                         {"allen_mass_ratio", h.allen_mass_ratio},
                         {"wyler_inv_alpha", h.wyler_inv_alpha},
                         {"reference_inv_alpha", k.ref_inv_alpha()}});
        return exit_ok;
    }

    Table t({"formula", "value", "compared with", "comparison value"});
    t.add({"Bethe T0 = -(2/alpha - 1) [deg C]", num(h.bethe_t0_celsius), "absolute zero [deg C]", num(-273.15)});
    t.add({"Allen 10 alpha^2", num(h.allen_ten_alpha_squared), "m_e/u", num(h.allen_mass_ratio)});
    t.add({"Wyler 16 pi^3/9 (5!/pi)^(1/4)", num(h.wyler_inv_alpha), "reference 1/alpha", num(k.ref_inv_alpha())});
    if (cfg.format == OutputFormat::csv) {
        t.print_csv(out);
        return exit_ok;
    }
    out << "Historical/numerological formulas for alpha. Shown for comparison only; none is a derivation.\n";
    out << "alpha = 1/" << num(k.ref_inv_alpha()) << "\n";
    t.print(out);
    return exit_ok;
}

//---------------------------------------------------------------------------//
// dispatch
//---------------------------------------------------------------------------//

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.precision && (*cfg.precision < 1 || *cfg.precision > 17)) {
        err << "error: --precision must lie in [1, 17]\n";
        return exit_input_error;
    }
    std::optional<ConstantsSet> k;
    try {
        k = resolve_constants(cfg.constants_path);
    } catch (const Error& e) {
        err << "error: cannot load constants: " << e.what() << "\n";
        return exit_input_error;
    }

    try {
        switch (cfg.subcommand) {
        case Subcommand::predict: return cmd_predict(cfg, *k, out, err);
        case Subcommand::species: return cmd_species(cfg, *k, out, err);
        case Subcommand::verify: return cmd_verify(cfg, *k, out, err);
        case Subcommand::sensitivity: return cmd_sensitivity(cfg, *k, out, err);
        case Subcommand::historical: return cmd_historical(cfg, *k, out, err);
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_failure;
}

} // namespace vacuum
