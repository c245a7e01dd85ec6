#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vacuum/error.hpp"
#include "vacuum/report.hpp"

using namespace vacuum;
using nlohmann::json;

namespace {

struct Outcome
{
    int code;
    std::string out, err;
};

Outcome run_with(RunConfig cfg)
{
    std::ostringstream out, err;
    int code = run(cfg, out, err);
    return {code, out.str(), err.str()};
}

RunConfig config(Subcommand s, OutputFormat f = OutputFormat::table)
{
    RunConfig cfg;
    cfg.subcommand = s;
    cfg.format = f;
    return cfg;
}

} // namespace

TEST_CASE("significant-figure formatting")
{
    CHECK(format_number(9.100818e-12, 3) == "9.10e-12");
    CHECK(format_number(295702389.0, 3) == "2.96e+08");
    CHECK(format_number(138.9314, 3) == "139");
    CHECK(format_number(138.9314, 5) == "138.93");
    CHECK(format_number(-2.70998, 3) == "-2.71");
    CHECK(format_number(99.96, 3) == "100");
    CHECK(format_number(0.0012646, 2) == "0.0013");
    CHECK(format_number(0.0, 3) == "0.00");
    CHECK(format_number(137.036082448, 8) == "137.03608");
    CHECK_THROWS_AS(format_number(1.0, 0), InputError);
    CHECK_THROWS_AS(format_number(1.0, 18), InputError);
}

TEST_CASE("report JSON round-trips field for field")
{
    const ConstantsSet& k = load_default_constants();
    PredictionReport r = epsilon0_self_consistent(default_species(k, true), k);
    std::string text = report_to_json(r, k);
    PredictionReport back = report_from_json(text);
    CHECK(back.epsilon0_model.value() == r.epsilon0_model.value());
    CHECK(back.epsilon0_model.dimension() == dim::permittivity);
    CHECK(back.c_model.value() == r.c_model.value());
    CHECK(back.c_model.dimension() == dim::speed);
    CHECK(back.inv_alpha_model == r.inv_alpha_model);
    CHECK(back.method == r.method);
    CHECK(back.iterations == r.iterations);
    CHECK(back.constants_source == r.constants_source);
    CHECK(back.reference_deltas.epsilon0 == r.reference_deltas.epsilon0);
    CHECK(back.reference_deltas.c == r.reference_deltas.c);
    CHECK(back.reference_deltas.inv_alpha == r.reference_deltas.inv_alpha);
    REQUIRE(back.contributions.size() == r.contributions.size());
    for (std::size_t i = 0; i < r.contributions.size(); ++i) {
        CHECK(back.contributions[i].species_name == r.contributions[i].species_name);
        CHECK(back.contributions[i].epsilon_term.value() == r.contributions[i].epsilon_term.value());
        CHECK(back.contributions[i].in_alpha_units == r.contributions[i].in_alpha_units);
    }
    CHECK_THROWS_AS(report_from_json("{\"model\": 1}"), InputError);
    CHECK_THROWS_AS(report_from_json("not json"), InputError);
}

TEST_CASE("predict table")
{
    auto o = run_with(config(Subcommand::predict));
    CHECK(o.code == exit_ok);
    CHECK(o.out.find("epsilon0 = 9.10e-12 F/m") != std::string::npos);
    CHECK(o.out.find("c        = 2.96e+08 m/s") != std::string::npos);
    CHECK(o.out.find("-2.71") != std::string::npos);
    CHECK(o.out.find("eta_c") == std::string::npos);
}

TEST_CASE("predict JSON follows the schema and matches the table")
{
    auto o = run_with(config(Subcommand::predict, OutputFormat::json));
    REQUIRE(o.code == exit_ok);
    json j = json::parse(o.out);
    for (const char* key : {"model", "reference", "deltas_percent", "contributions", "method", "constants_source"})
        CHECK(j.contains(key));
    for (const char* key : {"epsilon0", "c", "inv_alpha"}) {
        CHECK(j["model"].contains(key));
        CHECK(j["reference"].contains(key));
        CHECK(j["deltas_percent"].contains(key));
    }
    CHECK(j["method"] == "self-consistent");
    CHECK(j["contributions"].size() == 3);
    CHECK(j["contributions"][0].contains("in_alpha_units"));
    PredictionReport back = report_from_json(o.out);
    CHECK(format_number(back.epsilon0_model.value(), 3) == "9.10e-12");
}

TEST_CASE("predict with quark terms")
{
    RunConfig cfg = config(Subcommand::predict, OutputFormat::json);
    cfg.include_quarks = true;
    auto o = run_with(cfg);
    REQUIRE(o.code == exit_ok);
    json j = json::parse(o.out);
    CHECK(j["contributions"].size() == 5);
    double shift = j["model"]["epsilon0"].get<double>() / j["closed_form"]["epsilon0"].get<double>() - 1.0;
    CHECK(shift == doctest::Approx(1.2e-4).epsilon(0.05));

    cfg.width = WidthChoice::min;
    json jmin = json::parse(run_with(cfg).out);
    CHECK(jmin["model"]["epsilon0"].get<double>() < j["model"]["epsilon0"].get<double>());
}

TEST_CASE("predict CSV has a fixed header")
{
    auto o = run_with(config(Subcommand::predict, OutputFormat::csv));
    CHECK(o.code == exit_ok);
    CHECK(o.out.rfind("method,item,value,unit\n", 0) == 0);
    CHECK(o.out.find("closed-form,epsilon0,9.10e-12,F/m") != std::string::npos);
}

TEST_CASE("species table")
{
    auto o = run_with(config(Subcommand::species));
    CHECK(o.code == exit_ok);
    CHECK(o.out.find("1.11e+39") != std::string::npos);
    CHECK(o.out.find("4.67e+49") != std::string::npos);
    CHECK(o.out.find("1.10e-25") != std::string::npos);

    auto c = run_with(config(Subcommand::species, OutputFormat::csv));
    CHECK(c.out.rfind("species,kind,dt [s],L [m],1/L^3 [m^-3],omega0 [rad/s],Gamma [1/s],N_VF [m^-3]\n", 0) == 0);

    json j = json::parse(run_with(config(Subcommand::species, OutputFormat::json)).out);
    CHECK(j["species"].size() == 5);
}

TEST_CASE("verify exit codes")
{
    auto ok = run_with(config(Subcommand::verify));
    CHECK(ok.code == exit_ok);
    CHECK(ok.out.find("FAIL") == std::string::npos);

    RunConfig strict = config(Subcommand::verify);
    strict.tolerance = 1e-20;
    auto bad = run_with(strict);
    CHECK(bad.code == exit_failure);
    CHECK(bad.out.find("FAIL") != std::string::npos);

    strict.format = OutputFormat::json;
    json j = json::parse(run_with(strict).out);
    CHECK(j["passed"] == false);
}

TEST_CASE("sensitivity sweeps")
{
    RunConfig cfg = config(Subcommand::sensitivity, OutputFormat::json);
    auto o = run_with(cfg);
    REQUIRE(o.code == exit_ok);
    json j = json::parse(o.out);
    REQUIRE(j["species_count"].size() == 6);
    CHECK(j["species_count"][2]["inv_alpha"].get<double>() == doctest::Approx(138.93).epsilon(1e-4));
    CHECK(j["species_count"][0]["inv_alpha"].get<double>() == doctest::Approx(80.21).epsilon(1e-4));
    CHECK(std::fabs(j["scaling_exponent"].get<double>() - 2.0) <= 0.05);
    CHECK(o.err.empty());
}

TEST_CASE("historical demo is labelled and precise")
{
    auto o = run_with(config(Subcommand::historical));
    CHECK(o.code == exit_ok);
    CHECK(o.out.find("numerological") != std::string::npos);
    CHECK(o.out.find("137.03608") != std::string::npos);
    CHECK(o.out.find("-273.07") != std::string::npos);
}

TEST_CASE("input errors map to exit code 2")
{
    auto dir = std::filesystem::temp_directory_path() / "vacuum_test_report";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "broken.json") << "{\"constants\": [";

    RunConfig cfg = config(Subcommand::predict);
    cfg.constants_path = dir / "broken.json";
    auto o = run_with(cfg);
    CHECK(o.code == exit_input_error);
    CHECK(o.err.find("cannot load constants") != std::string::npos);

    cfg.constants_path = dir / "missing.json";
    CHECK(run_with(cfg).code == exit_input_error);

    RunConfig prec = config(Subcommand::predict);
    prec.precision = 0;
    CHECK(run_with(prec).code == exit_input_error);

    RunConfig tol = config(Subcommand::predict);
    tol.tolerance = 1e-3;
    CHECK(run_with(tol).code == exit_input_error);

    RunConfig neg = config(Subcommand::verify);
    neg.tolerance = -1.0;
    CHECK(run_with(neg).code == exit_input_error);
    std::filesystem::remove_all(dir);
}

TEST_CASE("format names")
{
    CHECK(parse_output_format("csv") == OutputFormat::csv);
    CHECK_THROWS_AS(parse_output_format("xml"), InputError);
    CHECK(to_string(Subcommand::sensitivity) == "sensitivity");
}
