#include "vacuum/constants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "vacuum/error.hpp"

namespace vacuum {

namespace detail {
std::string_view builtin_constants_json();
}

using nlohmann::json;

namespace {

constexpr double assigned_mu0 = 4.0e-7 * std::numbers::pi;

bool is_override(const std::string& source)
{
    std::string s = source;
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s == "override";
}

/// Expected SI dimension for keys with a fixed meaning.
std::optional<Dimension> expected_dimension(const std::string& key)
{
    if (key == "e")
        return dim::charge;
    if (key == "hbar")
        return dim::action;
    if (key == "mu0")
        return dim::permeability;
    if (key == "ref_epsilon0")
        return dim::permittivity;
    if (key == "ref_c")
        return dim::speed;
    if (key == "ref_inv_alpha")
        return dim::none;
    return std::nullopt;
}

void validate(const std::vector<ConstantRecord>& records, const std::vector<SpeciesRecord>& species)
{
    for (std::size_t i = 0; i < records.size(); ++i)
        for (std::size_t j = i + 1; j < records.size(); ++j)
            if (records[i].key == records[j].key)
                throw InputError("duplicate constant key '" + records[i].key + "'");

    auto find = [&](const std::string& key) -> const ConstantRecord* {
        for (const auto& r : records)
            if (r.key == key)
                return &r;
        return nullptr;
    };

    for (const auto& key : ConstantsSet::required_keys()) {
        const ConstantRecord* r = find(key);
        if (r == nullptr)
            throw InputError("missing required constant '" + key + "'");
        if (!(r->quantity.value() > 0.0))
            throw InputError("constant '" + key + "' must be strictly positive");
    }

    for (const auto& r : records) {
        if (auto d = expected_dimension(r.key); d && r.quantity.dimension() != *d)
            throw InputError("constant '" + r.key + "' must have dimension " + d->str() + ", got "
                             + r.quantity.dimension().str());
        // Masses may be written as rest energies (GeV), converted with c later.
        if (r.key.starts_with("m_")) {
            if (r.quantity.dimension() != dim::mass && r.quantity.dimension() != dim::energy)
                throw InputError("mass '" + r.key + "' must be given in kg or an energy unit");
            if (!(r.quantity.value() > 0.0))
                throw InputError("mass '" + r.key + "' must be strictly positive");
        }
    }

    const ConstantRecord* mu0 = find("mu0");
    if (!is_override(mu0->source) && relative_difference(mu0->quantity.value(), assigned_mu0) > 1e-15)
        throw InputError("mu0 must equal the assigned 4*pi*1e-7 H/m unless its source is \"override\"");

    for (std::size_t i = 0; i < species.size(); ++i) {
        const auto& s = species[i];
        for (std::size_t j = i + 1; j < species.size(); ++j)
            if (s.name == species[j].name)
                throw InputError("duplicate species '" + s.name + "'");
        if (s.kind != "lepton-pair" && s.kind != "quarkonium")
            throw InputError("species '" + s.name + "' has unknown kind '" + s.kind + "'");
        if (s.charge_fraction != Rational(1) && s.charge_fraction != Rational(2, 3)
            && s.charge_fraction != Rational(1, 3))
            throw InputError("species '" + s.name + "' charge fraction must be 1, 2/3 or 1/3");
        bool quark_fields = !s.bound_state_mass.empty() || !s.two_photon_width_min.empty()
                            || !s.two_photon_width_max.empty();
        if ((s.kind == "quarkonium") != quark_fields)
            throw InputError("species '" + s.name + "': bound-state mass and two-photon width are required for "
                             "quarkonia and forbidden otherwise");
        if (s.kind == "quarkonium" && (s.two_photon_width_min.empty() || s.two_photon_width_max.empty()))
            throw InputError("species '" + s.name + "' needs a two-photon width");
    }
}

std::string require_string(const json& j, const char* field, const std::string& context)
{
    auto it = j.find(field);
    if (it == j.end() || !it->is_string())
        throw InputError(context + ": missing string field '" + field + "'");
    return it->get<std::string>();
}

std::string optional_string(const json& j, const char* field)
{
    auto it = j.find(field);
    return it != j.end() && it->is_string() ? it->get<std::string>() : std::string();
}

std::vector<SpeciesRecord> parse_species(const json& list)
{
    std::vector<SpeciesRecord> out;
    for (const auto& j : list) {
        if (!j.is_object())
            throw InputError("species entries must be objects");
        SpeciesRecord s;
        s.name = require_string(j, "name", "species");
        std::string ctx = "species '" + s.name + "'";
        s.kind = require_string(j, "kind", ctx);
        s.constituent_mass = require_string(j, "constituent_mass", ctx);
        s.charge_fraction = Rational::parse(require_string(j, "charge_fraction", ctx));
        s.bound_state_mass = optional_string(j, "bound_state_mass");
        std::string single = optional_string(j, "two_photon_width");
        s.two_photon_width_min = optional_string(j, "two_photon_width_min");
        s.two_photon_width_max = optional_string(j, "two_photon_width_max");
        if (!single.empty()) {
            if (!s.two_photon_width_min.empty() || !s.two_photon_width_max.empty())
                throw InputError(ctx + ": give either two_photon_width or a min/max pair");
            s.two_photon_width_min = s.two_photon_width_max = single;
        }
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace

//---------------------------------------------------------------------------//

const std::vector<std::string>& ConstantsSet::required_keys()
{
    static const std::vector<std::string> keys = {"e",     "hbar",         "mu0",   "m_e",          "m_mu",
                                                  "m_tau", "ref_epsilon0", "ref_c", "ref_inv_alpha"};
    return keys;
}

ConstantsSet::ConstantsSet(std::vector<ConstantRecord> records, std::vector<SpeciesRecord> species,
                           std::string origin)
    : records_(std::move(records)), species_(std::move(species)), origin_(std::move(origin))
{
    validate(records_, species_);
}

const ConstantRecord* ConstantsSet::find(std::string_view key) const
{
    for (const auto& r : records_)
        if (r.key == key)
            return &r;
    return nullptr;
}

const ConstantRecord& ConstantsSet::record(std::string_view key) const
{
    const ConstantRecord* r = find(key);
    if (r == nullptr)
        throw InputError("unknown constant '" + std::string(key) + "'");
    return *r;
}

Quantity get_constant(const ConstantsSet& set, std::string_view key) { return set.get(key); }

Quantity quantity_from_unit(double value, std::string_view unit, double joules_per_ev)
{
    if (unit == "C")
        return Quantity(value, dim::charge);
    if (unit == "J·s" || unit == "J*s" || unit == "J s")
        return Quantity(value, dim::action);
    if (unit == "H/m")
        return Quantity(value, dim::permeability);
    if (unit == "kg")
        return Quantity(value, dim::mass);
    if (unit == "m/s")
        return Quantity(value, dim::speed);
    if (unit == "F/m")
        return Quantity(value, dim::permittivity);
    if (unit == "dimensionless")
        return Quantity(value, dim::none);
    if (unit == "1/s")
        return Quantity(value, dim::rate);
    if (unit == "eV" || unit == "keV" || unit == "GeV")
        return Quantity(energy_convert(value, parse_energy_unit(unit), EnergyUnit::J, joules_per_ev), dim::energy);
    throw InputError("unit '" + std::string(unit) + "' is not in the data-file whitelist");
}

ConstantsSet parse_constants(std::string_view text, std::string origin)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw InputError("cannot parse constants from " + origin + ": " + err.what());
    }
    if (!doc.is_object() || !doc.contains("constants") || !doc["constants"].is_array())
        throw InputError(origin + ": expected an object with a \"constants\" array");

    struct Raw
    {
        std::string key, unit, source;
        double value;
    };
    std::vector<Raw> raw;
    for (const auto& j : doc["constants"]) {
        if (!j.is_object())
            throw InputError(origin + ": constant entries must be objects");
        Raw r;
        r.key = require_string(j, "key", origin);
        r.unit = require_string(j, "unit", "constant '" + r.key + "'");
        r.source = require_string(j, "source", "constant '" + r.key + "'");
        auto v = j.find("value");
        if (v == j.end() || !v->is_number())
            throw InputError("constant '" + r.key + "' needs a numeric value");
        r.value = v->get<double>();
        if (!std::isfinite(r.value))
            throw InputError("constant '" + r.key + "' is not finite");
        raw.push_back(std::move(r));
    }

    // Energy units are scaled by the elementary charge of this same set.
    auto e_it = std::find_if(raw.begin(), raw.end(), [](const Raw& r) { return r.key == "e"; });
    if (e_it == raw.end())
        throw InputError(origin + ": missing required constant 'e'");
    double joules_per_ev = e_it->value;

    std::vector<ConstantRecord> records;
    records.reserve(raw.size());
    for (auto& r : raw) {
        Quantity q = quantity_from_unit(r.value, r.unit, joules_per_ev);
        records.push_back(ConstantRecord{r.key, r.value, r.unit, q, r.source});
    }

    std::vector<SpeciesRecord> species;
    if (doc.contains("species"))
        species = parse_species(doc["species"]);
    else if (origin != "built-in")
        species = load_default_constants().species();

    return ConstantsSet(std::move(records), std::move(species), std::move(origin));
}

ConstantsSet load_constants(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open constants file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_constants(buf.str(), path.string());
}

const ConstantsSet& load_default_constants()
{
    static const ConstantsSet builtin = parse_constants(detail::builtin_constants_json(), "built-in");
    return builtin;
}

ConstantsSet resolve_constants(const std::optional<std::filesystem::path>& explicit_path)
{
    if (explicit_path)
        return load_constants(*explicit_path);
    if (const char* dir = std::getenv("VACUUM_DATA_DIR"); dir != nullptr && *dir != '\0')
        return load_constants(std::filesystem::path(dir) / "constants.json");
    return load_default_constants();
}

std::string serialize_constants(const ConstantsSet& set)
{
    json doc;
    doc["constants"] = json::array();
    for (const auto& r : set.records())
        doc["constants"].push_back({{"key", r.key}, {"value", r.value}, {"unit", r.unit}, {"source", r.source}});
    doc["species"] = json::array();
    for (const auto& s : set.species()) {
        json j = {{"name", s.name},
                  {"kind", s.kind},
                  {"constituent_mass", s.constituent_mass},
                  {"charge_fraction", s.charge_fraction.str()}};
        if (!s.bound_state_mass.empty()) {
            j["bound_state_mass"] = s.bound_state_mass;
            j["two_photon_width_min"] = s.two_photon_width_min;
            j["two_photon_width_max"] = s.two_photon_width_max;
        }
        doc["species"].push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
}

double energy_convert(double value, EnergyUnit from, EnergyUnit to, const ConstantsSet& set)
{
    return energy_convert(value, from, to, set.e().value());
}

} // namespace vacuum
