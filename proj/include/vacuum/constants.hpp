#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vacuum/quantity.hpp"
#include "vacuum/rational.hpp"

namespace vacuum {

/// One named constant. `value` and `unit` are kept as written in the data
/// file so a set can be serialised back without loss; `quantity` is the SI
/// form every computation uses.
struct ConstantRecord
{
    std::string key;
    double value = 0.0;
    std::string unit;
    Quantity quantity;
    std::string source;
};

/// Raw species definition from a data file. Mass and width fields are keys
/// into the constants of the same set.
struct SpeciesRecord
{
    std::string name;
    std::string kind; ///< "lepton-pair" or "quarkonium"
    std::string constituent_mass;
    Rational charge_fraction{1};
    std::string bound_state_mass;
    std::string two_photon_width_min;
    std::string two_photon_width_max;
};

/// Immutable, validated registry of constants and species definitions.
class ConstantsSet
{
  public:
    static const std::vector<std::string>& required_keys();

    ConstantsSet(std::vector<ConstantRecord> records, std::vector<SpeciesRecord> species, std::string origin);

    const std::vector<ConstantRecord>& records() const { return records_; }
    const std::vector<SpeciesRecord>& species() const { return species_; }
    /// Where the set came from: "built-in" or a file path.
    const std::string& origin() const { return origin_; }

    bool contains(std::string_view key) const { return find(key) != nullptr; }
    const ConstantRecord* find(std::string_view key) const;
    const ConstantRecord& record(std::string_view key) const;

    /// Stored SI quantity; InputError for an unknown key.
    Quantity get(std::string_view key) const { return record(key).quantity; }

    // Shorthands for the constants every formula needs.
    Quantity e() const { return get("e"); }
    Quantity hbar() const { return get("hbar"); }
    Quantity mu0() const { return get("mu0"); }
    Quantity ref_epsilon0() const { return get("ref_epsilon0"); }
    Quantity ref_c() const { return get("ref_c"); }
    double ref_inv_alpha() const { return get("ref_inv_alpha").value(); }
    double ref_alpha() const { return 1.0 / ref_inv_alpha(); }

  private:
    std::vector<ConstantRecord> records_;
    std::vector<SpeciesRecord> species_;
    std::string origin_;
};

Quantity get_constant(const ConstantsSet& set, std::string_view key);

/// Parses the JSON data-file format. `origin` is recorded on the set.
ConstantsSet parse_constants(std::string_view text, std::string origin);

/// Loads and validates a data file.
ConstantsSet load_constants(const std::filesystem::path& path);

/// The bundled data file compiled into the library.
const ConstantsSet& load_default_constants();

/// Resolution order: explicit path, then $VACUUM_DATA_DIR/constants.json,
/// then the built-in default.
ConstantsSet resolve_constants(const std::optional<std::filesystem::path>& explicit_path);

/// Writes the set back in the data-file format.
std::string serialize_constants(const ConstantsSet& set);

/// SI conversion for one of the whitelisted data-file units. Energy units
/// need the elementary charge (J per eV).
Quantity quantity_from_unit(double value, std::string_view unit, double joules_per_ev);

/// energy_convert using the loaded elementary charge.
double energy_convert(double value, EnergyUnit from, EnergyUnit to, const ConstantsSet& set);

} // namespace vacuum
