#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclofact/counting.hpp"
#include "cyclofact/families.hpp"

namespace cyclofact {

enum class OutputFormat { text, csv, json };

struct Quantities {
  bool cf2 = true;
  bool f2 = true;
  bool sd = true;
  bool csd = true;
};

struct Methods {
  bool bruteforce = true;
  bool mobius = true;
  bool formula = true;
};

// One group's computed invariants plus cross-method agreement.
struct OutputRecord {
  std::string spec;
  unsigned order = 0;
  std::optional<std::int64_t> cf2_bf;
  std::optional<std::int64_t> cf2_mob;
  std::optional<std::int64_t> cf2_formula;
  std::optional<std::int64_t> f2;
  std::optional<Rational> sd_value;
  std::optional<Rational> csd_value;
  std::vector<std::pair<std::string, bool>> match_flags;
  std::string note;  // e.g. no closed form known for the family
  bool ok = true;    // every requested comparison agreed
};

OutputRecord compute_record(const GroupSpec& spec, const Quantities& q,
                            const Methods& m, const GroupConfig& gcfg = {},
                            const CountingOptions& copts = {});

// CSV column set is fixed; unsolicited cells stay empty.
std::string csv_header();
std::string to_csv(const OutputRecord& r);
std::string to_json(const OutputRecord& r);
std::string to_text(const OutputRecord& r);

// Family sweep for the `table` command: family token (cyclic, dihedral,
// quaternion, semidihedral, modular<p>, dicyclic, symmetric, alternating)
// over an inclusive parameter range.
std::vector<OutputRecord> table_records(const std::string& family_token,
                                        long long lo, long long hi,
                                        const Quantities& q, const Methods& m,
                                        const GroupConfig& gcfg = {},
                                        const CountingOptions& copts = {});

// Full lattice dump as JSON: subgroups with members, every inclusion pair,
// and the full Moebius table. Deterministic for a given spec.
std::string lattice_dump_json(const GroupSpec& spec,
                              const GroupConfig& gcfg = {});

}  // namespace cyclofact
