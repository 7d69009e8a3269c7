#include "cyclofact/report.hpp"

#include <limits>
#include <sstream>
#include <type_traits>

#include "json.hpp"

#include "cyclofact/formulas.hpp"

namespace cyclofact {

namespace {

std::optional<std::int64_t> formula_value(const GroupSpec& spec,
                                          std::string& note) {
  auto v = cf2_formula_for(spec);
  if (!v) {
    note = "no closed form for this family at these parameters";
    return std::nullopt;
  }
  return static_cast<std::int64_t>(*v);
}

void add_match(OutputRecord& r, const std::string& name, bool agreed) {
  r.match_flags.emplace_back(name, agreed);
  if (!agreed) r.ok = false;
}

}  // namespace

OutputRecord compute_record(const GroupSpec& spec, const Quantities& q,
                            const Methods& m, const GroupConfig& gcfg,
                            const CountingOptions& copts) {
  OutputRecord r;
  r.spec = spec.text();
  unsigned long long order = spec.order();
  if (order > std::numeric_limits<unsigned>::max())
    throw CapacityError("group order " + std::to_string(order) +
                        " is out of range");
  r.order = unsigned(order);

  if (m.formula && q.cf2) r.cf2_formula = formula_value(spec, r.note);

  bool need_lattice = (m.bruteforce || m.mobius) &&
                      (q.cf2 || q.f2 || q.sd || q.csd);
  if (need_lattice) {
    FiniteGroup g = build_group(spec, gcfg);
    SubgroupLattice lat = enumerate_subgroups(g);
    PermutabilityMatrix pm = permutability_matrix(lat, copts);

    std::optional<std::int64_t> f2_bf, f2_mob;
    std::optional<Rational> sd_bf, sd_id, csd_bf, csd_id;

    if (m.bruteforce) {
      if (q.cf2) r.cf2_bf = cf2_bruteforce(lat, copts);
      if (q.f2) f2_bf = f2_bruteforce(lat, copts);
      if (q.sd) sd_bf = sd(lat, pm);
      if (q.csd) csd_bf = csd(lat, pm);
    }
    if (m.mobius) {
      MobiusTable mob = mobius_table(lat);
      if (q.cf2) r.cf2_mob = cf2_mobius(lat, mob, pm);
      if (q.f2) f2_mob = f2_mobius(lat, mob, pm);
      if (q.sd) sd_id = sd_from_subgroup_f2(lat);
      if (q.csd) csd_id = csd_from_subgroup_cf2(lat);
    }

    r.f2 = f2_bf ? f2_bf : f2_mob;
    r.sd_value = sd_bf ? sd_bf : sd_id;
    r.csd_value = csd_bf ? csd_bf : csd_id;

    if (f2_bf && f2_mob) add_match(r, "f2_bf_vs_mobius", *f2_bf == *f2_mob);
    if (sd_bf && sd_id) add_match(r, "sd_bf_vs_identity", *sd_bf == *sd_id);
    if (csd_bf && csd_id)
      add_match(r, "csd_bf_vs_identity", *csd_bf == *csd_id);
  }

  if (r.cf2_bf && r.cf2_mob)
    add_match(r, "cf2_bf_vs_mob", *r.cf2_bf == *r.cf2_mob);
  if (r.cf2_bf && r.cf2_formula)
    add_match(r, "cf2_bf_vs_formula", *r.cf2_bf == *r.cf2_formula);
  if (!r.cf2_bf && r.cf2_mob && r.cf2_formula)
    add_match(r, "cf2_mob_vs_formula", *r.cf2_mob == *r.cf2_formula);
  return r;
}

std::string csv_header() {
  return "spec,order,cf2_bf,cf2_mob,cf2_formula,f2,sd,csd,status";
}

namespace {

template <typename T>
std::string cell(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, Rational>)
    return to_string(*v);
  else
    return std::to_string(*v);
}

}  // namespace

std::string to_csv(const OutputRecord& r) {
  std::string s;
  s += r.spec;
  s += ',' + std::to_string(r.order);
  s += ',' + cell(r.cf2_bf);
  s += ',' + cell(r.cf2_mob);
  s += ',' + cell(r.cf2_formula);
  s += ',' + cell(r.f2);
  s += ',' + cell(r.sd_value);
  s += ',' + cell(r.csd_value);
  s += r.ok ? ",OK" : ",MISMATCH";
  return s;
}

std::string to_json(const OutputRecord& r) {
  nlohmann::json j;
  j["spec"] = r.spec;
  j["order"] = r.order;
  if (r.cf2_bf) j["cf2_bf"] = *r.cf2_bf;
  if (r.cf2_mob) j["cf2_mob"] = *r.cf2_mob;
  if (r.cf2_formula) j["cf2_formula"] = *r.cf2_formula;
  if (r.f2) j["f2"] = *r.f2;
  if (r.sd_value) j["sd"] = to_string(*r.sd_value);
  if (r.csd_value) j["csd"] = to_string(*r.csd_value);
  nlohmann::json flags = nlohmann::json::object();
  for (const auto& [name, agreed] : r.match_flags) flags[name] = agreed;
  j["matches"] = flags;
  if (!r.note.empty()) j["note"] = r.note;
  j["ok"] = r.ok;
  return j.dump();
}

std::string to_text(const OutputRecord& r) {
  std::ostringstream os;
  os << r.spec << " (order " << r.order << ")\n";
  auto line = [&](const char* label, const std::string& v) {
    if (!v.empty()) os << "  " << label << v << "\n";
  };
  line("CF2 (enumeration):     ", cell(r.cf2_bf));
  line("CF2 (Moebius):         ", cell(r.cf2_mob));
  line("CF2 (closed formula):  ", cell(r.cf2_formula));
  line("F2:                    ", cell(r.f2));
  line("sd:                    ", cell(r.sd_value));
  line("csd:                   ", cell(r.csd_value));
  for (const auto& [name, agreed] : r.match_flags)
    os << "  " << name << ": " << (agreed ? "agree" : "MISMATCH") << "\n";
  if (!r.note.empty()) os << "  note: " << r.note << "\n";
  os << "  status: " << (r.ok ? "OK" : "MISMATCH") << "\n";
  return os.str();
}

std::vector<OutputRecord> table_records(const std::string& family_token,
                                        long long lo, long long hi,
                                        const Quantities& q, const Methods& m,
                                        const GroupConfig& gcfg,
                                        const CountingOptions& copts) {
  if (lo < 0 || hi < lo)
    throw ValidationError("table range must satisfy 0 <= lo <= hi");

  std::string prefix;
  long long min_param = 1;
  if (family_token == "cyclic" || family_token == "dicyclic") {
    prefix = family_token + ":";
  } else if (family_token == "dihedral") {
    prefix = "dihedral:";
    min_param = 3;
  } else if (family_token == "quaternion") {
    prefix = "quaternion:";
    min_param = 3;
  } else if (family_token == "semidihedral") {
    prefix = "semidihedral:";
    min_param = 4;
  } else if (family_token == "symmetric" || family_token == "alternating") {
    prefix = family_token + ":";
  } else if (family_token.starts_with("modular")) {
    std::string p = family_token.substr(7);
    if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos)
      throw ValidationError("modular table token needs a prime, e.g. "
                            "modular2");
    prefix = "modular:" + p + ",";
    min_param = 3;
  } else {
    throw ValidationError("unknown table family: " + family_token);
  }

  std::vector<OutputRecord> out;
  for (long long i = std::max(lo, min_param); i <= hi; ++i) {
    GroupSpec spec = parse_group_spec(prefix + std::to_string(i));
    out.push_back(compute_record(spec, q, m, gcfg, copts));
  }
  return out;
}

std::string lattice_dump_json(const GroupSpec& spec, const GroupConfig& gcfg) {
  FiniteGroup g = build_group(spec, gcfg);
  SubgroupLattice lat = enumerate_subgroups(g);
  MobiusTable mob = mobius_table(lat);

  nlohmann::json j;
  j["group"] = spec.text();
  j["order"] = g.order();
  j["lattice_size"] = lat.size();
  j["cyclic_poset_size"] = lat.cyclic_indices().size();

  nlohmann::json subs = nlohmann::json::array();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const Subgroup& s = lat.subgroup(i);
    nlohmann::json e;
    e["index"] = i;
    e["order"] = s.order;
    e["is_cyclic"] = s.is_cyclic;
    e["members"] = s.members.to_indices();
    subs.push_back(std::move(e));
  }
  j["subgroups"] = std::move(subs);

  nlohmann::json pairs = nlohmann::json::array();
  for (std::size_t k = 0; k < lat.size(); ++k)
    for (std::uint32_t h : lat.below(k))
      if (h != k) pairs.push_back({h, k});
  j["inclusion_pairs"] = std::move(pairs);

  nlohmann::json mu = nlohmann::json::array();
  for (std::size_t k = 0; k < lat.size(); ++k)
    for (std::uint32_t h : lat.below(k)) {
      const BigInt& v = mob.at(h, k);
      nlohmann::json e;
      e["h"] = h;
      e["k"] = k;
      if (v.fits_slong_p())
        e["value"] = static_cast<std::int64_t>(v.get_si());
      else
        e["value"] = v.get_str();
      mu.push_back(std::move(e));
    }
  j["mobius"] = std::move(mu);
  return j.dump(2);
}

}  // namespace cyclofact
