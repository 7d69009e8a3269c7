#include "cyclofact/verify.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "cyclofact/formulas.hpp"
#include "cyclofact/lattice.hpp"

namespace cyclofact {

namespace {

using Results = std::vector<VerifyResult>;

void add(Results& out, const std::string& scope, const std::string& name,
         bool pass, std::string detail = "") {
  out.push_back({scope, name, pass, std::move(detail)});
}

struct Engine {
  GroupSpec spec;
  FiniteGroup group;
  SubgroupLattice lattice;

  explicit Engine(const std::string& text, unsigned jobs = 1)
      : spec(parse_group_spec(text)),
        group(build_group(spec)),
        lattice(enumerate_subgroups(group)),
        jobs_(jobs) {}

  std::int64_t cf2() { return cf2_bruteforce(lattice, copts()); }
  std::int64_t f2() { return f2_bruteforce(lattice, copts()); }
  const PermutabilityMatrix& pm() {
    if (!pm_) pm_ = permutability_matrix(lattice, copts());
    return *pm_;
  }
  CountingOptions copts() const { return CountingOptions{jobs_}; }

 private:
  unsigned jobs_;
  std::optional<PermutabilityMatrix> pm_;
};

std::string expect_str(long long want, long long got) {
  return "expected " + std::to_string(want) + ", computed " +
         std::to_string(got);
}

// mu(H, G) for every H, without filling the whole table.
std::vector<BigInt> mobius_top_column(const SubgroupLattice& lat) {
  const std::size_t n = lat.size();
  std::vector<BigInt> mu(n);
  mu[n - 1] = 1;
  for (std::size_t h = n - 1; h-- > 0;) {
    BigInt s = 0;
    for (std::size_t j = h + 1; j < n; ++j)
      if (lat.leq(h, j)) s += mu[j];
    mu[h] = BigInt(-s);
  }
  return mu;
}

bool is_elementary_abelian(const FiniteGroup& g, unsigned long long p) {
  if (!g.is_abelian()) return false;
  for (unsigned e = 1; e < g.order(); ++e)
    if (g.element_order(ElementId(e)) != p) return false;
  return true;
}

// ---------------------------------------------------------------- constants

void scope_constants(Results& out, const VerifyOptions& opts) {
  const char* scope = "constants";
  struct Known {
    const char* spec;
    long long cf2;
  };
  static const Known known[] = {
      {"cyclic:1", 1},           {"cyclic:2", 3},
      {"cyclic:3", 3},           {"cyclic:4", 5},
      {"cyclic:12", 15},         {"abelian:2^1,2^1", 6},
      {"abelian:3^1,3^1", 12},   {"abelian:2^1,2^2", 10},
      {"abelian:2^1,2^1,2^1", 0}, {"symmetric:3", 6},
      {"dihedral:4", 8},         {"quaternion:3", 6},
      {"dicyclic:1", 5},         {"dicyclic:2", 6},
      {"dicyclic:3", 12},        {"semidihedral:4", 12},
      {"modular:2,4", 14},       {"modular:3,3", 24},
      {"modular:5,3", 70},       {"symmetric:4", 0},
      {"alternating:4", 0},      {"symmetric:5", 0},
      {"alternating:5", 0},      {"product:(symmetric:3)*(cyclic:2)", 12},
      {"product:(symmetric:3)*(cyclic:5)", 18},
  };
  for (const Known& k : known) {
    Engine e(k.spec, opts.jobs);
    std::int64_t got = e.cf2();
    add(out, scope, std::string("CF2 ") + k.spec, got == k.cf2,
        got == k.cf2 ? "" : expect_str(k.cf2, got));
  }

  {
    Engine e("abelian:2^1,2^1", opts.jobs);
    std::int64_t got = e.f2();
    add(out, scope, "F2 abelian:2^1,2^1", got == 15,
        got == 15 ? "" : expect_str(15, got));
  }
  {
    Engine e("symmetric:3", opts.jobs);
    std::int64_t got = e.f2();
    add(out, scope, "F2 symmetric:3", got == 17,
        got == 17 ? "" : expect_str(17, got));
    Rational s = sd(e.lattice, e.pm());
    add(out, scope, "sd symmetric:3", s == make_rational(5, 6),
        to_string(s));
    Rational c = csd(e.lattice, e.pm());
    add(out, scope, "csd symmetric:3", c == make_rational(19, 25),
        to_string(c));
  }
  {
    Engine e("dihedral:4", opts.jobs);
    Rational c = csd(e.lattice, e.pm());
    add(out, scope, "csd dihedral:4", c == make_rational(41, 49),
        to_string(c));
    add(out, scope, "lattice sizes dihedral:4",
        e.lattice.size() == 10 && e.lattice.cyclic_indices().size() == 7,
        "|L| = " + std::to_string(e.lattice.size()) +
            ", |L1| = " + std::to_string(e.lattice.cyclic_indices().size()));
  }
  {
    Engine e("quaternion:4", opts.jobs);
    add(out, scope, "lattice sizes quaternion:4",
        e.lattice.size() == 11 && e.lattice.cyclic_indices().size() == 8,
        "|L| = " + std::to_string(e.lattice.size()) +
            ", |L1| = " + std::to_string(e.lattice.cyclic_indices().size()));
  }
}

// ----------------------------------------------------------------- abelian

void scope_abelian(Results& out, const VerifyOptions& opts) {
  const char* scope = "abelian";
  unsigned checked = 0, failed = 0;
  for (unsigned long long p : {2ull, 3ull, 5ull}) {
    // Nondecreasing exponent tuples of rank 1..3 within the order budget.
    for (unsigned a1 = 1;; ++a1) {
      unsigned long long o1 = 1;
      for (unsigned i = 0; i < a1; ++i) o1 *= p;
      if (o1 > opts.budget) break;
      {
        GroupSpec s = parse_group_spec(
            "abelian:" + std::to_string(p) + "^" + std::to_string(a1));
        Engine e(s.text(), opts.jobs);
        std::vector<unsigned> al{a1};
        long long want = cf2_abelian_p_formula(p, al);
        long long got = e.cf2();
        ++checked;
        if (got != want) {
          ++failed;
          add(out, scope, s.text(), false, expect_str(want, got));
        }
      }
      for (unsigned a2 = a1;; ++a2) {
        unsigned long long o2 = o1;
        for (unsigned i = 0; i < a2; ++i) o2 *= p;
        if (o2 > opts.budget) break;
        {
          std::string t = "abelian:" + std::to_string(p) + "^" +
                          std::to_string(a1) + "," + std::to_string(p) + "^" +
                          std::to_string(a2);
          Engine e(t, opts.jobs);
          std::vector<unsigned> al{a1, a2};
          long long want = cf2_abelian_p_formula(p, al);
          long long got = e.cf2();
          ++checked;
          if (got != want) {
            ++failed;
            add(out, scope, t, false, expect_str(want, got));
          }
        }
        for (unsigned a3 = a2;; ++a3) {
          unsigned long long o3 = o2;
          for (unsigned i = 0; i < a3; ++i) o3 *= p;
          if (o3 > opts.budget) break;
          std::string t = "abelian:" + std::to_string(p) + "^" +
                          std::to_string(a1) + "," + std::to_string(p) + "^" +
                          std::to_string(a2) + "," + std::to_string(p) + "^" +
                          std::to_string(a3);
          Engine e(t, opts.jobs);
          std::vector<unsigned> al{a1, a2, a3};
          long long want = cf2_abelian_p_formula(p, al);  // always 0
          long long got = e.cf2();
          ++checked;
          if (got != want) {
            ++failed;
            add(out, scope, t, false, expect_str(want, got));
          }
        }
      }
    }
  }
  add(out, scope, "formula vs enumeration sweep", failed == 0,
      std::to_string(checked) + " groups checked (p in {2,3,5}, rank <= 3, "
      "order <= " + std::to_string(opts.budget) + "), " +
      std::to_string(failed) + " mismatches");
}

// ---------------------------------------------------------------- dihedral

void scope_dihedral(Results& out, const VerifyOptions& opts) {
  const char* scope = "dihedral";
  unsigned checked = 0, failed = 0;
  unsigned n_max = std::min(30u, opts.budget / 2);
  for (unsigned n = 3; n <= n_max; ++n) {
    Engine e("dihedral:" + std::to_string(n), opts.jobs);
    long long want = cf2_dihedral_formula(n);
    std::int64_t bf = e.cf2();
    MobiusTable mob = mobius_table(e.lattice);
    std::int64_t mo = cf2_mobius(e.lattice, mob, e.pm());
    ++checked;
    if (bf != want || mo != want) {
      ++failed;
      add(out, scope, "dihedral:" + std::to_string(n), false,
          "formula " + std::to_string(want) + ", enumeration " +
              std::to_string(bf) + ", inversion " + std::to_string(mo));
    }
    unsigned long long nsubs = tau(n) + [&] {
      unsigned long long s = 0;
      for (auto d : divisors(n)) s += d;
      return s;
    }();
    if (e.lattice.size() != nsubs) {
      ++failed;
      add(out, scope, "subgroup count dihedral:" + std::to_string(n), false,
          expect_str((long long)nsubs, (long long)e.lattice.size()));
    }
  }
  add(out, scope, "three engines agree on 2n", failed == 0,
      std::to_string(checked) + " dihedral groups, n = 3.." +
          std::to_string(n_max));
}

// ------------------------------------------------- quaternion, semidihedral

void scope_two_power_family(Results& out, const char* scope,
                            const std::string& prefix, unsigned n_min,
                            long long (*formula)(unsigned),
                            const VerifyOptions& opts) {
  unsigned checked = 0, failed = 0;
  unsigned n = n_min;
  for (; (1ull << n) <= opts.budget; ++n) {
    Engine e(prefix + std::to_string(n), opts.jobs);
    long long want = formula(n);
    std::int64_t got = e.cf2();
    ++checked;
    if (got != want) {
      ++failed;
      add(out, scope, prefix + std::to_string(n), false,
          expect_str(want, got));
    }
  }
  add(out, scope, "formula vs enumeration sweep", checked > 0 && failed == 0,
      std::to_string(checked) + " groups, n = " + std::to_string(n_min) +
          ".." + std::to_string(n - 1));
}

// ----------------------------------------------------------------- modular

void scope_modular(Results& out, const VerifyOptions& opts) {
  const char* scope = "modular";
  unsigned checked = 0, failed = 0;
  for (unsigned long long p : {2ull, 3ull, 5ull, 7ull, 11ull}) {
    for (unsigned n = 3;; ++n) {
      unsigned long long order = 1;
      for (unsigned i = 0; i < n; ++i) order *= p;
      if (order > opts.budget) break;
      std::string t = "modular:" + std::to_string(p) + "," +
                      std::to_string(n);
      Engine e(t, opts.jobs);
      long long want = cf2_modular_formula(p, n);
      std::int64_t got = e.cf2();
      ++checked;
      if (got != want) {
        ++failed;
        add(out, scope, t, false, expect_str(want, got));
      }
      if (p != 2 && n == 3) {
        long long reduced = 3 * (long long)(p * p) - (long long)p;
        if (want != reduced || got != reduced) {
          ++failed;
          add(out, scope, t + " n=3 boundary", false,
              "3p^2 - p = " + std::to_string(reduced) + ", formula " +
                  std::to_string(want) + ", enumeration " +
                  std::to_string(got));
        }
      }
    }
  }
  add(out, scope, "formula vs enumeration sweep", checked > 0 && failed == 0,
      std::to_string(checked) + " groups, including every odd-p n=3 "
      "boundary case within the budget");
}

// ---------------------------------------------------------------- dicyclic

void scope_dicyclic(Results& out, const VerifyOptions& opts) {
  const char* scope = "dicyclic";
  unsigned checked = 0, failed = 0;
  unsigned n_max = std::min(12u, opts.budget / 4);
  unsigned chosen_ok = 0, swapped_ok = 0, adjudicated = 0;
  for (unsigned n = 1; n <= n_max; ++n) {
    Engine e("dicyclic:" + std::to_string(n), opts.jobs);
    long long want = cf2_dicyclic_formula(n);
    std::int64_t got = e.cf2();
    ++checked;
    if (got != want) {
      ++failed;
      add(out, scope, "dicyclic:" + std::to_string(n), false,
          expect_str(want, got) + " (" + cf2_dicyclic_case(n) + ")");
    }
    if (n >= 3) {
      // The two circulating parity assignments for n >= 3.
      long long chosen = n % 2 ? 4ll * n : 2ll * n;
      long long swapped = n % 2 ? 2ll * n : 4ll * n;
      ++adjudicated;
      if (got == chosen) ++chosen_ok;
      if (got == swapped) ++swapped_ok;
    }
  }
  add(out, scope, "formula vs enumeration sweep", failed == 0,
      std::to_string(checked) + " groups, n = 1.." + std::to_string(n_max));
  add(out, scope, "parity adjudication",
      adjudicated > 0 && chosen_ok == adjudicated &&
          swapped_ok < adjudicated,
      "4n-odd/2n-even matches " + std::to_string(chosen_ok) + "/" +
          std::to_string(adjudicated) +
          ", the swapped assignment only " + std::to_string(swapped_ok) +
          "/" + std::to_string(adjudicated));
}

// ------------------------------------------------------------- gendicyclic

void scope_gendicyclic(Results& out, const VerifyOptions& opts) {
  const char* scope = "gendicyclic";
  unsigned checked = 0, failed = 0;
  unsigned n_max = std::min(24u, opts.budget / 4);
  for (unsigned n = 1; n <= n_max; ++n) {
    std::vector<Gamma2Choice> choices;
    if (n % 2 == 0)
      choices = {Gamma2Choice::a_half, Gamma2Choice::b,
                 Gamma2Choice::a_half_b};
    else
      choices = {Gamma2Choice::b};
    for (Gamma2Choice c : choices) {
      std::string t = "gendicyclic:" + std::to_string(n) + "," +
                      gamma2_token(c);
      Engine e(t, opts.jobs);
      long long want = cf2_gen_dicyclic_formula(n, c);
      std::int64_t got = e.cf2();
      ++checked;
      if (got != want) {
        ++failed;
        add(out, scope, t, false,
            expect_str(want, got) + " (" + cf2_gen_dicyclic_case(n, c) +
                ")");
      }
    }
  }
  add(out, scope, "formula vs enumeration sweep", failed == 0,
      std::to_string(checked) +
          " (n, gamma^2) combinations, n = 1.." + std::to_string(n_max));

  if (n_max >= 2) {
    Engine e("gendicyclic:2,ahalf", opts.jobs);
    bool abelian = e.group.is_abelian();
    bool z2xz4 = abelian && e.group.element_order_census() ==
                                std::vector<unsigned>{1, 2, 2, 2, 4, 4, 4, 4};
    add(out, scope, "n=2 is the abelian group Z_2 x Z_4", z2xz4,
        "gamma has order 4, so the group cannot be elementary abelian");
  }
  if (n_max >= 4) {
    std::ostringstream det;
    bool ok = true;
    for (unsigned n = 4; n <= n_max; n += 4) {
      std::int64_t ah =
          Engine("gendicyclic:" + std::to_string(n) + ",ahalf", opts.jobs)
              .cf2();
      std::int64_t b =
          Engine("gendicyclic:" + std::to_string(n) + ",b", opts.jobs).cf2();
      std::int64_t ahb =
          Engine("gendicyclic:" + std::to_string(n) + ",ahalfb", opts.jobs)
              .cf2();
      ok = ok && ah == 0 && b == 4ll * n && ahb == 4ll * n;
      det << "n=" << n << ": (ahalf, b, ahalfb) = (" << ah << ", " << b
          << ", " << ahb << ") ";
    }
    add(out, scope, "gamma^2 split at n = 0 mod 4", ok,
        det.str() + "- the 4n cases are gamma^2 in {b, a^(n/2) b}");
  }
}

// -------------------------------------------------------------- identities

void scope_identities(Results& out, const VerifyOptions& opts) {
  const char* scope = "identities";
  auto specs = regression_set(std::min(100u, opts.budget));
  unsigned failed = 0;
  for (const GroupSpec& s : specs) {
    Engine e(s.text(), opts.jobs);
    MobiusTable mob = mobius_table(e.lattice);
    std::string bad;

    Rational sd_direct = sd(e.lattice, e.pm());
    Rational sd_id = sd_from_subgroup_f2(e.lattice);
    if (sd_direct != sd_id) bad += "sd-from-subgroup-F2 ";

    std::int64_t f2_direct = e.f2();
    std::int64_t f2_inv = f2_mobius(e.lattice, mob, e.pm());
    if (f2_direct != f2_inv) bad += "F2-by-inversion ";

    Rational csd_direct = csd(e.lattice, e.pm());
    Rational csd_id = csd_from_subgroup_cf2(e.lattice);
    if (csd_direct != csd_id) bad += "csd-from-subgroup-CF2 ";

    std::int64_t cf2_direct = e.cf2();
    std::int64_t cf2_inv = cf2_mobius(e.lattice, mob, e.pm());
    if (cf2_direct != cf2_inv) bad += "CF2-by-inversion ";

    if (!bad.empty()) {
      ++failed;
      add(out, scope, s.text(), false, "failing: " + bad);
    }
  }
  add(out, scope, "four lattice identities", failed == 0,
      std::to_string(specs.size()) + " groups, every identity exact");
}

// -------------------------------------------------------------------- hall

void scope_hall(Results& out, const VerifyOptions& opts) {
  const char* scope = "hall";
  unsigned budget = std::min(64u, opts.budget);
  std::vector<std::string> specs;
  for (unsigned k = 1; (1u << k) <= budget; ++k)
    specs.push_back("cyclic:" + std::to_string(1u << k));
  for (unsigned long long q : {3ull, 9ull, 27ull, 5ull, 25ull, 7ull, 49ull})
    if (q <= budget) specs.push_back("cyclic:" + std::to_string(q));
  for (const char* t :
       {"abelian:2^1,2^1", "abelian:2^1,2^2", "abelian:2^1,2^1,2^1",
        "abelian:2^1,2^1,2^2", "abelian:2^2,2^2", "abelian:2^1,2^1,2^1,2^1",
        "abelian:2^1,2^1,2^1,2^1,2^1", "abelian:2^1,2^1,2^1,2^1,2^1,2^1",
        "abelian:2^2,2^3", "abelian:3^1,3^1", "abelian:3^1,3^1,3^1",
        "abelian:3^1,3^2", "abelian:5^1,5^1", "abelian:7^1,7^1"})
    specs.push_back(t);
  for (const char* t : {"dihedral:4", "dihedral:8", "dihedral:16",
                        "dihedral:32", "quaternion:3", "quaternion:4",
                        "quaternion:5", "quaternion:6", "semidihedral:4",
                        "semidihedral:5", "semidihedral:6", "modular:2,4",
                        "modular:2,5", "modular:2,6", "modular:3,3",
                        "dicyclic:4", "dicyclic:8", "gendicyclic:4,ahalf",
                        "gendicyclic:4,b", "gendicyclic:8,ahalfb"})
    specs.push_back(t);
  for (const GroupSpec& s : regression_set(budget)) specs.push_back(s.text());
  std::sort(specs.begin(), specs.end());
  specs.erase(std::unique(specs.begin(), specs.end()), specs.end());

  unsigned checked = 0, failed = 0, elem = 0;
  for (const std::string& t : specs) {
    GroupSpec s = parse_group_spec(t);
    if (s.order() > budget) continue;
    Engine e(t, opts.jobs);
    auto f = factorize(e.group.order());
    if (f.size() != 1) continue;  // p-groups only
    auto [p, n] = f[0];
    bool ea = is_elementary_abelian(e.group, p);
    if (ea) ++elem;
    BigInt want = hall_mobius(p, n, ea);
    BigInt got = mobius_top_column(e.lattice)[0];
    ++checked;
    if (want != got) {
      ++failed;
      add(out, scope, t, false,
          "expected " + want.get_str() + ", computed " + got.get_str());
    }
  }
  add(out, scope, "mu(1, G) for p-groups", checked > 10 && failed == 0,
      std::to_string(checked) + " p-groups of order <= " +
          std::to_string(budget) + ", " + std::to_string(elem) +
          " of them elementary abelian");
}

// --------------------------------------------------------- dihedral-mobius

void scope_dihedral_mobius(Results& out, const VerifyOptions& opts) {
  const char* scope = "dihedral-mobius";
  unsigned n_max = std::min(20u, opts.budget / 2);
  unsigned checked = 0, failed = 0;
  for (unsigned n = 3; n <= n_max; ++n) {
    Engine e("dihedral:" + std::to_string(n), opts.jobs);
    const SubgroupLattice& lat = e.lattice;
    MobiusTable mob = mobius_table(lat);

    Bitset rotations(e.group.order());
    for (unsigned r = 0; r < n; ++r) rotations.set(r);

    std::map<unsigned long long, unsigned> dihedral_count;
    std::string bad;
    for (std::size_t h = 0; h < lat.size(); ++h) {
      const Subgroup& s = lat.subgroup(h);
      BigInt mu = mob.at(h, lat.top());
      if (s.members.is_subset_of(rotations)) {
        unsigned long long d = s.order;
        if (mu != dihedral_mobius_formula(n, d,
                                          DihedralSubgroupKind::rotation))
          bad += "mu(H_" + std::to_string(d) + ") ";
        if (lat.cyclic_count_below(h) != tau(d))
          bad += "|L1(H_" + std::to_string(d) + ")| ";
        if (csd_of_subgroup(lat, e.pm(), h) != 1)
          bad += "csd(H_" + std::to_string(d) + ") ";
      } else {
        unsigned long long d = s.order / 2;
        ++dihedral_count[d];
        if (mu != dihedral_mobius_formula(n, d,
                                          DihedralSubgroupKind::dihedral))
          bad += "mu(K_" + std::to_string(d) + ") ";
        if (lat.cyclic_count_below(h) != tau(d) + d)
          bad += "|L1(K_" + std::to_string(d) + ")| ";
        if (csd_of_subgroup(lat, e.pm(), h) !=
            csd_dihedral_subgroup_formula(d))
          bad += "csd(K_" + std::to_string(d) + ") ";
      }
    }
    for (auto d : divisors(n))
      if (dihedral_count[d] != n / d)
        bad += std::to_string(n / d) + " copies of K_" + std::to_string(d) +
               " ";
    ++checked;
    if (!bad.empty()) {
      ++failed;
      add(out, scope, "dihedral:" + std::to_string(n), false,
          "failing: " + bad);
    }
  }
  add(out, scope, "closed-form mu, poset sizes and csd", failed == 0,
      std::to_string(checked) + " dihedral groups, n = 3.." +
          std::to_string(n_max));

  // With the closed forms alone, the cyclic-poset inversion must telescope
  // to CF2(D_2n) = 2n; this needs no enumeration, so sweep far.
  unsigned ff = 0;
  for (unsigned long long n = 3; n <= 200; ++n) {
    Rational total = 0;
    for (auto d : divisors(n)) {
      Rational ht = Rational(BigInt(static_cast<unsigned long>(tau(d)))) *
                    Rational(BigInt(static_cast<unsigned long>(tau(d)))) *
                    Rational(dihedral_mobius_formula(
                        n, d, DihedralSubgroupKind::rotation));
      unsigned long long l1 = tau(d) + d;
      Rational kt = csd_dihedral_subgroup_formula(d) *
                    Rational(BigInt(static_cast<unsigned long>(l1 * l1))) *
                    Rational(dihedral_mobius_formula(
                        n, d, DihedralSubgroupKind::dihedral)) *
                    Rational(BigInt(static_cast<unsigned long>(n / d)));
      total += ht + kt;
    }
    if (total != Rational(BigInt(static_cast<unsigned long>(2 * n)))) ++ff;
  }
  add(out, scope, "formula-only inversion telescopes to 2n", ff == 0,
      "n = 3..200, " + std::to_string(ff) + " failures");
}

// -------------------------------------------------------------- properties

void scope_properties(Results& out, const VerifyOptions& opts) {
  const char* scope = "properties";
  auto specs = regression_set(std::min(100u, opts.budget));

  unsigned failed_order = 0, failed_wit = 0, checked = 0;
  for (const GroupSpec& s : specs) {
    Engine e(s.text(), opts.jobs);
    std::int64_t c = e.cf2(), f = e.f2();
    ++checked;
    bool cyclic = e.group.is_cyclic();
    if (!(0 <= c && c <= f) || ((c == f) != cyclic)) {
      ++failed_order;
      add(out, scope, "ordering " + s.text(), false,
          "CF2 = " + std::to_string(c) + ", F2 = " + std::to_string(f) +
              (cyclic ? " (cyclic)" : " (not cyclic)"));
    }

    // Independent witness search with literal product sets.
    bool witness = false;
    for (std::uint32_t i : e.lattice.cyclic_indices()) {
      for (std::uint32_t j : e.lattice.cyclic_indices()) {
        Bitset prod = product_set(e.group, e.lattice.subgroup(i),
                                  e.lattice.subgroup(j));
        if (prod.count() == e.group.order()) {
          witness = true;
          break;
        }
      }
      if (witness) break;
    }
    if (witness != (c > 0)) {
      ++failed_wit;
      add(out, scope, "witness " + s.text(), false,
          "CF2 = " + std::to_string(c) + " but literal witness search says " +
              (witness ? "factorizable" : "not factorizable"));
    }
  }
  add(out, scope, "0 <= CF2 <= F2, equality exactly for cyclic groups",
      failed_order == 0, std::to_string(checked) + " groups");
  add(out, scope, "CF2 > 0 exactly when a literal cyclic factorization "
      "exists", failed_wit == 0, std::to_string(checked) + " groups");

  // Defining property of mu: summed over the entire downset of K the
  // values cancel to zero for every K above the trivial subgroup.
  unsigned failed_mu = 0;
  for (const GroupSpec& s : specs) {
    Engine e(s.text(), opts.jobs);
    MobiusTable mob = mobius_table(e.lattice);
    for (std::size_t k = 0; k < e.lattice.size() && failed_mu == 0; ++k) {
      BigInt sum = 0;
      for (std::uint32_t h : e.lattice.below(k)) sum += mob.at(h, k);
      if (sum != BigInt(k == e.lattice.bottom() ? 1 : 0)) {
        ++failed_mu;
        add(out, scope, "mu interval sum " + s.text(), false,
            "interval under subgroup " + std::to_string(k) +
                " sums to " + sum.get_str());
      }
    }
  }
  add(out, scope, "Moebius interval sums vanish", failed_mu == 0,
      std::to_string(specs.size()) + " groups, every downset");

  // Permutability is equivalent to the product set being the join.
  unsigned failed_pm = 0;
  for (const char* t : {"symmetric:4", "dihedral:12", "dicyclic:6",
                        "alternating:5", "modular:3,3"}) {
    Engine e(t, opts.jobs);
    for (std::size_t i = 0; i < e.lattice.size(); ++i)
      for (std::size_t j = 0; j < e.lattice.size(); ++j) {
        bool p = e.pm().permutes(i, j);
        bool q = product_set_order(e.lattice.subgroup(i),
                                   e.lattice.subgroup(j)) ==
                 e.lattice.subgroup(e.lattice.join(i, j)).order;
        bool sym = e.pm().permutes(j, i);
        if (p != q || p != sym) ++failed_pm;
      }
  }
  add(out, scope, "HK = KH iff |HK| = |<H, K>|, and symmetry",
      failed_pm == 0, "5 groups, every subgroup pair");

  // Groups in which every pair of subgroups permutes.
  unsigned failed_one = 0;
  for (const char* t : {"abelian:2^1,2^2", "abelian:3^1,3^1", "cyclic:36",
                        "quaternion:3", "modular:2,4", "modular:3,3",
                        "modular:5,3"}) {
    Engine e(t, opts.jobs);
    if (sd(e.lattice, e.pm()) != 1 || csd(e.lattice, e.pm()) != 1)
      ++failed_one;
  }
  add(out, scope, "sd = csd = 1 for abelian, Hamiltonian and modular groups",
      failed_one == 0, "7 groups");

  {
    Engine e("cyclic:1", opts.jobs);
    bool ok = e.cf2() == 1 && e.f2() == 1 && sd(e.lattice, e.pm()) == 1 &&
              csd(e.lattice, e.pm()) == 1;
    add(out, scope, "trivial group degenerates to 1 everywhere", ok);
  }

  // Coprime product rule, plus the counterexample that shows the coprimality
  // hypothesis is needed.
  struct Pair {
    const char* a;
    const char* b;
  };
  static const Pair pairs[] = {
      {"symmetric:3", "cyclic:5"},   {"dihedral:4", "cyclic:3"},
      {"quaternion:3", "cyclic:9"},  {"cyclic:4", "cyclic:3"},
      {"dihedral:5", "cyclic:3"},    {"semidihedral:4", "cyclic:5"},
      {"modular:3,3", "cyclic:2"},   {"dicyclic:3", "cyclic:5"},
      {"alternating:4", "cyclic:5"}, {"cyclic:8", "cyclic:9"},
      {"dicyclic:2", "cyclic:3"},    {"symmetric:3", "cyclic:7"},
  };
  unsigned failed_prod = 0;
  for (const Pair& pr : pairs) {
    Engine ea(pr.a, opts.jobs), eb(pr.b, opts.jobs);
    Engine ep("product:(" + std::string(pr.a) + ")*(" + pr.b + ")",
              opts.jobs);
    const SubgroupLattice* parts[] = {&ea.lattice, &eb.lattice};
    if (cf2_coprime_product(parts) != ep.cf2()) ++failed_prod;
  }
  add(out, scope, "CF2 multiplies over coprime direct factors",
      failed_prod == 0, std::to_string(std::size(pairs)) + " factor pairs");

  {
    Engine ea("symmetric:3", opts.jobs), eb("cyclic:2", opts.jobs);
    Engine ep("product:(symmetric:3)*(cyclic:2)", opts.jobs);
    std::int64_t direct = ep.cf2();
    std::int64_t factorwise = ea.cf2() * eb.cf2();
    bool threw = false;
    try {
      const SubgroupLattice* parts[] = {&ea.lattice, &eb.lattice};
      cf2_coprime_product(parts);
    } catch (const ValidationError&) {
      threw = true;
    }
    add(out, scope, "non-coprime factors break the product rule",
        direct == 12 && factorwise == 18 && threw,
        "CF2(S_3 x Z_2) = " + std::to_string(direct) +
            ", CF2(S_3) CF2(Z_2) = " + std::to_string(factorwise) +
            ", and the product helper rejects the pair");
  }
}

// ------------------------------------------------------------ numbertheory

void scope_numbertheory(Results& out, const VerifyOptions&) {
  const char* scope = "numbertheory";

  unsigned bad = 0;
  for (unsigned long long n = 1; n <= 1000; ++n) {
    long long s = 0;
    for (auto d : divisors(n))
      s += (long long)tau(d) * mobius_nt(n / d);
    if (s != 1) ++bad;
  }
  add(out, scope, "sum tau(d) mu(n/d) = 1", bad == 0, "n = 1..1000");

  bad = 0;
  for (unsigned long long n = 1; n <= 1000; ++n) {
    long long s = 0;
    for (auto d : divisors(n)) s += (d % 2 ? 1ll : 2ll) * mobius_nt(n / d);
    long long want = n <= 2 ? 1 : 0;
    if (s != want) ++bad;
  }
  add(out, scope, "sum i_d mu(n/d) vanishes past n = 2", bad == 0,
      "i_d = 1 for odd d, 2 for even d; n = 1..1000");

  bad = 0;
  for (unsigned n = 4; n <= 64; ++n)
    if (cf2_modular_formula(2, n) != 4ll * n - 2) ++bad;
  add(out, scope, "modular p=2 reduces to 4n - 2", bad == 0, "n = 4..64");

  bad = 0;
  for (unsigned long long m = 1; m <= 200; ++m)
    for (unsigned long long n = 1; m * n <= 200; ++n) {
      if (std::gcd(m, n) != 1) continue;
      if (cf2_cyclic_formula(m * n) !=
          cf2_cyclic_formula(m) * cf2_cyclic_formula(n))
        ++bad;
    }
  add(out, scope, "cyclic formula is multiplicative", bad == 0,
      "coprime m n <= 200");

  bad = 0;
  for (unsigned long long n = 1; n <= 200; ++n) {
    long long chained = 1;
    for (auto [p, a] : factorize(n)) {
      const unsigned alpha[] = {a};
      chained *= cf2_abelian_p_formula(p, alpha);
    }
    if (chained != cf2_cyclic_formula(n)) ++bad;
  }
  add(out, scope, "cyclic formula chains through the abelian one", bad == 0,
      "per prime power, n = 1..200");

  bad = 0;
  for (unsigned long long n = 1; n <= 500; ++n) {
    auto dv = divisors(n);
    if (!std::is_sorted(dv.begin(), dv.end()) || dv.size() != tau(n)) ++bad;
    for (auto d : dv)
      if (n % d) ++bad;
  }
  add(out, scope, "divisor list is sorted, complete and consistent with tau",
      bad == 0, "n = 1..500");

  bad = 0;
  for (unsigned long long n = 2; n <= 2000; ++n) {
    auto f = factorize(n);
    bool prime = f.size() == 1 && f[0].second == 1;
    if (prime != is_prime(n)) ++bad;
    unsigned long long back = 1;
    for (auto [p, a] : f)
      for (unsigned i = 0; i < a; ++i) back *= p;
    if (back != n) ++bad;
  }
  add(out, scope, "factorization round-trips and matches primality",
      bad == 0, "n = 2..2000");
}

}  // namespace

std::vector<std::string> verify_scopes() {
  return {"constants",   "abelian",     "dihedral",        "quaternion",
          "semidihedral", "modular",    "dicyclic",        "gendicyclic",
          "identities",  "hall",        "dihedral-mobius", "properties",
          "numbertheory"};
}

std::vector<VerifyResult> verify_scope(const std::string& scope,
                                       const VerifyOptions& opts) {
  Results out;
  if (scope == "constants")
    scope_constants(out, opts);
  else if (scope == "abelian")
    scope_abelian(out, opts);
  else if (scope == "dihedral")
    scope_dihedral(out, opts);
  else if (scope == "quaternion")
    scope_two_power_family(out, "quaternion", "quaternion:", 3,
                           &cf2_quaternion_formula, opts);
  else if (scope == "semidihedral")
    scope_two_power_family(out, "semidihedral", "semidihedral:", 4,
                           &cf2_semidihedral_formula, opts);
  else if (scope == "modular")
    scope_modular(out, opts);
  else if (scope == "dicyclic")
    scope_dicyclic(out, opts);
  else if (scope == "gendicyclic")
    scope_gendicyclic(out, opts);
  else if (scope == "identities")
    scope_identities(out, opts);
  else if (scope == "hall")
    scope_hall(out, opts);
  else if (scope == "dihedral-mobius")
    scope_dihedral_mobius(out, opts);
  else if (scope == "properties")
    scope_properties(out, opts);
  else if (scope == "numbertheory")
    scope_numbertheory(out, opts);
  else
    throw ValidationError("unknown verify scope: " + scope);
  return out;
}

std::vector<VerifyResult> run_verify(std::span<const std::string> scopes,
                                     const VerifyOptions& opts) {
  std::vector<std::string> all;
  if (scopes.empty()) all = verify_scopes();
  std::span<const std::string> todo =
      scopes.empty() ? std::span<const std::string>(all) : scopes;
  Results out;
  for (const std::string& s : todo) {
    Results r = verify_scope(s, opts);
    out.insert(out.end(), std::make_move_iterator(r.begin()),
               std::make_move_iterator(r.end()));
  }
  return out;
}

std::vector<GroupSpec> regression_set(unsigned max_order) {
  static const char* const texts[] = {
      "cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:6", "cyclic:8",
      "cyclic:12", "cyclic:16", "cyclic:24", "cyclic:30", "cyclic:36",
      "cyclic:48", "cyclic:60", "cyclic:64", "cyclic:96", "cyclic:100",
      "abelian:2^1,2^1", "abelian:2^1,2^2", "abelian:2^2,2^2",
      "abelian:2^1,2^3", "abelian:2^1,2^1,2^1", "abelian:2^1,2^1,2^2",
      "abelian:2^2,2^3", "abelian:3^1,3^1", "abelian:3^1,3^2",
      "abelian:3^1,3^1,3^1", "abelian:5^1,5^1", "abelian:2^2,3^1",
      "abelian:2^1,2^2,3^1",
      "dihedral:3", "dihedral:4", "dihedral:5", "dihedral:6", "dihedral:8",
      "dihedral:9", "dihedral:10", "dihedral:12", "dihedral:15",
      "dihedral:16", "dihedral:24", "dihedral:30", "dihedral:48",
      "quaternion:3", "quaternion:4", "quaternion:5",
      "semidihedral:4", "semidihedral:5", "semidihedral:6",
      "modular:2,4", "modular:2,5", "modular:2,6", "modular:3,3",
      "modular:3,4",
      "dicyclic:1", "dicyclic:2", "dicyclic:3", "dicyclic:4", "dicyclic:5",
      "dicyclic:6", "dicyclic:7", "dicyclic:8", "dicyclic:9", "dicyclic:10",
      "dicyclic:12", "dicyclic:15", "dicyclic:20", "dicyclic:24",
      "gendicyclic:1,b", "gendicyclic:2,ahalf", "gendicyclic:2,b",
      "gendicyclic:2,ahalfb", "gendicyclic:3,b", "gendicyclic:4,ahalf",
      "gendicyclic:4,b", "gendicyclic:4,ahalfb", "gendicyclic:5,b",
      "gendicyclic:6,ahalf", "gendicyclic:6,b", "gendicyclic:6,ahalfb",
      "gendicyclic:7,b", "gendicyclic:8,ahalf", "gendicyclic:8,b",
      "gendicyclic:8,ahalfb", "gendicyclic:9,b", "gendicyclic:10,b",
      "gendicyclic:12,ahalf", "gendicyclic:12,ahalfb", "gendicyclic:16,b",
      "gendicyclic:20,ahalf", "gendicyclic:24,ahalfb",
      "symmetric:1", "symmetric:2", "symmetric:3", "symmetric:4",
      "symmetric:5", "alternating:3", "alternating:4", "alternating:5",
      "product:(symmetric:3)*(cyclic:2)", "product:(symmetric:3)*(cyclic:5)",
      "product:(quaternion:3)*(cyclic:9)", "product:(dihedral:4)*(cyclic:3)",
      "product:(cyclic:4)*(cyclic:3)", "product:(alternating:4)*(cyclic:7)",
      "product:(dihedral:5)*(cyclic:3)",
  };
  std::vector<GroupSpec> out;
  std::set<std::string> seen;
  for (const char* t : texts) {
    GroupSpec s = parse_group_spec(t);
    if (s.order() > max_order) continue;
    if (seen.insert(s.text()).second) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace cyclofact
