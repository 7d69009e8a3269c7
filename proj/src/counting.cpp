#include "cyclofact/counting.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace cyclofact {

namespace {

unsigned effective_jobs(const CountingOptions& opts, std::size_t work) {
  unsigned j = opts.jobs ? opts.jobs : std::thread::hardware_concurrency();
  if (j == 0) j = 1;
  return unsigned(std::min<std::size_t>(j, std::max<std::size_t>(work, 1)));
}

// HK as a set equals KH iff every product k*h lands inside HK; the two sets
// always have the same size, so one-sided containment is enough.
bool permutes_literal(const FiniteGroup& g,
                      const std::vector<std::uint32_t>& h,
                      const std::vector<std::uint32_t>& k, Bitset& scratch) {
  scratch.clear();
  for (auto a : h)
    for (auto b : k) scratch.set(g.mul(ElementId(a), ElementId(b)));
  for (auto b : k)
    for (auto a : h)
      if (!scratch.test(g.mul(ElementId(b), ElementId(a)))) return false;
  return true;
}

std::vector<std::vector<std::uint32_t>> member_lists(
    const SubgroupLattice& lat) {
  std::vector<std::vector<std::uint32_t>> m(lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i)
    m[i] = lat.subgroup(i).members.to_indices();
  return m;
}

Rational ratio_of_counts(const BigInt& hits, const BigInt& total) {
  return make_rational(hits, total);
}

}  // namespace

PermutabilityMatrix permutability_matrix(const SubgroupLattice& lat,
                                         const CountingOptions& opts) {
  const FiniteGroup& g = lat.group();
  const std::size_t n = lat.size();
  auto members = member_lists(lat);

  PermutabilityMatrix pm;
  pm.rows_.assign(n, Bitset(n));

  auto fill_row = [&](std::size_t i, Bitset& scratch) {
    Bitset& row = pm.rows_[i];
    for (std::size_t j = 0; j < n; ++j) {
      bool p;
      if (i == j || i == 0 || j == 0 || i == n - 1 || j == n - 1 ||
          lat.leq(i, j) || lat.leq(j, i)) {
        p = true;  // nested, trivial or full factors always permute
      } else {
        p = permutes_literal(g, members[i], members[j], scratch);
      }
      if (p) row.set(j);
    }
  };

  unsigned jobs = effective_jobs(opts, n);
  if (jobs <= 1) {
    Bitset scratch(g.order());
    for (std::size_t i = 0; i < n; ++i) fill_row(i, scratch);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        Bitset scratch(g.order());
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= n) break;
          fill_row(i, scratch);
        }
      });
    for (auto& th : pool) th.join();
  }
  return pm;
}

std::int64_t cf2_of_subgroup(const SubgroupLattice& lat, std::size_t h) {
  const auto& bl = lat.below(h);
  unsigned long long target = lat.subgroup(h).order;
  std::int64_t count = 0;
  for (std::uint32_t i : bl) {
    if (!lat.subgroup(i).is_cyclic) continue;
    for (std::uint32_t j : bl) {
      if (!lat.subgroup(j).is_cyclic) continue;
      if (product_set_order(lat.subgroup(i), lat.subgroup(j)) == target)
        ++count;
    }
  }
  return count;
}

std::int64_t f2_of_subgroup(const SubgroupLattice& lat, std::size_t h) {
  const auto& bl = lat.below(h);
  unsigned long long target = lat.subgroup(h).order;
  std::int64_t count = 0;
  for (std::uint32_t i : bl)
    for (std::uint32_t j : bl)
      if (product_set_order(lat.subgroup(i), lat.subgroup(j)) == target)
        ++count;
  return count;
}

std::int64_t cf2_bruteforce(const SubgroupLattice& lat,
                            const CountingOptions&) {
  return cf2_of_subgroup(lat, lat.top());
}

std::int64_t f2_bruteforce(const SubgroupLattice& lat,
                           const CountingOptions&) {
  return f2_of_subgroup(lat, lat.top());
}

Rational sd(const SubgroupLattice& lat, const PermutabilityMatrix& pm) {
  return sd_of_subgroup(lat, pm, lat.top());
}

Rational csd(const SubgroupLattice& lat, const PermutabilityMatrix& pm) {
  return csd_of_subgroup(lat, pm, lat.top());
}

Rational sd_of_subgroup(const SubgroupLattice& lat,
                        const PermutabilityMatrix& pm, std::size_t h) {
  Bitset inside = lat.below_mask(h);
  unsigned long long total = lat.below(h).size();
  unsigned long long hits = 0;
  for (std::uint32_t i : lat.below(h))
    hits += pm.row(i).intersection_count(inside);
  return ratio_of_counts(BigInt(static_cast<unsigned long>(hits)),
                         BigInt(static_cast<unsigned long>(total * total)));
}

Rational csd_of_subgroup(const SubgroupLattice& lat,
                         const PermutabilityMatrix& pm, std::size_t h) {
  Bitset inside = lat.below_mask(h);
  inside &= lat.cyclic_mask();
  unsigned long long total = inside.count();
  unsigned long long hits = 0;
  inside.for_each([&](std::size_t i) {
    hits += pm.row(i).intersection_count(inside);
  });
  return ratio_of_counts(BigInt(static_cast<unsigned long>(hits)),
                         BigInt(static_cast<unsigned long>(total * total)));
}

namespace {

std::int64_t mobius_inversion(const SubgroupLattice& lat,
                              const MobiusTable& mob,
                              const PermutabilityMatrix& pm, bool cyclic_only,
                              const char* what) {
  std::size_t top = lat.top();
  Rational sum = 0;
  for (std::uint32_t h : lat.below(top)) {
    Rational degree = cyclic_only ? csd_of_subgroup(lat, pm, h)
                                  : sd_of_subgroup(lat, pm, h);
    unsigned long long poset = cyclic_only ? lat.cyclic_count_below(h)
                                           : lat.below(h).size();
    BigInt weight = BigInt(static_cast<unsigned long>(poset * poset)) *
                    mob.at(h, top);
    sum += degree * Rational(weight);
  }
  sum.canonicalize();
  if (sum.get_den() != 1 || sum < 0)
    throw ConsistencyError(std::string(what) +
                           " inversion did not produce a non-negative "
                           "integer: " + to_string(sum));
  BigInt v = sum.get_num();
  if (!v.fits_slong_p())
    throw CapacityError(std::string(what) + " count exceeds 64 bits");
  return std::int64_t(v.get_si());
}

}  // namespace

std::int64_t cf2_mobius(const SubgroupLattice& lat, const MobiusTable& mob,
                        const PermutabilityMatrix& pm) {
  return mobius_inversion(lat, mob, pm, true, "cyclic factorization");
}

std::int64_t f2_mobius(const SubgroupLattice& lat, const MobiusTable& mob,
                       const PermutabilityMatrix& pm) {
  return mobius_inversion(lat, mob, pm, false, "factorization");
}

Rational sd_from_subgroup_f2(const SubgroupLattice& lat) {
  BigInt hits = 0;
  for (std::size_t h = 0; h < lat.size(); ++h)
    hits += BigInt(static_cast<long>(f2_of_subgroup(lat, h)));
  unsigned long long total = lat.size();
  return ratio_of_counts(hits,
                         BigInt(static_cast<unsigned long>(total * total)));
}

Rational csd_from_subgroup_cf2(const SubgroupLattice& lat) {
  BigInt hits = 0;
  for (std::size_t h = 0; h < lat.size(); ++h)
    hits += BigInt(static_cast<long>(cf2_of_subgroup(lat, h)));
  unsigned long long total = lat.cyclic_indices().size();
  return ratio_of_counts(hits,
                         BigInt(static_cast<unsigned long>(total * total)));
}

std::int64_t cf2_coprime_product(
    std::span<const SubgroupLattice* const> parts) {
  if (parts.empty()) throw ValidationError("empty product");
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (std::gcd(parts[i]->group().order(), parts[j]->group().order()) != 1)
        throw ValidationError(
            "factor orders are not pairwise coprime: " +
            std::to_string(parts[i]->group().order()) + " and " +
            std::to_string(parts[j]->group().order()));
  std::int64_t r = 1;
  for (const SubgroupLattice* lat : parts) r *= cf2_bruteforce(*lat);
  return r;
}

InvariantReport invariant_report(const SubgroupLattice& lat, Method method,
                                 const CountingOptions& opts) {
  InvariantReport rep;
  rep.group_name = lat.group().name();
  rep.order = lat.group().order();
  rep.lattice_size = lat.size();
  rep.cyclic_poset_size = lat.cyclic_indices().size();
  rep.method = method;

  PermutabilityMatrix pm = permutability_matrix(lat, opts);
  if (method == Method::bruteforce) {
    rep.cf2 = cf2_bruteforce(lat, opts);
    rep.f2 = f2_bruteforce(lat, opts);
    rep.sd_value = sd(lat, pm);
    rep.csd_value = csd(lat, pm);
  } else {
    MobiusTable mob = mobius_table(lat);
    rep.cf2 = cf2_mobius(lat, mob, pm);
    rep.f2 = f2_mobius(lat, mob, pm);
    rep.sd_value = sd_from_subgroup_f2(lat);
    rep.csd_value = csd_from_subgroup_cf2(lat);
  }

  if (rep.cf2 < 0 || rep.cf2 > rep.f2)
    throw ConsistencyError("expected 0 <= CF2 <= F2 for " + rep.group_name);
  for (const Rational* r : {&rep.sd_value, &rep.csd_value})
    if (*r <= 0 || *r > 1)
      throw ConsistencyError("commutativity degree outside (0, 1] for " +
                             rep.group_name);
  return rep;
}

}  // namespace cyclofact
