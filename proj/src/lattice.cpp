#include "cyclofact/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace cyclofact {

namespace {

bool subgroup_is_cyclic(const FiniteGroup& g, const Bitset& members,
                        unsigned order) {
  bool cyc = false;
  members.for_each([&](std::size_t m) {
    if (g.element_order(ElementId(m)) == order) cyc = true;
  });
  return cyc;
}

Bitset closure(const FiniteGroup& g, std::span<const ElementId> gens,
               unsigned* order_out) {
  Bitset m(g.order());
  std::vector<ElementId> queue;
  m.set(0);
  queue.push_back(0);
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (ElementId e : gens) {
      ElementId v = g.mul(queue[qi], e);
      if (!m.test(v)) {
        m.set(v);
        queue.push_back(v);
      }
    }
  *order_out = unsigned(queue.size());
  return m;
}

}  // namespace

SubgroupLattice enumerate_subgroups(const FiniteGroup& g,
                                    const LatticeOptions& opts) {
  const unsigned n = g.order();

  std::vector<Subgroup> subs;
  std::vector<std::vector<ElementId>> gens;
  std::unordered_map<Bitset, std::uint32_t, BitsetHash> idx;

  auto add = [&](Bitset members, unsigned order, std::vector<ElementId> gg) {
    if (idx.contains(members)) return;
    if (subs.size() >= opts.subgroup_budget)
      throw CapacityError("subgroup budget of " +
                          std::to_string(opts.subgroup_budget) +
                          " exhausted for " + g.name());
    idx.emplace(members, std::uint32_t(subs.size()));
    Subgroup s;
    s.order = order;
    s.is_cyclic = subgroup_is_cyclic(g, members, order);
    s.members = std::move(members);
    subs.push_back(std::move(s));
    gens.push_back(std::move(gg));
  };

  // Seeds: every cyclic subgroup, one per distinct set of generator powers.
  struct Seed {
    Bitset members;
    ElementId gen;
  };
  std::vector<Seed> seeds;
  for (unsigned e = 0; e < n; ++e) {
    Bitset m(n);
    ElementId x = 0;
    do {
      m.set(x);
      x = g.mul(x, ElementId(e));
    } while (x != 0);
    if (!idx.contains(m)) seeds.push_back({m, ElementId(e)});
    add(m, g.element_order(ElementId(e)), {ElementId(e)});
  }

  // Close under joins with the cyclic seeds; every subgroup is such a join.
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (const Seed& s : seeds) {
      if (s.members.is_subset_of(subs[i].members)) continue;
      std::vector<ElementId> gg = gens[i];
      gg.push_back(s.gen);
      unsigned order = 0;
      Bitset m = closure(g, gg, &order);
      add(std::move(m), order, std::move(gg));
    }

  const std::size_t count = subs.size();
  std::vector<std::uint32_t> perm(count);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (subs[a].order != subs[b].order) return subs[a].order < subs[b].order;
    return Bitset::compare(subs[a].members, subs[b].members) < 0;
  });

  SubgroupLattice lat;
  lat.group_ = &g;
  lat.subgroups_.reserve(count);
  lat.generators_.reserve(count);
  for (std::uint32_t p : perm) {
    lat.index_.emplace(subs[p].members, std::uint32_t(lat.subgroups_.size()));
    lat.subgroups_.push_back(std::move(subs[p]));
    lat.generators_.push_back(std::move(gens[p]));
  }

  lat.below_list_.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    const Subgroup& sk = lat.subgroups_[k];
    for (std::size_t h = 0; h < k; ++h) {
      const Subgroup& sh = lat.subgroups_[h];
      if (sk.order % sh.order) continue;
      if (sh.members.is_subset_of(sk.members))
        lat.below_list_[k].push_back(std::uint32_t(h));
    }
    lat.below_list_[k].push_back(std::uint32_t(k));
  }

  if (count <= opts.inclusion_matrix_limit) {
    lat.below_mask_.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
      Bitset row(count);
      for (std::uint32_t h : lat.below_list_[k]) row.set(h);
      lat.below_mask_.push_back(std::move(row));
    }
  }

  lat.cyclic_mask_ = Bitset(count);
  for (std::size_t i = 0; i < count; ++i)
    if (lat.subgroups_[i].is_cyclic) {
      lat.cyclic_mask_.set(i);
      lat.cyclic_indices_.push_back(std::uint32_t(i));
    }
  return lat;
}

bool SubgroupLattice::leq(std::size_t h, std::size_t k) const {
  if (!below_mask_.empty()) return below_mask_[k].test(h);
  const auto& bl = below_list_[k];
  return std::binary_search(bl.begin(), bl.end(), std::uint32_t(h));
}

Bitset SubgroupLattice::below_mask(std::size_t k) const {
  if (!below_mask_.empty()) return below_mask_[k];
  Bitset row(size());
  for (std::uint32_t h : below_list_[k]) row.set(h);
  return row;
}

unsigned SubgroupLattice::cyclic_count_below(std::size_t k) const {
  unsigned c = 0;
  for (std::uint32_t h : below_list_[k]) c += subgroups_[h].is_cyclic;
  return c;
}

std::size_t SubgroupLattice::index_of(const Bitset& members) const {
  auto it = index_.find(members);
  if (it == index_.end())
    throw ConsistencyError("member set is not a subgroup of the lattice");
  return it->second;
}

std::size_t SubgroupLattice::meet(std::size_t i, std::size_t j) const {
  return index_of(subgroups_[i].members & subgroups_[j].members);
}

std::size_t SubgroupLattice::join(std::size_t i, std::size_t j) const {
  // The first common upper bound in (order, set) order is the smallest one:
  // it contains <subgroup(i), subgroup(j)> and cannot be larger than it.
  for (std::size_t k = std::max(i, j); k < size(); ++k)
    if (leq(i, k) && leq(j, k)) return k;
  throw ConsistencyError("no upper bound found; lattice is incomplete");
}

const BigInt& MobiusTable::at(std::size_t h, std::size_t k) const {
  const auto& bl = lat_->below(k);
  auto it = std::lower_bound(bl.begin(), bl.end(), std::uint32_t(h));
  if (it == bl.end() || *it != h)
    throw ValidationError("mu(h, k) undefined: h is not below k");
  return values_[k][std::size_t(it - bl.begin())];
}

MobiusTable mobius_table(const SubgroupLattice& lat) {
  MobiusTable t;
  t.lat_ = &lat;
  t.values_.resize(lat.size());
  for (std::size_t k = 0; k < lat.size(); ++k) {
    const auto& bl = lat.below(k);
    auto& col = t.values_[k];
    col.assign(bl.size(), BigInt(0));
    col.back() = 1;
    for (std::size_t i = bl.size() - 1; i-- > 0;) {
      BigInt sum = 0;
      for (std::size_t j = i + 1; j < bl.size(); ++j)
        if (lat.leq(bl[i], bl[j])) sum += col[j];
      col[i] = -sum;
    }
  }
  return t;
}

BigInt hall_mobius(unsigned long long p, unsigned n, bool elementary_abelian) {
  if (!elementary_abelian) return n == 0 ? BigInt(1) : BigInt(0);
  BigInt r = big_pow(BigInt(static_cast<unsigned long>(p)),
                     static_cast<unsigned long>(n) * (n - 1) / 2);
  return n % 2 ? BigInt(-r) : r;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  auto members = h.members.to_indices();
  for (unsigned x = 0; x < g.order(); ++x) {
    ElementId xi = g.inverse(ElementId(x));
    for (auto m : members)
      if (!h.members.test(g.mul(g.mul(ElementId(x), ElementId(m)), xi)))
        return false;
  }
  return true;
}

namespace {

// Cosets of h restricted to `domain` (a subgroup containing h), indexed by
// smallest member ascending. Requires h normal inside the domain.
FiniteGroup coset_group(const FiniteGroup& g, const Subgroup& h,
                        const Bitset& domain, unsigned domain_order,
                        const std::string& name) {
  auto hm = h.members.to_indices();
  std::vector<unsigned> coset_min(g.order(), g.order());
  std::vector<std::uint32_t> dom = domain.to_indices();
  for (auto x : dom) {
    unsigned lo = g.order();
    for (auto m : hm) lo = std::min<unsigned>(lo, g.mul(ElementId(x), ElementId(m)));
    coset_min[x] = lo;
  }
  std::vector<unsigned> reps;
  for (auto x : dom)
    if (coset_min[x] == x) reps.push_back(unsigned(x));
  std::sort(reps.begin(), reps.end());

  std::vector<unsigned> coset_id(g.order(), 0);
  for (auto x : dom)
    coset_id[x] = unsigned(
        std::lower_bound(reps.begin(), reps.end(), coset_min[x]) -
        reps.begin());

  unsigned q = domain_order / h.order;
  std::vector<ElementId> table(std::size_t(q) * q);
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b)
      table[std::size_t(a) * q + b] =
          ElementId(coset_id[g.mul(ElementId(reps[a]), ElementId(reps[b]))]);
  return FiniteGroup::from_table(name, q, std::move(table));
}

}  // namespace

FiniteGroup quotient_group(const FiniteGroup& g, const Subgroup& h) {
  if (!is_normal(g, h))
    throw ValidationError("quotient requires a normal subgroup");
  return coset_group(g, h, full_subgroup(g).members, g.order(),
                     g.name() + "/" + std::to_string(h.order));
}

std::vector<QuotientInfo> quotient_census(const SubgroupLattice& lat,
                                          std::size_t normal_h) {
  const FiniteGroup& g = lat.group();
  const Subgroup& h = lat.subgroup(normal_h);
  if (!is_normal(g, h))
    throw ValidationError("quotient census requires a normal subgroup");
  std::vector<QuotientInfo> out;
  for (std::size_t k = 0; k < lat.size(); ++k) {
    if (!lat.leq(normal_h, k)) continue;
    const Subgroup& sk = lat.subgroup(k);
    FiniteGroup q = coset_group(g, h, sk.members, sk.order, "quotient");
    out.push_back({std::uint32_t(k), q.order(), q.is_cyclic()});
  }
  return out;
}

}  // namespace cyclofact
