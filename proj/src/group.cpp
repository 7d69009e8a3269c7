#include "cyclofact/group.hpp"

#include <algorithm>

namespace cyclofact {

namespace {

void check_latin(const std::vector<ElementId>& table, unsigned n) {
  Bitset seen(n);
  for (unsigned a = 0; a < n; ++a) {
    seen.clear();
    for (unsigned b = 0; b < n; ++b) seen.set(table[std::size_t(a) * n + b]);
    if (seen.count() != n)
      throw ValidationError("row " + std::to_string(a) +
                            " is not a permutation");
    seen.clear();
    for (unsigned b = 0; b < n; ++b) seen.set(table[std::size_t(b) * n + a]);
    if (seen.count() != n)
      throw ValidationError("column " + std::to_string(a) +
                            " is not a permutation");
  }
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::string name, unsigned order,
                                    std::vector<ElementId> table,
                                    const GroupConfig& cfg) {
  if (order == 0) throw ValidationError("group order must be positive");
  if (order > cfg.max_order)
    throw CapacityError("group order " + std::to_string(order) +
                        " exceeds the configured maximum " +
                        std::to_string(cfg.max_order));
  if (table.size() != std::size_t(order) * order)
    throw ValidationError("table size does not match order^2");
  for (ElementId e : table)
    if (e >= order) throw ValidationError("table entry out of range");

  for (unsigned a = 0; a < order; ++a) {
    if (table[a] != a || table[std::size_t(a) * order] != a)
      throw ValidationError("element 0 is not a two-sided identity");
  }
  check_latin(table, order);

  FiniteGroup g;
  g.order_ = order;
  g.name_ = std::move(name);
  g.table_ = std::move(table);

  g.inverses_.resize(order);
  for (unsigned a = 0; a < order; ++a) {
    unsigned b = 0;
    while (g.table_[std::size_t(a) * order + b] != 0) ++b;
    if (g.table_[std::size_t(b) * order + a] != 0)
      throw ValidationError("inverses are not two-sided");
    g.inverses_[a] = ElementId(b);
  }

  if (order <= cfg.assoc_check_limit) {
    for (unsigned a = 0; a < order; ++a)
      for (unsigned b = 0; b < order; ++b) {
        ElementId ab = g.mul(ElementId(a), ElementId(b));
        for (unsigned c = 0; c < order; ++c)
          if (g.mul(ab, ElementId(c)) !=
              g.mul(ElementId(a), g.mul(ElementId(b), ElementId(c))))
            throw ValidationError("table is not associative");
      }
  }

  g.element_orders_.resize(order);
  for (unsigned a = 0; a < order; ++a) {
    unsigned k = 1;
    ElementId x = ElementId(a);
    while (x != 0) {
      x = g.mul(x, ElementId(a));
      ++k;
    }
    g.element_orders_[a] = k;
  }
  return g;
}

ElementId FiniteGroup::multiply(unsigned a, unsigned b) const {
  if (a >= order_ || b >= order_)
    throw ValidationError("element id out of range");
  return mul(ElementId(a), ElementId(b));
}

ElementId FiniteGroup::power(ElementId a, unsigned long long e) const {
  if (a >= order_) throw ValidationError("element id out of range");
  e %= element_orders_[a];
  ElementId r = 0;
  while (e--) r = mul(r, a);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (unsigned a = 0; a < order_; ++a)
    for (unsigned b = a + 1; b < order_; ++b)
      if (mul(ElementId(a), ElementId(b)) != mul(ElementId(b), ElementId(a)))
        return false;
  return true;
}

bool FiniteGroup::is_cyclic() const {
  for (unsigned a = 0; a < order_; ++a)
    if (element_orders_[a] == order_) return true;
  return false;
}

std::vector<unsigned> FiniteGroup::element_order_census() const {
  std::vector<unsigned> out = element_orders_;
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup generated_subgroup(const FiniteGroup& g,
                            std::span<const ElementId> gens) {
  for (ElementId e : gens)
    if (e >= g.order()) throw ValidationError("generator id out of range");

  Subgroup s;
  s.members = Bitset(g.order());
  std::vector<ElementId> queue;
  s.members.set(0);
  queue.push_back(0);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    ElementId u = queue[qi];
    for (ElementId e : gens) {
      ElementId v = g.mul(u, e);
      if (!s.members.test(v)) {
        s.members.set(v);
        queue.push_back(v);
      }
    }
  }
  s.order = unsigned(queue.size());
  s.is_cyclic = false;
  for (ElementId m : queue)
    if (g.element_order(m) == s.order) {
      s.is_cyclic = true;
      break;
    }
  return s;
}

Subgroup generated_subgroup(const FiniteGroup& g,
                            std::initializer_list<ElementId> gens) {
  return generated_subgroup(g, std::span<const ElementId>(gens.begin(),
                                                          gens.size()));
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  return generated_subgroup(g, std::span<const ElementId>{});
}

Subgroup full_subgroup(const FiniteGroup& g) {
  Subgroup s;
  s.members = Bitset(g.order());
  for (unsigned e = 0; e < g.order(); ++e) s.members.set(e);
  s.order = g.order();
  s.is_cyclic = g.is_cyclic();
  return s;
}

unsigned long long product_set_order(const Subgroup& h, const Subgroup& k) {
  std::size_t meet = h.members.intersection_count(k.members);
  return (static_cast<unsigned long long>(h.order) * k.order) / meet;
}

Bitset product_set(const FiniteGroup& g, const Subgroup& h,
                   const Subgroup& k) {
  Bitset out(g.order());
  auto hs = h.members.to_indices();
  auto ks = k.members.to_indices();
  for (auto a : hs)
    for (auto b : ks) out.set(g.mul(ElementId(a), ElementId(b)));
  return out;
}

bool subgroups_permute(const FiniteGroup& g, const Subgroup& h,
                       const Subgroup& k) {
  return product_set(g, h, k) == product_set(g, k, h);
}

FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2,
                           const GroupConfig& cfg) {
  unsigned long long n = static_cast<unsigned long long>(g1.order()) *
                         g2.order();
  if (n > cfg.max_order)
    throw CapacityError("direct product order " + std::to_string(n) +
                        " exceeds the configured maximum " +
                        std::to_string(cfg.max_order));
  unsigned order = unsigned(n);
  unsigned n2 = g2.order();
  std::vector<ElementId> table(std::size_t(order) * order);
  for (unsigned a = 0; a < order; ++a)
    for (unsigned b = 0; b < order; ++b) {
      ElementId a1 = ElementId(a / n2), a2 = ElementId(a % n2);
      ElementId b1 = ElementId(b / n2), b2 = ElementId(b % n2);
      table[std::size_t(a) * order + b] =
          ElementId(g1.mul(a1, b1) * n2 + g2.mul(a2, b2));
    }
  return FiniteGroup::from_table(g1.name() + " x " + g2.name(), order,
                                 std::move(table), cfg);
}

}  // namespace cyclofact
