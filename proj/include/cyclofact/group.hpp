#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cyclofact/bitset.hpp"
#include "cyclofact/errors.hpp"

namespace cyclofact {

using ElementId = std::uint16_t;

// Construction-time limits. Builders check max_order before allocating a
// table; full associativity is verified only up to assoc_check_limit, larger
// tables are trusted to the builder that produced them (every family builder
// re-checks its defining relations on the finished table regardless).
struct GroupConfig {
  unsigned max_order = 2048;
  unsigned assoc_check_limit = 128;
};

// A finite group as an explicit multiplication table over element indices
// 0..order-1. Index 0 is always the identity. Immutable after construction,
// safe to share across threads.
class FiniteGroup {
 public:
  // Validates the table: well-formed entries, identity at 0, latin square,
  // two-sided inverses, and (up to cfg.assoc_check_limit) associativity.
  static FiniteGroup from_table(std::string name, unsigned order,
                                std::vector<ElementId> table,
                                const GroupConfig& cfg = {});

  unsigned order() const { return order_; }
  const std::string& name() const { return name_; }
  const std::vector<ElementId>& table() const { return table_; }

  // Hot path, unchecked. Callers must pass valid ids.
  ElementId mul(ElementId a, ElementId b) const {
    return table_[std::size_t(a) * order_ + b];
  }

  // Checked variant for external callers; throws ValidationError on a bad id.
  ElementId multiply(unsigned a, unsigned b) const;

  ElementId inverse(ElementId a) const { return inverses_[a]; }
  unsigned element_order(ElementId a) const { return element_orders_[a]; }
  ElementId power(ElementId a, unsigned long long e) const;

  bool is_abelian() const;
  bool is_cyclic() const;  // some element has order |G|

  // Sorted multiset of element orders; cheap fingerprint for census checks.
  std::vector<unsigned> element_order_census() const;

 private:
  FiniteGroup() = default;

  unsigned order_ = 0;
  std::string name_;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverses_;
  std::vector<unsigned> element_orders_;
};

// A subgroup is a member bitset over element ids plus cached facts.
struct Subgroup {
  Bitset members;
  unsigned order = 0;
  bool is_cyclic = false;
};

// Closure of a generating set: all finite products of the generators.
Subgroup generated_subgroup(const FiniteGroup& g,
                            std::span<const ElementId> gens);
Subgroup generated_subgroup(const FiniteGroup& g,
                            std::initializer_list<ElementId> gens);

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup full_subgroup(const FiniteGroup& g);

// |HK| = |H| * |K| / |H meet K|; exact, no set is materialized.
unsigned long long product_set_order(const Subgroup& h, const Subgroup& k);

// The literal set {h*k : h in H, k in K}.
Bitset product_set(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

// HK == KH, decided by comparing the two literal product sets.
bool subgroups_permute(const FiniteGroup& g, const Subgroup& h,
                       const Subgroup& k);

// Componentwise product on pairs (a, b) with index a * |G2| + b.
FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2,
                           const GroupConfig& cfg = {});

}  // namespace cyclofact
