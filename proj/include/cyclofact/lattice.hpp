#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cyclofact/exact.hpp"
#include "cyclofact/group.hpp"

namespace cyclofact {

struct LatticeOptions {
  // Abort enumeration (CapacityError) past this many subgroups.
  std::size_t subgroup_budget = 100000;
  // Inclusion is kept as a full bit matrix up to this many subgroups;
  // above it only the per-subgroup adjacency lists are stored.
  std::size_t inclusion_matrix_limit = 4096;
};

// The complete subgroup lattice of a group: every subgroup, the full
// inclusion relation, and meet/join. Subgroups are sorted by (order, member
// set as little-endian integer), so index 0 is the trivial subgroup and the
// last index is the whole group, and a proper subgroup always has a smaller
// index than any subgroup containing it.
class SubgroupLattice {
 public:
  const FiniteGroup& group() const { return *group_; }
  std::size_t size() const { return subgroups_.size(); }
  const Subgroup& subgroup(std::size_t i) const { return subgroups_[i]; }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }

  std::size_t bottom() const { return 0; }
  std::size_t top() const { return subgroups_.size() - 1; }

  // subgroup(h) is contained in subgroup(k).
  bool leq(std::size_t h, std::size_t k) const;

  // Indices of all subgroups contained in subgroup(k), ascending; the last
  // entry is k itself.
  const std::vector<std::uint32_t>& below(std::size_t k) const {
    return below_list_[k];
  }

  // Bit mask over subgroup indices for below(k); materialized from the list
  // when the full matrix is not stored.
  Bitset below_mask(std::size_t k) const;

  const std::vector<std::uint32_t>& cyclic_indices() const {
    return cyclic_indices_;
  }
  const Bitset& cyclic_mask() const { return cyclic_mask_; }

  // Number of cyclic subgroups contained in subgroup(k): |L1| of it.
  unsigned cyclic_count_below(std::size_t k) const;

  std::size_t index_of(const Bitset& members) const;  // ConsistencyError if absent
  std::size_t meet(std::size_t i, std::size_t j) const;
  std::size_t join(std::size_t i, std::size_t j) const;

 private:
  friend SubgroupLattice enumerate_subgroups(const FiniteGroup&,
                                             const LatticeOptions&);

  const FiniteGroup* group_ = nullptr;
  std::vector<Subgroup> subgroups_;
  std::vector<std::vector<ElementId>> generators_;  // small generating sets
  std::vector<std::vector<std::uint32_t>> below_list_;
  std::vector<Bitset> below_mask_;  // empty when past inclusion_matrix_limit
  Bitset cyclic_mask_;
  std::vector<std::uint32_t> cyclic_indices_;
  std::unordered_map<Bitset, std::uint32_t, BitsetHash> index_;
};

// Seeds with every cyclic subgroup, then closes under joins. The result is
// the complete lattice: any subgroup is a join of cyclic ones. The caller
// keeps `g` alive for as long as the lattice is used.
SubgroupLattice enumerate_subgroups(const FiniteGroup& g,
                                    const LatticeOptions& opts = {});

// mu(H, K) for every pair H <= K, computed by the defining recursion
// mu(K, K) = 1, mu(H, K) = -sum over H < J <= K of mu(J, K).
class MobiusTable {
 public:
  const BigInt& at(std::size_t h, std::size_t k) const;

 private:
  friend MobiusTable mobius_table(const SubgroupLattice&);
  const SubgroupLattice* lat_ = nullptr;
  // values_[k] is aligned with lat_->below(k)
  std::vector<std::vector<BigInt>> values_;
};

MobiusTable mobius_table(const SubgroupLattice& lat);

// mu(1, G) for a p-group of order p^n: zero unless elementary abelian,
// in which case (-1)^n p^(n choose 2).
BigInt hall_mobius(unsigned long long p, unsigned n, bool elementary_abelian);

bool is_normal(const FiniteGroup& g, const Subgroup& h);

// G/H for normal H; cosets indexed by their smallest member, ascending, so
// the identity coset is index 0. ValidationError if H is not normal.
FiniteGroup quotient_group(const FiniteGroup& g, const Subgroup& h);

struct QuotientInfo {
  std::uint32_t subgroup_index;  // K, a subgroup containing H
  unsigned quotient_order;       // |K/H|
  bool quotient_cyclic;          // K/H cyclic, decided in the quotient table
};

// For every K >= H in the lattice: |K/H| and whether K/H is cyclic.
std::vector<QuotientInfo> quotient_census(const SubgroupLattice& lat,
                                          std::size_t normal_h);

}  // namespace cyclofact
