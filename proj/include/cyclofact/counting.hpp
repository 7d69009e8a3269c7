#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "cyclofact/exact.hpp"
#include "cyclofact/lattice.hpp"

namespace cyclofact {

struct CountingOptions {
  unsigned jobs = 1;  // 0 = hardware concurrency
};

// Symmetric relation "HK == KH" over all subgroup pairs of a lattice.
// Nested pairs permute by definition and are short-circuited; every other
// pair is decided by literal product-set comparison.
class PermutabilityMatrix {
 public:
  bool permutes(std::size_t i, std::size_t j) const {
    return rows_[i].test(j);
  }
  const Bitset& row(std::size_t i) const { return rows_[i]; }
  std::size_t size() const { return rows_.size(); }

 private:
  friend PermutabilityMatrix permutability_matrix(const SubgroupLattice&,
                                                  const CountingOptions&);
  std::vector<Bitset> rows_;
};

PermutabilityMatrix permutability_matrix(const SubgroupLattice& lat,
                                         const CountingOptions& opts = {});

// CF2(G): ordered pairs (H, K) of cyclic subgroups with HK = G.
// Ordered means CF2(Z_p) = 3: (1,G), (G,1), (G,G).
std::int64_t cf2_bruteforce(const SubgroupLattice& lat,
                            const CountingOptions& opts = {});

// F2(G): same count over all subgroup pairs.
std::int64_t f2_bruteforce(const SubgroupLattice& lat,
                           const CountingOptions& opts = {});

// Pairs of (cyclic) subgroups of subgroup(h) whose product is exactly it.
std::int64_t cf2_of_subgroup(const SubgroupLattice& lat, std::size_t h);
std::int64_t f2_of_subgroup(const SubgroupLattice& lat, std::size_t h);

// Subgroup commutativity degree: fraction of ordered subgroup pairs that
// permute. csd restricts both coordinates to cyclic subgroups. The trivial
// group yields 1 for both.
Rational sd(const SubgroupLattice& lat, const PermutabilityMatrix& pm);
Rational csd(const SubgroupLattice& lat, const PermutabilityMatrix& pm);
Rational sd_of_subgroup(const SubgroupLattice& lat,
                        const PermutabilityMatrix& pm, std::size_t h);
Rational csd_of_subgroup(const SubgroupLattice& lat,
                         const PermutabilityMatrix& pm, std::size_t h);

// CF2(G) recovered through the cyclic-subgroup poset:
//   CF2(G) = sum over H of csd(H) |L1(H)|^2 mu(H, G).
// ConsistencyError if the sum is not a non-negative integer.
std::int64_t cf2_mobius(const SubgroupLattice& lat, const MobiusTable& mob,
                        const PermutabilityMatrix& pm);

// F2(G) = sum over H of sd(H) |L(H)|^2 mu(H, G).
std::int64_t f2_mobius(const SubgroupLattice& lat, const MobiusTable& mob,
                       const PermutabilityMatrix& pm);

// sd(G) = (sum over H of F2(H)) / |L(G)|^2, with each F2(H) counted inside
// the lattice; an independent route to sd for cross-checking.
Rational sd_from_subgroup_f2(const SubgroupLattice& lat);

// csd(G) = (sum over H of CF2(H)) / |L1(G)|^2.
Rational csd_from_subgroup_cf2(const SubgroupLattice& lat);

// CF2 of a direct product of groups with pairwise coprime orders is the
// product of the factors' CF2. ValidationError if orders share a factor.
std::int64_t cf2_coprime_product(
    std::span<const SubgroupLattice* const> parts);

enum class Method { bruteforce, mobius };

struct InvariantReport {
  std::string group_name;
  unsigned order = 0;
  std::int64_t cf2 = 0;
  std::int64_t f2 = 0;
  Rational sd_value;
  Rational csd_value;
  std::size_t lattice_size = 0;
  std::size_t cyclic_poset_size = 0;
  Method method = Method::bruteforce;
};

// One group, all invariants, through the chosen engine. Enforces
// 0 <= cf2 <= f2 and sd, csd in (0, 1].
InvariantReport invariant_report(const SubgroupLattice& lat, Method method,
                                 const CountingOptions& opts = {});

}  // namespace cyclofact
