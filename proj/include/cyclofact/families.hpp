#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclofact/group.hpp"

namespace cyclofact {

// Which element of A the extra generator squares to in a generalized
// dicyclic group (see build_generalized_dicyclic).
enum class Gamma2Choice { a_half, b, a_half_b };

const char* gamma2_token(Gamma2Choice c);  // "ahalf", "b", "ahalfb"

// Parsed form of the textual group spec grammar:
//
//   cyclic:n
//   abelian:p^a,p^a,...
//   dihedral:n            order 2n, n >= 3
//   quaternion:n          order 2^n, n >= 3
//   semidihedral:n        order 2^n, n >= 4
//   modular:p,n           order p^n, n >= 3
//   dicyclic:n            order 4n, n >= 1
//   gendicyclic:n,g2      order 4n, g2 in {ahalf, b, ahalfb}
//   symmetric:n
//   alternating:n
//   product:(spec)*(spec) two or more parenthesized factors
//
// Specs are whitespace-free; parse errors report position and expected token.
struct GroupSpec {
  enum class Family {
    cyclic,
    abelian,
    dihedral,
    quaternion,
    semidihedral,
    modular_p,
    dicyclic,
    gen_dicyclic,
    symmetric,
    alternating,
    product,
  };

  Family family = Family::cyclic;
  std::vector<long long> params;  // n, or (p, n) for modular_p
  std::vector<std::pair<long long, long long>> prime_powers;  // abelian
  Gamma2Choice gamma2 = Gamma2Choice::b;                      // gen_dicyclic
  std::vector<GroupSpec> factors;                             // product

  // Canonical spec text; parse(text()) round-trips.
  std::string text() const;

  // Group order implied by the parameters, without building anything.
  unsigned long long order() const;
};

GroupSpec parse_group_spec(std::string_view s);
FiniteGroup build_group(const GroupSpec& spec, const GroupConfig& cfg = {});

// Element encodings, fixed and relied upon by tests:
//
//   cyclic:      id i is the i-th power of the generator.
//   abelian:     mixed-radix tuples over the factors, last factor fastest.
//   dihedral:    id = f*n + r  meaning x^r y^f  (x the rotation, y a
//                reflection; x -> 1, y -> n).
//   quaternion,
//   dicyclic:    id = j*2m + i meaning x^i y^j with x of order 2m and
//                y^2 = x^m (quaternion:n delegates to dicyclic m = 2^(n-2)).
//   semidihedral,
//   modular:     id = j*m + i meaning x^i y^j, m the order of x.
//   gendicyclic: A = Z_n x Z_2 as pairs (i, j) with a = (1,0) -> id 2,
//                b = (0,1) -> id 1; group id = k*2n + A-id for A-element
//                times gamma^k.
//   symmetric,
//   alternating: permutations of {0..n-1} in lexicographic rank order,
//                (pq)(i) = p(q(i)).
//
// Every builder re-derives its defining relations from the finished table
// and throws ConsistencyError if any fails.
FiniteGroup build_cyclic(unsigned long long n, const GroupConfig& cfg = {});
FiniteGroup build_abelian(
    std::span<const std::pair<long long, long long>> prime_powers,
    const GroupConfig& cfg = {});
FiniteGroup build_dihedral(unsigned n, const GroupConfig& cfg = {});
FiniteGroup build_generalized_quaternion(unsigned n,
                                         const GroupConfig& cfg = {});
FiniteGroup build_semidihedral(unsigned n, const GroupConfig& cfg = {});
FiniteGroup build_modular_p(unsigned long long p, unsigned n,
                            const GroupConfig& cfg = {});
FiniteGroup build_dicyclic(unsigned n, const GroupConfig& cfg = {});
FiniteGroup build_generalized_dicyclic(unsigned n, Gamma2Choice gamma2,
                                       const GroupConfig& cfg = {});
FiniteGroup build_symmetric(unsigned n, const GroupConfig& cfg = {});
FiniteGroup build_alternating(unsigned n, const GroupConfig& cfg = {});

}  // namespace cyclofact
