#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclofact/exact.hpp"
#include "cyclofact/families.hpp"

namespace cyclofact {

// --- elementary number theory -----------------------------------------

bool is_prime(unsigned long long n);
std::vector<std::pair<unsigned long long, unsigned>> factorize(
    unsigned long long n);
unsigned long long tau(unsigned long long n);  // number of divisors
int mobius_nt(unsigned long long n);           // number-theoretic Moebius
std::vector<unsigned long long> divisors(unsigned long long n);  // ascending

// --- closed forms for CF2 ----------------------------------------------
//
// Each function validates its parameter domain (ValidationError otherwise)
// and returns the exact count. Every one of them is swept against the
// enumeration engine; see the formula catalogue in docs/ for statements,
// domains and sweep ranges.

// Z_n with n = prod p_i^a_i: prod (2 a_i + 1).
long long cf2_cyclic_formula(unsigned long long n);

// Abelian p-group Z_{p^a1} x ... x Z_{p^ak}, a1 <= ... <= ak:
//   k = 1: 2 a1 + 1
//   k = 2: p^(2 a1 - 1) [(2 a2 - 2 a1 + 1) p - 2 a2 + 2 a1 + 1]
//   k >= 3: 0
long long cf2_abelian_p_formula(unsigned long long p,
                                std::span<const unsigned> alphas);

// D_2n (n >= 3): 2n.
long long cf2_dihedral_formula(unsigned n);

// Q_2^n (n >= 3): 6 for n = 3, else 2^(n-1).
long long cf2_quaternion_formula(unsigned n);

// SD_2^n (n >= 4): 3 * 2^(n-2).
long long cf2_semidihedral_formula(unsigned n);

// M(p^n) (n >= 3): 8 for (p,n) = (2,3); else p[(2n-4)(p-1) - p + 3]
// + 2p(p-1). At n = 3 this evaluates to 3p^2 - p, which enumeration
// confirms for odd p; (2,3) is the lone special case (M(8) is dihedral).
long long cf2_modular_formula(unsigned long long p, unsigned n);

// Dic_4n: 5 (n=1), 6 (n=2), then 4n for odd n and 2n for even n.
// Two candidate parity assignments circulate; enumeration over n = 3..12
// fixes this one. cf2_dicyclic_case labels the branch taken.
long long cf2_dicyclic_formula(unsigned long long n);
const char* cf2_dicyclic_case(unsigned long long n);

// Dic_4n(A), A = Z_2 x Z_n, fully adjudicated by enumeration:
//   n = 1: the group is Z_4, 5.
//   n = 2: the group is Z_2 x Z_4 (gamma has order 4), 10.
//   n odd >= 3 (gamma^2 = b is the only valid choice): 4n.
//   n == 2 mod 4, n > 2: 4n for every choice.
//   n == 0 mod 4: 0 for gamma^2 = a^(n/2), else 4n.
// Of the candidate gamma^2 sets {b, a^(n/2)} vs {b, a^(n/2) b} for the 4n
// branch at n == 0 mod 4, enumeration confirms the latter.
long long cf2_gen_dicyclic_formula(unsigned long long n, Gamma2Choice gamma2);
const char* cf2_gen_dicyclic_case(unsigned long long n, Gamma2Choice gamma2);

// csd of the dihedral subgroup K_d = <x^(n/d), reflection> of D_2n, which
// depends only on d:
//   d odd:  [tau(d)(tau(d)+d) + d(tau(d)+1)] / (tau(d)+d)^2
//   d even: [tau(d)(tau(d)+d) + d(tau(d)+2)] / (tau(d)+d)^2
// csd of the rotation subgroup H_d is 1 (cyclic groups have csd 1).
Rational csd_dihedral_subgroup_formula(unsigned long long d);

enum class DihedralSubgroupKind { rotation, dihedral };  // H_d vs K_d^i

// mu(H_d, D_2n) = -(n/d) mobius_nt(n/d); mu(K_d^i, D_2n) = mobius_nt(n/d).
BigInt dihedral_mobius_formula(unsigned long long n, unsigned long long d,
                               DihedralSubgroupKind kind);

// --- dispatch ----------------------------------------------------------

// The closed form applicable to a spec, if one exists. Products of factors
// with pairwise coprime orders multiply their factors' formulas; symmetric
// and alternating groups have the constant 0 for n >= 4 and no formula
// below that (they coincide with other families there).
std::optional<long long> cf2_formula_for(const GroupSpec& spec);

struct FormulaCatalogueEntry {
  std::string id;
  std::string applies_to;
  std::string statement;
  std::string sweep;  // the enumeration range the formula is verified on
};

std::span<const FormulaCatalogueEntry> formula_catalogue();

}  // namespace cyclofact
