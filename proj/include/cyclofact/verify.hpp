#pragma once

#include <span>
#include <string>
#include <vector>

#include "cyclofact/counting.hpp"
#include "cyclofact/families.hpp"

namespace cyclofact {

struct VerifyResult {
  std::string scope;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  unsigned budget = 256;  // cap on group order swept
  unsigned jobs = 1;
};

// Scopes, each a self-contained formula-vs-enumeration or identity sweep:
//   constants        fixed CF2 values for reference groups
//   abelian          abelian p-group formula, p in {2,3,5}, rank <= 3
//   dihedral         CF2(D_2n) = 2n three ways (enumeration/Moebius/formula)
//   quaternion       CF2(Q_2^n)
//   semidihedral     CF2(SD_2^n)
//   modular          CF2(M(p^n)) including the odd-p n=3 boundary
//   dicyclic         CF2(Dic_4n) parity adjudication
//   gendicyclic      CF2(Dic_4n(A)) across every gamma^2 choice
//   identities       the four lattice identities on the regression set
//   hall             mu(1, G) for p-groups vs the closed form
//   dihedral-mobius  mu closed forms and cyclic poset sizes in D_2n
//   properties       orderings, product rule, degenerate cases
//   numbertheory     divisor-function convolution identities
std::vector<std::string> verify_scopes();

std::vector<VerifyResult> verify_scope(const std::string& scope,
                                       const VerifyOptions& opts = {});

// Empty scope list means all scopes.
std::vector<VerifyResult> run_verify(std::span<const std::string> scopes,
                                     const VerifyOptions& opts = {});

// Groups the identity and property sweeps run over: every family is
// represented, all orders <= max_order, at least 30 distinct groups for
// max_order >= 100.
std::vector<GroupSpec> regression_set(unsigned max_order);

}  // namespace cyclofact
