#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <initializer_list>
#include <string>

#include "doctest.h"

#include "cyclofact/verify.hpp"

using namespace cyclofact;

namespace {

// Runs the named verification scopes and prints exactly one line for the
// criterion, independent of the doctest reporter.
bool criterion(int index, const char* label,
               std::initializer_list<const char*> scopes, unsigned budget) {
    VerifyOptions opts;
    opts.budget = budget;
    opts.jobs = 0;
    bool pass = true;
    std::string failures;
    for (const char* scope : scopes) {
        for (const auto& r : verify_scope(scope, opts)) {
            if (r.pass) continue;
            pass = false;
            failures += "\n    " + r.scope + "/" + r.name +
                        (r.detail.empty() ? "" : ": " + r.detail);
        }
    }
    std::printf("ACCEPTANCE %d: %s - %s%s\n", index, pass ? "PASS" : "FAIL",
                label, failures.c_str());
    std::fflush(stdout);
    return pass;
}

}  // namespace

TEST_CASE("acceptance 1: pinned CF2, F2, sd and csd reference values") {
    CHECK(criterion(1, "pinned CF2, F2, sd and csd reference values",
                    {"constants"}, 256));
}

TEST_CASE("acceptance 2: abelian p-group formula vs enumeration") {
    CHECK(criterion(2,
                    "abelian p-group formula vs enumeration, p in {2,3,5}, "
                    "rank <= 3, order <= 256",
                    {"abelian"}, 256));
}

TEST_CASE("acceptance 3: dihedral CF2 = 2n by three engines") {
    CHECK(criterion(3, "dihedral CF2 equals 2n by enumeration, inversion and formula",
                    {"dihedral"}, 256));
}

TEST_CASE("acceptance 4: quaternion and semidihedral formulas") {
    CHECK(criterion(4, "quaternion and semidihedral 2-group formulas, order <= 512",
                    {"quaternion", "semidihedral"}, 512));
}

TEST_CASE("acceptance 5: modular maximal-cyclic formula") {
    CHECK(criterion(5,
                    "modular maximal-cyclic formula, order <= 2048, including "
                    "the odd-p n=3 boundary",
                    {"modular"}, 2048));
}

TEST_CASE("acceptance 6: dicyclic formula with parity adjudication") {
    CHECK(criterion(6, "dicyclic formula, odd/even split adjudicated by enumeration",
                    {"dicyclic"}, 256));
}

TEST_CASE("acceptance 7: generalized dicyclic formula") {
    CHECK(criterion(7, "generalized dicyclic formula across every gamma^2 choice",
                    {"gendicyclic"}, 256));
}

TEST_CASE("acceptance 8: the four lattice identities") {
    CHECK(criterion(8,
                    "sd/F2 and csd/CF2 lattice identities on the regression "
                    "set, order <= 100",
                    {"identities"}, 100));
}

TEST_CASE("acceptance 9: mu(1, G) for p-groups") {
    CHECK(criterion(9, "mu(1, G) vanishes except for elementary abelian p-groups",
                    {"hall"}, 64));
}

TEST_CASE("acceptance 10: dihedral Moebius closed forms") {
    CHECK(criterion(10, "dihedral Moebius closed forms, poset sizes and csd values",
                    {"dihedral-mobius"}, 256));
}

TEST_CASE("acceptance 11: structural properties") {
    CHECK(criterion(11,
                    "orderings, factorization witnesses, degeneracies and the "
                    "coprime product rule, order <= 100",
                    {"properties"}, 100));
}
