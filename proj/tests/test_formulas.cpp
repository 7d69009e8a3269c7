#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "cyclofact/errors.hpp"
#include "cyclofact/formulas.hpp"

using namespace cyclofact;

TEST_CASE("elementary number theory") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));

    auto f = factorize(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<unsigned long long, unsigned>{2, 3});
    CHECK(f[1] == std::pair<unsigned long long, unsigned>{3, 2});
    CHECK(f[2] == std::pair<unsigned long long, unsigned>{5, 1});

    CHECK(tau(1) == 1);
    CHECK(tau(36) == 9);
    CHECK(tau(97) == 2);

    CHECK(mobius_nt(1) == 1);
    CHECK(mobius_nt(2) == -1);
    CHECK(mobius_nt(4) == 0);
    CHECK(mobius_nt(6) == 1);
    CHECK(mobius_nt(30) == -1);

    CHECK(divisors(28) == std::vector<unsigned long long>{1, 2, 4, 7, 14, 28});
    CHECK(divisors(1) == std::vector<unsigned long long>{1});
}

TEST_CASE("cyclic closed form") {
    CHECK(cf2_cyclic_formula(1) == 1);
    CHECK(cf2_cyclic_formula(7) == 3);
    CHECK(cf2_cyclic_formula(12) == 15);
    CHECK(cf2_cyclic_formula(360) == 105);
    CHECK_THROWS_AS(cf2_cyclic_formula(0), ValidationError);
}

TEST_CASE("abelian p-group closed form") {
    const unsigned one_two[] = {1, 2};
    const unsigned one_one[] = {1, 1};
    const unsigned rank3[] = {1, 1, 1};
    const unsigned single[] = {2};
    CHECK(cf2_abelian_p_formula(2, one_two) == 10);
    CHECK(cf2_abelian_p_formula(2, one_one) == 6);
    CHECK(cf2_abelian_p_formula(3, one_one) == 12);
    CHECK(cf2_abelian_p_formula(2, rank3) == 0);
    CHECK(cf2_abelian_p_formula(5, single) == 5);

    const unsigned decreasing[] = {2, 1};
    CHECK(cf2_abelian_p_formula(2, decreasing) == 10);  // order-insensitive
    CHECK_THROWS_AS(cf2_abelian_p_formula(4, single), ValidationError);
    CHECK_THROWS_AS(cf2_abelian_p_formula(2, {}), ValidationError);
}

TEST_CASE("two-generator 2-group closed forms") {
    CHECK(cf2_dihedral_formula(3) == 6);
    CHECK(cf2_dihedral_formula(4) == 8);
    CHECK(cf2_dihedral_formula(10) == 20);
    CHECK_THROWS_AS(cf2_dihedral_formula(2), ValidationError);

    CHECK(cf2_quaternion_formula(3) == 6);
    CHECK(cf2_quaternion_formula(4) == 8);
    CHECK(cf2_quaternion_formula(5) == 16);
    CHECK(cf2_quaternion_formula(6) == 32);
    CHECK(cf2_quaternion_formula(7) == 64);
    CHECK_THROWS_AS(cf2_quaternion_formula(2), ValidationError);

    CHECK(cf2_semidihedral_formula(4) == 12);
    CHECK(cf2_semidihedral_formula(5) == 24);
    CHECK(cf2_semidihedral_formula(6) == 48);
    CHECK(cf2_semidihedral_formula(7) == 96);
    CHECK_THROWS_AS(cf2_semidihedral_formula(3), ValidationError);
}

TEST_CASE("modular maximal-cyclic closed form") {
    CHECK(cf2_modular_formula(2, 3) == 8);
    CHECK(cf2_modular_formula(2, 4) == 14);
    CHECK(cf2_modular_formula(2, 5) == 18);
    CHECK(cf2_modular_formula(3, 3) == 24);
    CHECK(cf2_modular_formula(5, 3) == 70);
    CHECK(cf2_modular_formula(3, 4) == 36);
    CHECK_THROWS_AS(cf2_modular_formula(4, 3), ValidationError);
    CHECK_THROWS_AS(cf2_modular_formula(3, 2), ValidationError);
}

TEST_CASE("dicyclic closed form with its parity split") {
    CHECK(cf2_dicyclic_formula(1) == 5);
    CHECK(cf2_dicyclic_formula(2) == 6);
    CHECK(cf2_dicyclic_formula(3) == 12);
    CHECK(cf2_dicyclic_formula(4) == 8);
    CHECK(cf2_dicyclic_formula(5) == 20);
    CHECK(cf2_dicyclic_formula(6) == 12);
    CHECK(cf2_dicyclic_formula(7) == 28);
    CHECK(cf2_dicyclic_formula(8) == 16);
    CHECK(std::string(cf2_dicyclic_case(3)) != cf2_dicyclic_case(4));
    CHECK_THROWS_AS(cf2_dicyclic_formula(0), ValidationError);
}

TEST_CASE("generalized dicyclic closed form across gamma^2 choices") {
    CHECK(cf2_gen_dicyclic_formula(1, Gamma2Choice::b) == 5);
    CHECK(cf2_gen_dicyclic_formula(2, Gamma2Choice::b) == 10);
    CHECK(cf2_gen_dicyclic_formula(2, Gamma2Choice::a_half) == 10);
    CHECK(cf2_gen_dicyclic_formula(2, Gamma2Choice::a_half_b) == 10);
    CHECK(cf2_gen_dicyclic_formula(3, Gamma2Choice::b) == 12);
    CHECK(cf2_gen_dicyclic_formula(5, Gamma2Choice::b) == 20);
    CHECK(cf2_gen_dicyclic_formula(4, Gamma2Choice::a_half) == 0);
    CHECK(cf2_gen_dicyclic_formula(4, Gamma2Choice::b) == 16);
    CHECK(cf2_gen_dicyclic_formula(4, Gamma2Choice::a_half_b) == 16);
    CHECK(cf2_gen_dicyclic_formula(6, Gamma2Choice::a_half) == 24);
    CHECK(cf2_gen_dicyclic_formula(8, Gamma2Choice::a_half) == 0);
    CHECK(cf2_gen_dicyclic_formula(8, Gamma2Choice::a_half_b) == 32);
    CHECK_THROWS_AS(cf2_gen_dicyclic_formula(3, Gamma2Choice::a_half),
                    ValidationError);
}

TEST_CASE("dihedral subgroup csd closed form") {
    CHECK(csd_dihedral_subgroup_formula(1) == Rational(1));
    CHECK(csd_dihedral_subgroup_formula(2) == Rational(1));
    CHECK(csd_dihedral_subgroup_formula(3) == make_rational(19, 25));
    CHECK(csd_dihedral_subgroup_formula(4) == make_rational(41, 49));
    CHECK(csd_dihedral_subgroup_formula(5) == make_rational(29, 49));
    CHECK(csd_dihedral_subgroup_formula(6) == make_rational(19, 25));
    CHECK_THROWS_AS(csd_dihedral_subgroup_formula(0), ValidationError);
}

TEST_CASE("dihedral Moebius closed form") {
    using K = DihedralSubgroupKind;
    CHECK(dihedral_mobius_formula(6, 6, K::rotation) == BigInt(-1));
    CHECK(dihedral_mobius_formula(6, 3, K::rotation) == BigInt(2));
    CHECK(dihedral_mobius_formula(6, 1, K::rotation) == BigInt(-6));
    CHECK(dihedral_mobius_formula(6, 2, K::dihedral) == BigInt(-1));
    CHECK(dihedral_mobius_formula(6, 6, K::dihedral) == BigInt(1));
    CHECK(dihedral_mobius_formula(12, 3, K::dihedral) == BigInt(0));
    CHECK_THROWS_AS(dihedral_mobius_formula(6, 4, K::rotation), ValidationError);
}

TEST_CASE("formula dispatch over parsed specs") {
    auto value = [](const char* text) { return cf2_formula_for(parse_group_spec(text)); };
    CHECK(value("cyclic:12") == 15);
    CHECK(value("abelian:2^2,3^1") == 15);
    CHECK(value("abelian:2^1,2^1,2^1") == 0);
    CHECK(value("dihedral:7") == 14);
    CHECK(value("quaternion:5") == 16);
    CHECK(value("semidihedral:5") == 24);
    CHECK(value("modular:2,3") == 8);
    CHECK(value("dicyclic:6") == 12);
    CHECK(value("gendicyclic:4,ahalf") == 0);
    CHECK(value("symmetric:9") == 0);
    CHECK(value("alternating:9") == 0);
    CHECK(value("product:(cyclic:4)*(cyclic:3)") == 15);
    CHECK(value("product:(dihedral:3)*(cyclic:5)") == 18);

    CHECK_FALSE(value("symmetric:3").has_value());
    CHECK_FALSE(value("alternating:3").has_value());
    CHECK_FALSE(value("product:(cyclic:2)*(cyclic:4)").has_value());
}

TEST_CASE("formula catalogue is populated and self-consistent") {
    auto entries = formula_catalogue();
    CHECK(entries.size() >= 8);
    std::set<std::string> ids;
    for (const auto& e : entries) {
        CHECK(!e.id.empty());
        CHECK(!e.applies_to.empty());
        CHECK(!e.statement.empty());
        CHECK(!e.sweep.empty());
        ids.insert(e.id);
    }
    CHECK(ids.size() == entries.size());
}
