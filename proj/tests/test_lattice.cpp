#include <algorithm>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"

#include "cyclofact/errors.hpp"
#include "cyclofact/families.hpp"
#include "cyclofact/lattice.hpp"

using namespace cyclofact;

namespace {

std::uint64_t mask_of(const Subgroup& s) {
    std::uint64_t m = 0;
    for (auto i : s.members.to_indices()) m |= 1ULL << i;
    return m;
}

void check_against_oracle(const FiniteGroup& g) {
    CAPTURE(g.name());
    auto lat = enumerate_subgroups(g);
    auto expected = oracle::subgroup_masks(g);

    std::vector<std::uint64_t> got;
    for (std::size_t i = 0; i < lat.size(); ++i) got.push_back(mask_of(lat.subgroup(i)));

    auto sorted = got;
    std::sort(sorted.begin(), sorted.end());
    REQUIRE(sorted == expected);

    // Sorted by order, trivial first, whole group last, and the index of a
    // proper subgroup is always below the index of any subgroup over it.
    CHECK(lat.subgroup(lat.bottom()).order == 1);
    CHECK(lat.subgroup(lat.top()).order == g.order());
    for (std::size_t i = 0; i + 1 < lat.size(); ++i)
        CHECK(lat.subgroup(i).order <= lat.subgroup(i + 1).order);

    for (std::size_t i = 0; i < lat.size(); ++i) {
        CHECK(lat.subgroup(i).is_cyclic == oracle::mask_is_cyclic(g, got[i]));
        CHECK(lat.cyclic_mask().test(i) == lat.subgroup(i).is_cyclic);

        unsigned below_cyclic = 0;
        std::vector<std::uint32_t> below;
        for (std::size_t j = 0; j < lat.size(); ++j) {
            bool subset = (got[j] & got[i]) == got[j];
            CHECK(lat.leq(j, i) == subset);
            CHECK(lat.below_mask(i).test(j) == subset);
            if (subset) {
                below.push_back(std::uint32_t(j));
                if (lat.subgroup(j).is_cyclic) ++below_cyclic;
            }
            if (subset && i != j) CHECK(j < i);
        }
        CHECK(lat.below(i) == below);
        CHECK(lat.cyclic_count_below(i) == below_cyclic);
    }

    for (std::size_t i = 0; i < lat.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            CHECK(mask_of(lat.subgroup(lat.meet(i, j))) == (got[i] & got[j]));
            CHECK(mask_of(lat.subgroup(lat.join(i, j))) ==
                  oracle::closure_mask(g, got[i] | got[j]));
        }
}

}  // namespace

TEST_CASE("lattice enumeration matches exhaustive subset search") {
    check_against_oracle(build_cyclic(12));
    check_against_oracle(build_cyclic(16));
    check_against_oracle(build_dihedral(4));
    check_against_oracle(build_dihedral(6));
    check_against_oracle(build_generalized_quaternion(3));
    check_against_oracle(build_symmetric(3));
    check_against_oracle(build_dicyclic(3));
    check_against_oracle(build_semidihedral(4));
    check_against_oracle(build_modular_p(2, 4));
    std::vector<std::pair<long long, long long>> z2z4 = {{2, 1}, {2, 2}};
    check_against_oracle(build_abelian(z2z4));
    std::vector<std::pair<long long, long long>> z2cubed = {{2, 1}, {2, 1}, {2, 1}};
    check_against_oracle(build_abelian(z2cubed));
    std::vector<std::pair<long long, long long>> z2fourth = {
        {2, 1}, {2, 1}, {2, 1}, {2, 1}};
    check_against_oracle(build_abelian(z2fourth));
}

TEST_CASE("known lattice sizes") {
    auto d8 = build_dihedral(4);
    auto lat = enumerate_subgroups(d8);
    CHECK(lat.size() == 10);
    CHECK(lat.cyclic_indices().size() == 7);

    auto q16 = build_generalized_quaternion(4);
    auto lat16 = enumerate_subgroups(q16);
    CHECK(lat16.size() == 11);
    CHECK(lat16.cyclic_count_below(lat16.top()) == 8);
}

TEST_CASE("index_of finds members and rejects strangers") {
    auto g = build_cyclic(6);
    auto lat = enumerate_subgroups(g);
    for (std::size_t i = 0; i < lat.size(); ++i)
        CHECK(lat.index_of(lat.subgroup(i).members) == i);
    Bitset not_a_subgroup(6);
    not_a_subgroup.set(0);
    not_a_subgroup.set(1);
    CHECK_THROWS_AS(lat.index_of(not_a_subgroup), ConsistencyError);
}

TEST_CASE("Moebius values satisfy the defining recursion and known columns") {
    struct Row {
        const FiniteGroup g;
        long mu_bottom_top;
    };
    const Row rows[] = {
        {build_cyclic(4), 0},
        {build_cyclic(6), 1},
        {build_abelian(std::vector<std::pair<long long, long long>>{{2, 1}, {2, 1}}), 2},
        {build_abelian(std::vector<std::pair<long long, long long>>{{2, 1}, {2, 1}, {2, 1}}),
         -8},
        {build_dihedral(4), 0},
        {build_generalized_quaternion(3), 0},
        {build_symmetric(3), 3},
    };
    for (const auto& row : rows) {
        CAPTURE(row.g.name());
        auto lat = enumerate_subgroups(row.g);
        auto mob = mobius_table(lat);
        CHECK(mob.at(lat.bottom(), lat.top()) == BigInt(row.mu_bottom_top));
        for (std::size_t k = 0; k < lat.size(); ++k) {
            BigInt sum = 0;
            for (auto h : lat.below(k)) sum += mob.at(h, k);
            CHECK(sum == BigInt(k == lat.bottom() ? 1 : 0));
        }
        CHECK_THROWS_AS(mob.at(lat.top(), lat.bottom()), ValidationError);
    }
}

TEST_CASE("Hall's closed form for p-group Moebius values") {
    CHECK(hall_mobius(2, 1, true) == BigInt(-1));
    CHECK(hall_mobius(2, 2, true) == BigInt(2));
    CHECK(hall_mobius(3, 2, true) == BigInt(3));
    CHECK(hall_mobius(2, 3, true) == BigInt(-8));
    CHECK(hall_mobius(2, 4, true) == BigInt(64));
    CHECK(hall_mobius(5, 3, true) == BigInt(-125));
    CHECK(hall_mobius(2, 3, false) == BigInt(0));
}

TEST_CASE("normality and quotients") {
    auto d8 = build_dihedral(4);
    auto rot = generated_subgroup(d8, {1});
    auto refl = generated_subgroup(d8, {4});
    auto center = generated_subgroup(d8, {2});
    CHECK(is_normal(d8, rot));
    CHECK_FALSE(is_normal(d8, refl));
    CHECK(is_normal(d8, center));

    auto q = quotient_group(d8, center);
    CHECK(q.order() == 4);
    CHECK(q.element_order_census() == std::vector<unsigned>{1, 2, 2, 2});
    CHECK_THROWS_AS(quotient_group(d8, refl), ValidationError);

    auto q8 = build_generalized_quaternion(3);
    auto zq = generated_subgroup(q8, {2});  // x^2 = -1
    CHECK(quotient_group(q8, zq).element_order_census() ==
          std::vector<unsigned>{1, 2, 2, 2});

    auto z12 = build_cyclic(12);
    auto z3 = generated_subgroup(z12, {4});
    auto qz = quotient_group(z12, z3);
    CHECK(qz.order() == 4);
    CHECK(qz.is_cyclic());
}

TEST_CASE("quotient census over a normal subgroup") {
    auto d8 = build_dihedral(4);
    auto lat = enumerate_subgroups(d8);
    auto center = generated_subgroup(d8, {2});
    auto h = lat.index_of(center.members);
    auto infos = quotient_census(lat, h);
    REQUIRE(infos.size() == 5);  // subgroups of D_8 containing the center
    unsigned cyclic = 0;
    for (const auto& info : infos) {
        CHECK(lat.subgroup(info.subgroup_index).order == 2 * info.quotient_order);
        if (info.quotient_cyclic) ++cyclic;
    }
    CHECK(cyclic == 4);  // all but D_8 / center, the Klein quotient
}

TEST_CASE("capacity limits") {
    LatticeOptions tight;
    tight.subgroup_budget = 5;
    CHECK_THROWS_AS(enumerate_subgroups(build_dihedral(4), tight), CapacityError);

    // Force the adjacency-list fallback and compare with the matrix path.
    LatticeOptions no_matrix;
    no_matrix.inclusion_matrix_limit = 1;
    auto g = build_dihedral(4);
    auto a = enumerate_subgroups(g);
    auto b = enumerate_subgroups(g, no_matrix);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            CHECK(a.leq(i, j) == b.leq(i, j));
}
