#include <array>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"

#include "cyclofact/counting.hpp"
#include "cyclofact/errors.hpp"
#include "cyclofact/families.hpp"

using namespace cyclofact;

namespace {

void check_counts_against_oracle(const FiniteGroup& g) {
    CAPTURE(g.name());
    auto lat = enumerate_subgroups(g);
    auto mob = mobius_table(lat);
    auto pm = permutability_matrix(lat);

    auto cf = oracle::cf2(g);
    auto f = oracle::f2(g);
    CHECK(cf2_bruteforce(lat) == cf);
    CHECK(f2_bruteforce(lat) == f);
    CHECK(cf2_mobius(lat, mob, pm) == cf);
    CHECK(f2_mobius(lat, mob, pm) == f);
    CHECK(cf2_of_subgroup(lat, lat.top()) == cf);
    CHECK(f2_of_subgroup(lat, lat.top()) == f);

    auto [sd_hits, sd_total] = oracle::permuting_pairs(g, false);
    auto [csd_hits, csd_total] = oracle::permuting_pairs(g, true);
    CHECK(sd(lat, pm) == make_rational(sd_hits, sd_total));
    CHECK(csd(lat, pm) == make_rational(csd_hits, csd_total));
    CHECK(sd_from_subgroup_f2(lat) == make_rational(sd_hits, sd_total));
    CHECK(csd_from_subgroup_cf2(lat) == make_rational(csd_hits, csd_total));

    // The permutability relation is symmetric and total on the ends.
    for (std::size_t i = 0; i < pm.size(); ++i) {
        CHECK(pm.permutes(0, i));
        CHECK(pm.permutes(i, lat.top()));
        for (std::size_t j = 0; j < i; ++j)
            CHECK(pm.permutes(i, j) == pm.permutes(j, i));
    }
}

}  // namespace

TEST_CASE("counting engines agree with the exhaustive oracle") {
    check_counts_against_oracle(build_cyclic(12));
    check_counts_against_oracle(build_symmetric(3));
    check_counts_against_oracle(build_dihedral(4));
    check_counts_against_oracle(build_generalized_quaternion(3));
    check_counts_against_oracle(build_dicyclic(3));
    check_counts_against_oracle(build_semidihedral(4));
    check_counts_against_oracle(build_modular_p(2, 4));
    std::vector<std::pair<long long, long long>> z2z4 = {{2, 1}, {2, 2}};
    check_counts_against_oracle(build_abelian(z2z4));
    std::vector<std::pair<long long, long long>> z2cubed = {{2, 1}, {2, 1}, {2, 1}};
    check_counts_against_oracle(build_abelian(z2cubed));
}

TEST_CASE("pinned invariant values") {
    struct Pin {
        const char* spec;
        long long cf2_value;
        long long f2_value;
        const char* sd_text;
        const char* csd_text;
    };
    const Pin pins[] = {
        {"cyclic:1", 1, 1, "1", "1"},
        {"cyclic:2", 3, 3, "1", "1"},
        {"cyclic:12", 15, 15, "1", "1"},
        {"abelian:2^1,2^1", 6, 15, "1", "1"},
        {"symmetric:3", 6, 17, "5/6", "19/25"},
        {"dihedral:4", 8, -1, "", "41/49"},
        {"quaternion:3", 6, -1, "", ""},
        {"abelian:2^1,2^2", 10, -1, "", ""},
        {"abelian:2^1,2^1,2^1", 0, -1, "", ""},
        {"abelian:3^1,3^1", 12, -1, "", ""},
        {"dicyclic:3", 12, -1, "", ""},
        {"semidihedral:4", 12, -1, "", ""},
        {"modular:2,4", 14, -1, "", ""},
        {"modular:3,3", 24, -1, "", ""},
        {"product:(symmetric:3)*(cyclic:2)", 12, -1, "", ""},
        {"product:(symmetric:3)*(cyclic:5)", 18, -1, "", ""},
        {"symmetric:4", 0, -1, "", ""},
        {"alternating:4", 0, -1, "", ""},
    };
    for (const auto& pin : pins) {
        CAPTURE(pin.spec);
        auto g = build_group(parse_group_spec(pin.spec));
        auto lat = enumerate_subgroups(g);
        CHECK(cf2_bruteforce(lat) == pin.cf2_value);
        if (pin.f2_value >= 0) CHECK(f2_bruteforce(lat) == pin.f2_value);
        if (pin.sd_text[0] || pin.csd_text[0]) {
            auto pm = permutability_matrix(lat);
            if (pin.sd_text[0]) CHECK(to_string(sd(lat, pm)) == pin.sd_text);
            if (pin.csd_text[0]) CHECK(to_string(csd(lat, pm)) == pin.csd_text);
        }
    }
}

TEST_CASE("per-subgroup degrees are exact at the ends") {
    auto g = build_dihedral(4);
    auto lat = enumerate_subgroups(g);
    auto pm = permutability_matrix(lat);
    CHECK(sd_of_subgroup(lat, pm, lat.bottom()) == Rational(1));
    CHECK(csd_of_subgroup(lat, pm, lat.bottom()) == Rational(1));
    CHECK(sd_of_subgroup(lat, pm, lat.top()) == sd(lat, pm));
    CHECK(csd_of_subgroup(lat, pm, lat.top()) == csd(lat, pm));
}

TEST_CASE("coprime product rule") {
    auto z4 = build_cyclic(4);
    auto z3 = build_cyclic(3);
    auto lat4 = enumerate_subgroups(z4);
    auto lat3 = enumerate_subgroups(z3);
    const std::array<const SubgroupLattice*, 2> parts = {&lat4, &lat3};
    CHECK(cf2_coprime_product(parts) == 15);

    auto z2 = build_cyclic(2);
    auto lat2 = enumerate_subgroups(z2);
    const std::array<const SubgroupLattice*, 2> clash = {&lat4, &lat2};
    CHECK_THROWS_AS(cf2_coprime_product(clash), ValidationError);
}

TEST_CASE("invariant reports carry both engines to the same place") {
    auto g = build_symmetric(3);
    auto lat = enumerate_subgroups(g);
    auto bf = invariant_report(lat, Method::bruteforce);
    auto mb = invariant_report(lat, Method::mobius);
    CHECK(bf.order == 6);
    CHECK(bf.lattice_size == 6);
    CHECK(bf.cyclic_poset_size == 5);
    CHECK(bf.cf2 == 6);
    CHECK(bf.f2 == 17);
    CHECK(to_string(bf.sd_value) == "5/6");
    CHECK(to_string(bf.csd_value) == "19/25");
    CHECK(mb.cf2 == bf.cf2);
    CHECK(mb.f2 == bf.f2);
    CHECK(mb.sd_value == bf.sd_value);
    CHECK(mb.csd_value == bf.csd_value);
}

TEST_CASE("threaded permutability matches single-threaded") {
    auto g = build_symmetric(4);
    auto lat = enumerate_subgroups(g);
    CountingOptions serial;
    CountingOptions parallel;
    parallel.jobs = 4;
    auto a = permutability_matrix(lat, serial);
    auto b = permutability_matrix(lat, parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            CHECK(a.permutes(i, j) == b.permutes(i, j));
}
