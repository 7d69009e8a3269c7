#include <string>

#include "doctest.h"
#include "json.hpp"

#include "cyclofact/errors.hpp"
#include "cyclofact/report.hpp"

using namespace cyclofact;

namespace {

OutputRecord full_record(const char* text) {
    return compute_record(parse_group_spec(text), Quantities{}, Methods{});
}

}  // namespace

TEST_CASE("csv header and golden rows") {
    CHECK(csv_header() == "spec,order,cf2_bf,cf2_mob,cf2_formula,f2,sd,csd,status");
    CHECK(to_csv(full_record("cyclic:1")) == "cyclic:1,1,1,1,1,1,1,1,OK");
    CHECK(to_csv(full_record("symmetric:3")) == "symmetric:3,6,6,6,,17,5/6,19/25,OK");
}

TEST_CASE("quantity and method selection leaves cells empty") {
    Quantities q;
    q.f2 = q.sd = q.csd = false;
    Methods m;
    m.bruteforce = m.mobius = false;
    auto r = compute_record(parse_group_spec("dihedral:5"), q, m);
    CHECK(to_csv(r) == "dihedral:5,10,,,10,,,,OK");
    CHECK(r.match_flags.empty());
}

TEST_CASE("records serialize to json") {
    auto j = nlohmann::json::parse(to_json(full_record("symmetric:3")));
    CHECK(j["spec"] == "symmetric:3");
    CHECK(j["order"] == 6);
    CHECK(j["cf2_bf"] == 6);
    CHECK(j["cf2_mob"] == 6);
    CHECK_FALSE(j.contains("cf2_formula"));
    CHECK(j["f2"] == 17);
    CHECK(j["sd"] == "5/6");
    CHECK(j["csd"] == "19/25");
    CHECK(j["ok"] == true);
    CHECK(j["matches"]["cf2_bf_vs_mob"] == true);
    CHECK(j["matches"]["sd_bf_vs_identity"] == true);
    CHECK(j.contains("note"));  // no closed form applies to symmetric:3

    auto jq = nlohmann::json::parse(to_json(full_record("quaternion:3")));
    CHECK(jq["cf2_formula"] == 6);
    CHECK(jq["matches"]["cf2_bf_vs_formula"] == true);
}

TEST_CASE("text rendering names the group and the verdict") {
    auto text = to_text(full_record("cyclic:4"));
    CHECK(text.find("cyclic:4") != std::string::npos);
    CHECK(text.find("status: OK") != std::string::npos);
}

TEST_CASE("family tables clamp to valid parameters") {
    Quantities q;
    q.f2 = q.sd = q.csd = false;
    auto rows = table_records("dihedral", 1, 6, q, Methods{});
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].spec == "dihedral:3");
    CHECK(rows[3].spec == "dihedral:6");
    CHECK(*rows[3].cf2_formula == 12);

    auto modular_rows = table_records("modular3", 1, 4, q, Methods{});
    REQUIRE(modular_rows.size() == 2);
    CHECK(modular_rows[0].spec == "modular:3,3");
    CHECK(*modular_rows[0].cf2_bf == 24);

    CHECK_THROWS_AS(table_records("frobnitz", 1, 3, q, Methods{}), ValidationError);
    CHECK_THROWS_AS(table_records("modular", 1, 3, q, Methods{}), ValidationError);
    CHECK_THROWS_AS(table_records("cyclic", 5, 3, q, Methods{}), ValidationError);
}

TEST_CASE("lattice dumps carry subgroups, inclusions and Moebius values") {
    auto j = nlohmann::json::parse(lattice_dump_json(parse_group_spec("cyclic:4")));
    CHECK(j["group"] == "cyclic:4");
    CHECK(j["order"] == 4);
    CHECK(j["lattice_size"] == 3);
    CHECK(j["cyclic_poset_size"] == 3);
    REQUIRE(j["subgroups"].size() == 3);
    CHECK(j["subgroups"][0]["order"] == 1);
    CHECK(j["subgroups"][0]["members"] == nlohmann::json::array({0}));
    CHECK(j["subgroups"][2]["order"] == 4);
    CHECK(j["inclusion_pairs"].size() == 3);

    bool saw_bottom_top = false;
    for (const auto& e : j["mobius"])
        if (e["h"] == 0 && e["k"] == 2) {
            saw_bottom_top = true;
            CHECK(e["value"] == 0);
        }
    CHECK(saw_bottom_top);
}
