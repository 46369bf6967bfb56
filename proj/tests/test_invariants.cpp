#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "szj/arnold.hpp"
#include "szj/construct.hpp"
#include "szj/invariants.hpp"
#include "szj/lift.hpp"

using namespace szj;

namespace {

MarkedCurve marked(ClosedPolyline c) {
    return MarkedCurve{std::move(c), {-1, 0}, {1, 0}};
}

bool relation_ok(const RelationReport& rr, const std::string& name) {
    for (const auto& c : rr.checks)
        if (c.name == name) return c.applicable && c.ok;
    return false;
}

}  // namespace

TEST_CASE("residue class normalization") {
    CHECK(ResidueClass::reduce(-2, 4) == ResidueClass{4, 2});
    CHECK(ResidueClass::reduce(6, 4) == ResidueClass{4, 2});
    CHECK(ResidueClass::reduce(-12, 8) == ResidueClass{8, 4});
    CHECK(ResidueClass::reduce(-2, 0) == ResidueClass{0, -2});
}

TEST_CASE("two-arm curve around both centers") {
    MarkedCurve c = marked(k_n(2));
    InvariantReport rep = full_report(c);
    CHECK(rep.j_plus == -2);
    CHECK(rep.w_e == 2);
    CHECK(rep.w_m == 2);
    CHECK(rep.j0_doubled == 4);
    CHECK(rep.jE_doubled == 2);
    CHECK(rep.jM_doubled == 2);
    CHECK(rep.n == 2);
    CHECK(rep.jEM == ResidueClass{4, 2});
    CHECK(rep.free_class == FreeClass{FreeClass::EM_power, 2});

    RelationReport rr = check_relations(rep);
    CHECK(rr.all_ok);
    // 2 + 1 + 1 + jEM = 2 mod 4
    CHECK(relation_ok(rr, "both_even_mod4_sum"));
    CHECK(relation_ok(rr, "both_even_jE_jM_half_n"));
}

TEST_CASE("small circle around one center") {
    MarkedCurve c = marked(circle({-1, 0}, 0.4, true, 128));
    InvariantReport rep = full_report(c);
    CHECK(rep.w_e == 1);
    CHECK(rep.w_m == 0);
    CHECK(rep.j0_doubled == 1);
    CHECK(rep.jE_doubled == 0);
    CHECK(rep.jM_doubled == 1);  // two-component lift, one loop around E1
    CHECK(rep.n == 0);
    CHECK(rep.jEM == ResidueClass{0, 0});
    CHECK(rep.free_class == FreeClass{FreeClass::E_class, 0});

    RelationReport rr = check_relations(rep);
    CHECK(rr.all_ok);
    CHECK(relation_ok(rr, "wE_odd_jE"));
    CHECK(relation_ok(rr, "wE_odd_wM_even_div4"));

    MarkedCurve m = marked(circle({1, 0}, 0.4, true, 128));
    InvariantReport mrep = full_report(m);
    CHECK(mrep.j0_doubled == 1);
    CHECK(mrep.jE_doubled == 1);
    CHECK(mrep.jM_doubled == 0);
    CHECK(mrep.free_class == FreeClass{FreeClass::M_class, 0});
    CHECK(check_relations(mrep).all_ok);
}

TEST_CASE("embedded circle around both centers") {
    MarkedCurve c = marked(circle({0, 0}, 2.0, true, 256));
    InvariantReport rep = full_report(c);
    CHECK(rep.j_plus == 0);
    CHECK(rep.w_e == 1);
    CHECK(rep.w_m == 1);
    CHECK(rep.j0_doubled == 2);
    CHECK(rep.jE_doubled == 2);
    CHECK(rep.jM_doubled == 2);
    CHECK(rep.n == 1);
    CHECK(rep.jEM == ResidueClass{2, 0});
    CHECK(rep.free_class == FreeClass{FreeClass::EM_power, 1});

    RelationReport rr = check_relations(rep);
    CHECK(rr.all_ok);
    // both odd: jE = jM = 2*j0 - 1 = 1
    CHECK(relation_ok(rr, "wE_odd_jE"));
    CHECK(relation_ok(rr, "wM_odd_jM"));
}

TEST_CASE("contractible circle away from both centers") {
    MarkedCurve c = marked(circle({0, 3}, 0.5, true, 128));
    InvariantReport rep = full_report(c);
    CHECK(rep.j0_doubled == 0);
    CHECK(rep.jE_doubled == 0);
    CHECK(rep.jM_doubled == 0);
    CHECK(rep.n == 0);
    CHECK(rep.jEM == ResidueClass{0, 0});
    CHECK(rep.free_class == FreeClass{FreeClass::EM_power, 0});
    CHECK(check_relations(rep).all_ok);
}

TEST_CASE("four-arm curve") {
    MarkedCurve c = marked(k_n(4));
    InvariantReport rep = full_report(c);
    CHECK(rep.j_plus == -12);
    CHECK(rep.j0_doubled == 8);
    CHECK(rep.jE_doubled == 4);
    CHECK(rep.n == 4);
    CHECK(rep.jEM == ResidueClass{8, 4});  // -12 mod 8
    CHECK(check_relations(rep).all_ok);
}

TEST_CASE("three-arm curve satisfies the odd-power parities") {
    MarkedCurve c = marked(k_n(3));
    InvariantReport rep = full_report(c);
    CHECK(rep.j0_doubled == 6);
    CHECK(rep.n == 3);
    CHECK(rep.free_class == FreeClass{FreeClass::EM_power, 3});
    RelationReport rr = check_relations(rep);
    CHECK(rr.all_ok);
    CHECK(relation_ok(rr, "class_parities"));
    CHECK(relation_ok(rr, "wE_odd_jE"));
}

TEST_CASE("odd earth winding gives jE from one lift plus squared moon winding") {
    for (const MarkedCurve& c : {marked(circle({0, 0}, 2.0, true, 256)),
                                 marked(circle({-1, 0}, 0.4, true, 128)),
                                 marked(k_n(3))}) {
        LiftResult lift = levi_civita_lift(c, 'E');
        REQUIRE(lift.connected);
        int wm = winding_number(c.curve, c.moon);
        CHECK(jE_doubled(c) == 2 * (j_plus(lift.components[0]) + wm * wm));
    }
}

TEST_CASE("relation checker flags violations") {
    InvariantReport rep = full_report(marked(k_n(2)));
    rep.jE_doubled += 2;
    RelationReport rr = check_relations(rep);
    CHECK_FALSE(rr.all_ok);
    CHECK_FALSE(relation_ok(rr, "class_parities"));
}

TEST_CASE("report serializes to flat json") {
    InvariantReport rep = full_report(marked(k_n(2)));
    nlohmann::json j = nlohmann::json::parse(to_json(rep));
    CHECK(j["j_plus"] == -2);
    CHECK(j["j0_doubled"] == 4);
    CHECK(j["jEM_value"] == 2);
    CHECK(j["jEM_modulus"] == 4);
    CHECK(j["n"] == 2);
    CHECK(j["free_class"] == "EM");
    CHECK(j["em_power"] == 2);

    nlohmann::json r = nlohmann::json::parse(to_json(check_relations(rep)));
    CHECK(r["all_ok"] == true);
    CHECK(r["checks"].is_array());
}
