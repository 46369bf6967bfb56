#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "szj/arrangement.hpp"
#include "szj/construct.hpp"

using namespace szj;

namespace {

// (winding -> euler_char) over bounded faces
std::multimap<int, int> bounded_profile(const Arrangement& A) {
    std::multimap<int, int> prof;
    for (const auto& f : A.faces)
        if (f.bounded) prof.insert({f.winding, f.euler_char});
    return prof;
}

}  // namespace

TEST_CASE("embedded circle arrangement") {
    for (bool ccw : {true, false}) {
        Arrangement A = build_arrangement(circle({0, 0}, 1.0, ccw));
        CHECK(A.n_vertices() == 0);
        REQUIRE(A.n_faces() == 2);
        int inner = 1 - A.unbounded_face;
        CHECK(A.faces[inner].winding == (ccw ? 1 : -1));
        CHECK(A.faces[inner].euler_char == 1);
        CHECK(A.faces[A.unbounded_face].winding == 0);
        CHECK(A.faces[A.unbounded_face].euler_char == 0);
        CHECK(A.locate({0, 0}) == inner);
        CHECK(A.locate({5, 5}) == A.unbounded_face);
    }
}

TEST_CASE("figure eight arrangement") {
    Arrangement A = build_arrangement(standard_curve(0));
    CHECK(A.n_vertices() == 1);
    CHECK(A.n_edges() == 2);
    REQUIRE(A.n_faces() == 3);
    auto prof = bounded_profile(A);
    REQUIRE(prof.size() == 2);
    // two lobes of opposite winding, each a disk
    CHECK(prof.count(1) == 1);
    CHECK(prof.count(-1) == 1);
    for (auto& [w, chi] : prof) {
        (void)w;
        CHECK(chi == 1);
    }
}

TEST_CASE("limacon-style curve: disk inside disk pinched at the node") {
    // circle with one interior kink = standard curve of rotation 2
    ClosedPolyline k2 = standard_curve(2);
    Arrangement A = build_arrangement(k2);
    CHECK(A.n_vertices() == 1);
    REQUIRE(A.n_faces() == 3);
    auto prof = bounded_profile(A);
    // inner loop disk: winding 2, chi 1; big annular face pinched once:
    // winding 1, chi 0
    REQUIRE(prof.size() == 2);
    auto it2 = prof.find(2);
    REQUIRE(it2 != prof.end());
    CHECK(it2->second == 1);
    auto it1 = prof.find(1);
    REQUIRE(it1 != prof.end());
    CHECK(it1->second == 0);
    CHECK(A.faces[A.unbounded_face].winding == 0);
}

TEST_CASE("standard curve of rotation j: main face chi = 2 - j") {
    for (int j : {3, 4, 5}) {
        Arrangement A = build_arrangement(standard_curve(j));
        CHECK(A.n_vertices() == j - 1);
        auto prof = bounded_profile(A);
        // j-1 loop disks of winding 2 and one annular face of winding 1
        CHECK(static_cast<int>(prof.count(2)) == j - 1);
        auto it = prof.find(1);
        REQUIRE(it != prof.end());
        CHECK(it->second == 2 - j);
        // boundary cycle count matches the pinch convention
        for (const auto& f : A.faces)
            if (f.bounded && f.winding == 1) CHECK(f.boundary_cycles == j);
    }
}

TEST_CASE("multi loop spiral: n-1 nodes, Euler formula, winding profile") {
    for (int n : {2, 3, 5}) {
        ClosedPolyline s = multi_loop({0, 0}, n);
        Arrangement A = build_arrangement(s);
        CHECK(A.n_vertices() == n - 1);
        CHECK(A.n_vertices() - A.n_edges() + A.n_faces() == 2);
        CHECK(winding_number(s, {0, 0}) == n);
        CHECK(rotation_number(s) == n);
        // innermost face winds n
        bool seen_n = false;
        for (const auto& f : A.faces) seen_n = seen_n || f.winding == n;
        CHECK(seen_n);
    }
}

TEST_CASE("face samples agree with independently computed winding numbers") {
    for (const ClosedPolyline& c :
         {standard_curve(0), standard_curve(3), multi_loop({0, 0}, 4),
          multi_loop({0.3, -0.2}, 3, -1)}) {
        Arrangement A = build_arrangement(c);
        for (const auto& f : A.faces)
            CHECK(winding_number(c, f.sample) == f.winding);
    }
}

TEST_CASE("locate is consistent with samples") {
    ClosedPolyline c = multi_loop({0, 0}, 3);
    Arrangement A = build_arrangement(c);
    for (int fi = 0; fi < A.n_faces(); ++fi)
        CHECK(A.locate(A.faces[fi].sample) == fi);
}

TEST_CASE("arrangement rejects non-generic input") {
    ClosedPolyline bad;
    bad.pts = {{0, 0}, {1, 0}, {1, 1}, {0.5, 1}, {0.5, -0.0000001}, {0.2, 1.2}};
    CHECK_THROWS_AS((void)build_arrangement(bad), GeometryError);
}
