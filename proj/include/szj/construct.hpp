#pragma once

#include <cstdint>
#include <optional>

#include "szj/arrangement.hpp"
#include "szj/curve.hpp"

namespace szj {

// Corridor used to splice two curves: cut points and rail half-width.
// When width <= 0 a width is chosen automatically from local clearance.
struct CorridorSpec {
    double param_a = -1.0;  // cut parameter on the first curve (-1: search)
    double param_b = -1.0;  // cut parameter on the second curve
    double width = 0.0;
};

// Circle of radius r around ctr; positive orientation for ccw=true.
ClosedPolyline circle(Vec2 ctr, double r, bool ccw = true, int segments = 64);

// The standard curve of rotation number j: an embedded circle for |j| = 1,
// a figure eight for j = 0, and a circle carrying |j| - 1 interior same-turn
// loops otherwise.  J+ is 0 for j in {0, 1, -1} and 2 - 2|j| in general.
ClosedPolyline standard_curve(int j);

// Spiral with n arms winding positively (orient=+1) or negatively around
// ctr; exactly n - 1 double points, rotation orient * n, J+ = -n(n-1).
// All of it lives in the annulus inner_r <= |z - ctr| <= inner_r + n*spacing.
// flat=true squeezes the spiral into a thin horizontal strip through ctr.
ClosedPolyline multi_loop(Vec2 ctr, int n, int orient = 1, double inner_r = 1.5,
                          double spacing = 0.4, bool flat = false,
                          int segments_per_turn = 96);

// The curve K_n of the grading family: n arms around both centers.
ClosedPolyline k_n(int n, Vec2 earth = {-1, 0}, Vec2 moon = {1, 0});

// Insert a small kink (one new double point) at the given parameter, with the
// loop disk on the left (side=+1) or right (side=-1) of the travel direction.
// The rotation number changes by `side`, and j_plus by -2*side*w, where w is
// the winding of the face the loop lands in.
ClosedPolyline insert_kink(const ClosedPolyline& c, double param, int side,
                           double size);

// Attach a loop encircling `around` once (orient=+-1) to the curve at
// `param`, reached through a thin corridor along the sight line.  One new
// double point; unlike a kink, the loop orientation is free.
ClosedPolyline insert_lasso(const ClosedPolyline& c, double param, Vec2 around,
                            double radius, int orient, double corridor_width = 0.0);

// Plain connected sum: splice b into a through a crossing-free corridor.
// J+ adds, rotation adds minus one.
ClosedPolyline connected_sum(const ClosedPolyline& a, const ClosedPolyline& b,
                             CorridorSpec spec = {});

// Interior connected sum: b must wind zero around the origin and lie inside
// the face of a containing the origin; a must lie in the unbounded component
// of the complement of b.  Checked.  J+ = J+(a) + J+(b) - 2 w0(a) (r(b) + 1).
ClosedPolyline interior_connected_sum(const ClosedPolyline& a,
                                      const ClosedPolyline& b,
                                      CorridorSpec spec = {});

// Add a small loop into the given face at attach_param, which must lie on an
// arc bounding that face.  j_plus changes by -2*w(K,C) where C is the chosen
// face and K is oriented so the attachment arc bounds C positively; the
// rotation number changes by +-1.  Throws ConstructionError if the face is
// not adjacent to the arc at attach_param.
ClosedPolyline add_loop(const ClosedPolyline& c, const Face& face,
                        double attach_param, double size = 0);

// Convenience overload: add a loop into the face containing `inside`,
// searching the face boundary for a workable attachment site.
ClosedPolyline add_loop(const ClosedPolyline& c, Vec2 inside,
                        double radius = 0.0);

// Realize (rotation, w_E, w_M) with centers (-1,0) and (1,0).
MarkedCurve realize_triple(int rot, int w_e, int w_m);

// Realize (J+, J+ of one squared-lift component, w0, rotation) around the
// origin; requires J+ and w0 even, J+ of the lift even.  strip=true uses the
// flattened-spiral base.
ClosedPolyline realize_quadruple(int jp, int jp_lift, int w0, int rot,
                                 bool strip = false);

// Realize a full invariant tuple (doubled half-integers for j0, jE, jM;
// jEM a residue representative) for the class determined by the parities of
// (w_e, w_m).  Throws ConstructionError when the tuple violates the
// arithmetic constraints of its class.
MarkedCurve realize_sz_tuple(int j0_doubled, int je_doubled, int jm_doubled,
                             int jem, int w_e, int w_m);

}  // namespace szj
