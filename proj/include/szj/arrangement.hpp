#pragma once

#include "szj/curve.hpp"

namespace szj {

// One face of the complement of the curve.  euler_char uses the convention
// that a face pinched at k of its boundary vertices counts as
// chi = 1 - k (a disk is 1, a figure-eight middle region pinched once is 0).
// The unbounded face carries euler_char 0 and winding 0 by convention.
struct Face {
    int winding = 0;
    int euler_char = 1;
    int boundary_cycles = 1;
    bool bounded = true;
    Vec2 sample;                    // interior sample point
    std::vector<int> darts;         // facial walk, dart indices
};

// Planar subdivision induced by a generic closed curve: vertices are the
// double points, edges are the arcs between consecutive passages.
struct Arrangement {
    std::vector<DoublePoint> dps;
    // arc i runs (along the curve) from passage order[i] to order[i+1];
    // its geometry as a sub-polyline
    struct Arc {
        std::vector<Vec2> pts;   // first/last are node locations (or the
                                 // whole curve when there are no nodes)
        int node_from = -1;      // double point index, -1 if no nodes
        int node_to = -1;
        double param_from = 0, param_to = 0;
    };
    std::vector<Arc> arcs;
    std::vector<Face> faces;
    int unbounded_face = -1;

    // dart 2*a = arc a traversed along the curve, 2*a+1 = reversed
    int dart_face(int dart) const { return dart_face_[dart]; }
    // face on the left / right of arc a (relative to curve direction)
    int face_left(int arc) const { return dart_face_[2 * arc]; }
    int face_right(int arc) const { return dart_face_[2 * arc + 1]; }

    // locate which face contains p (p must not lie on the curve)
    int locate(Vec2 p) const;

    int n_vertices() const { return static_cast<int>(dps.size()); }
    int n_edges() const { return static_cast<int>(arcs.size()); }
    int n_faces() const { return static_cast<int>(faces.size()); }

    std::vector<int> dart_face_;
};

// Build the arrangement.  Throws NotGeneric / DegenerateIntersection when
// the curve is not generic at tolerance tol.
Arrangement build_arrangement(const ClosedPolyline& c, double tol = kTol);

}  // namespace szj
