#pragma once

#include <string>
#include <vector>

#include "szj/curve.hpp"

namespace szj {

enum class MapKind { levi_civita_E, levi_civita_M, birkhoff };

// z -> a*z + b over complex coordinates.
struct Similarity {
    Vec2 a{1.0, 0.0};
    Vec2 b{0.0, 0.0};
    Vec2 operator()(Vec2 z) const {
        return from_complex(to_complex(a) * to_complex(z) + to_complex(b));
    }
};

struct MarkedPoint {
    std::string label;
    Vec2 where;
};

// Preimage of a curve under a two-to-one covering map, after normalizing
// coordinates.  `normalization` is the transform that was applied to the
// source before lifting; covering_map(component point) reproduces the
// normalized source.
struct LiftResult {
    MapKind map_kind = MapKind::birkhoff;
    std::vector<ClosedPolyline> components;
    std::vector<MarkedPoint> marked_images;
    bool connected = false;
    Similarity normalization;
};

// Preimage under the complex square map L(z) = z^2 based at the given center
// (curve translated so the center is the origin).  One component when the
// winding about the center is odd, two otherwise.
LiftResult levi_civita_lift(const MarkedCurve& c, char at /* 'E' or 'M' */);

// Preimage under B(z) = (z + 1/z)/2 after the similarity sending the marked
// centers to -1 and +1.  One component when w_E + w_M is odd, two otherwise.
LiftResult birkhoff_lift(const MarkedCurve& c);

// Image under z -> 1/z with arc-subtension resampling about the origin.
// w0 negates and r becomes r - 2*w0.
ClosedPolyline invert(const ClosedPolyline& c);

// Pointwise images under the covering maps (for round-trip checks).
ClosedPolyline project_square(const ClosedPolyline& c);
ClosedPolyline project_birkhoff(const ClosedPolyline& c);

// Symmetric Hausdorff distance between the two polylines.
double hausdorff_distance(const ClosedPolyline& a, const ClosedPolyline& b);

}  // namespace szj
