#pragma once

#include "szj/arrangement.hpp"

namespace szj {

// J+ of a generic closed curve, via the face-weighted Euler characteristic
// formula: J+ = 1 + n - sum over faces of w^2 * chi.
int j_plus(const ClosedPolyline& c, double tol = kTol);
int j_plus(const Arrangement& A);

// Spherical variant: SJ+ = J+ + r^2 / 2.  Half-integer, returned doubled.
int sj_plus_doubled(const ClosedPolyline& c, double tol = kTol);

// Predicted change of J+ when a small loop is appended inside a face of
// winding w (positively attached): -2w.
inline int j_plus_delta_prediction(int w) { return -2 * w; }

}  // namespace szj
