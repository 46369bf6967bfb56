#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "szj/errors.hpp"

namespace szj {

// Absolute tolerance (plane units and sine-of-angle) for genericity checks.
inline constexpr double kTol = 1e-6;
// Relative tolerance for numeric comparisons.
inline constexpr double kRelTol = 1e-9;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double xx, double yy) : x(xx), y(yy) {}

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2 operator-() const { return {-x, -y}; }
    bool operator==(const Vec2&) const = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }
inline double norm2(Vec2 a) { return dot(a, a); }
inline Vec2 normalized(Vec2 a) { return a / norm(a); }
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }  // rotate +90 degrees

inline std::complex<double> to_complex(Vec2 a) { return {a.x, a.y}; }
inline Vec2 from_complex(std::complex<double> z) { return {z.real(), z.imag()}; }

// Oriented closed polyline.  Vertex i connects to vertex (i+1) mod size;
// the closing edge is implicit.  Parameters along the curve are arc length
// measured from vertex 0.
struct ClosedPolyline {
    std::vector<Vec2> pts;

    std::size_t size() const { return pts.size(); }
    Vec2 vertex(std::size_t i) const { return pts[i % pts.size()]; }
    // Directed edge i: vertex(i) -> vertex(i+1).
    Vec2 edge(std::size_t i) const { return vertex(i + 1) - vertex(i); }

    double length() const;
    // Cumulative arc length at vertex i (0 <= i <= size()).
    double param_of_vertex(std::size_t i) const;
    // Point at arc-length parameter t (taken mod total length).
    Vec2 point_at(double t) const;
    // Unit tangent at parameter t (undefined exactly at vertices; the
    // tangent of the containing edge is returned).
    Vec2 tangent_at(double t) const;
    // Index of the edge containing parameter t, plus offset within it.
    std::pair<std::size_t, double> locate_param(double t) const;

    void translate(Vec2 d);
    void scale(double s);
    // z -> a*z + b (complex affine map, orientation preserving for a != 0).
    void similarity(std::complex<double> a, std::complex<double> b);
    ClosedPolyline reversed() const;
};

// One transverse self-intersection.  param_a < param_b are the arc-length
// parameters of the two passages; sign is the sign of
// cross(tangent(param_a), tangent(param_b)).
struct DoublePoint {
    Vec2 where;
    double param_a = 0.0;
    double param_b = 0.0;
    int sign = 0;
    std::size_t edge_a = 0;
    std::size_t edge_b = 0;
};

struct GenericityViolation {
    std::string kind;  // "tangential" | "triple" | "vertex_contact" |
                       // "cusp" | "center_on_curve" | "short_edge"
    std::string detail;
    Vec2 where;
};

struct GenericityReport {
    bool ok = true;
    std::vector<GenericityViolation> violations;
};

// A curve together with the two marked centers.
struct MarkedCurve {
    ClosedPolyline curve;
    Vec2 earth{-1.0, 0.0};
    Vec2 moon{1.0, 0.0};
};

// All transverse self intersections, brute force over edge pairs.
// Throws DegenerateIntersection on near-tangential / near-vertex /
// near-triple configurations (at tolerance tol).
std::vector<DoublePoint> double_points(const ClosedPolyline& c, double tol = kTol);

GenericityReport validate_genericity(const MarkedCurve& mc, double tol = kTol);
GenericityReport validate_genericity(const ClosedPolyline& c, double tol = kTol);

// Winding number of c around p, by summed signed angles.  Throws
// PointOnCurve if p is within tol of the curve.
int winding_number(const ClosedPolyline& c, Vec2 p, double tol = kTol);

// Whitney rotation number (turning number) of the curve.
int rotation_number(const ClosedPolyline& c);

// Distance from p to the polyline, with the closest edge index out-param.
double distance_to_curve(const ClosedPolyline& c, Vec2 p,
                         std::size_t* closest_edge = nullptr,
                         Vec2* closest_point = nullptr);

// Deterministic jitter of every vertex by at most `magnitude`.
ClosedPolyline perturb(const ClosedPolyline& c, double magnitude, std::uint64_t seed);

// Perturb until validate_genericity passes (a handful of attempts), used to
// restore genericity after lifting.  Throws NotGeneric if it cannot.
ClosedPolyline make_generic(const ClosedPolyline& c, double magnitude, std::uint64_t seed);

// Insert vertices so that no edge is longer than max_len.
ClosedPolyline resample_max_edge(const ClosedPolyline& c, double max_len);
// Insert vertices so that no edge subtends more than max_angle radians at p.
ClosedPolyline resample_max_subtended_angle(const ClosedPolyline& c, Vec2 p,
                                            double max_angle);

}  // namespace szj
