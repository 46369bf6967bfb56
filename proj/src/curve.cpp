#include "szj/curve.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace szj {

double ClosedPolyline::length() const {
    double L = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) L += norm(edge(i));
    return L;
}

double ClosedPolyline::param_of_vertex(std::size_t i) const {
    double L = 0.0;
    for (std::size_t k = 0; k < i && k < pts.size(); ++k) L += norm(edge(k));
    if (i >= pts.size()) L = length();
    return L;
}

std::pair<std::size_t, double> ClosedPolyline::locate_param(double t) const {
    double L = length();
    t = std::fmod(t, L);
    if (t < 0) t += L;
    double acc = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double el = norm(edge(i));
        if (t <= acc + el || i + 1 == pts.size()) return {i, t - acc};
        acc += el;
    }
    return {pts.size() - 1, 0.0};
}

Vec2 ClosedPolyline::point_at(double t) const {
    auto [i, off] = locate_param(t);
    Vec2 d = edge(i);
    double el = norm(d);
    if (el == 0.0) return vertex(i);
    return vertex(i) + d * (off / el);
}

Vec2 ClosedPolyline::tangent_at(double t) const {
    auto [i, off] = locate_param(t);
    (void)off;
    return normalized(edge(i));
}

void ClosedPolyline::translate(Vec2 d) {
    for (auto& p : pts) p = p + d;
}

void ClosedPolyline::scale(double s) {
    for (auto& p : pts) p = p * s;
}

void ClosedPolyline::similarity(std::complex<double> a, std::complex<double> b) {
    for (auto& p : pts) p = from_complex(a * to_complex(p) + b);
}

ClosedPolyline ClosedPolyline::reversed() const {
    ClosedPolyline r = *this;
    std::reverse(r.pts.begin(), r.pts.end());
    return r;
}

namespace {

// Proper intersection of open segments p0p1 and q0q1.  Returns (t, u) in
// (0,1)x(0,1) if they cross transversally; degeneracy reported via flag.
struct SegHit {
    bool hit = false;
    bool degenerate = false;
    double t = 0, u = 0;
    Vec2 where;
    int sign = 0;
    std::string why;
};

SegHit segment_intersection(Vec2 p0, Vec2 p1, Vec2 q0, Vec2 q1, double tol) {
    SegHit h;
    Vec2 r = p1 - p0, s = q1 - q0;
    double denom = cross(r, s);
    double lr = norm(r), ls = norm(s);
    if (lr < tol || ls < tol) {
        h.degenerate = true;
        h.why = "short edge";
        return h;
    }
    double sine = denom / (lr * ls);
    Vec2 qp = q0 - p0;
    if (std::abs(denom) < 1e-300) {
        // parallel: either disjoint or (degenerate) overlapping
        if (std::abs(cross(qp, r)) / lr < tol) {
            // colinear; overlap check
            double t0 = dot(qp, r) / (lr * lr);
            double t1 = dot(q1 - p0, r) / (lr * lr);
            if (std::max(std::min(t0, t1), 0.0) <= std::min(std::max(t0, t1), 1.0)) {
                h.degenerate = true;
                h.why = "colinear overlap";
            }
        }
        return h;
    }
    double t = cross(qp, s) / denom;
    double u = cross(qp, r) / denom;
    double margin = 1e-12;
    if (t < -margin || t > 1 + margin || u < -margin || u > 1 + margin) return h;
    // inside (with fuzz): check genericity margins
    double end_tol_t = tol / lr;  // param distance corresponding to tol length
    double end_tol_u = tol / ls;
    if (t < end_tol_t || t > 1 - end_tol_t || u < end_tol_u || u > 1 - end_tol_u) {
        h.degenerate = true;
        h.why = "intersection at or near a vertex";
        h.where = p0 + r * t;
        return h;
    }
    if (std::abs(sine) < tol) {
        h.degenerate = true;
        h.why = "near-tangential crossing";
        h.where = p0 + r * t;
        return h;
    }
    h.hit = true;
    h.t = t;
    h.u = u;
    h.where = p0 + r * t;
    h.sign = denom > 0 ? 1 : -1;
    return h;
}

bool edges_adjacent(std::size_t i, std::size_t j, std::size_t n) {
    std::size_t d = (j + n - i) % n;
    return d == 0 || d == 1 || d == n - 1;
}

}  // namespace

std::vector<DoublePoint> double_points(const ClosedPolyline& c, double tol) {
    std::size_t n = c.size();
    if (n < 3) throw GeometryError("polyline needs at least 3 vertices");
    std::vector<double> cum(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) cum[i + 1] = cum[i] + norm(c.edge(i));

    std::vector<DoublePoint> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (edges_adjacent(i, j, n)) continue;
            SegHit h = segment_intersection(c.vertex(i), c.vertex(i + 1),
                                            c.vertex(j), c.vertex(j + 1), tol);
            if (h.degenerate)
                throw DegenerateIntersection(h.why + " between edges " +
                                             std::to_string(i) + " and " +
                                             std::to_string(j));
            if (!h.hit) continue;
            DoublePoint dp;
            dp.where = h.where;
            dp.param_a = cum[i] + h.t * (cum[i + 1] - cum[i]);
            dp.param_b = cum[j] + h.u * (cum[j + 1] - cum[j]);
            dp.sign = h.sign;
            dp.edge_a = i;
            dp.edge_b = j;
            out.push_back(dp);
        }
    }
    // triple point guard: distinct intersections must be tol-separated
    for (std::size_t a = 0; a < out.size(); ++a)
        for (std::size_t b = a + 1; b < out.size(); ++b)
            if (norm(out[a].where - out[b].where) < tol)
                throw DegenerateIntersection("two intersections closer than tol (triple point?)");
    std::sort(out.begin(), out.end(),
              [](const DoublePoint& a, const DoublePoint& b) { return a.param_a < b.param_a; });
    return out;
}

GenericityReport validate_genericity(const ClosedPolyline& c, double tol) {
    GenericityReport rep;
    auto add = [&](std::string kind, std::string detail, Vec2 where) {
        rep.ok = false;
        rep.violations.push_back({std::move(kind), std::move(detail), where});
    };
    std::size_t n = c.size();
    if (n < 3) {
        add("short_edge", "fewer than 3 vertices", {});
        return rep;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (norm(c.edge(i)) < tol)
            add("short_edge", "edge " + std::to_string(i), c.vertex(i));
    }
    // corner angle: reject near-reversal corners (cusp at polyline scale)
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 a = c.edge((i + n - 1) % n), b = c.edge(i);
        double la = norm(a), lb = norm(b);
        if (la < tol || lb < tol) continue;
        double cosang = dot(a, b) / (la * lb);
        if (cosang < -1.0 + tol)
            add("cusp", "near-reversal corner at vertex " + std::to_string(i), c.vertex(i));
    }
    // vertex too close to a non-incident edge
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t e = 0; e < n; ++e) {
            if (e == v || (e + 1) % n == v) continue;
            Vec2 p = c.vertex(v), a = c.vertex(e), d = c.edge(e);
            double l2 = norm2(d);
            if (l2 == 0) continue;
            double t = std::clamp(dot(p - a, d) / l2, 0.0, 1.0);
            if (norm(p - (a + d * t)) < tol) {
                add("vertex_contact",
                    "vertex " + std::to_string(v) + " near edge " + std::to_string(e), p);
                break;
            }
        }
    }
    try {
        (void)double_points(c, tol);
    } catch (const DegenerateIntersection& e) {
        add("tangential", e.what(), {});
    }
    return rep;
}

GenericityReport validate_genericity(const MarkedCurve& mc, double tol) {
    GenericityReport rep = validate_genericity(mc.curve, tol);
    for (Vec2 ctr : {mc.earth, mc.moon}) {
        if (distance_to_curve(mc.curve, ctr) < tol) {
            rep.ok = false;
            rep.violations.push_back({"center_on_curve", "marked center on curve", ctr});
        }
    }
    if (norm(mc.earth - mc.moon) < tol) {
        rep.ok = false;
        rep.violations.push_back({"center_on_curve", "marked centers coincide", mc.earth});
    }
    return rep;
}

int winding_number(const ClosedPolyline& c, Vec2 p, double tol) {
    if (distance_to_curve(c, p) < tol)
        throw PointOnCurve("winding number at a point on the curve");
    double total = 0.0;
    std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 a = c.vertex(i) - p, b = c.vertex(i + 1) - p;
        total += std::atan2(cross(a, b), dot(a, b));
    }
    double w = total / (2.0 * M_PI);
    double r = std::round(w);
    if (std::abs(w - r) > 0.01)
        throw GeometryError("winding number did not converge to an integer");
    return static_cast<int>(r);
}

int rotation_number(const ClosedPolyline& c) {
    double total = 0.0;
    std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 a = c.edge(i), b = c.edge((i + 1) % n);
        total += std::atan2(cross(a, b), dot(a, b));
    }
    double w = total / (2.0 * M_PI);
    double r = std::round(w);
    if (std::abs(w - r) > 0.01)
        throw GeometryError("rotation number did not converge to an integer");
    return static_cast<int>(r);
}

double distance_to_curve(const ClosedPolyline& c, Vec2 p,
                         std::size_t* closest_edge, Vec2* closest_point) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 a = c.vertex(i), d = c.edge(i);
        double l2 = norm2(d);
        double t = l2 > 0 ? std::clamp(dot(p - a, d) / l2, 0.0, 1.0) : 0.0;
        Vec2 q = a + d * t;
        double dist = norm(p - q);
        if (dist < best) {
            best = dist;
            if (closest_edge) *closest_edge = i;
            if (closest_point) *closest_point = q;
        }
    }
    return best;
}

ClosedPolyline perturb(const ClosedPolyline& c, double magnitude, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ClosedPolyline out = c;
    for (auto& p : out.pts) {
        p.x += magnitude * u(rng);
        p.y += magnitude * u(rng);
    }
    return out;
}

ClosedPolyline make_generic(const ClosedPolyline& c, double magnitude, std::uint64_t seed) {
    if (validate_genericity(c).ok) return c;
    for (int attempt = 0; attempt < 16; ++attempt) {
        ClosedPolyline cand = perturb(c, magnitude, seed + attempt);
        if (validate_genericity(cand).ok) return cand;
        magnitude *= 1.5;
    }
    throw NotGeneric("could not restore genericity by perturbation");
}

ClosedPolyline resample_max_edge(const ClosedPolyline& c, double max_len) {
    ClosedPolyline out;
    std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 a = c.vertex(i), d = c.edge(i);
        double l = norm(d);
        int parts = std::max(1, static_cast<int>(std::ceil(l / max_len)));
        for (int k = 0; k < parts; ++k) out.pts.push_back(a + d * (double(k) / parts));
    }
    return out;
}

namespace {

void subdivide_by_angle(Vec2 a, Vec2 b, Vec2 p, double max_angle, int depth,
                        std::vector<Vec2>& out) {
    Vec2 ra = a - p, rb = b - p;
    double ang = std::abs(std::atan2(cross(ra, rb), dot(ra, rb)));
    if (ang <= max_angle || depth > 24) {
        out.push_back(a);
        return;
    }
    Vec2 mid = (a + b) * 0.5;
    subdivide_by_angle(a, mid, p, max_angle, depth + 1, out);
    subdivide_by_angle(mid, b, p, max_angle, depth + 1, out);
}

}  // namespace

ClosedPolyline resample_max_subtended_angle(const ClosedPolyline& c, Vec2 p,
                                            double max_angle) {
    ClosedPolyline out;
    std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i)
        subdivide_by_angle(c.vertex(i), c.vertex(i + 1), p, max_angle, 0, out.pts);
    return out;
}

}  // namespace szj
