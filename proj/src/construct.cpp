#include "szj/construct.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "szj/arnold.hpp"
#include "szj/arrangement.hpp"

namespace szj {

namespace {

double tau() { return 2.0 * M_PI; }

}  // namespace

ClosedPolyline circle(Vec2 ctr, double r, bool ccw, int segments) {
    ClosedPolyline c;
    for (int i = 0; i < segments; ++i) {
        double th = tau() * (i + 0.5) / segments;
        if (!ccw) th = -th;
        c.pts.push_back(ctr + Vec2{r * std::cos(th), r * std::sin(th)});
    }
    return c;
}

ClosedPolyline multi_loop(Vec2 ctr, int n, int orient, double inner_r,
                          double spacing, bool flat, int segments_per_turn) {
    if (n < 1) throw ConstructionError("multi_loop needs n >= 1");
    if (orient != 1 && orient != -1) throw ConstructionError("orient must be +-1");
    ClosedPolyline c;
    if (n == 1) {
        c = circle({0, 0}, inner_r, true, segments_per_turn);
    } else {
        double dth = tau() / segments_per_turn;
        int steps = n * segments_per_turn;
        for (int i = 0; i < steps; ++i) {
            double th = i * dth;
            double rho = inner_r + spacing * th / tau();
            c.pts.push_back({rho * std::cos(th), rho * std::sin(th)});
        }
        // closing chord from the outer end back to the inner start crosses
        // the n-1 intermediate arms once each
    }
    if (flat) {
        double rho_max = inner_r + n * spacing;
        double lam = 0.3 * inner_r / rho_max;
        for (auto& p : c.pts) p.y *= lam;
    }
    if (orient < 0)
        for (auto& p : c.pts) p.y = -p.y;
    c.translate(ctr);
    return c;
}

ClosedPolyline k_n(int n, Vec2 earth, Vec2 moon) {
    ClosedPolyline c = multi_loop({0, 0}, n, 1, 1.5, 0.4);
    std::complex<double> a = (to_complex(moon) - to_complex(earth)) / 2.0;
    std::complex<double> b = (to_complex(moon) + to_complex(earth)) / 2.0;
    c.similarity(a, b);
    return c;
}

ClosedPolyline standard_curve(int j) {
    if (j == 0) {
        ClosedPolyline c;  // figure eight
        int m = 96;
        for (int i = 0; i < m; ++i) {
            double t = tau() * (i + 0.5) / m;
            c.pts.push_back({0.5 * std::sin(2 * t), std::sin(t)});
        }
        return c;
    }
    int a = std::abs(j);
    ClosedPolyline c = circle({0, 0}, 1.0, true, 96);
    double L0 = c.length();
    for (int k = 1; k < a; ++k)
        c = insert_kink(c, L0 * (k - 0.5) / (a - 0.5), +1, 0.18);
    if (j < 0) c = c.reversed();
    return c;
}

ClosedPolyline insert_kink(const ClosedPolyline& c, double param, int side,
                           double size) {
    if (side != 1 && side != -1) throw ConstructionError("kink side must be +-1");
    std::size_t n_before = double_points(c).size();
    const double T0 = 1.8;
    const double x0 = T0 * T0 * T0 - T0;
    const double ymax = T0 * T0;  // |(t^2-1)(T0^2-t^2)| at t = 0
    double L = c.length();
    for (int attempt = 0; attempt < 6; ++attempt) {
        double s = size / (1 << attempt);
        Vec2 A = c.point_at(param - s), B = c.point_at(param + s);
        if (norm(B - A) < 16 * kTol) break;
        Vec2 T = normalized(B - A);
        Vec2 N = perp(T);
        Vec2 P = (A + B) * 0.5;
        double se = norm(B - A) * 0.5;
        // host vertices outside the cut (param-s, param+s), in curve order
        // starting just after the cut, then the loop model from A to B
        ClosedPolyline cand;
        std::size_t nv = c.size();
        std::size_t start = (c.locate_param(std::fmod(param + s, L)).first + 1) % nv;
        for (std::size_t k = 0; k < nv; ++k) {
            std::size_t i = (start + k) % nv;
            double d = std::fmod(c.param_of_vertex(i) - (param + s) + 2 * L, L);
            if (d > 1e-12 && d < L - 2 * s - 1e-12) cand.pts.push_back(c.vertex(i));
        }
        int m = 40;
        for (int i = 0; i <= m; ++i) {
            double t = -T0 + 2.0 * T0 * i / m;
            double lx = (t * t * t - t) / x0;
            double ly = (t * t - 1) * (T0 * T0 - t * t) / ymax;
            cand.pts.push_back(P + T * (se * lx) + N * (-side * 0.6 * se * ly));
        }
        // model starts at A and ends at B which already bound the kept run
        try {
            if (!validate_genericity(cand).ok) continue;
            if (double_points(cand).size() != n_before + 1) continue;
            if (rotation_number(cand) != rotation_number(c) + side) continue;
            return cand;
        } catch (const GeometryError&) {
            continue;
        }
    }
    throw ConstructionError("insert_kink failed at this site");
}

ClosedPolyline insert_lasso(const ClosedPolyline& c, double param, Vec2 around,
                            double radius, int orient, double corridor_width) {
    if (orient != 1 && orient != -1) throw ConstructionError("orient must be +-1");
    std::size_t n_before = double_points(c).size();
    int w_before = winding_number(c, around);
    double L = c.length();
    Vec2 P = c.point_at(param);
    Vec2 u = normalized(around - P);
    double dist = norm(around - P);
    if (dist < radius * 1.5)
        throw ConstructionError("lasso anchor too close to the loop target");
    double h0 = corridor_width > 0 ? corridor_width : radius / 4;

    for (int attempt = 0; attempt < 4; ++attempt) {
        double h = h0 / (1 << attempt);
        double eps = h;
        double gap = std::max(0.05, h / radius);
        double thV = std::atan2(-u.y, -u.x);
        // variants 0,1: plain radial rails attached on either side of the
        // closest circle point (one of these seals the corridor with a rail
        // crossing when the loop turns with the host).  variants 2..5: the
        // return rail wraps around the outside of the loop before rejoining,
        // which realizes the opposite relative orientation with one crossing.
        // the rails attach on either side of the closest loop point; when the
        // loop turns with the host (as seen from `around`) one of the two
        // attachments seals the corridor mouth with the single new crossing.
        // A counter-turning loop only closes up as an embedded slit (no new
        // crossing), so callers wanting the opposite turning sense should use
        // insert_kink with curl = -side instead.
        for (int in_side : {1, -1}) {
            Vec2 A0 = c.point_at(param - eps);
            Vec2 A1 = c.point_at(param + eps);
            double th_in = thV + in_side * gap;
            double sweep = orient * (tau() - 2 * gap);
            ClosedPolyline cand;
            std::size_t nv = c.size();
            // host from just after param+eps all the way around to param-eps
            auto keep = [&](double pv) {
                double d = std::fmod(pv - (param + eps) + 2 * L, L);
                return d > 1e-12 && d < L - 2 * eps - 1e-12;
            };
            std::size_t start = (c.locate_param(std::fmod(param + eps, L)).first + 1) % nv;
            // order: A1 .. host .. A0 -> rail -> circle -> rail back to A1
            cand.pts.push_back(A1);
            for (std::size_t k = 0; k < nv; ++k) {
                std::size_t i = (start + k) % nv;
                if (keep(c.param_of_vertex(i))) cand.pts.push_back(c.vertex(i));
            }
            cand.pts.push_back(A0);
            int m = std::max(24, int(std::abs(sweep) / 0.12));
            for (int i = 0; i <= m; ++i) {
                double th = th_in + sweep * double(i) / m;
                cand.pts.push_back(around + Vec2{radius * std::cos(th),
                                                 radius * std::sin(th)});
            }
            try {
                if (!validate_genericity(cand).ok) continue;
                if (double_points(cand).size() != n_before + 1) continue;
                if (winding_number(cand, around) != w_before + orient) continue;
                return cand;
            } catch (const GeometryError&) {
                continue;
            }
        }
    }
    throw ConstructionError("insert_lasso failed at this site");
}

namespace {

// mutual-visibility corridor search between two disjoint curves
struct CorridorPick {
    double pa = -1, pb = -1;
    double clearance = 0;
};

double seg_clearance(const ClosedPolyline& c, Vec2 a, Vec2 b, double skip_near_ends) {
    double best = std::numeric_limits<double>::infinity();
    int samples = 24;
    for (int k = 0; k <= samples; ++k) {
        double t = double(k) / samples;
        Vec2 q = a + (b - a) * t;
        double end_d = std::min(norm(q - a), norm(q - b));
        if (end_d < skip_near_ends) continue;  // endpoints touch the curves
        best = std::min(best, distance_to_curve(c, q));
    }
    return best;
}

CorridorPick find_corridor(const ClosedPolyline& a, const ClosedPolyline& b,
                           bool require_positive_bases) {
    CorridorPick best;
    double bestscore = -1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double pa = a.param_of_vertex(i) + norm(a.edge(i)) * 0.5;
        Vec2 A = a.point_at(pa), va = a.tangent_at(pa);
        for (std::size_t j = 0; j < b.size(); ++j) {
            double pb = b.param_of_vertex(j) + norm(b.edge(j)) * 0.5;
            Vec2 B = b.point_at(pb), vb = b.tangent_at(pb);
            Vec2 d = B - A;
            double len = norm(d);
            if (len < 1e-9) continue;
            if (require_positive_bases) {
                if (cross(va, d) <= 0) continue;
                if (cross(vb, -d) <= 0) continue;
            }
            double margin = std::min(std::abs(cross(va, d)), std::abs(cross(vb, d))) / len;
            if (margin < 0.2) continue;  // avoid grazing corridors
            double guard = std::min(len / 3, 0.5);
            double cl = std::min(seg_clearance(a, A, B, guard),
                                 seg_clearance(b, A, B, guard));
            double score = std::min(cl, 1.0) - 0.05 * len;
            if (score > bestscore) {
                bestscore = score;
                best = {pa, pb, cl};
            }
        }
    }
    return best;
}

ClosedPolyline splice(const ClosedPolyline& a, const ClosedPolyline& b,
                      double pa, double pb, double eps) {
    // a[pa+eps .. pa-eps] + a(pa-eps) -> b(pb+eps) + b[pb+eps .. pb-eps] + back
    ClosedPolyline out;
    double La = a.length(), Lb = b.length();
    auto keep = [](double pv, double pcut, double eps_, double L) {
        double d = std::fmod(pv - (pcut + eps_) + 2 * L, L);
        return d > 1e-12 && d < L - 2 * eps_ - 1e-12;
    };
    out.pts.push_back(a.point_at(pa + eps));
    std::size_t sa = (a.locate_param(std::fmod(pa + eps, La)).first + 1) % a.size();
    for (std::size_t k = 0; k < a.size(); ++k) {
        std::size_t i = (sa + k) % a.size();
        if (keep(a.param_of_vertex(i), pa, eps, La)) out.pts.push_back(a.vertex(i));
    }
    out.pts.push_back(a.point_at(pa - eps));
    out.pts.push_back(b.point_at(pb + eps));
    std::size_t sb = (b.locate_param(std::fmod(pb + eps, Lb)).first + 1) % b.size();
    for (std::size_t k = 0; k < b.size(); ++k) {
        std::size_t i = (sb + k) % b.size();
        if (keep(b.param_of_vertex(i), pb, eps, Lb)) out.pts.push_back(b.vertex(i));
    }
    out.pts.push_back(b.point_at(pb - eps));
    return out;
}

ClosedPolyline sum_impl(const ClosedPolyline& a, const ClosedPolyline& b,
                        CorridorSpec spec, bool require_positive_bases,
                        const char* what) {
    std::size_t n_expected = double_points(a).size() + double_points(b).size();
    CorridorPick pick;
    if (spec.param_a >= 0 && spec.param_b >= 0) {
        pick.pa = spec.param_a;
        pick.pb = spec.param_b;
        pick.clearance = spec.width > 0 ? spec.width * 4 : 0.1;
    } else {
        pick = find_corridor(a, b, require_positive_bases);
        if (pick.pa < 0)
            throw ConstructionError(std::string(what) + ": no corridor found");
    }
    double eps0 = spec.width > 0 ? spec.width : pick.clearance / 4;
    for (int attempt = 0; attempt < 6; ++attempt) {
        double eps = eps0 / (1 << attempt);
        ClosedPolyline cand = splice(a, b, pick.pa, pick.pb, eps);
        try {
            if (!validate_genericity(cand).ok) continue;
            if (double_points(cand).size() != n_expected) continue;
            return cand;
        } catch (const GeometryError&) {
            continue;
        }
    }
    throw ConstructionError(std::string(what) + ": corridor splice failed");
}

}  // namespace

ClosedPolyline connected_sum(const ClosedPolyline& a, const ClosedPolyline& b,
                             CorridorSpec spec) {
    return sum_impl(a, b, spec, false, "connected_sum");
}

ClosedPolyline interior_connected_sum(const ClosedPolyline& a,
                                      const ClosedPolyline& b,
                                      CorridorSpec spec) {
    // hypotheses: b winds zero around 0 and around a; b sits in the face of
    // a containing 0
    if (winding_number(b, {0, 0}) != 0)
        throw ConstructionError("interior sum: second curve winds around 0");
    for (std::size_t i = 0; i < a.size(); i += std::max<std::size_t>(1, a.size() / 16))
        if (winding_number(b, a.vertex(i)) != 0)
            throw ConstructionError("interior sum: first curve not outside second");
    Arrangement A = build_arrangement(a);
    int face0 = A.locate({0, 0});
    for (std::size_t j = 0; j < b.size(); j += std::max<std::size_t>(1, b.size() / 16))
        if (A.locate(b.vertex(j)) != face0)
            throw ConstructionError("interior sum: second curve not in the face containing 0");
    int r_a = rotation_number(a), r_b = rotation_number(b);
    ClosedPolyline out = sum_impl(a, b, spec, true, "interior_connected_sum");
    if (rotation_number(out) != r_a + r_b + 1)
        throw ConstructionError("interior sum: rotation postcondition failed");
    return out;
}

ClosedPolyline add_loop(const ClosedPolyline& c, const Face& face,
                        double attach_param, double size) {
    Arrangement A = build_arrangement(c);
    int fid = A.locate(face.sample);
    if (A.faces[fid].winding != face.winding)
        throw ConstructionError("add_loop: face does not belong to this curve");
    // find the arc covering attach_param and which side the face lies on
    double L = c.length();
    double p = std::fmod(std::fmod(attach_param, L) + L, L);
    int side = 0;
    if (A.arcs.empty()) {
        // embedded curve: the bounded face is on the left iff it winds +1
        int w_int = 0;
        for (const auto& f : A.faces)
            if (f.bounded) w_int = f.winding;
        side = A.faces[fid].bounded ? w_int : -w_int;
    }
    for (std::size_t a = 0; a < A.arcs.size(); ++a) {
        const auto& arc = A.arcs[a];
        double span = std::fmod(arc.param_to - arc.param_from + L, L);
        if (span == 0) span = L;
        double off = std::fmod(p - arc.param_from + L, L);
        if (off <= 0 || off >= span) continue;
        if (A.face_left(a) == fid) side = 1;
        else if (A.face_right(a) == fid) side = -1;
        break;
    }
    if (side == 0)
        throw ConstructionError("add_loop: face not adjacent at attach_param");
    if (size <= 0) size = std::min(c.length() / 64, 0.4);
    ClosedPolyline out = insert_kink(c, p, side, size);
    if (j_plus(out) - j_plus(c) != j_plus_delta_prediction(side * face.winding))
        throw ConstructionError("add_loop: recomputed delta mismatch");
    return out;
}

ClosedPolyline add_loop(const ClosedPolyline& c, Vec2 inside, double size) {
    Arrangement A = build_arrangement(c);
    int fid = A.locate(inside);
    const Face& face = A.faces[fid];
    if (A.arcs.empty()) {
        for (double frac : {0.0, 0.25, 0.5, 0.75}) {
            try {
                return add_loop(c, face, frac * c.length(), size);
            } catch (const ConstructionError&) {
            }
        }
    }
    // try attachment sites along the arcs bounding the face
    for (std::size_t a = 0; a < A.arcs.size(); ++a) {
        if (A.face_left(a) != fid && A.face_right(a) != fid) continue;
        const auto& arc = A.arcs[a];
        double L = c.length();
        double span = std::fmod(arc.param_to - arc.param_from + L, L);
        if (span == 0) span = L;
        for (double frac : {0.5, 0.3, 0.7}) {
            try {
                return add_loop(c, face,
                                std::fmod(arc.param_from + frac * span, L), size);
            } catch (const ConstructionError&) {
            }
        }
    }
    throw ConstructionError("add_loop: no viable attachment site");
}

MarkedCurve realize_triple(int, int, int) {
    throw ConstructionError("realize_triple: not yet wired");
}

ClosedPolyline realize_quadruple(int, int, int, int, bool) {
    throw ConstructionError("realize_quadruple: not yet wired");
}

MarkedCurve realize_sz_tuple(int, int, int, int, int, int) {
    throw ConstructionError("realize_sz_tuple: not yet wired");
}

}  // namespace szj
