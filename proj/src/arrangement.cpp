#include "szj/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>

namespace szj {

namespace {

struct Passage {
    double param;
    int dp;       // double point index
    bool first;   // true if this is param_a
};

Vec2 dart_out_dir(const Arrangement::Arc& arc, bool forward) {
    const auto& p = arc.pts;
    if (forward) return p[1] - p[0];
    return p[p.size() - 2] - p[p.size() - 1];
}

int dart_origin_node(const Arrangement& A, int dart) {
    const auto& arc = A.arcs[dart / 2];
    return dart % 2 == 0 ? arc.node_from : arc.node_to;
}

int dart_end_node(const Arrangement& A, int dart) {
    const auto& arc = A.arcs[dart / 2];
    return dart % 2 == 0 ? arc.node_to : arc.node_from;
}

}  // namespace

int Arrangement::locate(Vec2 p) const {
    double best = std::numeric_limits<double>::infinity();
    int best_arc = -1;
    double best_side = 0;
    for (std::size_t a = 0; a < arcs.size(); ++a) {
        const auto& pts = arcs[a].pts;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            Vec2 s0 = pts[i], d = pts[i + 1] - pts[i];
            double l2 = norm2(d);
            if (l2 == 0) continue;
            double t = std::clamp(dot(p - s0, d) / l2, 0.0, 1.0);
            Vec2 q = s0 + d * t;
            double dist = norm(p - q);
            if (dist < best) {
                best = dist;
                best_arc = static_cast<int>(a);
                best_side = cross(d, p - q);
            }
        }
    }
    if (best_arc < 0) throw GeometryError("locate on empty arrangement");
    if (best_side == 0) throw PointOnCurve("locate: point on the curve");
    return best_side > 0 ? face_left(best_arc) : face_right(best_arc);
}

Arrangement build_arrangement(const ClosedPolyline& c, double tol) {
    GenericityReport rep = validate_genericity(c, tol);
    if (!rep.ok)
        throw NotGeneric("arrangement of a non-generic curve: " +
                         rep.violations.front().kind + " (" +
                         rep.violations.front().detail + ")");
    Arrangement A;
    A.dps = double_points(c, tol);
    const double L = c.length();
    std::size_t nv = c.size();
    std::vector<double> cum(nv + 1, 0.0);
    for (std::size_t i = 0; i < nv; ++i) cum[i + 1] = cum[i] + norm(c.edge(i));

    if (A.dps.empty()) {
        // embedded curve: one arc (the whole curve), two faces
        Arrangement::Arc arc;
        arc.pts = c.pts;
        arc.pts.push_back(c.pts.front());
        arc.param_from = 0;
        arc.param_to = L;
        A.arcs.push_back(std::move(arc));
        int r = rotation_number(c);
        if (r != 1 && r != -1)
            throw GeometryError("embedded closed curve with rotation != +-1");
        Face inner, outer;
        inner.winding = r;  // interior of an embedded curve
        inner.euler_char = 1;
        inner.bounded = true;
        inner.darts = {r > 0 ? 0 : 1};
        outer.winding = 0;
        outer.euler_char = 0;
        outer.bounded = false;
        outer.boundary_cycles = 1;
        outer.darts = {r > 0 ? 1 : 0};
        // samples
        std::size_t long_edge = 0;
        for (std::size_t i = 0; i < nv; ++i)
            if (norm(c.edge(i)) > norm(c.edge(long_edge))) long_edge = i;
        Vec2 mid = c.vertex(long_edge) + c.edge(long_edge) * 0.5;
        Vec2 n = normalized(perp(c.edge(long_edge)));
        double step = norm(c.edge(long_edge)) / 4;
        for (double s : {step, step / 4, step / 16, step / 64}) {
            try {
                int wl = winding_number(c, mid + n * s);
                int wr = winding_number(c, mid - n * s);
                if (wl == r && wr == 0) {
                    inner.sample = mid + n * s;
                    outer.sample = mid - n * s;
                    break;
                }
                if (wr == r && wl == 0) {
                    inner.sample = mid - n * s;
                    outer.sample = mid + n * s;
                    break;
                }
            } catch (const PointOnCurve&) {
            }
        }
        A.faces = {inner, outer};
        A.dart_face_ = r > 0 ? std::vector<int>{0, 1} : std::vector<int>{1, 0};
        A.unbounded_face = 1;
        return A;
    }

    // passages sorted along the curve
    std::vector<Passage> ev;
    for (std::size_t d = 0; d < A.dps.size(); ++d) {
        ev.push_back({A.dps[d].param_a, static_cast<int>(d), true});
        ev.push_back({A.dps[d].param_b, static_cast<int>(d), false});
    }
    std::sort(ev.begin(), ev.end(),
              [](const Passage& a, const Passage& b) { return a.param < b.param; });
    const std::size_t ne = ev.size();

    // arcs between consecutive passages
    auto sub_polyline = [&](double p1, double p2) {
        // p1 < p2 <= p1 + L after unwrapping; collect vertices with
        // cumulative parameter strictly inside (p1, p2)
        std::vector<Vec2> pts;
        pts.push_back(c.point_at(p1));
        auto param_at = [&](std::size_t j) {
            return j <= nv ? cum[j] : L + cum[j - nv];
        };
        std::size_t j =
            std::upper_bound(cum.begin(), cum.end(), p1 + 1e-12) - cum.begin();
        for (; param_at(j) < p2 - 1e-12; ++j) pts.push_back(c.vertex(j % nv));
        pts.push_back(c.point_at(std::fmod(p2, L)));
        return pts;
    };

    for (std::size_t k = 0; k < ne; ++k) {
        const Passage& e1 = ev[k];
        const Passage& e2 = ev[(k + 1) % ne];
        double p1 = e1.param;
        double p2 = (k + 1 < ne) ? e2.param : e2.param + L;
        Arrangement::Arc arc;
        arc.pts = sub_polyline(p1, p2);
        arc.node_from = e1.dp;
        arc.node_to = e2.dp;
        arc.param_from = p1;
        arc.param_to = p2;
        if (arc.pts.size() < 2) throw GeometryError("degenerate arc");
        A.arcs.push_back(std::move(arc));
    }

    const int ndarts = static_cast<int>(2 * A.arcs.size());
    // rotation system: outgoing darts at each node, sorted ccw by direction
    std::vector<std::vector<int>> at_node(A.dps.size());
    for (int d = 0; d < ndarts; ++d) at_node[dart_origin_node(A, d)].push_back(d);
    auto dart_dir = [&](int d) {
        return dart_out_dir(A.arcs[d / 2], d % 2 == 0);
    };
    for (auto& ds : at_node) {
        if (ds.size() != 4) throw GeometryError("node degree != 4");
        std::sort(ds.begin(), ds.end(), [&](int a, int b) {
            Vec2 va = dart_dir(a), vb = dart_dir(b);
            return std::atan2(va.y, va.x) < std::atan2(vb.y, vb.x);
        });
    }
    // face successor: clockwise-next dart from the twin, at the end node
    std::vector<int> pos_in_node(ndarts);
    for (const auto& ds : at_node)
        for (std::size_t i = 0; i < ds.size(); ++i) pos_in_node[ds[i]] = static_cast<int>(i);
    auto face_next = [&](int d) {
        int tw = d ^ 1;
        const auto& ds = at_node[dart_origin_node(A, tw)];
        int i = pos_in_node[tw];
        return ds[(i + ds.size() - 1) % ds.size()];
    };

    A.dart_face_.assign(ndarts, -1);
    for (int d0 = 0; d0 < ndarts; ++d0) {
        if (A.dart_face_[d0] >= 0) continue;
        int f = static_cast<int>(A.faces.size());
        Face face;
        int d = d0;
        do {
            A.dart_face_[d] = f;
            face.darts.push_back(d);
            d = face_next(d);
        } while (d != d0);
        A.faces.push_back(std::move(face));
    }

    // Euler check
    if (static_cast<int>(A.dps.size()) - static_cast<int>(A.arcs.size()) +
            static_cast<int>(A.faces.size()) != 2)
        throw GeometryError("arrangement fails Euler formula");

    // unbounded face: locate a far point
    Vec2 lo{std::numeric_limits<double>::max(), std::numeric_limits<double>::max()};
    Vec2 hi{-lo.x, -lo.y};
    for (Vec2 p : c.pts) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
    Vec2 far{hi.x + (hi.x - lo.x) + 1.0, hi.y + (hi.y - lo.y) + 1.0};
    A.unbounded_face = A.locate(far);

    // windings by breadth-first propagation: left = right + 1 across each arc
    for (auto& f : A.faces) f.winding = std::numeric_limits<int>::min();
    A.faces[A.unbounded_face].winding = 0;
    std::deque<int> q{A.unbounded_face};
    while (!q.empty()) {
        int f = q.front();
        q.pop_front();
        for (int d : A.faces[f].darts) {
            int a = d / 2;
            int fl = A.face_left(a), fr = A.face_right(a);
            int wl = A.faces[fl].winding, wr = A.faces[fr].winding;
            if (wl == std::numeric_limits<int>::min() &&
                wr != std::numeric_limits<int>::min()) {
                A.faces[fl].winding = wr + 1;
                q.push_back(fl);
            } else if (wr == std::numeric_limits<int>::min() &&
                       wl != std::numeric_limits<int>::min()) {
                A.faces[fr].winding = wl - 1;
                q.push_back(fr);
            }
        }
    }
    for (std::size_t a = 0; a < A.arcs.size(); ++a) {
        int wl = A.faces[A.face_left(a)].winding;
        int wr = A.faces[A.face_right(a)].winding;
        if (wl == std::numeric_limits<int>::min() || wl != wr + 1)
            throw GeometryError("inconsistent face windings");
    }

    // euler characteristic from the facial walk: a face pinched at k of its
    // boundary vertices has chi = 1 - k
    for (std::size_t f = 0; f < A.faces.size(); ++f) {
        Face& face = A.faces[f];
        face.bounded = static_cast<int>(f) != A.unbounded_face;
        std::vector<int> ends;
        for (int d : face.darts) ends.push_back(dart_end_node(A, d));
        std::sort(ends.begin(), ends.end());
        int distinct = static_cast<int>(std::unique(ends.begin(), ends.end()) - ends.begin());
        int pinches = static_cast<int>(face.darts.size()) - distinct;
        face.boundary_cycles = pinches + 1;
        face.euler_char = face.bounded ? 1 - pinches : 0;
        if (!face.bounded && face.winding != 0)
            throw GeometryError("unbounded face has nonzero winding");
    }

    // sample points: offset from the midpoint of an arc segment
    auto clearance = [&](Vec2 p, std::size_t skip_arc, std::size_t skip_seg) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < A.arcs.size(); ++a) {
            const auto& pts = A.arcs[a].pts;
            for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
                if (a == skip_arc && (i + 1 >= skip_seg && i <= skip_seg + 1)) continue;
                Vec2 s0 = pts[i], d = pts[i + 1] - pts[i];
                double l2 = norm2(d);
                if (l2 == 0) continue;
                double t = std::clamp(dot(p - s0, d) / l2, 0.0, 1.0);
                best = std::min(best, norm(p - (s0 + d * t)));
            }
        }
        return best;
    };
    for (std::size_t f = 0; f < A.faces.size(); ++f) {
        Face& face = A.faces[f];
        bool found = false;
        for (int d : face.darts) {
            const auto& pts = A.arcs[d / 2].pts;
            // longest segment of this arc
            std::size_t bi = 0;
            for (std::size_t i = 0; i + 1 < pts.size(); ++i)
                if (norm(pts[i + 1] - pts[i]) > norm(pts[bi + 1] - pts[bi])) bi = i;
            Vec2 s0 = pts[bi], dir = pts[bi + 1] - pts[bi];
            Vec2 mid = s0 + dir * 0.5;
            double cl = clearance(mid, d / 2, bi);
            double delta = std::min(cl / 3.0, norm(dir) / 3.0);
            if (delta <= 0) continue;
            Vec2 n = normalized(perp(dir));
            // the fwd dart keeps the face on its left; reversed flips sides
            Vec2 cand = (d % 2 == 0) ? mid + n * delta : mid - n * delta;
            if (A.locate(cand) == static_cast<int>(f)) {
                face.sample = cand;
                found = true;
                break;
            }
        }
        if (!found) throw GeometryError("could not place a face sample point");
    }
    return A;
}

}  // namespace szj
