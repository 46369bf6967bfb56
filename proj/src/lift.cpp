#include "szj/lift.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace szj {

namespace {

using cplx = std::complex<double>;

constexpr double kMaxBranchAngle = 0.4;  // radians subtended at a branch point

void require_off_curve(const ClosedPolyline& c, Vec2 p, const char* what) {
    if (distance_to_curve(c, p) < 16 * kTol)
        throw PointOnCurve(std::string(what) + " lies on the curve");
}

// Follow the two-valued inverse of a covering map along the samples, taking
// the root closest to the previous point.  roots(q) must return both
// preimages.  Returns the lifted sample path over one traversal.
template <typename Roots>
std::vector<Vec2> continue_branch(const std::vector<Vec2>& samples,
                                  Roots roots) {
    std::vector<Vec2> out;
    out.reserve(samples.size());
    // Step from the lift over w0 to the lift over w1, bisecting the base
    // segment whenever the step is too large a fraction of the sheet
    // separation to identify the sheet unambiguously.  Intermediate lifted
    // points are emitted, densifying the component where the map is steep.
    auto advance = [&](auto&& self, Vec2 prev, Vec2 w0, Vec2 w1,
                       int depth) -> Vec2 {
        auto [a, b] = roots(w1);
        Vec2 pick = norm(a - prev) <= norm(b - prev) ? a : b;
        Vec2 other = pick == a ? b : a;
        double sep = norm(pick - other);
        if (sep > 0 && norm(pick - prev) > 0.45 * sep) {
            if (depth == 0)
                throw BranchTrackingFailure(
                    "ambiguous branch continuation; refinement failed");
            Vec2 mid = (w0 + w1) * 0.5;
            Vec2 pm = self(self, prev, w0, mid, depth - 1);
            out.push_back(pm);
            return self(self, pm, mid, w1, depth - 1);
        }
        return pick;
    };
    auto [r0, r1] = roots(samples[0]);
    Vec2 prev = r0;
    out.push_back(prev);
    for (std::size_t i = 1; i < samples.size(); ++i) {
        prev = advance(advance, prev, samples[i - 1], samples[i], 48);
        out.push_back(prev);
    }
    return out;
}

// Decide closure and package one or two components from a lifted traversal.
// `conjugate` maps a point of one sheet to the corresponding point of the
// other sheet over the same base point.
template <typename Conj>
void split_components(LiftResult& res, std::vector<Vec2> path, Conj conjugate,
                      double scale) {
    // path covers one traversal plus the wrap-around sample, so its last
    // entry is the lift of the start point after a full loop: it equals
    // either the start (two sheets, two components) or its conjugate
    bool closed = norm(path.back() - path.front()) <
                  norm(path.back() - conjugate(path.front()));
    if (closed) {
        ClosedPolyline a, b;
        a.pts = path;
        b.pts.reserve(path.size());
        for (Vec2 p : path) b.pts.push_back(conjugate(p));
        res.components = {a, b};
        res.connected = false;
    } else {
        ClosedPolyline a;
        a.pts = std::move(path);
        a.pts.reserve(2 * a.pts.size());
        std::size_t n = a.pts.size();
        for (std::size_t i = 0; i < n; ++i)
            a.pts.push_back(conjugate(a.pts[i]));
        res.components = {a};
        res.connected = true;
    }
    // drop duplicate traversal seams
    for (auto& comp : res.components) {
        std::vector<Vec2> clean;
        for (Vec2 p : comp.pts)
            if (clean.empty() || norm(p - clean.back()) > 1e-12 * scale)
                clean.push_back(p);
        while (clean.size() > 1 &&
               norm(clean.back() - clean.front()) <= 1e-12 * scale)
            clean.pop_back();
        comp.pts = std::move(clean);
    }
}

double curve_scale(const ClosedPolyline& c) {
    double s = 0;
    for (Vec2 p : c.pts) s = std::max(s, norm(p));
    return std::max(s, 1e-12);
}

}  // namespace

LiftResult levi_civita_lift(const MarkedCurve& c, char at) {
    if (at != 'E' && at != 'M')
        throw GeometryError("levi_civita_lift: center must be 'E' or 'M'");
    Vec2 center = at == 'E' ? c.earth : c.moon;
    Vec2 other = at == 'E' ? c.moon : c.earth;
    require_off_curve(c.curve, center, "lift center");
    require_off_curve(c.curve, other, "other center");

    LiftResult res;
    res.map_kind = at == 'E' ? MapKind::levi_civita_E : MapKind::levi_civita_M;
    res.normalization = {{1.0, 0.0}, -center};

    ClosedPolyline base = c.curve;
    base.translate(-center);
    base = resample_max_subtended_angle(base, {0, 0}, kMaxBranchAngle);

    auto roots = [](Vec2 q) {
        cplx r = std::sqrt(to_complex(q));
        return std::pair<Vec2, Vec2>{from_complex(r), from_complex(-r)};
    };
    std::vector<Vec2> samples = base.pts;
    samples.push_back(base.pts.front());
    auto path = continue_branch(samples, roots);
    split_components(res, std::move(path), [](Vec2 z) { return -z; },
                     curve_scale(base));

    Vec2 om = other - center;
    cplx s = std::sqrt(to_complex(om));
    std::string l = at == 'E' ? "M" : "E";
    res.marked_images = {{l + "1", from_complex(s)}, {l + "2", from_complex(-s)}};

    int w = winding_number(c.curve, center);
    if (res.connected != (std::abs(w) % 2 == 1))
        throw BranchTrackingFailure(
            "lift connectivity disagrees with winding parity");
    return res;
}

LiftResult birkhoff_lift(const MarkedCurve& c) {
    require_off_curve(c.curve, c.earth, "earth");
    require_off_curve(c.curve, c.moon, "moon");

    LiftResult res;
    res.map_kind = MapKind::birkhoff;
    // orientation-preserving similarity sending (E, M) to (-1, +1)
    cplx E = to_complex(c.earth), M = to_complex(c.moon);
    cplx a = 2.0 / (M - E), b = -(M + E) / (M - E);
    res.normalization = {from_complex(a), from_complex(b)};

    ClosedPolyline base = c.curve;
    for (auto& p : base.pts) p = res.normalization(p);
    base = resample_max_subtended_angle(base, {-1, 0}, kMaxBranchAngle);
    base = resample_max_subtended_angle(base, {1, 0}, kMaxBranchAngle);

    auto roots = [](Vec2 q) {
        cplx w = to_complex(q);
        cplx s = std::sqrt(w * w - 1.0);
        return std::pair<Vec2, Vec2>{from_complex(w + s), from_complex(w - s)};
    };
    std::vector<Vec2> samples = base.pts;
    samples.push_back(base.pts.front());
    auto path = continue_branch(samples, roots);
    auto conj = [](Vec2 z) { return from_complex(1.0 / to_complex(z)); };
    split_components(res, std::move(path), conj, curve_scale(base));

    res.marked_images = {{"E", {-1, 0}}, {"M", {1, 0}}};

    int we = winding_number(c.curve, c.earth);
    int wm = winding_number(c.curve, c.moon);
    if (res.connected != (std::abs(we + wm) % 2 == 1))
        throw BranchTrackingFailure(
            "lift connectivity disagrees with winding parity");
    return res;
}

ClosedPolyline invert(const ClosedPolyline& c) {
    require_off_curve(c, {0, 0}, "origin");
    ClosedPolyline fine = resample_max_subtended_angle(c, {0, 0}, 0.1);
    for (auto& p : fine.pts) p = from_complex(1.0 / to_complex(p));
    return fine;
}

ClosedPolyline project_square(const ClosedPolyline& c) {
    ClosedPolyline out = c;
    for (auto& p : out.pts) {
        cplx z = to_complex(p);
        p = from_complex(z * z);
    }
    return out;
}

ClosedPolyline project_birkhoff(const ClosedPolyline& c) {
    ClosedPolyline out = c;
    for (auto& p : out.pts) {
        cplx z = to_complex(p);
        p = from_complex(0.5 * (z + 1.0 / z));
    }
    return out;
}

double hausdorff_distance(const ClosedPolyline& a, const ClosedPolyline& b) {
    double d = 0;
    for (Vec2 p : a.pts) d = std::max(d, distance_to_curve(b, p));
    for (Vec2 p : b.pts) d = std::max(d, distance_to_curve(a, p));
    return d;
}

}  // namespace szj
