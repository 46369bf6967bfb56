#include "szj/invariants.hpp"

#include <cmath>
#include <utility>

#include "json.hpp"
#include "szj/arnold.hpp"
#include "szj/lift.hpp"

namespace szj {

namespace {

int mod_pos(long long v, int m) {
    long long r = v % m;
    if (r < 0) r += m;
    return static_cast<int>(r);
}

// J+ of a lift component, nudging the vertices if the lift left the curve
// marginally non-generic (near-vertex contacts from resampling).
int component_j_plus(const ClosedPolyline& comp) {
    try {
        return j_plus(comp);
    } catch (const GeometryError&) {
        double scale = comp.length() / (2 * M_PI);
        return j_plus(make_generic(comp, 1e-5 * scale, 17));
    }
}

int jlift_doubled(const MarkedCurve& c, char at) {
    LiftResult lift = levi_civita_lift(c, at);
    Vec2 p1 = lift.marked_images[0].where;
    Vec2 p2 = lift.marked_images[1].where;
    int first = 0;
    for (std::size_t i = 0; i < lift.components.size(); ++i) {
        const ClosedPolyline& comp = lift.components[i];
        int w1 = winding_number(comp, p1);
        int w2 = winding_number(comp, p2);
        int val = 2 * component_j_plus(comp) + w1 * w1 + w2 * w2;
        if (i == 0)
            first = val;
        else if (val != first)
            throw GeometryError("squared-lift components disagree on the lifted invariant");
    }
    return first;
}

}  // namespace

ResidueClass ResidueClass::reduce(long long v, int modulus) {
    if (modulus == 0) return {0, static_cast<int>(v)};
    return {modulus, mod_pos(v, modulus)};
}

int j0_doubled(const MarkedCurve& c) {
    int we = winding_number(c.curve, c.earth);
    int wm = winding_number(c.curve, c.moon);
    return 2 * j_plus(c.curve) + we * we + wm * wm;
}

int jE_doubled(const MarkedCurve& c) { return jlift_doubled(c, 'E'); }
int jM_doubled(const MarkedCurve& c) { return jlift_doubled(c, 'M'); }

std::pair<ResidueClass, int> jEM_and_n(const MarkedCurve& c) {
    LiftResult lift = birkhoff_lift(c);
    int w0 = winding_number(lift.components[0], {0, 0});
    int n = std::abs(w0);
    int jp = component_j_plus(lift.components[0]);
    if (lift.components.size() == 2) {
        int w1 = winding_number(lift.components[1], {0, 0});
        if (w1 != -w0)
            throw GeometryError("Birkhoff components disagree on the origin winding");
        int jp1 = component_j_plus(lift.components[1]);
        if (n == 0 ? jp1 != jp : mod_pos(jp1 - jp, 2 * n) != 0)
            throw GeometryError("Birkhoff components disagree on the lifted invariant");
    }
    return {ResidueClass::reduce(jp, 2 * n), n};
}

FreeClass classify(const MarkedCurve& c) {
    int we = winding_number(c.curve, c.earth);
    int wm = winding_number(c.curve, c.moon);
    bool eo = we % 2 != 0, mo = wm % 2 != 0;
    if (eo && !mo) return {FreeClass::E_class, 0};
    if (!eo && mo) return {FreeClass::M_class, 0};
    return {FreeClass::EM_power, jEM_and_n(c).second};
}

InvariantReport full_report(const MarkedCurve& c) {
    InvariantReport rep;
    rep.j_plus = j_plus(c.curve);
    rep.sj_plus_doubled = sj_plus_doubled(c.curve);
    rep.rotation = rotation_number(c.curve);
    rep.w_e = winding_number(c.curve, c.earth);
    rep.w_m = winding_number(c.curve, c.moon);
    rep.j0_doubled = j0_doubled(c);
    rep.jE_doubled = jE_doubled(c);
    rep.jM_doubled = jM_doubled(c);
    std::tie(rep.jEM, rep.n) = jEM_and_n(c);
    bool eo = rep.w_e % 2 != 0, mo = rep.w_m % 2 != 0;
    rep.free_class = eo == mo ? FreeClass{FreeClass::EM_power, rep.n}
                    : eo      ? FreeClass{FreeClass::E_class, 0}
                              : FreeClass{FreeClass::M_class, 0};
    if (rep.j_plus % 2 != 0 || rep.jEM.value % 2 != 0)
        throw GeometryError("odd value for an invariant that must be even");
    if (rep.jEM.modulus != 2 * rep.n)
        throw GeometryError("residue modulus does not match 2n");
    return rep;
}

RelationReport check_relations(const InvariantReport& rep) {
    RelationReport out;
    auto add = [&](std::string name, bool applicable, bool ok, std::string detail) {
        if (applicable && !ok) out.all_ok = false;
        out.checks.push_back({std::move(name), applicable, applicable ? ok : true,
                              std::move(detail)});
    };
    bool eo = rep.w_e % 2 != 0, mo = rep.w_m % 2 != 0;

    add("jEM_even", true, rep.jEM.value % 2 == 0, "jEM representative is even");

    // Mod-2 table per free homotopy class (doubled values mod 4).
    int p0 = mod_pos(rep.j0_doubled, 4);
    int pE = mod_pos(rep.jE_doubled, 4);
    int pM = mod_pos(rep.jM_doubled, 4);
    int e0, eE, eM;
    switch (rep.free_class.kind) {
        case FreeClass::E_class: e0 = 1, eE = 0, eM = 1; break;
        case FreeClass::M_class: e0 = 1, eE = 1, eM = 0; break;
        default: {
            int nn = rep.free_class.n;
            if (nn % 2 != 0)
                e0 = eE = eM = 2;
            else if (nn % 4 == 2)
                e0 = 0, eE = 2, eM = 2;
            else
                e0 = eE = eM = 0;
        }
    }
    add("class_parities", true, p0 == e0 && pE == eE && pM == eM,
        "j0, jE, jM mod 2 match the class table");

    add("wE_odd_jE", eo, rep.jE_doubled == 2 * rep.j0_doubled - 2,
        "w_E odd: jE = 2 j0 - 1");
    add("wM_odd_jM", mo, rep.jM_doubled == 2 * rep.j0_doubled - 2,
        "w_M odd: jM = 2 j0 - 1");
    add("wE_odd_wM_even_div4", eo && !mo,
        mod_pos(rep.jE_doubled, 8) == 0 && mod_pos(rep.jEM.value, 4) == 0 && rep.n == 0,
        "w_E odd, w_M even: 4 | jE, 4 | jEM, n = 0");
    add("wM_odd_wE_even_div4", mo && !eo,
        mod_pos(rep.jM_doubled, 8) == 0 && mod_pos(rep.jEM.value, 4) == 0 && rep.n == 0,
        "w_M odd, w_E even: 4 | jM, 4 | jEM, n = 0");

    bool both_even = !eo && !mo;
    bool integral = rep.j0_doubled % 2 == 0 && rep.jE_doubled % 2 == 0 &&
                    rep.jM_doubled % 2 == 0 && rep.n % 2 == 0;
    add("both_even_integrality", both_even, integral,
        "w_E, w_M even: j0, jE, jM are integers and n is even");
    if (both_even && integral) {
        long long sum = (rep.j0_doubled + rep.jE_doubled + rep.jM_doubled) / 2 +
                        rep.jEM.value;
        add("both_even_mod4_sum", true, mod_pos(sum - rep.n, 4) == 0,
            "w_E, w_M even: j0 + jE + jM + jEM = n (mod 4)");
        add("both_even_jE_jM_half_n", true,
            mod_pos(rep.jE_doubled / 2 - rep.n / 2, 2) == 0 &&
                mod_pos(rep.jM_doubled / 2 - rep.n / 2, 2) == 0,
            "w_E, w_M even: jE = jM = n/2 (mod 2)");
    }
    return out;
}

std::string to_json(const InvariantReport& rep) {
    nlohmann::json j{
        {"j_plus", rep.j_plus},
        {"sj_plus_doubled", rep.sj_plus_doubled},
        {"rotation", rep.rotation},
        {"w_e", rep.w_e},
        {"w_m", rep.w_m},
        {"j0_doubled", rep.j0_doubled},
        {"jE_doubled", rep.jE_doubled},
        {"jM_doubled", rep.jM_doubled},
        {"jEM_value", rep.jEM.value},
        {"jEM_modulus", rep.jEM.modulus},
        {"n", rep.n},
        {"free_class", rep.free_class.kind == FreeClass::E_class   ? "E"
                       : rep.free_class.kind == FreeClass::M_class ? "M"
                                                                   : "EM"},
        {"em_power", rep.free_class.n},
    };
    return j.dump();
}

std::string to_json(const RelationReport& rep) {
    nlohmann::json checks = nlohmann::json::array();
    for (const RelationCheck& c : rep.checks)
        checks.push_back({{"name", c.name},
                          {"applicable", c.applicable},
                          {"ok", c.ok},
                          {"detail", c.detail}});
    return nlohmann::json{{"all_ok", rep.all_ok}, {"checks", checks}}.dump();
}

}  // namespace szj
