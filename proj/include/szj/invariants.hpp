#pragma once

#include <string>
#include <vector>

#include "szj/curve.hpp"

namespace szj {

// Even residue mod an even modulus.  modulus == 0 means a plain integer
// (no reduction); otherwise value is normalized to [0, modulus).
struct ResidueClass {
    int modulus = 0;
    int value = 0;

    static ResidueClass reduce(long long v, int modulus);
    bool operator==(const ResidueClass&) const = default;
};

struct FreeClass {
    enum Kind { E_class, M_class, EM_power } kind = EM_power;
    int n = 0;  // meaningful for EM_power only

    bool operator==(const FreeClass&) const = default;
};

// The four J+-like invariants of a marked curve, plus the raw planar data
// they are built from.  Half-integer quantities are stored doubled so all
// arithmetic stays exact.
struct InvariantReport {
    int j_plus = 0;
    int sj_plus_doubled = 0;
    int rotation = 0;
    int w_e = 0;
    int w_m = 0;
    int j0_doubled = 0;
    int jE_doubled = 0;
    int jM_doubled = 0;
    ResidueClass jEM;
    int n = 0;
    FreeClass free_class;
};

// J0 = J+ + w_E^2/2 + w_M^2/2, returned doubled.
int j0_doubled(const MarkedCurve& c);

// JE = J+ of a squared-lift component at E plus half the squared windings
// around the two moon preimages; both components checked when two exist.
// Returned doubled.  jM is the mirror at M.
int jE_doubled(const MarkedCurve& c);
int jM_doubled(const MarkedCurve& c);

// n = |w0| of a Birkhoff lift component; the class is J+ of the component
// mod 2n (a plain integer when n = 0).  Component independence is checked.
std::pair<ResidueClass, int> jEM_and_n(const MarkedCurve& c);

// Free homotopy class in the twice-punctured plane up to the loop moves at
// the centers: detected from the winding parities, with the power of the
// both-centers class recovered from n.
FreeClass classify(const MarkedCurve& c);

InvariantReport full_report(const MarkedCurve& c);

struct RelationCheck {
    std::string name;
    bool applicable = false;
    bool ok = true;
    std::string detail;
};

struct RelationReport {
    std::vector<RelationCheck> checks;
    bool all_ok = true;
};

// Evaluate every arithmetic relation among the invariants that applies to
// the parity case of (w_E, w_M): the mod-2 table per class, evenness of the
// jEM representative, jE = 2*j0 - 1 when w_E is odd (and the divisibility
// by 4 of jE and jEM when w_M is also even), the mirror statements, and the
// both-even congruences j0+jE+jM+jEM = n (mod 4), jE = jM = n/2 (mod 2).
RelationReport check_relations(const InvariantReport& rep);

// Flat JSON object; doubled fields keep the _doubled suffix in the keys.
std::string to_json(const InvariantReport& rep);
std::string to_json(const RelationReport& rep);

}  // namespace szj
