#include "szj/arnold.hpp"

namespace szj {

int j_plus(const Arrangement& A) {
    int n = A.n_vertices();
    int acc = 0;
    for (const Face& f : A.faces)
        if (f.bounded) acc += f.winding * f.winding * f.euler_char;
    return 1 + n - acc;
}

int j_plus(const ClosedPolyline& c, double tol) {
    return j_plus(build_arrangement(c, tol));
}

int sj_plus_doubled(const ClosedPolyline& c, double tol) {
    int r = rotation_number(c);
    return 2 * j_plus(c, tol) + r * r;
}

}  // namespace szj
