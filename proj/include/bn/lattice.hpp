#pragma once

#include <compare>
#include <string>
#include <vector>

#include "bn/arith.hpp"

namespace bn {

// Lambda^r_{g,d} = Z[H] + Z[L] with H^2 = 2g-2, H.L = d, L^2 = 2r-2
struct LatticeBasis {
    i64 g = 2;
    i64 r = 0;
    i64 d = 0;
};

// aH + bL. The paper writes quotients as xH - yL, i.e. x = a, y = -b.
struct LatticeClass {
    i64 a = 0;
    i64 b = 0;

    friend auto operator<=>(const LatticeClass&, const LatticeClass&) = default;
    friend bool operator==(const LatticeClass&, const LatticeClass&) = default;

    LatticeClass operator+(const LatticeClass& o) const { return {a + o.a, b + o.b}; }
    LatticeClass operator-(const LatticeClass& o) const { return {a - o.a, b - o.b}; }
    LatticeClass operator-() const { return {-a, -b}; }

    static LatticeClass H() { return {1, 0}; }
    static LatticeClass L() { return {0, 1}; }
};

i128 pair(const LatticeBasis& basis, const LatticeClass& u, const LatticeClass& v);
i128 self_int(const LatticeBasis& basis, const LatticeClass& u);
// H.u
i128 h_degree(const LatticeBasis& basis, const LatticeClass& u);

i64 delta(i64 g, i64 r, i64 d);
inline i64 delta(const LatticeBasis& b) { return delta(b.g, b.r, b.d); }

// all (a,b) with |a| <= boxA, |b| <= boxB and the given square, sorted by (a,b)
std::vector<LatticeClass> find_classes_with_square(const LatticeBasis& basis, i64 square, i64 boxA,
                                                   i64 boxB);

// "2H-3L", "L", "0"
std::string format_ab(const LatticeClass& c);
// the same class as xH - yL, printed "x=1,y=2"
std::string format_xy(const LatticeClass& c);

}  // namespace bn
