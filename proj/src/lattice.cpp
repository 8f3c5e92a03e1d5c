#include "bn/lattice.hpp"

namespace bn {

i128 pair(const LatticeBasis& basis, const LatticeClass& u, const LatticeClass& v) {
    i128 hh = 2 * static_cast<i128>(basis.g) - 2;
    i128 hl = basis.d;
    i128 ll = 2 * static_cast<i128>(basis.r) - 2;
    return static_cast<i128>(u.a) * v.a * hh + (static_cast<i128>(u.a) * v.b + static_cast<i128>(u.b) * v.a) * hl +
           static_cast<i128>(u.b) * v.b * ll;
}

i128 self_int(const LatticeBasis& basis, const LatticeClass& u) { return pair(basis, u, u); }

i128 h_degree(const LatticeBasis& basis, const LatticeClass& u) {
    return pair(basis, LatticeClass::H(), u);
}

i64 delta(i64 g, i64 r, i64 d) { return 4 * (g - 1) * (r - 1) - d * d; }

std::vector<LatticeClass> find_classes_with_square(const LatticeBasis& basis, i64 square, i64 boxA,
                                                   i64 boxB) {
    std::vector<LatticeClass> out;
    for (i64 a = -boxA; a <= boxA; ++a)
        for (i64 b = -boxB; b <= boxB; ++b)
            if (self_int(basis, {a, b}) == square) out.push_back({a, b});
    return out;
}

namespace {

std::string term(i64 c, const char* sym, bool first) {
    if (c == 0) return "";
    std::string s;
    if (c < 0)
        s = "-";
    else if (!first)
        s = "+";
    i64 m = c < 0 ? -c : c;
    if (m != 1) s += std::to_string(m);
    return s + sym;
}

}  // namespace

std::string format_ab(const LatticeClass& c) {
    if (c.a == 0 && c.b == 0) return "0";
    std::string s = term(c.a, "H", true);
    return s + term(c.b, "L", s.empty());
}

std::string format_xy(const LatticeClass& c) {
    return "x=" + std::to_string(c.a) + ",y=" + std::to_string(-c.b);
}

}  // namespace bn
