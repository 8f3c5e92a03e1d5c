#include "bn/locus.hpp"

#include <algorithm>

#include "bn/errors.hpp"

namespace bn {

std::string to_string(const Locus& x) {
    return "(" + std::to_string(x.g) + "," + std::to_string(x.r) + "," + std::to_string(x.d) + ")";
}

std::string to_string(RelKind k) {
    switch (k) {
        case RelKind::Equal: return "=";
        case RelKind::ContainedIn: return "<=";
        case RelKind::NotContainedIn: return "!<=";
    }
    return "?";
}

i64 rho(i64 g, i64 r, i64 d) { return g - (r + 1) * (g - d + r); }

int clifford_index(const Locus& x) { return x.d - 2 * x.r; }

Locus serre_dual(const Locus& x) {
    Locus y{x.g, x.g - x.d + x.r - 1, 2 * x.g - 2 - x.d};
    if (y.r < 1 || y.d < 2)
        throw DomainError("Serre dual of " + to_string(x) + " is " + to_string(y) +
                          ", which is not a valid locus");
    return y;
}

Locus normalize(const Locus& x) { return x.d <= x.g - 1 ? x : serre_dual(x); }

bool is_enumerated(const Locus& x) {
    if (x.g < 3 || x.r < 1 || x.d < 2 || x.d > x.g - 1) return false;
    if (rho(x.g, x.r, x.d) >= 0) return false;
    return x.r == 1 || x.d >= 2 * x.r;
}

std::vector<Locus> enumerate_loci(int g) {
    std::vector<Locus> out;
    for (int r = 1; r < g; ++r)
        for (int d = 2; d <= g - 1; ++d)
            if (is_enumerated({g, r, d})) out.push_back({g, r, d});
    return out;
}

i64 rho_k(i64 g, i64 k, i64 r, i64 d) {
    i64 rp = std::min(r, g - d + r - 1);
    i64 c = g - k - d + 2 * r + 1;
    i64 best = 0;
    for (i64 l = 1; l <= rp; ++l) best = std::max(best, c * l - l * l);
    return rho(g, r, d) + best;
}

namespace {

void check_kappa_domain(i64 g, i64 r, i64 d) {
    auto where = "(" + std::to_string(g) + "," + std::to_string(r) + "," + std::to_string(d) + ")";
    if (r < 1 || d < 2) throw DomainError("kappa: invalid parameters " + where);
    if (rho(g, r, d) >= 0) throw DomainError("kappa: rho >= 0 at " + where);
    if (d > g - 1) throw DomainError("kappa: d > g-1 at " + where + ", normalize first");
    if (r >= 2 && d < 2 * r) throw DomainError("kappa: d < 2r violates Clifford at " + where);
}

}  // namespace

i64 kappa(i64 g, i64 r, i64 d) {
    check_kappa_domain(g, r, d);
    i64 q = d / r;
    if (g + 1 > q + d) return q;
    // floor(-2 sqrt(n)) = -ceil(sqrt(4n))
    return g + 1 - d + 2 * r - isqrt_ceil(-4 * rho(g, r, d));
}

i64 kappa_bruteforce(i64 g, i64 r, i64 d) {
    check_kappa_domain(g, r, d);
    i64 best = -1;
    for (i64 k = 2; k <= (g + 3) / 2; ++k)
        if (rho_k(g, k, r, d) >= 0) best = k;
    if (best < 0) throw DomainError("kappa_bruteforce: no k with rho_k >= 0");
    return best;
}

std::vector<Relation> trivial_relations(int g) {
    std::vector<Relation> out;
    auto emit = [&](const Locus& x, Locus y) {
        try {
            y = normalize(y);
        } catch (const DomainError&) {
            return;
        }
        if (is_enumerated(y) && y != x) out.push_back({x, y, RelKind::ContainedIn, "trivial"});
    };
    for (const auto& x : enumerate_loci(g)) {
        emit(x, {g, x.r, x.d + 1});
        if (x.r >= 2) emit(x, {g, x.r - 1, x.d - 1});
    }
    return out;
}

std::vector<Relation> clifford_collapse(int g) {
    std::vector<Relation> out;
    Locus hyp{g, 1, 2};
    for (const auto& x : enumerate_loci(g)) {
        if (x.r < 2) continue;
        if (x.d == 2 * x.r || (x.d == 2 * x.r + 1 && g >= 7))
            out.push_back({x, hyp, RelKind::Equal, "clifford"});
    }
    return out;
}

}  // namespace bn
