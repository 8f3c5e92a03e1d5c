#include "bn/classical.hpp"

#include <algorithm>

#include "bn/errors.hpp"

namespace bn {

CastelnuovoData castelnuovo_bound(i64 r, i64 d) {
    if (r < 2 || d < r) throw DomainError("castelnuovo_bound needs r >= 2 and d >= r");
    CastelnuovoData c;
    c.m = (d - 1) / (r - 1);
    c.epsilon = d - 1 - c.m * (r - 1);
    c.bound = c.m * (c.m - 1) * (r - 1) / 2 + c.m * c.epsilon;
    return c;
}

i64 castelnuovo_severi(i64 d1, i64 g1, i64 d2, i64 g2) {
    if (d1 < 2 || d2 < 2 || g1 < 0 || g2 < 0)
        throw DomainError("castelnuovo_severi needs degrees >= 2 and genera >= 0");
    return (d1 - 1) * (d2 - 1) + d1 * g1 + d2 * g2;
}

bool lange_bound(i64 g, i64 r, i64 d, i64 k, i64 gamma) {
    if (k < 2 || gamma < 1) throw DomainError("lange_bound needs k >= 2 and gamma >= 1");
    return 3 * g - 3 + rho(g, r, d) <= 2 * g - 2 - (2 * k - 3) * (gamma - 1);
}

std::optional<Relation> plane_projection_rule(int g, int d) {
    if (d < 4 || rho(g, 2, d) >= 0) return std::nullopt;
    if (2 * static_cast<i64>(g) >= static_cast<i64>(d - 1) * (d - 2)) return std::nullopt;
    return Relation{{g, 2, d}, {g, 1, d - 2}, RelKind::ContainedIn, "plane-projection"};
}

std::optional<Relation> coppens_noncontainment(int g, int d) {
    if (d < 5) return std::nullopt;
    i64 nodes = static_cast<i64>(d - 1) * (d - 2) / 2 - g;
    if (nodes < 0 || rho(g, 1, d - 3) >= 0) return std::nullopt;
    return Relation{{g, 2, d}, {g, 1, d - 3}, RelKind::NotContainedIn, "coppens"};
}

i64 ci_gonality(const std::vector<i64>& degrees) {
    if (degrees.empty() || !std::is_sorted(degrees.begin(), degrees.end()) || degrees.front() < 2)
        throw DomainError("ci_gonality needs ascending degrees >= 2");
    i64 out = degrees.front() - 1;
    for (std::size_t i = 1; i < degrees.size(); ++i) out *= degrees[i];
    return out;
}

i64 secant_expected_dim(i64 r, i64 d, i64 s, i64 e) {
    if (!(r > s && s >= 1)) throw DomainError("secant_expected_dim needs r > s >= 1");
    return r - s - (d - e - r + s) * s;
}

std::optional<Relation> secant_containment(int g, int r, int d, int s, int e) {
    if (!(r >= s + 1 && s >= 1) || d > g - 1 || e > g - 1 || e >= d) return std::nullopt;
    bool fires = secant_expected_dim(r, d, s, e) > 0;
    // odd r, s = 2: the expected dimension is 1
    if (s == 2 && r >= 3 && r % 2 == 1 && e >= d - 2 * r + 2 + (r + 3) / 2) fires = true;
    if (!fires) return std::nullopt;
    return Relation{{g, r, d}, {g, s, e}, RelKind::ContainedIn, "secant"};
}

Rational four_secant_count(i64 g, i64 d) {
    if (d < 5) throw DomainError("four_secant_count needs d >= 5");
    Rational n = Rational((d - 2) * (d - 3) * (d - 3) * (d - 4), 12) -
                 Rational(g * (d * d - 7 * d + 13 - g), 2);
    if (boost::multiprecision::denominator(n) != 1)
        throw DomainError("four_secant_count: non-integer value " + to_string(n));
    return n;
}

ConjectureThresholds conjecture_thresholds(i64 g, i64 r, i64 d, i64 s) {
    ConjectureThresholds t;
    if (r >= 2 && r < s)
        t.general = Rational(d - 2 * r + s) + Rational(g - d + r + 1, 2) +
                    Rational((s - 2) * (r - 1) - 1, s - 1);
    if (s == 2 && r >= 3) t.plane = d - 2 * r + 2 + (r + 3) / 2;
    return t;
}

GonalityBounds gonality_bounds(i64 g, i64 r, i64 d) {
    return {kappa(g, r, d), std::min(d - 2 * r + 2, (g + 3) / 2)};
}

}  // namespace bn
