#pragma once

#include <optional>
#include <vector>

#include "bn/arith.hpp"
#include "bn/locus.hpp"

namespace bn {

struct CastelnuovoData {
    i64 m = 0;
    i64 epsilon = 0;
    i64 bound = 0;
};

CastelnuovoData castelnuovo_bound(i64 r, i64 d);
i64 castelnuovo_severi(i64 d1, i64 g1, i64 d2, i64 g2);
bool lange_bound(i64 g, i64 r, i64 d, i64 k, i64 gamma);

std::optional<Relation> plane_projection_rule(int g, int d);
std::optional<Relation> coppens_noncontainment(int g, int d);

i64 ci_gonality(const std::vector<i64>& degrees);

// expected dimension of V^{r-s}_{d-e} on a g^r_d
i64 secant_expected_dim(i64 r, i64 d, i64 s, i64 e);
std::optional<Relation> secant_containment(int g, int r, int d, int s, int e);

// Cayley's virtual count of 4-secant lines to a smooth space curve
Rational four_secant_count(i64 g, i64 d);

struct ConjectureThresholds {
    std::optional<Rational> general;  // 2 <= r < s
    std::optional<i64> plane;         // s = 2, r >= 3
};
ConjectureThresholds conjecture_thresholds(i64 g, i64 r, i64 d, i64 s);

struct GonalityBounds {
    i64 lower = 0;     // kappa, certified
    i64 expected = 0;  // min(d-2r+2, floor((g+3)/2)), heuristic
};
GonalityBounds gonality_bounds(i64 g, i64 r, i64 d);

}  // namespace bn
