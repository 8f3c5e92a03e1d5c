#pragma once

#include <compare>
#include <string>
#include <vector>

#include "bn/arith.hpp"

namespace bn {

// M^r_{g,d}
struct Locus {
    int g = 0;
    int r = 0;
    int d = 0;

    friend auto operator<=>(const Locus&, const Locus&) = default;
    friend bool operator==(const Locus&, const Locus&) = default;
};

std::string to_string(const Locus& x);  // "(g,r,d)"

enum class RelKind { Equal, ContainedIn, NotContainedIn };

std::string to_string(RelKind k);

struct Relation {
    Locus lhs;
    Locus rhs;
    RelKind kind = RelKind::ContainedIn;
    std::string provenance;
};

i64 rho(i64 g, i64 r, i64 d);
int clifford_index(const Locus& x);

// (g, g-d+r-1, 2g-2-d); throws DomainError when the dual is not a valid locus
Locus serre_dual(const Locus& x);
// x itself when d <= g-1, else its Serre dual
Locus normalize(const Locus& x);

// normalized loci with rho < 0, 2 <= d <= g-1, and d >= 2r for r >= 2; sorted by (r,d)
std::vector<Locus> enumerate_loci(int g);
bool is_enumerated(const Locus& x);

i64 rho_k(i64 g, i64 k, i64 r, i64 d);
// closed form; needs rho < 0, d <= g-1 and d >= 2r when r >= 2
i64 kappa(i64 g, i64 r, i64 d);
// largest k >= 2 with rho_k >= 0, scanning k <= floor((g+3)/2)
i64 kappa_bruteforce(i64 g, i64 r, i64 d);

std::vector<Relation> trivial_relations(int g);
std::vector<Relation> clifford_collapse(int g);

}  // namespace bn
