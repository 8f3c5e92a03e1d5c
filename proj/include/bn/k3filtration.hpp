#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "bn/arith.hpp"
#include "bn/lattice.hpp"
#include "bn/locus.hpp"

namespace bn {

// ranks r_1 < ... < r_n = s+1
struct FiltrationType {
    std::vector<int> ranks;

    friend bool operator==(const FiltrationType&, const FiltrationType&) = default;
};

std::string to_string(const FiltrationType& t);  // "1<2<4"

struct FilterConfig {
    bool dm_filter = false;
    bool elliptic_filter = false;

    static FilterConfig off() { return {}; }
    static FilterConfig on() { return {true, true}; }
    bool any() const { return dm_filter || elliptic_filter; }
};

struct Assignment {
    FiltrationType type;
    std::vector<LatticeClass> chern;  // c1(E_1), ..., c1(E_n) = H
    Rational c2_bound;
    bool dm_match = false;        // dm_filter would remove it
    bool elliptic_match = false;  // elliptic_filter would remove it
};

struct LMInvariants {
    i64 rank = 0;
    i64 c2 = 0;
    i64 chi = 0;
};
LMInvariants lm_invariants(i64 g, i64 s, i64 e);

std::vector<FiltrationType> enumerate_filtration_types(int s);

// x_{i,j} = mu(E_i / E_{i-j}) for 1 <= j <= i <= n, row i-1 holds x_{i,1..i}
std::vector<std::vector<Rational>> gt_pattern(const LatticeBasis& basis, const Assignment& a);
bool gt_check(const LatticeBasis& basis, const Assignment& a);
bool quotient_checks(const LatticeBasis& basis, const Assignment& a);

// The Lemma's bounds |x| <= 1 + d/sqrt|Delta|, |y| <= (2g-2)/sqrt|Delta|, kept as the
// exact integer data they are compared with.
struct DestabBox {
    i64 abs_delta = 0;
    i64 x_max = 0;  // largest integer |x| inside the box
    i64 y_max = 0;  // largest integer |y| inside the box
};
DestabBox destab_box(const LatticeBasis& basis);
// whether the quotient class xH - yL lies in the Lemma's region
bool in_destab_box(const LatticeBasis& basis, i64 x, i64 y);

Rational c2_lower_bound(const LatticeBasis& basis, const Assignment& a);

struct Enumeration {
    std::vector<Assignment> kept;
    std::vector<Assignment> removed;  // dropped by an enabled filter
};

// partitions > 1 splits the filtration types across threads
Enumeration enumerate_assignments(const LatticeBasis& basis, int s, const FilterConfig& config,
                                  int partitions = 1);

std::optional<Rational> min_series_degree(const LatticeBasis& basis, int s,
                                          const FilterConfig& config);

// memoizes min_series_degree per (g, r, d, s, filters)
class K3MinCache {
public:
    std::optional<Rational> get(const LatticeBasis& basis, int s, const FilterConfig& config);

private:
    std::map<std::tuple<i64, i64, i64, int, bool, bool>, std::optional<Rational>> memo_;
};

std::optional<Relation> k3_noncontainment(int g, int r, int d, int s, int e,
                                          const FilterConfig& config, K3MinCache* cache = nullptr);

struct K3Expectation {
    Locus lhs;
    Locus rhs;
    Assignment witness;
};
std::optional<K3Expectation> k3_expected(int g, int r, int d, int s, int e,
                                         const FilterConfig& config = FilterConfig::on());

}  // namespace bn
