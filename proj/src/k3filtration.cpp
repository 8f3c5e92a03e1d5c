#include "bn/k3filtration.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>

#include "bn/errors.hpp"

namespace bn {

std::string to_string(const FiltrationType& t) {
    std::string s;
    for (std::size_t i = 0; i < t.ranks.size(); ++i) {
        if (i) s += "<";
        s += std::to_string(t.ranks[i]);
    }
    return s;
}

LMInvariants lm_invariants(i64 g, i64 s, i64 e) { return {s + 1, e, g - e + 2 * s + 1}; }

std::vector<FiltrationType> enumerate_filtration_types(int s) {
    if (s < 1) throw DomainError("filtration types need s >= 1");
    std::vector<FiltrationType> out;
    for (unsigned mask = 1; mask < (1u << s); ++mask) {
        FiltrationType t;
        for (int i = 0; i < s; ++i)
            if (mask & (1u << i)) t.ranks.push_back(i + 1);
        t.ranks.push_back(s + 1);
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), [](const FiltrationType& a, const FiltrationType& b) {
        if (a.ranks.size() != b.ranks.size()) return a.ranks.size() < b.ranks.size();
        return a.ranks < b.ranks;
    });
    return out;
}

namespace {

void check_shape(const Assignment& a) {
    const auto& rk = a.type.ranks;
    if (rk.size() < 2 || rk.size() != a.chern.size() || a.chern.back() != LatticeClass::H())
        throw DomainError("malformed assignment");
    if (rk.front() < 1 || !std::is_sorted(rk.begin(), rk.end()) ||
        std::adjacent_find(rk.begin(), rk.end()) != rk.end())
        throw DomainError("filtration ranks must be strictly increasing and positive");
}

// mu(E_j / E_i) as a (numerator, denominator) pair, indices into 0..n with E_0 = 0
struct Slopes {
    std::vector<i128> deg;  // H.c1(E_i)
    std::vector<i64> rank;
    i128 num(std::size_t i, std::size_t j) const { return deg[j] - deg[i]; }
    i64 den(std::size_t i, std::size_t j) const { return rank[j] - rank[i]; }
    // mu(i,j) >= mu(k,l)
    bool ge(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return num(i, j) * den(k, l) >= num(k, l) * den(i, j);
    }
};

Slopes slopes_of(const LatticeBasis& basis, const Assignment& a) {
    Slopes sl;
    sl.deg.push_back(0);
    sl.rank.push_back(0);
    for (std::size_t i = 0; i < a.chern.size(); ++i) {
        sl.deg.push_back(h_degree(basis, a.chern[i]));
        sl.rank.push_back(a.type.ranks[i]);
    }
    return sl;
}

}  // namespace

std::vector<std::vector<Rational>> gt_pattern(const LatticeBasis& basis, const Assignment& a) {
    check_shape(a);
    Slopes sl = slopes_of(basis, a);
    std::size_t n = a.chern.size();
    std::vector<std::vector<Rational>> x(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= i; ++j) {
            using boost::multiprecision::cpp_int;
            x[i - 1].push_back(Rational(cpp_int(static_cast<i64>(sl.num(i - j, i))), cpp_int(sl.den(i - j, i))));
        }
    return x;
}

bool gt_check(const LatticeBasis& basis, const Assignment& a) {
    check_shape(a);
    Slopes sl = slopes_of(basis, a);
    std::size_t n = a.chern.size();
    // x_{i,j} >= x_{i+1,j+1} >= x_{i+1,j} with x_{i,j} = mu(E_i / E_{i-j})
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j <= i; ++j) {
            if (!sl.ge(i - j, i, i - j, i + 1)) return false;
            if (!sl.ge(i - j, i + 1, i - j + 1, i + 1)) return false;
        }
    return true;
}

bool quotient_checks(const LatticeBasis& basis, const Assignment& a) {
    check_shape(a);
    std::size_t n = a.chern.size();
    i128 top = 2 * static_cast<i128>(basis.g) - 2;
    i64 rn = a.type.ranks.back();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        LatticeClass q = LatticeClass::H() - a.chern[i];
        if (self_int(basis, q) < 0 || h_degree(basis, q) <= 0) return false;
        // mu(E_i) >= mu(E)
        if (h_degree(basis, a.chern[i]) * rn < top * a.type.ranks[i]) return false;
    }
    return true;
}

DestabBox destab_box(const LatticeBasis& basis) {
    i64 dl = delta(basis);
    if (dl >= 0)
        throw DomainError("Delta(" + std::to_string(basis.g) + "," + std::to_string(basis.r) + "," +
                          std::to_string(basis.d) + ") = " + std::to_string(dl) +
                          " >= 0: no K3 surface with this Picard lattice");
    DestabBox b;
    b.abs_delta = -dl;
    // floor(sqrt(floor(z))) = floor(sqrt(z))
    b.x_max = 1 + isqrt(basis.d * basis.d / b.abs_delta);
    b.y_max = isqrt((2 * basis.g - 2) * (2 * basis.g - 2) / b.abs_delta);
    return b;
}

bool in_destab_box(const LatticeBasis& basis, i64 x, i64 y) {
    i128 A = -static_cast<i128>(delta(basis));
    if (A <= 0) return false;
    i128 d2 = static_cast<i128>(basis.d) * basis.d;
    i128 h2 = static_cast<i128>(2 * basis.g - 2) * (2 * basis.g - 2);
    bool y_ok = static_cast<i128>(y) * y * A <= h2;
    if (basis.r <= 1) {
        // uniform bound; the strict r = 1 branch drops boundary cases
        i128 ax = x < 0 ? -x : x;
        return y_ok && (ax <= 1 || (ax - 1) * (ax - 1) * A <= d2);
    }
    if (x >= 1) return y >= 1 && y_ok && static_cast<i128>(x - 1) * (x - 1) * A <= d2;
    return y <= -1 && y_ok && static_cast<i128>(1 - x) * (1 - x) * A <= d2;
}

Rational c2_lower_bound(const LatticeBasis& basis, const Assignment& a) {
    check_shape(a);
    Rational total = 0;
    LatticeClass prev{0, 0};
    int prev_rank = 0;
    for (std::size_t i = 0; i < a.chern.size(); ++i) {
        LatticeClass f = a.chern[i] - prev;
        i64 p = a.type.ranks[i] - prev_rank;
        if (p > 1) {
            using boost::multiprecision::cpp_int;
            cpp_int sq = cpp_int(static_cast<i64>(self_int(basis, f)));
            total += Rational(sq * (p - 1), cpp_int(2 * p)) + p - Rational(1, p);
        }
        total += Rational(boost::multiprecision::cpp_int(static_cast<i64>(pair(basis, f, prev))));
        prev = a.chern[i];
        prev_rank = a.type.ranks[i];
    }
    return total;
}

namespace {

struct Candidate {
    LatticeClass sub;  // c1(E_i) = H - quotient
    i128 deg;          // H.sub
};

std::vector<Candidate> candidates(const LatticeBasis& basis) {
    DestabBox box = destab_box(basis);
    std::vector<Candidate> out;
    for (i64 x = -box.x_max; x <= box.x_max; ++x)
        for (i64 y = -box.y_max; y <= box.y_max; ++y) {
            if (!in_destab_box(basis, x, y)) continue;
            LatticeClass q{x, -y};
            if (self_int(basis, q) < 0 || h_degree(basis, q) <= 0) continue;
            LatticeClass sub = LatticeClass::H() - q;
            out.push_back({sub, h_degree(basis, sub)});
        }
    std::sort(out.begin(), out.end(),
              [](const Candidate& a, const Candidate& b) { return a.sub < b.sub; });
    return out;
}

// c2 bound with every stable-factor term over the common denominator 2*lcm(p_i)
struct BoundCalc {
    const LatticeBasis& basis;
    Rational operator()(const std::vector<int>& ranks, const std::vector<LatticeClass>& chern) const {
        i128 den = 1;
        int prev_rank = 0;
        for (int rk : ranks) {
            i128 p = rk - prev_rank;
            den = std::lcm(static_cast<i64>(den), static_cast<i64>(2 * p));
            prev_rank = rk;
        }
        i128 num = 0;
        LatticeClass prev{0, 0};
        prev_rank = 0;
        for (std::size_t i = 0; i < ranks.size(); ++i) {
            LatticeClass f = chern[i] - prev;
            i128 p = ranks[i] - prev_rank;
            if (p > 1) num += ((p - 1) * self_int(basis, f) + 2 * p * p - 2) * (den / (2 * p));
            num += pair(basis, f, prev) * den;
            prev = chern[i];
            prev_rank = ranks[i];
        }
        using boost::multiprecision::int128_t;
        using boost::multiprecision::cpp_int;
        return Rational(cpp_int(int128_t(num)), cpp_int(int128_t(den)));
    }
};

using Visitor = std::function<void(const FiltrationType&, const std::vector<LatticeClass>&,
                                   const Rational&)>;

// visits every slope-admissible assignment of one type, chern[n-1] = H fixed
void search(const LatticeBasis& basis, const FiltrationType& type, const std::vector<Candidate>& cands,
            const Visitor& visit) {
    const std::size_t n = type.ranks.size();
    if (n < 2) return;
    std::vector<int> rank(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) rank[i + 1] = type.ranks[i];
    const i128 top = h_degree(basis, LatticeClass::H());
    BoundCalc bound{basis};
    std::vector<i128> deg(n + 1, 0);
    deg[n] = top;
    std::vector<LatticeClass> chern(n, LatticeClass{0, 0});
    chern[n - 1] = LatticeClass::H();
    auto ge = [](i128 n1, i128 d1, i128 n2, i128 d2) { return n1 * d2 >= n2 * d1; };

    std::function<void(std::size_t)> rec = [&](std::size_t m) {
        // choosing E_m; factor slopes along 0 < 1 < ... < m < n must weakly decrease
        if (m == n) {
            visit(type, chern, bound(type.ranks, chern));
            return;
        }
        for (const auto& c : cands) {
            i128 fn = c.deg - deg[m - 1];
            i128 fd = rank[m] - rank[m - 1];
            if (!ge(fn, fd, top - c.deg, rank[n] - rank[m])) continue;
            if (m >= 2 && !ge(deg[m - 1] - deg[m - 2], rank[m - 1] - rank[m - 2], fn, fd)) continue;
            deg[m] = c.deg;
            chern[m - 1] = c.sub;
            rec(m + 1);
        }
    };
    rec(1);
}

bool dm_matches(const LatticeBasis& basis, int s, const FiltrationType& t,
                const std::vector<LatticeClass>& chern) {
    return t.ranks.size() == 2 && t.ranks[0] == 1 && s > basis.r &&
           chern[0] == LatticeClass::H() - LatticeClass::L();
}

bool elliptic_matches(const LatticeBasis& basis, const FiltrationType& t,
                      const std::vector<LatticeClass>& chern) {
    std::size_t n = t.ranks.size();
    if (t.ranks[n - 1] - t.ranks[n - 2] < 2) return false;
    return self_int(basis, LatticeClass::H() - chern[n - 2]) == 0;
}

bool removed_by(const FilterConfig& cfg, const Assignment& a) {
    return (cfg.dm_filter && a.dm_match) || (cfg.elliptic_filter && a.elliptic_match);
}

}  // namespace

Enumeration enumerate_assignments(const LatticeBasis& basis, int s, const FilterConfig& config,
                                  int partitions) {
    auto types = enumerate_filtration_types(s);
    auto cands = candidates(basis);
    partitions = std::max(1, partitions);

    auto run = [&](int part) {
        std::vector<std::pair<std::size_t, Assignment>> found;
        for (std::size_t k = 0; k < types.size(); ++k) {
            if (static_cast<int>(k % partitions) != part) continue;
            search(basis, types[k], cands,
                   [&](const FiltrationType& t, const std::vector<LatticeClass>& chern, const Rational& b) {
                       Assignment a{t, chern, b, dm_matches(basis, s, t, chern),
                                    elliptic_matches(basis, t, chern)};
                       found.emplace_back(k, std::move(a));
                   });
        }
        return found;
    };

    std::vector<std::pair<std::size_t, Assignment>> all;
    if (partitions == 1) {
        all = run(0);
    } else {
        std::vector<std::future<std::vector<std::pair<std::size_t, Assignment>>>> futs;
        for (int p = 0; p < partitions; ++p) futs.push_back(std::async(std::launch::async, run, p));
        for (auto& f : futs) {
            auto part = f.get();
            std::move(part.begin(), part.end(), std::back_inserter(all));
        }
    }
    std::stable_sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second.chern < y.second.chern;
    });

    Enumeration en;
    for (auto& [k, a] : all) (removed_by(config, a) ? en.removed : en.kept).push_back(std::move(a));
    return en;
}

std::optional<Rational> min_series_degree(const LatticeBasis& basis, int s, const FilterConfig& config) {
    auto types = enumerate_filtration_types(s);
    auto cands = candidates(basis);
    std::optional<Rational> best;
    for (const auto& t : types)
        search(basis, t, cands,
               [&](const FiltrationType& ft, const std::vector<LatticeClass>& chern, const Rational& b) {
                   if (config.dm_filter && dm_matches(basis, s, ft, chern)) return;
                   if (config.elliptic_filter && elliptic_matches(basis, ft, chern)) return;
                   if (!best || b < *best) best = b;
               });
    return best;
}

std::optional<Rational> K3MinCache::get(const LatticeBasis& basis, int s, const FilterConfig& config) {
    auto key = std::make_tuple(basis.g, basis.r, basis.d, s, config.dm_filter, config.elliptic_filter);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    auto m = min_series_degree(basis, s, config);
    memo_.emplace(key, m);
    return m;
}

std::optional<Relation> k3_noncontainment(int g, int r, int d, int s, int e, const FilterConfig& config,
                                          K3MinCache* cache) {
    if (rho(g, r, d) >= 0 || rho(g, s, e) >= 0) return std::nullopt;
    LatticeBasis basis{g, r, d};
    if (delta(basis) >= 0) return std::nullopt;
    auto certifies = [&](const FilterConfig& c) {
        auto m = cache ? cache->get(basis, s, c) : min_series_degree(basis, s, c);
        return !m || *m > e;
    };
    Relation rel{{g, r, d}, {g, s, e}, RelKind::NotContainedIn, "k3"};
    if (certifies(FilterConfig::off())) return rel;
    if (!config.any() || !certifies(config)) return std::nullopt;
    // name the filter that decides it
    if (config.dm_filter && certifies({true, false}))
        rel.provenance = "k3[dm_filter]";
    else if (config.elliptic_filter && certifies({false, true}))
        rel.provenance = "k3[elliptic_filter]";
    else
        rel.provenance = "k3[dm_filter+elliptic_filter]";
    return rel;
}

std::optional<K3Expectation> k3_expected(int g, int r, int d, int s, int e, const FilterConfig& config) {
    if (rho(g, r, d) >= 0 || rho(g, s, e) >= 0) return std::nullopt;
    LatticeBasis basis{g, r, d};
    if (delta(basis) >= 0) return std::nullopt;
    auto en = enumerate_assignments(basis, s, config);
    const Assignment* best = nullptr;
    for (const auto& a : en.kept)
        if (a.c2_bound <= e && (!best || a.c2_bound < best->c2_bound)) best = &a;
    if (!best) return std::nullopt;
    return K3Expectation{{g, r, d}, {g, s, e}, *best};
}

}  // namespace bn
