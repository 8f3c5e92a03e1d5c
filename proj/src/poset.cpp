#include "bn/poset.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <tuple>

#include "bn/classical.hpp"
#include "bn/errors.hpp"

namespace bn {

std::string to_string(Cell c) {
    switch (c) {
        case Cell::Equal: return "eq";
        case Cell::ContainedIn: return "subset";
        case Cell::NotContainedIn: return "not_subset";
        case Cell::Unknown: return "unknown";
    }
    return "unknown";
}

Cell cell_from_string(const std::string& s) {
    if (s == "eq") return Cell::Equal;
    if (s == "subset") return Cell::ContainedIn;
    if (s == "not_subset") return Cell::NotContainedIn;
    if (s == "unknown") return Cell::Unknown;
    throw ParseError("unknown relation \"" + s + "\"");
}

std::size_t CellTable::index_of(const Locus& x) const {
    auto it = std::find(loci.begin(), loci.end(), x);
    if (it == loci.end()) throw DomainError("locus " + to_string(x) + " not in table");
    return static_cast<std::size_t>(it - loci.begin());
}

std::size_t CellTable::unknown_count() const {
    std::size_t n = loci.size(), c = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && at(i, j) == Cell::Unknown) ++c;
    return c;
}

RelationMatrix::RelationMatrix(int g, std::vector<Locus> loci) : g_(g), loci_(std::move(loci)) {
    for (std::size_t i = 0; i < loci_.size(); ++i) {
        if (loci_[i].g != g) throw DomainError("locus " + to_string(loci_[i]) + " has the wrong genus");
        if (!index_.emplace(loci_[i], i).second) throw DomainError("duplicate locus " + to_string(loci_[i]));
    }
    std::size_t n = loci_.size();
    sub_.assign(n, std::vector<bool>(n, false));
    nsub_.assign(n, std::vector<bool>(n, false));
    why_sub_.assign(n, std::vector<Why>(n));
    why_nsub_.assign(n, std::vector<Why>(n));
}

std::size_t RelationMatrix::index_of(const Locus& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) throw DomainError("locus " + to_string(x) + " is not in the genus-" + std::to_string(g_) + " matrix");
    return it->second;
}

void RelationMatrix::add(const Relation& rel) {
    if (rel.lhs.g != g_ || rel.rhs.g != g_)
        throw DomainError("relation " + to_string(rel.lhs) + " " + to_string(rel.kind) + " " + to_string(rel.rhs) +
                          " is not at genus " + std::to_string(g_));
    std::size_t i = index_of(rel.lhs), j = index_of(rel.rhs);
    auto seed = [&](std::vector<std::vector<bool>>& bits, std::vector<std::vector<Why>>& why, std::size_t a,
                    std::size_t b) {
        bits[a][b] = true;
        auto& w = why[a][b];
        if (w.src != Src::Seed) w = Why{Src::Seed, -1, {}};
        if (std::find(w.seeds.begin(), w.seeds.end(), rel.provenance) == w.seeds.end())
            w.seeds.push_back(rel.provenance);
    };
    switch (rel.kind) {
        case RelKind::Equal:
            seed(sub_, why_sub_, i, j);
            seed(sub_, why_sub_, j, i);
            break;
        case RelKind::ContainedIn: seed(sub_, why_sub_, i, j); break;
        case RelKind::NotContainedIn: seed(nsub_, why_nsub_, i, j); break;
    }
    closed_ = false;
}

void RelationMatrix::set_sub(std::size_t i, std::size_t j, Src src, int via) {
    sub_[i][j] = true;
    why_sub_[i][j] = Why{src, via, {}};
}

void RelationMatrix::set_nsub(std::size_t i, std::size_t j, Src src, int via) {
    nsub_[i][j] = true;
    why_nsub_[i][j] = Why{src, via, {}};
}

void RelationMatrix::close() {
    const std::size_t n = loci_.size();
    for (std::size_t i = 0; i < n; ++i) sub_[i][i] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (!sub_[i][k] || i == k) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (sub_[k][j] && !sub_[i][j]) set_sub(i, j, Src::Trans, static_cast<int>(k));
        }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t c = 0; c < n; ++c) {
                if (!nsub_[a][c]) continue;
                for (std::size_t b = 0; b < n; ++b) {
                    // A <= B and A !<= C give B !<= C
                    if (sub_[a][b] && !nsub_[b][c]) {
                        set_nsub(b, c, Src::UpLeft, static_cast<int>(a));
                        changed = true;
                    }
                    // B <= C and A !<= C give A !<= B
                    if (sub_[b][c] && !nsub_[a][b]) {
                        set_nsub(a, b, Src::DownRight, static_cast<int>(c));
                        changed = true;
                    }
                }
            }
    }
    // report a clash between two seeded cells first, since it names the rules directly
    std::optional<std::pair<std::size_t, std::size_t>> clash, seeded;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!(sub_[i][j] && nsub_[i][j])) continue;
            if (!clash) clash = std::make_pair(i, j);
            if (!seeded && why_sub_[i][j].src == Src::Seed && why_nsub_[i][j].src == Src::Seed)
                seeded = std::make_pair(i, j);
        }
    if (seeded) clash = seeded;
    if (clash) {
        auto [i, j] = *clash;
        throw ContradictionError("contradiction at " + to_string(loci_[i]) + " vs " + to_string(loci_[j]) +
                                 ":\n  containment: " + chain(i, j, true, 0) +
                                 "\n  non-containment: " + chain(i, j, false, 0));
    }
    closed_ = true;
}

Cell RelationMatrix::cell(std::size_t i, std::size_t j) const {
    if (i == j) return Cell::Equal;
    if (sub_[i][j] && sub_[j][i]) return Cell::Equal;
    if (sub_[i][j]) return Cell::ContainedIn;
    if (nsub_[i][j]) return Cell::NotContainedIn;
    return Cell::Unknown;
}

std::string RelationMatrix::chain(std::size_t i, std::size_t j, bool sub, int depth) const {
    const Why& w = sub ? why_sub_[i][j] : why_nsub_[i][j];
    std::string head = to_string(loci_[i]) + (sub ? " <= " : " !<= ") + to_string(loci_[j]);
    if (i == j && sub) return head + " {reflexive}";
    if (depth > 8) return head + " {...}";
    auto k = static_cast<std::size_t>(w.via);
    switch (w.src) {
        case Src::Seed: {
            std::string s;
            for (std::size_t t = 0; t < w.seeds.size(); ++t) s += (t ? "; " : "") + w.seeds[t];
            return head + " {" + s + "}";
        }
        case Src::Trans:
            return head + " {" + chain(i, k, true, depth + 1) + ", " + chain(k, j, true, depth + 1) + "}";
        case Src::UpLeft:
            return head + " {" + chain(k, i, true, depth + 1) + ", " + chain(k, j, false, depth + 1) + "}";
        case Src::DownRight:
            return head + " {" + chain(j, k, true, depth + 1) + ", " + chain(i, k, false, depth + 1) + "}";
        case Src::None: break;
    }
    return head + " {unknown}";
}

std::string RelationMatrix::explain(std::size_t i, std::size_t j) const {
    switch (cell(i, j)) {
        case Cell::Equal:
            return i == j ? to_string(loci_[i]) + " = itself"
                          : chain(i, j, true, 0) + " and " + chain(j, i, true, 0);
        case Cell::ContainedIn: return chain(i, j, true, 0);
        case Cell::NotContainedIn: return chain(i, j, false, 0);
        case Cell::Unknown: break;
    }
    return to_string(loci_[i]) + " ? " + to_string(loci_[j]) + " {unknown}";
}

std::vector<std::vector<Locus>> RelationMatrix::classes() const {
    const std::size_t n = loci_.size();
    std::vector<int> cls(n, -1);
    std::vector<std::vector<Locus>> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = static_cast<int>(out.size());
        out.push_back({loci_[i]});
        for (std::size_t j = i + 1; j < n; ++j)
            if (cls[j] < 0 && sub_[i][j] && sub_[j][i]) {
                cls[j] = cls[i];
                out.back().push_back(loci_[j]);
            }
    }
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

CellTable RelationMatrix::table() const {
    CellTable t;
    t.g = g_;
    t.loci = loci_;
    const std::size_t n = loci_.size();
    t.cells.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.cells[i * n + j] = cell(i, j);
    return t;
}

std::vector<Relation> rule_relations(int g, const PosetConfig& config) {
    auto loci = enumerate_loci(g);
    auto present = [&](const Locus& x) { return std::binary_search(loci.begin(), loci.end(), x); };
    std::vector<Relation> out = trivial_relations(g);
    auto cl = clifford_collapse(g);
    out.insert(out.end(), cl.begin(), cl.end());

    for (const auto& k : loci) {
        if (k.r != 1) continue;
        for (const auto& x : loci) {
            if (x == k) continue;
            bool in = rho_k(g, k.d, x.r, x.d) >= 0;
            out.push_back({k, x, in ? RelKind::ContainedIn : RelKind::NotContainedIn, "rho_k"});
        }
    }
    for (const auto& a : loci)
        for (const auto& b : loci)
            if (a != b && kappa(g, a.r, a.d) > kappa(g, b.r, b.d))
                out.push_back({a, b, RelKind::NotContainedIn, "kappa"});

    auto keep = [&](const std::optional<Relation>& rel) {
        if (rel && present(rel->lhs) && present(rel->rhs)) out.push_back(*rel);
    };
    for (const auto& x : loci) {
        if (x.r != 2) continue;
        keep(plane_projection_rule(g, x.d));
        keep(coppens_noncontainment(g, x.d));
    }
    for (const auto& a : loci)
        for (const auto& b : loci) keep(secant_containment(g, a.r, a.d, b.r, b.d));

    if (config.use_k3) {
        K3MinCache cache;
        for (const auto& a : loci) {
            if (delta(a.g, a.r, a.d) >= 0) continue;
            for (const auto& b : loci)
                if (a != b) keep(k3_noncontainment(g, a.r, a.d, b.r, b.d, config.k3_filters, &cache));
        }
    }
    return out;
}

RelationMatrix assemble(int g, const std::vector<Fact>& facts, const PosetConfig& config) {
    if (g < 3) throw DomainError("assemble needs g >= 3");
    RelationMatrix m(g, enumerate_loci(g));
    for (const auto& rel : rule_relations(g, config)) m.add(rel);
    for (const auto& f : facts) {
        if (f.relation.lhs.g != g || f.relation.rhs.g != g)
            throw DomainError("fact " + to_string(f.relation.lhs) + " vs " + to_string(f.relation.rhs) +
                              " is not at genus " + std::to_string(g));
        if (f.source.empty()) throw DomainError("fact without a citation");
        Relation r = f.relation;
        r.provenance = "fact: " + f.source;
        m.add(r);
    }
    m.close();
    return m;
}

RelationMatrix closure(const RelationMatrix& m) {
    RelationMatrix out = m;
    out.close();
    return out;
}

std::vector<Relation> covers(const RelationMatrix& m) {
    if (!m.closed()) throw DomainError("covers needs a closed matrix");
    const auto& loci = m.loci();
    const std::size_t n = loci.size();

    // closure of the trivial containments alone
    std::vector<std::vector<bool>> triv(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) triv[i][i] = true;
    for (const auto& rel : trivial_relations(m.genus())) {
        auto a = std::find(loci.begin(), loci.end(), rel.lhs);
        auto b = std::find(loci.begin(), loci.end(), rel.rhs);
        if (a != loci.end() && b != loci.end()) triv[a - loci.begin()][b - loci.begin()] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (triv[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (triv[k][j]) triv[i][j] = true;

    auto classes = m.classes();
    std::vector<std::vector<std::size_t>> idx;
    for (const auto& c : classes) {
        idx.emplace_back();
        for (const auto& x : c) idx.back().push_back(m.index_of(x));
    }
    const std::size_t c = classes.size();
    auto below = [&](std::size_t a, std::size_t b) {  // strict, between classes
        std::size_t i = idx[a][0], j = idx[b][0];
        return a != b && m.contained(i, j) && !m.contained(j, i);
    };
    std::vector<Relation> out;
    for (std::size_t a = 0; a < c; ++a)
        for (std::size_t b = 0; b < c; ++b) {
            if (!below(a, b)) continue;
            bool cover = true;
            for (std::size_t z = 0; z < c && cover; ++z)
                if (below(a, z) && below(z, b)) cover = false;
            if (!cover) continue;
            // drawn unless every member pair is already a trivial containment
            bool trivial = true;
            for (auto i : idx[a])
                for (auto j : idx[b])
                    if (!triv[i][j]) trivial = false;
            if (trivial) continue;
            out.push_back({classes[a][0], classes[b][0], RelKind::ContainedIn, m.explain(idx[a][0], idx[b][0])});
        }
    std::sort(out.begin(), out.end(), [](const Relation& x, const Relation& y) {
        return std::tie(x.lhs, x.rhs) < std::tie(y.lhs, y.rhs);
    });
    return out;
}

std::vector<CellDiff> compare(const CellTable& got, const CellTable& expected) {
    if (got.g != expected.g) throw DomainError("compare: genus mismatch");
    auto a = got.loci, b = expected.loci;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw DomainError("compare: the two tables have different loci");
    std::vector<CellDiff> out;
    const std::size_t n = expected.loci.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            Cell e = expected.at(i, j);
            Cell g = got.at(got.index_of(expected.loci[i]), got.index_of(expected.loci[j]));
            if (e != g) out.push_back({expected.loci[i], expected.loci[j], e, g});
        }
    return out;
}

}  // namespace bn
