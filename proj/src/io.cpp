#include "bn/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "bn/errors.hpp"

namespace bn {

using nlohmann::json;

namespace {

void only_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    if (!obj.is_object()) throw ParseError(where + ": expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key())) throw ParseError(where + ": unknown key \"" + it.key() + "\"");
    for (const auto& k : allowed)
        if (!obj.contains(k)) throw ParseError(where + ": missing key \"" + k + "\"");
}

int get_int(const json& obj, const char* key, const std::string& where) {
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) throw ParseError(where + ": \"" + key + "\" must be an integer");
    return v.get<int>();
}

Locus get_locus(const json& obj, int g, const std::string& where) {
    only_keys(obj, {"r", "d"}, where);
    Locus x{g, get_int(obj, "r", where), get_int(obj, "d", where)};
    if (!is_enumerated(x)) throw ParseError(where + ": " + to_string(x) + " is not an enumerated locus");
    return x;
}

json locus_json(const Locus& x) { return json{{"r", x.r}, {"d", x.d}}; }

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

RelKind relkind_from_string(const std::string& s, const std::string& where) {
    if (s == "eq") return RelKind::Equal;
    if (s == "subset") return RelKind::ContainedIn;
    if (s == "not_subset") return RelKind::NotContainedIn;
    throw ParseError(where + ": relation must be eq, subset or not_subset, got \"" + s + "\"");
}

}  // namespace

std::vector<Fact> parse_facts(const json& doc) {
    if (!doc.is_array()) throw ParseError("facts file: expected a JSON array of records");
    std::vector<Fact> out;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        std::string where = "facts record " + std::to_string(i);
        const auto& rec = doc[i];
        only_keys(rec, {"genus", "lhs", "rhs", "relation", "source"}, where);
        int g = get_int(rec, "genus", where);
        if (!rec["relation"].is_string() || !rec["source"].is_string())
            throw ParseError(where + ": relation and source must be strings");
        Fact f;
        f.relation.lhs = get_locus(rec["lhs"], g, where + " lhs");
        f.relation.rhs = get_locus(rec["rhs"], g, where + " rhs");
        f.relation.kind = relkind_from_string(rec["relation"].get<std::string>(), where);
        f.source = rec["source"].get<std::string>();
        if (f.source.empty()) throw ParseError(where + ": empty source citation");
        if (f.relation.lhs == f.relation.rhs) throw ParseError(where + ": lhs equals rhs");
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<Fact> load_facts(const std::string& path) {
    try {
        return parse_facts(read_json(path));
    } catch (const ParseError& e) {
        std::string msg = e.what();
        if (msg.rfind(path, 0) == 0) throw;
        throw ParseError(path + ": " + msg);
    }
}

Fixture parse_fixture(const json& doc) {
    only_keys(doc, {"genus", "figure", "arrows", "corrections", "expected"}, "fixture");
    Fixture fx;
    fx.genus = get_int(doc, "genus", "fixture");
    auto loci = enumerate_loci(fx.genus);
    const std::size_t n = loci.size();
    fx.expected.g = fx.genus;
    fx.expected.loci = loci;
    fx.expected.cells.assign(n * n, Cell::Unknown);
    std::vector<bool> seen(n * n, false);
    const auto& ex = doc["expected"];
    if (!ex.is_array()) throw ParseError("fixture: expected must be an array");
    for (std::size_t k = 0; k < ex.size(); ++k) {
        std::string where = "fixture expected record " + std::to_string(k);
        only_keys(ex[k], {"lhs", "rhs", "relation"}, where);
        Locus a = get_locus(ex[k]["lhs"], fx.genus, where);
        Locus b = get_locus(ex[k]["rhs"], fx.genus, where);
        std::size_t i = fx.expected.index_of(a), j = fx.expected.index_of(b);
        if (i == j) throw ParseError(where + ": lhs equals rhs");
        if (seen[i * n + j]) throw ParseError(where + ": duplicate pair");
        seen[i * n + j] = true;
        try {
            fx.expected.cells[i * n + j] = cell_from_string(ex[k]["relation"].get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        fx.expected.cells[i * n + i] = Cell::Equal;
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && !seen[i * n + j])
                throw ParseError("fixture: missing pair " + to_string(loci[i]) + ", " + to_string(loci[j]));
    }
    return fx;
}

Fixture load_fixture(const std::string& path) {
    try {
        return parse_fixture(read_json(path));
    } catch (const ParseError& e) {
        std::string msg = e.what();
        if (msg.rfind(path, 0) == 0) throw;
        throw ParseError(path + ": " + msg);
    }
}

json poset_json(const RelationMatrix& m) {
    json out;
    out["genus"] = m.genus();
    json loci = json::array();
    for (const auto& x : m.loci())
        loci.push_back({{"r", x.r}, {"d", x.d}, {"rho", rho(x.g, x.r, x.d)}, {"clifford_index", clifford_index(x)}});
    out["loci"] = loci;
    json classes = json::array();
    for (const auto& c : m.classes()) {
        json members = json::array();
        for (const auto& x : c) members.push_back(locus_json(x));
        classes.push_back(members);
    }
    out["classes"] = classes;
    json cells = json::array();
    std::size_t unknown = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (i == j) continue;
            Cell c = m.cell(i, j);
            if (c == Cell::Unknown) ++unknown;
            cells.push_back({{"lhs", locus_json(m.loci()[i])},
                             {"rhs", locus_json(m.loci()[j])},
                             {"relation", to_string(c)},
                             {"why", m.explain(i, j)}});
        }
    out["cells"] = cells;
    out["unknown_cells"] = unknown;
    json cov = json::array();
    for (const auto& rel : covers(m)) cov.push_back({{"lhs", locus_json(rel.lhs)}, {"rhs", locus_json(rel.rhs)}});
    out["covers"] = cov;
    return out;
}

namespace {

std::string node_id(const Locus& x) { return "n" + std::to_string(x.r) + "_" + std::to_string(x.d); }

std::string node_label(const Locus& x) {
    return "M^" + std::to_string(x.r) + "_{" + std::to_string(x.g) + "," + std::to_string(x.d) + "}";
}

}  // namespace

std::string poset_dot(const RelationMatrix& m) {
    auto classes = m.classes();
    std::ostringstream os;
    os << "digraph BN_genus_" << m.genus() << " {\n";
    os << "  graph [rankdir=BT, splines=true, newrank=true];\n";
    os << "  node [shape=box, fontname=\"Helvetica\"];\n";
    std::map<int, std::vector<Locus>> rows;  // Clifford index of the representative
    for (const auto& c : classes) {
        const Locus& rep = c.front();
        std::string label;
        for (std::size_t i = 0; i < c.size(); ++i) label += (i ? " = " : "") + node_label(c[i]);
        os << "  " << node_id(rep) << " [label=\"" << label << "\", pos=\"" << rep.r << ","
           << clifford_index(rep) << "!\"];\n";
        rows[clifford_index(rep)].push_back(rep);
    }
    for (const auto& [ci, members] : rows) {
        os << "  { rank=same;";
        for (const auto& x : members) os << " " << node_id(x) << ";";
        os << " }\n";
    }
    // keep the rows stacked and the columns ordered by r
    const std::vector<Locus>* prev = nullptr;
    for (const auto& [ci, members] : rows) {
        if (prev) os << "  " << node_id(prev->front()) << " -> " << node_id(members.front()) << " [style=invis];\n";
        for (std::size_t i = 1; i < members.size(); ++i)
            os << "  " << node_id(members[i - 1]) << " -> " << node_id(members[i])
               << " [style=invis, constraint=false];\n";
        prev = &members;
    }
    for (const auto& rel : covers(m))
        os << "  " << node_id(rel.lhs) << " -> " << node_id(rel.rhs) << " [style=solid];\n";
    os << "}\n";
    return os.str();
}

json assignment_json(const Assignment& a) {
    json chern_ab = json::array(), quot_xy = json::array();
    for (std::size_t i = 0; i + 1 < a.chern.size(); ++i) {
        chern_ab.push_back(format_ab(a.chern[i]));
        quot_xy.push_back(format_xy(LatticeClass::H() - a.chern[i]));
    }
    return json{{"type", to_string(a.type)},
                {"c1_sub_aH+bL", chern_ab},
                {"c1_quotient_xH-yL", quot_xy},
                {"c2_bound", to_string(a.c2_bound)},
                {"dm_filter_match", a.dm_match},
                {"elliptic_filter_match", a.elliptic_match}};
}

json enumeration_json(const LatticeBasis& basis, int s, const FilterConfig& config, const Enumeration& en) {
    json out;
    out["lattice"] = {{"g", basis.g}, {"r", basis.r}, {"d", basis.d}, {"delta", delta(basis)}};
    out["series"] = s;
    out["filters"] = {{"dm_filter", config.dm_filter}, {"elliptic_filter", config.elliptic_filter}};
    json kept = json::array(), removed = json::array();
    std::optional<Rational> best;
    for (const auto& a : en.kept) {
        kept.push_back(assignment_json(a));
        if (!best || a.c2_bound < *best) best = a.c2_bound;
    }
    for (const auto& a : en.removed) removed.push_back(assignment_json(a));
    out["assignments"] = kept;
    out["removed"] = removed;
    out["min_bound"] = best ? json(to_string(*best)) : json(nullptr);
    return out;
}

}  // namespace bn
