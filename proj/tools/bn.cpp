#include <chrono>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "bn/classical.hpp"
#include "bn/errors.hpp"
#include "bn/io.hpp"
#include "bn/k3filtration.hpp"
#include "bn/lattice.hpp"
#include "bn/locus.hpp"
#include "bn/poset.hpp"

#ifndef BN_DATA_DIR
#define BN_DATA_DIR "data"
#endif

namespace {

using namespace bn;

enum Exit { kOk = 0, kDomain = 1, kContradiction = 2, kIo = 3 };

FilterConfig parse_filters(const std::string& s) {
    if (s == "on") return FilterConfig::on();
    if (s == "off") return FilterConfig::off();
    if (s == "dm") return {true, false};
    if (s == "elliptic") return {false, true};
    throw DomainError("--filters must be on, off, dm or elliptic");
}

std::string onoff(bool b) { return b ? "on" : "off"; }

std::string lattice_name(const LatticeBasis& b) {
    return "Lambda^" + std::to_string(b.r) + "_{" + std::to_string(b.g) + "," + std::to_string(b.d) + "}";
}

int cmd_invariants(int g, int r, int d) {
    Locus x{g, r, d};
    if (g < 2 || r < 1 || d < 1) throw DomainError("need g >= 2, r >= 1, d >= 1");
    if (d > g - 1) {
        Locus y = normalize(x);
        std::cerr << "note: " << to_string(x) << " normalized by Serre duality to " << to_string(y) << "\n";
        x = y;
    }
    i64 p = rho(x.g, x.r, x.d);
    if (p >= 0)
        throw DomainError("rho(" + std::to_string(x.g) + "," + std::to_string(x.r) + "," + std::to_string(x.d) +
                          ") = " + std::to_string(p) + " >= 0: every curve carries such a series");
    if (!is_enumerated(x)) throw DomainError(to_string(x) + " violates d >= 2r (Clifford)");
    std::cout << "locus         M^" << x.r << "_{" << x.g << "," << x.d << "}\n";
    std::cout << "rho           " << p << "\n";
    std::cout << "clifford      " << clifford_index(x) << "\n";
    try {
        std::cout << "serre dual    " << to_string(serre_dual(x)) << "\n";
    } catch (const DomainError&) {
        std::cout << "serre dual    none\n";
    }
    i64 k = kappa(x.g, x.r, x.d), kb = kappa_bruteforce(x.g, x.r, x.d);
    std::cout << "kappa         " << k << " (scan " << kb << (k == kb ? ", agrees" : ", DISAGREES") << ")\n";
    auto gb = gonality_bounds(x.g, x.r, x.d);
    std::cout << "gonality      >= " << gb.lower << ", expected " << gb.expected << "\n";
    std::cout << "delta         " << delta(x.g, x.r, x.d) << "\n";
    return k == kb ? kOk : kDomain;
}

int cmd_lattice(int g, int r, int d, i64 square, i64 box) {
    LatticeBasis b{g, r, d};
    std::cout << lattice_name(b) << "  delta = " << delta(b) << "  box " << box << "x" << box << "\n";
    for (const auto& c : find_classes_with_square(b, square, box, box))
        std::cout << "(" << c.a << "," << c.b << ")  " << format_ab(c) << "  " << format_xy(c) << "\n";
    return kOk;
}

int cmd_k3(int g, int r, int d, int s, const std::string& filters, bool as_json) {
    LatticeBasis b{g, r, d};
    if (delta(b) >= 0) {
        std::cerr << "inapplicable: delta(" << g << "," << r << "," << d << ") = " << delta(b)
                  << " >= 0, no K3 surface with this Picard lattice\n";
        return kDomain;
    }
    if (s < 1) throw DomainError("--series must be >= 1");
    FilterConfig cfg = parse_filters(filters);
    Enumeration en = enumerate_assignments(b, s, cfg);
    if (as_json) {
        std::cout << enumeration_json(b, s, cfg, en).dump(2) << "\n";
        return kOk;
    }
    std::cout << lattice_name(b) << "  H^2 = " << 2 * g - 2 << ", H.L = " << d << ", L^2 = " << 2 * r - 2
              << ", delta = " << delta(b) << "\n";
    std::cout << "series s = " << s << ", filters dm " << onoff(cfg.dm_filter) << ", elliptic "
              << onoff(cfg.elliptic_filter) << "\n";
    std::cout << std::left << std::setw(12) << "type" << std::setw(24) << "c1(E_i) as aH+bL" << std::setw(24)
              << "c1(E/E_i) as xH-yL" << std::setw(12) << "c2 bound"
              << "flags\n";
    auto row = [&](const Assignment& a, bool removed) {
        std::string ab, xy;
        for (std::size_t i = 0; i + 1 < a.chern.size(); ++i) {
            if (i) ab += ", ", xy += ", ";
            ab += format_ab(a.chern[i]);
            xy += format_xy(LatticeClass::H() - a.chern[i]);
        }
        std::string flags;
        if (a.dm_match) flags += "dm ";
        if (a.elliptic_match) flags += "elliptic ";
        if (removed) flags += "(removed)";
        std::cout << std::setw(12) << to_string(a.type) << std::setw(24) << ab << std::setw(24) << xy
                  << std::setw(12) << to_string(a.c2_bound) << flags << "\n";
    };
    std::optional<Rational> best;
    for (const auto& a : en.kept) {
        row(a, false);
        if (!best || a.c2_bound < *best) best = a.c2_bound;
    }
    for (const auto& a : en.removed) row(a, true);
    std::cout << "min bound: " << (best ? to_string(*best) : std::string("none")) << "\n";
    return kOk;
}

std::vector<Fact> facts_for(const std::string& path) {
    if (path.empty()) return {};
    return load_facts(path);
}

int cmd_poset(int g, const std::string& facts_path, const std::string& format, const std::string& filters) {
    if (format != "dot" && format != "json") throw DomainError("--format must be dot or json");
    PosetConfig cfg;
    cfg.k3_filters = parse_filters(filters);
    RelationMatrix m = assemble(g, facts_for(facts_path), cfg);
    if (format == "dot")
        std::cout << poset_dot(m);
    else
        std::cout << poset_json(m).dump(2) << "\n";
    return kOk;
}

std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            int g = std::stoi(s);
            return {g, g};
        }
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw DomainError("range must look like 9 or 7..12");
    }
}

int cmd_verify(const std::string& range, const std::string& data, const std::string& filters) {
    auto [lo, hi] = parse_range(range);
    if (lo > hi) throw DomainError("empty range " + range);
    PosetConfig cfg;
    cfg.k3_filters = parse_filters(filters);
    namespace fs = std::filesystem;
    bool all = true;
    auto t0 = std::chrono::steady_clock::now();
    for (int g = lo; g <= hi; ++g) {
        fs::path facts = fs::path(data) / ("genus" + std::to_string(g) + ".json");
        fs::path fixture = fs::path(data) / "fixtures" / ("genus" + std::to_string(g) + ".json");
        Fixture fx = load_fixture(fixture.string());
        if (fx.genus != g) throw ParseError(fixture.string() + ": genus field is " + std::to_string(fx.genus));
        RelationMatrix m = assemble(g, fs::exists(facts) ? load_facts(facts.string()) : std::vector<Fact>{}, cfg);
        CellTable got = m.table();
        auto diffs = compare(got, fx.expected);
        std::size_t unknown = got.unknown_count();
        bool ok = diffs.empty() && unknown == 0;
        all = all && ok;
        std::cout << "genus " << g << ": " << (ok ? "pass" : "FAIL") << " (" << m.size() << " loci, "
                  << diffs.size() << " diffs, " << unknown << " unknown)\n";
        for (const auto& df : diffs)
            std::cout << "  " << to_string(df.lhs) << " vs " << to_string(df.rhs) << ": expected "
                      << to_string(df.expected) << ", got " << to_string(df.got) << "\n";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (all ? "all pass" : "FAILED") << " in " << std::fixed << std::setprecision(2) << secs << " s\n";
    return all ? kOk : kDomain;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Brill-Noether loci: invariants, K3 lattice bounds, containment posets"};
    app.require_subcommand(1);

    int g = 0, r = 0, d = 0, s = 1;
    i64 square = -2, box = 10;
    std::string filters, facts, format = "dot", range, data = BN_DATA_DIR;
    bool as_json = false;

    auto* inv = app.add_subcommand("invariants", "rho, Clifford index, Serre dual, kappa, gonality bounds, delta");
    inv->add_option("g", g)->required();
    inv->add_option("r", r)->required();
    inv->add_option("d", d)->required();

    auto* lat = app.add_subcommand("lattice", "classes of a given square in Lambda^r_{g,d}");
    lat->add_option("g", g)->required();
    lat->add_option("r", r)->required();
    lat->add_option("d", d)->required();
    lat->add_option("--square", square, "self-intersection")->capture_default_str();
    lat->add_option("--box", box, "search |a|,|b| <= box")->capture_default_str();

    auto* k3 = app.add_subcommand("k3", "admissible assignments for a g^s_e on a curve in |H|");
    k3->add_option("g", g)->required();
    k3->add_option("r", r)->required();
    k3->add_option("d", d)->required();
    k3->add_option("--series", s, "s of the g^s_e")->capture_default_str();
    k3->add_option("--filters", filters, "on|off|dm|elliptic (default off)");
    k3->add_flag("--json", as_json);

    auto* pos = app.add_subcommand("poset", "relation matrix and cover diagram");
    pos->add_option("g", g)->required();
    pos->add_option("--facts", facts, "facts JSON file");
    pos->add_option("--format", format, "dot|json")->capture_default_str();
    pos->add_option("--filters", filters, "K3 filters on|off|dm|elliptic (default on)");

    auto* ver = app.add_subcommand("verify", "compare computed posets against the shipped fixtures");
    ver->add_option("range", range, "genus or lo..hi")->required();
    ver->add_option("--data", data, "directory with genusG.json and fixtures/")->capture_default_str();
    ver->add_option("--filters", filters, "K3 filters on|off|dm|elliptic (default on)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kDomain;
    }

    try {
        if (*inv) return cmd_invariants(g, r, d);
        if (*lat) return cmd_lattice(g, r, d, square, box);
        if (*k3) return cmd_k3(g, r, d, s, filters.empty() ? "off" : filters, as_json);
        if (*pos) return cmd_poset(g, facts, format, filters.empty() ? "on" : filters);
        if (*ver) return cmd_verify(range, data, filters.empty() ? "on" : filters);
    } catch (const ContradictionError& e) {
        std::cerr << "contradiction: " << e.what() << "\n";
        return kContradiction;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kIo;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kDomain;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kIo;
    }
    return kOk;
}
