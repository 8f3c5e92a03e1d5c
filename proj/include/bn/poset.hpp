#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bn/k3filtration.hpp"
#include "bn/locus.hpp"

namespace bn {

struct Fact {
    Relation relation;  // provenance is derived from source
    std::string source;
};

enum class Cell { Equal, ContainedIn, NotContainedIn, Unknown };

std::string to_string(Cell c);  // "eq", "subset", "not_subset", "unknown"
Cell cell_from_string(const std::string& s);

// one cell per ordered pair of distinct loci, row-major over loci
struct CellTable {
    int g = 0;
    std::vector<Locus> loci;
    std::vector<Cell> cells;

    Cell at(std::size_t i, std::size_t j) const { return cells[i * loci.size() + j]; }
    std::size_t index_of(const Locus& x) const;  // throws DomainError if absent
    std::size_t unknown_count() const;
};

struct PosetConfig {
    bool use_k3 = true;
    FilterConfig k3_filters = FilterConfig::off();
};

class RelationMatrix {
public:
    RelationMatrix(int g, std::vector<Locus> loci);

    int genus() const { return g_; }
    const std::vector<Locus>& loci() const { return loci_; }
    std::size_t size() const { return loci_.size(); }
    std::size_t index_of(const Locus& x) const;

    // seeds one relation; throws DomainError for loci outside the matrix
    void add(const Relation& rel);
    // least fixed point; throws ContradictionError naming both chains
    void close();
    bool closed() const { return closed_; }

    bool contained(std::size_t i, std::size_t j) const { return sub_[i][j]; }
    bool not_contained(std::size_t i, std::size_t j) const { return nsub_[i][j]; }
    Cell cell(std::size_t i, std::size_t j) const;
    // derivation of the cell, expanded down to rule or fact provenances
    std::string explain(std::size_t i, std::size_t j) const;

    // equivalence classes under mutual containment; members sorted, first is the representative
    std::vector<std::vector<Locus>> classes() const;
    CellTable table() const;

    bool operator==(const RelationMatrix& o) const {
        return g_ == o.g_ && loci_ == o.loci_ && sub_ == o.sub_ && nsub_ == o.nsub_;
    }

private:
    enum class Src { None, Seed, Trans, UpLeft, DownRight };
    struct Why {
        Src src = Src::None;
        int via = -1;
        std::vector<std::string> seeds;
    };

    void set_sub(std::size_t i, std::size_t j, Src src, int via);
    void set_nsub(std::size_t i, std::size_t j, Src src, int via);
    std::string chain(std::size_t i, std::size_t j, bool sub, int depth) const;

    int g_;
    std::vector<Locus> loci_;
    std::map<Locus, std::size_t> index_;
    std::vector<std::vector<bool>> sub_;
    std::vector<std::vector<bool>> nsub_;
    std::vector<std::vector<Why>> why_sub_;
    std::vector<std::vector<Why>> why_nsub_;
    bool closed_ = false;
};

// every rule output for genus g, before closure
std::vector<Relation> rule_relations(int g, const PosetConfig& config);

RelationMatrix assemble(int g, const std::vector<Fact>& facts, const PosetConfig& config = {});
RelationMatrix closure(const RelationMatrix& m);

// non-trivial covers between class representatives, sorted by (r,d) of source then target
std::vector<Relation> covers(const RelationMatrix& m);

struct CellDiff {
    Locus lhs;
    Locus rhs;
    Cell expected;
    Cell got;
};
std::vector<CellDiff> compare(const CellTable& got, const CellTable& expected);

}  // namespace bn
