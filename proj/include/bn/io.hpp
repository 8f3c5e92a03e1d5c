#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "bn/k3filtration.hpp"
#include "bn/poset.hpp"

namespace bn {

// facts file: a JSON array of {genus, lhs:{r,d}, rhs:{r,d}, relation, source}
std::vector<Fact> parse_facts(const nlohmann::json& doc);
std::vector<Fact> load_facts(const std::string& path);

struct Fixture {
    int genus = 0;
    CellTable expected;
};
Fixture parse_fixture(const nlohmann::json& doc);
Fixture load_fixture(const std::string& path);

nlohmann::json poset_json(const RelationMatrix& m);
std::string poset_dot(const RelationMatrix& m);

nlohmann::json assignment_json(const Assignment& a);
nlohmann::json enumeration_json(const LatticeBasis& basis, int s, const FilterConfig& config,
                                const Enumeration& en);

}  // namespace bn
