#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypermat/characters.hpp"
#include "hypermat/localcoh.hpp"
#include "hypermat/multiplicities.hpp"
#include "hypermat/orbits.hpp"
#include "hypermat/quiver.hpp"
#include "hypermat/report.hpp"
#include "hypermat/symchar.hpp"
#include "hypermat/weights.hpp"

namespace hypermat {

using json = nlohmann::json;

/// Malformed input text: bad JSON, wrong shape, unknown names.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Weights as [a,b] and [[a,b],[c,d],[e,f]]; partitions as integer arrays.
void to_json(json& j, const Weight2& w);
void from_json(const json& j, Weight2& w);
void to_json(json& j, const TripleWeight& w);
void from_json(const json& j, TripleWeight& w);
void to_json(json& j, const Partition& p);

/// Parses '[[2,2],[2,2],[2,2]]'. Throws ParseError.
TripleWeight parse_triple_weight(std::string_view text);

/// Compact text of a weight, used as an object key.
std::string weight_key(const TripleWeight& w);

/// Entries as "p/q" strings (integers written without a denominator).
json tensor_to_json(const Tensor222& t);
/// Accepts [[[x111,x112],[x121,x122]],[[x211,x212],[x221,x222]]] with each
/// entry an integer or a "p/q" string. Throws ParseError.
Tensor222 tensor_from_json(const json& j);
Tensor222 read_tensor_file(const std::string& path);

/// {"[[a,b],[c,d],[e,f]]": coefficient, ...}
json glclass_to_json(const GLClass& cls);

/// {"[i1,...,it]": ["E", "E", ...]}; a module with multiplicity n is listed n times.
json iterated_lc_to_json(const IteratedLC& result);

json oracle_report_to_json(const OracleReport& r);

/// {"passed": bool, "checks": [{"name", "passed", "detail"}]}
json report_to_json(const Report& r);

/// {"dim": n, "max_length": k, "paths": [...]} with paths in composition order.
json path_space_to_json(const Quiver& q, const PathSpace& ps);

/// Comma-separated orbit names, e.g. "O1,O0". Throws ParseError.
std::vector<OrbitId> parse_orbit_list(std::string_view text);

}  // namespace hypermat
