#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hibilab/gtpatterns.hpp"
#include "hibilab/numbers.hpp"
#include "hibilab/tableaux.hpp"

namespace hibilab {

using Json = nlohmann::json;

Json to_json(const YoungDiagram& d);
Json to_json(const Ssyt& t);
/// {"outer", "inner", "rows"}; rows are full width with null in inner cells.
Json to_json(const SkewTableau& t);
/// {"n", "rows"} with rows listed top (level n) first.
Json to_json(const GtPattern& f);
Json to_json(const std::vector<ColumnTableau>& chain);

// The readers throw ValidationError on malformed JSON and let the value
// constructors raise InvariantViolation.
YoungDiagram diagram_from_json(const Json& j);
Ssyt ssyt_from_json(const Json& j);
GtPattern pattern_from_json(const Json& j);
std::vector<ColumnTableau> chain_from_json(const Json& j);

/// Sorted keys, no whitespace.
std::string canonical(const Json& j);

/// "[1,4]".
ColumnTableau parse_column(std::string_view text);
/// "(2,1)", "2,1", "()" or "".
YoungDiagram parse_diagram(std::string_view text);

struct BracketTerm {
  Rational coefficient;
  std::vector<ColumnTableau> factors;  // repeated per exponent
};

/// Sums of products such as "x[1,4]*x[2,3] - 2*x[1,2]^2*x[3]" where
/// `symbol` is the variable letter.  Throws ValidationError on bad input.
std::vector<BracketTerm> parse_bracket_expression(std::string_view text, char symbol);

}  // namespace hibilab
