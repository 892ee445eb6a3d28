#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "numsg/semigroup.hpp"

namespace numsg {

using Json = nlohmann::ordered_json;

/// "<4,5,11>"; the naturals print as "<1>".
std::string to_text(const NumericalSemigroup& s);

/// "3,6,7"; empty for an empty list.
std::string join(const std::vector<int>& values, std::string_view sep = ",");

/// {"generators", "gaps", "frobenius", "genus", "multiplicity", "depth"}.
Json to_json(const NumericalSemigroup& s);

/// Parses "4,5,11" (whitespace around items tolerated). An empty string is
/// an empty list. Throws InvalidArgument on anything else.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace numsg
