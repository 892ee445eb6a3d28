#include "numsg/format.hpp"

#include <charconv>

#include "numsg/error.hpp"

namespace numsg {

std::string join(const std::vector<int>& values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string to_text(const NumericalSemigroup& s) {
  return "<" + join(s.min_generators()) + ">";
}

Json to_json(const NumericalSemigroup& s) {
  Json j;
  j["generators"] = s.min_generators();
  j["gaps"] = s.gaps();
  j["frobenius"] = s.frobenius();
  j["genus"] = s.genus();
  j["multiplicity"] = s.multiplicity();
  j["depth"] = depth(s);
  return j;
}

namespace {

std::string_view trim(std::string_view v) {
  while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
  while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
  return v;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (trim(text).empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    int value = 0;
    const auto* first = item.data();
    const auto* last = item.data() + item.size();
    if (!item.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (item.empty() || ec != std::errc{} || ptr != last) {
      throw Error(Errc::InvalidArgument, "not an integer: '" + std::string(item) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace numsg
