#include "numsg/varieties.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "numsg/error.hpp"

namespace numsg {

VarietySet::VarietySet() : members_{NumericalSemigroup::naturals()} {}

VarietySet::VarietySet(std::vector<NumericalSemigroup> members) : members_(std::move(members)) {
  members_.push_back(NumericalSemigroup::naturals());
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VarietySet::contains(const NumericalSemigroup& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

namespace {

// Inserts every seed and closes the result under pairwise intersection.
std::set<NumericalSemigroup> intersection_closure(std::vector<NumericalSemigroup> seeds) {
  std::set<NumericalSemigroup> found;
  std::vector<NumericalSemigroup> work;
  for (auto& s : seeds) {
    if (found.insert(s).second) work.push_back(std::move(s));
  }
  while (!work.empty()) {
    const NumericalSemigroup x = std::move(work.back());
    work.pop_back();
    std::vector<NumericalSemigroup> fresh;
    for (const auto& y : found) {
      auto z = intersect(x, y);
      if (!found.contains(z)) fresh.push_back(std::move(z));
    }
    for (auto& z : fresh) {
      if (found.insert(z).second) work.push_back(std::move(z));
    }
  }
  return found;
}

}  // namespace

VarietySet arithmetic_extensions(const NumericalSemigroup& s) {
  std::vector<NumericalSemigroup> seeds{NumericalSemigroup::naturals()};
  for (int d : s.gaps()) seeds.push_back(quotient(s, d));
  auto closed = intersection_closure(std::move(seeds));
  return VarietySet({closed.begin(), closed.end()});
}

bool is_arithmetic_extension(const NumericalSemigroup& s, const NumericalSemigroup& t) {
  if (t.is_naturals()) return true;
  NumericalSemigroup meet;
  for (int d = 1; d <= s.frobenius(); ++d) {
    const bool scales_into_s = std::all_of(
        t.min_generators().begin(), t.min_generators().end(),
        [&](int g) { return s.contains(static_cast<std::int64_t>(d) * g); });
    if (scales_into_s) meet = intersect(meet, quotient(s, d));
  }
  return meet == t;
}

VarietySet smallest_variety(std::span<const NumericalSemigroup> family) {
  if (family.empty()) throw Error(Errc::InvalidArgument, "empty family");
  // Intersecting one extension per member is a left fold over the family;
  // deduplicating after each step keeps the product from materializing.
  std::set<NumericalSemigroup> acc{NumericalSemigroup::naturals()};
  for (const auto& member : family) {
    const auto ext = arithmetic_extensions(member);
    std::set<NumericalSemigroup> next;
    for (const auto& a : acc) {
      for (const auto& e : ext) next.insert(intersect(a, e));
    }
    acc = std::move(next);
  }
  return VarietySet({acc.begin(), acc.end()});
}

namespace {

std::vector<NumericalSemigroup> inclusion_extremes(const std::vector<NumericalSemigroup>& items,
                                                   bool maximal) {
  std::vector<NumericalSemigroup> out;
  for (const auto& x : items) {
    const bool dominated = std::any_of(items.begin(), items.end(), [&](const auto& y) {
      return !(x == y) && (maximal ? is_subset(x, y) : is_subset(y, x));
    });
    if (!dominated) out.push_back(x);
  }
  return out;
}

NumericalSemigroup unique_extreme(const std::vector<NumericalSemigroup>& items, bool maximal) {
  auto ext = inclusion_extremes(items, maximal);
  if (ext.size() != 1) {
    throw std::logic_error("extension set has no unique inclusion-" +
                           std::string(maximal ? "maximal" : "minimal") + " element");
  }
  return ext.front();
}

}  // namespace

ExtremalElements extremal_elements(const NumericalSemigroup& s) {
  if (s.is_naturals()) throw Error(Errc::IsNaturals, "extremal elements need a proper semigroup");
  const auto v = arithmetic_extensions(s);
  const std::vector<NumericalSemigroup> all(v.begin(), v.end());
  std::vector<NumericalSemigroup> without_n;
  std::vector<NumericalSemigroup> without_s;
  for (const auto& t : all) {
    if (!t.is_naturals()) without_n.push_back(t);
    if (!(t == s)) without_s.push_back(t);
  }
  return {unique_extreme(all, true), unique_extreme(all, false), unique_extreme(without_n, true),
          unique_extreme(without_s, false)};
}

MonoidHull monoid_hull(const VarietySet& v, std::span<const int> x) {
  for (int e : x) {
    if (e < 0) throw Error(Errc::InvalidArgument, "hull generators must be nonnegative");
  }
  MonoidHull hull;
  for (const auto& t : v) {
    hull.bound = std::max(hull.bound, t.conductor());
    if (std::all_of(x.begin(), x.end(), [&](int e) { return t.contains(e); })) {
      hull.semigroup = intersect(hull.semigroup, t);
    }
  }
  hull.elements = hull.semigroup.small_elements(hull.bound);
  return hull;
}

Json to_json(const VarietySet& v) {
  Json members = Json::array();
  for (const auto& s : v) members.push_back(to_json(s));
  Json j;
  j["members"] = std::move(members);
  return j;
}

}  // namespace numsg
