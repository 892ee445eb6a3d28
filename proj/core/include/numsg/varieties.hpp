#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "numsg/format.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

/// A finite family of numerical semigroups, duplicate-free and sorted
/// canonically. The naturals are always a member.
class VarietySet {
 public:
  VarietySet();
  explicit VarietySet(std::vector<NumericalSemigroup> members);

  std::span<const NumericalSemigroup> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(const NumericalSemigroup& s) const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const VarietySet&, const VarietySet&) = default;

 private:
  std::vector<NumericalSemigroup> members_;
};

/// All arithmetic extensions of s: the quotients s/d over the gaps d of s
/// together with the naturals, closed under intersection.
VarietySet arithmetic_extensions(const NumericalSemigroup& s);

/// Whether t is an intersection of finitely many quotients of s.
///
/// t qualifies iff t equals the intersection of s/d over every d with
/// d t contained in s. Divisors d > F(s) are members of s and contribute
/// the naturals, so the scan stops at F(s).
bool is_arithmetic_extension(const NumericalSemigroup& s, const NumericalSemigroup& t);

/// The smallest arithmetic variety containing every member of family:
/// intersections of one extension of each member. Throws InvalidArgument on
/// an empty family.
VarietySet smallest_variety(std::span<const NumericalSemigroup> family);

struct ExtremalElements {
  NumericalSemigroup max;         // inclusion-maximal member
  NumericalSemigroup min;         // inclusion-minimal member
  NumericalSemigroup max_proper;  // maximal member other than the naturals
  NumericalSemigroup min_proper;  // minimal member other than s
};

/// Inclusion extremes of arithmetic_extensions(s), read off the set itself.
/// Throws IsNaturals for s = N.
ExtremalElements extremal_elements(const NumericalSemigroup& s);

struct MonoidHull {
  /// Elements up to `bound`, ascending.
  std::vector<int> elements;
  /// Largest conductor among the members of the variety.
  int bound = 0;
  /// Always true for a finite variety: the hull is a numerical semigroup.
  bool cofinite = true;
  NumericalSemigroup semigroup;
};

/// Intersection of every member of v containing x. Throws InvalidArgument
/// for negative entries in x.
MonoidHull monoid_hull(const VarietySet& v, std::span<const int> x);

Json to_json(const VarietySet& v);

}  // namespace numsg
