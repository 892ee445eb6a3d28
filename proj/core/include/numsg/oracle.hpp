#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "numsg/format.hpp"
#include "numsg/semigroup.hpp"
#include "numsg/varieties.hpp"

namespace numsg::oracle {

/// Exhaustive enumeration runs over 2^bound gap subsets.
inline constexpr int kMaxBound = 20;

struct EnumerationReport {
  int bound = 0;
  std::vector<NumericalSemigroup> semigroups;   // canonical order
  std::map<int, std::size_t> counts_by_frobenius;
};

/// Every numerical semigroup with F(S) <= bound, found by testing each gap
/// subset of {1, ..., bound} for an additively closed complement.
/// Throws InvalidArgument for bound < 1, BoundTooLarge above kMaxBound.
EnumerationReport all_semigroups_up_to(int bound);

/// {T | F(T) <= bound, T/2 = S}, excluding T = N when S = N, by filtering
/// the exhaustive enumeration. Halving is done on gap masks.
std::vector<NumericalSemigroup> doubles_oracle(const NumericalSemigroup& s, int bound);

/// Every T containing S with T equal to the intersection of S/d over all d
/// with d T inside S. Throws BoundTooLarge when g(S) > kMaxBound.
VarietySet extension_oracle(const NumericalSemigroup& s);

/// {"bound": F, "counts": {"F(S)": n, ...}, "semigroups": [[gens], ...]}.
Json to_fixture_json(const EnumerationReport& report);

struct PropertyResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t discrepancies = 0;
  std::string first_discrepancy;
};

struct AgreementReport {
  std::vector<PropertyResult> properties;

  bool ok() const;
};

/// Compares the algorithms against the brute-force routes:
///  - enumerate(F', all) against all_semigroups_up_to(F') for 1 <= F' <= bound;
///  - doubles_bounded against doubles_oracle for F(S) <= bound / 2 and
///    every 1 <= F' <= bound, including label injectivity and the closed-form
///    Frobenius number of each certificate;
///  - arithmetic_extensions and is_arithmetic_extension against
///    extension_oracle for F(S) <= min(bound, 8).
AgreementReport cross_check(int bound);

}  // namespace numsg::oracle
