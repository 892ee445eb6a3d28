#pragma once

#include <compare>
#include <vector>

#include "numsg/format.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

/// The pair (m, H) naming S(m, H) = 2S + (2S + m) + (2H + m).
///
/// For the naturals the label (m, {}) names <2, m>; this is the same
/// construction with an empty gap set.
struct DoubleLabel {
  int m = 1;
  std::vector<int> upper_set;

  friend auto operator<=>(const DoubleLabel&, const DoubleLabel&) = default;
};

struct Double {
  DoubleLabel label;
  NumericalSemigroup semigroup;
};

/// Checks conditions C1 (h + m in S), C2 (h1 + h2 + m in S) and C3 (every
/// gap x with x - h in S belongs to H) for an odd member m of S.
///
/// The empty set satisfies all three vacuously. Throws IsNaturals for
/// S = N, BadM when m is even or not in S, NotGapSubset when H has a member
/// of S.
bool is_upper_m_set(const NumericalSemigroup& s, int m, const std::vector<int>& h);

/// Every nonempty upper m-set of S, each sorted, in lexicographic order.
/// (The empty set is always one as well and is left out of the listing.)
///
/// Gaps are decided in decreasing order. Including h requires every gap
/// above it in the order "x - h in S" to be included already (C3); C1 and C2
/// are checked against the elements chosen so far. Both conditions survive
/// taking subsets, so pruning on them is exact.
std::vector<std::vector<int>> upper_m_sets(const NumericalSemigroup& s, int m);

/// S(m, H), generated by 2 msg(S), m and 2h + m for h in H.
/// Throws InvalidCertificate unless (S, m, H) is an upper m-set certificate
/// (or S = N, H empty, m odd).
NumericalSemigroup build_double(const NumericalSemigroup& s, int m, const std::vector<int>& h);

/// F(S(m, H)) in closed form:
///   max(2 F(S), m - 2)                      if H = gaps(S)
///   max(2 F(S), 2 max(gaps(S) \ H) + m)     otherwise
/// Throws InvalidCertificate as build_double does.
int frobenius_of_double(const NumericalSemigroup& s, int m, const std::vector<int>& h);

/// {T | T/2 = S, F(T) <= bound}, labelled and sorted canonically by T.
/// For S = N the result is <2, 2n + 1> with 1 <= n and 2n - 1 <= bound.
/// Throws InvalidArgument for bound < 1.
std::vector<Double> doubles_bounded(const NumericalSemigroup& s, int bound);

/// S/2.
NumericalSemigroup halve(const NumericalSemigroup& s);

Json to_json(const Double& d);

/// "S(m; h1,h2,...) = <gens> F=f".
std::string to_text(const Double& d);

}  // namespace numsg
