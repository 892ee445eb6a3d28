#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "numsg/semigroup.hpp"

namespace numsg {

/// Membership test for an arithmetic variety. It must accept the naturals
/// and be closed under quotients; enumerate() checks both on what it visits.
struct VarietyPredicate {
  std::string name;
  std::function<bool(const NumericalSemigroup&)> accepts;
};

/// Every numerical semigroup.
VarietyPredicate all_semigroups();

/// depth(S) <= q. Throws InvalidArgument for q < 0.
VarietyPredicate depth_predicate(int q);

/// Children of s in the halving tree under a Frobenius bound: the accepted
/// doubles T of s with F(T) <= bound, minus s itself and the naturals.
std::vector<NumericalSemigroup> children(const NumericalSemigroup& s, int bound,
                                         const VarietyPredicate& predicate);

/// Rooted tree on {S | F(S) <= bound, accepts(S)}, edges S/2 -> S.
/// Nodes are in canonical order, so the root <1> is index 0.
class VarietyTree {
 public:
  VarietyTree(std::vector<NumericalSemigroup> nodes,
              std::vector<std::pair<std::size_t, std::size_t>> edges);

  const std::vector<NumericalSemigroup>& nodes() const noexcept { return nodes_; }
  /// (parent index, child index), sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  const NumericalSemigroup& root() const noexcept { return nodes_.front(); }
  std::optional<std::size_t> index_of(const NumericalSemigroup& s) const;

 private:
  std::vector<NumericalSemigroup> nodes_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Breadth-first expansion from the naturals, one level of children at a
/// time, until a level adds nothing. Throws InvalidArgument for bound < 1
/// and PredicateNotClosed when the predicate rejects the naturals or a
/// quotient of an accepted node.
VarietyTree enumerate(int bound, const VarietyPredicate& predicate);

enum class TreeFormat { dot, json };

/// "dot" or "json"; throws UnknownFormat otherwise.
TreeFormat parse_tree_format(std::string_view name);

/// Graphviz digraph or {"nodes": [...], "edges": [[p, c], ...]}.
std::string export_tree(const VarietyTree& tree, TreeFormat format);

}  // namespace numsg
