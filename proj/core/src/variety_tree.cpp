#include "numsg/variety_tree.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "numsg/doubles.hpp"
#include "numsg/error.hpp"
#include "numsg/format.hpp"

namespace numsg {

VarietyPredicate all_semigroups() {
  return {"all", [](const NumericalSemigroup&) { return true; }};
}

VarietyPredicate depth_predicate(int q) {
  if (q < 0) throw Error(Errc::InvalidArgument, "depth bound must be nonnegative");
  return {"depth<=" + std::to_string(q),
          [q](const NumericalSemigroup& s) { return depth(s) <= q; }};
}

std::vector<NumericalSemigroup> children(const NumericalSemigroup& s, int bound,
                                         const VarietyPredicate& predicate) {
  std::vector<NumericalSemigroup> out;
  for (auto& d : doubles_bounded(s, bound)) {
    if (d.semigroup == s || d.semigroup.is_naturals()) continue;
    if (predicate.accepts(d.semigroup)) out.push_back(std::move(d.semigroup));
  }
  return out;
}

VarietyTree::VarietyTree(std::vector<NumericalSemigroup> nodes,
                         std::vector<std::pair<std::size_t, std::size_t>> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {}

std::optional<std::size_t> VarietyTree::index_of(const NumericalSemigroup& s) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), s);
  if (it == nodes_.end() || !(*it == s)) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

namespace {

void require_quotient_closed(const NumericalSemigroup& t, const VarietyPredicate& predicate) {
  // Quotients by members of t are the naturals, already checked.
  for (int d : t.gaps()) {
    if (!predicate.accepts(quotient(t, d))) {
      throw Error(Errc::PredicateNotClosed, predicate.name + " accepts " + to_text(t) +
                                                " but rejects its quotient by " + std::to_string(d));
    }
  }
}

}  // namespace

VarietyTree enumerate(int bound, const VarietyPredicate& predicate) {
  if (bound < 1) throw Error(Errc::InvalidArgument, "Frobenius bound must be positive");
  const auto root = NumericalSemigroup::naturals();
  if (!predicate.accepts(root)) {
    throw Error(Errc::PredicateNotClosed, predicate.name + " rejects the naturals");
  }

  std::set<NumericalSemigroup> seen{root};
  std::vector<std::pair<NumericalSemigroup, NumericalSemigroup>> links;
  std::vector<NumericalSemigroup> level{root};
  while (!level.empty()) {
    std::vector<NumericalSemigroup> next;
    for (const auto& s : level) {
      for (auto& t : children(s, bound, predicate)) {
        if (!seen.insert(t).second) continue;
        require_quotient_closed(t, predicate);
        links.emplace_back(s, t);
        next.push_back(std::move(t));
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }

  VarietyTree tree({seen.begin(), seen.end()}, {});
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(links.size());
  for (const auto& [parent, child] : links) {
    edges.emplace_back(*tree.index_of(parent), *tree.index_of(child));
  }
  std::sort(edges.begin(), edges.end());
  return VarietyTree(std::vector<NumericalSemigroup>(tree.nodes()), std::move(edges));
}

TreeFormat parse_tree_format(std::string_view name) {
  if (name == "dot") return TreeFormat::dot;
  if (name == "json") return TreeFormat::json;
  throw Error(Errc::UnknownFormat, "unknown tree format '" + std::string(name) + "'");
}

std::string export_tree(const VarietyTree& tree, TreeFormat format) {
  if (format == TreeFormat::json) {
    Json nodes = Json::array();
    for (const auto& s : tree.nodes()) nodes.push_back(to_json(s));
    Json edges = Json::array();
    for (const auto& [p, c] : tree.edges()) edges.push_back({p, c});
    Json j;
    j["nodes"] = std::move(nodes);
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "digraph numsg {\n";
  for (const auto& s : tree.nodes()) out << "  \"" << to_text(s) << "\";\n";
  for (const auto& [p, c] : tree.edges()) {
    out << "  \"" << to_text(tree.nodes()[p]) << "\" -> \"" << to_text(tree.nodes()[c]) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace numsg
