#include "numsg/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "numsg/error.hpp"

namespace numsg {

NumericalSemigroup::NumericalSemigroup() : member_{1}, msg_{1} {}

NumericalSemigroup::NumericalSemigroup(std::vector<int> gaps) : gaps_(std::move(gaps)) {
  frobenius_ = gaps_.empty() ? -1 : gaps_.back();
  member_.assign(static_cast<std::size_t>(frobenius_ + 2), 1);
  for (int g : gaps_) member_[static_cast<std::size_t>(g)] = 0;

  int m = 1;
  while (!contains(m)) ++m;
  // Any s > F + m has s - m in S, so it cannot be a minimal generator.
  const int limit = std::max(m, frobenius_ + m);
  for (int s = m; s <= limit; ++s) {
    if (!contains(s)) continue;
    bool decomposes = false;
    for (int t = m; 2 * t <= s; ++t) {
      if (contains(t) && contains(s - t)) {
        decomposes = true;
        break;
      }
    }
    if (!decomposes) msg_.push_back(s);
  }
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const int> gens,
                                                       const Limits& limits) {
  if (gens.empty()) throw Error(Errc::InvalidArgument, "empty generator list");
  std::vector<int> g(gens.begin(), gens.end());
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  if (g.front() < 1) {
    throw Error(Errc::InvalidArgument, "generators must be positive, got " + std::to_string(g.front()));
  }
  int d = 0;
  for (int x : g) d = std::gcd(d, x);
  if (d != 1) throw Error(Errc::GcdNotOne, "gcd of generators is " + std::to_string(d));
  if (g.front() == 1) return naturals();

  // Sieve upward until a run of m consecutive members appears; from there on
  // adding m covers everything, so the run start is the conductor.
  const int m = g.front();
  std::vector<std::uint8_t> member{1};
  int run = 0;
  std::int64_t x = 0;
  while (run < m) {
    ++x;
    if (x > limits.max_conductor + m) {
      throw Error(Errc::TooLarge, "conductor exceeds limit " + std::to_string(limits.max_conductor));
    }
    bool in = false;
    for (int a : g) {
      if (a > x) break;
      if (member[static_cast<std::size_t>(x - a)]) {
        in = true;
        break;
      }
    }
    member.push_back(in ? 1 : 0);
    run = in ? run + 1 : 0;
  }
  const auto conductor = static_cast<int>(x) - m + 1;
  std::vector<int> gaps;
  for (int i = 1; i < conductor; ++i) {
    if (!member[static_cast<std::size_t>(i)]) gaps.push_back(i);
  }
  return NumericalSemigroup(std::move(gaps));
}

NumericalSemigroup NumericalSemigroup::from_generators(std::initializer_list<int> gens,
                                                       const Limits& limits) {
  return from_generators(std::span<const int>(gens.begin(), gens.size()), limits);
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::span<const int> gaps, const Limits& limits) {
  std::vector<int> g(gaps.begin(), gaps.end());
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  if (g.empty()) return naturals();
  if (g.front() < 1) throw Error(Errc::NotASemigroup, "gap " + std::to_string(g.front()) + " is not positive");
  if (g.back() >= limits.max_conductor) {
    throw Error(Errc::TooLarge, "conductor exceeds limit " + std::to_string(limits.max_conductor));
  }

  std::vector<std::uint8_t> member(static_cast<std::size_t>(g.back() + 1), 1);
  for (int x : g) member[static_cast<std::size_t>(x)] = 0;
  for (int a = 1; a < g.back(); ++a) {
    if (!member[static_cast<std::size_t>(a)]) continue;
    for (auto it = std::upper_bound(g.begin(), g.end(), a); it != g.end(); ++it) {
      if (member[static_cast<std::size_t>(*it - a)]) {
        throw Error(Errc::NotASemigroup, std::to_string(a) + " + " + std::to_string(*it - a) +
                                             " = " + std::to_string(*it) + " is a gap");
      }
    }
  }
  return NumericalSemigroup(std::move(g));
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::initializer_list<int> gaps, const Limits& limits) {
  return from_gaps(std::span<const int>(gaps.begin(), gaps.size()), limits);
}

std::vector<int> NumericalSemigroup::small_elements(int limit) const {
  std::vector<int> out;
  for (int x = 0; x <= limit; ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

std::strong_ordering operator<=>(const NumericalSemigroup& a, const NumericalSemigroup& b) noexcept {
  return std::lexicographical_compare_three_way(a.msg_.begin(), a.msg_.end(), b.msg_.begin(),
                                                b.msg_.end());
}

std::strong_ordering canonical_compare(const NumericalSemigroup& s, const NumericalSemigroup& t) noexcept {
  return s <=> t;
}

bool is_subset(const NumericalSemigroup& s, const NumericalSemigroup& t) noexcept {
  return std::includes(s.gaps().begin(), s.gaps().end(), t.gaps().begin(), t.gaps().end());
}

NumericalSemigroup intersect(const NumericalSemigroup& s, const NumericalSemigroup& t) {
  std::vector<int> gaps;
  gaps.reserve(s.gaps().size() + t.gaps().size());
  std::set_union(s.gaps().begin(), s.gaps().end(), t.gaps().begin(), t.gaps().end(),
                 std::back_inserter(gaps));
  return NumericalSemigroup(std::move(gaps));
}

NumericalSemigroup quotient(const NumericalSemigroup& s, std::int64_t d) {
  if (d < 1) throw Error(Errc::NonPositiveDivisor, "divisor " + std::to_string(d) + " < 1");
  std::vector<int> gaps;
  for (std::int64_t x = 1; x * d <= s.frobenius(); ++x) {
    if (!s.contains(x * d)) gaps.push_back(static_cast<int>(x));
  }
  return NumericalSemigroup(std::move(gaps));
}

std::vector<int> fundamental_gaps(const NumericalSemigroup& s) {
  std::vector<int> out;
  for (int x : s.gaps()) {
    if (s.contains(2 * static_cast<std::int64_t>(x)) && s.contains(3 * static_cast<std::int64_t>(x))) {
      out.push_back(x);
    }
  }
  return out;
}

int depth(const NumericalSemigroup& s) noexcept {
  const int m = s.multiplicity();
  return (s.frobenius() + 1 + m - 1) / m;
}

NumericalSemigroup proportionally_modular(std::int64_t a, std::int64_t b, std::int64_t c,
                                          const Limits& limits) {
  if (a < 1 || b < 1 || c < 1) {
    throw Error(Errc::InvalidArgument, "proportionally modular parameters must be positive");
  }
  // c x >= b - 1 >= (a x mod b) from x = ceil((b - 1) / c) on.
  const std::int64_t bound = (b - 1 + c - 1) / c;
  if (bound > limits.max_conductor) {
    throw Error(Errc::TooLarge, "conductor bound " + std::to_string(bound) + " exceeds limit");
  }
  __extension__ using wide = __int128;
  const auto ar = static_cast<wide>(a % b);
  std::vector<int> gaps;
  for (std::int64_t x = 1; x < bound; ++x) {
    if ((ar * x) % b > static_cast<wide>(c) * x) gaps.push_back(static_cast<int>(x));
  }
  return NumericalSemigroup(std::move(gaps));
}

}  // namespace numsg
