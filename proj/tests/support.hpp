// Test-only reference routines. Nothing here calls into the library's
// algorithms beyond constructing values to compare against.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "numsg/semigroup.hpp"

namespace numsg::testing {

// Gaps of <gens> found by closing {0} under adding generators up to `limit`.
// Correct whenever `limit` exceeds the Frobenius number plus the largest
// generator.
inline std::vector<int> closure_gaps(const std::vector<int>& gens, int limit) {
  std::vector<char> member(static_cast<std::size_t>(limit) + 1, 0);
  member[0] = 1;
  for (int x = 0; x <= limit; ++x) {
    if (!member[static_cast<std::size_t>(x)]) continue;
    for (int g : gens) {
      if (x + g <= limit) member[static_cast<std::size_t>(x + g)] = 1;
    }
  }
  int last_gap = 0;
  for (int x = 1; x <= limit; ++x) {
    if (!member[static_cast<std::size_t>(x)]) last_gap = x;
  }
  std::vector<int> gaps;
  for (int x = 1; x <= last_gap; ++x) {
    if (!member[static_cast<std::size_t>(x)]) gaps.push_back(x);
  }
  return gaps;
}

inline std::vector<int> brute_gaps(const NumericalSemigroup& s, int limit) {
  std::vector<int> out;
  for (int x = 1; x <= limit; ++x) {
    if (!s.contains(x)) out.push_back(x);
  }
  return out;
}

// Random <gens> with generators in [2, max_gen] and gcd 1.
inline NumericalSemigroup random_semigroup(std::mt19937_64& rng, int max_gen = 20) {
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<int> value(2, max_gen);
  while (true) {
    std::vector<int> gens(static_cast<std::size_t>(count(rng)));
    for (auto& g : gens) g = value(rng);
    int d = 0;
    for (int g : gens) d = std::gcd(d, g);
    if (d == 1) return NumericalSemigroup::from_generators(gens);
    if (rng() % 8 == 0) return NumericalSemigroup::naturals();
  }
}

// Nonempty upper m-sets by filtering the power set of the gaps against the
// three defining conditions, written out literally.
inline std::vector<std::vector<int>> upper_m_sets_by_powerset(const NumericalSemigroup& s, int m) {
  const auto& gaps = s.gaps();
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1U << gaps.size()); ++mask) {
    std::vector<int> h;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      if ((mask >> i) & 1U) h.push_back(gaps[i]);
    }
    bool ok = true;
    for (int a : h) ok = ok && s.contains(a + m);
    for (int a : h) {
      for (int b : h) ok = ok && s.contains(a + b + m);
    }
    for (int a : h) {
      for (int x : gaps) {
        if (s.contains(x - a) && std::find(h.begin(), h.end(), x) == h.end()) ok = false;
      }
    }
    if (ok) out.push_back(h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<int>> sorted_sets(std::vector<std::vector<int>> sets) {
  for (auto& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end());
  return sets;
}

inline NumericalSemigroup gen(std::initializer_list<int> g) {
  return NumericalSemigroup::from_generators(g);
}

}  // namespace numsg::testing
