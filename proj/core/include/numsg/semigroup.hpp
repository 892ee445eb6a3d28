#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace numsg {

/// Upper bound on the dense membership table built during construction.
struct Limits {
  std::int64_t max_conductor = 1'000'000;
};

struct Invariants {
  int frobenius;
  int multiplicity;
  int genus;
  int embedding_dimension;
};

/// A co-finite additive submonoid of the nonnegative integers.
///
/// Stored as its sorted gap set plus a dense membership table over
/// {0, ..., frobenius + 1}; every integer above the Frobenius number is a
/// member. The minimal generating system is computed once at construction.
/// Values are immutable.
///
/// Ordering is canonical: lexicographic on the minimal generators, so the
/// naturals <1> sort first. Two values compare equal iff their gap sets
/// agree.
class NumericalSemigroup {
 public:
  /// The naturals, whose gap set is empty.
  NumericalSemigroup();

  static NumericalSemigroup naturals() { return {}; }

  /// <gens>. Throws GcdNotOne, InvalidArgument (empty or non-positive
  /// generators) or TooLarge.
  static NumericalSemigroup from_generators(std::span<const int> gens,
                                            const Limits& limits = {});
  static NumericalSemigroup from_generators(std::initializer_list<int> gens,
                                            const Limits& limits = {});

  /// The semigroup with exactly this gap set. Throws NotASemigroup when the
  /// complement is not additively closed (or contains a non-positive gap).
  static NumericalSemigroup from_gaps(std::span<const int> gaps,
                                      const Limits& limits = {});
  static NumericalSemigroup from_gaps(std::initializer_list<int> gaps,
                                      const Limits& limits = {});

  bool contains(std::int64_t x) const noexcept {
    if (x < 0) return false;
    if (x > frobenius_) return true;
    return member_[static_cast<std::size_t>(x)] != 0;
  }

  bool is_naturals() const noexcept { return gaps_.empty(); }

  int frobenius() const noexcept { return frobenius_; }
  int conductor() const noexcept { return frobenius_ + 1; }
  int multiplicity() const noexcept { return msg_.front(); }
  int genus() const noexcept { return static_cast<int>(gaps_.size()); }
  int embedding_dimension() const noexcept { return static_cast<int>(msg_.size()); }
  Invariants invariants() const noexcept {
    return {frobenius(), multiplicity(), genus(), embedding_dimension()};
  }

  const std::vector<int>& gaps() const noexcept { return gaps_; }
  const std::vector<int>& min_generators() const noexcept { return msg_; }

  /// Members in {0, ..., limit}, ascending.
  std::vector<int> small_elements(int limit) const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) noexcept {
    return a.gaps_ == b.gaps_;
  }
  friend std::strong_ordering operator<=>(const NumericalSemigroup& a,
                                          const NumericalSemigroup& b) noexcept;

  friend NumericalSemigroup intersect(const NumericalSemigroup&, const NumericalSemigroup&);
  friend NumericalSemigroup quotient(const NumericalSemigroup&, std::int64_t);
  friend NumericalSemigroup proportionally_modular(std::int64_t, std::int64_t, std::int64_t,
                                                   const Limits&);

 private:
  // gaps must be sorted, positive and have an additively closed complement.
  explicit NumericalSemigroup(std::vector<int> gaps);

  std::vector<int> gaps_;
  std::vector<std::uint8_t> member_;
  std::vector<int> msg_;
  int frobenius_ = -1;
};

std::strong_ordering canonical_compare(const NumericalSemigroup& s, const NumericalSemigroup& t) noexcept;

/// s is a subset of t.
bool is_subset(const NumericalSemigroup& s, const NumericalSemigroup& t) noexcept;

NumericalSemigroup intersect(const NumericalSemigroup& s, const NumericalSemigroup& t);

/// {x | d x in s}. Equals the naturals exactly when d is a member.
/// Throws NonPositiveDivisor for d < 1.
NumericalSemigroup quotient(const NumericalSemigroup& s, std::int64_t d);

/// Gaps x with every multiple k x (k >= 2) in s. Checking k = 2 and k = 3
/// suffices: any k >= 4 is a sum of 2s and 3s.
std::vector<int> fundamental_gaps(const NumericalSemigroup& s);

/// ceil((F + 1) / m); zero for the naturals.
int depth(const NumericalSemigroup& s) noexcept;

/// {x | (a x mod b) <= c x}. Throws InvalidArgument unless a, b, c >= 1.
NumericalSemigroup proportionally_modular(std::int64_t a, std::int64_t b, std::int64_t c,
                                          const Limits& limits = {});

}  // namespace numsg
