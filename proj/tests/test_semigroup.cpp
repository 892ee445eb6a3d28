#include "doctest.h"

#include <random>

#include "numsg/error.hpp"
#include "numsg/format.hpp"
#include "numsg/semigroup.hpp"
#include "support.hpp"

using namespace numsg;
using numsg::testing::gen;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected numsg::Error");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("from_generators") {
  const auto n = gen({1});
  CHECK(n.is_naturals());
  CHECK(n.frobenius() == -1);
  CHECK(n.gaps().empty());

  const auto s25 = gen({2, 5});
  CHECK(s25.gaps() == std::vector<int>{1, 3});
  CHECK(s25.frobenius() == 3);

  CHECK(error_of([] { gen({4, 6}); }) == Errc::GcdNotOne);

  // Closure up to 2 * (5 * 9).
  const auto s579 = gen({5, 7, 9});
  CHECK(s579.frobenius() == 13);
  CHECK(s579.gaps() == numsg::testing::closure_gaps({5, 7, 9}, 90));
  CHECK(s579.gaps() == std::vector<int>{1, 2, 3, 4, 6, 8, 11, 13});

  SUBCASE("minimal generators may differ from the input") {
    CHECK(gen({10, 4, 5, 11, 9}).min_generators() == std::vector<int>{4, 5, 11});
    CHECK(gen({3, 5, 7, 6, 9}).min_generators() == std::vector<int>{3, 5, 7});
  }
  SUBCASE("no coprime pair among generators") {
    const auto s = gen({6, 10, 15});
    CHECK(s.gaps() == numsg::testing::closure_gaps({6, 10, 15}, 200));
    CHECK(s.frobenius() == 29);
  }
  SUBCASE("argument errors") {
    CHECK(error_of([] { NumericalSemigroup::from_generators(std::vector<int>{}); }) ==
          Errc::InvalidArgument);
    CHECK(error_of([] { gen({0, 3}); }) == Errc::InvalidArgument);
    CHECK(error_of([] { gen({-2, 3}); }) == Errc::InvalidArgument);
  }
  SUBCASE("size guard") {
    const Limits tight{100};
    CHECK(error_of([&] { NumericalSemigroup::from_generators({97, 101}, tight); }) == Errc::TooLarge);
    CHECK_NOTHROW(NumericalSemigroup::from_generators({97, 101}));
  }
}

TEST_CASE("from_gaps") {
  CHECK(NumericalSemigroup::from_gaps(std::vector<int>{}).is_naturals());
  CHECK(NumericalSemigroup::from_gaps({1, 2, 4, 5}) == gen({3, 7, 8}));
  CHECK(NumericalSemigroup::from_gaps({1, 2, 4, 5}).min_generators() == std::vector<int>{3, 7, 8});
  CHECK(error_of([] { NumericalSemigroup::from_gaps({2}); }) == Errc::NotASemigroup);
  CHECK(error_of([] { NumericalSemigroup::from_gaps({0, 1}); }) == Errc::NotASemigroup);
  CHECK(error_of([] { NumericalSemigroup::from_gaps({1, 5}, Limits{5}); }) == Errc::TooLarge);
  // Duplicates and order do not matter.
  CHECK(NumericalSemigroup::from_gaps({3, 1, 1}) == gen({2, 5}));
}

TEST_CASE("contains") {
  const auto s = gen({2, 5});
  CHECK_FALSE(s.contains(3));
  CHECK(s.contains(0));
  CHECK_FALSE(s.contains(-1));
  CHECK(s.contains(1'000'000'000'000LL));
  CHECK(gen({5, 7, 9}).contains(14));
}

TEST_CASE("invariants") {
  const auto n = NumericalSemigroup::naturals().invariants();
  CHECK(n.frobenius == -1);
  CHECK(n.multiplicity == 1);
  CHECK(n.genus == 0);
  CHECK(n.embedding_dimension == 1);

  const auto a = gen({5, 7, 9}).invariants();
  CHECK(a.frobenius == 13);
  CHECK(a.multiplicity == 5);
  CHECK(a.genus == 8);
  CHECK(a.embedding_dimension == 3);

  const auto s = gen({4, 5, 11});
  CHECK(s.frobenius() == 7);
  CHECK(s.gaps() == std::vector<int>{1, 2, 3, 6, 7});
  CHECK(s.genus() == 5);
}

TEST_CASE("intersect") {
  const auto s = gen({3, 5, 7});
  CHECK(intersect(s, NumericalSemigroup::naturals()) == s);
  CHECK(intersect(gen({2, 3}), gen({2, 5})) == gen({2, 5}));
  // Gap sets {1,3} and {1,2,4} unite to {1,2,3,4}.
  CHECK(intersect(gen({2, 5}), gen({3, 5, 7})) == gen({5, 6, 7, 8, 9}));
}

TEST_CASE("quotient") {
  const auto s = gen({3, 5, 7});
  CHECK(quotient(s, 1) == s);
  CHECK(quotient(gen({2, 5}), 2).is_naturals());
  CHECK(quotient(s, 2) == gen({3, 4, 5}));
  CHECK(error_of([&] { quotient(s, 0); }) == Errc::NonPositiveDivisor);
  CHECK(error_of([&] { quotient(s, -3); }) == Errc::NonPositiveDivisor);
  for (int d = 1; d <= 20; ++d) {
    CHECK(quotient(s, d).is_naturals() == s.contains(d));
  }
}

TEST_CASE("fundamental_gaps") {
  CHECK(fundamental_gaps(gen({5, 7, 9})) == std::vector<int>{6, 8, 11, 13});
  CHECK(fundamental_gaps(NumericalSemigroup::naturals()).empty());
  CHECK(fundamental_gaps(gen({2, 3})) == std::vector<int>{1});
}

TEST_CASE("depth") {
  CHECK(depth(NumericalSemigroup::naturals()) == 0);
  CHECK(depth(gen({2, 7})) == 3);
  CHECK(depth(gen({3, 7, 8})) == 2);
  // ceil((F+1)/m) == floor(F/m) + 1 away from the naturals.
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto s = numsg::testing::random_semigroup(rng);
    if (s.is_naturals()) continue;
    CHECK(depth(s) == s.frobenius() / s.multiplicity() + 1);
  }
}

TEST_CASE("proportionally_modular") {
  CHECK(proportionally_modular(3, 7, 1) == gen({3, 5, 7}));
  CHECK(proportionally_modular(1, 1, 1).is_naturals());
  CHECK(proportionally_modular(4, 9, 4).is_naturals());
  CHECK(proportionally_modular(4, 9, 7).is_naturals());
  CHECK(error_of([] { proportionally_modular(0, 7, 1); }) == Errc::InvalidArgument);
  CHECK(error_of([] { proportionally_modular(1, 2'000'001, 1, Limits{1000}); }) == Errc::TooLarge);

  // Direct evaluation of the inequality well past the conductor.
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(1, 40);
  for (int i = 0; i < 300; ++i) {
    const int a = pick(rng), b = pick(rng), c = pick(rng);
    const auto s = proportionally_modular(a, b, c);
    for (int x = 0; x <= 2 * b + 2; ++x) {
      CHECK(s.contains(x) == ((a * x) % b <= c * x));
    }
  }
}

TEST_CASE("canonical_compare") {
  const auto s = gen({4, 5, 11});
  CHECK(canonical_compare(s, s) == std::strong_ordering::equal);
  CHECK(canonical_compare(NumericalSemigroup::naturals(), gen({2, 3})) == std::strong_ordering::less);
  CHECK(canonical_compare(gen({2, 5}), gen({3, 4, 5})) == std::strong_ordering::less);
  CHECK(canonical_compare(gen({3, 4, 5}), gen({2, 5})) == std::strong_ordering::greater);
}

TEST_CASE("text and JSON forms") {
  CHECK(to_text(gen({4, 5, 11})) == "<4,5,11>");
  CHECK(to_text(NumericalSemigroup::naturals()) == "<1>");
  CHECK(to_json(gen({2, 5})).dump() ==
        R"({"generators":[2,5],"gaps":[1,3],"frobenius":3,"genus":2,"multiplicity":2,"depth":2})");
  CHECK(parse_int_list("4,5, 11") == std::vector<int>{4, 5, 11});
  CHECK(parse_int_list("").empty());
  CHECK(error_of([] { parse_int_list("4,,5"); }) == Errc::InvalidArgument);
  CHECK(error_of([] { parse_int_list("4,x"); }) == Errc::InvalidArgument);
}

TEST_CASE("properties on random semigroups") {
  std::mt19937_64 rng(20240101);
  std::uniform_int_distribution<int> small(1, 10);

  for (int iter = 0; iter < 400; ++iter) {
    const auto s = numsg::testing::random_semigroup(rng);
    const auto t = numsg::testing::random_semigroup(rng);
    CAPTURE(to_text(s));
    CAPTURE(to_text(t));

    // Round trip through the gap set, and through an independent closure.
    CHECK(NumericalSemigroup::from_gaps(s.gaps()) == s);
    CHECK(s.gaps() == numsg::testing::closure_gaps(s.min_generators(), 2 * s.frobenius() + 60));

    // Additive closure of the membership table.
    for (int a = 0; a <= s.conductor(); ++a) {
      for (int b = a; a + b <= s.conductor(); ++b) {
        if (s.contains(a) && s.contains(b)) CHECK(s.contains(a + b));
      }
    }

    const int a = small(rng), b = small(rng);
    CHECK(quotient(quotient(s, a), b) == quotient(s, a * b));
    CHECK(quotient(intersect(s, t), a) == intersect(quotient(s, a), quotient(t, a)));

    const auto q = quotient(s, a);
    CHECK(is_subset(s, q));
    CHECK(q.frobenius() <= s.frobenius());
    CHECK(q.multiplicity() * a >= s.multiplicity());
    CHECK(depth(q) <= depth(s));

    CHECK(intersect(s, t).frobenius() == std::max(s.frobenius(), t.frobenius()));

    // Minimality: dropping any generator changes the semigroup.
    const auto& msg = s.min_generators();
    int gcd_all = 0;
    for (int g : msg) gcd_all = std::gcd(gcd_all, g);
    CHECK(gcd_all == 1);
    if (msg.size() > 1) {
      for (std::size_t i = 0; i < msg.size(); ++i) {
        std::vector<int> rest = msg;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        bool same = false;
        try {
          same = NumericalSemigroup::from_generators(rest) == s;
        } catch (const Error& e) {
          CHECK(e.code() == Errc::GcdNotOne);
        }
        CHECK_FALSE(same);
      }
    }

    for (int x : fundamental_gaps(s)) {
      CHECK_FALSE(s.contains(x));
      for (int k = 2; k <= 12; ++k) CHECK(s.contains(k * x));
    }
    for (int x : s.gaps()) {
      bool all_multiples = true;
      for (int k = 2; k * x <= s.conductor() + x; ++k) all_multiples = all_multiples && s.contains(k * x);
      const auto fg = fundamental_gaps(s);
      CHECK((std::find(fg.begin(), fg.end(), x) != fg.end()) == all_multiples);
    }
  }
}
