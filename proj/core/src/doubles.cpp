#include "numsg/doubles.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "numsg/error.hpp"

namespace numsg {

namespace {

std::vector<int> normalized(std::vector<int> h) {
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  return h;
}

void check_m(const NumericalSemigroup& s, int m) {
  if (s.is_naturals()) throw Error(Errc::IsNaturals, "upper m-sets need a proper semigroup");
  if (m % 2 == 0 || !s.contains(m)) {
    throw Error(Errc::BadM, "m = " + std::to_string(m) + " is not an odd member");
  }
}

bool in_s(const NumericalSemigroup& s, std::int64_t a, std::int64_t b) {
  return s.contains(a + b);
}

// Largest gap of s outside h; h is a proper subset of the gaps.
int max_gap_outside(const NumericalSemigroup& s, const std::vector<int>& h) {
  for (auto it = s.gaps().rbegin(); it != s.gaps().rend(); ++it) {
    if (!std::binary_search(h.begin(), h.end(), *it)) return *it;
  }
  return -1;
}

// Throws InvalidCertificate unless (s, m, h) names an element of D2(s).
void require_certificate(const NumericalSemigroup& s, int m, const std::vector<int>& h) {
  if (s.is_naturals()) {
    if (m < 1 || m % 2 == 0 || !h.empty()) {
      throw Error(Errc::InvalidCertificate, "doubles of N are labelled by an odd m and an empty set");
    }
    return;
  }
  bool ok = false;
  try {
    ok = is_upper_m_set(s, m, h);
  } catch (const Error& e) {
    throw Error(Errc::InvalidCertificate, e.what());
  }
  if (!ok) throw Error(Errc::InvalidCertificate, "not an upper " + std::to_string(m) + "-set");
}

}  // namespace

bool is_upper_m_set(const NumericalSemigroup& s, int m, const std::vector<int>& h_in) {
  check_m(s, m);
  const auto h = normalized(h_in);
  for (int x : h) {
    if (s.contains(x)) throw Error(Errc::NotGapSubset, std::to_string(x) + " is not a gap");
  }

  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!in_s(s, h[i], m)) return false;  // C1
    for (std::size_t j = i; j < h.size(); ++j) {
      if (!in_s(s, h[i] + h[j], m)) return false;  // C2
    }
  }
  for (int x : h) {  // C3
    for (int g : s.gaps()) {
      if (g > x && s.contains(g - x) && !std::binary_search(h.begin(), h.end(), g)) return false;
    }
  }
  return true;
}

namespace {

std::vector<std::vector<int>> enumerate_upper_m_sets(const NumericalSemigroup& s, int m,
                                                     bool include_empty) {
  std::vector<int> gaps(s.gaps().rbegin(), s.gaps().rend());
  std::vector<std::uint8_t> chosen(static_cast<std::size_t>(s.frobenius() + 1), 0);
  std::vector<int> current;
  std::vector<std::vector<int>> out;

  std::function<void(std::size_t)> visit = [&](std::size_t i) {
    if (i == gaps.size()) {
      if (include_empty || !current.empty()) out.emplace_back(current.rbegin(), current.rend());
      return;
    }
    visit(i + 1);

    const int h = gaps[i];
    if (!in_s(s, h, m) || !in_s(s, 2 * h, m)) return;
    for (int c : current) {
      if (!in_s(s, h + c, m)) return;
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (s.contains(gaps[j] - h) && !chosen[static_cast<std::size_t>(gaps[j])]) return;
    }
    chosen[static_cast<std::size_t>(h)] = 1;
    current.push_back(h);
    visit(i + 1);
    current.pop_back();
    chosen[static_cast<std::size_t>(h)] = 0;
  };
  visit(0);

  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<int>> upper_m_sets(const NumericalSemigroup& s, int m) {
  check_m(s, m);
  return enumerate_upper_m_sets(s, m, false);
}

NumericalSemigroup build_double(const NumericalSemigroup& s, int m, const std::vector<int>& h_in) {
  const auto h = normalized(h_in);
  require_certificate(s, m, h);
  std::vector<int> gens;
  for (int a : s.min_generators()) gens.push_back(2 * a);
  gens.push_back(m);
  for (int x : h) gens.push_back(2 * x + m);
  return NumericalSemigroup::from_generators(gens);
}

int frobenius_of_double(const NumericalSemigroup& s, int m, const std::vector<int>& h_in) {
  const auto h = normalized(h_in);
  require_certificate(s, m, h);
  const int twice = 2 * s.frobenius();
  if (h == s.gaps()) return std::max(twice, m - 2);
  return std::max(twice, 2 * max_gap_outside(s, h) + m);
}

std::vector<Double> doubles_bounded(const NumericalSemigroup& s, int bound) {
  if (bound < 1) throw Error(Errc::InvalidArgument, "Frobenius bound must be positive");
  std::vector<Double> out;
  auto emit = [&](int m, std::vector<int> h) {
    auto t = build_double(s, m, h);
    out.push_back({{m, std::move(h)}, std::move(t)});
  };

  if (s.is_naturals()) {
    for (int m = 3; m <= bound + 2; m += 2) emit(m, {});
  } else if (2 * s.frobenius() <= bound) {
    const int f = s.frobenius();
    // H = gaps(S) is an upper m-set exactly when m > F(S).
    for (int m = (f + 1) | 1; m <= bound + 2; m += 2) emit(m, s.gaps());
    for (int m = s.multiplicity() | 1; m <= bound - 2; m += 2) {
      if (!s.contains(m)) continue;
      // The empty set counts here: S(m, {}) = <2 msg(S), m>.
      for (auto& h : enumerate_upper_m_sets(s, m, true)) {
        if (h == s.gaps()) continue;
        if (2 * max_gap_outside(s, h) + m <= bound) emit(m, std::move(h));
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const Double& a, const Double& b) {
    return a.semigroup < b.semigroup;
  });
  return out;
}

NumericalSemigroup halve(const NumericalSemigroup& s) { return quotient(s, 2); }

Json to_json(const Double& d) {
  Json j;
  j["m"] = d.label.m;
  j["H"] = d.label.upper_set;
  j["semigroup"] = to_json(d.semigroup);
  return j;
}

std::string to_text(const Double& d) {
  return "S(" + std::to_string(d.label.m) + "; " + join(d.label.upper_set) + ") = " +
         to_text(d.semigroup) + " F=" + std::to_string(d.semigroup.frobenius());
}

}  // namespace numsg
