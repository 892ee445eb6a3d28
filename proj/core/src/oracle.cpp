#include "numsg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

#include "numsg/doubles.hpp"
#include "numsg/error.hpp"
#include "numsg/variety_tree.hpp"

namespace numsg::oracle {

namespace {

using Mask = std::uint64_t;

void check_bound(int bound) {
  if (bound < 1) throw Error(Errc::InvalidArgument, "bound must be positive");
  if (bound > kMaxBound) {
    throw Error(Errc::BoundTooLarge, "bound " + std::to_string(bound) + " exceeds " +
                                         std::to_string(kMaxBound));
  }
}

// Bit x set <=> x is a gap. Members are the zero bits up to `top` and
// everything above it.
bool complement_closed(Mask gaps, int top) {
  const Mask window = (Mask{2} << top) - 1;
  const Mask members = ~gaps & window;
  for (int a = 1; a <= top; ++a) {
    if (((members >> a) & 1U) && ((members << a) & gaps)) return false;
  }
  return true;
}

// Calls fn(gap_mask) for every semigroup with F <= bound, the naturals first.
template <typename Fn>
void for_each_semigroup(int bound, Fn&& fn) {
  fn(Mask{0});
  for (int f = 1; f <= bound; ++f) {
    const Mask top = Mask{1} << f;
    for (Mask below = 0; below < (Mask{1} << f); below += 2) {  // bit 0 is never a gap
      const Mask gaps = top | below;
      if (complement_closed(gaps, f)) fn(gaps);
    }
  }
}

std::vector<int> mask_to_list(Mask m) {
  std::vector<int> out;
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

Mask list_to_mask(const std::vector<int>& xs) {
  Mask m = 0;
  for (int x : xs) m |= Mask{1} << x;
  return m;
}

int frobenius_of_mask(Mask gaps) { return gaps == 0 ? -1 : 63 - std::countl_zero(gaps); }

Mask halve_mask(Mask gaps) {
  Mask out = 0;
  for (int x = 1; 2 * x < 64; ++x) {
    if ((gaps >> (2 * x)) & 1U) out |= Mask{1} << x;
  }
  return out;
}

NumericalSemigroup from_mask(Mask gaps) {
  const auto list = mask_to_list(gaps);
  return NumericalSemigroup::from_gaps(list);
}

}  // namespace

EnumerationReport all_semigroups_up_to(int bound) {
  check_bound(bound);
  EnumerationReport report;
  report.bound = bound;
  for_each_semigroup(bound, [&](Mask gaps) {
    report.semigroups.push_back(from_mask(gaps));
    ++report.counts_by_frobenius[frobenius_of_mask(gaps)];
  });
  std::sort(report.semigroups.begin(), report.semigroups.end());
  return report;
}

std::vector<NumericalSemigroup> doubles_oracle(const NumericalSemigroup& s, int bound) {
  check_bound(bound);
  std::vector<NumericalSemigroup> out;
  // F(T/2) <= F(T), so nothing can halve onto a semigroup past the bound.
  if (s.frobenius() > bound) return out;
  const Mask target = list_to_mask(s.gaps());
  for_each_semigroup(bound, [&](Mask gaps) {
    if (s.is_naturals() && gaps == 0) return;
    if (halve_mask(gaps) == target) out.push_back(from_mask(gaps));
  });
  std::sort(out.begin(), out.end());
  return out;
}

VarietySet extension_oracle(const NumericalSemigroup& s) {
  if (s.genus() > kMaxBound) {
    throw Error(Errc::BoundTooLarge, "genus " + std::to_string(s.genus()) + " exceeds " +
                                         std::to_string(kMaxBound));
  }
  const int f = s.frobenius();
  const Mask s_gaps = list_to_mask(s.gaps());
  const auto& gap_list = s.gaps();

  auto quotient_mask = [&](int d) {
    Mask q = 0;
    for (int x = 1; x * d <= f; ++x) {
      if ((s_gaps >> (x * d)) & 1U) q |= Mask{1} << x;
    }
    return q;
  };

  std::vector<NumericalSemigroup> found;
  const Mask subsets = Mask{1} << gap_list.size();
  for (Mask pick = 0; pick < subsets; ++pick) {
    Mask t_gaps = 0;
    for (std::size_t i = 0; i < gap_list.size(); ++i) {
      if ((pick >> i) & 1U) t_gaps |= Mask{1} << gap_list[i];
    }
    if (!complement_closed(t_gaps, std::max(f, 0))) continue;

    Mask meet = 0;
    for (int d = 1; d <= f; ++d) {
      bool scales_into_s = true;
      for (int t = 1; t * d <= f && scales_into_s; ++t) {
        const bool t_member = ((t_gaps >> t) & 1U) == 0;
        if (t_member && ((s_gaps >> (t * d)) & 1U)) scales_into_s = false;
      }
      if (scales_into_s) meet |= quotient_mask(d);
    }
    if (meet == t_gaps) found.push_back(from_mask(t_gaps));
  }
  return VarietySet(std::move(found));
}

Json to_fixture_json(const EnumerationReport& report) {
  Json counts = Json::object();
  for (const auto& [f, n] : report.counts_by_frobenius) counts[std::to_string(f)] = n;
  Json semigroups = Json::array();
  for (const auto& s : report.semigroups) semigroups.push_back(s.min_generators());
  Json j;
  j["bound"] = report.bound;
  j["counts"] = std::move(counts);
  j["semigroups"] = std::move(semigroups);
  return j;
}

bool AgreementReport::ok() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.discrepancies == 0; });
}

namespace {

void record(PropertyResult& p, bool agree, const std::string& what) {
  ++p.checked;
  if (agree) return;
  if (p.discrepancies++ == 0) p.first_discrepancy = what;
}

}  // namespace

AgreementReport cross_check(int bound) {
  check_bound(bound);
  const auto universe = all_semigroups_up_to(bound);

  PropertyResult tree;
  tree.name = "tree nodes == gap-subset enumeration";
  for (int b = 1; b <= bound; ++b) {
    const auto brute = all_semigroups_up_to(b);
    const auto walked = enumerate(b, all_semigroups());
    record(tree, walked.nodes() == brute.semigroups, "F <= " + std::to_string(b));
  }

  PropertyResult doubles;
  doubles.name = "bounded doubles == oracle doubles";
  PropertyResult labels;
  labels.name = "double labels are injective";
  PropertyResult frob;
  frob.name = "closed-form Frobenius of doubles";
  for (const auto& s : universe.semigroups) {
    if (2 * s.frobenius() > bound) continue;
    for (int b = 1; b <= bound; ++b) {
      const auto fast = doubles_bounded(s, b);
      std::vector<NumericalSemigroup> got;
      std::set<DoubleLabel> seen_labels;
      for (const auto& d : fast) {
        got.push_back(d.semigroup);
        seen_labels.insert(d.label);
        const int predicted = frobenius_of_double(s, d.label.m, d.label.upper_set);
        record(frob, predicted == d.semigroup.frobenius(), to_text(d));
      }
      const auto tag = to_text(s) + " F <= " + std::to_string(b);
      record(doubles, got == doubles_oracle(s, b), tag);
      const bool distinct = std::adjacent_find(got.begin(), got.end()) == got.end();
      record(labels, distinct && seen_labels.size() == fast.size(), tag);
    }
  }

  const int ext_bound = std::min(bound, 8);
  PropertyResult ext;
  ext.name = "arithmetic extensions == extension oracle";
  PropertyResult member;
  member.name = "is_arithmetic_extension == oracle membership";
  for (const auto& s : universe.semigroups) {
    if (s.frobenius() > ext_bound) continue;
    const auto expected = extension_oracle(s);
    record(ext, arithmetic_extensions(s) == expected, to_text(s));
    for (const auto& t : universe.semigroups) {
      if (t.frobenius() > ext_bound) continue;
      record(member, is_arithmetic_extension(s, t) == expected.contains(t),
             to_text(s) + " / " + to_text(t));
    }
  }

  return {{tree, doubles, labels, frob, ext, member}};
}

}  // namespace numsg::oracle
