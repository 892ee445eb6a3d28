#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "numsg/doubles.hpp"
#include "numsg/error.hpp"
#include "numsg/format.hpp"
#include "numsg/oracle.hpp"
#include "numsg/semigroup.hpp"
#include "numsg/varieties.hpp"
#include "numsg/variety_tree.hpp"

namespace numsg::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_list(const std::string& text, const std::string& what) {
  try {
    return parse_int_list(text);
  } catch (const Error& e) {
    throw UsageError(what + ": " + e.what());
  }
}

NumericalSemigroup semigroup_arg(const std::string& text) {
  auto gens = parse_list(text, "generators '" + text + "'");
  if (gens.empty()) throw UsageError("generators: empty list");
  return NumericalSemigroup::from_generators(gens);
}

std::vector<NumericalSemigroup> semigroup_args(const std::vector<std::string>& texts) {
  std::vector<NumericalSemigroup> out;
  for (const auto& t : texts) out.push_back(semigroup_arg(t));
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string lines(const VarietySet& v) {
  std::string out;
  for (const auto& s : v) out += to_text(s) + "\n";
  return out;
}

std::string braces(const std::vector<int>& xs) { return "{" + join(xs) + "}"; }

struct Options {
  std::string format = "text";
  std::string output;
  std::string semigroup;
  std::vector<std::string> semigroups;
  std::string elements;
  std::string upper_set;
  std::int64_t divisor = 0;
  std::vector<std::int64_t> pm_params;
  int bound = 0;
  int depth = -1;
  int modulus = 0;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical semigroups, quotients and arithmetic varieties", "numsg"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--output", opt.output, "Write the result to PATH instead of stdout");

  // Each verb registers its handler; the handler returns the result text.
  std::map<CLI::App*, std::function<std::string()>> handlers;
  bool json = false;
  auto verb = [&](const std::string& name, const std::string& help,
                  std::function<std::string()> handler) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    handlers[sub] = std::move(handler);
    return sub;
  };
  auto add_bound = [&](CLI::App* sub) {
    sub->add_option("--frobenius-bound", opt.bound, "Frobenius bound F")
        ->required()
        ->check(CLI::PositiveNumber);
  };

  auto* info = verb("info", "Invariants of <gens>", [&] {
    const auto s = semigroup_arg(opt.semigroup);
    if (json) return dump(to_json(s));
    std::ostringstream o;
    o << to_text(s) << "\n"
      << "frobenius: " << s.frobenius() << "\n"
      << "multiplicity: " << s.multiplicity() << "\n"
      << "genus: " << s.genus() << "\n"
      << "embedding-dimension: " << s.embedding_dimension() << "\n"
      << "depth: " << depth(s) << "\n"
      << "gaps: " << join(s.gaps()) << "\n";
    return o.str();
  });
  info->add_option("generators", opt.semigroup, "e.g. 4,5,11")->required();

  auto* quo = verb("quotient", "Quotient S/d", [&] {
    const auto q = quotient(semigroup_arg(opt.semigroup), opt.divisor);
    return json ? dump(to_json(q)) : to_text(q) + "\n";
  });
  quo->add_option("generators", opt.semigroup)->required();
  quo->add_option("divisor", opt.divisor)->required();

  auto* inter = verb("intersect", "Intersection of the given semigroups", [&] {
    auto family = semigroup_args(opt.semigroups);
    NumericalSemigroup acc;
    for (const auto& s : family) acc = intersect(acc, s);
    return json ? dump(to_json(acc)) : to_text(acc) + "\n";
  });
  inter->add_option("generators", opt.semigroups)->required();

  auto* fg = verb("fundamental-gaps", "Fundamental gaps of S", [&] {
    const auto gaps = fundamental_gaps(semigroup_arg(opt.semigroup));
    return json ? dump(Json(gaps)) : join(gaps) + "\n";
  });
  fg->add_option("generators", opt.semigroup)->required();

  auto* pm = verb("pm", "Proportionally modular semigroup {x | a x mod b <= c x}", [&] {
    const auto s = proportionally_modular(opt.pm_params[0], opt.pm_params[1], opt.pm_params[2]);
    return json ? dump(to_json(s)) : to_text(s) + "\n";
  });
  pm->add_option("abc", opt.pm_params, "a b c")->required()->expected(3);

  auto* ext = verb("extensions", "All arithmetic extensions of S", [&] {
    const auto v = arithmetic_extensions(semigroup_arg(opt.semigroup));
    return json ? dump(to_json(v)) : lines(v);
  });
  ext->add_option("generators", opt.semigroup)->required();

  auto* var = verb("variety", "Smallest arithmetic variety containing the given semigroups", [&] {
    const auto v = smallest_variety(semigroup_args(opt.semigroups));
    return json ? dump(to_json(v)) : lines(v);
  });
  var->add_option("generators", opt.semigroups)->required();

  auto* isext = verb("is-extension", "Whether T is an arithmetic extension of S", [&] {
    const bool r = is_arithmetic_extension(semigroup_arg(opt.semigroups[0]),
                                           semigroup_arg(opt.semigroups[1]));
    if (json) return dump(Json{{"result", r}});
    return std::string(r ? "true\n" : "false\n");
  });
  isext->add_option("pair", opt.semigroups, "S T")->required()->expected(2);

  auto* hull = verb("hull", "Smallest monoid of the variety of the given semigroups containing X",
                    [&] {
    const auto v = smallest_variety(semigroup_args(opt.semigroups));
    const auto x = parse_list(opt.elements, "--elements");
    const auto h = monoid_hull(v, x);
    if (!json) return to_text(h.semigroup) + "\n";
    Json j;
    j["elements"] = h.elements;
    j["cofinite"] = h.cofinite;
    j["semigroup"] = to_json(h.semigroup);
    return dump(j);
  });
  hull->add_option("generators", opt.semigroups)->required();
  hull->add_option("--elements", opt.elements, "X, e.g. 6 or 6,8");

  auto* ums = verb("upper-sets", "Upper m-sets of S", [&] {
    const auto sets = upper_m_sets(semigroup_arg(opt.semigroup), opt.modulus);
    if (json) return dump(Json(sets));
    std::string o;
    for (const auto& h : sets) o += braces(h) + "\n";
    return o;
  });
  ums->add_option("generators", opt.semigroup)->required();
  ums->add_option("--modulus", opt.modulus, "odd member m of S")->required();

  auto* dbl = verb("double", "S(m, H) for an upper m-set H", [&] {
    const auto s = semigroup_arg(opt.semigroup);
    auto h = parse_list(opt.upper_set, "--set");
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
    auto t = build_double(s, opt.modulus, h);
    const Double d{{opt.modulus, std::move(h)}, std::move(t)};
    return json ? dump(to_json(d)) : to_text(d) + "\n";
  });
  dbl->add_option("generators", opt.semigroup)->required();
  dbl->add_option("--modulus", opt.modulus, "odd member m of S")->required();
  dbl->add_option("--set", opt.upper_set, "H, e.g. 3,6,7")->required();

  auto* dbls = verb("doubles", "Doubles T of S (T/2 = S) with F(T) <= F", [&] {
    const auto ds = doubles_bounded(semigroup_arg(opt.semigroup), opt.bound);
    if (json) {
      Json j = Json::array();
      for (const auto& d : ds) j.push_back(to_json(d));
      return dump(j);
    }
    std::string o;
    for (const auto& d : ds) o += to_text(d) + "\n";
    return o;
  });
  dbls->add_option("generators", opt.semigroup)->required();
  add_bound(dbls);

  auto* tree = verb("tree", "Halving tree of semigroups with F(S) <= F (and depth <= q)", [&] {
    const auto pred = opt.depth >= 0 ? depth_predicate(opt.depth) : all_semigroups();
    const auto t = enumerate(opt.bound, pred);
    if (opt.format == "dot") return export_tree(t, TreeFormat::dot);
    if (json) return export_tree(t, TreeFormat::json);
    std::string o;
    for (const auto& s : t.nodes()) o += to_text(s) + "\n";
    return o;
  });
  add_bound(tree);
  tree->add_option("--depth", opt.depth, "depth bound q")->check(CLI::NonNegativeNumber);

  auto* all = verb("enumerate-all", "Brute-force enumeration of semigroups with F(S) <= F", [&] {
    const auto report = oracle::all_semigroups_up_to(opt.bound);
    if (json) return dump(oracle::to_fixture_json(report));
    std::string o;
    for (const auto& s : report.semigroups) o += to_text(s) + "\n";
    return o;
  });
  add_bound(all);

  bool check_failed = false;
  auto* check = verb("oracle-check", "Cross-check every algorithm against brute force", [&] {
    const auto report = oracle::cross_check(opt.bound);
    check_failed = !report.ok();
    if (json) {
      Json j = Json::array();
      for (const auto& p : report.properties) {
        j.push_back({{"property", p.name},
                     {"checked", p.checked},
                     {"discrepancies", p.discrepancies},
                     {"first_discrepancy", p.first_discrepancy}});
      }
      return dump(j);
    }
    std::ostringstream o;
    for (const auto& p : report.properties) {
      o << (p.discrepancies == 0 ? "PASS " : "FAIL ") << p.name << " (" << p.checked
        << " checked";
      if (p.discrepancies != 0) {
        o << ", " << p.discrepancies << " discrepancies, first: " << p.first_discrepancy;
      }
      o << ")\n";
    }
    return o.str();
  });
  add_bound(check);

  // CLI11 reports a stray word as a missing subcommand; name it instead.
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto& a = args[i];
    if (a == "--format" || a == "--output") {
      ++i;
      continue;
    }
    if (a.rfind("-", 0) == 0) continue;
    if (app.get_subcommand_no_throw(a) == nullptr) {
      err << "usage error: unknown command '" << a << "'\n";
      return 2;
    }
    break;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (opt.format == "dot" && chosen != tree) {
    err << "usage error: --format dot is only available for tree\n";
    return 2;
  }
  json = opt.format == "json";

  std::string result;
  try {
    result = handlers.at(chosen)();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (opt.output.empty()) {
    out << result;
  } else {
    std::ofstream file(opt.output, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << opt.output << " for writing\n";
      return 1;
    }
    file << result;
  }
  return check_failed ? 1 : 0;
}

}  // namespace numsg::cli
