// hibilab: command-line front end for the tableau, lattice and flag
// algebra routines.  Exit codes: 0 ok, 1 check failure, 2 usage or
// validation error, 3 invariant violation or failed reduction.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hibilab/checks.hpp"
#include "hibilab/error.hpp"
#include "hibilab/flagalg.hpp"
#include "hibilab/gtpatterns.hpp"
#include "hibilab/hibi.hpp"
#include "hibilab/io.hpp"
#include "hibilab/posets.hpp"

using namespace hibilab;

namespace {

constexpr int kMaxN = 32;

struct ExitCode {
  int code;
};

void require_n(int n) {
  if (n < 1 || n > kMaxN) throw ValidationError("n must lie in [1, " + std::to_string(kMaxN) + "]");
}

std::size_t max_nodes() {
  const char* env = std::getenv("HIBILAB_MAX_NODES");
  if (!env || !*env) return kDefaultMaxNodes;
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(env, &used);
    if (used != std::string(env).size() || v == 0) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw ValidationError("HIBILAB_MAX_NODES must be a positive integer");
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_input(path));
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

std::vector<int> parse_ints(const std::vector<std::string>& args) {
  std::vector<int> out;
  for (const auto& a : args) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(a, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != a.size() || a.empty()) throw ValidationError("expected an integer, got \"" + a + "\"");
    out.push_back(v);
  }
  return out;
}

// FAMILY and its integer parameters: L n [m], G n m, P n, B n m k.
TableauLattice make_lattice(const std::string& family, const std::vector<int>& p) {
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (p.size() < lo || p.size() > hi)
      throw ValidationError("family " + family + " takes " + std::to_string(lo) +
                            (lo == hi ? "" : "-" + std::to_string(hi)) + " integer parameters");
  };
  if (!p.empty()) require_n(p[0]);
  if (family == "L") {
    arity(1, 2);
    return p.size() == 1 ? TableauLattice::full(p[0]) : TableauLattice::bounded(p[0], p[1]);
  }
  if (family == "G") {
    arity(2, 2);
    return TableauLattice::grassmannian(p[0], p[1]);
  }
  if (family == "P") {
    arity(1, 1);
    return TableauLattice::symplectic(p[0]);
  }
  if (family == "B") {
    arity(3, 3);
    return TableauLattice::branching(p[0], p[1], p[2]);
  }
  throw ValidationError("unknown family \"" + family + "\" (expected L, G, P or B)");
}

ConstantPolicy parse_policy(const std::string& s, Family f) {
  if (s.empty()) return default_policy(f);
  if (s == "keep-top") return ConstantPolicy::KeepTop;
  if (s == "drop") return ConstantPolicy::Drop;
  if (s == "keep-all") return ConstantPolicy::KeepAll;
  throw ValidationError("unknown policy \"" + s + "\" (expected keep-top, drop or keep-all)");
}

Json node_json(GtNode z) { return Json::array({z.level, z.index}); }

// ---------------------------------------------------------------------------

struct HasseArgs {
  std::string family;
  std::vector<std::string> params;
  std::string policy;
  std::string out;
};

void cmd_hasse(const HasseArgs& a) {
  if (a.family == "GT") {
    const auto p = parse_ints(a.params);
    if (p.empty() || p.size() > 2) throw ValidationError("family GT takes n [m]");
    require_n(p[0]);
    const GtPoset g = p.size() == 1 ? GtPoset::full(p[0]) : GtPoset::bounded(p[0], p[1]);
    const std::string name = p.size() == 1 ? "Gamma_" + std::to_string(p[0])
                                            : "Gamma_{" + std::to_string(p[0]) + "," + std::to_string(p[1]) + "}";
    write_output(a.out, to_dot(hasse(g), name));
    return;
  }
  if (a.family == "gt-sub") {
    if (a.params.empty()) throw ValidationError("gt-sub takes a lattice family and its parameters");
    const auto l = make_lattice(a.params[0], parse_ints({a.params.begin() + 1, a.params.end()}));
    const auto policy = parse_policy(a.policy, l.family());
    write_output(a.out, to_dot(hasse(associated_gt_subposet(l, policy)), "Gamma(" + l.name() + ")"));
    return;
  }
  if (!a.policy.empty()) throw ValidationError("--policy applies only to gt-sub");
  const auto l = make_lattice(a.family, parse_ints(a.params));
  write_output(a.out, to_dot(hasse(l), l.name()));
}

struct ConvertArgs {
  std::string from;
  std::string to;
  std::string file = "-";
  std::optional<int> n;
  std::string out;
};

void cmd_convert(const ConvertArgs& a) {
  const Json in = read_json(a.file);
  Ssyt t;
  int n = 0;
  if (a.from == "ssyt") {
    t = ssyt_from_json(in);
  } else if (a.from == "gt") {
    const GtPattern f = pattern_from_json(in);
    n = f.n();
    t = gt_to_ssyt(f);
  } else {
    t = multichain_to_ssyt(chain_from_json(in));
  }
  if (a.n) {
    require_n(*a.n);
    n = *a.n;
  } else if (n == 0) {
    n = std::max(1, t.empty() ? 1 : t.max_entry());
  }
  if (!t.empty() && t.max_entry() > n)
    throw ValidationError("entry " + std::to_string(t.max_entry()) + " exceeds n = " + std::to_string(n));

  Json out;
  if (a.to == "ssyt") out = to_json(t);
  else if (a.to == "gt") out = to_json(ssyt_to_gt(t, n));
  else out = to_json(ssyt_to_multichain(t));
  write_output(a.out, canonical(out) + "\n");
}

struct DimArgs {
  std::string shape;
  int n = 0;
  std::optional<int> m;
};

void cmd_dim(const DimArgs& a) {
  require_n(a.n);
  const YoungDiagram shape = parse_diagram(a.shape);
  const int m = a.m.value_or(a.n);
  if (m < 1 || m > a.n) throw ValidationError("m must lie in [1, n]");
  if (shape.depth() > m)
    throw ValidationError("shape " + to_string(shape) + " is deeper than m = " + std::to_string(m));
  const auto l = TableauLattice::bounded(a.n, m);
  std::cout << graded_component_dimension(l, shape.trimmed(), a.n) << "\n";
}

struct StraightenArgs {
  std::string mode = "hibi";
  std::string expression;
  std::optional<int> n;
  std::optional<int> m;
};

int max_entry_of(const std::vector<BracketTerm>& terms) {
  int n = 1;
  for (const auto& t : terms)
    for (const auto& c : t.factors) n = std::max(n, c.max_entry());
  return n;
}

void cmd_straighten(const StraightenArgs& a) {
  if (a.mode == "hibi") {
    const auto terms = parse_bracket_expression(a.expression, 'x');
    const int n = a.n.value_or(max_entry_of(terms));
    require_n(n);
    const auto l = a.m ? TableauLattice::bounded(n, *a.m) : TableauLattice::full(n);
    std::cout << to_string(straighten(l, parse_hibi_polynomial(a.expression))) << "\n";
    return;
  }
  if (a.mode != "flag") throw ValidationError("unknown mode \"" + a.mode + "\" (expected hibi or flag)");

  const auto terms = parse_bracket_expression(a.expression, 'd');
  const int n = a.n.value_or(max_entry_of(terms));
  require_n(n);
  int deepest = 1;
  for (const auto& t : terms)
    for (const auto& c : t.factors) deepest = std::max(deepest, c.depth());
  const int m = a.m.value_or(deepest);
  const auto l = TableauLattice::bounded(n, m);

  std::optional<YoungDiagram> shape;
  Polynomial p;
  for (const auto& t : terms) {
    const YoungDiagram s = HibiMonomial(t.factors).shape();
    if (shape && !(*shape == s)) throw ValidationError("terms of different shapes cannot be expanded together");
    shape = s;
    if (denominator(t.coefficient) != 1) throw ValidationError("flag mode takes integer coefficients");
    p += standard_monomial(t.factors, n, m) * numerator(t.coefficient);
  }
  std::cout << to_string(expand_in_standard_basis(p, *shape, l)) << "\n";
}

struct EnumerateArgs {
  std::string shape;
  int n = 0;
  std::optional<int> m;
  std::string as = "gt";
  bool count = false;
};

void cmd_enumerate(const EnumerateArgs& a) {
  require_n(a.n);
  const YoungDiagram shape = parse_diagram(a.shape);
  if (shape.depth() > a.n) throw ValidationError("shape " + to_string(shape) + " has more than n rows");
  std::uint64_t total = 0;
  std::ostringstream out;
  for_each_pattern(shape, a.n, a.m, [&](const GtPattern& f) {
    ++total;
    if (a.count) return;
    out << canonical(a.as == "ssyt" ? to_json(gt_to_ssyt(f)) : to_json(f)) << "\n";
  });
  if (a.count) out << total << "\n";
  std::cout << out.str();
}

struct SubposetArgs {
  std::string family;
  std::vector<std::string> params;
  std::string policy;
};

void cmd_subposet(const SubposetArgs& a) {
  const auto l = make_lattice(a.family, parse_ints(a.params));
  const auto policy = parse_policy(a.policy, l.family());
  const GtPoset g = associated_gt_subposet(l, policy);
  Json nodes = Json::array(), edges = Json::array();
  for (const auto& z : g.nodes()) nodes.push_back(node_json(z));
  for (const auto& [hi, lo] : cover_relations(g.nodes(), gt_geq))
    edges.push_back(Json::array({node_json(g.nodes()[hi]), node_json(g.nodes()[lo])}));
  const Json out{{"lattice", l.name()},
                 {"policy", to_string(policy)},
                 {"nodes", std::move(nodes)},
                 {"edges", std::move(edges)},
                 {"upsets", count_order_increasing_subsets(g, max_nodes())}};
  std::cout << canonical(out) << "\n";
}

struct SkewArgs {
  std::string file = "-";
  int n = 0;
  int k = 0;
  int m = 0;
  bool content = false;
};

void cmd_skew(const SkewArgs& a) {
  require_n(a.n);
  const SkewTableau s = to_skew(ssyt_from_json(read_json(a.file)), a.n, a.k, a.m);
  std::cout << canonical(a.content ? Json(content(s, a.n - a.k)) : to_json(s)) << "\n";
}

struct CheckArgs {
  std::string suite;
  CheckOptions opt;
};

int cmd_check(const CheckArgs& a) {
  CheckOptions opt = a.opt;
  opt.max_nodes = max_nodes();
  const CheckReport r = run_check(a.suite, opt);
  std::cout << summary_line(r) << "\n";
  if (!r.passed) {
    std::cout << "counterexample: " << r.counterexample << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Column tableaux, Gelfand-Tsetlin patterns, Hibi and flag algebras"};
  app.require_subcommand(1);

  HasseArgs hasse_args;
  auto* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram as DOT");
  hasse_cmd->add_option("family", hasse_args.family, "L, G, P, B, GT or gt-sub")->required();
  hasse_cmd->add_option("params", hasse_args.params, "n [m] [k]; for gt-sub a family then its parameters");
  hasse_cmd->add_option("--policy", hasse_args.policy, "keep-top, drop or keep-all (gt-sub only)");
  hasse_cmd->add_option("--out", hasse_args.out, "output file (default stdout)");

  ConvertArgs convert_args;
  auto* convert_cmd = app.add_subcommand("convert", "Convert between SSYT, GT pattern and multichain JSON");
  const std::vector<std::string> kinds{"ssyt", "gt", "chain"};
  convert_cmd->add_option("--from", convert_args.from)->required()->check(CLI::IsMember(kinds));
  convert_cmd->add_option("--to", convert_args.to)->required()->check(CLI::IsMember(kinds));
  convert_cmd->add_option("file", convert_args.file, "input JSON (default stdin)");
  convert_cmd->add_option("--n", convert_args.n, "ambient n (default: pattern size or largest entry)");
  convert_cmd->add_option("--out", convert_args.out, "output file (default stdout)");

  DimArgs dim_args;
  auto* dim_cmd = app.add_subcommand("dim", "Dimension of the graded component of a shape");
  dim_cmd->add_option("shape", dim_args.shape, "e.g. \"(2,1)\"")->required();
  dim_cmd->add_option("n", dim_args.n)->required();
  dim_cmd->add_option("m", dim_args.m, "column depth bound (default n)");

  StraightenArgs straighten_args;
  auto* straighten_cmd = app.add_subcommand("straighten", "Normal form in the Hibi or flag algebra");
  straighten_cmd->add_option("--mode", straighten_args.mode)->check(CLI::IsMember({"hibi", "flag"}));
  straighten_cmd->add_option("expression", straighten_args.expression, "e.g. \"x[1,4]*x[2,3]\"")->required();
  straighten_cmd->add_option("--n", straighten_args.n);
  straighten_cmd->add_option("--m", straighten_args.m);

  EnumerateArgs enumerate_args;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "All GT patterns (or SSYT) with a given top row");
  enumerate_cmd->add_option("shape", enumerate_args.shape)->required();
  enumerate_cmd->add_option("n", enumerate_args.n)->required();
  enumerate_cmd->add_option("--m", enumerate_args.m, "restrict support to Gamma_{n,m}");
  enumerate_cmd->add_option("--as", enumerate_args.as)->check(CLI::IsMember({"gt", "ssyt"}));
  enumerate_cmd->add_flag("--count", enumerate_args.count, "print only the number of patterns");

  SubposetArgs subposet_args;
  auto* subposet_cmd = app.add_subcommand("subposet", "Associated GT subposet of a lattice family as JSON");
  subposet_cmd->add_option("family", subposet_args.family, "L, G, P or B")->required();
  subposet_cmd->add_option("params", subposet_args.params, "n [m] [k]");
  subposet_cmd->add_option("--policy", subposet_args.policy, "keep-top, drop or keep-all");

  SkewArgs skew_args;
  auto* skew_cmd = app.add_subcommand("skew", "Skew tableau of a branching-form SSYT");
  skew_cmd->add_option("file", skew_args.file, "input SSYT JSON (default stdin)");
  skew_cmd->add_option("--n", skew_args.n)->required();
  skew_cmd->add_option("--k", skew_args.k)->required();
  skew_cmd->add_option("--m", skew_args.m, "pad the outer shape to m rows");
  skew_cmd->add_flag("--content", skew_args.content, "print the content instead of the tableau");

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "Run an invariant suite");
  check_cmd->add_option("suite", check_args.suite)->required();
  check_cmd->add_option("--n", check_args.opt.n);
  check_cmd->add_option("--m", check_args.opt.m);
  check_cmd->add_option("--seed", check_args.opt.seed);
  check_cmd->add_option("--trials", check_args.opt.trials);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*hasse_cmd) cmd_hasse(hasse_args);
    else if (*convert_cmd) cmd_convert(convert_args);
    else if (*dim_cmd) cmd_dim(dim_args);
    else if (*straighten_cmd) cmd_straighten(straighten_args);
    else if (*enumerate_cmd) cmd_enumerate(enumerate_args);
    else if (*subposet_cmd) cmd_subposet(subposet_args);
    else if (*skew_cmd) cmd_skew(skew_args);
    else if (*check_cmd) return cmd_check(check_args);
  } catch (const ValidationError& e) {
    std::cerr << "error: validation: " << e.what() << "\n";
    return 2;
  } catch (const LimitExceeded& e) {
    std::cerr << "error: limit: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "error: invariant: " << e.what() << "\n";
    return 3;
  } catch (const ReductionError& e) {
    std::cerr << "error: reduction: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
