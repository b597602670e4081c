#include "hibilab/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "hibilab/error.hpp"
#include "hibilab/flagalg.hpp"
#include "hibilab/gtpatterns.hpp"
#include "hibilab/hibi.hpp"
#include "hibilab/io.hpp"
#include "hibilab/posets.hpp"

namespace hibilab {

namespace {

// Collects cases and the first failure.
class Recorder {
 public:
  explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

  bool expect(bool ok, const std::function<std::string()>& describe) {
    ++report_.cases;
    if (!ok && report_.passed) {
      report_.passed = false;
      report_.counterexample = describe();
    }
    return ok;
  }
  bool failed() const { return !report_.passed; }
  CheckReport done() { return std::move(report_); }

 private:
  CheckReport report_;
};

std::string chain_text(const std::vector<ColumnTableau>& chain) { return canonical(to_json(chain)); }

void require_range(const char* what, int v, int lo, int hi) {
  if (v < lo || v > hi)
    throw ValidationError(std::string(what) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

int effective_m(const CheckOptions& o) { return o.m == 0 ? o.n : o.m; }

CheckReport check_birkhoff(const CheckOptions& o) {
  require_range("n", o.n, 1, 7);
  Recorder rec("birkhoff");
  const int n = o.n;
  const auto l = TableauLattice::full(n);
  const auto gamma = GtPoset::full(n);

  std::set<ColumnTableau> images;
  for (const auto& a : order_increasing_subsets(gamma, o.max_nodes)) {
    if (a.empty()) continue;
    const GtPattern f = indicator_of(n, a);
    const ColumnTableau c = indicator_to_column(f);
    rec.expect(l.contains(c) && column_to_indicator(c, n) == f,
               [&] { return "up-set of size " + std::to_string(a.size()) + " maps to " + to_string(c); });
    images.insert(c);
  }
  rec.expect(images.size() == l.size(), [&] {
    return "nonempty up-sets hit " + std::to_string(images.size()) + " of " + std::to_string(l.size()) + " columns";
  });

  for (const auto& i : l.elements()) {
    const GtPattern fi = column_to_indicator(i, n);
    for (const auto& j : l.elements()) {
      const GtPattern fj = column_to_indicator(j, n);
      const auto pair = [&] { return to_string(i) + " " + to_string(j); };
      rec.expect(leq_tab(j, i) == geq_ind(fi, fj), [&] { return "order mismatch at " + pair(); });
      rec.expect(column_to_indicator(join(i, j), n) == indicator_join(fi, fj), [&] { return "join at " + pair(); });
      rec.expect(column_to_indicator(meet(i, j), n) == indicator_meet(fi, fj), [&] { return "meet at " + pair(); });
    }
  }

  // Join-irreducibles correspond to Gamma_n minus its top: z -> complement of its down-set.
  std::set<ColumnTableau> from_gamma;
  for (const auto& z : gamma.nodes()) {
    if (z == GtNode{n, 1}) continue;
    std::vector<GtNode> up;
    for (const auto& w : gamma.nodes())
      if (!gt_geq(z, w)) up.push_back(w);
    from_gamma.insert(indicator_to_column(indicator_of(n, up)));
  }
  const auto ji = join_irreducibles(l);
  rec.expect(std::set<ColumnTableau>(ji.begin(), ji.end()) == from_gamma,
             [&] { return "join-irreducibles differ from the images of Gamma_n nodes"; });
  return rec.done();
}

CheckReport check_bijection(const CheckOptions& o) {
  require_range("n", o.n, 1, 6);
  Recorder rec("bijection");
  const int n = o.n;
  for (int size = 0; size <= 8 && !rec.failed(); ++size) {
    for (const auto& shape : partitions(size, n, size)) {
      for_each_ssyt(shape, n, [&](const Ssyt& t) {
        const GtPattern f = ssyt_to_gt(t, n);
        rec.expect(gt_to_ssyt(f) == t && weight(f) == content(t, n),
                   [&] { return "ssyt " + canonical(to_json(t)) + " -> " + canonical(to_json(f)); });
      });
      for_each_pattern(shape, n, std::nullopt, [&](const GtPattern& f) {
        rec.expect(ssyt_to_gt(gt_to_ssyt(f), n) == f, [&] { return "pattern " + canonical(to_json(f)); });
      });
    }
  }
  return rec.done();
}

std::uint64_t weyl_dimension(const YoungDiagram& shape, int n) {
  Integer num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= shape[i] - shape[j] + j - i;
      den *= j - i;
    }
  return static_cast<std::uint64_t>(num / den);
}

CheckReport check_dimension(const CheckOptions& o) {
  require_range("n", o.n, 1, 6);
  Recorder rec("dimension");
  const int n = o.n;
  const auto l = TableauLattice::full(n);
  for (int size = 0; size <= 4 * n; ++size) {
    for (const auto& shape : partitions(size, n, 4)) {
      std::uint64_t tableaux = 0;
      for_each_ssyt(shape, n, [&](const Ssyt&) { ++tableaux; });
      const std::uint64_t patterns = enumerate_patterns(shape, n).size();
      const std::uint64_t chains = graded_dimension(l, shape);
      const std::uint64_t weyl = weyl_dimension(shape, n);
      rec.expect(tableaux == patterns && patterns == chains && chains == weyl, [&] {
        std::ostringstream s;
        s << to_string(shape) << " n=" << n << ": ssyt=" << tableaux << " gt=" << patterns << " chains=" << chains
          << " weyl=" << weyl;
        return s.str();
      });
    }
  }
  return rec.done();
}

CheckReport check_straighten(const CheckOptions& o) {
  require_range("n", o.n, 2, 7);
  require_range("m", effective_m(o), 1, std::min(o.n, 4));
  Recorder rec("straighten");
  const auto l = TableauLattice::bounded(o.n, effective_m(o));
  const auto& el = l.elements();
  for (std::size_t a = 0; a < el.size(); ++a) {
    for (std::size_t b = a + 1; b < el.size(); ++b) {
      const auto &i = el[a], &j = el[b];
      if (comparable(i, j)) continue;
      const auto e = straightening_relation(i, j, l);
      const auto lo = meet(i, j), hi = join(i, j);
      const auto where = [&] { return to_string(i) + "*" + to_string(j) + " = " + to_string(e); };
      rec.expect(reassemble(e, o.n, l.m()) == minor(i, o.n, l.m()) * minor(j, o.n, l.m()),
                 [&] { return "nonzero residual: " + where(); });
      rec.expect(!e.terms.empty() && e.terms.front().first == std::vector<ColumnTableau>{lo, hi} &&
                     e.terms.front().second == 1,
                 [&] { return "leading term: " + where(); });
      for (const auto& [chain, q] : e.terms)
        rec.expect(chain.size() == 2 && leq_tab(chain[0], lo) && leq_tab(hi, chain[1]),
                   [&] { return "bracketing of " + chain_text(chain) + ": " + where(); });
    }
  }
  return rec.done();
}

CheckReport check_sagbi(const CheckOptions& o) {
  require_range("n", o.n, 2, 7);
  require_range("m", effective_m(o), 1, std::min(o.n, 4));
  Recorder rec("sagbi");
  const int n = o.n, m = effective_m(o);
  const auto l = TableauLattice::bounded(n, m);
  for (const auto& i : l.elements()) {
    rec.expect(initial_monomial(minor(i, n, m)).first == diagonal_monomial(i),
               [&] { return "in(delta" + to_string(i) + ") is not the diagonal"; });
    for (const auto& j : l.elements())
      rec.expect(check_sagbi_pair(i, j, l), [&] { return "pair " + to_string(i) + " " + to_string(j); });
  }
  for (int size = 1; size <= 6; ++size) {
    for (const auto& shape : partitions(size, m, 3)) {
      std::set<std::string> seen;
      int taken = 0;
      for_each_ssyt(shape, n, [&](const Ssyt& t) {
        if (taken++ >= 20) return;
        const auto chain = ssyt_to_multichain(t);
        const Monomial in = initial_monomial(standard_monomial(chain, n, m)).first;
        rec.expect(seen.insert(to_string(in)).second,
                   [&] { return "repeated initial monomial " + to_string(in) + " at " + chain_text(chain); });
      });
    }
  }
  return rec.done();
}

CheckReport check_invariance(const CheckOptions& o) {
  require_range("n", o.n, 1, 6);
  require_range("m", effective_m(o), 1, std::min(o.n, 4));
  Recorder rec("invariance");
  const int n = o.n, m = effective_m(o);
  const auto l = TableauLattice::bounded(n, m);
  for (const auto& i : l.elements())
    rec.expect(check_unipotent_invariance(i, n, m), [&] { return "delta" + to_string(i) + " is not invariant"; });
  if (m >= 2)
    rec.expect(!is_unipotent_invariant(Polynomial::variable(x_var(1, 2)), n, m),
               [] { return std::string("x[1,2] passed as invariant"); });
  return rec.done();
}

HibiMonomial random_monomial(const TableauLattice& l, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> degree(2, 5);
  std::uniform_int_distribution<std::size_t> pick(0, l.size() - 1);
  std::vector<ColumnTableau> f;
  for (int d = degree(rng); d > 0; --d) f.push_back(l.elements()[pick(rng)]);
  return HibiMonomial(std::move(f));
}

CheckReport check_hibi(const CheckOptions& o) {
  require_range("n", o.n, 1, 10);
  require_range("trials", o.trials, 1, 100000);
  Recorder rec("hibi");
  const int n = o.n;
  const auto l = TableauLattice::full(n);
  std::mt19937_64 rng(o.seed);
  const int inputs = std::max(1, o.trials / 10);
  for (int t = 0; t < o.trials; ++t) {
    const HibiMonomial m = random_monomial(l, rng);
    std::vector<RewriteStep> trace;
    const HibiMonomial nf = straighten(l, m, &trace);
    rec.expect(is_standard(nf), [&] { return to_string(m) + " -> " + to_string(nf) + " is not standard"; });
    for (const auto& s : trace)
      rec.expect(s.measure_after > s.measure_before, [&] {
        return "measure did not increase rewriting " + to_string(s.alpha) + "*" + to_string(s.beta);
      });
    rec.expect(hibi_to_gt(m, n) == hibi_to_gt(nf, n), [&] { return "psi differs on " + to_string(m); });
    if (t < inputs)
      for (int r = 0; r < 10; ++r) {
        const HibiMonomial other = straighten_random(l, m, rng);
        rec.expect(other == nf, [&] { return to_string(m) + " has normal forms " + to_string(nf) + " and " +
                                             to_string(other); });
      }
  }
  return rec.done();
}

CheckReport check_distributive(const CheckOptions& o) {
  require_range("n", o.n, 1, 5);
  Recorder rec("distributive");
  const auto l = TableauLattice::full(o.n);
  const auto& el = l.elements();
  for (const auto& a : el)
    for (const auto& b : el) {
      rec.expect(join(a, b) == join(b, a) && meet(a, b) == meet(b, a) && join(a, meet(a, b)) == a &&
                     meet(a, join(a, b)) == a && leq_tab(meet(a, b), join(a, b)),
                 [&] { return "lattice axioms at " + to_string(a) + " " + to_string(b); });
      for (const auto& c : el)
        rec.expect(meet(a, join(b, c)) == join(meet(a, b), meet(a, c)) &&
                       join(a, join(b, c)) == join(join(a, b), c),
                   [&] { return "distributivity at " + to_string(a) + " " + to_string(b) + " " + to_string(c); });
    }
  return rec.done();
}

using Suite = CheckReport (*)(const CheckOptions&);

const std::map<std::string, Suite, std::less<>>& suites() {
  static const std::map<std::string, Suite, std::less<>> table{
      {"birkhoff", check_birkhoff},     {"bijection", check_bijection}, {"dimension", check_dimension},
      {"straighten", check_straighten}, {"sagbi", check_sagbi},         {"invariance", check_invariance},
      {"hibi", check_hibi},             {"distributive", check_distributive},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& check_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

CheckReport run_check(std::string_view suite, const CheckOptions& opt) {
  const auto it = suites().find(suite);
  if (it == suites().end()) throw ValidationError("unknown suite \"" + std::string(suite) + "\"");
  return it->second(opt);
}

std::string summary_line(const CheckReport& r) {
  return "suite=" + r.suite + " status=" + (r.passed ? "pass" : "fail") + " cases=" + std::to_string(r.cases);
}

}  // namespace hibilab
