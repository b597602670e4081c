#include "hibilab/hibi.hpp"

#include <algorithm>

#include "hibilab/error.hpp"
#include "hibilab/io.hpp"

namespace hibilab {

HibiMonomial::HibiMonomial(std::vector<ColumnTableau> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(), chain_order_less);
}

YoungDiagram HibiMonomial::shape() const {
  std::vector<int> depths;
  for (const auto& f : factors_) depths.push_back(f.depth());
  std::sort(depths.rbegin(), depths.rend());
  return transpose(YoungDiagram(std::move(depths)));
}

HibiMonomial operator*(const HibiMonomial& a, const HibiMonomial& b) {
  std::vector<ColumnTableau> f = a.factors();
  f.insert(f.end(), b.factors().begin(), b.factors().end());
  return HibiMonomial(std::move(f));
}

HibiPolynomial::HibiPolynomial(const HibiMonomial& m, Rational c) { add_term(m, c); }

void HibiPolynomial::add_term(const HibiMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HibiPolynomial& HibiPolynomial::operator+=(const HibiPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

HibiPolynomial& HibiPolynomial::operator-=(const HibiPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

HibiPolynomial operator+(HibiPolynomial a, const HibiPolynomial& b) { return a += b; }
HibiPolynomial operator-(HibiPolynomial a, const HibiPolynomial& b) { return a -= b; }

// ---------------------------------------------------------------------------

bool is_standard(const HibiMonomial& m) {
  const auto& f = m.factors();
  for (std::size_t i = 1; i < f.size(); ++i)
    if (!leq_tab(f[i - 1], f[i])) return false;
  return true;
}

std::int64_t termination_measure(const TableauLattice& l, const HibiMonomial& m) {
  std::int64_t s = 0;
  for (const auto& f : m.factors()) {
    const std::int64_t r = l.rank(f);
    s += r * r;
  }
  return s;
}

namespace {

void require_members(const TableauLattice& l, const HibiMonomial& m) {
  for (const auto& f : m.factors())
    if (!l.contains(f)) throw ValidationError("x" + to_string(f) + " is not a variable of " + l.name());
}

template <class Pick>
HibiMonomial rewrite_to_normal_form(const TableauLattice& l, const HibiMonomial& m, Pick pick,
                                    std::vector<RewriteStep>* trace) {
  require_members(l, m);
  HibiMonomial cur = m;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (;;) {
    const auto& f = cur.factors();
    pairs.clear();
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j)
        if (!comparable(f[i], f[j])) pairs.emplace_back(i, j);
    if (pairs.empty()) return cur;

    const auto [i, j] = pick(pairs);
    std::vector<ColumnTableau> next = f;
    const ColumnTableau a = f[i], b = f[j];
    next[i] = join(a, b);
    next[j] = meet(a, b);
    HibiMonomial rewritten(std::move(next));
    if (trace) trace->push_back({a, b, termination_measure(l, cur), termination_measure(l, rewritten)});
    cur = std::move(rewritten);
  }
}

}  // namespace

HibiMonomial straighten(const TableauLattice& l, const HibiMonomial& m, std::vector<RewriteStep>* trace) {
  return rewrite_to_normal_form(l, m, [](const auto& pairs) { return pairs.front(); }, trace);
}

HibiMonomial straighten_random(const TableauLattice& l, const HibiMonomial& m, std::mt19937_64& rng,
                               std::vector<RewriteStep>* trace) {
  return rewrite_to_normal_form(
      l, m,
      [&rng](const auto& pairs) {
        std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
        return pairs[pick(rng)];
      },
      trace);
}

HibiPolynomial straighten(const TableauLattice& l, const HibiPolynomial& p) {
  HibiPolynomial out;
  for (const auto& [m, c] : p.terms()) out.add_term(straighten(l, m), c);
  return out;
}

GtPattern hibi_to_gt(const HibiMonomial& m, int n) {
  GtPattern f(n);
  for (const auto& c : m.factors()) f += column_to_indicator(c, n);
  return f;
}

std::uint64_t graded_dimension(const TableauLattice& l, const YoungDiagram& shape) {
  const YoungDiagram depths = transpose(shape);  // column lengths, weakly decreasing
  const auto& el = l.elements();
  for (int d : depths.rows())
    if (std::none_of(el.begin(), el.end(), [d](const ColumnTableau& c) { return c.depth() == d; }))
      throw ValidationError("shape " + to_string(shape) + " needs columns of depth " + std::to_string(d) +
                            ", which " + l.name() + " lacks");
  if (depths.length() == 0) return 1;

  // count[x] = number of multichains of the prefix ending at element x.
  std::vector<std::uint64_t> count(el.size(), 0);
  for (std::size_t x = 0; x < el.size(); ++x)
    if (el[x].depth() == depths[0]) count[x] = 1;
  for (std::size_t pos = 1; pos < depths.length(); ++pos) {
    std::vector<std::uint64_t> next(el.size(), 0);
    for (std::size_t x = 0; x < el.size(); ++x) {
      if (el[x].depth() != depths[pos]) continue;
      for (std::size_t y = 0; y < el.size(); ++y)
        if (count[y] && leq_tab(el[y], el[x])) next[x] += count[y];
    }
    count = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto c : count) total += c;
  return total;
}

// ---------------------------------------------------------------------------

std::string to_string(const HibiMonomial& m) {
  const auto& f = m.factors();
  if (f.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < f.size();) {
    std::size_t j = i;
    while (j < f.size() && f[j] == f[i]) ++j;
    if (!out.empty()) out += '*';
    out += "x" + to_string(f[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string to_string(const HibiPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (m.degree() == 0) out += mag.str();
    else out += (mag == 1 ? std::string() : mag.str() + "*") + to_string(m);
  }
  return out;
}

HibiPolynomial parse_hibi_polynomial(std::string_view text) {
  HibiPolynomial p;
  for (auto& term : parse_bracket_expression(text, 'x')) p.add_term(HibiMonomial(std::move(term.factors)), term.coefficient);
  return p;
}

}  // namespace hibilab
