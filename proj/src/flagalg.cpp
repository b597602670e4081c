#include "hibilab/flagalg.hpp"

#include <algorithm>
#include <map>

#include "hibilab/error.hpp"
#include "hibilab/hibi.hpp"

namespace hibilab {

namespace {

void check_minor_bounds(const ColumnTableau& c, int n, int m) {
  if (c.depth() > m)
    throw ValidationError("minor " + to_string(c) + " is deeper than m = " + std::to_string(m));
  if (c.max_entry() > n) throw ValidationError("minor " + to_string(c) + " has rows above n = " + std::to_string(n));
  if (c.depth() > kMaxMinorDepth) throw LimitExceeded("minor depth is limited to " + std::to_string(kMaxMinorDepth));
}

// det of the rows in `rows` against columns 1..rows.size(), by expansion
// along the last column, memoized on the row subset.
const Polynomial& leading_minor(const std::vector<int>& rows, std::map<std::vector<int>, Polynomial>& memo) {
  if (auto it = memo.find(rows); it != memo.end()) return it->second;
  Polynomial det;
  const int k = static_cast<int>(rows.size());
  if (k == 0) {
    det = Polynomial(Integer(1));
  } else {
    for (int p = 0; p < k; ++p) {
      std::vector<int> rest = rows;
      rest.erase(rest.begin() + p);
      Polynomial term = Polynomial::variable(x_var(rows[p], k)) * leading_minor(rest, memo);
      if ((p + k - 1) % 2) term *= Integer(-1);
      det += term;
    }
  }
  return memo.emplace(rows, std::move(det)).first->second;
}

}  // namespace

Polynomial minor(const ColumnTableau& c, int n, int m) {
  check_minor_bounds(c, n, m);
  std::map<std::vector<int>, Polynomial> memo;
  return leading_minor(c.entries(), memo);
}

Polynomial standard_monomial(const std::vector<ColumnTableau>& chain, int n, int m) {
  Polynomial out(Integer(1));
  for (const auto& c : chain) out = out * minor(c, n, m);
  return out;
}

Monomial diagonal_monomial(const ColumnTableau& c) {
  std::vector<std::pair<Variable, int>> powers;
  for (int k = 0; k < c.depth(); ++k) powers.emplace_back(x_var(c[k], k + 1), 1);
  return Monomial(std::move(powers));
}

std::pair<Monomial, Integer> initial_monomial(const Polynomial& p, const GlexOrder& order) {
  if (p.is_zero()) throw ValidationError("the zero polynomial has no initial monomial");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it)
    if (order.greater(it->first, best->first)) best = it;
  return {best->first, best->second};
}

// ---------------------------------------------------------------------------

StandardMonomialExpansion expand_in_standard_basis(const Polynomial& p, const YoungDiagram& shape,
                                                   const TableauLattice& l) {
  const int n = l.n(), m = l.m();
  const YoungDiagram lambda = shape.trimmed();
  if (lambda.depth() > m) throw ValidationError("shape " + to_string(shape) + " is deeper than m = " + std::to_string(m));
  const std::uint64_t bound = graded_dimension(l, lambda);

  StandardMonomialExpansion out{lambda, {}, {}};
  std::map<ColumnTableau, Polynomial> minors;
  auto delta = [&](const ColumnTableau& c) -> const Polynomial& {
    auto it = minors.find(c);
    if (it == minors.end()) it = minors.emplace(c, minor(c, n, m)).first;
    return it->second;
  };

  Polynomial rest = p;
  while (!rest.is_zero()) {
    if (out.terms.size() == bound)
      throw ReductionError("reduction exceeded " + std::to_string(bound) + " steps for shape " + to_string(lambda));
    const auto [lead, coef] = initial_monomial(rest);
    out.trace.push_back(lead);

    // Row b of T is the multiset of a with x[a,b] dividing in(p).
    std::vector<std::vector<int>> rows(lambda.depth());
    for (const auto& [v, e] : lead.powers()) {
      if (v.symbol != 'x' || v.row < 1 || v.row > n || v.col < 1 || v.col > lambda.depth())
        throw ReductionError("initial monomial " + to_string(lead) + " lies outside shape " + to_string(lambda));
      rows[v.col - 1].insert(rows[v.col - 1].end(), e, v.row);
    }
    for (int b = 0; b < lambda.depth(); ++b) {
      std::sort(rows[b].begin(), rows[b].end());
      if (static_cast<int>(rows[b].size()) != lambda[b])
        throw ReductionError("initial monomial " + to_string(lead) + " does not have shape " + to_string(lambda));
    }
    std::vector<ColumnTableau> chain;
    try {
      chain = ssyt_to_multichain(Ssyt(lambda, rows));
    } catch (const InvariantViolation& e) {
      throw ReductionError("initial monomial " + to_string(lead) + " is not that of a standard monomial (" +
                           e.what() + ")");
    }
    for (const auto& c : chain)
      if (!l.contains(c)) throw ReductionError(to_string(c) + " is not an element of " + l.name());

    Polynomial delta_t(Integer(1));
    for (const auto& c : chain) delta_t = delta_t * delta(c);
    const auto [delta_lead, delta_coef] = initial_monomial(delta_t);
    if (!(delta_lead == lead)) throw ReductionError("in(Delta_T) does not reproduce " + to_string(lead));

    const Rational q(coef, delta_coef);
    if (denominator(q) != 1) throw ReductionError("non-integral coefficient " + q.str());
    rest -= delta_t * numerator(q);
    out.terms.emplace_back(std::move(chain), q);
  }
  return out;
}

StandardMonomialExpansion straightening_relation(const ColumnTableau& i, const ColumnTableau& j,
                                                 const TableauLattice& l) {
  if (comparable(i, j))
    throw ValidationError(to_string(i) + " and " + to_string(j) + " are comparable; no straightening relation");
  if (!l.contains(i) || !l.contains(j)) throw ValidationError("both columns must lie in " + l.name());
  const Polynomial product = minor(i, l.n(), l.m()) * minor(j, l.n(), l.m());
  return expand_in_standard_basis(product, HibiMonomial({i, j}).shape(), l);
}

Polynomial reassemble(const StandardMonomialExpansion& e, int n, int m) {
  Polynomial out;
  for (const auto& [chain, q] : e.terms) {
    if (denominator(q) != 1) throw ReductionError("non-integral coefficient " + q.str());
    out += standard_monomial(chain, n, m) * numerator(q);
  }
  return out;
}

bool check_sagbi_pair(const ColumnTableau& i, const ColumnTableau& j, const TableauLattice& l,
                      const GlexOrder& order) {
  const int n = l.n(), m = l.m();
  auto in = [&](const ColumnTableau& c) { return initial_monomial(minor(c, n, m), order).first; };
  return in(i) * in(j) == in(join(i, j)) * in(meet(i, j));
}

bool is_unipotent_invariant(const Polynomial& p, int n, int m) {
  for (const auto& [mono, c] : p.terms())
    for (const auto& [v, e] : mono.powers())
      if (v.symbol != 'x' || v.row > n || v.col > m)
        throw ValidationError("variable outside the n x m coordinate matrix");
  // (X u)[a,b] = x[a,b] + sum_{c<b} x[a,c] u[c,b].
  const Polynomial moved = p.substitute([](const Variable& v) {
    Polynomial image = Polynomial::variable(v);
    for (int c = 1; c < v.col; ++c)
      image += Polynomial(Monomial({{x_var(v.row, c), 1}, {Variable{'u', c, v.col}, 1}}));
    return image;
  });
  return moved == p;
}

bool check_unipotent_invariance(const ColumnTableau& c, int n, int m) {
  return is_unipotent_invariant(minor(c, n, m), n, m);
}

std::uint64_t graded_component_dimension(const TableauLattice& l, const YoungDiagram& shape, int n) {
  if (n != l.n()) throw ValidationError("lattice and n disagree");
  if (shape.depth() > l.m())
    throw ValidationError("shape " + to_string(shape) + " is deeper than m = " + std::to_string(l.m()));
  return graded_dimension(l, shape);
}

std::size_t exact_rank(std::span<const Polynomial> family) {
  std::vector<Monomial> basis;
  for (const auto& p : family)
    for (const auto& [m, c] : p.terms())
      if (std::find(basis.begin(), basis.end(), m) == basis.end()) basis.push_back(m);

  std::vector<std::vector<Rational>> a(family.size(), std::vector<Rational>(basis.size()));
  for (std::size_t r = 0; r < family.size(); ++r)
    for (const auto& [m, c] : family[r].terms())
      a[r][std::find(basis.begin(), basis.end(), m) - basis.begin()] = Rational(c);

  std::size_t rank = 0;
  for (std::size_t col = 0; col < basis.size() && rank < a.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[rank][col];
      for (std::size_t k = col; k < basis.size(); ++k) a[r][k] -= factor * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::string to_string(const StandardMonomialExpansion& e) {
  if (e.terms.empty()) return "0";
  std::string out;
  for (const auto& [chain, q] : e.terms) {
    if (!out.empty()) out += ' ';
    out += (q < 0 ? "-" : "+") + Rational(abs(q)).str() + "*D[";
    for (std::size_t i = 0; i < chain.size(); ++i) out += (i ? "≤" : "") + to_string(chain[i]);
    out += "]";
  }
  return out;
}

}  // namespace hibilab
