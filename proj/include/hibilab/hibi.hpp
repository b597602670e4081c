#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hibilab/gtpatterns.hpp"
#include "hibilab/numbers.hpp"
#include "hibilab/posets.hpp"

namespace hibilab {

/// A product of lattice variables x_I, i.e. a multiset of column tableaux.
/// Factors are kept in chain order.
class HibiMonomial {
 public:
  HibiMonomial() = default;
  explicit HibiMonomial(std::vector<ColumnTableau> factors);

  const std::vector<ColumnTableau>& factors() const& { return factors_; }
  std::vector<ColumnTableau> factors() && { return std::move(factors_); }
  std::size_t degree() const { return factors_.size(); }
  /// Transpose of the sorted depth sequence.
  YoungDiagram shape() const;

  auto operator<=>(const HibiMonomial&) const = default;
  bool operator==(const HibiMonomial&) const = default;

 private:
  std::vector<ColumnTableau> factors_;
};

HibiMonomial operator*(const HibiMonomial& a, const HibiMonomial& b);

/// Formal sum of monomials with rational coefficients; no zero terms.
class HibiPolynomial {
 public:
  HibiPolynomial() = default;
  HibiPolynomial(const HibiMonomial& m, Rational c = 1);

  const std::map<HibiMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const HibiMonomial& m, const Rational& c);

  HibiPolynomial& operator+=(const HibiPolynomial& other);
  HibiPolynomial& operator-=(const HibiPolynomial& other);
  bool operator==(const HibiPolynomial&) const = default;

 private:
  std::map<HibiMonomial, Rational> terms_;
};

HibiPolynomial operator+(HibiPolynomial a, const HibiPolynomial& b);
HibiPolynomial operator-(HibiPolynomial a, const HibiPolynomial& b);

/// True iff the factors form a multichain.
bool is_standard(const HibiMonomial& m);

/// Sum of rank(alpha)^2 over factors; strictly increases with each rewrite.
std::int64_t termination_measure(const TableauLattice& l, const HibiMonomial& m);

struct RewriteStep {
  ColumnTableau alpha;
  ColumnTableau beta;
  std::int64_t measure_before;
  std::int64_t measure_after;
};

/// Normal form under x_a x_b -> x_{a v b} x_{a ^ b}, rewriting the
/// lexicographically first incomparable pair of the sorted factors.
/// Throws ValidationError if a factor is not in `l`.
HibiMonomial straighten(const TableauLattice& l, const HibiMonomial& m, std::vector<RewriteStep>* trace = nullptr);

/// As above, choosing the incomparable pair uniformly at random.
HibiMonomial straighten_random(const TableauLattice& l, const HibiMonomial& m, std::mt19937_64& rng,
                               std::vector<RewriteStep>* trace = nullptr);

HibiPolynomial straighten(const TableauLattice& l, const HibiPolynomial& p);

/// psi: x_I -> f_I extended multiplicatively.
GtPattern hibi_to_gt(const HibiMonomial& m, int n);

/// Number of standard monomials (multichains of `l`) of the given shape.
/// Throws ValidationError if some column length of `shape` has no element
/// of that depth in `l`.
std::uint64_t graded_dimension(const TableauLattice& l, const YoungDiagram& shape);

/// "x[1,3]*x[2,4]", with "^e" for repeated factors; "1" for the empty product.
std::string to_string(const HibiMonomial& m);
/// "x[1,3]*x[2,4] - 2*x[1,2]*x[3,4]"; "0" for the zero polynomial.
std::string to_string(const HibiPolynomial& p);
/// Parses the printed form.  Throws ValidationError on malformed text.
HibiPolynomial parse_hibi_polynomial(std::string_view text);

}  // namespace hibilab
