#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hibilab/numbers.hpp"

namespace hibilab {

/// A matrix coordinate symbol[row, col].  The flag algebra lives on
/// x[a,b]; u[p,q] are the auxiliary unipotent coordinates.
struct Variable {
  char symbol = 'x';
  int row = 1;
  int col = 1;

  bool operator==(const Variable&) const = default;
};

/// Variable priority: x[a,b] > x[c,d] iff b < d, or b == d and a < c.
/// `precedes(v, w)` is true when v is the larger variable.
bool precedes(const Variable& v, const Variable& w);

/// Sparse power product; exponents are positive and sorted by priority.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::pair<Variable, int>> powers);
  static Monomial variable(Variable v, int exponent = 1);

  const std::vector<std::pair<Variable, int>>& powers() const { return powers_; }
  int degree() const { return degree_; }
  int exponent(const Variable& v) const;
  bool is_one() const { return powers_.empty(); }

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::pair<Variable, int>> powers_;
  int degree_ = 0;
};

Monomial operator*(const Monomial& a, const Monomial& b);
std::string to_string(const Monomial& m);

/// Graded lexicographic order: total degree, then the first differing
/// exponent in variable priority order.
struct GlexOrder {
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

/// Map ordering with the glex-greatest monomial first.
struct GlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return GlexOrder{}.greater(a, b); }
};

/// Sparse polynomial with exact integer coefficients, terms kept in
/// descending glex order; no zero coefficients.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Integer, GlexDescending>;

  Polynomial() = default;
  Polynomial(const Integer& constant);
  Polynomial(const Monomial& m, Integer c = 1);
  static Polynomial variable(Variable v) { return Polynomial(Monomial::variable(v)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  void add_term(const Monomial& m, const Integer& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Integer& c);
  bool operator==(const Polynomial&) const = default;

  /// Exact value under an assignment of integers to variables.
  Integer evaluate(const std::function<Integer(const Variable&)>& value) const;
  /// Replaces every variable by a polynomial and expands.
  Polynomial substitute(const std::function<Polynomial(const Variable&)>& image) const;

 private:
  Terms terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Integer& c);
Polynomial pow(const Polynomial& p, int e);

/// "+c*x[a,b]^e*..." terms in descending glex order; "0" when zero.
std::string to_string(const Polynomial& p);

}  // namespace hibilab
