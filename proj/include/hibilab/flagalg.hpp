#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hibilab/numbers.hpp"
#include "hibilab/polynomial.hpp"
#include "hibilab/posets.hpp"

namespace hibilab {

inline constexpr int kMaxMinorDepth = 8;

/// x[a,b].
inline Variable x_var(int row, int col) { return {'x', row, col}; }

/// delta_I: determinant of rows i1..ik and columns 1..k of the n x m
/// coordinate matrix.  Throws ValidationError if depth > m, an entry > n,
/// or depth > kMaxMinorDepth.
Polynomial minor(const ColumnTableau& c, int n, int m);

/// Delta_T for a multichain T: the product of its minors.
Polynomial standard_monomial(const std::vector<ColumnTableau>& chain, int n, int m);

/// x[i1,1] x[i2,2] ... x[ik,k].
Monomial diagonal_monomial(const ColumnTableau& c);

/// The glex-greatest monomial and its coefficient.  Throws ValidationError
/// on the zero polynomial.
std::pair<Monomial, Integer> initial_monomial(const Polynomial& p, const GlexOrder& order = {});

/// Coefficients of a polynomial in the standard monomial basis of one shape.
struct StandardMonomialExpansion {
  YoungDiagram shape;
  /// (multichain, coefficient) in reduction order: strictly decreasing
  /// initial monomials.
  std::vector<std::pair<std::vector<ColumnTableau>, Rational>> terms;
  /// in(p) at the start of each reduction step.
  std::vector<Monomial> trace;
};

/// Triangular reduction: repeatedly read the multichain off in(p) and
/// subtract coefficient * Delta_T.  Throws ReductionError if in(p) is not
/// the initial monomial of a standard monomial of `shape` in `l`, if a
/// coefficient is not integral, or if the step bound (the number of
/// standard monomials of `shape`) is exceeded.
StandardMonomialExpansion expand_in_standard_basis(const Polynomial& p, const YoungDiagram& shape,
                                                   const TableauLattice& l);

/// Expansion of delta_I * delta_J for an incomparable pair.  Throws
/// ValidationError when the pair is comparable.
StandardMonomialExpansion straightening_relation(const ColumnTableau& i, const ColumnTableau& j,
                                                 const TableauLattice& l);

/// Sum of coefficient * Delta_T over the expansion.
Polynomial reassemble(const StandardMonomialExpansion& e, int n, int m);

/// in(delta_I) in(delta_J) == in(delta_{I v J}) in(delta_{I ^ J}).
bool check_sagbi_pair(const ColumnTableau& i, const ColumnTableau& j, const TableauLattice& l,
                      const GlexOrder& order = {});

/// p(X u) == p(X) with u upper unitriangular and symbolic above the
/// diagonal (u[p,q], p < q <= m).
bool is_unipotent_invariant(const Polynomial& p, int n, int m);
bool check_unipotent_invariance(const ColumnTableau& c, int n, int m);

/// Number of standard monomials of `shape` in a depth-bounded lattice.
/// Throws ValidationError if the shape is deeper than l.m().
std::uint64_t graded_component_dimension(const TableauLattice& l, const YoungDiagram& shape, int n);

/// Rank over Q of a family of polynomials in the monomial basis.
std::size_t exact_rank(std::span<const Polynomial> family);

/// "+c*D[I1≤I2≤...]" terms separated by single spaces.
std::string to_string(const StandardMonomialExpansion& e);

}  // namespace hibilab
