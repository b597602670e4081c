#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "hibilab/error.hpp"
#include "hibilab/flagalg.hpp"
#include "hibilab/hibi.hpp"
#include "oracles.hpp"

using namespace hibilab;
using fixtures::col;

namespace {

Polynomial x(int a, int b) { return Polynomial::variable(x_var(a, b)); }

Integer evaluate_at(const Polynomial& p, const std::vector<std::vector<oracles::BigInt>>& m) {
  return p.evaluate([&](const Variable& v) { return m[v.row - 1][v.col - 1]; });
}

}  // namespace

TEST(Polynomial, ArithmeticAndPrinting) {
  const Polynomial p = x(1, 1) * x(2, 2) - x(2, 1) * x(1, 2);
  EXPECT_EQ(to_string(p), "+1*x[1,1]*x[2,2] -1*x[2,1]*x[1,2]");
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(pow(x(1, 1) + Polynomial(Integer(1)), 2).size(), 3u);
  EXPECT_EQ(to_string(Polynomial()), "0");
}

TEST(GlexOrder, VariablePriority) {
  const GlexOrder o;
  EXPECT_TRUE(o.greater(Monomial::variable(x_var(1, 1)), Monomial::variable(x_var(2, 1))));
  EXPECT_TRUE(o.greater(Monomial::variable(x_var(4, 1)), Monomial::variable(x_var(1, 2))));
  EXPECT_TRUE(o.greater(Monomial::variable(x_var(3, 3)) * Monomial::variable(x_var(3, 3)),
                        Monomial::variable(x_var(1, 1))));  // degree first
  EXPECT_EQ(o.compare(Monomial(), Monomial()), std::strong_ordering::equal);
}

TEST(Minor, SmallCases) {
  EXPECT_EQ(minor(col("3"), 4, 2), x(3, 1));
  EXPECT_EQ(minor(col("12"), 4, 2), x(1, 1) * x(2, 2) - x(2, 1) * x(1, 2));
  const Polynomial d = minor(col("123"), 3, 3);
  EXPECT_EQ(d.size(), 6u);
  EXPECT_EQ(d.evaluate([](const Variable&) { return Integer(1); }), 0);
  EXPECT_THROW(minor(col("123"), 4, 2), ValidationError);
  EXPECT_THROW(minor(col("15"), 4, 2), ValidationError);
}

TEST(Minor, AgreesWithLeibnizAtRandomMatrices) {
  std::mt19937_64 rng(29);
  const auto l = TableauLattice::bounded(5, 4);
  for (int t = 0; t < 50; ++t) {
    const auto m = oracles::random_matrix(5, 4, rng);
    for (const auto& c : l.elements())
      ASSERT_EQ(evaluate_at(minor(c, 5, 4), m), oracles::leibniz_minor(m, c.entries())) << to_string(c);
  }
}

TEST(InitialMonomial, IsTheDiagonal) {
  const auto [in, c] = initial_monomial(minor(col("23"), 4, 2));
  EXPECT_EQ(in, diagonal_monomial(col("23")));
  EXPECT_EQ(c, 1);
  EXPECT_EQ(to_string(in), "x[2,1]*x[3,2]");
  EXPECT_EQ(initial_monomial(x(1, 1)).first, Monomial::variable(x_var(1, 1)));
  EXPECT_THROW(initial_monomial(Polynomial()), ValidationError);
}

TEST(InitialMonomial, MultiplicativeOnMinors) {
  const auto l = TableauLattice::bounded(4, 3);
  for (const auto& i : l.elements())
    for (const auto& j : l.elements()) {
      const auto [in, c] = initial_monomial(minor(i, 4, 3) * minor(j, 4, 3));
      EXPECT_EQ(in, diagonal_monomial(i) * diagonal_monomial(j));
      EXPECT_EQ(c, 1);
    }
}

TEST(Expansion, PluckerRelation) {
  const auto l = TableauLattice::bounded(4, 2);
  const auto e = straightening_relation(col("14"), col("23"), l);
  ASSERT_EQ(e.terms.size(), 2u);
  EXPECT_EQ(e.terms[0].first, (std::vector<ColumnTableau>{col("13"), col("24")}));
  EXPECT_EQ(e.terms[0].second, 1);
  EXPECT_EQ(e.terms[1].first, (std::vector<ColumnTableau>{col("12"), col("34")}));
  EXPECT_EQ(e.terms[1].second, -1);
  EXPECT_EQ(to_string(e), "+1*D[[1,3]≤[2,4]] -1*D[[1,2]≤[3,4]]");
  EXPECT_EQ(reassemble(e, 4, 2), minor(col("14"), 4, 2) * minor(col("23"), 4, 2));
}

TEST(Expansion, StandardInputIsItself) {
  const auto l = TableauLattice::bounded(4, 2);
  for (const auto& chain : {std::vector<ColumnTableau>{col("12"), col("1")}, {col("13"), col("24")}}) {
    const auto e = expand_in_standard_basis(standard_monomial(chain, 4, 2), HibiMonomial(chain).shape(), l);
    ASSERT_EQ(e.terms.size(), 1u);
    EXPECT_EQ(e.terms[0].first, HibiMonomial(chain).factors());
    EXPECT_EQ(e.terms[0].second, 1);
  }
}

TEST(Expansion, ComparablePairIsRejected) {
  const auto l = TableauLattice::bounded(4, 2);
  EXPECT_THROW(straightening_relation(col("2"), col("13"), l), ValidationError);
  EXPECT_THROW(straightening_relation(col("13"), col("2"), l), ValidationError);
}

TEST(Expansion, PolynomialOutsideTheSpanIsReported) {
  const auto l = TableauLattice::bounded(3, 2);
  EXPECT_THROW(expand_in_standard_basis(x(1, 2) * x(1, 1), YoungDiagram({2}), l), ReductionError);
  EXPECT_THROW(expand_in_standard_basis(x(1, 1) * x(2, 2), YoungDiagram({1, 1}), l), ReductionError);
  EXPECT_THROW(expand_in_standard_basis(x(1, 1), YoungDiagram({1, 1, 1}), l), ValidationError);
}

TEST(Expansion, AllPairsInL53) {
  const auto l = TableauLattice::bounded(5, 3);
  std::mt19937_64 rng(31);
  std::vector<std::vector<std::vector<oracles::BigInt>>> matrices;
  for (int t = 0; t < 50; ++t) matrices.push_back(oracles::random_matrix(5, 3, rng));
  std::size_t pairs = 0;
  for (const auto& i : l.elements())
    for (const auto& j : l.elements()) {
      if (comparable(i, j) || !(i < j)) continue;
      ++pairs;
      const auto e = straightening_relation(i, j, l);
      const Polynomial product = minor(i, 5, 3) * minor(j, 5, 3);
      ASSERT_TRUE((reassemble(e, 5, 3) - product).is_zero());
      // Leading term and bracketing.
      ASSERT_EQ(e.terms.front().first, (std::vector<ColumnTableau>{meet(i, j), join(i, j)}));
      ASSERT_EQ(e.terms.front().second, 1);
      for (const auto& [chain, q] : e.terms) {
        ASSERT_TRUE(leq_tab(chain[0], meet(i, j)));
        ASSERT_TRUE(leq_tab(join(i, j), chain[1]));
        ASSERT_EQ(denominator(q), 1);
      }
      // Strictly decreasing trace, below in(product).
      const GlexOrder o;
      ASSERT_EQ(e.trace.front(), initial_monomial(product).first);
      for (std::size_t k = 1; k < e.trace.size(); ++k) ASSERT_TRUE(o.greater(e.trace[k - 1], e.trace[k]));
      // Both sides agree numerically.
      for (const auto& m : matrices) {
        oracles::BigInt rhs = 0;
        for (const auto& [chain, q] : e.terms) {
          oracles::BigInt t = numerator(q);
          for (const auto& c : chain) t *= oracles::leibniz_minor(m, c.entries());
          rhs += t;
        }
        ASSERT_EQ(oracles::leibniz_minor(m, i.entries()) * oracles::leibniz_minor(m, j.entries()), rhs);
      }
      // Dropping the side terms leaves the Hibi rewrite.
      const HibiMonomial lead(e.terms.front().first);
      ASSERT_EQ(lead, straighten(l, HibiMonomial({i, j})));
    }
  EXPECT_GT(pairs, 40u);
}

TEST(Sagbi, Pairs) {
  const auto l = TableauLattice::bounded(5, 3);
  EXPECT_TRUE(check_sagbi_pair(col("14"), col("23"), l));
  for (const auto& i : l.elements()) {
    EXPECT_EQ(initial_monomial(minor(i, 5, 3)).first, diagonal_monomial(i));
    for (const auto& j : l.elements()) EXPECT_TRUE(check_sagbi_pair(i, j, l));
  }
}

TEST(Sagbi, StandardMonomialsHaveDistinctInitialMonomialsAndFullRank) {
  const int n = 5, m = 3;
  const auto l = TableauLattice::bounded(n, m);
  for (int size = 1; size <= 4; ++size)
    for (const auto& shape : partitions(size, m, size)) {
      if (graded_dimension(l, shape) > 20) continue;
      std::vector<Polynomial> family;
      std::set<std::string> initials;
      for_each_ssyt(shape, n, [&](const Ssyt& t) {
        const Polynomial p = standard_monomial(ssyt_to_multichain(t), n, m);
        initials.insert(to_string(initial_monomial(p).first));
        family.push_back(p);
      });
      EXPECT_EQ(initials.size(), family.size()) << to_string(shape);
      EXPECT_EQ(exact_rank(family), family.size()) << to_string(shape);
    }
}

TEST(ExactRank, DetectsDependence) {
  const std::vector<Polynomial> family{x(1, 1), x(2, 1), x(1, 1) + x(2, 1)};
  EXPECT_EQ(exact_rank(family), 2u);
  EXPECT_EQ(exact_rank(std::vector<Polynomial>{}), 0u);
}

TEST(Invariance, MinorsOfL43) {
  for (const auto& c : TableauLattice::bounded(4, 3).elements()) EXPECT_TRUE(check_unipotent_invariance(c, 4, 3));
  EXPECT_TRUE(check_unipotent_invariance(col("2"), 4, 1));
  EXPECT_FALSE(is_unipotent_invariant(x(1, 2), 4, 3));
  EXPECT_TRUE(is_unipotent_invariant(x(3, 1), 4, 3));
}

TEST(GradedComponentDimension, Examples) {
  EXPECT_EQ(graded_component_dimension(TableauLattice::bounded(3, 3), YoungDiagram({1}), 3), 3u);
  EXPECT_EQ(graded_component_dimension(TableauLattice::bounded(3, 3), YoungDiagram({2, 1}), 3), 8u);
  EXPECT_EQ(graded_component_dimension(TableauLattice::bounded(4, 2), YoungDiagram({1, 1}), 4), 6u);
  EXPECT_THROW(graded_component_dimension(TableauLattice::bounded(4, 2), YoungDiagram({1, 1, 1}), 4),
               ValidationError);
}
