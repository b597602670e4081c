#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "hibilab/error.hpp"
#include "hibilab/gtpatterns.hpp"
#include "hibilab/posets.hpp"
#include "oracles.hpp"

using namespace hibilab;
using fixtures::col;

namespace {

template <class T>
std::set<std::pair<T, T>> as_set(const std::vector<std::pair<T, T>>& v) {
  return {v.begin(), v.end()};
}

std::set<std::pair<ColumnTableau, ColumnTableau>> lattice_edges(const TableauLattice& l) {
  std::set<std::pair<ColumnTableau, ColumnTableau>> out;
  for (auto [hi, lo] : hasse(l).edges) out.emplace(l.elements()[hi], l.elements()[lo]);
  return out;
}

std::set<std::pair<GtNode, GtNode>> gt_edges(const GtPoset& p) {
  std::set<std::pair<GtNode, GtNode>> out;
  for (auto [hi, lo] : cover_relations(p.nodes(), gt_geq)) out.emplace(p.nodes()[hi], p.nodes()[lo]);
  return out;
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(TableauOrder, Examples) {
  EXPECT_TRUE(leq_tab(col("13"), col("2")));
  EXPECT_FALSE(leq_tab(col("14"), col("23")));
  EXPECT_FALSE(leq_tab(col("23"), col("14")));
  EXPECT_FALSE(comparable(col("14"), col("23")));
  EXPECT_TRUE(leq_tab(col("123"), col("123")));
}

TEST(TableauOrder, JoinAndMeet) {
  EXPECT_EQ(join(col("14"), col("23")), col("24"));
  EXPECT_EQ(meet(col("14"), col("23")), col("13"));
  EXPECT_EQ(join(col("2"), col("34")), col("3"));
  EXPECT_EQ(meet(col("2"), col("34")), col("24"));
  EXPECT_EQ(join(col("134"), col("134")), col("134"));
  EXPECT_EQ(meet(col("134"), col("134")), col("134"));
}

TEST(TableauLattice, HasseDiagramOfL4) {
  const auto l = TableauLattice::full(4);
  EXPECT_EQ(l.size(), 15u);
  EXPECT_EQ(lattice_edges(l), as_set(fixtures::l4_edges()));
  EXPECT_EQ(l.bottom(), col("1234"));
  EXPECT_EQ(l.top(), col("4"));
  EXPECT_EQ(l.rank(col("4")), 9);
}

TEST(TableauLattice, FamilySizes) {
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(TableauLattice::full(n).size(), (1u << n) - 1);
    for (int m = 1; m <= n; ++m) EXPECT_EQ(TableauLattice::grassmannian(n, m).size(), binomial(n, m));
  }
  EXPECT_EQ(TableauLattice::bounded(4, 2).size(), 10u);
  EXPECT_THROW(TableauLattice::full(0), ValidationError);
  EXPECT_THROW(TableauLattice::grassmannian(3, 4), ValidationError);
}

TEST(TableauLattice, SymplecticAndBranchingMembership) {
  const auto p = TableauLattice::symplectic(4);
  EXPECT_TRUE(p.contains(col("13")));
  EXPECT_TRUE(p.contains(col("4")));
  EXPECT_FALSE(p.contains(col("12")));
  EXPECT_FALSE(p.contains(col("123")));

  const auto b = TableauLattice::branching(5, 3, 2);
  EXPECT_TRUE(b.contains(col("12")));
  EXPECT_TRUE(b.contains(col("345")));
  EXPECT_TRUE(b.contains(col("124")));
  EXPECT_TRUE(b.contains(col("13")));
  EXPECT_TRUE(b.contains(col("123")));
  EXPECT_FALSE(b.contains(col("2")));
  EXPECT_FALSE(b.contains(col("24")));
  EXPECT_FALSE(b.contains(col("1345")));
}

TEST(TableauLattice, EveryFamilyIsDistributiveExhaustivelyForSmallN) {
  std::vector<TableauLattice> lattices;
  for (int n = 1; n <= 4; ++n) {
    lattices.push_back(TableauLattice::full(n));
    for (int m = 1; m <= n; ++m) {
      lattices.push_back(TableauLattice::bounded(n, m));
      lattices.push_back(TableauLattice::grassmannian(n, m));
      for (int k = 1; k < n; ++k) lattices.push_back(TableauLattice::branching(n, m, k));
    }
  }
  lattices.push_back(TableauLattice::symplectic(2));
  lattices.push_back(TableauLattice::symplectic(4));
  for (const auto& l : lattices) {
    const auto& el = l.elements();
    for (const auto& a : el)
      for (const auto& b : el)
        for (const auto& c : el) {
          ASSERT_EQ(join(a, meet(b, c)), meet(join(a, b), join(a, c))) << l.name();
          ASSERT_EQ(meet(a, join(b, c)), join(meet(a, b), meet(a, c))) << l.name();
        }
  }
}

TEST(TableauLattice, DistributiveOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (int n = 5; n <= 7; ++n) {
    const auto l = TableauLattice::full(n);
    std::uniform_int_distribution<std::size_t> pick(0, l.size() - 1);
    for (int t = 0; t < 10000; ++t) {
      const auto &a = l.elements()[pick(rng)], &b = l.elements()[pick(rng)], &c = l.elements()[pick(rng)];
      ASSERT_EQ(join(a, meet(b, c)), meet(join(a, b), join(a, c)));
    }
  }
}

TEST(TableauLattice, ChainOrderIsALinearExtension) {
  const auto l = TableauLattice::full(5);
  const auto& el = l.elements();
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(leq_tab(el[i], el[j]) && !(el[i] == el[j]));
}

TEST(TableauLattice, RanksAreAdditiveOverJoinAndMeet) {
  const auto l = TableauLattice::full(5);
  for (const auto& a : l.elements())
    for (const auto& b : l.elements())
      EXPECT_EQ(l.rank(join(a, b)) + l.rank(meet(a, b)), l.rank(a) + l.rank(b));
}

TEST(GtPoset, ClosedFormMatchesTransitiveClosure) {
  for (int n = 1; n <= 6; ++n) {
    const oracles::GammaClosure ref(n);
    for (std::size_t a = 0; a < ref.nodes.size(); ++a)
      for (std::size_t b = 0; b < ref.nodes.size(); ++b) {
        const GtNode za{ref.nodes[a].first, ref.nodes[a].second}, zb{ref.nodes[b].first, ref.nodes[b].second};
        ASSERT_EQ(gt_geq(za, zb), static_cast<bool>(ref.geq[a][b])) << to_string(za) << " " << to_string(zb);
      }
  }
}

TEST(GtPoset, HasseDiagramOfGamma4) {
  const auto g = GtPoset::full(4);
  EXPECT_EQ(g.size(), 10u);
  EXPECT_EQ(gt_edges(g), as_set(fixtures::gamma4_edges()));
  EXPECT_EQ(gt_edges(g).size(), 12u);
  EXPECT_TRUE(hasse(GtPoset::full(1)).edges.empty());
}

TEST(GtPoset, BoundedNodeSet) {
  const auto g = GtPoset::bounded(5, 3);
  for (const auto& z : g.nodes()) EXPECT_LE(z.index, 3);
  EXPECT_EQ(g.size(), 1u + 2 + 3 + 3 + 3);
}

TEST(Hasse, TransitiveClosureRecoversTheOrder) {
  const auto l = TableauLattice::full(4);
  const auto h = hasse(l);
  const std::size_t n = l.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
  for (auto [hi, lo] : h.edges) reach[hi][lo] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(reach[i][j], leq_tab(l.elements()[j], l.elements()[i]));
}

TEST(Hasse, DotIsSortedAndDeterministic) {
  const std::string dot = to_dot(hasse(GtPoset::full(2)), "Gamma_2");
  EXPECT_EQ(dot,
            "digraph \"Gamma_2\" {\n"
            "  \"z^(1)_1\";\n  \"z^(2)_1\";\n  \"z^(2)_2\";\n"
            "  \"z^(1)_1\" -> \"z^(2)_2\";\n  \"z^(2)_1\" -> \"z^(1)_1\";\n}\n");
}

TEST(JoinIrreducibles, DrawnSetOfL4) {
  const auto ji = join_irreducibles(TableauLattice::full(4));
  const auto expected = fixtures::l4_join_irreducibles();
  EXPECT_EQ(std::set<ColumnTableau>(ji.begin(), ji.end()), std::set<ColumnTableau>(expected.begin(), expected.end()));
}

TEST(JoinIrreducibles, L2ByDefinition) {
  // L_2 is the chain [1,2] < [1] < [2]; every element above the bottom is irreducible.
  const auto ji = join_irreducibles(TableauLattice::full(2));
  EXPECT_EQ(std::set<ColumnTableau>(ji.begin(), ji.end()), (std::set<ColumnTableau>{col("1"), col("2")}));
  EXPECT_EQ(join_irreducibles(TableauLattice::full(1)), std::vector<ColumnTableau>{});
}

TEST(JoinIrreducibles, WithAdjoinedTopTheyAreIsomorphicToGamma) {
  for (int n = 1; n <= 5; ++n) {
    const auto l = TableauLattice::full(n);
    const auto gamma = GtPoset::full(n);
    // phi(z) = column of the complement of the down-set of z; the top of Gamma_n is sent to a new top.
    std::vector<std::optional<ColumnTableau>> image;
    for (const auto& z : gamma.nodes()) {
      if (z == GtNode{n, 1}) {
        image.push_back(std::nullopt);
        continue;
      }
      std::vector<GtNode> up;
      for (const auto& w : gamma.nodes())
        if (!gt_geq(z, w)) up.push_back(w);
      image.push_back(indicator_to_column(indicator_of(n, up)));
    }
    auto geq = [](const std::optional<ColumnTableau>& a, const std::optional<ColumnTableau>& b) {
      if (!a) return true;
      if (!b) return false;
      return leq_tab(*b, *a);
    };
    const auto ji = join_irreducibles(l);
    std::set<ColumnTableau> hit;
    for (std::size_t a = 0; a < image.size(); ++a) {
      if (image[a]) {
        EXPECT_TRUE(std::find(ji.begin(), ji.end(), *image[a]) != ji.end());
        hit.insert(*image[a]);
      }
      for (std::size_t b = 0; b < image.size(); ++b)
        EXPECT_EQ(gt_geq(gamma.nodes()[a], gamma.nodes()[b]), geq(image[a], image[b]));
    }
    EXPECT_EQ(hit.size(), ji.size());
    // Edgewise: covers of Gamma_n map to covers of the image poset.
    std::vector<std::optional<ColumnTableau>> elems = image;
    const auto gamma_covers = cover_relations(gamma.nodes(), gt_geq);
    const auto image_covers = cover_relations(elems, geq);
    EXPECT_EQ(std::set(gamma_covers.begin(), gamma_covers.end()), std::set(image_covers.begin(), image_covers.end()));
  }
}

TEST(UpSets, CountsAgreeWithBruteForce) {
  EXPECT_EQ(count_order_increasing_subsets(GtPoset::full(3)), 8u);
  EXPECT_EQ(count_order_increasing_subsets(GtPoset::full(4)), 16u);
  EXPECT_EQ(count_order_increasing_subsets(GtPoset(3, {})), 1u);
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(count_order_increasing_subsets(GtPoset::full(n)), oracles::GammaClosure(n).count_up_sets());
    EXPECT_EQ(order_increasing_subsets(GtPoset::full(n)).size() - 1, TableauLattice::full(n).size());
  }
}

TEST(UpSets, EveryListedSetIsUpClosedAndDistinct) {
  const auto sets = order_increasing_subsets(GtPoset::full(4));
  std::set<std::vector<GtNode>> seen(sets.begin(), sets.end());
  EXPECT_EQ(seen.size(), sets.size());
  for (const auto& s : sets)
    for (const auto& a : s)
      for (const auto& z : GtPoset::full(4).nodes())
        if (gt_geq(z, a)) {
          EXPECT_TRUE(std::binary_search(s.begin(), s.end(), z));
        }
}

TEST(UpSets, GuardRejectsLargePosets) {
  EXPECT_THROW(count_order_increasing_subsets(GtPoset::full(7)), LimitExceeded);
  EXPECT_NO_THROW(count_order_increasing_subsets(GtPoset::full(7), 28));
}

TEST(AssociatedSubposet, DrawnDiagrams) {
  for (const auto& fig : fixtures::subposet_drawings()) {
    const auto l = fixtures::make_lattice(fig);
    ASSERT_EQ(l.name(), fig.label);
    EXPECT_EQ(default_policy(l.family()), fig.policy) << fig.label;
    const GtPoset g = associated_gt_subposet(l, fig.policy);
    auto expected = fig.node_list();
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(g.nodes(), expected) << fig.label;
    EXPECT_EQ(gt_edges(g), as_set(fig.edges())) << fig.label;
  }
}

TEST(AssociatedSubposet, GrassmannianUpSetsCountColumns) {
  for (int n = 1; n <= 7; ++n)
    for (int m = 1; m <= std::min(n, 3); ++m) {
      const auto l = TableauLattice::grassmannian(n, m);
      EXPECT_EQ(count_order_increasing_subsets(associated_gt_subposet(l, ConstantPolicy::Drop)), binomial(n, m))
          << l.name();
    }
}

TEST(AssociatedSubposet, FullLatticeKeepsEverything) {
  for (int n = 1; n <= 5; ++n)
    EXPECT_EQ(associated_gt_subposet(TableauLattice::full(n), ConstantPolicy::KeepAll), GtPoset::full(n));
}
