#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hibilab/tableaux.hpp"

namespace hibilab {

// ---------------------------------------------------------------------------
// Column tableaux as a distributive lattice.

/// a <=_tab b, i.e. b is at most as deep as a and dominates it entrywise.
bool leq_tab(const ColumnTableau& a, const ColumnTableau& b);
bool comparable(const ColumnTableau& a, const ColumnTableau& b);

/// Entrywise max over the shorter length.
ColumnTableau join(const ColumnTableau& a, const ColumnTableau& b);
/// Entrywise min over the shorter length, followed by the longer tail.
ColumnTableau meet(const ColumnTableau& a, const ColumnTableau& b);

// ---------------------------------------------------------------------------
// The Gelfand-Tsetlin poset.

/// z^(level)_index, 1 <= index <= level.
struct GtNode {
  int level = 1;
  int index = 1;

  auto operator<=>(const GtNode&) const = default;
};

std::string to_string(GtNode z);

/// Order generated by z^(i+1)_j >= z^(i)_j >= z^(i+1)_(j+1).  Closed form:
/// a >= b iff index(b) >= index(a) and level(a)-index(a) >= level(b)-index(b).
bool gt_geq(GtNode a, GtNode b);

/// A subposet of Gamma_n given by an explicit node list.
class GtPoset {
 public:
  static GtPoset full(int n);
  /// Gamma_{n,m}: nodes with index <= m.
  static GtPoset bounded(int n, int m);
  GtPoset(int n, std::vector<GtNode> nodes);

  int n() const { return n_; }
  const std::vector<GtNode>& nodes() const& { return nodes_; }
  std::vector<GtNode> nodes() && { return std::move(nodes_); }
  std::size_t size() const { return nodes_.size(); }
  bool contains(GtNode z) const;
  bool geq(GtNode a, GtNode b) const { return gt_geq(a, b); }

  bool operator==(const GtPoset&) const = default;

 private:
  int n_;
  std::vector<GtNode> nodes_;  // sorted
};

// ---------------------------------------------------------------------------
// Lattices of column tableaux.

enum class Family { Full, Bounded, Grass, Symplectic, Branching };

std::string to_string(Family f);

class TableauLattice {
 public:
  /// L_n.
  static TableauLattice full(int n);
  /// L_{n,m}: depth <= m.
  static TableauLattice bounded(int n, int m);
  /// G_{n,m}: depth == m.
  static TableauLattice grassmannian(int n, int m);
  /// P_n, n = 2m: I >=_tab [1,3,...,2m-1] with depth <= m.
  static TableauLattice symplectic(int n);
  /// B_{n,m,k}: columns [1..p], [i1..iq], [1..r, j1..js] with all i, j > k.
  static TableauLattice branching(int n, int m, int k);

  Family family() const { return family_; }
  int n() const { return n_; }
  int m() const { return m_; }
  int k() const { return k_; }
  std::string name() const;

  /// Elements in chain order (a linear extension of <=_tab).
  const std::vector<ColumnTableau>& elements() const& { return elements_; }
  std::vector<ColumnTableau> elements() && { return std::move(elements_); }
  std::size_t size() const { return elements_.size(); }
  bool contains(const ColumnTableau& c) const;
  std::optional<std::size_t> index_of(const ColumnTableau& c) const;

  const ColumnTableau& bottom() const { return elements_.front(); }
  const ColumnTableau& top() const { return elements_.back(); }

  /// Height above the bottom element.
  int rank(const ColumnTableau& c) const;

 private:
  TableauLattice(Family family, int n, int m, int k, std::vector<ColumnTableau> elements);

  Family family_;
  int n_;
  int m_;
  int k_;
  std::vector<ColumnTableau> elements_;
  std::vector<ColumnTableau> sorted_;  // lexicographic, for lookup
  std::vector<std::size_t> sorted_pos_;
  std::vector<int> rank_;
};

// ---------------------------------------------------------------------------
// Hasse diagrams.

struct HasseDiagram {
  std::vector<std::string> labels;
  /// (upper, lower) index pairs of cover relations.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Transitive reduction of a finite order given by `geq(a, b)` (a >= b).
template <class T, class Geq>
std::vector<std::pair<std::size_t, std::size_t>> cover_relations(const std::vector<T>& elems, Geq geq) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const std::size_t count = elems.size();
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      if (a == b || !geq(elems[a], elems[b])) continue;
      bool covered = true;
      for (std::size_t c = 0; c < count && covered; ++c) {
        if (c != a && c != b && geq(elems[a], elems[c]) && geq(elems[c], elems[b])) covered = false;
      }
      if (covered) edges.emplace_back(a, b);
    }
  }
  return edges;
}

HasseDiagram hasse(const TableauLattice& l);
HasseDiagram hasse(const GtPoset& p);

/// DOT text: nodes and edges sorted by label, edges point downward.
std::string to_dot(const HasseDiagram& h, const std::string& graph_name);

std::vector<ColumnTableau> join_irreducibles(const TableauLattice& l);

// ---------------------------------------------------------------------------
// Birkhoff machinery.

inline constexpr std::size_t kDefaultMaxNodes = 24;

/// All up-closed subsets of `p` (including the empty set), each sorted.
/// Throws LimitExceeded when p.size() > max_nodes; max_nodes is capped at 64.
std::vector<std::vector<GtNode>> order_increasing_subsets(const GtPoset& p,
                                                          std::size_t max_nodes = kDefaultMaxNodes);

/// Number of up-sets, by the same traversal without materializing them.
std::uint64_t count_order_increasing_subsets(const GtPoset& p, std::size_t max_nodes = kDefaultMaxNodes);

/// What to do with nodes on which every indicator of the family is 1.
enum class ConstantPolicy { KeepTop, Drop, KeepAll };

ConstantPolicy default_policy(Family f);
std::string to_string(ConstantPolicy p);

/// Collapses Gamma_n by the value vectors (f_I(z))_{I in l}: constant-0
/// classes are dropped, each other class is replaced by its unique maximal
/// node, constant-1 classes follow `policy`.  Returns the induced subposet.
/// Throws InvariantViolation("non-unique-maximum") if a class has no maximum.
GtPoset associated_gt_subposet(const TableauLattice& l, ConstantPolicy policy);

}  // namespace hibilab
