#pragma once

// Hand-transcribed worked data and Hasse diagrams.  Diagrams are stored
// the way they are drawn: as chains of labels, each decreasing left to right.

#include <string>
#include <utility>
#include <vector>

#include "hibilab/posets.hpp"
#include "hibilab/tableaux.hpp"

namespace fixtures {

using hibilab::ColumnTableau;
using hibilab::GtNode;

using Chain = std::vector<const char*>;

// "124" -> [1,2,4]; every entry is a single digit.
inline ColumnTableau col(const std::string& digits) {
  std::vector<int> e;
  for (char c : digits) e.push_back(c - '0');
  return ColumnTableau(e);
}

// "42" -> z^(4)_2.
inline GtNode node(const std::string& two_digits) { return {two_digits[0] - '0', two_digits[1] - '0'}; }

template <class T, class Make>
std::vector<std::pair<T, T>> chain_edges(const std::vector<Chain>& chains, Make make) {
  std::vector<std::pair<T, T>> out;
  for (const auto& c : chains)
    for (std::size_t i = 1; i < c.size(); ++i) out.emplace_back(make(c[i - 1]), make(c[i]));
  return out;
}

// Hasse diagram of L_4.
inline std::vector<std::pair<ColumnTableau, ColumnTableau>> l4_edges() {
  return chain_edges<ColumnTableau>({{"4", "3", "2", "1", "14", "13", "12", "124", "123", "1234"},
                                     {"2", "24", "14"},
                                     {"3", "34", "24", "23", "13", "134", "124"},
                                     {"23", "234", "134"}},
                                    col);
}

// Hasse diagram of Gamma_4.
inline std::vector<std::pair<GtNode, GtNode>> gamma4_edges() {
  return chain_edges<GtNode>(
      {{"41", "31", "42", "32", "43", "33", "44"}, {"31", "21", "32", "22", "33"}, {"21", "11", "22"}}, node);
}

// Join-irreducible elements of L_4.
inline std::vector<ColumnTableau> l4_join_irreducibles() {
  return {col("1"), col("12"), col("123"), col("4"), col("14"), col("124"), col("34"), col("134"), col("234")};
}

// Column tableaux of L_3 and their indicator patterns, rows top first.
inline std::vector<std::pair<ColumnTableau, std::vector<std::vector<int>>>> l3_indicators() {
  return {
      {col("1"), {{1, 0, 0}, {1, 0}, {1}}},   {col("2"), {{1, 0, 0}, {1, 0}, {0}}},
      {col("3"), {{1, 0, 0}, {0, 0}, {0}}},   {col("12"), {{1, 1, 0}, {1, 1}, {1}}},
      {col("13"), {{1, 1, 0}, {1, 0}, {1}}},  {col("23"), {{1, 1, 0}, {1, 0}, {0}}},
      {col("123"), {{1, 1, 1}, {1, 1}, {1}}},
  };
}

// A pattern of Gamma_4, its decomposition and its tableau.
struct WorkedPattern {
  std::vector<std::vector<int>> pattern_rows{{10, 7, 3, 2}, {7, 7, 2}, {7, 3}, {3}};
  std::vector<ColumnTableau> multichain{col("1234"), col("1234"), col("124"), col("23"), col("23"),
                                        col("23"),   col("23"),   col("4"),   col("4"),  col("4")};
  std::vector<std::vector<int>> tableau_rows{
      {1, 1, 1, 2, 2, 2, 2, 4, 4, 4}, {2, 2, 2, 3, 3, 3, 3}, {3, 3, 4}, {4, 4}};
  std::vector<int> weight{3, 7, 6, 6};
};

// A multichain of B_{10,5,4} and its skew realization.
struct WorkedSkew {
  int n = 10, m = 5, k = 4;
  std::vector<std::vector<int>> tableau_rows{
      {1, 1, 1, 1, 1, 1, 1, 1, 5, 5, 7, 8}, {2, 2, 2, 2, 2, 5, 7, 8, 9, 9}, {3, 3, 3, 6, 7, 9}, {5, 5, 6, 8}};
  std::vector<int> outer{12, 10, 6, 4, 0};
  std::vector<int> inner{8, 5, 3, 0};
  std::vector<int> printed_content{5, 2, 3, 3, 2, 0};
  std::vector<std::vector<int>> skew_rows{{1, 1, 3, 4}, {1, 3, 4, 5, 5}, {2, 3, 5}, {1, 1, 2, 4}};
};

// A multichain of L_4 drawn next to its tableau.
struct WorkedChain {
  std::vector<ColumnTableau> multichain{col("124"), col("124"), col("13"), col("23"), col("24"), col("3"), col("3")};
  std::vector<std::vector<int>> tableau_rows{{1, 1, 1, 2, 2, 3, 3}, {2, 2, 3, 3, 4}, {4, 4}};
};

// Associated GT subposets.
struct SubposetDrawing {
  std::string label;
  hibilab::Family family;
  std::vector<int> params;
  hibilab::ConstantPolicy policy;
  std::vector<const char*> nodes;
  std::vector<Chain> chains;

  std::vector<GtNode> node_list() const {
    std::vector<GtNode> out;
    for (const char* s : nodes) out.push_back(node(s));
    return out;
  }
  std::vector<std::pair<GtNode, GtNode>> edges() const { return chain_edges<GtNode>(chains, node); }
};

inline std::vector<SubposetDrawing> subposet_drawings() {
  using hibilab::ConstantPolicy;
  using hibilab::Family;
  return {
      {"G_{7,3}",
       Family::Grass,
       {7, 3},
       ConstantPolicy::Drop,
       {"63", "52", "53", "41", "42", "43", "31", "32", "33", "21", "22", "11"},
       {{"52", "63", "53"},
        {"41", "52", "42", "53", "43"},
        {"41", "31", "42", "32", "43", "33"},
        {"31", "21", "32", "22", "33"},
        {"21", "11", "22"}}},
      {"P_6",
       Family::Symplectic,
       {6},
       ConstantPolicy::KeepTop,
       {"61", "62", "63", "51", "52", "53", "41", "42", "31", "32", "21", "11"},
       {{"61", "51", "62", "52", "63", "53"},
        {"51", "41", "52", "42", "53"},
        {"41", "31", "42", "32"},
        {"31", "21", "32"},
        {"21", "11"}}},
      {"B_{5,3,2}",
       Family::Branching,
       {5, 3, 2},
       ConstantPolicy::KeepTop,
       {"51", "52", "53", "41", "42", "43", "31", "32", "33", "21", "22"},
       {{"51", "41", "52", "42", "53", "43"}, {"41", "31", "42", "32", "43", "33"}, {"31", "21", "32", "22", "33"}}},
      {"B_{8,3,5}",
       Family::Branching,
       {8, 3, 5},
       ConstantPolicy::KeepTop,
       {"81", "82", "83", "71", "72", "73", "61", "62", "63", "51", "52", "53"},
       {{"81", "71", "82", "72", "83", "73"}, {"71", "61", "72", "62", "73", "63"}, {"61", "51", "62", "52", "63", "53"}}},
  };
}

inline hibilab::TableauLattice make_lattice(const SubposetDrawing& f) {
  using hibilab::TableauLattice;
  switch (f.family) {
    case hibilab::Family::Grass: return TableauLattice::grassmannian(f.params[0], f.params[1]);
    case hibilab::Family::Symplectic: return TableauLattice::symplectic(f.params[0]);
    case hibilab::Family::Branching: return TableauLattice::branching(f.params[0], f.params[1], f.params[2]);
    case hibilab::Family::Bounded: return TableauLattice::bounded(f.params[0], f.params[1]);
    case hibilab::Family::Full: break;
  }
  return TableauLattice::full(f.params[0]);
}

}  // namespace fixtures
