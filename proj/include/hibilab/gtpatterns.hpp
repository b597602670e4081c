#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hibilab/posets.hpp"
#include "hibilab/tableaux.hpp"

namespace hibilab {

inline constexpr int kMaxPatternN = 32;

/// An order-preserving map Gamma_n -> Z>=0, stored densely row by row.
/// Row `level` holds (f(z^(level)_1), ..., f(z^(level)_level)).
class GtPattern {
 public:
  /// The zero pattern.
  explicit GtPattern(int n);
  /// Rows listed top (level n) first, as in the JSON form.  Validates
  /// nonnegativity and interlacing.
  static GtPattern from_rows(const std::vector<std::vector<int>>& rows_top_first);

  int n() const { return n_; }
  int at(int level, int index) const { return values_[offset(level) + index - 1]; }
  int at(GtNode z) const { return at(z.level, z.index); }
  std::span<const int> row(int level) const {
    return {values_.data() + offset(level), static_cast<std::size_t>(level)};
  }
  YoungDiagram top_row() const;
  std::vector<std::vector<int>> rows_top_first() const;

  bool is_zero() const;
  bool is_indicator() const;
  std::vector<GtNode> support() const;

  GtPattern& operator+=(const GtPattern& other);
  bool operator==(const GtPattern&) const = default;
  auto operator<=>(const GtPattern&) const = default;

 private:
  static std::size_t offset(int level) { return static_cast<std::size_t>(level) * (level - 1) / 2; }

  int n_;
  std::vector<int> values_;
};

/// Pointwise sum.  Throws ValidationError on mismatched n.
GtPattern add(const GtPattern& f, const GtPattern& g);
GtPattern operator+(const GtPattern& f, const GtPattern& g);

/// 1_A for an up-closed A of Gamma_n.  Throws InvariantViolation if A is
/// not up-closed.
GtPattern indicator_of(int n, const std::vector<GtNode>& up_set);

/// f >=_ind g, i.e. Supp(f) is contained in Supp(g).
bool geq_ind(const GtPattern& f, const GtPattern& g);
/// Indicator of the intersection of supports.  Throws InvariantViolation
/// if the intersection is empty.
GtPattern indicator_join(const GtPattern& f, const GtPattern& g);
/// Indicator of the union of supports.
GtPattern indicator_meet(const GtPattern& f, const GtPattern& g);

/// I -> f_I: row a carries l_a = #{entries <= a} left-justified ones.
GtPattern column_to_indicator(const ColumnTableau& c, int n);
/// Inverse of column_to_indicator.
ColumnTableau indicator_to_column(const GtPattern& f);

/// f_T(z^(i)_j) = number of entries <= i in row j of T.
GtPattern ssyt_to_gt(const Ssyt& t, int n);

/// f = sum_k c_k 1_{A_k} over the distinct nonzero values of f, with
/// A_1 > A_2 > ... (strictly decreasing supports).  Terms are (c_k, 1_{A_k}).
std::vector<std::pair<int, GtPattern>> indicator_decomposition(const GtPattern& f);

/// Inverse of ssyt_to_gt through the indicator decomposition.
Ssyt gt_to_ssyt(const GtPattern& f);

/// kappa_1 = f(z^(1)_1), kappa_i = rowsum(i) - rowsum(i-1).
std::vector<int> weight(const GtPattern& f);

/// mu_1 >= nu_1 >= mu_2 >= ... >= nu_{k-1} >= mu_k for stored lengths k and
/// k-1.  Throws ValidationError on any other length pair.
bool interlaces(const YoungDiagram& mu, const YoungDiagram& nu);

/// All patterns with top row `top` (padded to n), optionally supported in
/// Gamma_{n,m}, in lexicographic order of rows listed top first.
void for_each_pattern(const YoungDiagram& top, int n, std::optional<int> m,
                      const std::function<void(const GtPattern&)>& visit);
std::vector<GtPattern> enumerate_patterns(const YoungDiagram& top, int n, std::optional<int> m = std::nullopt);

}  // namespace hibilab
