#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace hibilab {

/// A Young diagram, stored as its weakly decreasing row lengths.
///
/// Trailing zeros are kept as given (an ambient number of parts is often
/// meaningful), but equality ignores them: (2,1) == (2,1,0,0).
class YoungDiagram {
 public:
  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> rows);

  const std::vector<int>& rows() const& { return rows_; }
  std::vector<int> rows() && { return std::move(rows_); }
  std::size_t length() const { return rows_.size(); }

  /// Row i (0-based); zero past the stored length.
  int operator[](std::size_t i) const { return i < rows_.size() ? rows_[i] : 0; }

  int depth() const;
  int size() const;
  bool empty() const { return depth() == 0; }

  YoungDiagram trimmed() const;
  /// Pads with zeros (or trims zeros) to exactly `parts` entries.
  /// Throws ValidationError if the depth exceeds `parts`.
  YoungDiagram padded(std::size_t parts) const;

  friend bool operator==(const YoungDiagram& a, const YoungDiagram& b);

 private:
  std::vector<int> rows_;
};

YoungDiagram transpose(const YoungDiagram& d);
YoungDiagram operator+(const YoungDiagram& a, const YoungDiagram& b);
std::string to_string(const YoungDiagram& d);

/// All diagrams with exactly `size` boxes, at most `max_depth` rows and
/// first row at most `max_width`, in reverse lexicographic order.
std::vector<YoungDiagram> partitions(int size, int max_depth, int max_width);

/// A column tableau [i1 < i2 < ... < ik], k >= 1, all entries >= 1.
class ColumnTableau {
 public:
  explicit ColumnTableau(std::vector<int> entries);
  ColumnTableau(std::initializer_list<int> entries)
      : ColumnTableau(std::vector<int>(entries)) {}

  int depth() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const& { return entries_; }
  std::vector<int> entries() && { return std::move(entries_); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int max_entry() const { return entries_.back(); }

  /// Lexicographic on entries; used only for container ordering.
  auto operator<=>(const ColumnTableau&) const = default;

 private:
  std::vector<int> entries_;
};

std::string to_string(const ColumnTableau& c);

/// Strict linear extension of <=_tab: deeper columns first, then
/// lexicographic.  Sorting a multichain with it yields its chain order.
bool chain_order_less(const ColumnTableau& a, const ColumnTableau& b);

/// A semistandard Young tableau, stored row-major.
class Ssyt {
 public:
  Ssyt() = default;
  /// Validates row lengths, positivity and semistandardness.
  explicit Ssyt(std::vector<std::vector<int>> rows);
  /// As above, additionally checking the rows against `shape`.
  Ssyt(const YoungDiagram& shape, std::vector<std::vector<int>> rows);

  const YoungDiagram& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::size_t num_columns() const { return rows_.empty() ? 0 : rows_.front().size(); }
  ColumnTableau column(std::size_t j) const;
  int max_entry() const;
  bool empty() const { return rows_.empty(); }

  bool operator==(const Ssyt&) const = default;

 private:
  YoungDiagram shape_;
  std::vector<std::vector<int>> rows_;
};

std::string to_string(const Ssyt& t);

/// Length-n vector of entry multiplicities.
std::vector<int> content(const Ssyt& t, int n);

/// Sorts the multiset into chain order and concatenates the columns.
/// Throws InvariantViolation("not-a-multichain") on an incomparable pair.
Ssyt multichain_to_ssyt(std::vector<ColumnTableau> chain);

/// Columns left to right, i.e. the multichain in weakly increasing order.
std::vector<ColumnTableau> ssyt_to_multichain(const Ssyt& t);

/// Calls `visit` on every SSYT of the given shape with entries in 1..n.
void for_each_ssyt(const YoungDiagram& shape, int n, const std::function<void(const Ssyt&)>& visit);

/// A semistandard filling of outer/inner.  rows()[i] holds only the
/// filled cells of row i, left to right.
class SkewTableau {
 public:
  SkewTableau(YoungDiagram outer, YoungDiagram inner, std::vector<std::vector<int>> rows);

  const YoungDiagram& outer() const { return outer_; }
  const YoungDiagram& inner() const { return inner_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  bool operator==(const SkewTableau&) const = default;

 private:
  YoungDiagram outer_;
  YoungDiagram inner_;
  std::vector<std::vector<int>> rows_;
};

std::vector<int> content(const SkewTableau& t, int n);

/// Realizes a tableau built from a multichain of B_{n,m,k} as a skew
/// tableau: the leading run of i's in row i (i <= k) becomes the inner
/// shape and every other entry j is replaced by j - k.  The outer shape is
/// padded to max(m, rows) parts and the inner shape to k parts.
/// Throws InvariantViolation("not-branching-form") if some row i <= k has
/// an entry <= k other than its leading run of i's.
SkewTableau to_skew(const Ssyt& t, int n, int k, int m = 0);

}  // namespace hibilab
