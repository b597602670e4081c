#include "hibilab/tableaux.hpp"

#include <algorithm>
#include <numeric>

#include "hibilab/error.hpp"
#include "hibilab/posets.hpp"

namespace hibilab {

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 0) throw InvariantViolation("negative-row", "row " + std::to_string(i + 1) + " is negative");
    if (i && rows_[i] > rows_[i - 1])
      throw InvariantViolation("not-weakly-decreasing", "row lengths (" + join_ints(rows_) + ") increase");
  }
}

int YoungDiagram::depth() const {
  return static_cast<int>(std::count_if(rows_.begin(), rows_.end(), [](int r) { return r > 0; }));
}

int YoungDiagram::size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

YoungDiagram YoungDiagram::trimmed() const {
  return YoungDiagram(std::vector<int>(rows_.begin(), rows_.begin() + depth()));
}

YoungDiagram YoungDiagram::padded(std::size_t parts) const {
  if (static_cast<std::size_t>(depth()) > parts)
    throw ValidationError("diagram " + to_string(*this) + " has more than " + std::to_string(parts) + " rows");
  std::vector<int> r(parts, 0);
  std::copy_n(rows_.begin(), std::min(parts, rows_.size()), r.begin());
  return YoungDiagram(std::move(r));
}

bool operator==(const YoungDiagram& a, const YoungDiagram& b) {
  const std::size_t len = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < len; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

YoungDiagram transpose(const YoungDiagram& d) {
  std::vector<int> cols(d[0], 0);
  for (int j = 0; j < d[0]; ++j)
    for (int r : d.rows())
      if (r > j) ++cols[j];
  return YoungDiagram(std::move(cols));
}

YoungDiagram operator+(const YoungDiagram& a, const YoungDiagram& b) {
  std::vector<int> r(std::max(a.length(), b.length()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
  return YoungDiagram(std::move(r));
}

std::string to_string(const YoungDiagram& d) { return "(" + join_ints(d.rows()) + ")"; }

std::vector<YoungDiagram> partitions(int size, int max_depth, int max_width) {
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_depth) return;
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  if (size >= 0) rec(rec, size, max_width);
  return out;
}

// ---------------------------------------------------------------------------

ColumnTableau::ColumnTableau(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvariantViolation("empty-column", "a column tableau needs at least one entry");
  if (entries_.front() < 1) throw InvariantViolation("nonpositive-entry", "column entries must be >= 1");
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i] <= entries_[i - 1])
      throw InvariantViolation("column-not-strict", "[" + join_ints(entries_) + "] is not strictly increasing");
}

std::string to_string(const ColumnTableau& c) { return "[" + join_ints(c.entries()) + "]"; }

bool chain_order_less(const ColumnTableau& a, const ColumnTableau& b) {
  if (a.depth() != b.depth()) return a.depth() > b.depth();
  return a.entries() < b.entries();
}

// ---------------------------------------------------------------------------

Ssyt::Ssyt(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  std::vector<int> lengths;
  for (const auto& r : rows_) lengths.push_back(static_cast<int>(r.size()));
  for (std::size_t i = 1; i < lengths.size(); ++i)
    if (lengths[i] > lengths[i - 1] || lengths[i] == 0)
      throw InvariantViolation("not-a-diagram", "row lengths do not form a Young diagram");
  shape_ = YoungDiagram(std::move(lengths));

  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      const int v = rows_[i][j];
      if (v < 1) throw InvariantViolation("nonpositive-entry", "entry at row " + std::to_string(i + 1) + " is < 1");
      if (j && rows_[i][j - 1] > v)
        throw InvariantViolation("row-not-weakly-increasing", "row " + std::to_string(i + 1) + " decreases");
      if (i && rows_[i - 1][j] >= v)
        throw InvariantViolation("column-not-strictly-increasing",
                                 "column " + std::to_string(j + 1) + " is not strictly increasing");
    }
  }
}

Ssyt::Ssyt(const YoungDiagram& shape, std::vector<std::vector<int>> rows) : Ssyt(std::move(rows)) {
  if (!(shape_ == shape))
    throw InvariantViolation("shape-mismatch", "rows have shape " + to_string(shape_) + ", expected " + to_string(shape));
}

ColumnTableau Ssyt::column(std::size_t j) const {
  std::vector<int> c;
  for (const auto& r : rows_) {
    if (r.size() <= j) break;
    c.push_back(r[j]);
  }
  return ColumnTableau(std::move(c));
}

int Ssyt::max_entry() const {
  int mx = 0;
  for (const auto& r : rows_)
    if (!r.empty()) mx = std::max(mx, r.back());
  return mx;
}

std::string to_string(const Ssyt& t) {
  std::string out;
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    if (i) out += " / ";
    out += join_ints(t.rows()[i]);
  }
  return out.empty() ? "()" : out;
}

std::vector<int> content(const Ssyt& t, int n) {
  std::vector<int> c(n, 0);
  for (const auto& r : t.rows())
    for (int v : r) {
      if (v > n) throw ValidationError("entry " + std::to_string(v) + " exceeds n = " + std::to_string(n));
      ++c[v - 1];
    }
  return c;
}

Ssyt multichain_to_ssyt(std::vector<ColumnTableau> chain) {
  std::sort(chain.begin(), chain.end(), chain_order_less);
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (!leq_tab(chain[i - 1], chain[i]))
      throw InvariantViolation("not-a-multichain",
                               to_string(chain[i - 1]) + " and " + to_string(chain[i]) + " are incomparable");
  std::vector<std::vector<int>> rows(chain.empty() ? 0 : chain.front().depth());
  for (const auto& c : chain)
    for (int i = 0; i < c.depth(); ++i) rows[i].push_back(c[i]);
  return Ssyt(std::move(rows));
}

std::vector<ColumnTableau> ssyt_to_multichain(const Ssyt& t) {
  std::vector<ColumnTableau> out;
  out.reserve(t.num_columns());
  for (std::size_t j = 0; j < t.num_columns(); ++j) out.push_back(t.column(j));
  return out;
}

void for_each_ssyt(const YoungDiagram& shape, int n, const std::function<void(const Ssyt&)>& visit) {
  const YoungDiagram s = shape.trimmed();
  if (s.depth() > n) return;
  const YoungDiagram heights = transpose(s);
  std::vector<std::vector<int>> rows(s.depth());
  for (int i = 0; i < s.depth(); ++i) rows[i].assign(s[i], 0);
  // Fill row by row, left to right.
  auto rec = [&](auto&& self, int i, int j) -> void {
    if (i == s.depth()) {
      visit(Ssyt(rows));
      return;
    }
    if (j == s[i]) {
      self(self, i + 1, 0);
      return;
    }
    int lo = 1;
    if (j > 0) lo = std::max(lo, rows[i][j - 1]);
    if (i > 0) lo = std::max(lo, rows[i - 1][j] + 1);
    // Leave room for the cells below in column j.
    const int hi = n - (heights[j] - 1 - i);
    for (int v = lo; v <= hi; ++v) {
      rows[i][j] = v;
      self(self, i, j + 1);
    }
  };
  rec(rec, 0, 0);
}

// ---------------------------------------------------------------------------

SkewTableau::SkewTableau(YoungDiagram outer, YoungDiagram inner, std::vector<std::vector<int>> rows)
    : outer_(std::move(outer)), inner_(std::move(inner)), rows_(std::move(rows)) {
  const std::size_t len = std::max(outer_.length(), inner_.length());
  if (rows_.size() > len) throw InvariantViolation("shape-mismatch", "more filled rows than the outer shape");
  for (std::size_t i = 0; i < len; ++i) {
    if (inner_[i] > outer_[i]) throw InvariantViolation("inner-not-contained", "inner shape exceeds outer shape");
    const std::size_t filled = i < rows_.size() ? rows_[i].size() : 0;
    if (static_cast<int>(filled) != outer_[i] - inner_[i])
      throw InvariantViolation("shape-mismatch", "row " + std::to_string(i + 1) + " has the wrong number of cells");
  }
  auto cell = [&](std::size_t i, int col) -> int { return rows_[i][col - inner_[i]]; };
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (rows_[i][j] < 1) throw InvariantViolation("nonpositive-entry", "skew entries must be >= 1");
      if (j && rows_[i][j - 1] > rows_[i][j])
        throw InvariantViolation("row-not-weakly-increasing", "skew row " + std::to_string(i + 1) + " decreases");
      const int col = inner_[i] + static_cast<int>(j);
      if (i && col >= inner_[i - 1] && col < outer_[i - 1] && cell(i - 1, col) >= rows_[i][j])
        throw InvariantViolation("column-not-strictly-increasing", "skew column " + std::to_string(col + 1));
    }
  }
}

std::vector<int> content(const SkewTableau& t, int n) {
  std::vector<int> c(n, 0);
  for (const auto& r : t.rows())
    for (int v : r) {
      if (v > n) throw ValidationError("entry " + std::to_string(v) + " exceeds " + std::to_string(n));
      ++c[v - 1];
    }
  return c;
}

SkewTableau to_skew(const Ssyt& t, int n, int k, int m) {
  if (k < 0 || k >= n) throw ValidationError("to_skew needs 0 <= k < n");
  if (t.max_entry() > n) throw ValidationError("tableau entries exceed n");
  const auto& rows = t.rows();
  std::vector<int> inner(k, 0);
  std::vector<std::vector<int>> shifted(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int label = static_cast<int>(i) + 1;
    std::size_t j = 0;
    if (label <= k) {
      while (j < rows[i].size() && rows[i][j] == label) ++j;
      inner[i] = static_cast<int>(j);
    }
    for (; j < rows[i].size(); ++j) {
      if (rows[i][j] <= k)
        throw InvariantViolation("not-branching-form", "row " + std::to_string(label) + " contains entry " +
                                                           std::to_string(rows[i][j]) + " <= k outside its leading run");
      shifted[i].push_back(rows[i][j] - k);
    }
  }
  const std::size_t parts = std::max<std::size_t>(static_cast<std::size_t>(std::max(m, 0)), rows.size());
  YoungDiagram outer = t.shape().padded(std::max(parts, static_cast<std::size_t>(k)));
  return SkewTableau(std::move(outer), YoungDiagram(std::move(inner)), std::move(shifted));
}

}  // namespace hibilab
