#include "hibilab/gtpatterns.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hibilab/error.hpp"

namespace hibilab {

namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxPatternN)
    throw ValidationError("GT patterns need 1 <= n <= " + std::to_string(kMaxPatternN));
}

}  // namespace

GtPattern::GtPattern(int n) : n_(n) {
  check_n(n);
  values_.assign(offset(n + 1), 0);
}

GtPattern GtPattern::from_rows(const std::vector<std::vector<int>>& rows_top_first) {
  const int n = static_cast<int>(rows_top_first.size());
  GtPattern f(n);
  for (int r = 0; r < n; ++r) {
    const int level = n - r;
    const auto& row = rows_top_first[r];
    if (static_cast<int>(row.size()) != level)
      throw InvariantViolation("row-length", "row for level " + std::to_string(level) + " must have " +
                                                 std::to_string(level) + " entries");
    for (int j = 0; j < level; ++j) {
      if (row[j] < 0) throw InvariantViolation("negative-value", "pattern values must be >= 0");
      f.values_[offset(level) + j] = row[j];
    }
  }
  for (int level = 1; level < n; ++level)
    for (int j = 1; j <= level; ++j)
      if (!(f.at(level + 1, j) >= f.at(level, j) && f.at(level, j) >= f.at(level + 1, j + 1)))
        throw InvariantViolation("not-order-preserving",
                                 "rows " + std::to_string(level + 1) + " and " + std::to_string(level) +
                                     " do not interlace at position " + std::to_string(j));
  return f;
}

YoungDiagram GtPattern::top_row() const {
  auto r = row(n_);
  return YoungDiagram(std::vector<int>(r.begin(), r.end()));
}

std::vector<std::vector<int>> GtPattern::rows_top_first() const {
  std::vector<std::vector<int>> out;
  for (int level = n_; level >= 1; --level) {
    auto r = row(level);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

bool GtPattern::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](int v) { return v == 0; });
}

bool GtPattern::is_indicator() const {
  return std::all_of(values_.begin(), values_.end(), [](int v) { return v == 0 || v == 1; });
}

std::vector<GtNode> GtPattern::support() const {
  std::vector<GtNode> s;
  for (int level = 1; level <= n_; ++level)
    for (int j = 1; j <= level; ++j)
      if (at(level, j) != 0) s.push_back({level, j});
  return s;
}

GtPattern& GtPattern::operator+=(const GtPattern& other) {
  if (other.n_ != n_) throw ValidationError("cannot add GT patterns with different n");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

GtPattern add(const GtPattern& f, const GtPattern& g) {
  GtPattern h = f;
  h += g;
  return h;
}

GtPattern operator+(const GtPattern& f, const GtPattern& g) { return add(f, g); }

// ---------------------------------------------------------------------------

GtPattern indicator_of(int n, const std::vector<GtNode>& up_set) {
  const GtPoset gamma = GtPoset::full(n);
  std::set<GtNode> members(up_set.begin(), up_set.end());
  for (const auto& z : members) {
    if (!gamma.contains(z)) throw ValidationError(to_string(z) + " is not in Gamma_" + std::to_string(n));
    for (const auto& w : gamma.nodes())
      if (gt_geq(w, z) && !members.count(w))
        throw InvariantViolation("not-up-closed", to_string(w) + " lies above " + to_string(z) + " but is missing");
  }
  std::vector<std::vector<int>> rows;
  for (int level = n; level >= 1; --level) {
    std::vector<int> r(level, 0);
    for (int j = 1; j <= level; ++j) r[j - 1] = members.count({level, j}) ? 1 : 0;
    rows.push_back(std::move(r));
  }
  return GtPattern::from_rows(rows);
}

namespace {

void require_indicator(const GtPattern& f) {
  if (!f.is_indicator()) throw InvariantViolation("not-an-indicator", "pattern takes values outside {0,1}");
}

}  // namespace

bool geq_ind(const GtPattern& f, const GtPattern& g) {
  require_indicator(f);
  require_indicator(g);
  if (f.n() != g.n()) throw ValidationError("indicator patterns with different n");
  for (int level = 1; level <= f.n(); ++level)
    for (int j = 1; j <= level; ++j)
      if (f.at(level, j) > g.at(level, j)) return false;
  return true;
}

GtPattern indicator_join(const GtPattern& f, const GtPattern& g) {
  require_indicator(f);
  require_indicator(g);
  if (f.n() != g.n()) throw ValidationError("indicator patterns with different n");
  auto rows = f.rows_top_first();
  auto other = g.rows_top_first();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t j = 0; j < rows[r].size(); ++j) rows[r][j] = std::min(rows[r][j], other[r][j]);
  GtPattern h = GtPattern::from_rows(rows);
  if (h.is_zero()) throw InvariantViolation("empty-support", "supports have empty intersection");
  return h;
}

GtPattern indicator_meet(const GtPattern& f, const GtPattern& g) {
  require_indicator(f);
  require_indicator(g);
  if (f.n() != g.n()) throw ValidationError("indicator patterns with different n");
  auto rows = f.rows_top_first();
  auto other = g.rows_top_first();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t j = 0; j < rows[r].size(); ++j) rows[r][j] = std::max(rows[r][j], other[r][j]);
  return GtPattern::from_rows(rows);
}

GtPattern column_to_indicator(const ColumnTableau& c, int n) {
  if (c.max_entry() > n) throw ValidationError(to_string(c) + " has entries above n = " + std::to_string(n));
  std::vector<std::vector<int>> rows;
  for (int a = n; a >= 1; --a) {
    const auto ell = std::count_if(c.entries().begin(), c.entries().end(), [a](int e) { return e <= a; });
    std::vector<int> r(a, 0);
    std::fill_n(r.begin(), ell, 1);
    rows.push_back(std::move(r));
  }
  return GtPattern::from_rows(rows);
}

ColumnTableau indicator_to_column(const GtPattern& f) {
  require_indicator(f);
  std::vector<int> entries;
  int prev = 0;
  for (int a = 1; a <= f.n(); ++a) {
    auto r = f.row(a);
    const int ell = std::accumulate(r.begin(), r.end(), 0);
    for (int j = 0; j < a; ++j)
      if (r[j] != (j < ell ? 1 : 0))
        throw InvariantViolation("not-left-justified", "row " + std::to_string(a) + " of the indicator has a gap");
    if (ell - prev == 1) entries.push_back(a);
    else if (ell != prev)
      throw InvariantViolation("not-order-preserving", "row sums jump by more than one at level " + std::to_string(a));
    prev = ell;
  }
  if (entries.empty()) throw InvariantViolation("empty-support", "the zero pattern is not an indicator of a column");
  return ColumnTableau(std::move(entries));
}

// ---------------------------------------------------------------------------

GtPattern ssyt_to_gt(const Ssyt& t, int n) {
  if (t.max_entry() > n) throw ValidationError("tableau entries exceed n = " + std::to_string(n));
  if (t.shape().depth() > n) throw ValidationError("tableau has more than n rows");
  std::vector<std::vector<int>> rows;
  for (int i = n; i >= 1; --i) {
    std::vector<int> r(i, 0);
    for (int j = 1; j <= i && j <= static_cast<int>(t.rows().size()); ++j) {
      const auto& tr = t.rows()[j - 1];
      r[j - 1] = static_cast<int>(std::upper_bound(tr.begin(), tr.end(), i) - tr.begin());
    }
    rows.push_back(std::move(r));
  }
  return GtPattern::from_rows(rows);
}

std::vector<std::pair<int, GtPattern>> indicator_decomposition(const GtPattern& f) {
  std::set<int> image;
  for (int level = 1; level <= f.n(); ++level)
    for (int v : f.row(level)) image.insert(v);

  std::vector<std::pair<int, GtPattern>> terms;
  int prev = 0;
  for (int value : image) {
    if (value == 0) continue;  // the empty up-set contributes nothing
    std::vector<std::vector<int>> rows = f.rows_top_first();
    for (auto& r : rows)
      for (auto& v : r) v = v >= value ? 1 : 0;
    terms.emplace_back(value - prev, GtPattern::from_rows(rows));
    prev = value;
  }
  return terms;
}

Ssyt gt_to_ssyt(const GtPattern& f) {
  std::vector<ColumnTableau> chain;
  for (const auto& [multiplicity, indicator] : indicator_decomposition(f)) {
    const ColumnTableau c = indicator_to_column(indicator);
    for (int i = 0; i < multiplicity; ++i) chain.push_back(c);
  }
  return multichain_to_ssyt(std::move(chain));
}

std::vector<int> weight(const GtPattern& f) {
  std::vector<int> kappa(f.n());
  int prev = 0;
  for (int i = 1; i <= f.n(); ++i) {
    auto r = f.row(i);
    const int sum = std::accumulate(r.begin(), r.end(), 0);
    kappa[i - 1] = sum - prev;
    prev = sum;
  }
  return kappa;
}

bool interlaces(const YoungDiagram& mu, const YoungDiagram& nu) {
  if (mu.length() != nu.length() + 1)
    throw ValidationError("interlacing needs lengths k and k-1, got " + std::to_string(mu.length()) + " and " +
                          std::to_string(nu.length()));
  for (std::size_t j = 0; j < nu.length(); ++j)
    if (!(mu[j] >= nu[j] && nu[j] >= mu[j + 1])) return false;
  return true;
}

void for_each_pattern(const YoungDiagram& top, int n, std::optional<int> m,
                      const std::function<void(const GtPattern&)>& visit) {
  check_n(n);
  const int bound = m.value_or(n);
  if (bound < 1 || bound > n) throw ValidationError("column bound m must satisfy 1 <= m <= n");
  if (top.depth() > bound)
    throw ValidationError("top row " + to_string(top) + " is deeper than " + std::to_string(bound));

  std::vector<std::vector<int>> rows{top.padded(n).rows()};
  // Choose row `level` entry by entry, ascending, which gives lexicographic
  // order on the concatenated rows.
  auto rec = [&](auto&& self, int level, int j) -> void {
    if (level == 0) {
      visit(GtPattern::from_rows(rows));
      return;
    }
    if (j == level) {
      self(self, level - 1, 0);
      return;
    }
    const auto& above = rows[n - level - 1];
    auto& cur = rows[n - level];
    const int hi = j + 1 > bound ? 0 : above[j];
    for (int v = above[j + 1]; v <= hi; ++v) {
      cur[j] = v;
      self(self, level, j + 1);
    }
  };
  for (int level = n - 1; level >= 1; --level) rows.emplace_back(level, 0);
  rec(rec, n - 1, 0);
}

std::vector<GtPattern> enumerate_patterns(const YoungDiagram& top, int n, std::optional<int> m) {
  std::vector<GtPattern> out;
  for_each_pattern(top, n, m, [&](const GtPattern& f) { out.push_back(f); });
  return out;
}

}  // namespace hibilab
