#include "hibilab/posets.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hibilab/error.hpp"
#include "hibilab/gtpatterns.hpp"

namespace hibilab {

bool leq_tab(const ColumnTableau& a, const ColumnTableau& b) {
  if (b.depth() > a.depth()) return false;
  for (int l = 0; l < b.depth(); ++l)
    if (b[l] < a[l]) return false;
  return true;
}

bool comparable(const ColumnTableau& a, const ColumnTableau& b) { return leq_tab(a, b) || leq_tab(b, a); }

ColumnTableau join(const ColumnTableau& a, const ColumnTableau& b) {
  const ColumnTableau& shorter = a.depth() <= b.depth() ? a : b;
  const ColumnTableau& longer = a.depth() <= b.depth() ? b : a;
  std::vector<int> x(shorter.depth());
  for (int l = 0; l < shorter.depth(); ++l) x[l] = std::max(shorter[l], longer[l]);
  return ColumnTableau(std::move(x));
}

ColumnTableau meet(const ColumnTableau& a, const ColumnTableau& b) {
  const ColumnTableau& shorter = a.depth() <= b.depth() ? a : b;
  const ColumnTableau& longer = a.depth() <= b.depth() ? b : a;
  std::vector<int> y = longer.entries();
  for (int l = 0; l < shorter.depth(); ++l) y[l] = std::min(shorter[l], longer[l]);
  return ColumnTableau(std::move(y));
}

// ---------------------------------------------------------------------------

std::string to_string(GtNode z) {
  return "z^(" + std::to_string(z.level) + ")_" + std::to_string(z.index);
}

bool gt_geq(GtNode a, GtNode b) { return b.index >= a.index && a.level - a.index >= b.level - b.index; }

GtPoset GtPoset::full(int n) { return bounded(n, n); }

GtPoset GtPoset::bounded(int n, int m) {
  if (n < 1) throw ValidationError("GT poset needs n >= 1");
  if (m < 1) throw ValidationError("GT poset needs m >= 1");
  std::vector<GtNode> nodes;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= std::min(i, m); ++j) nodes.push_back({i, j});
  return GtPoset(n, std::move(nodes));
}

GtPoset::GtPoset(int n, std::vector<GtNode> nodes) : n_(n), nodes_(std::move(nodes)) {
  if (n_ < 1) throw ValidationError("GT poset needs n >= 1");
  for (const auto& z : nodes_)
    if (z.index < 1 || z.index > z.level || z.level > n_)
      throw ValidationError(to_string(z) + " is not a node of Gamma_" + std::to_string(n_));
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
}

bool GtPoset::contains(GtNode z) const { return std::binary_search(nodes_.begin(), nodes_.end(), z); }

// ---------------------------------------------------------------------------

std::string to_string(Family f) {
  switch (f) {
    case Family::Full: return "L";
    case Family::Bounded: return "L";
    case Family::Grass: return "G";
    case Family::Symplectic: return "P";
    case Family::Branching: return "B";
  }
  return "?";
}

namespace {

constexpr int kMaxLatticeN = 20;

std::vector<ColumnTableau> all_columns(int n, int max_depth) {
  if (n < 1 || n > kMaxLatticeN) throw ValidationError("lattice needs 1 <= n <= " + std::to_string(kMaxLatticeN));
  std::vector<ColumnTableau> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> e;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) e.push_back(i + 1);
    if (static_cast<int>(e.size()) <= max_depth) out.emplace_back(std::move(e));
  }
  return out;
}

}  // namespace

TableauLattice::TableauLattice(Family family, int n, int m, int k, std::vector<ColumnTableau> elements)
    : family_(family), n_(n), m_(m), k_(k), elements_(std::move(elements)) {
  if (elements_.empty()) throw ValidationError("empty lattice family");
  std::sort(elements_.begin(), elements_.end(), chain_order_less);
  sorted_ = elements_;
  std::sort(sorted_.begin(), sorted_.end());
  sorted_pos_.resize(sorted_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    auto it = std::lower_bound(sorted_.begin(), sorted_.end(), elements_[i]);
    sorted_pos_[it - sorted_.begin()] = i;
  }

  // Closure under the join/meet formulas.
  for (std::size_t a = 0; a < elements_.size(); ++a)
    for (std::size_t b = a + 1; b < elements_.size(); ++b) {
      if (!contains(join(elements_[a], elements_[b])) || !contains(meet(elements_[a], elements_[b])))
        throw InvariantViolation("not-a-sublattice", name() + " is not closed under join/meet at " +
                                                         to_string(elements_[a]) + ", " + to_string(elements_[b]));
    }

  // Heights: longest chain from the bottom, over a linear extension.
  rank_.assign(elements_.size(), 0);
  for (std::size_t x = 0; x < elements_.size(); ++x)
    for (std::size_t y = 0; y < x; ++y)
      if (leq_tab(elements_[y], elements_[x])) rank_[x] = std::max(rank_[x], rank_[y] + 1);
  for (std::size_t x = 1; x < elements_.size(); ++x)
    if (!leq_tab(elements_.front(), elements_[x]))
      throw InvariantViolation("no-bottom", name() + " has no least element");
}

TableauLattice TableauLattice::full(int n) { return TableauLattice(Family::Full, n, n, 0, all_columns(n, n)); }

TableauLattice TableauLattice::bounded(int n, int m) {
  if (m < 1 || m > n) throw ValidationError("L_{n,m} needs 1 <= m <= n");
  return TableauLattice(Family::Bounded, n, m, 0, all_columns(n, m));
}

TableauLattice TableauLattice::grassmannian(int n, int m) {
  if (m < 1 || m > n) throw ValidationError("G_{n,m} needs 1 <= m <= n");
  auto cols = all_columns(n, m);
  std::erase_if(cols, [m](const ColumnTableau& c) { return c.depth() != m; });
  return TableauLattice(Family::Grass, n, m, 0, std::move(cols));
}

TableauLattice TableauLattice::symplectic(int n) {
  if (n < 2 || n % 2) throw ValidationError("P_n needs an even n >= 2");
  const int m = n / 2;
  std::vector<int> base;
  for (int i = 0; i < m; ++i) base.push_back(2 * i + 1);
  const ColumnTableau floor(base);
  auto cols = all_columns(n, m);
  std::erase_if(cols, [&](const ColumnTableau& c) { return !leq_tab(floor, c); });
  return TableauLattice(Family::Symplectic, n, m, 0, std::move(cols));
}

TableauLattice TableauLattice::branching(int n, int m, int k) {
  if (m < 1 || m > n) throw ValidationError("B_{n,m,k} needs 1 <= m <= n");
  if (k < 1 || k >= n) throw ValidationError("B_{n,m,k} needs 1 <= k < n");
  const int run_cap = std::min(k, m);
  const int tail_cap = std::min(n - k, m);
  auto cols = all_columns(n, m);
  std::erase_if(cols, [&](const ColumnTableau& c) {
    int r = 0;
    while (r < c.depth() && r < k && c[r] == r + 1) ++r;
    const int s = c.depth() - r;
    for (int t = r; t < c.depth(); ++t)
      if (c[t] <= k) return true;
    if (r > run_cap || s > tail_cap) return true;
    return false;
  });
  return TableauLattice(Family::Branching, n, m, k, std::move(cols));
}

std::string TableauLattice::name() const {
  const std::string n = std::to_string(n_);
  switch (family_) {
    case Family::Full: return "L_" + n;
    case Family::Bounded: return "L_{" + n + "," + std::to_string(m_) + "}";
    case Family::Grass: return "G_{" + n + "," + std::to_string(m_) + "}";
    case Family::Symplectic: return "P_" + n;
    case Family::Branching: return "B_{" + n + "," + std::to_string(m_) + "," + std::to_string(k_) + "}";
  }
  return "?";
}

std::optional<std::size_t> TableauLattice::index_of(const ColumnTableau& c) const {
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), c);
  if (it == sorted_.end() || !(*it == c)) return std::nullopt;
  return sorted_pos_[it - sorted_.begin()];
}

bool TableauLattice::contains(const ColumnTableau& c) const { return index_of(c).has_value(); }

int TableauLattice::rank(const ColumnTableau& c) const {
  auto i = index_of(c);
  if (!i) throw ValidationError(to_string(c) + " is not an element of " + name());
  return rank_[*i];
}

// ---------------------------------------------------------------------------

HasseDiagram hasse(const TableauLattice& l) {
  HasseDiagram h;
  for (const auto& c : l.elements()) h.labels.push_back(to_string(c));
  h.edges = cover_relations(l.elements(), [](const ColumnTableau& a, const ColumnTableau& b) { return leq_tab(b, a); });
  return h;
}

HasseDiagram hasse(const GtPoset& p) {
  HasseDiagram h;
  for (const auto& z : p.nodes()) h.labels.push_back(to_string(z));
  h.edges = cover_relations(p.nodes(), gt_geq);
  return h;
}

std::string to_dot(const HasseDiagram& h, const std::string& graph_name) {
  std::vector<std::string> nodes = h.labels;
  std::sort(nodes.begin(), nodes.end());
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [hi, lo] : h.edges) edges.emplace_back(h.labels[hi], h.labels[lo]);
  std::sort(edges.begin(), edges.end());

  std::string out = "digraph \"" + graph_name + "\" {\n";
  for (const auto& n : nodes) out += "  \"" + n + "\";\n";
  for (const auto& [a, b] : edges) out += "  \"" + a + "\" -> \"" + b + "\";\n";
  out += "}\n";
  return out;
}

std::vector<ColumnTableau> join_irreducibles(const TableauLattice& l) {
  const auto& el = l.elements();
  std::vector<ColumnTableau> out;
  for (std::size_t x = 1; x < el.size(); ++x) {  // el[0] is the least element
    bool irreducible = true;
    for (std::size_t a = 0; a < x && irreducible; ++a) {
      if (!leq_tab(el[a], el[x])) continue;
      for (std::size_t b = a; b < x && irreducible; ++b)
        if (leq_tab(el[b], el[x]) && join(el[a], el[b]) == el[x]) irreducible = false;
    }
    if (irreducible) out.push_back(el[x]);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Nodes in a linear extension from the top down, with bitmasks of the
// strictly greater nodes.  An up-set is built by deciding nodes in this
// order; a node may join only if everything above it already has.
struct UpSetWalk {
  std::vector<GtNode> order;
  std::vector<std::uint64_t> above;

  UpSetWalk(const GtPoset& p, std::size_t max_nodes) {
    max_nodes = std::min<std::size_t>(max_nodes, 64);
    if (p.size() > max_nodes)
      throw LimitExceeded("poset has " + std::to_string(p.size()) + " nodes; enumeration guard is " +
                          std::to_string(max_nodes));
    order = p.nodes();
    // Fewer nodes above first: (level - index) descending, index ascending.
    std::sort(order.begin(), order.end(), [](GtNode a, GtNode b) {
      const int ua = a.level - a.index, ub = b.level - b.index;
      if (a.index - ua != b.index - ub) return a.index - ua < b.index - ub;
      return a < b;
    });
    above.assign(order.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = 0; j < order.size(); ++j)
        if (i != j && gt_geq(order[j], order[i])) {
          if (j > i) throw std::logic_error("up-set walk order is not a linear extension");
          above[i] |= std::uint64_t{1} << j;
        }
  }

  template <class Visit>
  void run(Visit&& visit) const {
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t chosen) -> void {
      if (i == order.size()) {
        visit(chosen);
        return;
      }
      self(self, i + 1, chosen);
      if ((chosen & above[i]) == above[i]) self(self, i + 1, chosen | (std::uint64_t{1} << i));
    };
    rec(rec, 0, 0);
  }
};

}  // namespace

std::vector<std::vector<GtNode>> order_increasing_subsets(const GtPoset& p, std::size_t max_nodes) {
  UpSetWalk walk(p, max_nodes);
  std::vector<std::vector<GtNode>> out;
  walk.run([&](std::uint64_t mask) {
    std::vector<GtNode> s;
    for (std::size_t i = 0; i < walk.order.size(); ++i)
      if (mask >> i & 1u) s.push_back(walk.order[i]);
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_order_increasing_subsets(const GtPoset& p, std::size_t max_nodes) {
  UpSetWalk walk(p, max_nodes);
  std::uint64_t count = 0;
  walk.run([&](std::uint64_t) { ++count; });
  return count;
}

// ---------------------------------------------------------------------------

ConstantPolicy default_policy(Family f) {
  switch (f) {
    case Family::Grass: return ConstantPolicy::Drop;
    case Family::Symplectic:
    case Family::Branching: return ConstantPolicy::KeepTop;
    case Family::Full:
    case Family::Bounded: return ConstantPolicy::KeepAll;
  }
  return ConstantPolicy::KeepAll;
}

std::string to_string(ConstantPolicy p) {
  switch (p) {
    case ConstantPolicy::KeepTop: return "keep-top";
    case ConstantPolicy::Drop: return "drop";
    case ConstantPolicy::KeepAll: return "keep-all";
  }
  return "?";
}

GtPoset associated_gt_subposet(const TableauLattice& l, ConstantPolicy policy) {
  const int n = l.n();
  const GtPoset gamma = GtPoset::full(n);
  std::vector<GtPattern> indicators;
  indicators.reserve(l.size());
  for (const auto& c : l.elements()) indicators.push_back(column_to_indicator(c, n));

  std::map<std::vector<char>, std::vector<GtNode>> classes;
  for (const auto& z : gamma.nodes()) {
    std::vector<char> values;
    values.reserve(indicators.size());
    for (const auto& f : indicators) values.push_back(static_cast<char>(f.at(z)));
    classes[std::move(values)].push_back(z);
  }

  std::vector<GtNode> kept;
  for (const auto& [values, nodes] : classes) {
    const bool all_zero = std::all_of(values.begin(), values.end(), [](char v) { return v == 0; });
    const bool all_one = std::all_of(values.begin(), values.end(), [](char v) { return v == 1; });
    if (all_zero) continue;
    std::optional<GtNode> rep;
    for (const auto& z : nodes)
      if (std::all_of(nodes.begin(), nodes.end(), [&](GtNode w) { return gt_geq(z, w); })) rep = z;
    if (!rep) throw InvariantViolation("non-unique-maximum", "a node class of " + l.name() + " has no maximum");
    if (all_one) {
      if (policy == ConstantPolicy::Drop) continue;
      if (policy == ConstantPolicy::KeepTop && rep->level != n) continue;
    }
    kept.push_back(*rep);
  }
  return GtPoset(n, std::move(kept));
}

}  // namespace hibilab
