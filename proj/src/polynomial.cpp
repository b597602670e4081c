#include "hibilab/polynomial.hpp"

#include <algorithm>

#include "hibilab/error.hpp"

namespace hibilab {

bool precedes(const Variable& v, const Variable& w) {
  if (v.symbol != w.symbol) return v.symbol > w.symbol;  // x before u
  if (v.col != w.col) return v.col < w.col;
  return v.row < w.row;
}

Monomial::Monomial(std::vector<std::pair<Variable, int>> powers) {
  std::sort(powers.begin(), powers.end(), [](const auto& a, const auto& b) { return precedes(a.first, b.first); });
  for (const auto& [v, e] : powers) {
    if (e < 0) throw ValidationError("negative exponent");
    if (e == 0) continue;
    if (!powers_.empty() && powers_.back().first == v) powers_.back().second += e;
    else powers_.emplace_back(v, e);
    degree_ += e;
  }
}

Monomial Monomial::variable(Variable v, int exponent) { return Monomial({{v, exponent}}); }

int Monomial::exponent(const Variable& v) const {
  auto it = std::find_if(powers_.begin(), powers_.end(), [&](const auto& p) { return p.first == v; });
  return it == powers_.end() ? 0 : it->second;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<std::pair<Variable, int>> merged;
  merged.reserve(a.powers().size() + b.powers().size());
  std::merge(a.powers().begin(), a.powers().end(), b.powers().begin(), b.powers().end(), std::back_inserter(merged),
             [](const auto& p, const auto& q) { return precedes(p.first, q.first); });
  return Monomial(std::move(merged));
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [v, e] : m.powers()) {
    if (!out.empty()) out += '*';
    out += std::string(1, v.symbol) + "[" + std::to_string(v.row) + "," + std::to_string(v.col) + "]";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::strong_ordering GlexOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  const auto& pa = a.powers();
  const auto& pb = b.powers();
  std::size_t i = 0;
  for (; i < pa.size() && i < pb.size(); ++i) {
    if (!(pa[i].first == pb[i].first)) {
      // The monomial carrying the higher-priority variable is larger.
      return precedes(pa[i].first, pb[i].first) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (pa[i].second != pb[i].second) return pa[i].second <=> pb[i].second;
  }
  // Equal degree and a common prefix force equal length.
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(const Integer& constant) { add_term(Monomial(), constant); }

Polynomial::Polynomial(const Monomial& m, Integer c) { add_term(m, c); }

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

Integer Polynomial::evaluate(const std::function<Integer(const Variable&)>& value) const {
  Integer total = 0;
  for (const auto& [m, c] : terms_) {
    Integer t = c;
    for (const auto& [v, e] : m.powers()) t *= boost::multiprecision::pow(value(v), static_cast<unsigned>(e));
    total += t;
  }
  return total;
}

Polynomial Polynomial::substitute(const std::function<Polynomial(const Variable&)>& image) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Polynomial t(c);
    for (const auto& [v, e] : m.powers()) t = t * pow(image(v), e);
    out += t;
  }
  return out;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial pow(const Polynomial& p, int e) {
  if (e < 0) throw ValidationError("negative power");
  Polynomial out(Integer(1));
  for (int i = 0; i < e; ++i) out = out * p;
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    if (!out.empty()) out += ' ';
    out += (c < 0 ? "-" : "+") + Integer(abs(c)).str();
    if (!m.is_one()) out += "*" + to_string(m);
  }
  return out;
}

}  // namespace hibilab
