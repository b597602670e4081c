#include "hibilab/io.hpp"

#include <cctype>

#include "hibilab/error.hpp"

namespace hibilab {

Json to_json(const YoungDiagram& d) { return Json(d.rows()); }

Json to_json(const Ssyt& t) { return Json{{"shape", t.shape().trimmed().rows()}, {"rows", t.rows()}}; }

Json to_json(const SkewTableau& t) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < t.inner()[i]; ++c) row.push_back(nullptr);
    for (int v : t.rows()[i]) row.push_back(v);
    rows.push_back(std::move(row));
  }
  return Json{{"outer", t.outer().rows()}, {"inner", t.inner().rows()}, {"rows", std::move(rows)}};
}

Json to_json(const GtPattern& f) { return Json{{"n", f.n()}, {"rows", f.rows_top_first()}}; }

Json to_json(const std::vector<ColumnTableau>& chain) {
  Json out = Json::array();
  for (const auto& c : chain) out.push_back(c.entries());
  return out;
}

namespace {

template <class T>
T read(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed ") + what + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(std::string("malformed ") + what + ": missing \"" + key + "\"");
  return j.at(key);
}

}  // namespace

YoungDiagram diagram_from_json(const Json& j) { return YoungDiagram(read<std::vector<int>>(j, "diagram")); }

Ssyt ssyt_from_json(const Json& j) {
  const auto shape = diagram_from_json(field(j, "shape", "tableau"));
  auto rows = read<std::vector<std::vector<int>>>(field(j, "rows", "tableau"), "tableau");
  return Ssyt(shape, std::move(rows));
}

GtPattern pattern_from_json(const Json& j) {
  const int n = read<int>(field(j, "n", "pattern"), "pattern");
  auto rows = read<std::vector<std::vector<int>>>(field(j, "rows", "pattern"), "pattern");
  if (static_cast<int>(rows.size()) != n)
    throw ValidationError("pattern declares n = " + std::to_string(n) + " but has " + std::to_string(rows.size()) +
                          " rows");
  return GtPattern::from_rows(rows);
}

std::vector<ColumnTableau> chain_from_json(const Json& j) {
  std::vector<ColumnTableau> chain;
  for (auto& c : read<std::vector<std::vector<int>>>(j, "chain")) chain.emplace_back(std::move(c));
  return chain;
}

std::string canonical(const Json& j) { return j.dump(); }

// ---------------------------------------------------------------------------

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }
  int small_int() {
    const std::string d = digits();
    if (d.size() > 9) fail("number too large");
    return std::stoi(d);
  }

  std::vector<int> int_list(char open, char close) {
    expect(open);
    std::vector<int> out;
    if (accept(close)) return out;
    do out.push_back(small_int());
    while (accept(','));
    expect(close);
    return out;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ValidationError("cannot parse \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) + ": " + why);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ColumnTableau parse_column(std::string_view text) {
  Scanner s(text);
  auto entries = s.int_list('[', ']');
  if (!s.done()) s.fail("trailing characters");
  return ColumnTableau(std::move(entries));
}

YoungDiagram parse_diagram(std::string_view text) {
  Scanner s(text);
  std::vector<int> rows;
  if (s.peek() == '(') {
    rows = s.int_list('(', ')');
  } else if (!s.done()) {
    do rows.push_back(s.small_int());
    while (s.accept(','));
  }
  if (!s.done()) s.fail("trailing characters");
  return YoungDiagram(std::move(rows));
}

std::vector<BracketTerm> parse_bracket_expression(std::string_view text, char symbol) {
  Scanner s(text);
  std::vector<BracketTerm> terms;
  bool first = true;
  while (!s.done()) {
    Rational sign = 1;
    if (s.accept('-')) sign = -1;
    else if (!s.accept('+') && !first) s.fail("expected '+' or '-'");
    first = false;

    BracketTerm term{sign, {}};
    bool need_factor = true;
    if (s.at_digit()) {
      Integer num(s.digits());
      Integer den = 1;
      if (s.accept('/')) den = Integer(s.digits());
      if (den == 0) s.fail("zero denominator");
      term.coefficient *= Rational(num, den);
      need_factor = s.accept('*');
    }
    while (need_factor) {
      if (!s.accept(symbol)) s.fail(std::string("expected '") + symbol + "['");
      ColumnTableau c(s.int_list('[', ']'));
      int e = 1;
      if (s.accept('^')) e = s.small_int();
      term.factors.insert(term.factors.end(), e, c);
      need_factor = s.accept('*');
    }
    terms.push_back(std::move(term));
  }
  if (terms.empty()) s.fail("empty expression");
  return terms;
}

}  // namespace hibilab
