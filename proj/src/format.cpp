#include "dsmooth/format.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "dsmooth/error.hpp"

namespace dsmooth {

std::string to_string(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::skew: return "skew";
    case AlgebraKind::diffusion1: return "diffusion1";
    case AlgebraKind::diffusion2: return "diffusion2";
  }
  return "?";
}

const Field& AlgebraFile::field() const {
  return is_skew() ? skew().field() : diffusion().field();
}

std::size_t AlgebraFile::n() const { return is_skew() ? skew().size() : diffusion().size(); }

namespace {

enum class Tok { ident, number, slash, star, plus, minus, eq, lparen, rparen, comma, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t col;
};

class Lexer {
 public:
  Lexer(const std::string& line, std::size_t lineno) : line_(lineno) {
    std::size_t i = 0;
    while (i < line.size()) {
      char ch = line[i];
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_')) ++i;
        toks_.push_back({Tok::ident, line.substr(start, i - start), start + 1});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
        toks_.push_back({Tok::number, line.substr(start, i - start), start + 1});
        continue;
      }
      static const std::map<char, Tok> single{{'/', Tok::slash}, {'*', Tok::star},   {'+', Tok::plus},
                                              {'-', Tok::minus}, {'=', Tok::eq},     {'(', Tok::lparen},
                                              {')', Tok::rparen}, {',', Tok::comma}};
      auto it = single.find(ch);
      if (it == single.end()) throw SyntaxError(line_, start + 1, std::string("unexpected character '") + ch + "'");
      toks_.push_back({it->second, std::string(1, ch), start + 1});
      ++i;
    }
    toks_.push_back({Tok::end, "", line.size() + 1});
  }

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }
  Token expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    return next();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw SyntaxError(line_, t.col, msg + (t.kind == Tok::end ? " at end of line" : ", found '" + t.text + "'"));
  }
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

Scalar scalar(Lexer& lx, const Field& f) {
  Token num = lx.expect(Tok::number, "a number");
  std::string text = num.text;
  if (lx.accept(Tok::slash)) {
    Token den = lx.expect(Tok::number, "a denominator");
    if (den.text.find_first_not_of('0') == std::string::npos) throw SyntaxError(lx.line(), den.col, "zero denominator");
    text += "/" + den.text;
  }
  try {
    return f.coerce(Scalar::parse(text));
  } catch (const DivisionByZero& e) {
    throw SyntaxError(lx.line(), num.col, e.what());
  }
}

Scalar signed_scalar(Lexer& lx, const Field& f) {
  bool neg = false;
  if (lx.accept(Tok::minus)) neg = true;
  else lx.accept(Tok::plus);
  Scalar s = scalar(lx, f);
  return neg ? -s : s;
}

// x<g> with 1 <= g <= n, returned 0-based.
std::size_t variable(Lexer& lx, std::size_t n) {
  const Token& t = lx.peek();
  if (t.kind != Tok::ident || t.text.size() < 2 || t.text[0] != 'x' ||
      t.text.find_first_not_of("0123456789", 1) != std::string::npos)
    lx.fail("expected a generator x1..x" + std::to_string(n));
  std::size_t g = std::stoul(t.text.substr(1));
  if (g < 1 || g > n) lx.fail("generator index out of range 1.." + std::to_string(n));
  lx.next();
  return g - 1;
}

std::size_t index_number(Lexer& lx, std::size_t n) {
  const Token& t = lx.peek();
  if (t.kind != Tok::number) lx.fail("expected an index");
  std::size_t g = std::stoul(t.text);
  if (g < 1 || g > n) lx.fail("index out of range 1.." + std::to_string(n));
  lx.next();
  return g - 1;
}

bool is_variable(const Token& t) { return t.kind == Tok::ident && t.text.size() >= 2 && t.text[0] == 'x'; }

// Sum of terms [scalar] ['*' x<g>] | x<g>, with signs.
NcPoly linear_expression(Lexer& lx, std::size_t n, const Field& f) {
  std::vector<Scalar> lin(n, f.from_int(0));
  Scalar c0 = f.from_int(0);
  bool first = true;
  for (;;) {
    bool neg = false;
    if (lx.accept(Tok::minus)) neg = true;
    else if (!lx.accept(Tok::plus) && !first) break;
    first = false;
    Scalar coeff = f.from_int(1);
    std::optional<std::size_t> g;
    if (lx.peek().kind == Tok::number) {
      coeff = scalar(lx, f);
      if (lx.accept(Tok::star)) g = variable(lx, n);
    } else if (is_variable(lx.peek())) {
      g = variable(lx, n);
    } else {
      lx.fail("expected a term");
    }
    if (neg) coeff = -coeff;
    if (g) lin[*g] += coeff;
    else c0 += coeff;
    if (lx.peek().kind == Tok::end) break;
  }
  if (lx.peek().kind != Tok::end) lx.fail("expected '+', '-' or end of line");
  return coerce(NcPoly::linear(lin, c0), f);
}

struct Header {
  std::optional<std::string> name, kind, field, n;
  std::map<std::string, std::size_t> line;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

AlgebraFile parse_algebra(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  Header h;
  std::vector<std::pair<std::size_t, std::string>> body;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    if (trim(line).empty()) continue;
    auto colon = line.find(':');
    if (colon != std::string::npos) {
      if (!body.empty()) throw SyntaxError(lineno, 1, "header line after relations");
      std::string key = trim(line.substr(0, colon)), value = trim(line.substr(colon + 1));
      std::optional<std::string>* slot = key == "name"    ? &h.name
                                         : key == "kind"  ? &h.kind
                                         : key == "field" ? &h.field
                                         : key == "n"     ? &h.n
                                                          : nullptr;
      std::size_t col = line.find_first_not_of(" \t") + 1;
      if (!slot) throw SyntaxError(lineno, col, "unknown header key '" + key + "'");
      if (*slot) throw SyntaxError(lineno, col, "duplicate header key '" + key + "'");
      if (value.empty()) throw SyntaxError(lineno, colon + 2, "empty value for '" + key + "'");
      *slot = value;
      h.line[key] = lineno;
      continue;
    }
    body.emplace_back(lineno, line);
  }

  AlgebraFile out;
  if (h.name) out.name = *h.name;
  if (h.kind) {
    if (*h.kind == "skew") out.kind = AlgebraKind::skew;
    else if (*h.kind == "diffusion1") out.kind = AlgebraKind::diffusion1;
    else if (*h.kind == "diffusion2") out.kind = AlgebraKind::diffusion2;
    else throw SyntaxError(h.line["kind"], 1, "unknown kind '" + *h.kind + "'");
  }
  Field field = Field::rationals();
  if (h.field) {
    try {
      field = Field::parse(*h.field);
    } catch (const std::invalid_argument& e) {
      throw SyntaxError(h.line["field"], 1, e.what());
    } catch (const BadCharacteristic& e) {
      throw BadCharacteristic(std::to_string(h.line["field"]) + ":1: " + e.what());
    }
  }
  if (!h.n) throw SyntaxError(0, 0, "missing header key 'n'");
  if (h.n->find_first_not_of("0123456789") != std::string::npos || h.n->size() > 3)
    throw SyntaxError(h.line["n"], 1, "n must be a positive integer");
  std::size_t n = std::stoul(*h.n);
  if (n < 1 || n > 64) throw SyntaxError(h.line["n"], 1, "n must lie in 1..64");

  if (out.kind == AlgebraKind::skew) {
    Presentation p(field, n);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& [ln, line] : body) {
      Lexer lx(line, ln);
      std::size_t col = lx.peek().col;
      std::size_t i = variable(lx, n);
      lx.expect(Tok::star, "'*'");
      std::size_t j = variable(lx, n);
      if (i >= j) throw SyntaxError(ln, col, "relation pair needs i < j");
      bool plus = false;
      if (lx.accept(Tok::plus)) plus = true;
      else lx.expect(Tok::minus, "'-' before the swapped product");
      Scalar a = field.from_int(1);
      if (lx.peek().kind == Tok::number) {
        a = scalar(lx, field);
        lx.expect(Tok::star, "'*'");
      }
      if (plus) a = -a;
      std::size_t sj = variable(lx, n);
      lx.expect(Tok::star, "'*'");
      std::size_t si = variable(lx, n);
      if (sj != j || si != i) throw SyntaxError(ln, col, "second product must be the swapped pair");
      lx.expect(Tok::eq, "'='");
      NcPoly tail = linear_expression(lx, n, field);
      if (!seen.insert({i, j}).second)
        throw DuplicatePair(std::to_string(ln) + ":" + std::to_string(col) + ": pair (" + std::to_string(i + 1) +
                            "," + std::to_string(j + 1) + ") given twice");
      if (a.is_zero())
        throw ZeroQuadCoeff(std::to_string(ln) + ":" + std::to_string(col) + ": quadratic coefficient is zero");
      p.set_relation(i, j, a, tail);
    }
    out.algebra = std::move(p);
    return out;
  }

  DiffusionType type = out.kind == AlgebraKind::diffusion1 ? DiffusionType::type1 : DiffusionType::type2;
  DiffusionPresentation dp(field, n, type);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [ln, line] : body) {
    Lexer lx(line, ln);
    std::size_t col = lx.peek().col;
    Token head = lx.expect(Tok::ident, "'lambda' or 'x'");
    std::string where = std::to_string(ln) + ":" + std::to_string(col) + ": ";
    if (head.text == "lambda") {
      lx.expect(Tok::lparen, "'('");
      std::size_t i = index_number(lx, n);
      lx.expect(Tok::comma, "','");
      std::size_t j = index_number(lx, n);
      lx.expect(Tok::rparen, "')'");
      if (i == j) throw SyntaxError(ln, col, "lambda needs two distinct indices");
      lx.expect(Tok::eq, "'='");
      Scalar v = signed_scalar(lx, field);
      if (lx.peek().kind != Tok::end) lx.fail("expected end of line");
      if (!seen.insert({i, j}).second) throw DuplicatePair(where + "lambda given twice");
      try {
        dp.set_lambda(i, j, v);
      } catch (const ZeroLambda&) {
        throw ZeroLambda(where + "lambda(i,j) with i < j must be nonzero");
      }
    } else if (head.text == "x") {
      if (type != DiffusionType::type1) throw SyntaxError(ln, col, "x(i) values only exist for diffusion1");
      lx.expect(Tok::lparen, "'('");
      std::size_t i = index_number(lx, n);
      lx.expect(Tok::rparen, "')'");
      lx.expect(Tok::eq, "'='");
      Scalar v = signed_scalar(lx, field);
      if (lx.peek().kind != Tok::end) lx.fail("expected end of line");
      if (!seen.insert({i, i}).second) throw DuplicatePair(where + "x given twice");
      dp.set_x(i, v);
    } else {
      throw SyntaxError(ln, col, "expected 'lambda' or 'x'");
    }
  }
  out.algebra = std::move(dp);
  return out;
}

namespace {

std::string linear_text(const NcPoly& p, std::size_t n) {
  std::string out;
  auto put = [&](const Scalar& c, const std::string& var) {
    std::string s = c.to_string();
    bool neg = !s.empty() && s[0] == '-';
    if (neg) s.erase(0, 1);
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (var.empty()) out += s;
    else out += (s == "1" ? "" : s + "*") + var;
  };
  for (std::size_t g = 0; g < n; ++g) {
    Monomial m(n);
    m[g] = 1;
    Scalar c = p.coefficient(m);
    if (!c.is_zero()) put(c, "x" + std::to_string(g + 1));
  }
  Scalar c0 = p.constant_term();
  if (!c0.is_zero()) put(c0, "");
  return out.empty() ? "0" : out;
}

}  // namespace

std::string emit_algebra(const AlgebraFile& f) {
  std::ostringstream os;
  os << "name: " << f.name << "\n";
  os << "kind: " << to_string(f.kind) << "\n";
  os << "field: " << f.field().to_string() << "\n";
  os << "n: " << f.n() << "\n";
  std::size_t n = f.n();
  if (f.is_skew()) {
    const Presentation& p = f.skew();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Relation& r = p.relation(i, j);
        if (r.quad.is_one() && r.tail.is_zero()) continue;
        if (r.tail.degree() > 1) throw std::invalid_argument("only linear tails can be written");
        std::string a = r.quad.to_string();
        bool neg = a[0] == '-';
        if (neg) a.erase(0, 1);
        std::string xi = "x" + std::to_string(i + 1), xj = "x" + std::to_string(j + 1);
        os << xi << "*" << xj << (neg ? " + " : " - ") << (a == "1" ? "" : a + "*") << xj << "*" << xi << " = "
           << linear_text(r.tail, n) << "\n";
      }
    return os.str();
  }
  const DiffusionPresentation& dp = f.diffusion();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && !dp.lambda(i, j).is_one())
        os << "lambda(" << i + 1 << "," << j + 1 << ") = " << dp.lambda(i, j).to_string() << "\n";
  if (dp.type() == DiffusionType::type1)
    for (std::size_t i = 0; i < n; ++i)
      if (!dp.x(i).is_zero()) os << "x(" << i + 1 << ") = " << dp.x(i).to_string() << "\n";
  return os.str();
}

AlgebraFile read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

Presentation presentation_of(const AlgebraFile& f) {
  return f.is_skew() ? f.skew() : encode_presentation(f.diffusion());
}

}  // namespace dsmooth
