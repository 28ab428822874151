#include "wupto/format.hpp"

#include <cctype>
#include <istream>
#include <sstream>
#include <vector>

namespace wupto {

const char* parse_code_name(ParseCode c) {
  switch (c) {
    case ParseCode::UnknownSemiring: return "unknown-semiring";
    case ParseCode::UnexpectedToken: return "unexpected-token";
    case ParseCode::MissingSection: return "missing-section";
    case ParseCode::BadNumber: return "bad-number";
    case ParseCode::BadScalar: return "bad-scalar";
    case ParseCode::OutOfDomain: return "out-of-domain";
    case ParseCode::DimensionMismatch: return "dimension-mismatch";
    case ParseCode::UnknownSymbol: return "unknown-symbol";
    case ParseCode::DuplicateSymbol: return "duplicate-symbol";
    case ParseCode::MissingTransition: return "missing-transition";
    case ParseCode::BadVector: return "bad-vector";
    case ParseCode::BadUnitIndex: return "bad-unit-index";
    case ParseCode::BadDiagonal: return "bad-diagonal";
    case ParseCode::TrailingInput: return "trailing-input";
  }
  return "?";
}

namespace {

std::string position_prefix(std::size_t line, std::size_t col) {
  if (line == 0) return "";
  std::string p = "line " + std::to_string(line);
  if (col != 0) p += ", col " + std::to_string(col);
  return p + ": ";
}

}  // namespace

ParseError::ParseError(ParseCode code_, std::size_t line_, std::size_t col_,
                       const std::string& msg)
    : std::runtime_error(position_prefix(line_, col_) + msg + " [" + parse_code_name(code_) + "]"),
      code(code_),
      line(line_),
      col(col_),
      detail(msg) {}

namespace {

struct Token {
  std::string text;
  std::size_t line = 0;
  std::size_t col = 0;
};

// Whitespace-separated tokens with 1-based positions; '#' comments run to
// end of line.
std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != '#') {
      t.text += text[i];
      ++i;
      ++col;
    }
    tokens.push_back(std::move(t));
  }
  return tokens;
}

struct TokenStream {
  std::vector<Token> tokens;
  std::size_t pos = 0;

  bool done() const { return pos >= tokens.size(); }

  const Token& peek() const {
    if (done()) throw ParseError(ParseCode::MissingSection, 0, 0, "unexpected end of input");
    return tokens[pos];
  }

  Token next() {
    Token t = peek();
    ++pos;
    return t;
  }

  Token expect_keyword(const std::string& kw) {
    if (done())
      throw ParseError(ParseCode::MissingSection, 0, 0, "expected '" + kw + "' before end of input");
    Token t = next();
    if (t.text != kw)
      throw ParseError(ParseCode::UnexpectedToken, t.line, t.col,
                       "expected '" + kw + "', found '" + t.text + "'");
    return t;
  }
};

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

boost::multiprecision::cpp_int parse_natural(std::string_view s) {
  return boost::multiprecision::cpp_int(std::string(s));
}

std::size_t parse_count(TokenStream& ts, const char* what) {
  Token t = ts.next();
  if (!all_digits(t.text) || t.text.size() > 9)
    throw ParseError(ParseCode::BadNumber, t.line, t.col,
                     std::string("expected ") + what + ", found '" + t.text + "'");
  return static_cast<std::size_t>(std::stoul(t.text));
}

std::optional<SemiringId> semiring_by_name(std::string_view name) {
  if (name == "boolean") return SemiringId::Boolean;
  if (name == "tropical-nat") return SemiringId::TropicalNat;
  if (name == "tropical-real") return SemiringId::TropicalReal;
  if (name == "maxtimes") return SemiringId::MaxTimes;
  if (name == "rational-field") return SemiringId::RationalField;
  return std::nullopt;
}

}  // namespace

Value parse_scalar(SemiringId s, std::string_view token) {
  if (token == "inf") {
    if (s != SemiringId::TropicalNat && s != SemiringId::TropicalReal)
      throw ParseError(ParseCode::OutOfDomain, 0, 0,
                       std::string("'inf' is not a ") + semiring_name(s) + " value");
    return Value::infinity(s);
  }
  std::string_view body = token;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }
  if (negative && s != SemiringId::RationalField)
    throw ParseError(ParseCode::OutOfDomain, 0, 0,
                     std::string("negative values are not ") + semiring_name(s) + " values");
  Rat q;
  if (std::size_t slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den) || parse_natural(den) == 0)
      throw ParseError(ParseCode::BadScalar, 0, 0, "malformed fraction '" + std::string(token) + "'");
    q = Rat(parse_natural(num), parse_natural(den));
  } else if (std::size_t dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac))
      throw ParseError(ParseCode::BadScalar, 0, 0, "malformed decimal '" + std::string(token) + "'");
    if (frac.size() > 6)
      throw ParseError(ParseCode::BadScalar, 0, 0,
                       "at most six fractional digits supported: '" + std::string(token) + "'");
    boost::multiprecision::cpp_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    q = Rat(parse_natural(whole) * scale + parse_natural(frac), scale);
  } else if (all_digits(body)) {
    q = Rat(parse_natural(body));
  } else {
    throw ParseError(ParseCode::BadScalar, 0, 0, "malformed scalar '" + std::string(token) + "'");
  }
  if (negative) q = -q;
  try {
    return Value::from_rat(s, std::move(q));
  } catch (const UsageError& e) {
    throw ParseError(ParseCode::OutOfDomain, 0, 0, e.what());
  }
}

std::string render_scalar(const Value& v) { return to_string(v); }

namespace {

Value parse_scalar_at(SemiringId s, const Token& t) {
  try {
    return parse_scalar(s, t.text);
  } catch (const ParseError& e) {
    throw ParseError(e.code, t.line, t.col, e.detail);
  }
}

}  // namespace

Vec parse_vector(SemiringId s, std::size_t dim, std::string_view text) {
  if (text.rfind("unit:", 0) == 0 || text.find("+unit:") != std::string_view::npos) {
    Vec acc(s, dim);
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t plus = text.find('+', start);
      std::string_view part = text.substr(start, plus == std::string_view::npos ? std::string_view::npos
                                                                                : plus - start);
      if (part.rfind("unit:", 0) != 0)
        throw ParseError(ParseCode::BadVector, 0, 0,
                         "expected unit:<index> in '" + std::string(text) + "'");
      std::string_view idx = part.substr(5);
      if (!all_digits(idx) || idx.size() > 9)
        throw ParseError(ParseCode::BadUnitIndex, 0, 0, "bad unit index '" + std::string(part) + "'");
      std::size_t i = static_cast<std::size_t>(std::stoul(std::string(idx)));
      if (i < 1 || i > dim)
        throw ParseError(ParseCode::BadUnitIndex, 0, 0,
                         "unit index " + std::string(idx) + " out of range 1.." + std::to_string(dim));
      acc = vec_combine(acc, Vec::unit(s, dim, i - 1));
      if (plus == std::string_view::npos) break;
      start = plus + 1;
    }
    return acc;
  }

  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != dim)
    throw ParseError(ParseCode::DimensionMismatch, 0, 0,
                     "expected " + std::to_string(dim) + " entries, found " +
                         std::to_string(parts.size()));
  Vec v(s, dim);
  for (std::size_t i = 0; i < dim; ++i) v.set(i, parse_scalar(s, parts[i]));
  return v;
}

WeightedAutomaton parse_automaton_text(std::string_view text) {
  TokenStream ts{tokenize(text)};

  ts.expect_keyword("semiring");
  Token sr_tok = ts.next();
  auto sr = semiring_by_name(sr_tok.text);
  if (!sr)
    throw ParseError(ParseCode::UnknownSemiring, sr_tok.line, sr_tok.col,
                     "unknown semiring '" + sr_tok.text + "'");

  ts.expect_keyword("states");
  std::size_t n = parse_count(ts, "state count");
  if (n == 0)
    throw ParseError(ParseCode::DimensionMismatch, 0, 0, "state count must be positive");

  Token alpha_kw = ts.expect_keyword("alphabet");
  std::vector<std::string> alphabet;
  while (!ts.done() && ts.peek().text != "output") {
    Token t = ts.next();
    for (const std::string& prev : alphabet)
      if (prev == t.text)
        throw ParseError(ParseCode::DuplicateSymbol, t.line, t.col,
                         "duplicate alphabet symbol '" + t.text + "'");
    alphabet.push_back(t.text);
  }
  if (alphabet.empty())
    throw ParseError(ParseCode::MissingSection, alpha_kw.line, alpha_kw.col,
                     "alphabet must list at least one symbol");

  ts.expect_keyword("output");
  Vec output(*sr, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (ts.done())
      throw ParseError(ParseCode::DimensionMismatch, 0, 0,
                       "output vector needs " + std::to_string(n) + " entries");
    Token t = ts.next();
    output.set(i, parse_scalar_at(*sr, t));
  }

  std::vector<std::optional<Mat>> trans(alphabet.size());
  while (!ts.done()) {
    Token kw = ts.next();
    if (kw.text != "trans")
      throw ParseError(ParseCode::UnexpectedToken, kw.line, kw.col,
                       "expected 'trans', found '" + kw.text + "'");
    Token sym = ts.next();
    int idx = -1;
    for (std::size_t i = 0; i < alphabet.size(); ++i)
      if (alphabet[i] == sym.text) idx = static_cast<int>(i);
    if (idx < 0)
      throw ParseError(ParseCode::UnknownSymbol, sym.line, sym.col,
                       "symbol '" + sym.text + "' is not in the alphabet");
    if (trans[static_cast<std::size_t>(idx)])
      throw ParseError(ParseCode::DuplicateSymbol, sym.line, sym.col,
                       "duplicate trans block for '" + sym.text + "'");
    Mat m(*sr, n);
    for (std::size_t src = 0; src < n; ++src)
      for (std::size_t dst = 0; dst < n; ++dst) {
        if (ts.done())
          throw ParseError(ParseCode::DimensionMismatch, 0, 0,
                           "trans " + sym.text + " needs " + std::to_string(n * n) + " entries");
        Token t = ts.next();
        m.set(src, dst, parse_scalar_at(*sr, t));
      }
    trans[static_cast<std::size_t>(idx)] = std::move(m);
  }

  std::vector<Mat> mats;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (!trans[i])
      throw ParseError(ParseCode::MissingTransition, 0, 0,
                       "missing trans block for symbol '" + alphabet[i] + "'");
    mats.push_back(std::move(*trans[i]));
  }
  return WeightedAutomaton::make(*sr, n, std::move(alphabet), std::move(output), std::move(mats));
}

WeightedAutomaton parse_automaton(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_automaton_text(buf.str());
}

std::string serialize_automaton(const WeightedAutomaton& a) {
  std::ostringstream os;
  os << "semiring " << semiring_name(a.semiring) << "\n";
  os << "states " << a.n << "\n";
  os << "alphabet";
  for (const std::string& s : a.alphabet) os << ' ' << s;
  os << "\n";
  os << "output";
  for (std::size_t i = 0; i < a.n; ++i) os << ' ' << render_scalar(a.output[i]);
  os << "\n";
  for (std::size_t s = 0; s < a.alphabet.size(); ++s) {
    os << "trans " << a.alphabet[s] << "\n";
    for (std::size_t src = 0; src < a.n; ++src) {
      for (std::size_t dst = 0; dst < a.n; ++dst) {
        if (dst) os << ' ';
        os << render_scalar(a.trans[s].at(src, dst));
      }
      os << "\n";
    }
  }
  return os.str();
}

WeightedDigraph parse_graph_text(std::string_view text) {
  TokenStream ts{tokenize(text)};
  ts.expect_keyword("graph");
  ts.expect_keyword("vertices");
  std::size_t n = parse_count(ts, "vertex count");
  if (n == 0) throw ParseError(ParseCode::DimensionMismatch, 0, 0, "vertex count must be positive");
  const SemiringId sr = SemiringId::TropicalReal;
  Mat m(sr, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (ts.done())
        throw ParseError(ParseCode::DimensionMismatch, 0, 0,
                         "graph matrix needs " + std::to_string(n * n) + " entries");
      Token t = ts.next();
      Value v = parse_scalar_at(sr, t);
      if (i == j && !v.is_one())
        throw ParseError(ParseCode::BadDiagonal, t.line, t.col, "graph diagonal must be 0");
      m.set(i, j, std::move(v));
    }
  if (!ts.done()) {
    Token t = ts.next();
    throw ParseError(ParseCode::TrailingInput, t.line, t.col,
                     "unexpected token '" + t.text + "' after graph matrix");
  }
  return WeightedDigraph::make(sr, std::move(m));
}

WeightedDigraph parse_graph(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_text(buf.str());
}

std::string serialize_graph(const WeightedDigraph& g) {
  std::ostringstream os;
  os << "graph\nvertices " << g.n << "\n";
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = 0; j < g.n; ++j) {
      if (j) os << ' ';
      os << render_scalar(g.weights.at(i, j));
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace wupto
