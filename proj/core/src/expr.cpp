#include "uhfkron/expr.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "uhfkron/error.hpp"

namespace uhfkron {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  AlgebraElement parse() {
    AlgebraElement result = expr();
    skip_ws();
    if (!at_end()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  struct Position {
    std::size_t pos;
    int line;
    int column;
  };

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  Position mark() const { return {pos_, line_, column_}; }
  void reset(const Position& p) {
    pos_ = p.pos;
    line_ = p.line;
    column_ = p.column;
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }

  [[noreturn]] void fail_at(const Position& p, ErrorCode code, const std::string& what) const {
    throw Error(code, "line " + std::to_string(p.line) + ", column " + std::to_string(p.column) + ": " + what);
  }

  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(std::string("expected '") + c + "'" + (at_end() ? " before end of input" : ""));
    }
  }

  // '(' 'x' ')' with optional whitespace.
  bool accept_tensor() {
    const Position start = mark();
    if (accept('(') && accept('x') && accept(')')) return true;
    reset(start);
    return false;
  }

  int natural() {
    skip_ws();
    const Position start = mark();
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000) fail("integer too large");
      advance();
    }
    if (pos_ == start.pos) fail("expected a natural number");
    return static_cast<int>(value);
  }

  std::optional<double> real() {
    skip_ws();
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        advance();
        ++n;
      }
      return n;
    };
    if (peek() == '+' || peek() == '-') advance();
    std::size_t mantissa = digits();
    if (peek() == '.') {
      advance();
      mantissa += digits();
    }
    if (mantissa == 0) return std::nullopt;
    if (peek() == 'e' || peek() == 'E') {
      // An 'E' directly followed by '[' is a matrix unit, not an exponent.
      const Position before = mark();
      advance();
      if (peek() == '+' || peek() == '-') advance();
      if (digits() == 0) reset(before);
    }
    std::string_view lexeme = text_.substr(start, pos_ - start);
    if (!lexeme.empty() && lexeme.front() == '+') lexeme.remove_prefix(1);
    double value = 0.0;
    const auto res = std::from_chars(lexeme.data(), lexeme.data() + lexeme.size(), value);
    if (res.ec != std::errc() || res.ptr != lexeme.data() + lexeme.size()) fail("malformed number");
    return value;
  }

  std::optional<Complex> scalar() {
    skip_ws();
    const Position start = mark();
    if (peek() == '(') {
      advance();
      const auto re = real();
      if (re && accept(',')) {
        const auto im = real();
        if (im && accept(')') && accept('*')) return Complex(*re, *im);
      }
      reset(start);
      return std::nullopt;
    }
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
      const auto re = real();
      if (!re) fail("malformed number");
      if (!accept('*')) fail("expected '*' after scalar");
      return Complex(*re, 0.0);
    }
    return std::nullopt;
  }

  AlgebraElement atom() {
    skip_ws();
    const Position start = mark();
    if (peek() == 'E') {
      advance();
      expect('[');
      const int dim = natural();
      expect(']');
      expect('(');
      const int row = natural();
      expect(',');
      const int col = natural();
      expect(')');
      if (dim < 2) fail_at(start, ErrorCode::validation, "matrix dimension " + std::to_string(dim) + " < 2");
      if (row < 1 || row > dim) {
        fail_at(start, ErrorCode::validation,
                "row index " + std::to_string(row) + " exceeds dimension " + std::to_string(dim));
      }
      if (col < 1 || col > dim) {
        fail_at(start, ErrorCode::validation,
                "column index " + std::to_string(col) + " exceeds dimension " + std::to_string(dim));
      }
      return AlgebraElement::matrix_unit(Signature{dim}, MatrixUnitIndex{{row}, {col}});
    }
    if (peek() == '(') {
      advance();
      AlgebraElement inner = expr();
      expect(')');
      return inner;
    }
    if (at_end()) fail("unexpected end of input, expected 'E[n](j,k)' or '('");
    fail("expected 'E[n](j,k)' or '(', found '" + std::string(1, peek()) + "'");
  }

  AlgebraElement chain() {
    AlgebraElement acc = atom();
    while (accept_tensor()) acc = elem_tensor(acc, atom());
    return acc;
  }

  AlgebraElement term() {
    const std::optional<Complex> coeff = scalar();
    const Position start = mark();
    AlgebraElement acc = chain();
    while (accept('*')) {
      AlgebraElement rhs = chain();
      if (rhs.signature() != acc.signature()) {
        fail_at(start, ErrorCode::signature_mismatch,
                "product of elements over " + acc.signature().to_string() + " and " + rhs.signature().to_string());
      }
      acc = elem_mul(acc, rhs);
    }
    return coeff ? elem_scale(*coeff, acc) : acc;
  }

  AlgebraElement expr() {
    double sign = 1.0;
    if (accept('-')) {
      sign = -1.0;
    } else {
      (void)accept('+');
    }
    AlgebraElement acc = term();
    if (sign < 0) acc = elem_scale(-1.0, acc);
    while (true) {
      skip_ws();
      const char op = peek();
      if (op != '+' && op != '-') break;
      advance();
      skip_ws();
      const Position start = mark();
      AlgebraElement rhs = term();
      if (rhs.signature() != acc.signature()) {
        fail_at(start, ErrorCode::signature_mismatch,
                "term over " + rhs.signature().to_string() + " does not match " + acc.signature().to_string());
      }
      acc = op == '+' ? elem_add(acc, rhs) : elem_sub(acc, rhs);
    }
    return acc;
  }
};

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_chain(const Signature& sig, const Unit& u) {
  std::string out;
  for (std::size_t i = 0; i < sig.level(); ++i) {
    if (i) out += " (x) ";
    out += "E[" + std::to_string(sig.dim(i)) + "](" + std::to_string(u.rows[i] + 1) + "," +
           std::to_string(u.cols[i] + 1) + ")";
  }
  return out;
}

}  // namespace

AlgebraElement parse_element(std::string_view text) { return Parser(text).parse(); }

std::string format_element(const AlgebraElement& x) {
  const Signature& sig = x.signature();
  if (x.is_zero()) {
    const Unit first{std::vector<int>(sig.level(), 0), std::vector<int>(sig.level(), 0)};
    return "0*" + format_chain(sig, first);
  }
  std::string out;
  bool first = true;
  for (const auto& [unit, coeff] : x.units()) {
    if (!first) out += " + ";
    first = false;
    out += "(" + format_double(coeff.real()) + "," + format_double(coeff.imag()) + ")*" + format_chain(sig, unit);
  }
  return out;
}

}  // namespace uhfkron
