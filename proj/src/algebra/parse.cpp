#include "frobcore/parse.hpp"

#include <cctype>
#include <string>

#include "frobcore/errors.hpp"

namespace frobcore {

namespace {

class PolyParser {
 public:
  PolyParser(const Ring& ring, std::string_view text, int line, int column)
      : ring_(ring), s_(text), line_(line), col0_(column) {}

  Polynomial parse() {
    Polynomial f = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, col0_ + static_cast<int>(pos_), msg);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial f = term();
    for (;;) {
      if (accept('+'))
        f += term();
      else if (accept('-'))
        f -= term();
      else
        return f;
    }
  }
  Polynomial term() {
    Polynomial f = factor();
    while (accept('*')) f *= factor();
    return f;
  }
  Polynomial factor() {
    Polynomial base = unary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      if (pos_ - start > 9) fail("exponent too large");
      base = base.pow(std::stoull(std::string(s_.substr(start, pos_ - start))));
    }
    return base;
  }
  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }
  Polynomial primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of polynomial");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial f = expr();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      // Reduce digit by digit so long literals cannot overflow.
      std::int64_t v = 0;
      for (std::size_t i = start; i < pos_; ++i) v = (v * 10 + (s_[i] - '0')) % ring_.characteristic();
      return Polynomial::constant(ring_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto idx = ring_.index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const Ring& ring_;
  std::string_view s_;
  int line_;
  int col0_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const Ring& ring, std::string_view text, int line, int column) {
  return PolyParser(ring, text, line, column).parse();
}

std::vector<Polynomial> parse_polynomial_list(const Ring& ring, std::string_view text, int line,
                                              int column) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  if (b < e && text[b] == '[') {
    if (text[e - 1] != ']') throw ParseError(line, column + static_cast<int>(e), "expected ']'");
    ++b;
    --e;
  }
  std::vector<Polynomial> out;
  std::size_t start = b;
  int depth = 0;
  for (std::size_t i = b; i <= e; ++i) {
    if (i < e && text[i] == '(') ++depth;
    if (i < e && text[i] == ')') --depth;
    if (i == e || ((text[i] == ';' || text[i] == ',') && depth == 0)) {
      std::string_view piece = text.substr(start, i - start);
      bool blank = true;
      for (char c : piece)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      if (!blank)
        out.push_back(parse_polynomial(ring, piece, line, column + static_cast<int>(start)));
      else if (i != e || !out.empty())
        throw ParseError(line, column + static_cast<int>(start), "empty generator");
      start = i + 1;
    }
  }
  return out;
}

}  // namespace frobcore
