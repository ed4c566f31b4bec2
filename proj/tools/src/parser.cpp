#include "odepoly/cli/parser.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "odepoly/errors.hpp"

namespace odepoly::cli {

namespace {

constexpr long kMaxPower = 512;
constexpr long kMaxDerivative = 64;

enum class Tok { Number, X, Deriv, Plus, Minus, Star, Slash, Caret, LParen, RParen, Equals, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
  mpz_class number;
  int order = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      Token t;
      t.line = line_;
      t.column = col_;
      if (pos_ >= s_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = s_[pos_];
      const std::size_t start = pos_;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) advance();
        t.kind = Tok::Number;
        t.text = std::string(s_.substr(start, pos_ - start));
        t.number = mpz_class(t.text);
      } else if (c == 'x') {
        advance();
        t.kind = Tok::X;
      } else if (c == 'y') {
        advance();
        t.kind = Tok::Deriv;
        while (pos_ < s_.size() && s_[pos_] == '\'') {
          advance();
          ++t.order;
        }
        if (t.order == 0 && s_.substr(pos_, 2) == "^(") {
          advance();
          advance();
          const std::size_t dl = line_, dc = col_;
          std::size_t digits = 0;
          long k = 0;
          while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            k = std::min(k * 10 + (s_[pos_] - '0'), kMaxDerivative + 1);
            advance();
            ++digits;
          }
          if (digits == 0) throw ParseError(dl, dc, "expected a derivative order after 'y^('");
          if (k > kMaxDerivative) throw ParseError(dl, dc, "derivative order too large");
          if (pos_ >= s_.size() || s_[pos_] != ')') throw ParseError(line_, col_, "expected ')' after derivative order");
          advance();
          t.order = static_cast<int>(k);
        }
      } else {
        switch (c) {
          case '+': t.kind = Tok::Plus; break;
          case '-': t.kind = Tok::Minus; break;
          case '*': t.kind = Tok::Star; break;
          case '/': t.kind = Tok::Slash; break;
          case '^': t.kind = Tok::Caret; break;
          case '(': t.kind = Tok::LParen; break;
          case ')': t.kind = Tok::RParen; break;
          case '=': t.kind = Tok::Equals; break;
          default: throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
        }
        advance();
      }
      if (t.text.empty()) t.text = std::string(s_.substr(start, pos_ - start));
      out.push_back(std::move(t));
    }
  }

 private:
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  DiffPoly equation() {
    if (peek().kind == Tok::End) raise(ErrorCode::EmptyEquation, "no equation given");
    DiffPoly lhs = expr();
    if (accept(Tok::Equals)) lhs -= expr();
    if (peek().kind != Tok::End) fail(peek(), "unexpected '" + peek().text + "'");
    if (lhs.is_zero()) raise(ErrorCode::EmptyEquation, "all terms cancel");
    return lhs;
  }

 private:
  const Token& peek() const { return t_[i_]; }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++i_;
    return true;
  }

  [[noreturn]] void fail(const Token& at, const std::string& msg) const { throw ParseError(at.line, at.column, msg); }

  DiffPoly expr() {
    bool negate = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      negate = peek().kind == Tok::Minus;
      ++i_;
    }
    DiffPoly acc = term();
    if (negate) acc = -acc;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = peek().kind == Tok::Minus;
      ++i_;
      if (minus) {
        acc -= term();
      } else {
        acc += term();
      }
    }
    return acc;
  }

  DiffPoly term() {
    DiffPoly acc = factor();
    while (accept(Tok::Star)) acc = acc * factor();
    return acc;
  }

  int power() {
    if (!accept(Tok::Caret)) return 1;
    const Token& t = peek();
    if (t.kind != Tok::Number) fail(t.kind == Tok::End ? t_[i_ - 1] : t, "expected an exponent after '^'");
    if (t.number > kMaxPower) fail(t, "exponent too large");
    ++i_;
    return static_cast<int>(t.number.get_si());
  }

  DiffPoly factor() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        ++i_;
        mpz_class den = 1;
        if (accept(Tok::Slash)) {
          const Token& d = peek();
          if (d.kind != Tok::Number) fail(d.kind == Tok::End ? t_[i_ - 1] : d, "expected a denominator after '/'");
          if (d.number == 0) fail(d, "zero denominator");
          den = d.number;
          ++i_;
        }
        return DiffPoly::constant(XPoly(Rat(t.number, den)));
      }
      case Tok::X: {
        ++i_;
        return DiffPoly::constant(XPoly::monomial(Rat(1), power()));
      }
      case Tok::Deriv: {
        ++i_;
        return DiffPoly::derivative_var(t.order).pow(power());
      }
      case Tok::LParen: {
        ++i_;
        DiffPoly inner = expr();
        if (!accept(Tok::RParen)) fail(peek(), "expected ')'");
        return inner.pow(power());
      }
      case Tok::End:
        fail(i_ > 0 ? t_[i_ - 1] : t, i_ > 0 ? "'" + t_[i_ - 1].text + "' has no right operand" : "expected a term");
      default:
        fail(t, "expected a term, found '" + t.text + "'");
    }
  }

  std::vector<Token> t_;
  std::size_t i_ = 0;
};

}  // namespace

DiffPoly parse_equation(std::string_view text) { return Parser(Lexer(text).run()).equation(); }

EquationText load_equation(const std::string& arg) {
  EquationText e;
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    e.source = ss.str();
    e.provenance = Provenance::File;
  } else {
    e.source = arg;
  }
  e.equation = parse_equation(e.source);
  return e;
}

}  // namespace odepoly::cli
