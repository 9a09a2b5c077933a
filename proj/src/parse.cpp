#include "cremona/parse.hpp"

#include <cctype>

namespace cremona {
namespace {

class Parser {
public:
  explicit Parser(const std::string& s) : s_(s) {}

  HomogPoly3 run() {
    HomogPoly3 r = expr();
    skip_ws();
    if (pos_ != s_.size()) err("unexpected trailing input");
    return r;
  }

private:
  [[noreturn]] void err(const std::string& msg) {
    fail(ErrorCode::SyntaxError,
         msg + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  HomogPoly3 expr() {
    HomogPoly3 acc;
    bool neg = eat('-');
    acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  HomogPoly3 term() {
    HomogPoly3 acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  HomogPoly3 factor() {
    HomogPoly3 b = base();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == start) err("expected integer exponent");
      int e = std::stoi(s_.substr(start, pos_ - start));
      b = b.pow(e);
    }
    return b;
  }

  HomogPoly3 base() {
    skip_ws();
    if (pos_ >= s_.size()) err("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      HomogPoly3 r = expr();
      if (!eat(')')) err("missing closing parenthesis");
      return r;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == 'x') {
      ++pos_;
      return HomogPoly3::variable(0);
    }
    if (c == 'y') {
      ++pos_;
      return HomogPoly3::variable(1);
    }
    if (c == 'z') {
      ++pos_;
      return HomogPoly3::variable(2);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Int numerator(s_.substr(start, pos_ - start));
      // '/' binds to the literal only when followed by digits (a/b rational)
      std::size_t save = pos_;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        std::size_t slash = pos_;
        ++pos_;
        skip_ws();
        std::size_t dstart = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == dstart) {
          pos_ = slash;
          err("expected denominator digits");
        }
        Int denominator(s_.substr(dstart, pos_ - dstart));
        if (denominator == 0) err("zero denominator");
        return HomogPoly3(make_rat(numerator, denominator));
      }
      pos_ = save;
      return HomogPoly3(Rat(numerator));
    }
    err(std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

HomogPoly3 parse_polynomial(const std::string& text) { return Parser(text).run(); }

HomogPoly3 parse_form(const std::string& text) {
  HomogPoly3 p = parse_polynomial(text);
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "expected a nonzero form: " + text);
  if (!p.is_homogeneous())
    fail(ErrorCode::NotHomogeneous, "expected a homogeneous polynomial: " + text);
  return p;
}

}  // namespace cremona
