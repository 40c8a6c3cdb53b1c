#include "latsqm/rational_expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "latsqm/errors.hpp"

namespace latsqm {

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;
  double a;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw BadConfig("expression '" + s + "': " + why + " at position " +
                    std::to_string(pos));
  }

  double expr() {
    double v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  double term() {
    double v = factor();
    for (;;) {
      if (eat('*'))
        v *= factor();
      else if (eat('/')) {
        v /= factor(); // IEEE semantics; a pole in a config shows up as inf
      } else
        return v;
    }
  }

  double factor() {
    skip();
    double sign = 1.0;
    while (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
      skip();
    }
    double v = primary();
    if (eat('^')) {
      skip();
      double esign = 1.0;
      if (eat('-')) esign = -1.0;
      skip();
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
      if (pos == start) fail("expected integer exponent after '^'");
      const long e = std::strtol(s.substr(start, pos - start).c_str(), nullptr, 10);
      v = std::pow(v, esign * static_cast<double>(e));
    }
    return sign * v;
  }

  double primary() {
    skip();
    if (pos >= s.size()) fail("unexpected end of input");
    if (s[pos] == '(') {
      ++pos;
      const double v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (s[pos] == 'a' || s[pos] == 'l') { // 'l' accepted as an alias for 'a'
      ++pos;
      return a;
    }
    if (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.') {
      char* end = nullptr;
      const double v = std::strtod(s.c_str() + pos, &end);
      if (end == s.c_str() + pos) fail("bad number");
      pos = static_cast<std::size_t>(end - s.c_str());
      return v;
    }
    fail("unexpected character");
  }
};

} // namespace

double eval_rational_expr(const std::string& expr, double a) {
  Parser p{expr, 0, a};
  const double v = p.expr();
  p.skip();
  if (p.pos != expr.size()) p.fail("trailing input");
  return v;
}

} // namespace latsqm
