#include <cctype>
#include <sstream>

#include "sextic/poly.hpp"

namespace sextic {

namespace {

// Recursive descent over the polynomial grammar. A sign may open an
// expression so that displayed formulas such as "-y^6 + ..." read naturally.
class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  Poly parse() {
    Poly p = expression();
    skip_ws();
    if (pos_ != s_.size()) fail(std::string("unexpected character '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  Poly expression() {
    bool negate = false;
    if (peek('-') || peek('+')) {
      negate = s_[pos_] == '-';
      ++pos_;
    }
    Poly acc = term();
    if (negate) acc = -acc;
    while (peek('+') || peek('-')) {
      char op = s_[pos_++];
      Poly rhs = term();
      if (op == '+')
        acc += rhs;
      else
        acc -= rhs;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (peek('*')) {
      ++pos_;
      acc *= factor();
    }
    return acc;
  }

  Poly factor() {
    Poly b = base();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '-') fail("negative exponent");
      if (!peek_digit()) fail("expected non-negative integer exponent");
      std::size_t start = pos_;
      Integer e = digits();
      if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == '/')) {
        pos_ = start;
        fail("non-integer exponent");
      }
      if (e > 4096) {
        pos_ = start;
        fail("exponent too large");
      }
      b = pow(b, static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  Poly base() {
    skip_ws();
    if (pos_ >= s_.size()) fail("expected operand");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expression();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = digits();
      Integer den = 1;
      if (peek('/')) {
        ++pos_;
        if (!peek_digit()) fail("expected positive integer denominator");
        std::size_t start = pos_;
        den = digits();
        if (den == 0) {
          pos_ = start;
          fail("zero denominator");
        }
      }
      Rational q(num, den);
      q.canonicalize();
      return Poly::constant(q, vars_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      for (const auto& v : vars_)
        if (v == name) return Poly::variable(name, vars_);
      pos_ = start;
      fail("undeclared symbol '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Integer digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Integer(std::string(s_.substr(start, pos_ - start)), 10);
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const std::vector<std::string>& declared_vars) {
  return Parser(text, declared_vars).parse();
}

std::string format(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any) mono << '*';
      mono << p.vars()[i];
      if (e[i] > 1) mono << '^' << e[i];
      any = true;
    }
    if (!any) {
      out << a.get_str();
    } else if (a == 1) {
      out << mono.str();
    } else {
      out << a.get_str() << '*' << mono.str();
    }
  }
  return out.str();
}

}  // namespace sextic
