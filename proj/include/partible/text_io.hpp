#ifndef PARTIBLE_TEXT_IO_HPP
#define PARTIBLE_TEXT_IO_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "partible/kpoly.hpp"

namespace partible {

struct parse_error : error {
  using error::error;
};

// Canonical text rendering: "(2*z+1)*k^2 - 3*k + 1/2".  The parser
// below accepts the same grammar (integers, rationals a/b, variables
// k and z, + - * ^, parentheses).

inline std::string render_zpoly(const ZPoly& f, const std::string& var = "z") {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const Rat& c = f.coeff(i);
    if (c == 0) continue;
    Rat a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    bool unit = (a == 1) && i > 0;
    if (!unit) out += a.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

inline std::string render_kpoly(const KPoly& f, const std::string& kvar = "k",
                                const std::string& zvar = "z") {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const ZPoly& c = f.coeff(i);
    if (c.is_zero()) continue;
    std::string cs;
    bool negated = false;
    if (c.is_constant()) {
      Rat v = c.constant_value();
      negated = v < 0;
      Rat a = abs(v);
      if (a != 1 || i == 0) cs = a.get_str();
    } else {
      cs = "(" + render_zpoly(c, zvar) + ")";
    }
    if (out.empty()) {
      if (negated) out += "-";
    } else {
      out += negated ? " - " : " + ";
    }
    out += cs;
    if (i > 0) {
      if (!cs.empty()) out += "*";
      out += kvar;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s, const KPoly* eta = nullptr) : s_(s), eta_(eta) {}

  KPoly parse() {
    KPoly r = expr();
    skip_ws();
    if (pos_ != s_.size()) throw parse_error("unexpected trailing input in polynomial");
    return r;
  }

 private:
  KPoly expr() {
    KPoly r;
    bool neg = false;
    skip_ws();
    if (peek() == '+' || peek() == '-') neg = (get() == '-');
    r = term();
    if (neg) r = -r;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      get();
      KPoly t = term();
      r = (c == '+') ? r + t : r - t;
    }
    return r;
  }

  KPoly term() {
    KPoly r = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      get();
      r *= factor();
    }
    return r;
  }

  KPoly factor() {
    KPoly base = atom();
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      unsigned long e = 0;
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        throw parse_error("expected integer exponent after '^'");
      while (std::isdigit(static_cast<unsigned char>(peek()))) e = e * 10 + (get() - '0');
      return base.pow(e);
    }
    return base;
  }

  KPoly atom() {
    skip_ws();
    char c = peek();
    if (c == '-') {
      get();
      return -factor();
    }
    if (c == '(') {
      get();
      KPoly r = expr();
      skip_ws();
      if (get() != ')') throw parse_error("missing ')'");
      return r;
    }
    if (c == 'e' && s_.substr(pos_, 3) == "eta") {
      if (!eta_) throw parse_error("'eta' is not available in this context");
      pos_ += 3;
      return *eta_;
    }
    if (c == 'k') {
      get();
      return KPoly::variable();
    }
    if (c == 'z') {
      get();
      return KPoly(ZPoly::variable());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = integer();
      skip_ws();
      if (peek() == '/') {
        get();
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
          throw parse_error("expected denominator after '/'");
        Int den = integer();
        if (den == 0) throw parse_error("zero denominator");
        return KPoly(make_rat(num, den));
      }
      return KPoly(make_rat(num, Int(1)));
    }
    throw parse_error(std::string("unexpected character '") + c + "' in polynomial");
  }

  Int integer() {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
    return Int(digits);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

  std::string_view s_;
  const KPoly* eta_;
  size_t pos_ = 0;
};

}  // namespace detail

inline KPoly parse_kpoly(std::string_view s, const KPoly* eta = nullptr) {
  return detail::PolyParser(s, eta).parse();
}

inline ZPoly parse_zpoly(std::string_view s) {
  KPoly f = parse_kpoly(s);
  if (f.degree() > 0) throw parse_error("expected a polynomial in z only");
  return f.coeff(0);
}

}  // namespace partible

#endif
