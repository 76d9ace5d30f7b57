#ifndef PARTIBLE_ZPOLY_HPP
#define PARTIBLE_ZPOLY_HPP

#include <algorithm>
#include <vector>

#include "partible/rational.hpp"

namespace partible {

// Dense polynomial in the parameter z over Q.  coeffs[i] is the
// coefficient of z^i; the top coefficient is nonzero unless the
// polynomial is zero (empty coefficient list).
class ZPoly {
 public:
  ZPoly() = default;
  ZPoly(const Rat& c) {
    if (c != 0) coeffs_.push_back(c);
  }
  ZPoly(long c) : ZPoly(Rat(c)) {}
  explicit ZPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static ZPoly variable() { return ZPoly(std::vector<Rat>{0, 1}); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // degree of 0 is -1 here; callers that need the -inf convention test is_zero().
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Rat& coeff(int i) const {
    static const Rat zero = 0;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(i)];
  }
  const Rat& lead() const { return coeffs_.back(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Rat constant_value() const { return coeffs_.empty() ? Rat(0) : coeffs_[0]; }

  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

  ZPoly operator-() const {
    ZPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return ZPoly(std::move(c));
  }
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly();
    std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return ZPoly(std::move(c));
  }
  friend ZPoly operator*(const ZPoly& a, const Rat& s) { return a * ZPoly(s); }
  friend ZPoly operator*(const Rat& s, const ZPoly& a) { return a * ZPoly(s); }

  ZPoly& operator+=(const ZPoly& o) { return *this = *this + o; }
  ZPoly& operator-=(const ZPoly& o) { return *this = *this - o; }
  ZPoly& operator*=(const ZPoly& o) { return *this = *this * o; }

  Rat eval(const Rat& z) const {
    Rat r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * z + *it;
    return r;
  }

  // f(a*z + b), used to re-express numerators in terms of eta.
  ZPoly compose_linear(const Rat& a, const Rat& b) const {
    ZPoly lin(std::vector<Rat>{b, a});
    ZPoly r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * lin + ZPoly(*it);
    return r;
  }

  ZPoly pow(unsigned long e) const {
    ZPoly r(1);
    for (unsigned long i = 0; i < e; ++i) r *= *this;
    return r;
  }

  // Euclidean division over Q; returns {quotient, remainder}.
  friend std::pair<ZPoly, ZPoly> divmod(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw error("ZPoly divmod: division by zero polynomial");
    ZPoly rem = a;
    std::vector<Rat> q;
    if (rem.degree() >= b.degree())
      q.assign(static_cast<size_t>(rem.degree() - b.degree()) + 1, Rat(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      int shift = rem.degree() - b.degree();
      Rat c = rem.lead() / b.lead();
      q[static_cast<size_t>(shift)] = c;
      std::vector<Rat> sub(static_cast<size_t>(shift), Rat(0));
      for (const auto& bc : b.coeffs_) sub.push_back(bc * c);
      rem = rem - ZPoly(std::move(sub));
    }
    return {ZPoly(std::move(q)), rem};
  }

  friend ZPoly div_exact(const ZPoly& a, const ZPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw error("ZPoly div_exact: inexact division");
    return q;
  }

  // Monic gcd over Q.
  friend ZPoly gcd(ZPoly a, ZPoly b) {
    while (!b.is_zero()) {
      ZPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rat(1) / a.lead());
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rat> coeffs_;
};

}  // namespace partible

#endif
