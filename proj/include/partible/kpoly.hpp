#ifndef PARTIBLE_KPOLY_HPP
#define PARTIBLE_KPOLY_HPP

#include <vector>

#include "partible/modint.hpp"
#include "partible/zpoly.hpp"

namespace partible {

struct denominator_divides_modulus_error : error {
  using error::error;
};

// Dense polynomial in the recurrence index k with ZPoly coefficients,
// an element of Q[z][k].  Canonical form: no trailing zero ZPoly.
class KPoly {
 public:
  KPoly() = default;
  KPoly(const ZPoly& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
  }
  KPoly(const Rat& c) : KPoly(ZPoly(c)) {}
  KPoly(long c) : KPoly(ZPoly(c)) {}
  explicit KPoly(std::vector<ZPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static KPoly variable() { return KPoly(std::vector<ZPoly>{ZPoly(0), ZPoly(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const ZPoly& coeff(int i) const {
    static const ZPoly zero;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(i)];
  }
  const ZPoly& lead() const { return coeffs_.back(); }
  const std::vector<ZPoly>& coeffs() const { return coeffs_; }

  friend bool operator==(const KPoly& a, const KPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const KPoly& a, const KPoly& b) { return !(a == b); }

  KPoly operator-() const {
    KPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend KPoly operator+(const KPoly& a, const KPoly& b) {
    std::vector<ZPoly> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return KPoly(std::move(c));
  }
  friend KPoly operator-(const KPoly& a, const KPoly& b) { return a + (-b); }
  friend KPoly operator*(const KPoly& a, const KPoly& b) {
    if (a.is_zero() || b.is_zero()) return KPoly();
    std::vector<ZPoly> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return KPoly(std::move(c));
  }
  friend KPoly operator*(const KPoly& a, const ZPoly& s) { return a * KPoly(s); }
  friend KPoly operator*(const ZPoly& s, const KPoly& a) { return a * KPoly(s); }
  friend KPoly operator*(const KPoly& a, const Rat& s) { return a * KPoly(s); }
  friend KPoly operator*(const Rat& s, const KPoly& a) { return a * KPoly(s); }

  KPoly& operator+=(const KPoly& o) { return *this = *this + o; }
  KPoly& operator-=(const KPoly& o) { return *this = *this - o; }
  KPoly& operator*=(const KPoly& o) { return *this = *this * o; }

  KPoly pow(unsigned long e) const {
    KPoly r(1);
    for (unsigned long i = 0; i < e; ++i) r *= *this;
    return r;
  }

  // f(k + c), expanded.  Horner on the linear substitute keeps this O(deg^2).
  KPoly shift_k(const Rat& c) const {
    KPoly lin(std::vector<ZPoly>{ZPoly(c), ZPoly(1)});
    return compose(lin);
  }

  // f(c - k); applying twice gives back f.
  KPoly reflect_k(const Rat& c) const {
    KPoly lin(std::vector<ZPoly>{ZPoly(c), ZPoly(-1)});
    return compose(lin);
  }

  KPoly compose(const KPoly& g) const {
    KPoly r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * g + KPoly(*it);
    return r;
  }

  // Partial evaluation at an integer (or rational) index.
  ZPoly eval_k(const Rat& k0) const {
    ZPoly r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * ZPoly(k0) + *it;
    return r;
  }

  Rat eval(const Rat& k0, const Rat& z0) const { return eval_k(k0).eval(z0); }

  ModInt eval_mod(const Int& k0, const Int& z0, std::uint64_t p) const {
    ModInt kp = ModInt::from_int(k0, p);
    ModInt zp = ModInt::from_int(z0, p);
    ModInt acc(0, p);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      ModInt zc(0, p);
      for (auto jt = it->coeffs().rbegin(); jt != it->coeffs().rend(); ++jt) {
        const Rat& q = *jt;
        Int den = q.get_den();
        if (mpz_fdiv_ui(den.get_mpz_t(), p) == 0)
          throw denominator_divides_modulus_error("eval_mod: coefficient denominator divisible by p");
        ModInt num = ModInt::from_int(q.get_num(), p);
        ModInt dinv = ModInt::from_int(den, p).inverse();
        zc = zc * zp + num * dinv;
      }
      acc = acc * kp + zc;
    }
    return acc;
  }

  // Substitute an exact value for z, collapsing to a univariate polynomial in k.
  KPoly specialize_z(const Rat& z0) const {
    std::vector<ZPoly> c;
    c.reserve(coeffs_.size());
    for (const auto& zc : coeffs_) c.emplace_back(zc.eval(z0));
    return KPoly(std::move(c));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<ZPoly> coeffs_;
};

inline KPoly poly_shift_k(const KPoly& f, const Rat& c) { return f.shift_k(c); }
inline KPoly poly_reflect_k(const KPoly& f, const Rat& c) { return f.reflect_k(c); }
inline ModInt poly_eval_mod(const KPoly& f, const Int& k0, const Int& z0, std::uint64_t p) {
  return f.eval_mod(k0, z0, p);
}

}  // namespace partible

#endif
