#ifndef PARTIBLE_RATFUNC_HPP
#define PARTIBLE_RATFUNC_HPP

#include <utility>

#include "partible/zpoly.hpp"

namespace partible {

// Element of Q(z) as a reduced fraction of ZPoly, monic denominator.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(const ZPoly& p) : num_(p), den_(1) {}
  RatFunc(const Rat& c) : num_(c), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}
  RatFunc(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw error("RatFunc: zero denominator");
    reduce();
  }

  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  ZPoly as_polynomial() const {
    if (!is_polynomial()) throw error("RatFunc: not a polynomial");
    return num_ * (Rat(1) / den_.constant_value());
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  Rat eval(const Rat& z0) const {
    Rat d = den_.eval(z0);
    if (d == 0) throw error("RatFunc: pole at evaluation point");
    return num_.eval(z0) / d;
  }

  // Decompose the denominator as c * base^t; throws if any other factor
  // remains.  Returns {power t, scaled numerator num/c}.
  std::pair<int, ZPoly> as_power_denominator(const ZPoly& base) const {
    ZPoly d = den_;
    int t = 0;
    while (!d.is_constant()) {
      auto [q, r] = divmod(d, base);
      if (!r.is_zero()) throw error("RatFunc: denominator is not a power of the expected base");
      d = q;
      ++t;
    }
    return {t, num_ * (Rat(1) / d.constant_value())};
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = ZPoly(1);
      return;
    }
    ZPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = div_exact(num_, g);
      den_ = div_exact(den_, g);
    }
    Rat lc = den_.lead();
    if (lc != 1) {
      Rat inv = Rat(1) / lc;
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  ZPoly num_;
  ZPoly den_;
};

}  // namespace partible

#endif
