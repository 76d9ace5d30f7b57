#ifndef PARTIBLE_MODINT_HPP
#define PARTIBLE_MODINT_HPP

#include <cstdint>

#include "partible/rational.hpp"

namespace partible {

struct not_prime_error : error {
  using error::error;
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

// Deterministic Miller-Rabin, valid for all n < 2^64.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Residue mod an odd prime p.  Modulus is checked at construction.
class ModInt {
 public:
  ModInt(std::uint64_t residue, std::uint64_t p) : p_(p) {
    if (p < 3 || !is_prime_u64(p)) throw not_prime_error("ModInt: modulus must be an odd prime");
    r_ = residue % p;
  }

  static ModInt from_int(const Int& v, std::uint64_t p) {
    return ModInt(mpz_fdiv_ui(v.get_mpz_t(), p), p);
  }

  std::uint64_t value() const { return r_; }
  std::uint64_t modulus() const { return p_; }

  friend bool operator==(const ModInt& a, const ModInt& b) {
    return a.p_ == b.p_ && a.r_ == b.r_;
  }

  friend ModInt operator+(const ModInt& a, const ModInt& b) {
    a.check(b);
    return ModInt::raw((a.r_ + b.r_) % a.p_, a.p_);
  }
  friend ModInt operator-(const ModInt& a, const ModInt& b) {
    a.check(b);
    return ModInt::raw((a.r_ + a.p_ - b.r_) % a.p_, a.p_);
  }
  friend ModInt operator*(const ModInt& a, const ModInt& b) {
    a.check(b);
    return ModInt::raw(detail::mulmod(a.r_, b.r_, a.p_), a.p_);
  }

  ModInt pow(std::uint64_t e) const { return raw(detail::powmod(r_, e, p_), p_); }

  ModInt inverse() const {
    if (r_ == 0) throw error("ModInt: inverse of zero");
    return pow(p_ - 2);
  }

 private:
  struct raw_tag {};
  ModInt(std::uint64_t r, std::uint64_t p, raw_tag) : r_(r), p_(p) {}
  static ModInt raw(std::uint64_t r, std::uint64_t p) { return ModInt(r, p, raw_tag{}); }
  void check(const ModInt& o) const {
    if (p_ != o.p_) throw error("ModInt: mixed moduli");
  }
  std::uint64_t r_;
  std::uint64_t p_;
};

}  // namespace partible

#endif
