#ifndef PARTIBLE_RATIONAL_HPP
#define PARTIBLE_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace partible {

// Exact scalars. mpq_class keeps gcd(|num|, den) = 1 and den > 0 after
// canonicalize(); every constructor below goes through that.
using Int = mpz_class;
using Rat = mpq_class;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat make_rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
  Rat r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= base;
  return r;
}

// Exact quotient; throws if the division leaves a remainder.
inline Int div_exact(const Int& a, const Int& b, const char* what = "div_exact") {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw error(std::string(what) + ": inexact division");
  return q;
}

inline Int mod_nonneg(const Int& a, const Int& p) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  return r;
}

}  // namespace partible

#endif
