#ifndef PARTIBLE_SEQUENCES_HPP
#define PARTIBLE_SEQUENCES_HPP

#include <string>
#include <vector>

#include "partible/shift_op.hpp"
#include "partible/text_io.hpp"

namespace partible {

struct non_integral_step_error : error {
  using error::error;
};

enum class Family { LargeSchroder, LittleSchroder, CentralDelannoy };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::LargeSchroder: return "large";
    case Family::LittleSchroder: return "little";
    case Family::CentralDelannoy: return "delannoy";
  }
  return "?";
}

// S_n(z) = sum_k C(n,k) C(n+k,k) z^k / (k+1); integer coefficients.
inline ZPoly large_schroder_poly(long n) {
  std::vector<Rat> c;
  for (long k = 0; k <= n; ++k) {
    Int t = binomial(n, k) * binomial(n + k, k);
    c.push_back(Rat(div_exact(t, Int(k + 1), "large_schroder")));
  }
  return ZPoly(std::move(c));
}

// s_n(z) = sum_{k=1}^n N(n,k) z^{k-1} (z+1)^{n-k}, Narayana N(n,k);
// s_0 = 0 by convention (empty sum).
inline ZPoly little_schroder_poly(long n) {
  ZPoly r;
  ZPoly zp1(std::vector<Rat>{1, 1});
  ZPoly zvar = ZPoly::variable();
  for (long k = 1; k <= n; ++k) {
    Int t = binomial(n, k) * binomial(n, k - 1);
    Rat nar(div_exact(t, Int(n), "little_schroder"));
    r += nar * zvar.pow(static_cast<unsigned long>(k - 1)) *
         zp1.pow(static_cast<unsigned long>(n - k));
  }
  return r;
}

// D_n(z) = sum_k C(n,k) C(n+k,k) z^k.
inline ZPoly central_delannoy_poly(long n) {
  std::vector<Rat> c;
  for (long k = 0; k <= n; ++k) c.push_back(Rat(binomial(n, k) * binomial(n + k, k)));
  return ZPoly(std::move(c));
}

inline Int eval_int_poly(const ZPoly& f, const Int& z) {
  Rat r = f.eval(Rat(z));
  if (!is_integer(r)) throw error("eval_int_poly: non-integer value");
  return r.get_num();
}

inline Int large_schroder(long n, const Int& z) { return eval_int_poly(large_schroder_poly(n), z); }
inline Int little_schroder(long n, const Int& z) { return eval_int_poly(little_schroder_poly(n), z); }
inline Int central_delannoy(long n, const Int& z) { return eval_int_poly(central_delannoy_poly(n), z); }

inline ZPoly family_poly(Family f, long n) {
  switch (f) {
    case Family::LargeSchroder: return large_schroder_poly(n);
    case Family::LittleSchroder: return little_schroder_poly(n);
    case Family::CentralDelannoy: return central_delannoy_poly(n);
  }
  throw error("family_poly: bad family");
}

// First N+1 values by the definitional binomial sums.
inline std::vector<Int> family_table(Family f, long N, const Int& z) {
  std::vector<Int> t;
  t.reserve(static_cast<size_t>(N) + 1);
  for (long n = 0; n <= N; ++n) t.push_back(eval_int_poly(family_poly(f, n), z));
  return t;
}

inline std::vector<ZPoly> family_table_sym(Family f, long N) {
  std::vector<ZPoly> t;
  t.reserve(static_cast<size_t>(N) + 1);
  for (long n = 0; n <= N; ++n) t.push_back(family_poly(f, n));
  return t;
}

// The annihilator of epsilon^n S_n(z) and epsilon^n s_n(z):
// a_0 = k, a_1 = -eps(2k+3)(1+2z), a_2 = k+3.
inline ShiftOp schroder_operator(int epsilon) {
  if (epsilon != 1 && epsilon != -1) throw error("schroder_operator: epsilon must be +-1");
  KPoly k = KPoly::variable();
  ZPoly w(std::vector<Rat>{1, 2});  // 1+2z
  KPoly a0 = k;
  KPoly a1 = Rat(-epsilon) * (Rat(2) * k + KPoly(3)) * w;
  KPoly a2 = k + KPoly(3);
  return ShiftOp({a0, a1, a2}, epsilon);
}

// eta = (1 - eps(1+2z))/2: -z for eps = 1, z+1 for eps = -1.
inline ZPoly eta_poly(int epsilon) {
  return epsilon == 1 ? ZPoly(std::vector<Rat>{0, -1}) : ZPoly(std::vector<Rat>{1, 1});
}

struct SequenceSpec {
  enum class Kind { Named, Custom };
  Kind kind = Kind::Named;
  Family family = Family::LargeSchroder;
  Rat z = 1;
  int epsilon = 1;
  // Custom only:
  std::vector<KPoly> custom_coeffs;
  std::vector<Rat> initials;
};

// Unrolls the recurrence a_J(n) F(n+J) = -sum_{i<J} a_i(n) F(n+i).
// Named families carry the epsilon^n weight, matching their operator.
inline std::vector<Rat> seq_by_recurrence(const SequenceSpec& spec, long N) {
  ShiftOp L = [&] {
    if (spec.kind == SequenceSpec::Kind::Named) return schroder_operator(spec.epsilon);
    return ShiftOp(spec.custom_coeffs);
  }();
  const int J = L.order();

  std::vector<Rat> F;
  if (spec.kind == SequenceSpec::Kind::Named) {
    Family base = spec.family == Family::CentralDelannoy ? Family::CentralDelannoy : spec.family;
    if (base == Family::CentralDelannoy)
      throw error("seq_by_recurrence: no recurrence preset for Delannoy");
    for (int i = 0; i < J && i <= N; ++i) {
      ZPoly v = family_poly(base, i);
      Rat w = (spec.epsilon == -1 && i % 2 == 1) ? Rat(-1) : Rat(1);
      F.push_back(w * v.eval(spec.z));
    }
  } else {
    if (static_cast<int>(spec.initials.size()) != J)
      throw error("seq_by_recurrence: initials length must equal operator order");
    for (int i = 0; i < J && i <= N; ++i) F.push_back(spec.initials[static_cast<size_t>(i)]);
  }

  for (long n = 0; static_cast<long>(F.size()) <= N; ++n) {
    Rat lead = L.coeff(J).eval(Rat(n), spec.z);
    if (lead == 0) throw error("seq_by_recurrence: leading coefficient vanishes at n=" + std::to_string(n));
    Rat s = 0;
    for (int i = 0; i < J; ++i)
      s += L.coeff(i).eval(Rat(n), spec.z) * F[static_cast<size_t>(n + i)];
    Rat next = -s / lead;
    if (spec.kind == SequenceSpec::Kind::Named && is_integer(spec.z) && !is_integer(next))
      throw non_integral_step_error("seq_by_recurrence: non-integral step at n=" + std::to_string(n));
    F.push_back(next);
  }
  return F;
}

struct IdentityReport {
  long checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// (z+1) s_n(z) = S_n(z) and 2z(2n+1) S_n(z) = D_{n+1}(z) - D_{n-1}(z),
// checked symbolically and at each requested z.
inline IdentityReport check_identities(long N, const std::vector<Rat>& z_values) {
  IdentityReport rep;
  ZPoly zp1(std::vector<Rat>{1, 1});
  ZPoly two_z(std::vector<Rat>{0, 2});
  auto D_prev = central_delannoy_poly(0);
  auto D_cur = central_delannoy_poly(1);
  for (long n = 1; n <= N; ++n) {
    ZPoly S = large_schroder_poly(n);
    ZPoly s = little_schroder_poly(n);
    ZPoly D_next = central_delannoy_poly(n + 1);
    if (zp1 * s != S)
      rep.violations.push_back("(z+1)*s_n != S_n at n=" + std::to_string(n));
    if (two_z * Rat(2 * n + 1) * S != D_next - D_prev)
      rep.violations.push_back("Delannoy link fails at n=" + std::to_string(n));
    for (const Rat& z : z_values) {
      if (zp1.eval(z) * s.eval(z) != S.eval(z))
        rep.violations.push_back("(z+1)*s_n != S_n at n=" + std::to_string(n) +
                                 ", z=" + Rat(z).get_str());
      if (two_z.eval(z) * Rat(2 * n + 1) * S.eval(z) != D_next.eval(z) - D_prev.eval(z))
        rep.violations.push_back("Delannoy link fails at n=" + std::to_string(n) +
                                 ", z=" + Rat(z).get_str());
    }
    D_prev = D_cur;
    D_cur = D_next;
    ++rep.checked;
  }
  return rep;
}

}  // namespace partible

#endif
