#ifndef PARTIBLE_REDUCTION_HPP
#define PARTIBLE_REDUCTION_HPP

#include <functional>
#include <vector>

#include "partible/ratfunc.hpp"
#include "partible/sequences.hpp"
#include "partible/shift_op.hpp"

namespace partible {

struct leading_coefficient_vanishes_error : error {
  using error::error;
};
struct parity_violation_error : error {
  using error::error;
};

// Product of the basic symmetric forms (k - gamma + J/2) and
// (k - gamma + J/2)^2 - q, times a constant.  Such products are exactly
// the polynomials with x(gamma+k) = (-1)^deg x(gamma-k-J).
struct SymmetricBasisPoly {
  Rat alpha = 1;
  Rat gamma = 0;
  int J = 0;
  int linear_factors = 0;
  std::vector<Rat> quadratic_factors;  // q values
  KPoly expanded;
};

inline bool check_symmetry(const KPoly& x, const Rat& gamma, int J) {
  KPoly lhs = x.shift_k(gamma);
  KPoly rhs = x.reflect_k(gamma - Rat(J));
  if (x.is_zero()) return true;
  if (x.degree() % 2 == 1) rhs = -rhs;
  return lhs == rhs;
}

inline SymmetricBasisPoly build_basis(const Rat& gamma, int J, const Rat& alpha,
                                      int linear_factors, std::vector<Rat> quadratic_factors) {
  SymmetricBasisPoly b;
  b.alpha = alpha;
  b.gamma = gamma;
  b.J = J;
  b.linear_factors = linear_factors;
  b.quadratic_factors = std::move(quadratic_factors);

  KPoly lin = KPoly::variable() + KPoly(Rat(J) / 2 - gamma);
  KPoly prod(alpha);
  for (int i = 0; i < linear_factors; ++i) prod *= lin;
  for (const Rat& q : b.quadratic_factors) prod *= lin * lin - KPoly(q);
  b.expanded = prod;
  if (!check_symmetry(b.expanded, gamma, J))
    throw error("build_basis: symmetry invariant failed");  // unreachable by construction
  return b;
}

// x_{s+2}(k) = 2 (2k+3)^s (k+1)(k+2) as the symmetric basis element of
// degree j = s+2 for gamma = -1/2, J = 2 (q = 1/4 kills the boundary
// terms at k = -1 and k = -2).
inline SymmetricBasisPoly schroder_basis(int j) {
  if (j < 2) throw error("schroder_basis: degree must be >= 2");
  int s = j - 2;
  return build_basis(make_rat(-1, 2), 2, pow_rat(Rat(2), static_cast<unsigned long>(s + 1)), s,
                     {make_rat(1, 4)});
}

using BasisFamily = std::function<SymmetricBasisPoly(int)>;

// eta = (1-eps(1+2z))/2 vanishes exactly at (eps=1, z=0) and
// (eps=-1, z=-1); those specializations break the reduction and are
// excluded by the gcd(p, z(z+1)) = 1 hypothesis.
inline void require_eta_nonzero(int epsilon, const Rat& z) {
  if (eta_poly(epsilon).eval(z) == 0)
    throw leading_coefficient_vanishes_error(
        "eta = 0 at this specialization (z = 0 for epsilon = 1, z = -1 for epsilon = -1)");
}

struct ReductionCertificate {
  long m = 1;           // odd target exponent
  Rat gamma = 0;
  int epsilon = 0;      // 0 when the operator is not from an epsilon family
  int degree = 0;       // d = deg L
  int ell = 0;          // minimal basis degree
  // true: residual/target expressed in powers of (2k+1); false: (k-gamma).
  bool ell_basis = false;

  std::vector<std::pair<int, RatFunc>> residual;
  struct ComboTerm {
    int j;
    RatFunc v;
    SymmetricBasisPoly basis;
  };
  std::vector<ComboTerm> combo;
};

namespace detail {

// Coefficients of f in powers of (k - gamma).
inline std::vector<ZPoly> centered_coeffs(const KPoly& f, const Rat& gamma) {
  return f.shift_k(gamma).coeffs();
}

}  // namespace detail

// Top-down elimination: cancel the leading (k-gamma)-power of the
// remainder with v_j L*(x_j), deg L*(x_j) = d + j, until only exponents
// below d + ell survive.
inline ReductionCertificate reduce_power(const ShiftOp& L, const PartibleInfo& info,
                                         const BasisFamily& basis_family, int ell, long m) {
  if (m < 1) throw error("reduce_power: m must be >= 1");
  const Rat& gamma = info.gamma;
  const int d = info.degree;

  std::vector<RatFunc> rem(static_cast<size_t>(m) + 1);
  rem[static_cast<size_t>(m)] = RatFunc(1);

  ReductionCertificate cert;
  cert.m = m;
  cert.gamma = gamma;
  cert.epsilon = L.epsilon();
  cert.degree = d;
  cert.ell = ell;

  int top = static_cast<int>(m);
  while (top >= d + ell) {
    if (rem[static_cast<size_t>(top)].is_zero()) {
      --top;
      continue;
    }
    int j = top - d;
    SymmetricBasisPoly xj = basis_family(j);
    if (xj.expanded.degree() != j)
      throw error("reduce_power: basis polynomial has wrong degree");
    std::vector<ZPoly> lx = detail::centered_coeffs(L.adjoint_apply(xj.expanded), gamma);
    for (size_t t = 0; t < lx.size(); ++t)
      if (!lx[t].is_zero() && (static_cast<int>(t) - (d + j)) % 2 != 0)
        throw parity_violation_error("reduce_power: L*(x_j) has a wrong-parity term");
    if (static_cast<int>(lx.size()) != top + 1 || lx.back().is_zero())
      throw leading_coefficient_vanishes_error(
          "reduce_power: leading reduction coefficient vanishes (eta = 0?)");

    RatFunc v = rem[static_cast<size_t>(top)] / RatFunc(lx.back());
    for (size_t t = 0; t < lx.size(); ++t) rem[t] -= v * RatFunc(lx[t]);
    if (!rem[static_cast<size_t>(top)].is_zero())
      throw error("reduce_power: leading term failed to cancel");
    cert.combo.push_back({j, v, std::move(xj)});
  }

  for (int i = 0; i < d + ell && i <= static_cast<int>(m); ++i) {
    const RatFunc& u = rem[static_cast<size_t>(i)];
    if (u.is_zero()) continue;
    if ((static_cast<long>(i) - m) % 2 != 0)
      throw parity_violation_error("reduce_power: residual term of wrong parity");
    cert.residual.push_back({i, u});
  }
  return cert;
}

// Re-expands the certificate identity and compares with the target
// power, exactly in Q(z)[k].
inline bool verify_certificate(const ReductionCertificate& cert, const ShiftOp& L) {
  KPoly base = cert.ell_basis
                   ? Rat(2) * KPoly::variable() + KPoly(1)
                   : KPoly::variable() - KPoly(cert.gamma);

  // Accumulate in the k-monomial basis with RatFunc coefficients.
  std::vector<RatFunc> acc;
  auto add_scaled = [&acc](const KPoly& f, const RatFunc& s) {
    if (static_cast<size_t>(f.degree() + 1) > acc.size())
      acc.resize(static_cast<size_t>(f.degree()) + 1);
    for (int t = 0; t <= f.degree(); ++t) acc[static_cast<size_t>(t)] += s * RatFunc(f.coeff(t));
  };

  for (const auto& [i, u] : cert.residual)
    add_scaled(base.pow(static_cast<unsigned long>(i)), u);
  for (const auto& term : cert.combo) add_scaled(L.adjoint_apply(term.basis.expanded), term.v);

  KPoly target = base.pow(static_cast<unsigned long>(cert.m));
  if (static_cast<size_t>(target.degree() + 1) > acc.size())
    acc.resize(static_cast<size_t>(target.degree()) + 1);
  for (size_t t = 0; t < acc.size(); ++t) {
    RatFunc want(t <= static_cast<size_t>(target.degree()) ? target.coeff(static_cast<int>(t))
                                                           : ZPoly());
    if (acc[t] != want) return false;
  }
  return true;
}

// Lemma-3.1-shaped certificate: (2k+1)^{2r+1} as eta-power combinations
// of L*(x_{2s+2}) plus the residual (2k+1), with z symbolic.
inline ReductionCertificate schroder_certificate(long r, int epsilon) {
  if (r < 0) throw error("schroder_certificate: r must be >= 0");
  ShiftOp L = schroder_operator(epsilon);
  PartibleInfo info{make_rat(-1, 2), 1, true};
  long m = 2 * r + 1;

  ReductionCertificate cert = reduce_power(L, info, schroder_basis, 2, m);

  // Rescale from (k-gamma)^i to (2k+1)^i = 2^i (k-gamma)^i.
  ReductionCertificate out = cert;
  out.ell_basis = true;
  Rat two_m = pow_rat(Rat(2), static_cast<unsigned long>(m));
  for (auto& [i, u] : out.residual)
    u = u * RatFunc(two_m / pow_rat(Rat(2), static_cast<unsigned long>(i)));
  for (auto& term : out.combo) term.v = term.v * RatFunc(two_m);

  // Lemma guarantees: residual is exactly (2k+1), every multiplier is
  // v/eta^u with v an integer polynomial.
  if (out.residual.size() != 1 || out.residual[0].first != 1 ||
      out.residual[0].second != RatFunc(1))
    throw error("schroder_certificate: residual is not exactly (2k+1)");
  ZPoly eta = eta_poly(epsilon);
  for (const auto& term : out.combo) {
    auto [pow, num] = term.v.as_power_denominator(eta);
    (void)pow;
    for (const Rat& c : num.coeffs())
      if (!is_integer(c))
        throw error("schroder_certificate: multiplier numerator is not in Z[z]");
  }
  return out;
}

}  // namespace partible

#endif
