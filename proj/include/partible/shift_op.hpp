#ifndef PARTIBLE_SHIFT_OP_HPP
#define PARTIBLE_SHIFT_OP_HPP

#include <algorithm>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "partible/kpoly.hpp"

namespace partible {

struct index_out_of_range_error : error {
  using error::error;
};
struct indicial_identically_zero_error : error {
  using error::error;
};
struct not_partible_error : error {
  using error::error;
};
struct ambiguous_gamma_error : error {
  using error::error;
};
struct not_annihilated_error : error {
  explicit not_annihilated_error(long index)
      : error("sequence is not annihilated by the operator at index " + std::to_string(index)),
        first_bad_index(index) {}
  long first_bad_index;
};

struct PartibleInfo {
  Rat gamma;
  int degree = 0;
  bool nondegenerate = false;
};

namespace detail {

inline std::vector<Int> positive_divisors(Int n) {
  n = abs(n);
  std::vector<Int> ds;
  if (n == 0) return ds;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d * d != n) ds.push_back(n / d);
    }
  }
  return ds;
}

// All rational roots of a nonzero univariate polynomial over Q,
// by the rational root theorem after clearing denominators.
inline std::vector<Rat> rational_roots(const std::vector<Rat>& coeffs) {
  Int lcm_den = 1;
  for (const auto& c : coeffs)
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Int> ic;
  for (const auto& c : coeffs) {
    Rat v = c * Rat(lcm_den);
    ic.push_back(v.get_num());
  }
  while (!ic.empty() && ic.back() == 0) ic.pop_back();
  if (ic.empty()) throw error("rational_roots: zero polynomial");

  std::vector<Rat> roots;
  size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  if (low > 0) roots.push_back(Rat(0));
  if (low + 1 == ic.size()) return roots;  // c*x^low

  auto eval = [&](const Rat& x) {
    Rat r = 0;
    for (size_t i = ic.size(); i-- > low;) r = r * x + Rat(ic[i]);
    return r;
  };
  for (const Int& p : positive_divisors(ic[low]))
    for (const Int& q : positive_divisors(ic.back())) {
      Rat cand = make_rat(p, q);
      for (int s = 0; s < 2; ++s, cand = -cand) {
        if (eval(cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
    }
  return roots;
}

// Bivariate expansion helper for the gamma search: a(g0(gamma) + s*k)
// as a dense vector over powers of k whose entries are polynomials in
// gamma (KPoly reused with its variable read as gamma).
inline std::vector<KPoly> expand_shift_gamma(const KPoly& a, const KPoly& g0, int s) {
  std::vector<KPoly> acc;  // acc[i] = gamma-poly coefficient of k^i
  for (int t = a.degree(); t >= 0; --t) {
    // acc <- acc * (g0 + s*k) + a_t
    std::vector<KPoly> next(acc.size() + 1);
    for (size_t i = 0; i < acc.size(); ++i) {
      next[i] += acc[i] * g0;
      next[i + 1] += acc[i] * Rat(s);
    }
    next[0] += KPoly(a.coeff(t));
    while (!next.empty() && next.back().is_zero()) next.pop_back();
    acc = std::move(next);
  }
  return acc;
}

// First nonzero Q-coefficient slice of a list of gamma-polynomials:
// fixes a z-power w and returns the univariate polynomial in gamma.
inline std::vector<Rat> first_univariate_slice(const KPoly& gpoly) {
  for (int w = 0;; ++w) {
    std::vector<Rat> uni(static_cast<size_t>(gpoly.degree()) + 1, Rat(0));
    bool nonzero = false;
    bool any_higher = false;
    for (int t = 0; t <= gpoly.degree(); ++t) {
      const ZPoly& c = gpoly.coeff(t);
      if (c.degree() > w) any_higher = true;
      uni[static_cast<size_t>(t)] = c.coeff(w);
      if (c.coeff(w) != 0) nonzero = true;
    }
    if (nonzero) return uni;
    if (!any_higher) throw error("first_univariate_slice: zero polynomial");
  }
}

}  // namespace detail

// L = sum_i a_i(k) sigma^i with a_J != 0.  epsilon records which member
// of an epsilon-family the coefficients were instantiated from (0 when
// not applicable).
class ShiftOp {
 public:
  ShiftOp(std::vector<KPoly> coeffs, int epsilon = 0)
      : coeffs_(std::move(coeffs)), epsilon_(epsilon) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (coeffs_.empty()) throw error("ShiftOp: zero operator has no order");
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  int epsilon() const { return epsilon_; }
  const std::vector<KPoly>& coeffs() const { return coeffs_; }
  const KPoly& coeff(int i) const {
    static const KPoly zero;
    if (i < 0 || i > order()) return zero;
    return coeffs_[static_cast<size_t>(i)];
  }

  ShiftOp specialize_z(const Rat& z0) const {
    std::vector<KPoly> c;
    for (const auto& a : coeffs_) c.push_back(a.specialize_z(z0));
    return ShiftOp(std::move(c), epsilon_);
  }

  // sum_i a_i(n) F(n+i), for numeric sequences at a fixed z.
  Rat apply(const std::vector<Rat>& F, long n, const Rat& z0) const {
    if (n < 0 || n + order() >= static_cast<long>(F.size()))
      throw index_out_of_range_error("op_apply: sequence too short");
    Rat s = 0;
    for (int i = 0; i <= order(); ++i)
      s += coeff(i).eval(Rat(n), z0) * F[static_cast<size_t>(n + i)];
    return s;
  }

  // Same, for symbolic sequence values in Q[z].
  ZPoly apply(const std::vector<ZPoly>& F, long n) const {
    if (n < 0 || n + order() >= static_cast<long>(F.size()))
      throw index_out_of_range_error("op_apply: sequence too short");
    ZPoly s;
    for (int i = 0; i <= order(); ++i)
      s += coeff(i).eval_k(Rat(n)) * F[static_cast<size_t>(n + i)];
    return s;
  }

  // L*(x(k)) = sum_i a_i(k-i) x(k-i).
  KPoly adjoint_apply(const KPoly& x) const {
    KPoly r;
    for (int i = 0; i <= order(); ++i)
      r += coeff(i).shift_k(Rat(-i)) * x.shift_k(Rat(-i));
    return r;
  }

  // b_l(k) = sum_{j=l}^{J} C(j,l) a_{J-j}(k+j-J); deg L = max(deg b_l - l).
  struct DegreeInfo {
    int degree;
    std::vector<KPoly> b;
  };
  DegreeInfo degree_info() const {
    const int J = order();
    DegreeInfo info;
    info.b.resize(static_cast<size_t>(J) + 1);
    for (int l = 0; l <= J; ++l) {
      KPoly bl;
      for (int j = l; j <= J; ++j)
        bl += Rat(binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(l))) *
              coeff(J - j).shift_k(Rat(j - J));
      info.b[static_cast<size_t>(l)] = bl;
    }
    int d = std::numeric_limits<int>::min();
    for (int l = 0; l <= J; ++l)
      if (!info.b[static_cast<size_t>(l)].is_zero())
        d = std::max(d, info.b[static_cast<size_t>(l)].degree() - l);
    info.degree = d;
    return info;
  }
  int degree() const { return degree_info().degree; }

  // Indicial polynomial sum_l [k^{d+l}](b_l) * s(s-1)...(s-l+1), as an
  // element of Q[z][s].
  KPoly indicial_polynomial() const {
    DegreeInfo info = degree_info();
    KPoly ind;
    KPoly falling(1);
    KPoly s = KPoly::variable();
    for (int l = 0; l <= order(); ++l) {
      ZPoly c = info.b[static_cast<size_t>(l)].coeff(info.degree + l);
      ind += KPoly(c) * falling;
      falling *= (s - KPoly(Rat(l)));
    }
    return ind;
  }

  // R_L: nonnegative integer roots of the indicial polynomial.
  std::set<long> degenerate_roots() const {
    KPoly ind = indicial_polynomial();
    if (ind.is_zero())
      throw indicial_identically_zero_error("indicial polynomial vanishes identically");
    std::set<long> roots;
    if (ind.degree() == 0) return roots;
    for (const Rat& r : detail::rational_roots(detail::first_univariate_slice(ind))) {
      if (r < 0 || !is_integer(r)) continue;
      if (ind.eval_k(r).is_zero()) roots.insert(r.get_num().get_si());
    }
    return roots;
  }

  bool nondegenerate() const { return degenerate_roots().empty(); }

  // Solve a_i(gamma+k) = (-1)^d a_{J-i}(gamma-k-J) for a rational gamma.
  PartibleInfo find_gamma() const {
    if (!nondegenerate())
      throw not_partible_error("operator is degenerate (R_L nonempty)");
    const int J = order();
    const int d = degree();
    const Rat sign = (d % 2 == 0) ? Rat(1) : Rat(-1);

    KPoly gamma_var = KPoly::variable();           // read as gamma
    KPoly gamma_minus_J = gamma_var - KPoly(Rat(J));

    std::vector<KPoly> conditions;  // polynomials in gamma over Q[z]
    for (int i = 0; i <= J / 2; ++i) {
      auto lhs = detail::expand_shift_gamma(coeff(i), gamma_var, +1);
      auto rhs = detail::expand_shift_gamma(coeff(J - i), gamma_minus_J, -1);
      size_t len = std::max(lhs.size(), rhs.size());
      for (size_t t = 0; t < len; ++t) {
        KPoly c = (t < lhs.size() ? lhs[t] : KPoly()) -
                  sign * (t < rhs.size() ? rhs[t] : KPoly());
        if (!c.is_zero()) conditions.push_back(c);
      }
    }
    if (conditions.empty())
      throw ambiguous_gamma_error("symmetry conditions hold for every gamma");

    // Candidates from the first condition, verified against all of them.
    std::vector<Rat> candidates;
    const KPoly* pivot = nullptr;
    for (const auto& c : conditions)
      if (c.degree() > 0) {
        pivot = &c;
        break;
      }
    if (!pivot)
      throw not_partible_error("no rational gamma satisfies the symmetry conditions");
    for (const Rat& g : detail::rational_roots(detail::first_univariate_slice(*pivot))) {
      bool ok = true;
      for (const auto& c : conditions)
        if (!c.eval_k(g).is_zero()) {
          ok = false;
          break;
        }
      if (ok) candidates.push_back(g);
    }
    if (candidates.empty())
      throw not_partible_error("no rational gamma satisfies the symmetry conditions");
    if (candidates.size() > 1)
      throw ambiguous_gamma_error("multiple gamma values satisfy the symmetry conditions");
    return PartibleInfo{candidates.front(), d, true};
  }

 private:
  std::vector<KPoly> coeffs_;
  int epsilon_;
};

// Specialized re-check of generic nondegeneracy: substitute z0 into the
// symbolic indicial polynomial.  Vanishing identically (the eta = 0
// specializations of the Schroder family) is flagged, not reported as
// an empty root set.
inline std::set<long> degenerate_roots_specialized(const ShiftOp& L, const Rat& z0) {
  KPoly ind = L.indicial_polynomial().specialize_z(z0);
  if (ind.is_zero())
    throw indicial_identically_zero_error(
        "indicial polynomial vanishes identically at this specialization");
  std::set<long> roots;
  if (ind.degree() == 0) return roots;
  for (const Rat& r : detail::rational_roots(detail::first_univariate_slice(ind))) {
    if (r < 0 || !is_integer(r)) continue;
    if (ind.eval_k(r).is_zero()) roots.insert(r.get_num().get_si());
  }
  return roots;
}

// Certificate for the telescoping identity: L*(x(k)) F(k) is the
// forward difference of -sum_i u_i(k) F(k+i).
struct TelescopeCertificate {
  KPoly x;
  std::vector<KPoly> u;  // u_0 .. u_{J-1}
};

inline TelescopeCertificate op_telescope(const ShiftOp& L, const KPoly& x) {
  const int J = L.order();
  TelescopeCertificate cert;
  cert.x = x;
  cert.u.resize(static_cast<size_t>(std::max(J, 0)));
  for (int i = 0; i < J; ++i) {
    KPoly ui;
    for (int j = 1; j <= J - i; ++j)
      ui += L.coeff(i + j).shift_k(Rat(-j)) * x.shift_k(Rat(-j));
    cert.u[static_cast<size_t>(i)] = ui;
  }
  return cert;
}

// Partial-sum identity check: sum_{k<n} L*(x)F(k) equals the boundary
// difference of the certificate, exactly, for every n <= N.
inline bool verify_telescope(const TelescopeCertificate& cert, const ShiftOp& L,
                             const std::vector<Rat>& F, long N, const Rat& z0) {
  const int J = L.order();
  if (static_cast<long>(F.size()) < N + J + 1)
    throw index_out_of_range_error("verify_telescope: sequence too short");
  for (long n = 0; n + J < static_cast<long>(F.size()); ++n)
    if (L.apply(F, n, z0) != 0) throw not_annihilated_error(n);

  KPoly lx = L.adjoint_apply(cert.x);
  Rat init = 0;
  for (int i = 0; i < J; ++i)
    init += cert.u[static_cast<size_t>(i)].eval(Rat(0), z0) * F[static_cast<size_t>(i)];
  Rat running = 0;
  for (long n = 0; n <= N; ++n) {
    Rat boundary = 0;
    for (int i = 0; i < J; ++i)
      boundary += cert.u[static_cast<size_t>(i)].eval(Rat(n), z0) * F[static_cast<size_t>(n + i)];
    if (running != init - boundary) return false;
    if (n < N) running += lx.eval(Rat(n), z0) * F[static_cast<size_t>(n)];
  }
  return true;
}

}  // namespace partible

#endif
