#ifndef PARTIBLE_HARNESS_HPP
#define PARTIBLE_HARNESS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "partible/modint.hpp"
#include "partible/reduction.hpp"
#include "partible/sequences.hpp"

namespace partible {

struct hypothesis_violated_error : error {
  using error::error;
};
struct eta_divides_modulus_error : error {
  using error::error;
};

inline std::vector<std::uint64_t> odd_primes_below(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 3; p < n; p += 2)
    if (is_prime_u64(p)) ps.push_back(p);
  return ps;
}

// Theorem hypothesis: gcd(p, z(z+1)) = 1.
inline bool hypothesis_ok(std::uint64_t p, const Int& z) {
  Int g;
  Int m = z * (z + 1);
  Int pp(static_cast<unsigned long>(p));
  mpz_gcd(g.get_mpz_t(), pp.get_mpz_t(), m.get_mpz_t());
  return g == 1;
}

inline Int eta_value(int epsilon, const Int& z) {
  return epsilon == 1 ? Int(-z) : Int(z + 1);
}

// sum_{k=0}^{p-1} (2k+1)^{2r+1} eps^k T[k], exactly over Z.
inline Int weighted_sum_exact(const std::vector<Int>& table, long count, long r, int epsilon) {
  Int sum = 0;
  for (long k = 0; k < count; ++k) {
    Int w = pow_int(Int(2 * k + 1), static_cast<unsigned long>(2 * r + 1));
    Int term = w * table[static_cast<size_t>(k)];
    if (epsilon == -1 && k % 2 == 1)
      sum -= term;
    else
      sum += term;
  }
  return sum;
}

inline Int weighted_sum_exact(Family f, long r, int epsilon, const Int& z, std::uint64_t p) {
  return weighted_sum_exact(family_table(f, static_cast<long>(p) - 1, z),
                            static_cast<long>(p), r, epsilon);
}

// Exact-then-reduce evaluation of the Theorem 1 sums.
inline ModInt weighted_sum_mod(Family f, long r, int epsilon, const Int& z, std::uint64_t p,
                               bool strict = true) {
  if (strict && !hypothesis_ok(p, z))
    throw hypothesis_violated_error("weighted_sum_mod: gcd(p, z(z+1)) != 1");
  return ModInt::from_int(weighted_sum_exact(f, r, epsilon, z, p), p);
}

struct GridSpec {
  std::vector<std::uint64_t> primes;
  std::vector<long> r_values;
  std::vector<int> epsilons;
  std::vector<Int> z_values;

  static GridSpec theorem1_default() {
    GridSpec g;
    g.primes = odd_primes_below(100);
    g.r_values = {0, 1, 2, 3, 4};
    g.epsilons = {-1, 1};
    for (long z = -10; z <= 10; ++z) g.z_values.push_back(Int(z));
    return g;
  }
};

struct PointRecord {
  std::uint64_t p;
  long r;
  int epsilon;
  Int z;
  std::string family;
  std::uint64_t residue;
  std::uint64_t expected;
  bool pass;
};

struct CongruenceReport {
  std::vector<PointRecord> points;
  long passed = 0;
  long failed = 0;
  long skipped = 0;
  bool ok() const { return failed == 0; }

  void add(PointRecord rec) {
    rec.pass ? ++passed : ++failed;
    points.push_back(std::move(rec));
  }
};

// Desk-scale reproduction of Theorem 1: residue 1 for the large family
// and 0 for the little one on every admissible grid point.
inline CongruenceReport verify_theorem1(const GridSpec& grid) {
  CongruenceReport rep;
  std::uint64_t pmax = 0;
  for (auto p : grid.primes) pmax = std::max(pmax, p);
  if (pmax == 0) return rep;

  auto large_sym = family_table_sym(Family::LargeSchroder, static_cast<long>(pmax) - 1);
  auto little_sym = family_table_sym(Family::LittleSchroder, static_cast<long>(pmax) - 1);

  for (const Int& z : grid.z_values) {
    std::vector<Int> large, little;
    for (const auto& f : large_sym) large.push_back(eval_int_poly(f, z));
    for (const auto& f : little_sym) little.push_back(eval_int_poly(f, z));

    for (std::uint64_t p : grid.primes) {
      if (!hypothesis_ok(p, z)) {
        rep.skipped += static_cast<long>(grid.r_values.size() * grid.epsilons.size() * 2);
        continue;
      }
      for (long r : grid.r_values)
        for (int eps : grid.epsilons) {
          Int sl = weighted_sum_exact(large, static_cast<long>(p), r, eps);
          Int ss = weighted_sum_exact(little, static_cast<long>(p), r, eps);
          std::uint64_t rl = ModInt::from_int(sl, p).value();
          std::uint64_t rs = ModInt::from_int(ss, p).value();
          rep.add({p, r, eps, z, "large", rl, 1, rl == 1});
          rep.add({p, r, eps, z, "little", rs, 0, rs == 0});
        }
    }
  }
  return rep;
}

// Lemma 3.2 and its ingredients: the r = 0 congruences, both Delannoy
// congruences, and the exact identity
// 2z sum (2k+1) eps^k S_k(z) = D_p(z) + eps D_{p-1}(z) - 1 - eps.
inline CongruenceReport verify_lemma32(const std::vector<std::uint64_t>& primes,
                                       const std::vector<int>& epsilons,
                                       const std::vector<Int>& z_values) {
  CongruenceReport rep;
  std::uint64_t pmax = 0;
  for (auto p : primes) pmax = std::max(pmax, p);
  if (pmax == 0) return rep;

  auto large_sym = family_table_sym(Family::LargeSchroder, static_cast<long>(pmax) - 1);
  auto little_sym = family_table_sym(Family::LittleSchroder, static_cast<long>(pmax) - 1);
  auto delannoy_sym = family_table_sym(Family::CentralDelannoy, static_cast<long>(pmax));

  for (const Int& z : z_values) {
    std::vector<Int> large, little, delannoy;
    for (const auto& f : large_sym) large.push_back(eval_int_poly(f, z));
    for (const auto& f : little_sym) little.push_back(eval_int_poly(f, z));
    for (const auto& f : delannoy_sym) delannoy.push_back(eval_int_poly(f, z));

    for (std::uint64_t p : primes) {
      if (!hypothesis_ok(p, z)) {
        rep.skipped += static_cast<long>(epsilons.size() * 3 + 2);
        continue;
      }
      std::uint64_t dp = ModInt::from_int(delannoy[static_cast<size_t>(p)], p).value();
      std::uint64_t dp1 = ModInt::from_int(delannoy[static_cast<size_t>(p) - 1], p).value();
      std::uint64_t want_dp = ModInt::from_int(Int(1 + 2 * z), p).value();
      rep.add({p, 0, 0, z, "delannoy_p", dp, want_dp, dp == want_dp});
      rep.add({p, 0, 0, z, "delannoy_p-1", dp1, 1, dp1 == 1});

      for (int eps : epsilons) {
        Int sl = weighted_sum_exact(large, static_cast<long>(p), 0, eps);
        Int ss = weighted_sum_exact(little, static_cast<long>(p), 0, eps);
        std::uint64_t rl = ModInt::from_int(sl, p).value();
        std::uint64_t rs = ModInt::from_int(ss, p).value();
        rep.add({p, 0, eps, z, "large", rl, 1, rl == 1});
        rep.add({p, 0, eps, z, "little", rs, 0, rs == 0});

        // Exact identity, no modulus.
        Int lhs = 2 * z * sl;
        Int rhs = delannoy[static_cast<size_t>(p)] +
                  Int(eps) * delannoy[static_cast<size_t>(p) - 1] - 1 - eps;
        bool pass = lhs == rhs;
        rep.add({p, 0, eps, z, "exact_delannoy_identity", pass ? 0u : 1u, 0, pass});
      }
    }
  }
  return rep;
}

// Closed form for the telescoped sums:
// sum_{k<n} L*(y(k)(k+1)(k+2)) F_k = n(n^2-1)(y(n-1)F_{n-1} - y(n-2)F_n).
// Checked exactly, with the divisibility statements on top.
inline CongruenceReport verify_divisibility(long n_max, long s_max,
                                            const std::vector<int>& epsilons,
                                            const std::vector<Int>& z_values,
                                            std::uint64_t random_seed = 20240817) {
  CongruenceReport rep;
  auto large_sym = family_table_sym(Family::LargeSchroder, n_max);
  auto little_sym = family_table_sym(Family::LittleSchroder, n_max);
  std::mt19937_64 rng(random_seed);
  std::uniform_int_distribution<long> coeff_dist(-9, 9);

  for (int eps : epsilons) {
    ShiftOp L = schroder_operator(eps);

    // Random integer y of degree <= 3 for the n(n^2-1) statement.
    std::vector<KPoly> random_ys;
    for (int t = 0; t < 3; ++t) {
      std::vector<ZPoly> c;
      for (int i = 0; i <= 3; ++i) c.emplace_back(Rat(coeff_dist(rng)));
      random_ys.emplace_back(std::move(c));
    }

    for (const Int& z : z_values) {
      std::vector<Int> large, little;
      for (long n = 0; n <= n_max; ++n) {
        large.push_back(eval_int_poly(large_sym[static_cast<size_t>(n)], z));
        little.push_back(eval_int_poly(little_sym[static_cast<size_t>(n)], z));
      }
      auto weighted = [eps](const std::vector<Int>& t, long k) {
        return (eps == -1 && k % 2 == 1) ? Int(-t[static_cast<size_t>(k)])
                                         : t[static_cast<size_t>(k)];
      };

      for (int fam = 0; fam < 2; ++fam) {
        const std::vector<Int>& tab = fam == 0 ? large : little;
        std::string fname = fam == 0 ? "large" : "little";

        for (long s = 0; s <= s_max; ++s) {
          KPoly y = (Rat(2) * KPoly::variable() + KPoly(3)).pow(static_cast<unsigned long>(s)) *
                    Rat(2);
          KPoly x = y * (KPoly::variable() + KPoly(1)) * (KPoly::variable() + KPoly(2));
          KPoly lx = L.adjoint_apply(x).specialize_z(Rat(z));
          KPoly yz = y.specialize_z(Rat(z));

          Int running = 0;
          bool eq_ok = true, div_ok = true;
          for (long n = 1; n <= n_max; ++n) {
            Rat term = lx.eval(Rat(n - 1), Rat(z));
            running += Int(term.get_num()) * weighted(tab, n - 1);
            if (n < 2) continue;
            Int nn = Int(n) * (Int(n) * Int(n) - 1);
            Rat yn1 = yz.eval(Rat(n - 1), Rat(z));
            Rat yn2 = yz.eval(Rat(n - 2), Rat(z));
            Int rhs = nn * (Int(yn1.get_num()) * weighted(tab, n - 1) -
                            Int(yn2.get_num()) * weighted(tab, n));
            if (running != rhs) eq_ok = false;
            if (running % (2 * nn) != 0) div_ok = false;
          }
          rep.add({0, s, eps, z, fname + "_closed_form", eq_ok ? 0u : 1u, 0, eq_ok});
          rep.add({0, s, eps, z, fname + "_div_2n(n^2-1)", div_ok ? 0u : 1u, 0, div_ok});
        }

        for (size_t yi = 0; yi < random_ys.size(); ++yi) {
          KPoly x = random_ys[yi] * (KPoly::variable() + KPoly(1)) *
                    (KPoly::variable() + KPoly(2));
          KPoly lx = L.adjoint_apply(x).specialize_z(Rat(z));
          Int running = 0;
          bool div_ok = true;
          for (long n = 1; n <= n_max; ++n) {
            Rat term = lx.eval(Rat(n - 1), Rat(z));
            running += Int(term.get_num()) * weighted(tab, n - 1);
            if (n < 2) continue;
            Int nn = Int(n) * (Int(n) * Int(n) - 1);
            if (running % nn != 0) div_ok = false;
          }
          rep.add({0, static_cast<long>(yi), eps, z, fname + "_div_n(n^2-1)_random_y",
                   div_ok ? 0u : 1u, 0, div_ok});
        }
      }
    }
  }
  return rep;
}

// Symbolic version of the closed form, equality in Z[z].
inline CongruenceReport verify_divisibility_symbolic(long n_max, long s_max,
                                                     const std::vector<int>& epsilons) {
  CongruenceReport rep;
  auto large_sym = family_table_sym(Family::LargeSchroder, n_max);
  auto little_sym = family_table_sym(Family::LittleSchroder, n_max);

  for (int eps : epsilons) {
    ShiftOp L = schroder_operator(eps);
    for (int fam = 0; fam < 2; ++fam) {
      const auto& tab = fam == 0 ? large_sym : little_sym;
      std::string fname = fam == 0 ? "large" : "little";
      auto weighted = [&](long k) {
        return (eps == -1 && k % 2 == 1) ? -tab[static_cast<size_t>(k)]
                                         : tab[static_cast<size_t>(k)];
      };
      for (long s = 0; s <= s_max; ++s) {
        KPoly y = (Rat(2) * KPoly::variable() + KPoly(3)).pow(static_cast<unsigned long>(s)) *
                  Rat(2);
        KPoly x = y * (KPoly::variable() + KPoly(1)) * (KPoly::variable() + KPoly(2));
        KPoly lx = L.adjoint_apply(x);

        ZPoly running;
        bool ok = true;
        for (long n = 1; n <= n_max; ++n) {
          running += lx.eval_k(Rat(n - 1)) * weighted(n - 1);
          if (n < 2) continue;
          Rat nn = Rat(n) * (Rat(n) * Rat(n) - 1);
          ZPoly rhs = nn * (y.eval_k(Rat(n - 1)) * weighted(n - 1) -
                            y.eval_k(Rat(n - 2)) * weighted(n));
          if (running != rhs) ok = false;
        }
        rep.add({0, s, eps, Int(0), fname + "_closed_form_symbolic", ok ? 0u : 1u, 0, ok});
      }
    }
  }
  return rep;
}

// Proof-path reconstruction for one family table (unweighted values,
// indices 0..p): residual sum plus eta-power multiples of the
// telescoped boundary values at n = p.
inline ModInt certificate_sum_mod(const ReductionCertificate& cert, const std::vector<Int>& tab,
                                  const Int& z, std::uint64_t p) {
  if (!hypothesis_ok(p, z))
    throw hypothesis_violated_error("certificate_sum_mod: gcd(p, z(z+1)) != 1");
  int eps = cert.epsilon;
  Int eta = eta_value(eps, z);
  if (mpz_fdiv_ui(eta.get_mpz_t(), p) == 0)
    throw eta_divides_modulus_error("certificate_sum_mod: eta not invertible mod p");
  ZPoly eta_z = eta_poly(eps);
  if (tab.size() < p + 1) throw index_out_of_range_error("certificate_sum_mod: table too short");

  auto weighted = [&](long k) {
    return (eps == -1 && k % 2 == 1) ? Int(-tab[static_cast<size_t>(k)])
                                     : tab[static_cast<size_t>(k)];
  };

  ModInt recon(0, p);
  for (const auto& [i, u] : cert.residual) {
    Int part = 0;
    for (long k = 0; k < static_cast<long>(p); ++k)
      part += pow_int(Int(2 * k + 1), static_cast<unsigned long>(i)) * weighted(k);
    Rat uc = u.as_polynomial().eval(Rat(z));
    if (!is_integer(uc)) throw error("certificate_sum_mod: non-integer residual coefficient");
    recon = recon + ModInt::from_int(uc.get_num() * part, p);
  }

  // sum_{k<p} L*(x_{s+2}) F_k collapses to the closed form
  // n(n^2-1)(y(n-1)F_{n-1} - y(n-2)F_n) at n = p, y = 2(2k+3)^s.
  for (const auto& term : cert.combo) {
    auto [upow, num] = term.v.as_power_denominator(eta_z);
    int s = term.j - 2;
    KPoly y = (Rat(2) * KPoly::variable() + KPoly(3)).pow(static_cast<unsigned long>(s)) *
              Rat(2);
    Int n(static_cast<unsigned long>(p));
    Rat yn1 = y.eval(Rat(n - 1), Rat(z));
    Rat yn2 = y.eval(Rat(n - 2), Rat(z));
    Int boundary = n * (n * n - 1) *
                   (yn1.get_num() * weighted(static_cast<long>(p) - 1) -
                    yn2.get_num() * weighted(static_cast<long>(p)));
    Rat numv = num.eval(Rat(z));
    if (!is_integer(numv)) throw error("certificate_sum_mod: non-integer multiplier");
    ModInt etainv = ModInt::from_int(eta, p).pow(static_cast<std::uint64_t>(upow)).inverse();
    recon = recon + ModInt::from_int(numv.get_num() * boundary, p) * etainv;
  }
  return recon;
}

// Both families must match the direct sum mod p.
inline bool verify_via_certificate(const ReductionCertificate& cert, const Int& z,
                                   std::uint64_t p) {
  for (Family fam : {Family::LargeSchroder, Family::LittleSchroder}) {
    std::vector<Int> tab = family_table(fam, static_cast<long>(p), z);
    ModInt recon = certificate_sum_mod(cert, tab, z, p);
    ModInt direct = weighted_sum_mod(fam, (cert.m - 1) / 2, cert.epsilon, z, p);
    if (!(recon == direct)) return false;
  }
  return true;
}

inline bool verify_via_certificate(long r, int epsilon, const Int& z, std::uint64_t p) {
  return verify_via_certificate(schroder_certificate(r, epsilon), z, p);
}

// Batch two-path agreement over a grid, sharing sequence tables per z
// and certificates per (r, epsilon).
inline CongruenceReport verify_two_path(const GridSpec& grid) {
  CongruenceReport rep;
  std::uint64_t pmax = 0;
  for (auto p : grid.primes) pmax = std::max(pmax, p);
  if (pmax == 0) return rep;

  std::vector<std::vector<ReductionCertificate>> certs(2);  // [eps index][r]
  for (long r : grid.r_values) {
    certs[0].push_back(schroder_certificate(r, -1));
    certs[1].push_back(schroder_certificate(r, 1));
  }

  auto large_sym = family_table_sym(Family::LargeSchroder, static_cast<long>(pmax));
  auto little_sym = family_table_sym(Family::LittleSchroder, static_cast<long>(pmax));

  for (const Int& z : grid.z_values) {
    std::vector<Int> large, little;
    for (const auto& f : large_sym) large.push_back(eval_int_poly(f, z));
    for (const auto& f : little_sym) little.push_back(eval_int_poly(f, z));

    for (std::uint64_t p : grid.primes) {
      if (!hypothesis_ok(p, z)) {
        rep.skipped += static_cast<long>(grid.r_values.size() * grid.epsilons.size() * 2);
        continue;
      }
      for (size_t ri = 0; ri < grid.r_values.size(); ++ri)
        for (int eps : grid.epsilons) {
          const ReductionCertificate& cert = certs[eps == 1 ? 1 : 0][ri];
          long r = grid.r_values[ri];
          for (int fam = 0; fam < 2; ++fam) {
            const std::vector<Int>& tab = fam == 0 ? large : little;
            ModInt recon = certificate_sum_mod(cert, tab, z, p);
            Int direct = weighted_sum_exact(tab, static_cast<long>(p), r, eps);
            std::uint64_t want = ModInt::from_int(direct, p).value();
            rep.add({p, r, eps, z, fam == 0 ? "large_two_path" : "little_two_path",
                     recon.value(), want, recon.value() == want});
          }
        }
    }
  }
  return rep;
}

}  // namespace partible

#endif
