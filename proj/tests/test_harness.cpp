#include <doctest.h>

#include "partible/harness.hpp"

using namespace partible;

TEST_CASE("weighted sum spot values at p = 5, z = 1, eps = 1") {
  // r=0: 1*1 + 3*2 + 5*6 + 7*22 + 9*90 = 1001
  CHECK(weighted_sum_exact(Family::LargeSchroder, 0, 1, Int(1), 5) == 1001);
  // r=1: cubed weights
  CHECK(weighted_sum_exact(Family::LargeSchroder, 1, 1, Int(1), 5) == 73961);
  CHECK(weighted_sum_exact(Family::LittleSchroder, 0, 1, Int(1), 5) == 500);
  // p=3: 1*1 + 3*2 + 5*6 = 37 = 12*3 + 1
  CHECK(weighted_sum_mod(Family::LargeSchroder, 0, 1, Int(1), 3).value() == 1);
  CHECK(weighted_sum_mod(Family::LargeSchroder, 0, 1, Int(1), 5).value() == 1);  // 1001 = 5*200+1
  CHECK(weighted_sum_mod(Family::LittleSchroder, 0, 1, Int(1), 5).value() == 0);
  CHECK(weighted_sum_mod(Family::LargeSchroder, 1, 1, Int(1), 5).value() == 1);  // 73961
}

TEST_CASE("hypothesis gate") {
  CHECK(hypothesis_ok(5, Int(1)));
  CHECK_FALSE(hypothesis_ok(5, Int(4)));   // 5 | z+1
  CHECK_FALSE(hypothesis_ok(5, Int(5)));   // 5 | z
  CHECK_FALSE(hypothesis_ok(3, Int(-4)));  // 3 | -3 = z+1... z(z+1) = 12
  CHECK_THROWS_AS(weighted_sum_mod(Family::LargeSchroder, 0, 1, Int(4), 5),
                  hypothesis_violated_error);
  CHECK_NOTHROW(weighted_sum_mod(Family::LargeSchroder, 0, 1, Int(4), 5, false));
}

TEST_CASE("theorem congruences on a small grid") {
  GridSpec g;
  g.primes = odd_primes_below(30);
  g.r_values = {0, 1, 2};
  g.epsilons = {-1, 1};
  for (long z = -4; z <= 4; ++z) g.z_values.push_back(Int(z));
  auto rep = verify_theorem1(g);
  CHECK(rep.ok());
  CHECK(rep.failed == 0);
  CHECK(rep.passed > 0);
  CHECK(rep.skipped > 0);  // inadmissible (p, z) pairs are skipped, not failed
}

TEST_CASE("lemma-level congruences and the exact Delannoy identity") {
  // D_5(1) = 1683 = 3 mod 5 = 1+2z; D_4(1) = 321 = 1 mod 5;
  // 2z * 1001 = 2002 = D_5 + D_4 - 2 = 1683 + 321 - 2.
  CHECK(central_delannoy(5, 1) % 5 == 3);
  CHECK(central_delannoy(4, 1) % 5 == 1);
  CHECK(Int(2) * weighted_sum_exact(Family::LargeSchroder, 0, 1, Int(1), 5) == Int(2002));
  CHECK(Int(1683 + 321 - 1 - 1) == Int(2002));

  auto rep = verify_lemma32(odd_primes_below(40), {-1, 1},
                            {Int(-3), Int(-2), Int(1), Int(2), Int(3)});
  CHECK(rep.ok());
  CHECK(rep.passed > 0);
}

TEST_CASE("telescoped-sum divisibility, numeric and symbolic") {
  // n=3, s=0, eps=1, z=1: sum = 3*8*(2*6 - 2*22) = -768
  {
    ShiftOp L = schroder_operator(1);
    KPoly x = Rat(2) * (KPoly::variable() + KPoly(1)) * (KPoly::variable() + KPoly(2));
    KPoly lx = L.adjoint_apply(x).specialize_z(Rat(1));
    Rat sum = 0;
    for (long k = 0; k < 3; ++k) sum += lx.eval(Rat(k), Rat(1)) * Rat(large_schroder(k, 1));
    CHECK(sum == -768);
    CHECK(Rat(3 * 8) * (Rat(2) * 6 - Rat(2) * 22) == -768);
  }

  auto rep = verify_divisibility(60, 3, {-1, 1}, {Int(-2), Int(1), Int(3)});
  CHECK(rep.ok());
  auto sym = verify_divisibility_symbolic(20, 4, {-1, 1});
  CHECK(sym.ok());
}

TEST_CASE("certificate path equals direct summation") {
  CHECK(verify_via_certificate(0, 1, Int(1), 5));
  CHECK(verify_via_certificate(1, 1, Int(1), 7));
  CHECK(verify_via_certificate(2, -1, Int(2), 11));
  CHECK(verify_via_certificate(3, 1, Int(3), 7));   // eta = -3, invertible mod 7
  CHECK(verify_via_certificate(1, -1, Int(-3), 13));

  auto cert = schroder_certificate(1, 1);
  CHECK_THROWS_AS(certificate_sum_mod(cert, family_table(Family::LargeSchroder, 5, Int(4)),
                                      Int(4), 5),
                  hypothesis_violated_error);
}

TEST_CASE("certificate path mutation is detected") {
  auto cert = schroder_certificate(2, 1);
  auto tab = family_table(Family::LargeSchroder, 7, Int(1));
  ModInt good = certificate_sum_mod(cert, tab, Int(1), 7);
  auto bad = cert;
  bad.residual[0].second *= RatFunc(Rat(3));
  ModInt wrong = certificate_sum_mod(bad, tab, Int(1), 7);
  CHECK_FALSE(good == wrong);
  // mutating a combo term cannot move the residue: its boundary value
  // carries the factor p(p^2-1), which is 0 mod p
  auto shifted = cert;
  shifted.combo[0].v *= RatFunc(Rat(5));
  CHECK(certificate_sum_mod(shifted, tab, Int(1), 7) == good);
}

TEST_CASE("eta invertibility along admissible grid points") {
  // gcd(p, z(z+1)) = 1 forces gcd(p, eta) = 1 for both signs.
  for (std::uint64_t p : odd_primes_below(50))
    for (long z = -10; z <= 10; ++z) {
      if (!hypothesis_ok(p, Int(z))) continue;
      for (int eps : {-1, 1})
        CHECK(mpz_fdiv_ui(eta_value(eps, Int(z)).get_mpz_t(), p) != 0);
    }
}

TEST_CASE("two-path agreement on a small grid") {
  GridSpec g;
  g.primes = odd_primes_below(20);
  g.r_values = {0, 1, 2};
  g.epsilons = {-1, 1};
  for (long z = -3; z <= 3; ++z) g.z_values.push_back(Int(z));
  auto rep = verify_two_path(g);
  CHECK(rep.ok());
  CHECK(rep.passed > 0);
  for (const auto& rec : rep.points) {
    CHECK(rec.pass);
    if (rec.family == "large_two_path") CHECK(rec.expected == 1);
    if (rec.family == "little_two_path") CHECK(rec.expected == 0);
  }
}
