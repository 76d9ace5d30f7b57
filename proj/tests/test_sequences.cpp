#include <doctest.h>

#include "partible/json_io.hpp"
#include "partible/sequences.hpp"

using namespace partible;

TEST_CASE("worked sequence values at z = 1") {
  const long S[] = {1, 2, 6, 22, 90, 394, 1806};
  const long s[] = {0, 1, 3, 11, 45, 197, 903};
  const long D[] = {1, 3, 13, 63, 321, 1683, 8989};
  for (long n = 0; n <= 6; ++n) {
    CHECK(large_schroder(n, 1) == S[n]);
    CHECK(little_schroder(n, 1) == s[n]);
    CHECK(central_delannoy(n, 1) == D[n]);
  }
}

TEST_CASE("worked polynomial coefficients") {
  CHECK(large_schroder_poly(0) == ZPoly(1));
  CHECK(large_schroder_poly(1) == parse_zpoly("z + 1"));
  CHECK(large_schroder_poly(2) == parse_zpoly("2*z^2 + 3*z + 1"));
  CHECK(large_schroder_poly(3) == parse_zpoly("5*z^3 + 10*z^2 + 6*z + 1"));
  CHECK(little_schroder_poly(0).is_zero());
  CHECK(little_schroder_poly(1) == ZPoly(1));
  CHECK(little_schroder_poly(2) == parse_zpoly("2*z + 1"));
  CHECK(little_schroder_poly(3) == parse_zpoly("5*z^2 + 5*z + 1"));
  CHECK(central_delannoy_poly(2) == parse_zpoly("6*z^2 + 6*z + 1"));
}

TEST_CASE("structural identities hold symbolically up to n = 60") {
  auto rep = check_identities(60, {Rat(-4), Rat(-2), Rat(2), Rat(3)});
  CHECK(rep.ok());
  CHECK(rep.checked == 60);
}

TEST_CASE("recurrence unrolling matches the binomial definitions") {
  for (int eps : {-1, 1}) {
    for (long z = -5; z <= 5; ++z) {
      for (Family fam : {Family::LargeSchroder, Family::LittleSchroder}) {
        SequenceSpec spec;
        spec.family = fam;
        spec.z = Rat(z);
        spec.epsilon = eps;
        auto F = seq_by_recurrence(spec, 200);
        for (long n = 0; n <= 200; n += (n < 20 ? 1 : 17)) {
          Rat want = family_poly(fam, n).eval(Rat(z));
          if (eps == -1 && n % 2 == 1) want = -want;
          CHECK(F[static_cast<size_t>(n)] == want);
        }
      }
    }
  }
}

TEST_CASE("recurrence presets reject Delannoy") {
  SequenceSpec spec;
  spec.family = Family::CentralDelannoy;
  CHECK_THROWS_AS(seq_by_recurrence(spec, 10), error);
}

TEST_CASE("custom recurrence: sigma - 1 holds constants") {
  SequenceSpec spec;
  spec.kind = SequenceSpec::Kind::Custom;
  spec.custom_coeffs = {KPoly(-1), KPoly(1)};
  spec.initials = {Rat(7)};
  auto F = seq_by_recurrence(spec, 12);
  for (const Rat& v : F) CHECK(v == 7);

  spec.initials = {Rat(7), Rat(8)};
  CHECK_THROWS_AS(seq_by_recurrence(spec, 12), error);
}

TEST_CASE("custom recurrence with vanishing leading coefficient") {
  // a_1 = n - 2 vanishes at n = 2
  SequenceSpec spec;
  spec.kind = SequenceSpec::Kind::Custom;
  spec.custom_coeffs = {KPoly(1), KPoly::variable() - KPoly(2)};
  spec.initials = {Rat(1)};
  CHECK_THROWS_AS(seq_by_recurrence(spec, 10), error);
}

TEST_CASE("eta specializations") {
  CHECK(eta_poly(1).eval(Rat(3)) == -3);
  CHECK(eta_poly(-1).eval(Rat(3)) == 4);
  CHECK(eta_poly(1).eval(Rat(0)) == 0);
  CHECK(eta_poly(-1).eval(Rat(-1)) == 0);
  // eta = (1 - eps(1+2z))/2 literally
  for (int eps : {-1, 1})
    for (long z = -4; z <= 4; ++z)
      CHECK(eta_poly(eps).eval(Rat(z)) == (Rat(1) - Rat(eps) * Rat(1 + 2 * z)) / 2);
}

TEST_CASE("operator JSON serialization round-trips") {
  for (int eps : {-1, 1}) {
    ShiftOp L = schroder_operator(eps);
    json j = operator_to_json(L);
    CHECK(j["order"] == 2);
    CHECK(j["epsilon"] == eps);
    ShiftOp back = operator_from_json(j);
    CHECK(back.order() == 2);
    CHECK(back.epsilon() == eps);
    for (int i = 0; i <= 2; ++i) CHECK(back.coeff(i) == L.coeff(i));
  }

  json bad = operator_to_json(schroder_operator(1));
  bad["order"] = 3;
  CHECK_THROWS_AS(operator_from_json(bad), error);
}
