#include <doctest.h>

#include "partible/json_io.hpp"
#include "partible/reduction.hpp"

using namespace partible;

namespace {

KPoly two_k_plus_1() { return Rat(2) * KPoly::variable() + KPoly(1); }

}  // namespace

TEST_CASE("schroder basis matches the closed product form") {
  KPoly k = KPoly::variable();
  for (int j = 2; j <= 8; ++j) {
    int s = j - 2;
    SymmetricBasisPoly b = schroder_basis(j);
    KPoly want = Rat(2) * (Rat(2) * k + KPoly(3)).pow(static_cast<unsigned long>(s)) *
                 (k + KPoly(1)) * (k + KPoly(2));
    CHECK(b.expanded == want);
    CHECK(b.expanded.degree() == j);
    CHECK(b.gamma == make_rat(-1, 2));
    CHECK(b.J == 2);
    // both boundary roots, so the telescoped sums start cleanly at k = 0
    CHECK(b.expanded.eval_k(Rat(-1)).is_zero());
    CHECK(b.expanded.eval_k(Rat(-2)).is_zero());
  }
  CHECK_THROWS_AS(schroder_basis(1), error);
}

TEST_CASE("check_symmetry worked examples") {
  KPoly k = KPoly::variable();
  Rat g = make_rat(-1, 2);
  CHECK(check_symmetry(Rat(2) * k + KPoly(3), g, 2));  // the basic form k - gamma + J/2
  CHECK(check_symmetry(Rat(2) * (k + KPoly(1)) * (k + KPoly(2)), g, 2));
  CHECK_FALSE(check_symmetry(two_k_plus_1(), g, 2));
  CHECK(check_symmetry(KPoly(), g, 2));
  CHECK(check_symmetry(KPoly(5), g, 0));
  CHECK_FALSE(check_symmetry(k, g, 2));
  CHECK_FALSE(check_symmetry(k * k, g, 2));
  for (int j = 2; j <= 10; ++j) CHECK(check_symmetry(schroder_basis(j).expanded, g, 2));
}

TEST_CASE("build_basis expands the declared factorization") {
  // alpha (k+3/2): one linear factor at gamma=-1/2, J=2
  auto b = build_basis(make_rat(-1, 2), 2, Rat(3), 1, {});
  CHECK(b.expanded == Rat(3) * (KPoly::variable() + KPoly(make_rat(3, 2))));
  // (k+3/2)^2 - 1/4 = (k+1)(k+2)
  auto b2 = build_basis(make_rat(-1, 2), 2, Rat(1), 0, {make_rat(1, 4)});
  CHECK(b2.expanded == (KPoly::variable() + KPoly(1)) * (KPoly::variable() + KPoly(2)));
}

TEST_CASE("require_eta_nonzero") {
  CHECK_THROWS_AS(require_eta_nonzero(1, Rat(0)), leading_coefficient_vanishes_error);
  CHECK_THROWS_AS(require_eta_nonzero(-1, Rat(-1)), leading_coefficient_vanishes_error);
  CHECK_NOTHROW(require_eta_nonzero(1, Rat(-1)));
  CHECK_NOTHROW(require_eta_nonzero(-1, Rat(0)));
  CHECK_NOTHROW(require_eta_nonzero(1, Rat(5)));
}

TEST_CASE("reduce_power m=1 leaves the bare residual") {
  ShiftOp L = schroder_operator(1);
  PartibleInfo info{make_rat(-1, 2), 1, true};
  auto cert = reduce_power(L, info, schroder_basis, 2, 1);
  CHECK(cert.combo.empty());
  REQUIRE(cert.residual.size() == 1);
  CHECK(cert.residual[0].first == 1);
  CHECK(cert.residual[0].second == RatFunc(1));
  CHECK(verify_certificate(cert, L));
}

TEST_CASE("schroder certificate m=3: single x_2 term over eta") {
  for (int eps : {-1, 1}) {
    auto cert = schroder_certificate(1, eps);
    ShiftOp L = schroder_operator(eps);
    REQUIRE(cert.combo.size() == 1);
    CHECK(cert.combo[0].j == 2);
    auto [u, num] = cert.combo[0].v.as_power_denominator(eta_poly(eps));
    CHECK(u == 1);
    CHECK(num == ZPoly(1));
    REQUIRE(cert.residual.size() == 1);
    CHECK(cert.residual[0].first == 1);
    CHECK(cert.residual[0].second == RatFunc(1));
    CHECK(verify_certificate(cert, L));
  }
  // specialized check at eps=1, z=1: eta = -1, so v = -1 and
  // (2k+1)^3 = -L*(x_2) + (2k+1) there.
  auto cert = schroder_certificate(1, 1);
  CHECK(cert.combo[0].v.eval(Rat(1)) == -1);
}

TEST_CASE("schroder certificate m=5: x_4 over eta, x_2 times (eta-8)/eta^2") {
  for (int eps : {-1, 1}) {
    auto cert = schroder_certificate(2, eps);
    REQUIRE(cert.combo.size() == 2);
    ZPoly eta = eta_poly(eps);
    CHECK(cert.combo[0].j == 4);
    auto [u4, n4] = cert.combo[0].v.as_power_denominator(eta);
    CHECK(u4 == 1);
    CHECK(n4 == ZPoly(1));
    CHECK(cert.combo[1].j == 2);
    auto [u2, n2] = cert.combo[1].v.as_power_denominator(eta);
    CHECK(u2 == 2);
    CHECK(n2 == eta - ZPoly(8));
    CHECK(verify_certificate(cert, schroder_operator(eps)));
  }
  // eps=1, z=1: v_2 = (eta-8)/eta^2 = -9
  auto cert = schroder_certificate(2, 1);
  CHECK(cert.combo[1].v.eval(Rat(1)) == -9);
}

TEST_CASE("certificates verify for r = 0..8, both signs, and fail when corrupted") {
  for (int eps : {-1, 1}) {
    ShiftOp L = schroder_operator(eps);
    for (long r = 0; r <= 8; ++r) {
      auto cert = schroder_certificate(r, eps);
      CHECK(cert.m == 2 * r + 1);
      CHECK(verify_certificate(cert, L));

      auto bad = cert;
      bad.residual[0].second += RatFunc(1);
      CHECK_FALSE(verify_certificate(bad, L));
      if (!cert.combo.empty()) {
        auto bad2 = cert;
        bad2.combo[0].v *= RatFunc(Rat(2));
        CHECK_FALSE(verify_certificate(bad2, L));
      }
    }
  }
}

TEST_CASE("L*(x_j) structure: odd powers of (2k+1) with integer slices") {
  // In ell = 2k+1: L*(x_{s+2}) = eta ell^{s+3} + sum_j e_j ell^{s+3-2j},
  // all e_j in Z[z]; and k | L*(x_j) since x_j(-1) = x_j(-2) = 0.
  for (int eps : {-1, 1}) {
    ShiftOp L = schroder_operator(eps);
    for (int j = 2; j <= 14; ++j) {
      KPoly lx = L.adjoint_apply(schroder_basis(j).expanded);
      CHECK(lx.eval_k(Rat(0)).is_zero());
      auto cc = lx.shift_k(make_rat(-1, 2)).coeffs();
      REQUIRE(static_cast<int>(cc.size()) == j + 2);
      for (int t = 0; t < static_cast<int>(cc.size()); ++t) {
        if ((t - (j + 1)) % 2 != 0) {
          CHECK(cc[static_cast<size_t>(t)].is_zero());
          continue;
        }
        // e_t = coefficient of ell^t = cc[t] / 2^t must lie in Z[z]
        Rat scale = Rat(1) / pow_rat(Rat(2), static_cast<unsigned long>(t));
        for (const Rat& c : (cc[static_cast<size_t>(t)] * scale).coeffs())
          CHECK(is_integer(c));
      }
      // leading slice is exactly eta
      Rat top_scale = Rat(1) / pow_rat(Rat(2), static_cast<unsigned long>(j + 1));
      CHECK(cc.back() * top_scale == eta_poly(eps));
    }
  }
}

TEST_CASE("reduction fails honestly when eta vanishes") {
  ShiftOp L0 = schroder_operator(1).specialize_z(Rat(0));
  PartibleInfo info{make_rat(-1, 2), 1, true};
  CHECK_THROWS_AS(reduce_power(L0, info, schroder_basis, 2, 3),
                  leading_coefficient_vanishes_error);
  ShiftOp Lm1 = schroder_operator(-1).specialize_z(Rat(-1));
  CHECK_THROWS_AS(reduce_power(Lm1, info, schroder_basis, 2, 5),
                  leading_coefficient_vanishes_error);
}

TEST_CASE("certificate JSON round-trip") {
  for (int eps : {-1, 1}) {
    for (long r : {0L, 1L, 2L, 4L}) {
      auto cert = schroder_certificate(r, eps);
      json j = certificate_to_json(cert);
      CHECK(j["basis"] == "schroder");
      auto back = certificate_from_json(j);
      CHECK(back.m == cert.m);
      CHECK(back.epsilon == cert.epsilon);
      REQUIRE(back.combo.size() == cert.combo.size());
      for (size_t i = 0; i < cert.combo.size(); ++i) {
        CHECK(back.combo[i].j == cert.combo[i].j);
        CHECK(back.combo[i].v == cert.combo[i].v);
      }
      CHECK(back.residual == cert.residual);
      CHECK(verify_certificate(back, schroder_operator(eps)));
    }
  }
}
