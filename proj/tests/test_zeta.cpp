#include <rhcrit/zeta.hpp>

#include <catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace rhcrit;
using testutil::Rng;
using testutil::tol_bits;

namespace {
const PrecisionCtx kCtx;  // 256 + 64
}

TEST_CASE("zeta classical values") {
  PrecisionGuard g(kCtx.working_bits());
  Real pi = const_pi();

  Complex z2 = zeta(Complex(Real(2)), kCtx);
  CHECK(abs(z2.re - pi * pi / 6) < tol_bits(kCtx.bits));
  CHECK(abs(z2.im) < tol_bits(kCtx.bits));

  Complex z0 = zeta(Complex(Real(0)), kCtx);
  CHECK(abs(z0.re + Real(0.5)) < tol_bits(kCtx.bits));

  Complex zm1 = zeta(Complex(Real(-1)), kCtx);
  CHECK(abs(zm1.re + Real(1) / 12) < tol_bits(kCtx.bits));
}

TEST_CASE("zeta pole at 1") {
  CHECK_THROWS_AS(zeta(Complex(Real(1)), kCtx), PoleError);
}

TEST_CASE("bernoulli cache") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == make_rational(-1, 2));
  CHECK(bernoulli(2) == make_rational(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(12) == make_rational(-691, 2730));
}

TEST_CASE("xi central value against the closed form") {
  PrecisionGuard g(kCtx.working_bits());
  // xi(1/2) = -(1/8) pi^(-1/4) Gamma(1/4) zeta(1/2)
  Real pi = const_pi();
  Complex lg = log_gamma(Complex(Real(0.25)), kCtx);
  Real gamma_quarter = exp(lg.re);
  Real zeta_half = zeta(Complex(Real(0.5)), kCtx).re;
  Real oracle = -Real(0.125) * exp(-log(pi) / 4) * gamma_quarter * zeta_half;
  Complex x = xi(Complex(Real(0.5)), kCtx);
  CHECK(abs(x.re - oracle) < tol_bits(kCtx.bits));
  CHECK(abs(x.im) < tol_bits(kCtx.bits));
  // pinned decimal value
  CHECK(abs(x.re - Real("0.49712077818831410991277373968539771980729360955770518593")) <
        Real("1e-50"));
  // the zeta factor alone, against its published decimal expansion
  CHECK(abs(zeta_half - Real("-1.46035450880958681288949915251529801246722933101258149054")) <
        Real("1e-50"));
}

TEST_CASE("xi functional equation examples") {
  PrecisionGuard g(kCtx.working_bits());
  Complex a = xi(Complex(Real(3)), kCtx);
  Complex b = xi(Complex(Real(-2)), kCtx);
  CHECK(abs(a - b) < tol_bits(kCtx.bits) * abs(a));
}

TEST_CASE("functional equation on random annulus points") {
  PrecisionGuard g(kCtx.working_bits());
  Rng rng(0xA11CE5);
  for (int i = 0; i < 100; ++i) {
    double r = rng.uniform(1.0, 8.0);
    double th = rng.uniform(0.0, 6.283185307179586);
    Complex z{Real(0.5) + Real(r * std::cos(th)), Real(r * std::sin(th))};
    Complex lhs = xi(z, kCtx);
    Complex rhs = xi(Complex(Real(1)) - z, kCtx);
    REQUIRE(abs(lhs - rhs) <= tol_bits(kCtx.bits, 16) * (abs(lhs) + 1));
  }
}

TEST_CASE("xi guard near removable points") {
  CHECK_THROWS_AS(xi(Complex(Real(0)), kCtx), std::domain_error);
  CHECK_THROWS_AS(xi(Complex(Real(1)), kCtx), std::domain_error);
  // nearby but outside the guard is fine
  CHECK_NOTHROW(xi(Complex(Real("0.001")), kCtx));
}

TEST_CASE("log_gamma poles and oracle") {
  CHECK_THROWS_AS(log_gamma(Complex(Real(0)), kCtx), PoleError);
  CHECK_THROWS_AS(log_gamma(Complex(Real(-3)), kCtx), PoleError);
  PrecisionGuard g(kCtx.working_bits());
  // Gamma(1/2) = sqrt(pi)
  Complex lg = log_gamma(Complex(Real(0.5)), kCtx);
  CHECK(abs(exp(lg.re) - sqrt(const_pi())) < tol_bits(kCtx.bits));
  // recurrence Gamma(z+1) = z Gamma(z) at a complex point
  Complex z{Real("1.7"), Real("2.3")};
  Complex lhs = log_gamma(z + Complex(Real(1)), kCtx);
  Complex rhs = log_gamma(z, kCtx) + log(z);
  CHECK(abs(lhs.re - rhs.re) < tol_bits(kCtx.bits, 16));
}

TEST_CASE("precision escalation changes nothing above the error floor") {
  PrecisionCtx hi;
  hi.bits = 320;
  PrecisionGuard g(hi.working_bits());
  Complex z{Real("0.3"), Real("5.5")};
  Complex lo_v = zeta(z, kCtx);
  Complex hi_v = zeta(z, hi);
  CHECK(abs(lo_v - hi_v) < tol_bits(kCtx.bits, 16) * (abs(hi_v) + 1));
}

TEST_CASE("zeta on the far left via reflection") {
  PrecisionGuard g(kCtx.working_bits());
  // zeta(-3) = 1/120
  Complex v = zeta(Complex(Real(-3)), kCtx);
  CHECK(abs(v.re - Real(1) / 120) < tol_bits(kCtx.bits));
  // trivial zero at -2
  Complex t = zeta(Complex(Real(-2)), kCtx);
  CHECK(abs(t.re) < tol_bits(kCtx.bits));
}
