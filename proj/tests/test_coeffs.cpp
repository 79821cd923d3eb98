#include <rhcrit/coeffs.hpp>

#include <catch_amalgamated.hpp>

#include <chrono>
#include <vector>

using namespace rhcrit;

namespace {

// Alternate form of the coefficient sum, substituting m = l - k.
Rational coeff_A_mform(unsigned n, unsigned k, const Rational& a) {
  BigInt s = 0;
  for (unsigned m = 0; m + k <= n; ++m) s += binom(2 * n, 2 * m + 2 * k) * binom(m + k, k);
  unsigned e = 2 * (n - k);
  BigInt pn = 1, pd = 1;
  for (unsigned i = 0; i < e; ++i) {
    pn *= numerator(a);
    pd *= denominator(a);
  }
  return make_rational(s * pd, pn);
}

const std::vector<Rational> kGridA = {
    make_rational(1, 7), Rational(1), Rational(2), Rational(10)};

}  // namespace

TEST_CASE("coeff_A hand examples") {
  CHECK(coeff_A(1, 1, Rational(2)) == 1);
  CHECK(coeff_A(1, 0, Rational(2)) == make_rational(1, 2));
  CHECK(coeff_A(2, 0, Rational(1)) == 8);
  CHECK(coeff_A(2, 1, Rational(1)) == 8);
  CHECK_THROWS_AS(coeff_A(0, 0, Rational(2)), std::domain_error);
  CHECK_THROWS_AS(coeff_A(2, 3, Rational(2)), std::domain_error);
  CHECK_THROWS_AS(coeff_A(1, 0, Rational(0)), std::domain_error);
}

TEST_CASE("m-form equivalence, positivity, closed subfamily, scaling") {
  for (unsigned n = 1; n <= 50; ++n) {
    for (const auto& a : kGridA) {
      Rational an1;
      for (unsigned k = 0; k <= n; ++k) {
        Rational direct = coeff_A(n, k, a);
        REQUIRE(direct == coeff_A_mform(n, k, a));
        REQUIRE(direct > 0);
        if (k == n) REQUIRE(direct == 1);
        if (k + 1 == n) an1 = direct;
        // scaling: a^(2n-2k) * A is a-independent
        Rational apow = 1;
        for (unsigned i = 0; i < 2 * (n - k); ++i) apow *= a;
        REQUIRE(direct * apow == coeff_A(n, k, Rational(1)));
      }
      REQUIRE(an1 == Rational(2 * BigInt(n) * BigInt(n)) / (a * a));
    }
  }
}

TEST_CASE("build_coeff_table examples") {
  CoeffTable t = build_coeff_table(1, Rational(2));
  CHECK(t.A == std::vector<Rational>{make_rational(1, 2), Rational(1)});
  CHECK(t.F == std::vector<Rational>{Rational(2)});
  CHECK_FALSE(t.a_warning);

  CoeffTable t2 = build_coeff_table(2, Rational(1));
  CHECK(t2.A == std::vector<Rational>{Rational(8), Rational(8), Rational(1)});
  CHECK(t2.F == std::vector<Rational>{Rational(64), Rational(32)});

  CoeffTable t3 = build_coeff_table(1, Rational(1));
  CHECK(t3.A == std::vector<Rational>{Rational(2), Rational(1)});
  CHECK(t3.F == std::vector<Rational>{Rational(8)});

  CHECK(t.F.size() == 1);
  CHECK(t2.F.size() == 2);
}

TEST_CASE("a bound: 1/14 enforced, 1/4 flagged") {
  CHECK_THROWS_AS(build_coeff_table(1, make_rational(1, 14)), std::domain_error);
  CHECK_THROWS_AS(build_coeff_table(1, make_rational(1, 20)), std::domain_error);
  CoeffTable warn = build_coeff_table(1, make_rational(1, 7));
  CHECK(warn.a_warning);
  CoeffTable warn2 = build_coeff_table(1, make_rational(1, 4));
  CHECK(warn2.a_warning);
  CoeffTable ok = build_coeff_table(1, make_rational(1, 3));
  CHECK_FALSE(ok.a_warning);
}

TEST_CASE("F derivatives at the center") {
  CoeffTable t = build_coeff_table(2, Rational(1));
  CHECK(F_deriv_at_half(t, 2) == 64);
  CHECK(F_deriv_at_half(t, 0) == 64);
  CHECK(F_deriv_at_half(t, 4) == 0);
  CoeffTable t1 = build_coeff_table(1, Rational(2));
  CHECK(F_deriv_at_half(t1, 4) == 0);
  CHECK(F_deriv_at_half(t1, 0) == 2);
  CHECK_THROWS_AS(F_deriv_at_half(t, 3), std::domain_error);
}

TEST_CASE("coefficient grid is fast enough") {
  auto start = std::chrono::steady_clock::now();
  for (unsigned n = 1; n <= 50; ++n)
    for (const auto& a : kGridA) build_coeff_table(n, a);
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(secs < 5.0);
}
