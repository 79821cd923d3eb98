#include <rhcrit/precision.hpp>

#include <catch_amalgamated.hpp>

using namespace rhcrit;

TEST_CASE("PrecisionCtx validation") {
  PrecisionCtx ctx;
  CHECK(ctx.bits == 256);
  CHECK(ctx.working_bits() == 320);
  CHECK_NOTHROW(ctx.validate());
  ctx.bits = 63;
  CHECK_THROWS_AS(ctx.validate(), std::domain_error);
  ctx.bits = 64;
  CHECK_NOTHROW(ctx.validate());
}

TEST_CASE("bits_to_digits10 covers the mantissa") {
  CHECK(bits_to_digits10(64) == 21);
  CHECK(bits_to_digits10(256) == 79);
  // digits10 must round-trip back to at least the requested bits
  for (unsigned b : {64u, 128u, 256u, 320u, 1024u})
    CHECK(static_cast<unsigned>(bits_to_digits10(b) * 3.32) >= b);
}

TEST_CASE("PrecisionGuard scopes the default precision") {
  unsigned before = Real::default_precision();
  {
    PrecisionGuard g(512);
    CHECK(Real::default_precision() == bits_to_digits10(512));
    Real x = 1;
    CHECK(x.precision() >= bits_to_digits10(512));
  }
  CHECK(Real::default_precision() == before);
}

TEST_CASE("widen re-rounds to the ambient precision") {
  Real coarse;
  {
    PrecisionGuard g(64);
    coarse = Real("1.1");
  }
  PrecisionGuard g(256);
  Real w = widen(coarse);
  CHECK(w.precision() >= bits_to_digits10(256));
  // same value, only carried wider
  CHECK(w == coarse);
}

TEST_CASE("pow2 is exact") {
  PrecisionGuard g(128);
  CHECK(pow2(-3) == Real(1) / 8);
  CHECK(pow2(10) == 1024);
  CHECK(pow2(-200) > 0);
}

TEST_CASE("const_pi at ambient precision") {
  PrecisionGuard g(256);
  Real pi = const_pi();
  CHECK(abs(sin(pi)) < pow2(-250));
}
