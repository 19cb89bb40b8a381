#include <gtest/gtest.h>

#include "ringgb/text_format.hpp"
#include "test_support.hpp"

using namespace ringgb;
using namespace ringgb::testing;

TEST(ParsePolynomial, Examples) {
  PolyRing zz = make_ring(Ring::integers());
  Polynomial p = parse_polynomial("2*x^2*y - 3*y + 1", zz);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p.head(), (Monomial{2, Term{2, 1}}));
  EXPECT_EQ(format_polynomial(p, zz), "2*x^2*y - 3*y + 1");

  Polynomial zero = parse_polynomial("x - x", zz);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(format_polynomial(zero, zz), "0");

  EXPECT_THROW(parse_polynomial("1/2*x", zz), ParseError);
}

TEST(ParsePolynomial, Syntax) {
  PolyRing qq = make_ring(Ring::rationals());
  EXPECT_EQ(parse_polynomial("-1/2*x + y", qq), qq.normalize({{Coeff(-1, 2), Term{1, 0}}, {1, Term{0, 1}}}));
  EXPECT_EQ(parse_polynomial("2x^2y", qq), parse_polynomial("2*x^2*y", qq));
  EXPECT_EQ(parse_polynomial("  x * x*y  ", qq), parse_polynomial("x^2*y", qq));
  EXPECT_EQ(parse_polynomial("x^0", qq), parse_polynomial("1", qq));
  EXPECT_EQ(parse_polynomial("+x", qq), parse_polynomial("x", qq));
  EXPECT_EQ(parse_polynomial("4/6", qq), parse_polynomial("2/3", qq));
  EXPECT_EQ(parse_polynomial("123456789012345678901234567890*y", qq).head_coeff(),
            Coeff(mpz_class("123456789012345678901234567890")));
}

TEST(ParsePolynomial, ErrorsCarryPositions) {
  PolyRing qq = make_ring(Ring::rationals());
  auto position_of = [&](const char* text) -> std::size_t {
    try {
      parse_polynomial(text, qq);
    } catch (const ParseError& e) {
      return e.position();
    }
    ADD_FAILURE() << "no error for " << text;
    return 0;
  };
  EXPECT_EQ(position_of("x + z"), 4u);
  EXPECT_EQ(position_of("x +"), 3u);
  EXPECT_EQ(position_of("1/0*x"), 2u);
  EXPECT_EQ(position_of("x^"), 2u);
  EXPECT_EQ(position_of("x ) y"), 2u);
  EXPECT_EQ(position_of(""), 0u);
  EXPECT_EQ(position_of("x**y"), 2u);

  PolyRing gf = make_ring(Ring::prime_field(5));
  EXPECT_THROW(parse_polynomial("1/5*x", gf), ParseError);
  EXPECT_EQ(parse_polynomial("1/2*x", gf), parse_polynomial("3*x", gf));
}

TEST(FormatPolynomial, Layout) {
  PolyRing qq = make_ring(Ring::rationals());
  EXPECT_EQ(format_polynomial(parse_polynomial("-x + 1", qq), qq), "-x + 1");
  EXPECT_EQ(format_polynomial(parse_polynomial("y - 1/2*x", qq), qq), "-1/2*x + y");
  EXPECT_EQ(format_polynomial(parse_polynomial("-3/4", qq), qq), "-3/4");
  PolyRing gf = make_ring(Ring::prime_field(5));
  EXPECT_EQ(format_polynomial(parse_polynomial("-x", gf), gf), "4*x");
}

TEST(FormatPolynomial, RoundTripsRandomPolynomials) {
  RandomPolys gen(77);
  for (const RingCase& rc : corpus_rings()) {
    PolyRing r = make_ring(rc.ring, {"x", "y", "z2"}, OrderKind::deglex);
    for (int trial = 0; trial < 200; ++trial) {
      Polynomial p = gen.poly(r, 4, -30, 30, 6);
      if (rc.ring.kind() == RingKind::rationals) p = r.scale(Coeff(1, gen.integer(1, 9)), p);
      std::string text = format_polynomial(p, r);
      EXPECT_EQ(parse_polynomial(text, r), p) << text;
      EXPECT_EQ(format_polynomial(parse_polynomial(text, r), r), text);
    }
  }
}
