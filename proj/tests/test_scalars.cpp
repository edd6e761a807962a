#include <gtest/gtest.h>

#include "ndga/scalars.hpp"

using namespace ndga;

TEST(Scalars, ConjugateAndModulus) {
  EXPECT_EQ(conj(gr(1, 2)), gr(1, -2));
  EXPECT_EQ(conj(GR(0)), GR(0));
  GR z = gr(1, 1), w = gr(2, -3);
  EXPECT_EQ(conj(z * w), conj(z) * conj(w));
  EXPECT_EQ(z * w, gr(5, -1));
  EXPECT_EQ(conj(z * w), gr(5, 1));
  EXPECT_EQ(abs2(gr(3, 4)), Rational(25));
  EXPECT_EQ(abs2(GR(0)), Rational(0));
  EXPECT_EQ(abs2(GR(make_rational(1, 2), make_rational(1, 2))), make_rational(1, 2));
}

TEST(Scalars, ParseAndPrint) {
  for (const char* s : {"0", "1", "-1/2", "i", "-i", "2i", "1+2i", "-1/2-3/4i", "3/7+i", "5-i"}) {
    GR z = GR::parse(s);
    EXPECT_EQ(z.to_string(), s);
    EXPECT_EQ(GR::parse(z.to_string()), z);
  }
  EXPECT_EQ(GR::parse("2/4"), gr_q(1, 2));
  EXPECT_EQ(GR::parse(" 1 "), GR(1));
  EXPECT_THROW(GR::parse("1/0"), Error);
  EXPECT_THROW(GR::parse("abc"), Error);
  EXPECT_THROW(GR::parse(""), Error);
  EXPECT_THROW(GR::parse("1 2"), Error);
}

TEST(Scalars, LowestTerms) {
  GR z = gr_q(6, -4);
  EXPECT_EQ(z.re().get_den(), 2);
  EXPECT_EQ(z.re().get_num(), -3);
}

TEST(Scalars, FieldAxiomsOnRandomSamples) {
  ScalarSampler s(11);
  for (int k = 0; k < 1000; ++k) {
    GR x = s.gaussian(), y = s.gaussian(), z = s.gaussian();
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ(conj(x * y), conj(x) * conj(y));
    EXPECT_EQ(abs2(x * y), abs2(x) * abs2(y));
    EXPECT_EQ(GR(abs2(x)), x * conj(x));
    if (!x.is_zero()) EXPECT_EQ(x * x.inverse(), GR(1));
  }
  EXPECT_THROW(GR(0).inverse(), Error);
}

TEST(Scalars, PythagoreanUnits) {
  ScalarSampler s(5);
  for (int k = 0; k < 100; ++k) EXPECT_EQ(abs2(s.unit()), Rational(1));
}

TEST(Scalars, ApproxEquality) {
  EXPECT_TRUE(approx_eq({1.0, 0, 1e-9}, {1.0 + 1e-12, 0, 1e-9}));
  EXPECT_FALSE(approx_eq({1.0, 0, 1e-9}, {1.1, 0, 1e-9}));
  EXPECT_TRUE(approx_eq({0, 0, 1e-9}, {0, 1e-10, 1e-9}));
  ApproxComplex x{0.3, -2.5, 1e-6};
  EXPECT_TRUE(approx_eq(x, x));
}
