#include <gtest/gtest.h>

#include "qsg/errors.hpp"
#include "qsg/laxrtt.hpp"

using namespace qsg;

TEST(Lax, Recursions) {
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(check_recursions(n)) << n;
}

TEST(Lax, SingleSiteMatrix) {
  LaxMatrix l = l_matrix(1);
  EXPECT_EQ(l.a, (LambdaPoly{{0, AqElement(1)}}));
  EXPECT_EQ(l.b, (LambdaPoly{{0, AqElement::y(1)}}));
  EXPECT_EQ(l.c, (LambdaPoly{{1, AqElement::x(1)}}));
  EXPECT_EQ(l.d, (LambdaPoly{{0, AqElement(1)}, {1, AqElement::x(1) * AqElement::y(1)}}));
}

TEST(Lax, AlphaThreeWays) {
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(check_ima(n, 5)) << n;
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(check_alpha_translation(n)) << n;
}

TEST(Lax, AlphaLeadingTerm) {
  // alpha(lambda) = y_n^{-1} + O(lambda^{-1})
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(alpha_series(n, 2).coeff(0), unit_inverse(AqElement::y(n))) << n;
}

TEST(Lax, RttWithTwist) {
  for (int n = 0; n <= 2; ++n) EXPECT_TRUE(check_rtt(n)) << n;
  EXPECT_FALSE(check_rtt(1, 1));
}

TEST(Lax, TagRelations) {
  for (int n = 1; n <= 3; ++n) {
    TagResult r = tag_parts(n);
    EXPECT_TRUE(r.taga) << n;
    EXPECT_TRUE(r.tagb) << n;
    EXPECT_TRUE(r.tagc_divided) << n;
  }
}

TEST(Lax, QuantumDeterminant) {
  for (int n = 1; n <= 2; ++n) EXPECT_TRUE(check_qdet(n, 5)) << n;
}
