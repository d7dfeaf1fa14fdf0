#include <gtest/gtest.h>

#include <random>

#include "qsg/errors.hpp"
#include "qsg/lattice.hpp"
#include "random_elements.hpp"

using namespace qsg;

namespace {

QLaurent q(int e) { return QLaurent::q_power(e); }
AqElement x(int i, int p = 1) { return AqElement::x(i, p); }
AqElement y(int i, int p = 1) { return AqElement::y(i, p); }

}  // namespace

TEST(Lattice, ExchangeRelations) {
  for (int k = -1; k <= 1; ++k)
    for (int l = k; l <= 2; ++l) {
      EXPECT_EQ(x(k) * y(l), q(-1) * (y(l) * x(k)));
      if (k == l) continue;
      EXPECT_EQ(x(k) * x(l), q(1) * (x(l) * x(k)));
      EXPECT_EQ(y(k) * y(l), q(1) * (y(l) * y(k)));
      EXPECT_EQ(y(k) * x(l), q(-1) * (x(l) * y(k)));
    }
}

TEST(Lattice, NormalOrderText) {
  AqElement a = y(1) * x(0);
  EXPECT_EQ(a.to_string(), "x0^1 y1^1: 1*s^4");
  EXPECT_EQ(AqElement::parse(a.to_string()), a);
  EXPECT_EQ(AqElement().to_string(), "0");
  EXPECT_EQ(AqElement(QLaurent(3)).to_string(), "1: 3*s^0");
  EXPECT_THROW(AqElement::parse("x0^1 z1^1: 1*s^0"), ParseError);
}

TEST(Lattice, AssociativityOnRandomTriples) {
  std::mt19937 rng(2024);
  for (int i = 0; i < 200; ++i) {
    AqElement a = gen::random_element(rng), b = gen::random_element(rng), c = gen::random_element(rng);
    ASSERT_EQ((a * b) * c, a * (b * c)) << a.to_string() << "\n" << b.to_string() << "\n" << c.to_string();
  }
}

TEST(Lattice, Distributivity) {
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    AqElement a = gen::random_element(rng), b = gen::random_element(rng), c = gen::random_element(rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(Lattice, Inverses) {
  std::mt19937 rng(9);
  for (int i = 0; i < 50; ++i) {
    LatticeMonomial m = gen::random_monomial(rng);
    AqElement a(m, q(2));
    EXPECT_EQ(a * unit_inverse(a), AqElement(1));
    EXPECT_EQ(unit_inverse(a) * a, AqElement(1));
    EXPECT_EQ(power(a, -2) * power(a, 2), AqElement(1));
  }
  EXPECT_THROW(unit_inverse(x(0) + y(0)), NotInvertibleLeadingTerm);
}

TEST(Lattice, HalfTranslationIsAutomorphism) {
  std::mt19937 rng(17);
  EXPECT_EQ(half_translate(x(0)), y(0));
  EXPECT_EQ(half_translate(y(0)), x(1));
  for (int i = 0; i < 60; ++i) {
    AqElement a = gen::random_element(rng), b = gen::random_element(rng);
    EXPECT_EQ(half_translate(a * b), half_translate(a) * half_translate(b));
    EXPECT_EQ(half_translate(half_translate(a)), translate(a, 1));
    EXPECT_EQ(translate(translate(a, 2), -2), a);
  }
}

TEST(Lattice, PhiIsInvolutiveAntiAutomorphism) {
  std::mt19937 rng(19);
  EXPECT_EQ(phi_involution(x(0)), y(1));
  EXPECT_EQ(phi_involution(y(3)), x(-2));
  for (int i = 0; i < 60; ++i) {
    AqElement a = gen::random_element(rng), b = gen::random_element(rng);
    EXPECT_EQ(phi_involution(a * b), phi_involution(b) * phi_involution(a));
    EXPECT_EQ(phi_involution(phi_involution(a)), a);
    // phi T^{1/2} = T^{-1/2} phi
    EXPECT_EQ(phi_involution(half_translate(a)), translate(half_translate(phi_involution(a)), -1));
  }
}

TEST(Lattice, Degrees) {
  EXPECT_EQ(degree(x(0) * y(1, -2)), (Grade{false, 3}));
  EXPECT_EQ(principal_degree(x(0) * y(1, -2)), (Grade{false, -1}));
  EXPECT_TRUE(degree(x(0) + y(0, 2)).mixed);
  for (int k = -3; k <= 4; ++k) {
    EXPECT_EQ(degree(e_gen(k)), (Grade{false, 0}));
    EXPECT_EQ(principal_degree(e_gen(k)), (Grade{false, -2}));
  }
}

TEST(Lattice, GeneratorExchange) {
  for (int i = -2; i <= 3; ++i) {
    EXPECT_EQ(e_gen(i) * e_gen(i + 1), q(-1) * (e_gen(i + 1) * e_gen(i)));
    EXPECT_EQ(e_gen(i) * e_gen(i + 2), e_gen(i + 2) * e_gen(i));
  }
  EXPECT_EQ(e_gen(1), unit_inverse(x(1) * y(1)));
  EXPECT_EQ(e_gen(2), unit_inverse(y(1) * x(2)));
}

TEST(Lattice, SerreRelations) {
  for (int n = 1; n <= 4; ++n) {
    AqElement a = screening_window(Sign::Plus, n), b = screening_window(Sign::Minus, n);
    EXPECT_TRUE(serre_check(a, b)) << n;
    EXPECT_TRUE(serre_check(b, a)) << n;
  }
  // x_0 and x_0 commute, so the Serre combination does not vanish for a = b = x_0 + y_0 trivially
  EXPECT_FALSE(serre_check(x(0) + y(0), x(0)));
}

TEST(Lattice, ClassicalLimit) {
  AqElement c = commutator(x(0), y(0));
  EXPECT_TRUE(specialize_q1(c).is_zero());
  EXPECT_FALSE(c.is_zero());
}
