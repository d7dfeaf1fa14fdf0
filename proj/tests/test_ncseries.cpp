#include <gtest/gtest.h>

#include <random>

#include "qsg/errors.hpp"
#include "qsg/ncseries.hpp"
#include "random_elements.hpp"

using namespace qsg;

namespace {

QLaurent q(int e) { return QLaurent::q_power(e); }

NcSeries random_series(std::mt19937& rng, int order) {
  NcSeries f = NcSeries::constant(AqElement(LatticeMonomial::x(0, -1)), order);
  for (int p = 1; p <= order; ++p) f.add_to(p, gen::random_element(rng, 2));
  return f;
}

}  // namespace

TEST(NcSeries, InverseIsTwoSided) {
  std::mt19937 rng(53);
  for (int i = 0; i < 10; ++i) {
    NcSeries f = random_series(rng, 4);
    NcSeries g = f.inverse(4);
    NcSeries one = NcSeries::constant(AqElement(1));
    EXPECT_TRUE((f * g).agrees_with(one, 4));
    EXPECT_TRUE((g * f).agrees_with(one, 4));
  }
  EXPECT_THROW(NcSeries::constant(AqElement::x(0) + AqElement::y(0)).inverse(3), NotInvertibleLeadingTerm);
}

TEST(NcSeries, PrecisionTracking) {
  NcSeries f = NcSeries::term(AqElement(1), 0, 3);
  NcSeries g = NcSeries::term(AqElement::x(0), 2, 5);
  EXPECT_EQ((f * g).order(), 5);
  EXPECT_EQ(f.shifted(2).order(), 5);
  EXPECT_THROW(f.coeff(4), OutOfTruncation);
  EXPECT_TRUE(NcSeries::constant(AqElement(1)).is_exact());
}

TEST(NcSeries, AssociativeProduct) {
  std::mt19937 rng(59);
  for (int i = 0; i < 10; ++i) {
    NcSeries a = random_series(rng, 3), b = random_series(rng, 3), c = random_series(rng, 3);
    EXPECT_TRUE(((a * b) * c).agrees_with(a * (b * c), 3));
  }
}

TEST(LnQ, GeometricOracle) {
  // f = (1 - t lambda^{-1})^{-1} gives ln_q f = sum t^p / [p] lambda^{-p}
  AqElement t = AqElement::x(0) * AqElement::y(1);
  NcSeries g = NcSeries::constant(AqElement(1), 6);
  g.add_to(1, -t);
  LnQSeries l = ln_q(g.inverse(6), 5);
  for (int p = 1; p <= 5; ++p) EXPECT_TRUE(l.cleared_equals(p, power(t, p))) << p;
}

TEST(ContinuedFraction, SingleLevel) {
  // top / (1 + L lambda^{-1}) = top (1 - L lambda^{-1} + L^2 lambda^{-2} ...)
  AqElement top = AqElement::y(0, -1), lv = e_gen(1);
  NcSeries r = continued_fraction(top, {lv}, 1, FractionSide::Right, 3);
  for (int p = 0; p <= 3; ++p) {
    AqElement expected = top * power(lv, p);
    EXPECT_EQ(r.coeff(p), p % 2 == 0 ? expected : -expected);
  }
  NcSeries l = continued_fraction(top, {lv}, 1, FractionSide::Left, 3);
  EXPECT_EQ(l.coeff(1), -(lv * top));
}

TEST(Basi, GeneratingFunction) {
  EXPECT_TRUE(check_basi(4, 4, 4));
  BasiResult r = basi_compare(5, 5, 5);
  EXPECT_TRUE(r.pass) << r.first_bad_p;
}

TEST(Basi, UAndVStartWithOne) {
  NcSeries u = cont_frac_U(3, 3);
  EXPECT_EQ(u.coeff(0), AqElement(1));
  EXPECT_EQ(u.coeff(1), e_gen(1));
  EXPECT_EQ(cont_frac_V(3, 3).coeff(1), e_gen(2));
}

TEST(Aba, ChainExpansion) {
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(check_aba(n, 4)) << n;
  for (int m = 1; m <= 4; ++m) EXPECT_TRUE(check_q_binomial_product(m, 5)) << m;
}

TEST(ChainElement, Relation) {
  ChainElement t1 = ChainElement::gen(2, 4, 1), t2 = ChainElement::gen(2, 4, 2);
  ChainElement lhs = t1 * t2;
  ChainElement swapped = t2 * t1;
  ChainElement rhs(2, 4);
  for (const auto& [e, c] : swapped.terms()) rhs.add(e, q(1) * c);
  EXPECT_EQ(lhs, rhs);
}

TEST(NcBiSeries, DivisionByDifference) {
  std::mt19937 rng(61);
  NcBiSeries g(4);
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j) g.add_to({i, j}, gen::random_element(rng, 1));
  NcBiSeries diff = NcBiSeries::scalar_polynomial({{{1, 0}, QLaurent(1)}, {{0, 1}, QLaurent(-1)}});
  NcBiSeries f = diff * g;
  EXPECT_EQ(f.order(), 5);
  NcBiSeries back = divide_by_lambda_minus_mu(f);
  EXPECT_TRUE(back.agrees_with(g, 4));
  NcBiSeries bad = f + NcBiSeries::constant(AqElement::x(0), 5);
  EXPECT_THROW(divide_by_lambda_minus_mu(bad), NonzeroDiagonalRemainder);
  NcBiSeries bad2 = f;
  bad2.add_to({2, 0}, AqElement(1));
  EXPECT_THROW(divide_by_lambda_minus_mu(bad2), NonzeroDiagonalRemainder);
}

TEST(NcBiSeries, TotalDegreeTruncation) {
  NcBiSeries a = NcBiSeries::in_lambda(NcSeries::term(AqElement(1), 1, 3));
  EXPECT_EQ(a.order(), 3);
  EXPECT_THROW(a.coeff(2, 2), OutOfTruncation);
  EXPECT_TRUE(a.truncated(0).is_zero_through(0));
}
