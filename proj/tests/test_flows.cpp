#include <gtest/gtest.h>

#include <random>

#include "qsg/errors.hpp"
#include "qsg/flows.hpp"
#include "qsg/functionals.hpp"
#include "qsg/imot.hpp"
#include "qsg/qhomspace.hpp"

using namespace qsg;

namespace {

QLaurent q(int e) { return QLaurent::q_power(e); }

}  // namespace

TEST(Flows, LeadingTerms) {
  NcSeries v = v_series(4), w = w_series(4);
  EXPECT_TRUE(v.coeff(0).is_zero());
  EXPECT_EQ(v.coeff(1), -unit_inverse(AqElement::x(1)));
  EXPECT_TRUE(w.coeff(0).is_zero());
  EXPECT_EQ(w.coeff(1), -unit_inverse(AqElement::y(0)));
}

TEST(Flows, VInvertsItsDefiningSum) {
  // (u(mu) + mu m(mu)^{-1}) (-v(mu)) = 1, written as (mu^{-1} u m + 1) m^{-1} (-v) mu = 1
  const int k = 4;
  NcSeries u = u_series(k), m = m_series(k), v = v_series(k);
  NcSeries s = (u.shifted(1) + invert(m, k)) * (-v);
  EXPECT_TRUE(s.agrees_with(NcSeries::term(AqElement(1), 1), k));
}

TEST(Flows, DiagonalRemainderVanishes) {
  EXPECT_NO_THROW(flow_u_biseries(6));
  EXPECT_NO_THROW(flow_m_biseries(6));
}

TEST(Flows, SignConventionAtSmallestIndex) {
  // H_1(u_1) = q y_0^{-2} x_1^{-1} - q x_0^{-1} y_0^{-2}
  AqElement expected = q(1) * (AqElement::y(0, -2) * AqElement::x(1, -1)) -
                       q(1) * (AqElement::x(0, -1) * AqElement::y(0, -2));
  AqElement h = extract_flow(1, {FlowGen::U, 1});
  EXPECT_EQ(h, expected);
  EXPECT_EQ(h, ad_action(integral(1), unit_inverse(AqElement::y(0))));
  // phi reverses products, so it negates commutators
  EXPECT_EQ(extract_flow(1, {FlowGen::M, 1}), -phi_involution(h));
}

TEST(Flows, TruncationStability) {
  for (int k = 1; k <= 2; ++k)
    for (int j = 1; j <= 2; ++j) {
      EXPECT_EQ(extract_flow(flow_u_biseries(k + j), k, j), extract_flow(flow_u_biseries(k + j + 2), k, j));
      EXPECT_EQ(extract_flow(flow_m_biseries(k + j), k, j), extract_flow(flow_m_biseries(k + j + 2), k, j));
    }
  EXPECT_THROW(extract_flow(flow_u_biseries(4).truncated(3), 3, 2), OutOfTruncation);
}

TEST(Flows, PreserveDegree) {
  for (int k = 1; k <= 3; ++k)
    for (int j = 1; j <= 3; ++j) {
      EXPECT_EQ(degree(extract_flow(k, {FlowGen::U, j})), (Grade{false, 1}));
      EXPECT_EQ(degree(extract_flow(k, {FlowGen::M, j})), (Grade{false, -1}));
    }
}

TEST(Flows, FirstFlowIntertwines) { EXPECT_TRUE(check_intertwine(1, 4)); }

TEST(Flows, IntertwineUpToQNumber) {
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(check_intertwine(n, 4, FlowScale::QNumber)) << n;
}

TEST(Flows, Commute) {
  std::vector<GenRef> s;
  for (int j = 1; j <= 3; ++j) {
    s.push_back({FlowGen::U, j});
    s.push_back({FlowGen::M, j});
  }
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) EXPECT_TRUE(check_flow_commute(m, n, s)) << m << ' ' << n;
}

TEST(Flows, Imvl) {
  EXPECT_TRUE(check_imvl(2));
  EXPECT_TRUE(check_imvl(4, FlowScale::QNumber));
}

TEST(Flows, LeibnizTransport) {
  std::mt19937 rng(67);
  std::uniform_int_distribution<int> idx(1, 3), kind(0, 1), flow(1, 2);
  for (int t = 0; t < 20; ++t) {
    GenRef a{kind(rng) ? FlowGen::U : FlowGen::M, idx(rng)};
    GenRef b{kind(rng) ? FlowGen::U : FlowGen::M, idx(rng)};
    int n = flow(rng);
    QLaurent c = q_int(n);
    AqElement lhs = ad_action(integral(n), gen_image(a) * gen_image(b));
    AqElement rhs = c * (extract_flow(n, a) * gen_image(b) + gen_image(a) * extract_flow(n, b));
    EXPECT_EQ(lhs, rhs) << t;
  }
}

TEST(Flows, BadIndices) {
  EXPECT_THROW(extract_flow(0, {FlowGen::U, 1}), ConfigError);
  EXPECT_THROW(v_series(0), ConfigError);
}
