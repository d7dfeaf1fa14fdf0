#pragma once

#include <map>
#include <vector>

#include "qsg/lattice.hpp"
#include "qsg/ncseries.hpp"
#include "qsg/qfraction.hpp"

namespace qsg {

AqElement gen_image_u(int i);
AqElement gen_image_m(int i);
// Same sums built independently from the continued fractions.
AqElement gen_image_u_from_fraction(int i);
AqElement gen_image_m_from_fraction(int i);

// sum_i (-1)^i image(u_{i+1}) lambda^{-i}, exact through lambda^{-order}
NcSeries u_series(int order);
NcSeries m_series(int order);

bool check_relum(int i_max, int q_power = -1);
bool check_relu(int i_max, int order);
bool check_relm(int i_max, int order);
// [u_i,u_j] == (1-q^{-1}) sum_{k=i}^{k_hi} u_k u_{i+j-k}
bool check_uij_range(int i, int j, int k_hi);
inline bool check_uij(int i, int j) { return check_uij_range(i, j, i + j - 1); }

struct Letter {
  char kind;  // 'u' or 'm'
  int index;
  auto operator<=>(const Letter&) const = default;
};

struct PBWMonomial {
  std::map<int, int> u;
  std::map<int, int> m;
  auto operator<=>(const PBWMonomial&) const = default;
  std::vector<Letter> word() const;
  std::string to_string() const;
};

AqElement image_of_word(const std::vector<Letter>& word);
AqElement image_of(const PBWMonomial& p);

struct QhbElement {
  std::map<PBWMonomial, QFraction> abstract;
  AqElement image;
};

// PBW monomials with the given letter counts and index sums.
std::vector<PBWMonomial> pbw_class(int u_count, int m_count, int u_sum, int m_sum);
QhbElement pbw_expand(const std::vector<Letter>& word);
// Rank check of every PBW class with at most max_letters letters and index sum <= max_sum.
bool check_pbw_independence(int max_letters, int max_sum);
bool check_injectivity_witness(int i_max);

// Closed-form coefficients.
QFraction coeff_c(int alpha, int beta);
QFraction coeff_d(int alpha, int beta);
QFraction coeff_c2(int alpha, int beta);
QFraction coeff_d2(int alpha, int beta);
QFraction poly_p2(int alpha, int beta);

// u(mu)^k u(lambda)^l == sum_{alpha+beta=k+l} coef(alpha,beta) u(lambda)^alpha u(mu)^beta
// after clearing denominators, through total degree `order`.
bool check_cab(int n, int order);
bool check_dab(int n, int order);
bool check_cab2(int n, int order);
bool check_dab2(int n, int order);

}  // namespace qsg
