#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "qsg/lattice.hpp"

namespace qsg {

// Series in lambda^{-1} with A_q coefficients. Coefficients of powers up to
// order() are exact; kExact marks a finite (polynomial) value.
class NcSeries {
 public:
  static constexpr int kExact = 1 << 28;

  explicit NcSeries(int order = kExact) : order_(order) {}
  static NcSeries constant(const AqElement& c, int order = kExact);
  // c * lambda^{-p}
  static NcSeries term(const AqElement& c, int p, int order = kExact);

  int order() const { return order_; }
  bool is_exact() const { return order_ >= kExact; }
  const std::map<int, AqElement>& coeffs() const { return c_; }
  AqElement coeff(int p) const;
  std::optional<int> valuation() const;
  void add_to(int p, const AqElement& x);

  NcSeries truncated(int k) const;
  NcSeries shifted(int k) const;  // times lambda^{-k}
  NcSeries map(const std::function<AqElement(const AqElement&)>& f) const;
  NcSeries operator-() const;
  NcSeries& operator+=(const NcSeries& o);
  NcSeries& operator-=(const NcSeries& o);
  friend NcSeries operator+(NcSeries a, const NcSeries& b) { return a += b; }
  friend NcSeries operator-(NcSeries a, const NcSeries& b) { return a -= b; }
  friend NcSeries operator*(const NcSeries& a, const NcSeries& b);
  friend NcSeries operator*(const QLaurent& c, const NcSeries& a);
  // Equality of the coefficients up to min(order, bound).
  bool agrees_with(const NcSeries& o, int bound) const;

  // Two-sided inverse, exact through power min(target, order - 2 v).
  NcSeries inverse(int target) const;

 private:
  std::map<int, AqElement> c_;
  int order_;
};

NcSeries invert(const NcSeries& f, int target);

enum class FractionSide { Right, Left };  // a/b = a b^{-1}  or  b^{-1} a

// top / (1 + s L_1 lambda^{-1} / (1 + s L_2 lambda^{-1} / ( ... / (1 + s L_m lambda^{-1}))))
NcSeries continued_fraction(const AqElement& top, const std::vector<AqElement>& levels, int sign, FractionSide side,
                            int order);

// Coefficients of ln_q f = sum_p (1/[p]) (1 - f^{-1})^p, stored multiplied by [p]!.
struct LnQSeries {
  int order = 0;
  std::map<int, AqElement> scaled;
  // [p] * coefficient of lambda^{-p} == target
  bool cleared_equals(int p, const AqElement& target) const;
  AqElement scaled_coeff(int p) const;
  friend LnQSeries operator+(const LnQSeries& a, const LnQSeries& b);
};

LnQSeries ln_q(const NcSeries& f, int p_max);

NcSeries cont_frac_U(int chain, int order);
NcSeries cont_frac_V(int chain, int order);

struct BasiResult {
  bool pass = true;
  int first_bad_p = 0;
  AqElement expected;
  AqElement got;
};
BasiResult basi_compare(int p_max, int chain, int order);
// Throws StabilizationFailure if N and N+1 disagree.
bool check_basi(int p_max, int chain, int order);

// Exponent vector (a_1..a_N) of t_N^{a_N} ... t_1^{a_1}; t_i t_{i+1} = q t_{i+1} t_i.
class ChainElement {
 public:
  using Exps = std::vector<int>;
  ChainElement(int n, int degree_bound) : n_(n), bound_(degree_bound) {}
  static ChainElement one(int n, int bound);
  static ChainElement gen(int n, int bound, int i);
  const std::map<Exps, QLaurent>& terms() const { return t_; }
  void add(const Exps& e, const QLaurent& c);
  ChainElement operator-(const ChainElement& o) const;
  ChainElement operator*(const ChainElement& o) const;
  // (1 - x)^{-1} for x without constant term.
  ChainElement geometric() const;
  bool operator==(const ChainElement& o) const { return t_ == o.t_; }

 private:
  int n_;
  int bound_;
  std::map<Exps, QLaurent> t_;
};

bool check_aba(int chain, int degree_bound);
// prod_{s<M} (1 - q^s t)^{-1} == sum_k C(M+k-1, k) t^k through t^{k_max}.
bool check_q_binomial_product(int m, int k_max);

// Bivariate series in a = lambda^{-1}, b = mu^{-1} with non-negative powers,
// exact through total degree order().
class NcBiSeries {
 public:
  using Key = std::pair<int, int>;
  static constexpr int kExact = NcSeries::kExact;

  explicit NcBiSeries(int order = kExact) : order_(order) {}
  static NcBiSeries in_lambda(const NcSeries& f);
  static NcBiSeries in_mu(const NcSeries& f);
  static NcBiSeries constant(const AqElement& c, int order = kExact);
  // sum c_{ij} a^i b^j with scalar coefficients
  static NcBiSeries scalar_polynomial(const std::map<Key, QLaurent>& p);

  int order() const { return order_; }
  const std::map<Key, AqElement>& coeffs() const { return c_; }
  AqElement coeff(int i, int j) const;
  void add_to(Key k, const AqElement& x);
  int valuation() const;

  NcBiSeries truncated(int d) const;
  NcBiSeries map(const std::function<AqElement(const AqElement&)>& f) const;
  NcBiSeries operator-() const;
  NcBiSeries& operator+=(const NcBiSeries& o);
  NcBiSeries& operator-=(const NcBiSeries& o);
  friend NcBiSeries operator+(NcBiSeries a, const NcBiSeries& b) { return a += b; }
  friend NcBiSeries operator-(NcBiSeries a, const NcBiSeries& b) { return a -= b; }
  friend NcBiSeries operator*(const NcBiSeries& a, const NcBiSeries& b);
  friend NcBiSeries operator*(const QLaurent& c, const NcBiSeries& a);
  // Nonzero coefficients of total degree <= bound (and <= order).
  bool is_zero_through(int bound) const;
  bool agrees_with(const NcBiSeries& o, int bound) const;

 private:
  std::map<Key, AqElement> c_;
  int order_;
};

// Throws NonzeroDiagonalRemainder when f does not vanish on lambda = mu.
NcBiSeries divide_by_lambda_minus_mu(const NcBiSeries& f);

}  // namespace qsg
