#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qsg {

// Laurent polynomial in s with rational coefficients; q = s^4.
class QLaurent {
 public:
  using Term = std::pair<int, mpq_class>;

  QLaurent() = default;
  QLaurent(long c);  // NOLINT: constants convert implicitly
  QLaurent(const mpq_class& c);  // NOLINT

  static QLaurent s_power(int e, const mpq_class& c = 1);
  static QLaurent q_power(int e, const mpq_class& c = 1) { return s_power(4 * e, c); }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const std::vector<Term>& terms() const { return terms_; }
  int min_exponent() const { return terms_.front().first; }
  int max_exponent() const { return terms_.back().first; }
  mpq_class coeff(int e) const;

  QLaurent shifted(int ds) const;
  QLaurent operator-() const;
  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }
  // this += c * o * s^ds, without temporaries.
  void add_scaled(const QLaurent& a, const QLaurent& b, int ds);
  void add_shifted(const QLaurent& o, int ds, bool negate = false);

  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;
  static QLaurent parse(std::string_view text);

 private:
  std::vector<Term> terms_;
};

QLaurent q_int(int p);
QLaurent q_factorial(int n);
QLaurent q_binomial(int a, int b);
QLaurent f_q(std::span<const int> a);
inline QLaurent f_q(std::initializer_list<int> a) { return f_q(std::span<const int>(a.begin(), a.size())); }

QLaurent exact_div_q_minus_1(const QLaurent& x);
// Long division; throws NotDivisible unless den divides num in Q[s,1/s].
QLaurent exact_divide(const QLaurent& num, const QLaurent& den);
mpq_class specialize_q1(const QLaurent& x);

std::string rational_text(const mpq_class& c);

}  // namespace qsg
