#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>

#include "qsg/qcoeff.hpp"

namespace qsg {

// Polynomial in (q, a, b) with rational coefficients, where a and b stand
// for the spectral variables lambda^{-1} and mu^{-1}. Exponents are >= 0.
class MPoly {
 public:
  static constexpr int kVars = 3;
  using Exp = std::array<int, kVars>;

  MPoly() = default;
  MPoly(long c);  // NOLINT
  MPoly(const mpq_class& c);  // NOLINT
  static MPoly monomial(const Exp& e, const mpq_class& c = 1);
  static MPoly var(int v, int power = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const std::map<Exp, mpq_class>& terms() const { return terms_; }
  // Lex-leading term (q, then a, then b).
  const std::pair<const Exp, mpq_class>& lead() const { return *terms_.rbegin(); }
  int degree(int v) const;
  bool depends_on(int v) const { return degree(v) > 0; }
  MPoly coeff_in(int v, int k) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly x, const MPoly& y) { return x += y; }
  friend MPoly operator-(MPoly x, const MPoly& y) { return x -= y; }
  friend MPoly operator*(const MPoly& x, const MPoly& y);
  friend bool operator==(const MPoly& x, const MPoly& y) { return x.terms_ == y.terms_; }

  std::string to_string() const;

 private:
  std::map<Exp, mpq_class> terms_;
};

// Throws NotDivisible if y does not divide x.
MPoly exact_divide(const MPoly& x, const MPoly& y);
MPoly gcd(const MPoly& x, const MPoly& y);

class QFraction {
 public:
  enum Var { Q = 0, A = 1, B = 2 };

  QFraction() : num_(0), den_(1) {}
  QFraction(long c) : num_(c), den_(1) {}  // NOLINT
  QFraction(const MPoly& num, const MPoly& den);
  // q^e a^i b^j with exponents of any sign.
  static QFraction monomial(int e_q, int e_a, int e_b, const mpq_class& c = 1);
  static QFraction from_laurent(const QLaurent& x);  // s-exponents must be multiples of 4

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  QFraction reduced() const { return QFraction(num_, den_); }
  QFraction inverse() const;
  QFraction operator-() const;
  friend QFraction operator+(const QFraction& x, const QFraction& y);
  friend QFraction operator-(const QFraction& x, const QFraction& y);
  friend QFraction operator*(const QFraction& x, const QFraction& y);
  friend QFraction operator/(const QFraction& x, const QFraction& y) { return x * y.inverse(); }
  QFraction& operator+=(const QFraction& y) { return *this = *this + y; }
  QFraction& operator*=(const QFraction& y) { return *this = *this * y; }
  friend bool operator==(const QFraction& x, const QFraction& y) { return x.num_ == y.num_ && x.den_ == y.den_; }
  bool equals_cross(const QFraction& y) const { return num_ * y.den_ == y.num_ * den_; }

  // Coefficients of a^i b^j as Laurent polynomials in s; requires the
  // denominator to be a monomial in q alone.
  std::map<std::pair<int, int>, QLaurent> as_ab_polynomial() const;

  std::string to_string() const;

  // Unreduced construction for tests of the reduction itself.
  static QFraction raw(const MPoly& num, const MPoly& den);

 private:
  struct Raw {};
  QFraction(const MPoly& num, const MPoly& den, Raw) : num_(num), den_(den) {}
  MPoly num_;
  MPoly den_;
};

}  // namespace qsg
