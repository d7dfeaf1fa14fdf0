#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsg/qcoeff.hpp"

namespace qsg {

struct Block {
  int site;
  int x;
  int y;
  auto operator<=>(const Block&) const = default;
};

// prod_i x_i^{a_i} y_i^{b_i}, sites ascending, x before y.
class LatticeMonomial {
 public:
  LatticeMonomial() = default;
  explicit LatticeMonomial(std::vector<Block> blocks);
  static LatticeMonomial x(int site, int power = 1);
  static LatticeMonomial y(int site, int power = 1);

  const std::vector<Block>& blocks() const { return blocks_; }
  bool is_one() const { return blocks_.empty(); }
  int min_site() const { return blocks_.front().site; }
  int max_site() const { return blocks_.back().site; }
  int degree() const;
  int principal_degree() const;

  LatticeMonomial translated(int k) const;
  LatticeMonomial negated() const;
  // Exponent-wise sum; the q-power relating it to the product is exchange_exponent.
  friend LatticeMonomial operator+(const LatticeMonomial& a, const LatticeMonomial& b);

  std::string to_string() const;
  static LatticeMonomial parse(std::string_view text);

  auto operator<=>(const LatticeMonomial&) const = default;

 private:
  std::vector<Block> blocks_;
};

// a * b = q^{exchange_exponent(a, b)} (a + b).
int exchange_exponent(const LatticeMonomial& a, const LatticeMonomial& b);

struct Grade {
  bool mixed = false;
  int value = 0;
  bool operator==(const Grade&) const = default;
};

class AqElement {
 public:
  using Terms = std::map<LatticeMonomial, QLaurent>;

  AqElement() = default;
  AqElement(long c);  // NOLINT
  AqElement(const QLaurent& c);  // NOLINT
  AqElement(const LatticeMonomial& m, const QLaurent& c = QLaurent(1));
  static AqElement x(int site, int power = 1) { return AqElement(LatticeMonomial::x(site, power)); }
  static AqElement y(int site, int power = 1) { return AqElement(LatticeMonomial::y(site, power)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  QLaurent coeff(const LatticeMonomial& m) const;
  // Single term with a single-term coefficient.
  bool is_unit_monomial() const;
  std::optional<int> min_site() const;
  std::optional<int> max_site() const;

  AqElement operator-() const;
  AqElement& operator+=(const AqElement& o);
  AqElement& operator-=(const AqElement& o);
  void add_term(const LatticeMonomial& m, const QLaurent& c);
  // this += c * a * b
  void add_product(const AqElement& a, const AqElement& b, const QLaurent& c = QLaurent(1));
  friend AqElement operator+(AqElement a, const AqElement& b) { return a += b; }
  friend AqElement operator-(AqElement a, const AqElement& b) { return a -= b; }
  friend AqElement operator*(const AqElement& a, const AqElement& b);
  friend AqElement operator*(const QLaurent& c, const AqElement& a);
  AqElement& operator*=(const AqElement& o) { return *this = *this * o; }
  friend bool operator==(const AqElement& a, const AqElement& b) { return a.terms_ == b.terms_; }

  AqElement transform_coefficients(const std::function<QLaurent(const QLaurent&)>& f) const;

  std::string to_string() const;
  static AqElement parse(std::string_view text);

 private:
  Terms terms_;
};

AqElement multiply(const AqElement& a, const AqElement& b);
AqElement power(const AqElement& a, int k);
AqElement commutator(const AqElement& a, const AqElement& b);
Grade degree(const AqElement& a);
Grade principal_degree(const AqElement& a);

AqElement monomial_inverse(const LatticeMonomial& m);
// Inverse of c*m with c a single-term coefficient; throws NotInvertibleLeadingTerm otherwise.
AqElement unit_inverse(const AqElement& a);

AqElement translate(const AqElement& a, int k);  // T^k
AqElement half_translate(const AqElement& a);    // T^{1/2}
AqElement phi_involution(const AqElement& a);

// e_{2i-1} = (x_i y_i)^{-1}, e_{2i} = (y_i x_{i+1})^{-1}.
AqElement e_gen(int k);

enum class Sign { Plus, Minus };
AqElement screening_window(Sign sign, int n);
bool serre_check(const AqElement& a, const AqElement& b);

AqElement specialize_q1(const AqElement& a);

}  // namespace qsg
