#include "qsg/qfraction.hpp"

#include <algorithm>

#include "qsg/errors.hpp"

namespace qsg {

namespace {

MPoly::Exp zero_exp() { return {0, 0, 0}; }

MPoly scale(const MPoly& x, const mpq_class& c) { return x * MPoly(c); }

MPoly monic(const MPoly& x) {
  if (x.is_zero()) return x;
  return scale(x, 1 / x.lead().second);
}

MPoly gcd_rec(const MPoly& x, const MPoly& y, int v);

MPoly content(const MPoly& x, int v) {
  if (x.is_zero()) return MPoly();
  if (v + 1 >= MPoly::kVars) return MPoly(1);
  MPoly g;
  for (int k = 0; k <= x.degree(v); ++k) {
    MPoly c = x.coeff_in(v, k);
    if (c.is_zero()) continue;
    g = g.is_zero() ? monic(c) : gcd_rec(g, c, v + 1);
    if (g.is_constant()) return MPoly(1);
  }
  return g;
}

MPoly primitive(const MPoly& x, int v) {
  if (x.is_zero()) return x;
  return monic(exact_divide(x, content(x, v)));
}

MPoly pseudo_remainder(const MPoly& x, const MPoly& y, int v) {
  const int dy = y.degree(v);
  const MPoly lc = y.coeff_in(v, dy);
  MPoly r = x;
  while (!r.is_zero() && r.degree(v) >= dy) {
    int k = r.degree(v);
    MPoly lr = r.coeff_in(v, k);
    r = lc * r - lr * MPoly::var(v, k - dy) * y;
  }
  return r;
}

MPoly gcd_rec(const MPoly& x, const MPoly& y, int v) {
  if (x.is_zero()) return monic(y);
  if (y.is_zero()) return monic(x);
  if (v >= MPoly::kVars) return MPoly(1);
  if (!x.depends_on(v) && !y.depends_on(v)) return gcd_rec(x, y, v + 1);
  MPoly cx = content(x, v);
  MPoly cy = content(y, v);
  MPoly c = v + 1 >= MPoly::kVars ? MPoly(1) : gcd_rec(cx, cy, v + 1);
  MPoly a = monic(exact_divide(x, cx));
  MPoly b = monic(exact_divide(y, cy));
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  while (!b.is_zero()) {
    MPoly r = pseudo_remainder(a, b, v);
    a = std::move(b);
    b = primitive(r, v);
  }
  return monic(c * primitive(a, v));
}

}  // namespace

MPoly::MPoly(long c) {
  if (c != 0) terms_[zero_exp()] = c;
}

MPoly::MPoly(const mpq_class& c) {
  if (c != 0) terms_[zero_exp()] = c;
}

MPoly MPoly::monomial(const Exp& e, const mpq_class& c) {
  MPoly r;
  if (c != 0) r.terms_[e] = c;
  return r;
}

MPoly MPoly::var(int v, int power) {
  Exp e = zero_exp();
  e[v] = power;
  return monomial(e);
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == zero_exp());
}

int MPoly::degree(int v) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first[v]);
  return d;
}

MPoly MPoly::coeff_in(int v, int k) const {
  MPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[v] != k) continue;
    Exp f = e;
    f[v] = 0;
    r.terms_[f] = c;
  }
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto& slot = terms_[e];
    slot -= c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

MPoly operator*(const MPoly& x, const MPoly& y) {
  MPoly r;
  for (const auto& [ex, cx] : x.terms_)
    for (const auto& [ey, cy] : y.terms_) {
      MPoly::Exp e;
      for (int v = 0; v < MPoly::kVars; ++v) e[v] = ex[v] + ey[v];
      r.terms_[e] += cx * cy;
    }
  std::erase_if(r.terms_, [](const auto& t) { return t.second == 0; });
  return r;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  static const char* names[] = {"q", "a", "b"};
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += it->second.get_str();
    for (int v = 0; v < kVars; ++v)
      if (it->first[v] != 0) out += std::string("*") + names[v] + "^" + std::to_string(it->first[v]);
  }
  return out;
}

MPoly exact_divide(const MPoly& x, const MPoly& y) {
  if (y.is_zero()) throw NotDivisible("division by zero polynomial");
  MPoly quo;
  MPoly rem = x;
  const auto& [ey, cy] = y.lead();
  while (!rem.is_zero()) {
    const auto& [er, cr] = rem.lead();
    MPoly::Exp e;
    for (int v = 0; v < MPoly::kVars; ++v) {
      e[v] = er[v] - ey[v];
      if (e[v] < 0) throw NotDivisible(x.to_string() + " by " + y.to_string());
    }
    MPoly t = MPoly::monomial(e, cr / cy);
    quo += t;
    rem -= t * y;
  }
  return quo;
}

MPoly gcd(const MPoly& x, const MPoly& y) { return gcd_rec(x, y, 0); }

QFraction::QFraction(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw NotDivisible("zero denominator");
  if (num.is_zero()) {
    num_ = MPoly();
    den_ = MPoly(1);
    return;
  }
  MPoly g = gcd(num, den);
  num_ = exact_divide(num, g);
  den_ = exact_divide(den, g);
  mpq_class lc = den_.lead().second;
  num_ = num_ * MPoly(1 / lc);
  den_ = den_ * MPoly(1 / lc);
}

QFraction QFraction::raw(const MPoly& num, const MPoly& den) { return QFraction(num, den, Raw{}); }

QFraction QFraction::monomial(int e_q, int e_a, int e_b, const mpq_class& c) {
  MPoly::Exp up{std::max(e_q, 0), std::max(e_a, 0), std::max(e_b, 0)};
  MPoly::Exp down{std::max(-e_q, 0), std::max(-e_a, 0), std::max(-e_b, 0)};
  return QFraction(MPoly::monomial(up, c), MPoly::monomial(down));
}

QFraction QFraction::from_laurent(const QLaurent& x) {
  if (x.is_zero()) return QFraction();
  int low = x.min_exponent();
  if (low % 4 != 0) throw NotDivisible("s-exponent not a multiple of 4");
  int shift = low < 0 ? -low / 4 : 0;
  MPoly n;
  for (const auto& [e, c] : x.terms()) {
    if (e % 4 != 0) throw NotDivisible("s-exponent not a multiple of 4");
    n += MPoly::monomial({e / 4 + shift, 0, 0}, c);
  }
  return QFraction(n, MPoly::var(Q, shift));
}

QFraction QFraction::inverse() const {
  if (num_.is_zero()) throw NotDivisible("inverse of zero");
  return QFraction(den_, num_);
}

QFraction QFraction::operator-() const { return QFraction(-num_, den_, Raw{}); }

QFraction operator+(const QFraction& x, const QFraction& y) {
  if (x.den_ == y.den_) return QFraction(x.num_ + y.num_, x.den_);
  return QFraction(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

QFraction operator-(const QFraction& x, const QFraction& y) { return x + (-y); }

QFraction operator*(const QFraction& x, const QFraction& y) {
  return QFraction(x.num_ * y.num_, x.den_ * y.den_);
}

std::map<std::pair<int, int>, QLaurent> QFraction::as_ab_polynomial() const {
  if (den_.terms().size() != 1 || den_.lead().first[A] != 0 || den_.lead().first[B] != 0)
    throw NotDivisible("not a polynomial in (a, b): " + to_string());
  const int dq = den_.lead().first[Q];
  const mpq_class dc = den_.lead().second;
  std::map<std::pair<int, int>, QLaurent> out;
  for (const auto& [e, c] : num_.terms())
    out[{e[A], e[B]}] += QLaurent::q_power(e[Q] - dq, c / dc);
  return out;
}

std::string QFraction::to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

}  // namespace qsg
