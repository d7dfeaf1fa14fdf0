#include "qsg/qcoeff.hpp"

#include <algorithm>
#include <charconv>

#include "qsg/errors.hpp"

namespace qsg {

QLaurent::QLaurent(long c) {
  if (c != 0) terms_.emplace_back(0, mpq_class(c));
}

QLaurent::QLaurent(const mpq_class& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

QLaurent QLaurent::s_power(int e, const mpq_class& c) {
  QLaurent r;
  if (c != 0) r.terms_.emplace_back(e, c);
  return r;
}

mpq_class QLaurent::coeff(int e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, int v) { return t.first < v; });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

QLaurent QLaurent::shifted(int ds) const {
  QLaurent r = *this;
  for (auto& t : r.terms_) t.first += ds;
  return r;
}

QLaurent QLaurent::operator-() const {
  QLaurent r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

void QLaurent::add_shifted(const QLaurent& o, int ds, bool negate) {
  if (o.terms_.empty()) return;
  if (terms_.empty()) {
    terms_ = o.terms_;
    for (auto& t : terms_) {
      t.first += ds;
      if (negate) t.second = -t.second;
    }
    return;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first + ds)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first + ds < i->first) {
      out.emplace_back(j->first + ds, negate ? mpq_class(-j->second) : j->second);
      ++j;
    } else {
      mpq_class c = negate ? mpq_class(i->second - j->second) : mpq_class(i->second + j->second);
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  add_shifted(o, 0, false);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  add_shifted(o, 0, true);
  return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.terms_.size() == 1) {
    r.terms_ = b.terms_;
    for (auto& t : r.terms_) {
      t.first += a.terms_[0].first;
      t.second *= a.terms_[0].second;
    }
    return r;
  }
  if (b.terms_.size() == 1) return b * a;
  int lo = a.min_exponent() + b.min_exponent();
  int hi = a.max_exponent() + b.max_exponent();
  std::vector<mpq_class> dense(hi - lo + 1);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) dense[ea + eb - lo] += ca * cb;
  for (int k = 0; k <= hi - lo; ++k)
    if (dense[k] != 0) r.terms_.emplace_back(lo + k, std::move(dense[k]));
  return r;
}

void QLaurent::add_scaled(const QLaurent& a, const QLaurent& b, int ds) {
  if (a.is_zero() || b.is_zero()) return;
  if (a.terms_.size() == 1 && a.terms_[0].second == 1) {
    add_shifted(b, ds + a.terms_[0].first);
  } else if (a.terms_.size() == 1 && a.terms_[0].second == -1) {
    add_shifted(b, ds + a.terms_[0].first, true);
  } else if (b.terms_.size() == 1 && b.terms_[0].second == 1) {
    add_shifted(a, ds + b.terms_[0].first);
  } else {
    add_shifted(a * b, ds);
  }
}

std::string rational_text(const mpq_class& c) { return c.get_str(); }

std::string QLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += '+';
    out += c.get_str();
    out += "*s^";
    out += std::to_string(e);
  }
  return out;
}

QLaurent QLaurent::parse(std::string_view text) {
  QLaurent r;
  if (text == "0") return r;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t star = text.find("*s^", pos);
    if (star == std::string_view::npos) throw ParseError("missing *s^ in '" + std::string(text) + "'");
    mpq_class c;
    if (c.set_str(std::string(text.substr(pos, star - pos)), 10) != 0)
      throw ParseError("bad rational in '" + std::string(text) + "'");
    c.canonicalize();
    size_t start = star + 3;
    size_t end = start;
    if (end < text.size() && text[end] == '-') ++end;
    while (end < text.size() && text[end] >= '0' && text[end] <= '9') ++end;
    int e = 0;
    auto res = std::from_chars(text.data() + start, text.data() + end, e);
    if (res.ec != std::errc() || start == end) throw ParseError("bad exponent in '" + std::string(text) + "'");
    if (c == 0 || (!r.terms_.empty() && r.terms_.back().first >= e))
      throw ParseError("non-canonical term order in '" + std::string(text) + "'");
    r.terms_.emplace_back(e, c);
    pos = end;
    if (pos < text.size()) {
      if (text[pos] != '+') throw ParseError("expected '+' in '" + std::string(text) + "'");
      ++pos;
    }
  }
  return r;
}

QLaurent q_int(int p) {
  QLaurent r;
  if (p >= 0) {
    for (int k = 0; k < p; ++k) r += QLaurent::q_power(k);
  } else {
    for (int k = p; k < 0; ++k) r -= QLaurent::q_power(k);
  }
  return r;
}

QLaurent q_factorial(int n) {
  QLaurent r(1);
  for (int k = 2; k <= n; ++k) r = r * q_int(k);
  return r;
}

QLaurent q_binomial(int a, int b) {
  if (b == 0) return QLaurent(1);
  if (b < 0 || b > std::max(0, a)) return QLaurent();
  return exact_divide(q_factorial(a), q_factorial(b) * q_factorial(a - b));
}

QLaurent f_q(std::span<const int> a) {
  QLaurent r(1);
  for (size_t i = 0; i < a.size(); ++i) {
    int next = i + 1 < a.size() ? a[i + 1] : 0;
    r = r * q_binomial(a[i] + next - 1, next);
    if (r.is_zero()) break;
  }
  return r;
}

QLaurent exact_divide(const QLaurent& num, const QLaurent& den) {
  if (den.is_zero()) throw NotDivisible("division by zero");
  if (num.is_zero()) return QLaurent();
  QLaurent rem = num;
  QLaurent quo;
  const int dtop = den.max_exponent();
  const int dlow = den.min_exponent();
  const mpq_class dlead = den.terms().back().second;
  while (!rem.is_zero()) {
    int e = rem.max_exponent() - dtop;
    if (rem.min_exponent() - dlow > e) break;
    QLaurent t = QLaurent::s_power(e, rem.terms().back().second / dlead);
    quo += t;
    rem -= t * den;
  }
  if (!rem.is_zero()) throw NotDivisible(num.to_string() + " by " + den.to_string());
  return quo;
}

QLaurent exact_div_q_minus_1(const QLaurent& x) {
  static const QLaurent q_minus_1 = QLaurent::q_power(1) - QLaurent(1);
  return exact_divide(x, q_minus_1);
}

mpq_class specialize_q1(const QLaurent& x) {
  mpq_class r = 0;
  for (const auto& t : x.terms()) r += t.second;
  return r;
}

}  // namespace qsg
