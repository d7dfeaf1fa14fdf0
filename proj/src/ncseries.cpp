#include "qsg/ncseries.hpp"

#include <algorithm>

#include "qsg/errors.hpp"
#include "qsg/imot.hpp"

namespace qsg {

namespace {

int clamp_order(long v) { return v >= NcSeries::kExact ? NcSeries::kExact : static_cast<int>(v); }

}  // namespace

NcSeries NcSeries::constant(const AqElement& c, int order) { return term(c, 0, order); }

NcSeries NcSeries::term(const AqElement& c, int p, int order) {
  NcSeries s(order);
  if (p <= order && !c.is_zero()) s.c_[p] = c;
  return s;
}

AqElement NcSeries::coeff(int p) const {
  if (p > order_) throw OutOfTruncation("power " + std::to_string(p) + " beyond order " + std::to_string(order_));
  auto it = c_.find(p);
  return it == c_.end() ? AqElement() : it->second;
}

std::optional<int> NcSeries::valuation() const {
  if (c_.empty()) return std::nullopt;
  return c_.begin()->first;
}

void NcSeries::add_to(int p, const AqElement& x) {
  if (p > order_ || x.is_zero()) return;
  auto& slot = c_[p];
  slot += x;
  if (slot.is_zero()) c_.erase(p);
}

NcSeries NcSeries::truncated(int k) const {
  NcSeries r(std::min(k, order_));
  for (const auto& [p, x] : c_)
    if (p <= r.order_) r.c_.emplace(p, x);
  return r;
}

NcSeries NcSeries::shifted(int k) const {
  NcSeries r(is_exact() ? kExact : clamp_order(static_cast<long>(order_) + k));
  for (const auto& [p, x] : c_) r.c_.emplace(p + k, x);
  return r;
}

NcSeries NcSeries::map(const std::function<AqElement(const AqElement&)>& f) const {
  NcSeries r(order_);
  for (const auto& [p, x] : c_) r.add_to(p, f(x));
  return r;
}

NcSeries NcSeries::operator-() const {
  NcSeries r(order_);
  for (const auto& [p, x] : c_) r.c_.emplace(p, -x);
  return r;
}

NcSeries& NcSeries::operator+=(const NcSeries& o) {
  order_ = std::min(order_, o.order_);
  std::erase_if(c_, [&](const auto& t) { return t.first > order_; });
  for (const auto& [p, x] : o.c_) add_to(p, x);
  return *this;
}

NcSeries& NcSeries::operator-=(const NcSeries& o) {
  order_ = std::min(order_, o.order_);
  std::erase_if(c_, [&](const auto& t) { return t.first > order_; });
  for (const auto& [p, x] : o.c_) add_to(p, -x);
  return *this;
}

namespace {

// Lowest power that could still be nonzero.
long effective_valuation(const NcSeries& s) {
  if (auto v = s.valuation()) return *v;
  return s.is_exact() ? NcSeries::kExact : static_cast<long>(s.order()) + 1;
}

}  // namespace

NcSeries operator*(const NcSeries& a, const NcSeries& b) {
  long oa = a.is_exact() ? NcSeries::kExact : a.order_ + effective_valuation(b);
  long ob = b.is_exact() ? NcSeries::kExact : b.order_ + effective_valuation(a);
  NcSeries r(clamp_order(std::min(oa, ob)));
  for (const auto& [pa, xa] : a.c_)
    for (const auto& [pb, xb] : b.c_) {
      int p = pa + pb;
      if (p > r.order_) break;
      auto& slot = r.c_[p];
      slot.add_product(xa, xb);
      if (slot.is_zero()) r.c_.erase(p);
    }
  return r;
}

NcSeries operator*(const QLaurent& c, const NcSeries& a) {
  NcSeries r(a.order_);
  for (const auto& [p, x] : a.c_) r.add_to(p, c * x);
  return r;
}

bool NcSeries::agrees_with(const NcSeries& o, int bound) const {
  int k = std::min({bound, order_, o.order_});
  for (const auto& [p, x] : c_)
    if (p <= k && !(o.coeff(p) == x)) return false;
  for (const auto& [p, x] : o.c_)
    if (p <= k && !(coeff(p) == x)) return false;
  return true;
}

NcSeries NcSeries::inverse(int target) const {
  auto v = valuation();
  if (!v) throw NotInvertibleLeadingTerm("zero series");
  const AqElement& lead = c_.begin()->second;
  if (!lead.is_unit_monomial()) throw NotInvertibleLeadingTerm(lead.to_string());
  const int val = *v;
  long inner = std::min<long>(static_cast<long>(target) + val, is_exact() ? kExact : static_cast<long>(order_) - val);
  AqElement lead_inv = unit_inverse(lead);
  // f = lead lambda^{-v} (1 + g);  g_k = lead^{-1} f_{v+k}
  std::vector<AqElement> g(std::max<long>(inner, 0) + 1);
  for (const auto& [p, x] : c_) {
    long k = static_cast<long>(p) - val;
    if (k >= 1 && k <= inner) g[k] = lead_inv * x;
  }
  // (1 + g) h = 1
  std::vector<AqElement> h(g.size());
  if (inner >= 0) h[0] = AqElement(1);
  for (long p = 1; p <= inner; ++p) {
    AqElement acc;
    for (long k = 1; k <= p; ++k)
      if (!g[k].is_zero() && !h[p - k].is_zero()) acc.add_product(g[k], h[p - k]);
    h[p] = -acc;
  }
  NcSeries r(clamp_order(inner - val));
  for (long p = 0; p <= inner; ++p)
    if (!h[p].is_zero()) r.add_to(static_cast<int>(p - val), h[p] * lead_inv);
  return r;
}

NcSeries invert(const NcSeries& f, int target) { return f.inverse(target); }

NcSeries continued_fraction(const AqElement& top, const std::vector<AqElement>& levels, int sign, FractionSide side,
                            int order) {
  NcSeries z = NcSeries::constant(AqElement(1));
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    NcSeries step = NcSeries::term(QLaurent(sign) * *it, 1);
    NcSeries zi = z.inverse(order);
    z = NcSeries::constant(AqElement(1)) + (side == FractionSide::Right ? step * zi : zi * step);
    z = z.truncated(order);
  }
  NcSeries zi = z.inverse(order);
  NcSeries t = NcSeries::constant(top);
  return (side == FractionSide::Right ? t * zi : zi * t).truncated(order);
}

AqElement LnQSeries::scaled_coeff(int p) const {
  auto it = scaled.find(p);
  return it == scaled.end() ? AqElement() : it->second;
}

bool LnQSeries::cleared_equals(int p, const AqElement& target) const {
  if (p > order) throw OutOfTruncation("ln_q coefficient " + std::to_string(p));
  return scaled_coeff(p) == q_factorial(p - 1) * target;
}

LnQSeries operator+(const LnQSeries& a, const LnQSeries& b) {
  LnQSeries r;
  r.order = std::min(a.order, b.order);
  for (int p = 1; p <= r.order; ++p) {
    AqElement x = a.scaled_coeff(p) + b.scaled_coeff(p);
    if (!x.is_zero()) r.scaled[p] = x;
  }
  return r;
}

LnQSeries ln_q(const NcSeries& f, int p_max) {
  auto v = f.valuation();
  if (!v || *v != 0 || !(f.coeff(0) == AqElement(1))) throw Error("ln_q needs f = 1 + O(lambda^{-1})");
  LnQSeries out;
  out.order = std::min(p_max, f.order());
  NcSeries g = (NcSeries::constant(AqElement(1)) - f.inverse(out.order)).truncated(out.order);
  NcSeries gr = g;
  for (int r = 1; r <= out.order; ++r) {
    QLaurent w = exact_divide(q_factorial(out.order), q_int(r));
    for (const auto& [p, x] : gr.coeffs()) {
      if (p > out.order) continue;
      // [p]!/[r] = ([order]!/[r]) / ([order]!/[p]!)
      QLaurent wp = exact_divide(w, exact_divide(q_factorial(out.order), q_factorial(p)));
      auto& slot = out.scaled[p];
      slot += wp * x;
    }
    gr = (gr * g).truncated(out.order);
  }
  std::erase_if(out.scaled, [](const auto& t) { return t.second.is_zero(); });
  return out;
}

NcSeries cont_frac_U(int chain, int order) {
  std::vector<AqElement> levels;
  for (int k = 1; k <= 2 * chain - 2; ++k) levels.push_back(e_gen(k));
  return continued_fraction(AqElement(1), levels, -1, FractionSide::Right, order);
}

NcSeries cont_frac_V(int chain, int order) { return cont_frac_U(chain, order).map(half_translate); }

namespace {

LnQSeries basi_sum(int p_max, int chain, int order) {
  return ln_q(cont_frac_U(chain, order), p_max) + ln_q(cont_frac_V(chain, order), p_max);
}

}  // namespace

BasiResult basi_compare(int p_max, int chain, int order) {
  if (p_max > order) throw Error("p_max must not exceed the order");
  LnQSeries s = basi_sum(p_max, chain, order);
  BasiResult r;
  for (int p = 1; p <= p_max; ++p) {
    AqElement psi = density_psi(p).value;
    if (!s.cleared_equals(p, psi)) {
      r.pass = false;
      r.first_bad_p = p;
      r.expected = q_factorial(p - 1) * psi;
      r.got = s.scaled_coeff(p);
      return r;
    }
  }
  return r;
}

bool check_basi(int p_max, int chain, int order) {
  if (p_max > order) throw Error("p_max must not exceed the order");
  LnQSeries a = basi_sum(p_max, chain, order);
  LnQSeries b = basi_sum(p_max, chain + 1, order);
  for (int p = 1; p <= p_max; ++p)
    if (!(a.scaled_coeff(p) == b.scaled_coeff(p)))
      throw StabilizationFailure("coefficient " + std::to_string(p) + " differs between N=" + std::to_string(chain) +
                                 " and N=" + std::to_string(chain + 1));
  for (int p = 1; p <= p_max; ++p)
    if (!a.cleared_equals(p, density_psi(p).value)) return false;
  return true;
}

ChainElement ChainElement::one(int n, int bound) {
  ChainElement r(n, bound);
  r.add(Exps(n, 0), QLaurent(1));
  return r;
}

ChainElement ChainElement::gen(int n, int bound, int i) {
  ChainElement r(n, bound);
  Exps e(n, 0);
  e[i - 1] = 1;
  r.add(e, QLaurent(1));
  return r;
}

void ChainElement::add(const Exps& e, const QLaurent& c) {
  int deg = 0;
  for (int a : e) deg += a;
  if (deg > bound_ || c.is_zero()) return;
  auto& slot = t_[e];
  slot += c;
  if (slot.is_zero()) t_.erase(e);
}

ChainElement ChainElement::operator-(const ChainElement& o) const {
  ChainElement r = *this;
  for (const auto& [e, c] : o.t_) r.add(e, -c);
  return r;
}

ChainElement ChainElement::operator*(const ChainElement& o) const {
  ChainElement r(n_, std::min(bound_, o.bound_));
  for (const auto& [ea, ca] : t_)
    for (const auto& [eb, cb] : o.t_) {
      int qe = 0;
      Exps e(n_);
      for (int i = 0; i < n_; ++i) {
        e[i] = ea[i] + eb[i];
        if (i + 1 < n_) qe += ea[i] * eb[i + 1];
      }
      r.add(e, (ca * cb).shifted(4 * qe));
    }
  return r;
}

ChainElement ChainElement::geometric() const {
  ChainElement sum = one(n_, bound_);
  ChainElement p = one(n_, bound_);
  for (int k = 1; k <= bound_; ++k) {
    p = p * *this;
    for (const auto& [e, c] : p.t_) sum.add(e, c);
  }
  return sum;
}

bool check_aba(int chain, int degree_bound) {
  const int n = chain;
  ChainElement g = ChainElement::gen(n, degree_bound, n).geometric();
  for (int k = n - 1; k >= 1; --k) g = (g * ChainElement::gen(n, degree_bound, k)).geometric();
  ChainElement expected(n, degree_bound);
  for (int d = 0; d <= degree_bound; ++d) {
    std::vector<int> alpha(n, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == n) {
        if (left == 0) expected.add(alpha, f_q(alpha));
        return;
      }
      for (int a = 0; a <= left; ++a) {
        alpha[i] = a;
        rec(i + 1, left - a);
      }
    };
    rec(0, d);
  }
  return g == expected;
}

bool check_q_binomial_product(int m, int k_max) {
  std::vector<QLaurent> prod(k_max + 1);
  prod[0] = QLaurent(1);
  for (int s = 0; s < m; ++s) {
    // multiply by sum_j q^{s j} t^j
    std::vector<QLaurent> next(k_max + 1);
    for (int i = 0; i <= k_max; ++i)
      for (int j = 0; i + j <= k_max; ++j) next[i + j] += prod[i] * QLaurent::q_power(s * j);
    prod = std::move(next);
  }
  for (int k = 0; k <= k_max; ++k)
    if (!(prod[k] == q_binomial(m + k - 1, k))) return false;
  return true;
}

NcBiSeries NcBiSeries::in_lambda(const NcSeries& f) {
  NcBiSeries r(f.order());
  for (const auto& [p, x] : f.coeffs()) {
    if (p < 0) throw Error("bivariate series need non-negative powers");
    r.add_to({p, 0}, x);
  }
  return r;
}

NcBiSeries NcBiSeries::in_mu(const NcSeries& f) {
  NcBiSeries r(f.order());
  for (const auto& [p, x] : f.coeffs()) {
    if (p < 0) throw Error("bivariate series need non-negative powers");
    r.add_to({0, p}, x);
  }
  return r;
}

NcBiSeries NcBiSeries::constant(const AqElement& c, int order) {
  NcBiSeries r(order);
  r.add_to({0, 0}, c);
  return r;
}

NcBiSeries NcBiSeries::scalar_polynomial(const std::map<Key, QLaurent>& p) {
  NcBiSeries r;
  for (const auto& [k, c] : p) r.add_to(k, AqElement(c));
  return r;
}

AqElement NcBiSeries::coeff(int i, int j) const {
  if (i + j > order_) throw OutOfTruncation("bivariate coefficient beyond order");
  auto it = c_.find({i, j});
  return it == c_.end() ? AqElement() : it->second;
}

void NcBiSeries::add_to(Key k, const AqElement& x) {
  if (k.first + k.second > order_ || x.is_zero()) return;
  auto& slot = c_[k];
  slot += x;
  if (slot.is_zero()) c_.erase(k);
}

int NcBiSeries::valuation() const {
  int v = c_.empty() ? (order_ >= kExact ? kExact : order_ + 1) : kExact;
  for (const auto& [k, x] : c_) v = std::min(v, k.first + k.second);
  return v;
}

NcBiSeries NcBiSeries::truncated(int d) const {
  NcBiSeries r(std::min(d, order_));
  for (const auto& [k, x] : c_)
    if (k.first + k.second <= r.order_) r.c_.emplace(k, x);
  return r;
}

NcBiSeries NcBiSeries::map(const std::function<AqElement(const AqElement&)>& f) const {
  NcBiSeries r(order_);
  for (const auto& [k, x] : c_) r.add_to(k, f(x));
  return r;
}

NcBiSeries NcBiSeries::operator-() const {
  NcBiSeries r(order_);
  for (const auto& [k, x] : c_) r.c_.emplace(k, -x);
  return r;
}

NcBiSeries& NcBiSeries::operator+=(const NcBiSeries& o) {
  order_ = std::min(order_, o.order_);
  std::erase_if(c_, [&](const auto& t) { return t.first.first + t.first.second > order_; });
  for (const auto& [k, x] : o.c_) add_to(k, x);
  return *this;
}

NcBiSeries& NcBiSeries::operator-=(const NcBiSeries& o) {
  order_ = std::min(order_, o.order_);
  std::erase_if(c_, [&](const auto& t) { return t.first.first + t.first.second > order_; });
  for (const auto& [k, x] : o.c_) add_to(k, -x);
  return *this;
}

NcBiSeries operator*(const NcBiSeries& a, const NcBiSeries& b) {
  long oa = a.order_ >= NcBiSeries::kExact ? NcBiSeries::kExact : static_cast<long>(a.order_) + b.valuation();
  long ob = b.order_ >= NcBiSeries::kExact ? NcBiSeries::kExact : static_cast<long>(b.order_) + a.valuation();
  NcBiSeries r(clamp_order(std::min(oa, ob)));
  for (const auto& [ka, xa] : a.c_)
    for (const auto& [kb, xb] : b.c_) {
      NcBiSeries::Key k{ka.first + kb.first, ka.second + kb.second};
      if (k.first + k.second > r.order_) continue;
      auto& slot = r.c_[k];
      slot.add_product(xa, xb);
      if (slot.is_zero()) r.c_.erase(k);
    }
  return r;
}

NcBiSeries operator*(const QLaurent& c, const NcBiSeries& a) {
  NcBiSeries r(a.order_);
  for (const auto& [k, x] : a.c_) r.add_to(k, c * x);
  return r;
}

bool NcBiSeries::is_zero_through(int bound) const {
  for (const auto& [k, x] : c_)
    if (k.first + k.second <= bound) return false;
  return true;
}

bool NcBiSeries::agrees_with(const NcBiSeries& o, int bound) const {
  int d = std::min({bound, order_, o.order_});
  return (truncated(d) - o.truncated(d)).is_zero_through(d);
}

NcBiSeries divide_by_lambda_minus_mu(const NcBiSeries& f) {
  const int top = f.order();
  if (top >= NcBiSeries::kExact) {
    int deg = 0;
    for (const auto& [k, x] : f.coeffs()) deg = std::max(deg, k.first + k.second);
    NcBiSeries g = divide_by_lambda_minus_mu(f.truncated(deg));
    NcBiSeries r;
    for (const auto& [k, x] : g.coeffs()) r.add_to(k, x);
    return r;
  }
  NcBiSeries g(top - 1);
  if (!f.coeff(0, 0).is_zero()) throw NonzeroDiagonalRemainder("degree 0");
  for (int d = 1; d <= top; ++d) {
    AqElement prev = -f.coeff(0, d);
    g.add_to({0, d - 1}, prev);
    for (int i = 1; i <= d - 1; ++i) {
      prev = prev - f.coeff(i, d - i);
      g.add_to({i, d - 1 - i}, prev);
    }
    if (!(f.coeff(d, 0) == prev)) throw NonzeroDiagonalRemainder("total degree " + std::to_string(d));
  }
  return g;
}

}  // namespace qsg
