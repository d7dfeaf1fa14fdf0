#include "qsg/laxrtt.hpp"

#include "qsg/errors.hpp"
#include "qsg/imot.hpp"
#include "qsg/qhomspace.hpp"

namespace qsg {

LambdaPoly poly_add(const LambdaPoly& x, const LambdaPoly& y) {
  LambdaPoly r = x;
  for (const auto& [k, v] : y) {
    r[k] += v;
    if (r[k].is_zero()) r.erase(k);
  }
  return r;
}

LambdaPoly poly_mul(const LambdaPoly& x, const LambdaPoly& y) {
  LambdaPoly r;
  for (const auto& [i, u] : x)
    for (const auto& [j, v] : y) r[i + j].add_product(u, v);
  std::erase_if(r, [](const auto& t) { return t.second.is_zero(); });
  return r;
}

LambdaPoly poly_scale_lambda(const LambdaPoly& x, const QLaurent& base) {
  LambdaPoly r;
  for (const auto& [k, v] : x) {
    QLaurent f(1);
    for (int i = 0; i < k; ++i) f = f * base;
    r[k] = f * v;
  }
  return r;
}

NcSeries as_series(const LambdaPoly& p) {
  NcSeries s;
  for (const auto& [k, v] : p) s.add_to(-k, v);
  return s;
}

LaxMatrix l_matrix(int n) {
  LaxMatrix m{{{0, AqElement(1)}}, {}, {}, {{0, AqElement(1)}}};
  for (int i = 1; i <= n; ++i) {
    // right factor [[1, y_i], [lambda x_i, lambda x_i y_i + 1]]
    LambdaPoly e11{{0, AqElement(1)}};
    LambdaPoly e12{{0, AqElement::y(i)}};
    LambdaPoly e21{{1, AqElement::x(i)}};
    LambdaPoly e22{{0, AqElement(1)}, {1, AqElement::x(i) * AqElement::y(i)}};
    LaxMatrix r;
    r.a = poly_add(poly_mul(m.a, e11), poly_mul(m.b, e21));
    r.b = poly_add(poly_mul(m.a, e12), poly_mul(m.b, e22));
    r.c = poly_add(poly_mul(m.c, e11), poly_mul(m.d, e21));
    r.d = poly_add(poly_mul(m.c, e12), poly_mul(m.d, e22));
    m = std::move(r);
  }
  return m;
}

bool check_recursions(int n) {
  if (n < 1) return true;
  LaxMatrix prev = l_matrix(n - 1);
  LaxMatrix cur = l_matrix(n);
  LambdaPoly lx{{1, AqElement::x(n)}};
  LambdaPoly kak = poly_add(prev.c, poly_mul(prev.d, lx));
  LambdaPoly kok = poly_add(poly_mul(prev.c, {{0, AqElement::y(n)}}),
                            poly_mul(prev.d, {{0, AqElement(1)}, {1, AqElement::x(n) * AqElement::y(n)}}));
  return kak == cur.c && kok == cur.d;
}

NcSeries alpha_series(int n, int order) {
  LaxMatrix m = l_matrix(n);
  NcSeries dinv = as_series(m.d).inverse(order + n);
  return (dinv * as_series(m.c)).truncated(order);
}

NcSeries alpha_continued_fraction(int n, int order) {
  std::vector<AqElement> levels;
  for (int k = 2 * n - 1; k >= 1; --k) levels.push_back(e_gen(k));
  return continued_fraction(AqElement::y(n, -1), levels, 1, FractionSide::Left, order);
}

NcSeries alpha_fq_sum(int n, int order) {
  NcSeries s(order);
  const int parts = 2 * n - 1;
  for (int i = 1; i <= order + 1; ++i) {
    AqElement h;
    for_each_chain_composition(i - 1, parts, 0, [&](const std::vector<int>& a) {
      QLaurent c = f_q(a);
      if (c.is_zero()) return;
      AqElement w(1);
      for (int j = parts; j >= 1; --j)
        if (a[j - 1] != 0) w = w * power(e_gen(2 * n - j), a[j - 1]);
      h += c * (w * AqElement::y(n, -1));
    });
    s.add_to(i - 1, QLaurent((i - 1) % 2 == 0 ? 1 : -1) * h);
  }
  return s;
}

bool check_ima(int n, int order) {
  NcSeries a = alpha_series(n, order);
  NcSeries b = alpha_continued_fraction(n, order);
  NcSeries c = alpha_fq_sum(n, order);
  return a.agrees_with(b, order) && a.agrees_with(c, order);
}

bool check_alpha_translation(int n) {
  const int top = 2 * (n - 1);
  if (top < 1) return true;
  NcSeries a = alpha_series(n, top - 1);
  for (int i = 1; i <= top; ++i) {
    AqElement expected = QLaurent((i - 1) % 2 == 0 ? 1 : -1) * translate(gen_image_u(i), n);
    if (!(a.coeff(i - 1) == expected)) return false;
  }
  return true;
}

namespace {

// Polynomial in (lambda, mu) with A_q coefficients.
using BiPoly = std::map<std::pair<int, int>, AqElement>;
using Mat4 = std::array<std::array<BiPoly, 4>, 4>;

void bi_accumulate(BiPoly& acc, const BiPoly& x, const BiPoly& y) {
  for (const auto& [i, u] : x)
    for (const auto& [j, v] : y) {
      auto& slot = acc[{i.first + j.first, i.second + j.second}];
      slot.add_product(u, v);
    }
}

void bi_clean(BiPoly& p) {
  std::erase_if(p, [](const auto& t) { return t.second.is_zero(); });
}

Mat4 mat_mul(const Mat4& x, const Mat4& y) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) bi_accumulate(r[i][j], x[i][k], y[k][j]);
      bi_clean(r[i][j]);
    }
  return r;
}

BiPoly in_lambda(const LambdaPoly& p) {
  BiPoly r;
  for (const auto& [k, v] : p) r[{k, 0}] = v;
  return r;
}

BiPoly in_mu(const LambdaPoly& p) {
  BiPoly r;
  for (const auto& [k, v] : p) r[{0, k}] = v;
  return r;
}

BiPoly scalar(const QLaurent& c, int lam = 0, int mu = 0) {
  BiPoly r;
  if (!c.is_zero()) r[{lam, mu}] = AqElement(c);
  return r;
}

BiPoly bi_sub(BiPoly x, const BiPoly& y) {
  for (const auto& [k, v] : y) x[k] -= v;
  bi_clean(x);
  return x;
}

BiPoly bi_mul(const BiPoly& x, const BiPoly& y) {
  BiPoly r;
  bi_accumulate(r, x, y);
  bi_clean(r);
  return r;
}

std::array<std::array<LambdaPoly, 2>, 2> entries(const LaxMatrix& m) { return {{{m.a, m.b}, {m.c, m.d}}}; }

}  // namespace

bool check_rtt(int n, int twist_upper_left) {
  auto L = entries(l_matrix(n));
  Mat4 l1, l2, h, r;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l) {
          if (k == l) l1[2 * i + k][2 * j + l] = in_lambda(L[i][j]);
          if (i == j) l2[2 * i + k][2 * j + l] = in_mu(L[k][l]);
        }
  h[0][0] = scalar(QLaurent::s_power(twist_upper_left));
  h[1][1] = scalar(QLaurent::s_power(1));
  h[2][2] = scalar(QLaurent::s_power(1));
  h[3][3] = scalar(QLaurent::s_power(-1));
  // R times (q^{-1/2} lambda - q^{1/2} mu)
  const QLaurent qm = QLaurent::s_power(-2);
  const QLaurent qp = QLaurent::s_power(2);
  BiPoly den = bi_sub(scalar(qm, 1, 0), scalar(qp, 0, 1));
  BiPoly diff = bi_sub(scalar(QLaurent(1), 1, 0), scalar(QLaurent(1), 0, 1));
  r[0][0] = den;
  r[3][3] = den;
  r[1][1] = diff;
  r[2][2] = diff;
  r[1][2] = scalar(qm - qp, 0, 1);
  r[2][1] = scalar(qm - qp, 1, 0);
  Mat4 lhs = mat_mul(mat_mul(mat_mul(r, l1), h), l2);
  Mat4 rhs = mat_mul(mat_mul(mat_mul(l2, h), l1), r);
  return lhs == rhs;
}

TagResult tag_parts(int n) {
  auto L = entries(l_matrix(n));
  TagResult t;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      BiPoly x = in_lambda(L[i][j]);
      BiPoly y = in_mu(L[i][j]);
      if (!(bi_mul(x, y) == bi_mul(y, x))) t.taga = false;
    }
  BiPoly c_l = in_lambda(L[1][0]), c_m = in_mu(L[1][0]);
  BiPoly d_l = in_lambda(L[1][1]), d_m = in_mu(L[1][1]);
  BiPoly left = bi_sub(bi_mul(c_l, d_m), bi_mul(d_m, c_l));
  BiPoly mid = bi_sub(bi_mul(c_m, d_l), bi_mul(d_l, c_m));
  QLaurent k = QLaurent(1) - QLaurent::q_power(-1);
  BiPoly right = bi_sub(bi_mul(scalar(k, 0, 1), bi_mul(d_m, c_l)), bi_mul(scalar(k, 1, 0), bi_mul(d_l, c_m)));
  BiPoly lam_minus_mu = bi_sub(scalar(QLaurent(1), 1, 0), scalar(QLaurent(1), 0, 1));
  t.tagb = left == mid;
  t.tagc = mid == right;
  t.tagc_divided = bi_mul(lam_minus_mu, mid) == right;
  return t;
}

bool check_tag(int n) {
  TagResult t = tag_parts(n);
  return t.taga && t.tagb && t.tagc;
}

bool check_qdet(int n, int order) {
  if (n == 0) return true;
  LaxMatrix m = l_matrix(n);
  const int target = order + 4 * n + 4;
  NcSeries a11 = as_series(m.a);
  NcSeries a11q = as_series(poly_scale_lambda(m.a, QLaurent::q_power(1)));
  NcSeries inv = a11.inverse(target);
  NcSeries schur = as_series(m.d) - as_series(m.c) * inv * as_series(m.b);
  NcSeries prod = a11q * schur;
  if (prod.order() < order) throw OutOfTruncation("qdet precision " + std::to_string(prod.order()));
  return prod.agrees_with(NcSeries::constant(AqElement(1)), order);
}

}  // namespace qsg
