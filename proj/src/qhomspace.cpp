#include "qsg/qhomspace.hpp"

#include <functional>
#include <mutex>

#include "qsg/errors.hpp"
#include "qsg/imot.hpp"

namespace qsg {

namespace {

template <class F>
AqElement cached(std::map<int, AqElement>& cache, std::mutex& mu, int i, F build) {
  {
    std::lock_guard lock(mu);
    auto it = cache.find(i);
    if (it != cache.end()) return it->second;
  }
  AqElement v = build(i);
  std::lock_guard lock(mu);
  return cache.emplace(i, std::move(v)).first->second;
}

AqElement build_u(int i) {
  AqElement sum;
  const int parts = i - 1;
  for_each_chain_composition(i - 1, parts, 0, [&](const std::vector<int>& a) {
    QLaurent c = f_q(a);
    if (c.is_zero()) return;
    AqElement w(1);
    for (int k = parts; k >= 1; --k)
      if (a[k - 1] != 0) w = w * power(e_gen(-k), a[k - 1]);
    sum += c * (w * AqElement::y(0, -1));
  });
  return sum;
}

AqElement build_m(int i) {
  AqElement sum;
  for_each_chain_composition(i - 1, i - 1, 0, [&](const std::vector<int>& a) {
    QLaurent c = f_q(a);
    if (c.is_zero()) return;
    sum += c * (AqElement::x(1, -1) * ordered_power_product(a, e_gen));
  });
  return sum;
}

QLaurent sign_of(int i) { return QLaurent(i % 2 == 0 ? 1 : -1); }

}  // namespace

AqElement gen_image_u(int i) {
  static std::map<int, AqElement> cache;
  static std::mutex mu;
  return cached(cache, mu, i, build_u);
}

AqElement gen_image_m(int i) {
  static std::map<int, AqElement> cache;
  static std::mutex mu;
  return cached(cache, mu, i, build_m);
}

AqElement gen_image_u_from_fraction(int i) {
  std::vector<AqElement> levels;
  for (int k = 1; k <= i; ++k) levels.push_back(e_gen(-k));
  NcSeries s = continued_fraction(AqElement::y(0, -1), levels, 1, FractionSide::Left, i - 1);
  return sign_of(i - 1) * s.coeff(i - 1);
}

AqElement gen_image_m_from_fraction(int i) {
  std::vector<AqElement> levels;
  for (int k = 1; k <= i; ++k) levels.push_back(e_gen(k));
  NcSeries s = continued_fraction(AqElement::x(1, -1), levels, 1, FractionSide::Right, i - 1);
  return sign_of(i - 1) * s.coeff(i - 1);
}

NcSeries u_series(int order) {
  NcSeries s(order);
  for (int i = 0; i <= order; ++i) s.add_to(i, sign_of(i) * gen_image_u(i + 1));
  return s;
}

NcSeries m_series(int order) {
  NcSeries s(order);
  for (int i = 0; i <= order; ++i) s.add_to(i, sign_of(i) * gen_image_m(i + 1));
  return s;
}

bool check_relum(int i_max, int q_power) {
  for (int i = 1; i <= i_max; ++i)
    for (int j = 1; j <= i_max; ++j) {
      AqElement u = gen_image_u(i);
      AqElement m = gen_image_m(j);
      if (!(u * m == QLaurent::q_power(q_power) * (m * u))) return false;
    }
  return true;
}

namespace {

bool quadratic_relation(const NcSeries& f, int q_power) {
  NcBiSeries fl = NcBiSeries::in_lambda(f);
  NcBiSeries fm = NcBiSeries::in_mu(f);
  NcBiSeries x = NcBiSeries::in_lambda(f.shifted(1)) - NcBiSeries::in_mu(f.shifted(1));
  NcBiSeries y = fl - fm;
  NcBiSeries diff = x * y - QLaurent::q_power(q_power) * (y * x);
  return diff.is_zero_through(diff.order());
}

}  // namespace

bool check_relu(int i_max, int order) { return quadratic_relation(u_series(std::min(order, i_max - 1)), 1); }

bool check_relm(int i_max, int order) { return quadratic_relation(m_series(std::min(order, i_max - 1)), -1); }

bool check_uij_range(int i, int j, int k_hi) {
  AqElement lhs = commutator(gen_image_u(i), gen_image_u(j));
  AqElement rhs;
  for (int k = i; k <= k_hi; ++k) rhs.add_product(gen_image_u(k), gen_image_u(i + j - k));
  rhs = (QLaurent(1) - QLaurent::q_power(-1)) * rhs;
  return lhs == rhs;
}

std::vector<Letter> PBWMonomial::word() const {
  std::vector<Letter> w;
  for (const auto& [i, e] : u)
    for (int k = 0; k < e; ++k) w.push_back({'u', i});
  for (const auto& [i, e] : m)
    for (int k = 0; k < e; ++k) w.push_back({'m', i});
  return w;
}

std::string PBWMonomial::to_string() const {
  std::string out;
  for (const auto& l : word()) {
    if (!out.empty()) out += ' ';
    out += l.kind;
    out += std::to_string(l.index);
  }
  return out.empty() ? "1" : out;
}

AqElement image_of_word(const std::vector<Letter>& word) {
  AqElement r(1);
  for (const auto& l : word) r = r * (l.kind == 'u' ? gen_image_u(l.index) : gen_image_m(l.index));
  return r;
}

AqElement image_of(const PBWMonomial& p) { return image_of_word(p.word()); }

namespace {

void partitions(int total, int count, int min_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (count == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (int p = min_part; p * count <= total; ++p) {
    cur.push_back(p);
    partitions(total - p, count - 1, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::map<int, int>> multisets(int count, int sum) {
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions(sum, count, 1, cur, parts);
  std::vector<std::map<int, int>> out;
  for (const auto& p : parts) {
    std::map<int, int> e;
    for (int x : p) ++e[x];
    out.push_back(e);
  }
  return out;
}

// Solves sum_c x_c col_c = rhs; columns and rhs are A_q images.
std::vector<QFraction> solve_images(const std::vector<AqElement>& cols, const AqElement& rhs) {
  std::map<LatticeMonomial, size_t> row_of;
  auto row = [&](const LatticeMonomial& m) { return row_of.try_emplace(m, row_of.size()).first->second; };
  for (const auto& c : cols)
    for (const auto& [m, x] : c.terms()) row(m);
  for (const auto& [m, x] : rhs.terms()) row(m);
  const size_t n = cols.size();
  std::vector<std::vector<QFraction>> a(row_of.size(), std::vector<QFraction>(n + 1));
  for (size_t j = 0; j < n; ++j)
    for (const auto& [m, x] : cols[j].terms()) a[row_of[m]][j] = QFraction::from_laurent(x);
  for (const auto& [m, x] : rhs.terms()) a[row_of[m]][n] = QFraction::from_laurent(x);
  size_t rank = 0;
  for (size_t j = 0; j < n; ++j) {
    size_t p = rank;
    while (p < a.size() && a[p][j].is_zero()) ++p;
    if (p == a.size()) throw SingularSystem("column " + std::to_string(j) + " is dependent");
    std::swap(a[p], a[rank]);
    QFraction inv = a[rank][j].inverse();
    for (size_t k = j; k <= n; ++k) a[rank][k] = a[rank][k] * inv;
    for (size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][j].is_zero()) continue;
      QFraction f = a[r][j];
      for (size_t k = j; k <= n; ++k)
        if (!a[rank][k].is_zero()) a[r][k] = a[r][k] - f * a[rank][k];
    }
    ++rank;
  }
  for (size_t r = rank; r < a.size(); ++r)
    if (!a[r][n].is_zero()) throw Inconsistent("image lies outside the span of the PBW class");
  std::vector<QFraction> x(n);
  for (size_t j = 0; j < n; ++j) x[j] = a[j][n];
  return x;
}

}  // namespace

std::vector<PBWMonomial> pbw_class(int u_count, int m_count, int u_sum, int m_sum) {
  std::vector<PBWMonomial> out;
  for (const auto& u : multisets(u_count, u_sum))
    for (const auto& m : multisets(m_count, m_sum)) out.push_back(PBWMonomial{u, m});
  return out;
}

QhbElement pbw_expand(const std::vector<Letter>& word) {
  int cu = 0, cm = 0, su = 0, sm = 0;
  for (const auto& l : word) {
    if (l.kind == 'u') {
      ++cu;
      su += l.index;
    } else {
      ++cm;
      sm += l.index;
    }
  }
  std::vector<PBWMonomial> basis = pbw_class(cu, cm, su, sm);
  std::vector<AqElement> cols;
  for (const auto& b : basis) cols.push_back(image_of(b));
  QhbElement out;
  out.image = image_of_word(word);
  std::vector<QFraction> x = solve_images(cols, out.image);
  for (size_t k = 0; k < basis.size(); ++k)
    if (!x[k].is_zero()) out.abstract.emplace(basis[k], x[k]);
  return out;
}

bool check_pbw_independence(int max_letters, int max_sum) {
  for (int cu = 0; cu <= max_letters; ++cu)
    for (int cm = 0; cu + cm <= max_letters; ++cm) {
      if (cu + cm == 0) continue;
      for (int su = cu; su <= max_sum; ++su)
        for (int sm = cm; su + sm <= max_sum; ++sm) {
          if ((cu == 0 && su != 0) || (cm == 0 && sm != 0)) continue;
          std::vector<AqElement> cols;
          for (const auto& b : pbw_class(cu, cm, su, sm)) cols.push_back(image_of(b));
          if (cols.empty()) continue;
          try {
            solve_images(cols, AqElement());
          } catch (const SingularSystem&) {
            return false;
          }
        }
    }
  return true;
}

namespace {

bool has_variable(const LatticeMonomial& m, char kind, int site) {
  for (const auto& b : m.blocks())
    if (b.site == site && (kind == 'x' ? b.x : b.y) != 0) return true;
  return false;
}

bool witness(const std::function<AqElement(int)>& image, int i_max,
             const std::function<std::pair<char, int>(int)>& newest) {
  for (int i = 1; i <= i_max; ++i) {
    auto [kind, site] = newest(i);
    int count = 0;
    const AqElement cur = image(i);
    for (const auto& [m, c] : cur.terms()) count += has_variable(m, kind, site);
    if (count != 1) return false;
    for (int j = 1; j < i; ++j) {
      const AqElement prev = image(j);
      for (const auto& [m, c] : prev.terms())
        if (has_variable(m, kind, site)) return false;
    }
  }
  return true;
}

}  // namespace

bool check_injectivity_witness(int i_max) {
  auto newest_u = [](int i) -> std::pair<char, int> {
    if (i == 1) return {'y', 0};
    int k = (i - 1) / 2;
    return i % 2 == 0 ? std::pair<char, int>{'x', -k} : std::pair<char, int>{'y', -k};
  };
  auto newest_m = [&](int i) -> std::pair<char, int> {
    auto [kind, site] = newest_u(i);
    return {kind == 'x' ? 'y' : 'x', 1 - site};
  };
  return witness(gen_image_u, i_max, newest_u) && witness(gen_image_m, i_max, newest_m);
}

namespace {

QFraction qp(int k) { return QFraction::monomial(k, 0, 0); }
QFraction va() { return QFraction::monomial(0, 1, 0); }
QFraction vb() { return QFraction::monomial(0, 0, 1); }
QFraction lin(int j) { return qp(j) * va() - vb(); }
QFraction qi(int k) { return QFraction::from_laurent(q_int(k)); }

QFraction prod_q_minus_1(int lo, int hi) {
  QFraction r(1);
  for (int j = lo; j <= hi; ++j) r *= qp(j) - QFraction(1);
  return r;
}

QFraction prod_lin(int lo, int hi) {
  QFraction r(1);
  for (int j = lo; j <= hi; ++j) r *= lin(j);
  return r;
}

QFraction common_factor() { return (va() - vb()) * (va() - qp(1) * vb()); }

}  // namespace

QFraction coeff_c(int alpha, int beta) {
  if (beta == 0) return (qp(alpha - 1) - QFraction(1)) * va() / lin(alpha - 1);
  return qp(alpha - 1) * prod_q_minus_1(alpha + 1, alpha + beta - 1) * common_factor() *
         QFraction::monomial(0, 0, beta - 1) / prod_lin(alpha - 1, alpha + beta - 1);
}

QFraction coeff_d(int alpha, int beta) {
  return QFraction::monomial(0, alpha - 1, -(alpha - 1)) * coeff_c(beta, alpha);
}

QFraction poly_p2(int alpha, int beta) {
  return qp(1) * qi(alpha + beta - 1) * (qp(1) * va() - vb()) * lin(alpha - 2) -
         qi(alpha) * (va() - qp(1) * vb()) * lin(alpha + beta - 1);
}

QFraction coeff_c2(int alpha, int beta) {
  if (beta == 0)
    return (qp(alpha - 2) - QFraction(1)) * (qp(alpha - 1) - QFraction(1)) * va() * va() /
           (lin(alpha - 2) * lin(alpha - 1));
  if (beta == 1)
    return qp(alpha - 2) * (qp(alpha - 1) - QFraction(1)) * qi(2) * common_factor() * va() /
           (lin(alpha - 2) * lin(alpha - 1) * lin(alpha));
  return qp(alpha - 2) * prod_q_minus_1(alpha + 1, alpha + beta - 2) * common_factor() *
         QFraction::monomial(0, 0, beta - 2) * poly_p2(alpha, beta) / prod_lin(alpha - 2, alpha + beta - 1);
}

QFraction coeff_d2(int alpha, int beta) {
  return QFraction::monomial(0, alpha - 2, -(alpha - 2)) * coeff_c2(beta, alpha);
}

namespace {

NcBiSeries bi_power(const NcBiSeries& x, int k, int order) {
  NcBiSeries r = NcBiSeries::constant(AqElement(1));
  for (int i = 0; i < k; ++i) r = (r * x).truncated(order);
  return r;
}

bool check_expansion(int k_mu, int l_lambda, const std::function<QFraction(int, int)>& coef, int order) {
  const int total = k_mu + l_lambda;
  std::vector<QFraction> cs;
  MPoly den(1);
  for (int alpha = 0; alpha <= total; ++alpha) {
    cs.push_back(coef(alpha, total - alpha));
    const MPoly& d = cs.back().den();
    den = exact_divide(den * d, gcd(den, d));
  }
  QFraction clear(den, MPoly(1));
  NcSeries u = u_series(order);
  NcBiSeries ul = NcBiSeries::in_lambda(u);
  NcBiSeries um = NcBiSeries::in_mu(u);
  std::vector<NcBiSeries> pl, pm;
  for (int k = 0; k <= total; ++k) {
    pl.push_back(bi_power(ul, k, order));
    pm.push_back(bi_power(um, k, order));
  }
  NcBiSeries diff = NcBiSeries::scalar_polynomial(clear.as_ab_polynomial()) * (pm[k_mu] * pl[l_lambda]);
  for (int alpha = 0; alpha <= total; ++alpha) {
    QFraction c = clear * cs[alpha];
    if (c.is_zero()) continue;
    diff -= NcBiSeries::scalar_polynomial(c.as_ab_polynomial()) * (pl[alpha] * pm[total - alpha]);
  }
  return diff.is_zero_through(std::min(order, diff.order()));
}

}  // namespace

bool check_cab(int n, int order) { return check_expansion(1, n, coeff_c, order); }
bool check_dab(int n, int order) { return check_expansion(n, 1, coeff_d, order); }
bool check_cab2(int n, int order) { return check_expansion(2, n, coeff_c2, order); }
bool check_dab2(int n, int order) { return check_expansion(n, 2, coeff_d2, order); }

}  // namespace qsg
