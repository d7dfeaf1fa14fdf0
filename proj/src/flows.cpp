#include "qsg/flows.hpp"

#include <map>
#include <mutex>

#include "qsg/errors.hpp"
#include "qsg/functionals.hpp"
#include "qsg/imot.hpp"
#include "qsg/qhomspace.hpp"

namespace qsg {

namespace {

// -b x (1 + b y x)^{-1} summed as a geometric series.
NcSeries geometric_form(const NcSeries& x, const NcSeries& y, int order) {
  NcSeries ratio = -(y * x).shifted(1);
  NcSeries sum = NcSeries::constant(AqElement(QLaurent(1)), order);
  NcSeries power = sum;
  for (int k = 1; k <= order; ++k) {
    power = (power * ratio).truncated(order);
    sum += power;
  }
  return -(x * sum).shifted(1).truncated(order);
}

// -(x + mu y^{-1})^{-1} = -b (y^{-1} + b x)^{-1}
NcSeries direct_form(const NcSeries& x, const NcSeries& y, int order) {
  NcSeries inner = invert(y, order) + x.shifted(1);
  return -invert(inner, order).shifted(1).truncated(order);
}

NcSeries checked(const NcSeries& a, const NcSeries& b, int order, const char* name) {
  if (!a.agrees_with(b, order)) throw CrossCheckMismatch(std::string(name) + " expansions differ");
  return a;
}

NcBiSeries one_bi() { return NcBiSeries::constant(AqElement(QLaurent(1))); }

NcBiSeries b_times(const NcBiSeries& f) { return NcBiSeries::scalar_polynomial({{{0, 1}, QLaurent(1)}}) * f; }
NcBiSeries a_times(const NcBiSeries& f) { return NcBiSeries::scalar_polynomial({{{1, 0}, QLaurent(1)}}) * f; }

template <class F>
const NcBiSeries& cached(std::map<int, NcBiSeries>& cache, std::mutex& mu, int order, F compute) {
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.lower_bound(order);
    if (it != cache.end()) return it->second;
  }
  NcBiSeries s = compute(order);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(order, std::move(s)).first->second;
}

QLaurent scale_factor(int k, FlowScale scale) { return scale == FlowScale::QNumber ? q_int(k) : QLaurent(1); }

}  // namespace

AqElement gen_image(GenRef g) { return g.kind == FlowGen::U ? gen_image_u(g.index) : gen_image_m(g.index); }

NcSeries v_series(int order) {
  if (order < 1) throw ConfigError("v_series needs order >= 1");
  NcSeries u = u_series(order), m = m_series(order);
  return checked(geometric_form(m, u, order), direct_form(u, m, order), order, "v");
}

NcSeries w_series(int order) {
  if (order < 1) throw ConfigError("w_series needs order >= 1");
  NcSeries u = u_series(order), m = m_series(order);
  return checked(geometric_form(u, m, order), direct_form(m, u, order), order, "w");
}

NcBiSeries flow_u_biseries(int order) {
  static std::map<int, NcBiSeries> cache;
  static std::mutex mu;
  return cached(cache, mu, order, [](int k) {
    NcBiSeries ul = NcBiSeries::in_lambda(u_series(k));
    NcBiSeries um = NcBiSeries::in_mu(u_series(k));
    NcBiSeries v = NcBiSeries::in_mu(v_series(k));
    NcBiSeries first = (a_times(ul) - b_times(um)) * v * ul;
    NcBiSeries second = b_times((ul - um) * (one_bi() + v * um));
    return divide_by_lambda_minus_mu(first.truncated(k)) - divide_by_lambda_minus_mu(second.truncated(k));
  });
}

NcBiSeries flow_m_biseries(int order) {
  static std::map<int, NcBiSeries> cache;
  static std::mutex mu;
  return cached(cache, mu, order, [](int k) {
    NcBiSeries ml = NcBiSeries::in_lambda(m_series(k));
    NcBiSeries mm = NcBiSeries::in_mu(m_series(k));
    NcBiSeries w = NcBiSeries::in_mu(w_series(k));
    NcBiSeries first = b_times((one_bi() + mm * w) * (ml - mm));
    NcBiSeries second = ml * w * (a_times(ml) - b_times(mm));
    return divide_by_lambda_minus_mu(first.truncated(k)) - divide_by_lambda_minus_mu(second.truncated(k));
  });
}

AqElement extract_flow(const NcBiSeries& flow, int k, int j) {
  if (k < 1 || j < 1) throw ConfigError("flow indices start at 1");
  AqElement c = flow.coeff(j - 1, k);
  return (k + j - 1) % 2 == 0 ? c : -c;
}

AqElement extract_flow(int k, GenRef g) {
  const int order = k + g.index;
  return extract_flow(g.kind == FlowGen::U ? flow_u_biseries(order) : flow_m_biseries(order), k, g.index);
}

AqElement ad_flow(int n, GenRef g) { return ad_action(integral(n), gen_image(g)); }

bool check_intertwine(int n, int j_max, FlowScale scale) {
  const QLaurent c = scale_factor(n, scale);
  const int order = n + j_max;
  const NcBiSeries& fu = flow_u_biseries(order);
  const NcBiSeries& fm = flow_m_biseries(order);
  for (int j = 1; j <= j_max; ++j) {
    if (!(c * extract_flow(fu, n, j) == ad_flow(n, {FlowGen::U, j}))) return false;
    if (!(c * extract_flow(fm, n, j) == ad_flow(n, {FlowGen::M, j}))) return false;
  }
  return true;
}

bool check_flow_commute(int m, int n, const std::vector<GenRef>& sample) {
  Functional im = integral(m), in = integral(n);
  for (GenRef g : sample) {
    AqElement x = gen_image(g);
    if (!(ad_action(im, ad_action(in, x)) == ad_action(in, ad_action(im, x)))) return false;
  }
  return true;
}

bool check_imvl(int order, FlowScale scale) {
  if (order < 2) throw ConfigError("check_imvl needs order >= 2");
  NcSeries v = v_series(order + 1);
  NcSeries u = u_series(order + 1);
  // H(mu)(v(lambda)) = sum_k (-1)^k b^k ad(I_k)(v(lambda))
  NcBiSeries lhs(order);
  for (int k = 1; k <= order; ++k) {
    Functional ik = integral(k);
    for (const auto& [p, x] : v.coeffs()) {
      if (p + k > order) continue;
      AqElement y = ad_action(ik, x);
      lhs.add_to({p, k}, k % 2 == 0 ? y : -y);
    }
  }
  NcBiSeries vl = NcBiSeries::in_lambda(v), vm = NcBiSeries::in_mu(v);
  NcBiSeries ul = NcBiSeries::in_lambda(u), um = NcBiSeries::in_mu(u);
  NcBiSeries mid = b_times(um) - a_times(ul);
  NcBiSeries num = b_times(vl) - a_times(vm) + vl * mid * vm + vm * mid * vl;
  NcBiSeries rhs = divide_by_lambda_minus_mu(num.truncated(order + 1));
  NcBiSeries scaled(order);
  for (const auto& [key, x] : rhs.coeffs())
    if (key.first + key.second <= order) scaled.add_to(key, scale_factor(key.second, scale) * x);
  return lhs.agrees_with(scaled, order);
}

}  // namespace qsg
