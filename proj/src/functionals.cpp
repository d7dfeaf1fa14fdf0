#include "qsg/functionals.hpp"

#include "qsg/errors.hpp"

namespace qsg {

namespace {

void require_grade_zero(const Functional& f) {
  if (f.grade() != 0 && !f.is_zero())
    throw GradeMismatch("left argument must have grade 0, got " + std::to_string(f.grade()));
}

// acc += sum over i in window of [T^i p, q] for monomials, before dividing by q-1.
void add_windowed_commutators(AqElement& acc, const AqElement& left, const AqElement& right, bool shift_left) {
  for (const auto& [mp, cp] : left.terms()) {
    if (mp.is_one()) continue;
    for (const auto& [mq, cq] : right.terms()) {
      if (mq.is_one()) continue;
      int lo = mq.min_site() - mp.max_site() - 1;
      int hi = mq.max_site() - mp.min_site() + 1;
      QLaurent c = cp * cq;
      for (int i = lo; i <= hi; ++i) {
        LatticeMonomial a = shift_left ? mp.translated(i) : mp;
        LatticeMonomial b = shift_left ? mq : mq.translated(-i);
        int e1 = exchange_exponent(a, b);
        int e2 = exchange_exponent(b, a);
        if (e1 == e2) continue;
        QLaurent k = QLaurent::q_power(e1) - QLaurent::q_power(e2);
        acc.add_term(a + b, c * k);
      }
    }
  }
}

AqElement divided(const AqElement& x) { return x.transform_coefficients(exact_div_q_minus_1); }

}  // namespace

Functional project(const AqElement& p, int n) {
  Grade g = degree(p);
  if (!p.is_zero() && (g.mixed || g.value != n))
    throw GradeMismatch("expected homogeneous degree " + std::to_string(n));
  Functional f;
  f.grade_ = n;
  for (const auto& [m, c] : p.terms()) {
    if (m.is_one())
      f.canon_.add_term(m, c);
    else
      f.canon_.add_term(m.translated(1 - m.min_site()), c);
  }
  return f;
}

Functional bracket(const Functional& f, const Functional& g) {
  require_grade_zero(f);
  AqElement acc;
  add_windowed_commutators(acc, f.canon(), g.canon(), true);
  return project(divided(acc), g.grade());
}

Functional bracket_alt(const Functional& f, const Functional& g) {
  require_grade_zero(f);
  AqElement acc;
  add_windowed_commutators(acc, f.canon(), g.canon(), false);
  return project(divided(acc), g.grade());
}

AqElement ad_action(const Functional& f, const AqElement& x) {
  require_grade_zero(f);
  AqElement acc;
  add_windowed_commutators(acc, f.canon(), x, true);
  return divided(acc);
}

AqElement solve_telescope(const AqElement& p) {
  if (!project(p).is_zero()) throw NotTelescoping("class is nonzero");
  // Group by orbit representative; r_k = sum_{j > k} c_j along each orbit.
  std::map<LatticeMonomial, std::map<int, QLaurent>> orbits;
  for (const auto& [m, c] : p.terms()) {
    if (m.is_one()) throw NotTelescoping("constant term");
    orbits[m.translated(1 - m.min_site())][m.min_site() - 1] = c;
  }
  AqElement r;
  for (const auto& [rep, coeffs] : orbits) {
    QLaurent run;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      auto next = std::next(it);
      run += it->second;
      int stop = next == coeffs.rend() ? it->first - 1 : next->first;
      for (int k = it->first - 1; k >= stop; --k) r.add_term(rep.translated(k), run);
    }
  }
  return r;
}

}  // namespace qsg
