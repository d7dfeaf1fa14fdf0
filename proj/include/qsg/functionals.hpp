#pragma once

#include "qsg/lattice.hpp"

namespace qsg {

// Class of a homogeneous element in F_n = A_q[n] / Im(T - Id).
class Functional {
 public:
  Functional() = default;
  int grade() const { return grade_; }
  const AqElement& canon() const { return canon_; }
  bool is_zero() const { return canon_.is_zero(); }
  friend bool operator==(const Functional&, const Functional&) = default;

 private:
  friend Functional project(const AqElement& p, int n);
  int grade_ = 0;
  AqElement canon_;
};

// Throws GradeMismatch unless p is zero or homogeneous of degree n.
Functional project(const AqElement& p, int n);
inline Functional project(const AqElement& p) {
  Grade g = degree(p);
  return project(p, g.mixed ? 0 : g.value);
}

Functional bracket(const Functional& f, const Functional& g);
Functional bracket_alt(const Functional& f, const Functional& g);
AqElement ad_action(const Functional& f, const AqElement& x);

// R with T(R) - R = p; throws NotTelescoping when the class of p is nonzero.
AqElement solve_telescope(const AqElement& p);

}  // namespace qsg
