#pragma once

#include <array>
#include <map>

#include "qsg/lattice.hpp"
#include "qsg/ncseries.hpp"

namespace qsg {

// Polynomial in lambda with A_q coefficients.
using LambdaPoly = std::map<int, AqElement>;

struct LaxMatrix {
  LambdaPoly a, b, c, d;
};

LambdaPoly poly_add(const LambdaPoly& x, const LambdaPoly& y);
LambdaPoly poly_mul(const LambdaPoly& x, const LambdaPoly& y);
LambdaPoly poly_scale_lambda(const LambdaPoly& x, const QLaurent& q_to_k_base);  // p(q lambda) style substitution
NcSeries as_series(const LambdaPoly& p);  // lambda^k -> power -k

LaxMatrix l_matrix(int n);
bool check_recursions(int n);

NcSeries alpha_series(int n, int order);
NcSeries alpha_continued_fraction(int n, int order);
NcSeries alpha_fq_sum(int n, int order);
bool check_ima(int n, int order);
// T^n h(u_i) against the alpha coefficients for i <= 2(n-1).
bool check_alpha_translation(int n);

// Upper-left entry of the twist as a power of q^{1/4}; the others are fixed.
bool check_rtt(int n, int twist_upper_left = -1);
struct TagResult {
  bool taga = true;
  bool tagb = true;
  bool tagc = true;
  // (lambda - mu)[a21(mu), a22(lambda)] against the same right-hand side
  bool tagc_divided = true;
};
TagResult tag_parts(int n);
bool check_tag(int n);
bool check_qdet(int n, int order);

}  // namespace qsg
