#pragma once

#include <utility>
#include <vector>

#include "qsg/lattice.hpp"
#include "qsg/ncseries.hpp"

namespace qsg {

enum class FlowGen { U, M };

// Literal: H_n against ad(I_n).  QNumber: [n] H_n against ad(I_n).
enum class FlowScale { Literal, QNumber };

struct GenRef {
  FlowGen kind;
  int index;
};

AqElement gen_image(GenRef g);

// Series in mu^{-1}; the power-p coefficient multiplies mu^{-p}.
// Both expansions of v (resp. w) are computed and compared; throws CrossCheckMismatch.
NcSeries v_series(int order);
NcSeries w_series(int order);

// Generating series H(mu)(u(lambda)) and H(mu)(m(lambda)) in a = lambda^{-1}, b = mu^{-1},
// exact through total degree order - 1. Throws NonzeroDiagonalRemainder.
NcBiSeries flow_u_biseries(int order);
NcBiSeries flow_m_biseries(int order);

// Image of H_k(gen) read off a flow series: (-1)^{k+j-1} times the a^{j-1} b^k coefficient.
AqElement extract_flow(const NcBiSeries& flow, int k, int j);
AqElement extract_flow(int k, GenRef g);

// ad(I_n) image of a generator, the other side of the intertwining.
AqElement ad_flow(int n, GenRef g);

bool check_intertwine(int n, int j_max, FlowScale scale = FlowScale::Literal);
bool check_flow_commute(int m, int n, const std::vector<GenRef>& sample);
// H(mu)(v(lambda)) with H_k realized through ad(I_k).
bool check_imvl(int order, FlowScale scale = FlowScale::Literal);

}  // namespace qsg
