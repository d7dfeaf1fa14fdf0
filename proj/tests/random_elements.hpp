#pragma once

#include <random>

#include "qsg/lattice.hpp"
#include "qsg/qfraction.hpp"

namespace qsg::gen {

inline QLaurent random_laurent(std::mt19937& rng, int terms = 2) {
  std::uniform_int_distribution<int> e(-3, 3), c(-4, 4);
  QLaurent r;
  for (int i = 0; i < terms; ++i) r += QLaurent::q_power(e(rng), c(rng));
  return r;
}

inline LatticeMonomial random_monomial(std::mt19937& rng, int lo = -1, int hi = 2) {
  std::uniform_int_distribution<int> site(lo, hi), ex(-2, 2), len(0, 3);
  std::vector<Block> blocks;
  for (int i = len(rng); i > 0; --i) blocks.push_back({site(rng), ex(rng), ex(rng)});
  return LatticeMonomial(blocks);
}

inline AqElement random_element(std::mt19937& rng, int terms = 3) {
  AqElement r;
  for (int i = 0; i < terms; ++i) r.add_term(random_monomial(rng), random_laurent(rng, 1));
  return r;
}

// Degree-zero element built from the e_i, so it lies in A_q[0].
inline AqElement random_grade0(std::mt19937& rng, int terms = 2) {
  std::uniform_int_distribution<int> idx(0, 3), pw(1, 2);
  AqElement r;
  for (int i = 0; i < terms; ++i) {
    AqElement m = power(e_gen(idx(rng)), pw(rng)) * e_gen(idx(rng));
    r += random_laurent(rng, 1) * m;
  }
  return r;
}

inline MPoly random_mpoly(std::mt19937& rng, int terms = 3) {
  std::uniform_int_distribution<int> e(0, 2), c(-3, 3);
  MPoly r;
  for (int i = 0; i < terms; ++i) r += MPoly::monomial({e(rng), e(rng), e(rng)}, c(rng));
  return r;
}

}  // namespace qsg::gen
