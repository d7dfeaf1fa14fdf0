#pragma once

#include <filesystem>
#include <functional>
#include <vector>

#include "qsg/functionals.hpp"

namespace qsg {

// Calls visit(alpha) for every composition of n into `parts` non-negative
// parts with alpha[0] >= first_min, in lexicographic order. Compositions
// with a zero followed by a positive part are skipped: their F_q weight vanishes.
void for_each_chain_composition(int n, int parts, int first_min,
                                const std::function<void(const std::vector<int>&)>& visit);

// Ordered product g(1)^{alpha_1} g(2)^{alpha_2} ...
AqElement ordered_power_product(const std::vector<int>& alpha, const std::function<AqElement(int)>& g);

struct Density {
  int n = 0;
  int chain = 0;  // N
  AqElement value;
};

int minimal_chain_length(int n);
AqElement density_a(int n, int chain);
Density density_psi(int n);
Density density_psi(int n, int chain);
Functional integral(int n);

bool check_screening(int n);
bool check_commute(int n, int p);

inline constexpr int kDensityCacheVersion = 1;
std::filesystem::path density_cache_path(const std::filesystem::path& dir, int n);
void write_density_cache(const std::filesystem::path& dir, const Density& d);
// Throws VersionMismatch on a bad header and IoError when the file is unreadable.
Density read_density_cache(const std::filesystem::path& dir, int n);

}  // namespace qsg
