#include <gtest/gtest.h>

#include <filesystem>
#include <unistd.h>
#include <fstream>

#include "qsg/checks.hpp"
#include "qsg/errors.hpp"
#include "qsg/imot.hpp"

using namespace qsg;

namespace {

QLaurent q(int e) { return QLaurent::q_power(e); }

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("qsg_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST(Compositions, EnumerationOrderAndPruning) {
  std::vector<std::vector<int>> seen;
  for_each_chain_composition(2, 2, 1, [&](const std::vector<int>& a) { seen.push_back(a); });
  EXPECT_EQ(seen, (std::vector<std::vector<int>>{{1, 1}, {2, 0}}));
  seen.clear();
  for_each_chain_composition(2, 3, 1, [&](const std::vector<int>& a) { seen.push_back(a); });
  EXPECT_EQ(seen, (std::vector<std::vector<int>>{{1, 1, 0}, {2, 0, 0}}));
}

TEST(Densities, PsiOneAndTwo) {
  AqElement e1 = e_gen(1), e2 = e_gen(2), e3 = e_gen(3);
  EXPECT_EQ(density_psi(1).value, e1 + e2);
  // A_2 = e_1^2 + [2] e_1 e_2, B_2 = T^{1/2} A_2
  AqElement a2 = e1 * e1 + (QLaurent(1) + q(1)) * (e1 * e2);
  EXPECT_EQ(density_a(2, 2), a2);
  EXPECT_EQ(density_psi(2).value, a2 + e2 * e2 + (QLaurent(1) + q(1)) * (e2 * e3));
}

TEST(Densities, IndependentOfChainLength) {
  for (int n = 1; n <= 5; ++n) {
    int lo = minimal_chain_length(n);
    EXPECT_EQ(density_psi(n, lo).value, density_psi(n, lo + 2).value) << n;
  }
}

TEST(Densities, GradeZero) {
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(degree(density_psi(n).value), (Grade{false, 0}));
    EXPECT_EQ(principal_degree(density_psi(n).value), (Grade{false, -2 * n}));
  }
}

TEST(Integrals, AdjointOfFirstIntegral) {
  AqElement expected = unit_inverse(AqElement::y(0)) - unit_inverse(AqElement::y(1));
  EXPECT_EQ(ad_action(integral(1), AqElement::x(1)), expected);
}

TEST(Integrals, ScreeningAndCommutativity) {
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(check_screening(n)) << n;
  for (int n = 1; n <= 3; ++n)
    for (int p = n; n + p <= 6; ++p) EXPECT_TRUE(check_commute(n, p)) << n << ' ' << p;
}

TEST(Integrals, NonIntegralFailsScreening) {
  // x_1^{-1} y_1^{-1} alone does not commute with the screening charges
  Functional f = project(e_gen(1), 0);
  AqElement s = bracket(f, project(AqElement::x(0), 1)).canon();
  EXPECT_FALSE(s.is_zero());
}

TEST(DensityCache, RoundTripAndIdempotence) {
  auto dir = fresh_dir("cache");
  EXPECT_EQ(cache_densities(3, dir), 3);
  std::string first;
  {
    std::ifstream in(density_cache_path(dir, 3));
    first.assign(std::istreambuf_iterator<char>(in), {});
  }
  EXPECT_EQ(cache_densities(3, dir), 3);
  std::ifstream in(density_cache_path(dir, 3));
  std::string second(std::istreambuf_iterator<char>(in), {});
  EXPECT_EQ(first, second);
  for (int n = 1; n <= 3; ++n) {
    Density d = read_density_cache(dir, n);
    EXPECT_EQ(d.value, density_psi(n).value);
    EXPECT_EQ(d.n, n);
  }
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++files;
  EXPECT_EQ(files, 3u);
  std::filesystem::remove_all(dir);
}

TEST(DensityCache, BadHeaderAndMissingFile) {
  auto dir = fresh_dir("bad");
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(density_cache_path(dir, 1));
    out << "qsg-density-cache version 0\nn=1 N=2 trailing_zero=1\n0\n";
  }
  EXPECT_THROW(read_density_cache(dir, 1), VersionMismatch);
  EXPECT_THROW(read_density_cache(dir, 2), IoError);
  std::filesystem::remove_all(dir);
}
