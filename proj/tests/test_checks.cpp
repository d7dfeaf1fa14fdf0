#include <gtest/gtest.h>

#include <filesystem>
#include <unistd.h>

#include "qsg/checks.hpp"
#include "qsg/errors.hpp"
#include "qsg/imot.hpp"

using namespace qsg;

namespace {

bool same_modulo_timing(const std::vector<CheckRecord>& a, const std::vector<CheckRecord>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].suite != b[i].suite || a[i].name != b[i].name || a[i].params != b[i].params || a[i].pass != b[i].pass ||
        a[i].detail != b[i].detail)
      return false;
  return true;
}

}  // namespace

TEST(Checks, Catalog) {
  auto names = all_suite_names();
  EXPECT_EQ(names.size(), 10u);
  EXPECT_NE(std::find(names.begin(), names.end(), "basi"), names.end());
  EXPECT_NE(std::find(names.begin(), names.end(), "rtt"), names.end());
  for (const auto& s : suite_catalog()) EXPECT_FALSE(s.anchor.empty()) << s.name;
}

TEST(Checks, ConfigErrors) {
  SuiteConfig cfg;
  EXPECT_THROW(run_suites(cfg), ConfigError);
  cfg.suites = {"nope"};
  EXPECT_THROW(run_suites(cfg), ConfigError);
  cfg.suites = {"serre"};
  cfg.order = 0;
  EXPECT_THROW(run_suites(cfg), ConfigError);
}

TEST(Checks, SerreSuite) {
  SuiteConfig cfg;
  cfg.suites = {"serre"};
  cfg.n_max = 3;
  auto recs = run_suites(cfg);
  ASSERT_EQ(recs.size(), 3u);
  for (const auto& r : recs) EXPECT_TRUE(r.pass) << r.params;
  EXPECT_EQ(recs.back().params, "n=3");
}

TEST(Checks, DeterministicAcrossThreadCounts) {
  SuiteConfig cfg;
  cfg.suites = {"imot", "hspace", "intertwine"};
  cfg.n_max = 4;
  cfg.flow_n = 2;
  cfg.flow_j = 2;
  cfg.threads = 1;
  auto a = run_suites(cfg);
  cfg.threads = 4;
  auto b = run_suites(cfg);
  EXPECT_TRUE(same_modulo_timing(a, b));
}

TEST(Checks, FailuresCarryCounterexamples) {
  SuiteConfig cfg;
  cfg.suites = {"intertwine"};
  cfg.flow_n = 2;
  cfg.flow_j = 1;
  auto recs = run_suites(cfg);
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_TRUE(recs[0].pass);
  ASSERT_FALSE(recs[1].pass);
  EXPECT_NE(recs[1].detail.find("H_n - ad(I_n)"), std::string::npos);
}

TEST(Checks, CachedDensitiesAreUsed) {
  auto dir = std::filesystem::temp_directory_path() / ("qsg_checks_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  EXPECT_EQ(cache_densities(2, dir), 2);
  SuiteConfig cfg;
  cfg.suites = {"imot"};
  cfg.n_max = 2;
  cfg.cache_dir = dir;
  for (const auto& r : run_suites(cfg)) EXPECT_TRUE(r.pass) << r.name;
  std::filesystem::remove_all(dir);
}
