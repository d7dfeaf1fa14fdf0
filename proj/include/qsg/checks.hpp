#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace qsg {

struct SuiteConfig {
  int n_max = 6;         // integrals of motion budget
  int order = 6;         // series truncation K
  int rtt_n = 2;
  int flow_n = 3;
  int flow_j = 4;
  std::vector<std::string> suites;
  std::filesystem::path cache_dir;  // empty: densities are recomputed
  int threads = 0;                  // 0: hardware concurrency
};

struct CheckRecord {
  std::string suite;
  std::string name;
  std::string params;
  bool pass = false;
  long long millis = 0;
  std::string detail;  // counterexample or diagnostics, canonical text
};

struct SuiteInfo {
  std::string name;
  std::string params;
  std::string anchor;
};

const std::vector<SuiteInfo>& suite_catalog();
std::vector<std::string> all_suite_names();

// Throws ConfigError on an empty or unknown suite list or a budget below 1.
void validate(const SuiteConfig& cfg);

// Records come back in catalog order whatever the thread count.
std::vector<CheckRecord> run_suites(const SuiteConfig& cfg);

// Writes psi_1..psi_n_max into dir; returns the number of files written.
int cache_densities(int n_max, const std::filesystem::path& dir);

}  // namespace qsg
