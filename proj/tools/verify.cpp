#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qsg/checks.hpp"
#include "qsg/errors.hpp"

namespace {

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string indent(const std::string& text) {
  std::string out = "    ";
  for (char c : text) {
    out += c;
    if (c == '\n') out += "    ";
  }
  return out;
}

void print_text(const qsg::SuiteConfig& cfg, const std::vector<qsg::CheckRecord>& recs, int passed) {
  for (const auto& r : recs) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.suite << '.' << r.name;
    if (!r.params.empty()) std::cout << " [" << r.params << ']';
    std::cout << " (" << r.millis << " ms)\n";
    if (!r.detail.empty()) std::cout << indent(r.detail) << '\n';
  }
  std::cout << passed << '/' << recs.size() << " checks passed (n_max=" << cfg.n_max << " K=" << cfg.order
            << " rtt_n=" << cfg.rtt_n << " flow_n=" << cfg.flow_n << " flow_j=" << cfg.flow_j << ")\n";
}

void print_json(const qsg::SuiteConfig& cfg, const std::vector<qsg::CheckRecord>& recs, int passed) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& r : recs)
    checks.push_back({{"name", r.suite + "." + r.name},
                      {"params", r.params},
                      {"pass", r.pass},
                      {"millis", r.millis},
                      {"detail", r.detail}});
  nlohmann::ordered_json report = {
      {"summary",
       {{"total", recs.size()},
        {"passed", passed},
        {"failed", static_cast<int>(recs.size()) - passed},
        {"config",
         {{"suites", cfg.suites},
          {"n_max", cfg.n_max},
          {"order", cfg.order},
          {"rtt_n", cfg.rtt_n},
          {"flow_n", cfg.flow_n},
          {"flow_j", cfg.flow_j}}}}},
      {"checks", checks}};
  std::cout << report.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the quantum sine-Gordon identities"};
  qsg::SuiteConfig cfg;
  std::string suites;
  std::string report = "text";
  std::string cache_dir;
  bool list = false;
  bool cache = false;
  app.add_option("--suites", suites, "comma separated suite names (default: all)");
  app.add_option("--n-max", cfg.n_max, "integrals of motion budget")->capture_default_str();
  app.add_option("--order", cfg.order, "series truncation order K")->capture_default_str();
  app.add_option("--rtt-n", cfg.rtt_n, "largest Lax size for the RTT check")->capture_default_str();
  app.add_option("--flow-n", cfg.flow_n, "largest flow index")->capture_default_str();
  app.add_option("--flow-j", cfg.flow_j, "largest generator index for the flows")->capture_default_str();
  app.add_option("--report", report, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--cache-dir", cache_dir, "density cache directory");
  app.add_option("--threads", cfg.threads, "worker threads (0: all cores)")->capture_default_str();
  app.add_flag("--list", list, "list suites and exit");
  app.add_flag("--cache-densities", cache, "write psi_1..psi_{n-max} into --cache-dir and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list) {
      for (const auto& s : qsg::suite_catalog()) std::cout << s.name << "\t" << s.params << "\t" << s.anchor << '\n';
      return 0;
    }
    cfg.cache_dir = cache_dir;
    if (cache) {
      if (cache_dir.empty()) throw qsg::ConfigError("--cache-densities needs --cache-dir");
      int n = qsg::cache_densities(cfg.n_max, cfg.cache_dir);
      std::cout << n << " density files written to " << cache_dir << '\n';
      return 0;
    }
    cfg.suites = app.count("--suites") ? split(suites) : qsg::all_suite_names();
    auto recs = qsg::run_suites(cfg);
    int passed = 0;
    for (const auto& r : recs) passed += r.pass;
    if (report == "json")
      print_json(cfg, recs, passed);
    else
      print_text(cfg, recs, passed);
    return passed == static_cast<int>(recs.size()) ? 0 : 1;
  } catch (const qsg::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}
