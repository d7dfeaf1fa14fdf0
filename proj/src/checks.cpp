#include "qsg/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <set>
#include <thread>

#include "qsg/errors.hpp"
#include "qsg/flows.hpp"
#include "qsg/functionals.hpp"
#include "qsg/imot.hpp"
#include "qsg/laxrtt.hpp"
#include "qsg/ncseries.hpp"
#include "qsg/qhomspace.hpp"

namespace qsg {

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Task {
  std::string suite, name, params;
  std::function<Outcome()> run;
};

Outcome ok(bool pass, std::string detail = {}) { return {pass, std::move(detail)}; }

std::string yes_no(bool b) { return b ? "holds" : "fails"; }

std::string p(std::initializer_list<std::pair<const char*, int>> kv) {
  std::string out;
  for (const auto& [k, v] : kv) {
    if (!out.empty()) out += ' ';
    out += std::string(k) + '=' + std::to_string(v);
  }
  return out;
}

Density density_for(const SuiteConfig& cfg, int n) {
  if (!cfg.cache_dir.empty() && std::filesystem::exists(density_cache_path(cfg.cache_dir, n)))
    return read_density_cache(cfg.cache_dir, n);
  return density_psi(n);
}

void add_serre(std::vector<Task>& t, const SuiteConfig& cfg) {
  for (int n = 1; n <= std::min(cfg.n_max, 4); ++n)
    t.push_back({"serre", "serre_check", p({{"n", n}}), [n] {
                   AqElement a = screening_window(Sign::Plus, n), b = screening_window(Sign::Minus, n);
                   bool ab = serre_check(a, b), ba = serre_check(b, a);
                   return ok(ab && ba, "plus-minus " + yes_no(ab) + ", minus-plus " + yes_no(ba));
                 }});
}

void add_imot(std::vector<Task>& t, const SuiteConfig& cfg) {
  t.push_back({"imot", "psi_1", "", [&cfg] {
                 AqElement expected = unit_inverse(AqElement::x(1) * AqElement::y(1)) + unit_inverse(AqElement::y(1) * AqElement::x(2));
                 AqElement got = density_for(cfg, 1).value;
                 return ok(got == expected, got == expected ? "" : got.to_string());
               }});
  t.push_back({"imot", "ad_I1_x1", "", [] {
                 AqElement got = ad_action(integral(1), AqElement::x(1));
                 AqElement expected = unit_inverse(AqElement::y(0)) - unit_inverse(AqElement::y(1));
                 return ok(got == expected, got == expected ? "" : got.to_string());
               }});
  for (int n = 1; n <= cfg.n_max; ++n)
    t.push_back({"imot", "check_screening", p({{"n", n}}), [n] { return ok(check_screening(n)); }});
  for (int n = 1; n <= cfg.n_max + 1; ++n)
    for (int m = n + 1; n + m <= cfg.n_max + 2; ++m)
      t.push_back({"imot", "check_commute", p({{"n", n}, {"p", m}}), [n, m] { return ok(check_commute(n, m)); }});
}

void add_basi(std::vector<Task>& t, const SuiteConfig& cfg) {
  const int p_max = cfg.n_max;
  const int chain = std::max(5, minimal_chain_length(p_max));
  t.push_back({"basi", "check_basi", p({{"p_max", p_max}, {"N", chain}}), [p_max, chain] {
                 BasiResult r = basi_compare(p_max, chain, p_max);
                 if (!r.pass)
                   return ok(false, "p=" + std::to_string(r.first_bad_p) + "\nexpected:\n" + r.expected.to_string() +
                                        "\ngot:\n" + r.got.to_string());
                 return ok(check_basi(p_max, chain, p_max), "stable from N=" + std::to_string(chain));
               }});
}

void add_aba(std::vector<Task>& t, const SuiteConfig& cfg) {
  for (int n = 1; n <= 5; ++n)
    t.push_back({"aba", "check_aba", p({{"N", n}, {"degree", std::min(cfg.order, 5)}}),
                 [n, d = std::min(cfg.order, 5)] { return ok(check_aba(n, d)); }});
  t.push_back({"aba", "q_binomial_product", p({{"M", 4}, {"k_max", 5}}),
               [] { return ok(check_q_binomial_product(4, 5)); }});
}

void add_hspace(std::vector<Task>& t, const SuiteConfig& cfg) {
  t.push_back({"hspace", "check_relum", p({{"i_max", 4}}), [] { return ok(check_relum(4)); }});
  t.push_back({"hspace", "check_relu", p({{"i_max", 5}, {"K", cfg.order}}),
               [k = cfg.order] { return ok(check_relu(5, k)); }});
  t.push_back({"hspace", "check_relm", p({{"i_max", 5}, {"K", cfg.order}}),
               [k = cfg.order] { return ok(check_relm(5, k)); }});
  for (int j = 2; j <= 4; ++j)
    for (int i = 1; i < j; ++i)
      t.push_back({"hspace", "check_uij", p({{"i", i}, {"j", j}}), [i, j] {
                     bool printed = check_uij(i, j);
                     std::string d = "sum to k=i+j-1 " + yes_no(printed) + ", sum to k=j-1 " +
                                     yes_no(check_uij_range(i, j, j - 1));
                     if (!printed) {
                       AqElement lhs = commutator(gen_image_u(i), gen_image_u(j));
                       AqElement rhs;
                       for (int k = i; k <= i + j - 1; ++k) rhs.add_product(gen_image_u(k), gen_image_u(i + j - k));
                       rhs = (QLaurent(1) - QLaurent::q_power(-1)) * rhs;
                       d += "\nlhs - rhs:\n" + (lhs - rhs).to_string();
                     }
                     return ok(printed, d);
                   }});
  t.push_back({"hspace", "pbw_independence", p({{"letters", 3}, {"index_sum", 6}}),
               [] { return ok(check_pbw_independence(3, 6)); }});
  t.push_back({"hspace", "injectivity_witness", p({{"i_max", 4}}), [] { return ok(check_injectivity_witness(4)); }});
}

void add_rtt(std::vector<Task>& t, const SuiteConfig& cfg) {
  for (int n = 1; n <= 5; ++n)
    t.push_back({"rtt", "check_recursions", p({{"n", n}}), [n] { return ok(check_recursions(n)); }});
  for (int n = 1; n <= 3; ++n)
    t.push_back({"rtt", "check_ima", p({{"n", n}, {"K", cfg.order}}),
                 [n, k = cfg.order] { return ok(check_ima(n, k)); }});
  for (int n = 1; n <= 3; ++n)
    t.push_back({"rtt", "alpha_translation", p({{"n", n}}), [n] { return ok(check_alpha_translation(n)); }});
  for (int n = 0; n <= cfg.rtt_n; ++n)
    t.push_back({"rtt", "check_rtt", p({{"n", n}}), [n] {
                   bool minus = check_rtt(n, -1);
                   return ok(minus, "twist q^{-1/4} " + yes_no(minus) + ", twist q^{1/4} " + yes_no(check_rtt(n, 1)));
                 }});
  for (int n = 1; n <= 3; ++n)
    t.push_back({"rtt", "check_tag", p({{"n", n}}), [n] {
                   TagResult r = tag_parts(n);
                   return ok(r.taga && r.tagb && r.tagc, "taga " + yes_no(r.taga) + ", tagb " + yes_no(r.tagb) +
                                                             ", tagc " + yes_no(r.tagc) + ", (lambda-mu)-divided tagc " +
                                                             yes_no(r.tagc_divided));
                 }});
}

void add_qdet(std::vector<Task>& t, const SuiteConfig& cfg) {
  for (int n = 1; n <= 3; ++n)
    t.push_back({"qdet", "check_qdet", p({{"n", n}, {"K", cfg.order}}),
                 [n, k = cfg.order] { return ok(check_qdet(n, k)); }});
}

void add_propcab(std::vector<Task>& t, const SuiteConfig& cfg) {
  using Fn = bool (*)(int, int);
  const std::pair<const char*, Fn> fns[] = {
      {"check_cab", check_cab}, {"check_dab", check_dab}, {"check_cab2", check_cab2}, {"check_dab2", check_dab2}};
  for (const auto& [name, fn] : fns)
    for (int n = 0; n <= 3; ++n)
      t.push_back({"propcab", name, p({{"n", n}, {"K", cfg.order}}), [n, fn, k = cfg.order] { return ok(fn(n, k)); }});
}

void add_flows(std::vector<Task>& t, const SuiteConfig& cfg) {
  t.push_back({"flows", "v_series", p({{"K", cfg.order}}), [k = cfg.order] {
                 NcSeries v = v_series(k);
                 bool lead = v.coeff(0).is_zero() && v.coeff(1) == -unit_inverse(AqElement::x(1));
                 return ok(lead, lead ? "" : v.coeff(1).to_string());
               }});
  t.push_back({"flows", "w_series", p({{"K", cfg.order}}), [k = cfg.order] {
                 NcSeries w = w_series(k);
                 bool lead = w.coeff(0).is_zero() && w.coeff(1) == -unit_inverse(AqElement::y(0));
                 return ok(lead, lead ? "" : w.coeff(1).to_string());
               }});
  for (int m = 1; m <= 3; ++m)
    for (int n = m + 1; n <= 3; ++n)
      t.push_back({"flows", "check_flow_commute", p({{"m", m}, {"n", n}, {"j_max", 3}}), [m, n] {
                     std::vector<GenRef> s;
                     for (int j = 1; j <= 3; ++j) {
                       s.push_back({FlowGen::U, j});
                       s.push_back({FlowGen::M, j});
                     }
                     return ok(check_flow_commute(m, n, s));
                   }});
  const int k = std::min(cfg.order, 4);
  t.push_back({"flows", "check_imvl", p({{"K", k}}), [k] {
                 bool literal = check_imvl(k);
                 return ok(literal, "H_k as ad(I_k) " + yes_no(literal) + ", H_k as ad(I_k)/[k] " +
                                        yes_no(check_imvl(k, FlowScale::QNumber)));
               }});
}

void add_intertwine(std::vector<Task>& t, const SuiteConfig& cfg) {
  for (int n = 1; n <= cfg.flow_n; ++n)
    t.push_back({"intertwine", "check_intertwine", p({{"n", n}, {"j_max", cfg.flow_j}}), [n, j_max = cfg.flow_j] {
                   bool literal = check_intertwine(n, j_max);
                   std::string d = "[n] H_n = ad(I_n) " + yes_no(check_intertwine(n, j_max, FlowScale::QNumber));
                   if (!literal)
                     for (FlowGen g : {FlowGen::U, FlowGen::M})
                       for (int j = 1; j <= j_max; ++j) {
                         AqElement diff = extract_flow(n, {g, j}) - ad_flow(n, {g, j});
                         if (diff.is_zero()) continue;
                         d += std::string("\nfirst mismatch ") + (g == FlowGen::U ? "u" : "m") + std::to_string(j) +
                              ", H_n - ad(I_n):\n" + diff.to_string();
                         return ok(false, d);
                       }
                   return ok(literal, d);
                 }});
}

using Builder = void (*)(std::vector<Task>&, const SuiteConfig&);

struct Entry {
  SuiteInfo info;
  Builder build;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = {
      {{"serre", "n <= min(n_max, 4)", "Lemma enrf: quantum Serre relations of the screening charges"}, add_serre},
      {{"imot", "n <= n_max, n + p <= n_max + 2", "Prop. expli, Prop. tha: densities psi_n and commutativity"},
       add_imot},
      {{"basi", "p <= n_max, N >= 5", "Prop. basi: ln_q U_N + ln_q V_N generating function"}, add_basi},
      {{"aba", "N <= 5, degree <= min(K, 5)", "Prop. aba: continued fraction expansion"}, add_aba},
      {{"hspace", "i_max 4-5, K", "Prop. thb: relations relu, relm, relum, uij; PBW basis"}, add_hspace},
      {{"rtt", "n <= 5, rtt_n, K", "Lax matrix: kak/kok, ima, RTT relation, taga-tagc"}, add_rtt},
      {{"qdet", "n <= 3, K", "Lax matrix: quantum determinant"}, add_qdet},
      {{"propcab", "n <= 3, K", "Prop. propcab: c, d, c2, d2 coefficients"}, add_propcab},
      {{"flows", "m, n <= 3, K", "Prop. exih: v, w series, commuting flows, imvl"}, add_flows},
      {{"intertwine", "n <= flow_n, j <= flow_j", "Thm. thc: DS_q H_n = ad(I_n) DS_q"}, add_intertwine},
  };
  return r;
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> c = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return c;
}

std::vector<std::string> all_suite_names() {
  std::vector<std::string> out;
  for (const auto& s : suite_catalog()) out.push_back(s.name);
  return out;
}

void validate(const SuiteConfig& cfg) {
  if (cfg.suites.empty()) throw ConfigError("no suites selected");
  for (const auto& s : cfg.suites) {
    auto names = all_suite_names();
    if (std::find(names.begin(), names.end(), s) == names.end()) throw ConfigError("unknown suite '" + s + "'");
  }
  for (int b : {cfg.n_max, cfg.order, cfg.rtt_n, cfg.flow_n, cfg.flow_j})
    if (b < 1) throw ConfigError("budgets must be at least 1");
}

std::vector<CheckRecord> run_suites(const SuiteConfig& cfg) {
  validate(cfg);
  std::set<std::string> wanted(cfg.suites.begin(), cfg.suites.end());
  std::vector<Task> tasks;
  for (const auto& e : registry())
    if (wanted.count(e.info.name)) e.build(tasks, cfg);

  std::vector<CheckRecord> out(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      CheckRecord& r = out[i];
      r.suite = t.suite;
      r.name = t.name;
      r.params = t.params;
      auto start = std::chrono::steady_clock::now();
      try {
        Outcome o = t.run();
        r.pass = o.pass;
        r.detail = std::move(o.detail);
      } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
      }
      r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    }
  };
  unsigned n = cfg.threads > 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, std::max<size_t>(tasks.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

int cache_densities(int n_max, const std::filesystem::path& dir) {
  if (n_max < 1) throw ConfigError("n_max must be at least 1");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  for (int n = 1; n <= n_max; ++n) write_density_cache(dir, density_psi(n));
  return n_max;
}

}  // namespace qsg
