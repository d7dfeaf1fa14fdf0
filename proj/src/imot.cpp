#include "qsg/imot.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "qsg/errors.hpp"

namespace qsg {

void for_each_chain_composition(int n, int parts, int first_min,
                                const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> alpha(parts, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == parts) {
      if (left == 0) visit(alpha);
      return;
    }
    if (i > 0 && alpha[i - 1] == 0) {
      if (left == 0) visit(alpha);
      return;
    }
    int lo = i == 0 ? first_min : 0;
    for (int a = lo; a <= left; ++a) {
      alpha[i] = a;
      rec(i + 1, left - a);
    }
    alpha[i] = 0;
  };
  if (parts == 0) {
    if (n == 0) visit(alpha);
    return;
  }
  rec(0, n);
}

AqElement ordered_power_product(const std::vector<int>& alpha, const std::function<AqElement(int)>& g) {
  AqElement r(1);
  for (size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] != 0) r = r * power(g(static_cast<int>(i) + 1), alpha[i]);
  return r;
}

int minimal_chain_length(int n) { return (n + 1) / 2 + 1; }

AqElement density_a(int n, int chain) {
  if (n > 2 * (chain - 1)) throw Error("chain too short for density");
  AqElement a;
  const QLaurent qn = q_int(n);
  std::map<int, AqElement> gens;
  auto g = [&](int k) -> AqElement {
    auto it = gens.find(k);
    if (it == gens.end()) it = gens.emplace(k, e_gen(k)).first;
    return it->second;
  };
  for_each_chain_composition(n, 2 * chain - 2, 1, [&](const std::vector<int>& alpha) {
    QLaurent c = f_q(alpha);
    if (c.is_zero()) return;
    c = exact_divide(qn * c, q_int(alpha[0]));
    a += c * ordered_power_product(alpha, g);
  });
  return a;
}

Density density_psi(int n, int chain) {
  AqElement a = density_a(n, chain);
  return Density{n, chain, a + half_translate(a)};
}

Density density_psi(int n) { return density_psi(n, minimal_chain_length(n)); }

Functional integral(int n) { return project(density_psi(n).value, 0); }

bool check_screening(int n) {
  Functional in = integral(n);
  return bracket(in, project(AqElement::x(0), 1)).is_zero() &&
         bracket(in, project(AqElement::y(0), -1)).is_zero();
}

bool check_commute(int n, int p) { return bracket(integral(n), integral(p)).is_zero(); }

std::filesystem::path density_cache_path(const std::filesystem::path& dir, int n) {
  return dir / ("psi_" + std::to_string(n) + ".txt");
}

namespace {

std::string header_line() { return "qsg-density-cache version " + std::to_string(kDensityCacheVersion); }

}  // namespace

void write_density_cache(const std::filesystem::path& dir, const Density& d) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  auto target = density_cache_path(dir, d.n);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << header_line() << '\n'
        << "n=" << d.n << " N=" << d.chain << " trailing_zero=1\n"
        << d.value.to_string() << '\n';
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) throw IoError("cannot rename to " + target.string() + ": " + ec.message());
}

Density read_density_cache(const std::filesystem::path& dir, int n) {
  auto path = density_cache_path(dir, n);
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  std::string header;
  std::getline(in, header);
  if (header != header_line()) throw VersionMismatch(path.string() + ": '" + header + "'");
  std::string params;
  std::getline(in, params);
  Density d;
  int flag = -1;
  if (std::sscanf(params.c_str(), "n=%d N=%d trailing_zero=%d", &d.n, &d.chain, &flag) != 3 || flag != 1 ||
      d.n != n)
    throw VersionMismatch(path.string() + ": bad parameter line '" + params + "'");
  std::stringstream body;
  body << in.rdbuf();
  std::string text = body.str();
  while (!text.empty() && text.back() == '\n') text.pop_back();
  d.value = AqElement::parse(text);
  return d;
}

}  // namespace qsg
