#include "qsg/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "qsg/errors.hpp"

namespace qsg {

LatticeMonomial::LatticeMonomial(std::vector<Block> blocks) {
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.site < b.site; });
  for (const auto& b : blocks) {
    if (!blocks_.empty() && blocks_.back().site == b.site) {
      blocks_.back().x += b.x;
      blocks_.back().y += b.y;
    } else {
      blocks_.push_back(b);
    }
  }
  std::erase_if(blocks_, [](const Block& b) { return b.x == 0 && b.y == 0; });
}

LatticeMonomial LatticeMonomial::x(int site, int power) { return LatticeMonomial({{site, power, 0}}); }
LatticeMonomial LatticeMonomial::y(int site, int power) { return LatticeMonomial({{site, 0, power}}); }

int LatticeMonomial::degree() const {
  int d = 0;
  for (const auto& b : blocks_) d += b.x - b.y;
  return d;
}

int LatticeMonomial::principal_degree() const {
  int d = 0;
  for (const auto& b : blocks_) d += b.x + b.y;
  return d;
}

LatticeMonomial LatticeMonomial::translated(int k) const {
  LatticeMonomial r = *this;
  for (auto& b : r.blocks_) b.site += k;
  return r;
}

LatticeMonomial LatticeMonomial::negated() const {
  LatticeMonomial r = *this;
  for (auto& b : r.blocks_) {
    b.x = -b.x;
    b.y = -b.y;
  }
  return r;
}

LatticeMonomial operator+(const LatticeMonomial& a, const LatticeMonomial& b) {
  LatticeMonomial r;
  auto& out = r.blocks_;
  out.reserve(a.blocks_.size() + b.blocks_.size());
  auto i = a.blocks_.begin();
  auto j = b.blocks_.begin();
  while (i != a.blocks_.end() || j != b.blocks_.end()) {
    if (j == b.blocks_.end() || (i != a.blocks_.end() && i->site < j->site)) {
      out.push_back(*i++);
    } else if (i == a.blocks_.end() || j->site < i->site) {
      out.push_back(*j++);
    } else {
      Block s{i->site, i->x + j->x, i->y + j->y};
      if (s.x != 0 || s.y != 0) out.push_back(s);
      ++i;
      ++j;
    }
  }
  return r;
}

int exchange_exponent(const LatticeMonomial& a, const LatticeMonomial& b) {
  // Each block (c,d) of b at site i passes the blocks (e,f) of a at sites
  // j > i, picking up q^{-(c-d)(e-f)}, then merges with a's block at site i
  // picking up q^{f c}.
  const auto& A = a.blocks();
  const auto& B = b.blocks();
  int e = 0;
  int tail = 0;
  for (const auto& blk : A) tail += blk.x - blk.y;
  size_t j = 0;
  for (const auto& blk : B) {
    while (j < A.size() && A[j].site < blk.site) {
      tail -= A[j].x - A[j].y;
      ++j;
    }
    int above = tail;
    if (j < A.size() && A[j].site == blk.site) {
      above -= A[j].x - A[j].y;
      e += A[j].y * blk.x;
    }
    e -= (blk.x - blk.y) * above;
  }
  return e;
}

std::string LatticeMonomial::to_string() const {
  if (blocks_.empty()) return "1";
  std::string out;
  auto put = [&](char g, int site, int p) {
    if (p == 0) return;
    if (!out.empty()) out += ' ';
    out += g;
    out += std::to_string(site);
    out += '^';
    out += std::to_string(p);
  };
  for (const auto& b : blocks_) {
    put('x', b.site, b.x);
    put('y', b.site, b.y);
  }
  return out;
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ParseError("bad integer in '" + std::string(whole) + "'");
  return v;
}

}  // namespace

LatticeMonomial LatticeMonomial::parse(std::string_view text) {
  if (text == "1") return {};
  std::vector<Block> blocks;
  std::string last;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    size_t caret = tok.find('^');
    if (tok.size() < 4 || (tok[0] != 'x' && tok[0] != 'y') || caret == std::string_view::npos)
      throw ParseError("bad monomial token '" + std::string(tok) + "'");
    int site = parse_int(tok.substr(1, caret - 1), text);
    int p = parse_int(tok.substr(caret + 1), text);
    if (p == 0) throw ParseError("zero exponent in '" + std::string(text) + "'");
    if (tok[0] == 'x') {
      if (!blocks.empty() && blocks.back().site >= site) throw ParseError("non-canonical order");
      blocks.push_back({site, p, 0});
    } else {
      if (!blocks.empty() && blocks.back().site == site && blocks.back().y == 0) {
        blocks.back().y = p;
      } else {
        if (!blocks.empty() && blocks.back().site >= site) throw ParseError("non-canonical order");
        blocks.push_back({site, 0, p});
      }
    }
    pos = end + 1;
  }
  return LatticeMonomial(std::move(blocks));
}

AqElement::AqElement(long c) {
  if (c != 0) terms_.emplace(LatticeMonomial(), QLaurent(c));
}

AqElement::AqElement(const QLaurent& c) {
  if (!c.is_zero()) terms_.emplace(LatticeMonomial(), c);
}

AqElement::AqElement(const LatticeMonomial& m, const QLaurent& c) {
  if (!c.is_zero()) terms_.emplace(m, c);
}

QLaurent AqElement::coeff(const LatticeMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QLaurent() : it->second;
}

bool AqElement::is_unit_monomial() const {
  return terms_.size() == 1 && terms_.begin()->second.is_monomial();
}

std::optional<int> AqElement::min_site() const {
  std::optional<int> r;
  for (const auto& [m, c] : terms_)
    if (!m.is_one()) r = r ? std::min(*r, m.min_site()) : m.min_site();
  return r;
}

std::optional<int> AqElement::max_site() const {
  std::optional<int> r;
  for (const auto& [m, c] : terms_)
    if (!m.is_one()) r = r ? std::max(*r, m.max_site()) : m.max_site();
  return r;
}

AqElement AqElement::operator-() const {
  AqElement r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

void AqElement::add_term(const LatticeMonomial& m, const QLaurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AqElement& AqElement::operator+=(const AqElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AqElement& AqElement::operator-=(const AqElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

void AqElement::add_product(const AqElement& a, const AqElement& b, const QLaurent& c) {
  if (c.is_zero()) return;
  for (const auto& [ma, ca] : a.terms_) {
    QLaurent cac = c.is_monomial() && c.terms()[0].second == 1 ? ca.shifted(c.terms()[0].first) : ca * c;
    for (const auto& [mb, cb] : b.terms_) {
      int e = exchange_exponent(ma, mb);
      auto [it, inserted] = terms_.try_emplace(ma + mb);
      it->second.add_scaled(cac, cb, 4 * e);
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
}

AqElement operator*(const AqElement& a, const AqElement& b) {
  AqElement r;
  r.add_product(a, b);
  return r;
}

AqElement operator*(const QLaurent& c, const AqElement& a) {
  AqElement r;
  if (c.is_zero()) return r;
  for (const auto& [m, x] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), m, c * x);
  return r;
}

AqElement AqElement::transform_coefficients(const std::function<QLaurent(const QLaurent&)>& f) const {
  AqElement r;
  for (const auto& [m, c] : terms_) r.add_term(m, f(c));
  return r;
}

std::string AqElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += '\n';
    out += m.to_string();
    out += ": ";
    out += c.to_string();
  }
  return out;
}

AqElement AqElement::parse(std::string_view text) {
  AqElement r;
  if (text == "0") return r;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    size_t colon = line.find(": ");
    if (colon == std::string_view::npos) throw ParseError("missing ': ' in '" + std::string(line) + "'");
    LatticeMonomial m = LatticeMonomial::parse(line.substr(0, colon));
    QLaurent c = QLaurent::parse(line.substr(colon + 2));
    if (c.is_zero() || r.terms_.count(m) != 0) throw ParseError("non-canonical term '" + std::string(line) + "'");
    r.terms_.emplace(std::move(m), std::move(c));
    pos = end + 1;
  }
  return r;
}

AqElement multiply(const AqElement& a, const AqElement& b) { return a * b; }

AqElement power(const AqElement& a, int k) {
  if (k < 0) return power(unit_inverse(a), -k);
  AqElement r(1);
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

AqElement commutator(const AqElement& a, const AqElement& b) { return a * b - b * a; }

namespace {

template <class F>
Grade grade_of(const AqElement& a, F f) {
  Grade g;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    int d = f(m);
    if (first) {
      g.value = d;
      first = false;
    } else if (d != g.value) {
      return Grade{true, 0};
    }
  }
  return g;
}

// Product of a word of monomials, tracking the q-power.
struct WordProduct {
  LatticeMonomial m;
  int e = 0;
  void mul(const LatticeMonomial& f) {
    e += exchange_exponent(m, f);
    m = m + f;
  }
};

}  // namespace

Grade degree(const AqElement& a) {
  return grade_of(a, [](const LatticeMonomial& m) { return m.degree(); });
}

Grade principal_degree(const AqElement& a) {
  return grade_of(a, [](const LatticeMonomial& m) { return m.principal_degree(); });
}

AqElement monomial_inverse(const LatticeMonomial& m) {
  LatticeMonomial n = m.negated();
  return AqElement(n, QLaurent::q_power(-exchange_exponent(m, n)));
}

AqElement unit_inverse(const AqElement& a) {
  if (!a.is_unit_monomial()) throw NotInvertibleLeadingTerm(a.to_string());
  const auto& [m, c] = *a.terms().begin();
  const auto& [e, k] = c.terms()[0];
  return QLaurent::s_power(-e, 1 / k) * monomial_inverse(m);
}

AqElement translate(const AqElement& a, int k) {
  AqElement r;
  for (const auto& [m, c] : a.terms()) r.add_term(m.translated(k), c);
  return r;
}

AqElement half_translate(const AqElement& a) {
  AqElement r;
  for (const auto& [m, c] : a.terms()) {
    WordProduct w;
    for (const auto& b : m.blocks()) {
      if (b.x != 0) w.mul(LatticeMonomial::y(b.site, b.x));
      if (b.y != 0) w.mul(LatticeMonomial::x(b.site + 1, b.y));
    }
    r.add_term(w.m, c.shifted(4 * w.e));
  }
  return r;
}

AqElement phi_involution(const AqElement& a) {
  AqElement r;
  for (const auto& [m, c] : a.terms()) {
    WordProduct w;
    const auto& bl = m.blocks();
    for (auto it = bl.rbegin(); it != bl.rend(); ++it) {
      if (it->y != 0) w.mul(LatticeMonomial::x(1 - it->site, it->y));
      if (it->x != 0) w.mul(LatticeMonomial::y(1 - it->site, it->x));
    }
    r.add_term(w.m, c.shifted(4 * w.e));
  }
  return r;
}

AqElement e_gen(int k) {
  // k = 2i-1 -> (x_i y_i)^{-1}; k = 2i -> (y_i x_{i+1})^{-1}
  if (k % 2 != 0) {
    int i = (k + 1) / 2;
    return power(AqElement::x(i) * AqElement::y(i), -1);
  }
  int i = k / 2;
  return power(AqElement::y(i) * AqElement::x(i + 1), -1);
}

AqElement screening_window(Sign sign, int n) {
  AqElement r;
  for (int i = 1; i <= n; ++i) r += sign == Sign::Plus ? AqElement::x(i) : AqElement::y(i);
  return r;
}

bool serre_check(const AqElement& a, const AqElement& b) {
  AqElement a2 = a * a;
  AqElement a3 = a2 * a;
  QLaurent qq = QLaurent::q_power(1) + QLaurent(1) + QLaurent::q_power(-1);
  AqElement lhs = a3 * b - qq * (a2 * b * a - a * b * a2) - b * a3;
  return lhs.is_zero();
}

AqElement specialize_q1(const AqElement& a) {
  return a.transform_coefficients([](const QLaurent& c) { return QLaurent(qsg::specialize_q1(c)); });
}

}  // namespace qsg
