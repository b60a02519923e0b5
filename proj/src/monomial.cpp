#include "coverpoly/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "coverpoly/errors.hpp"

namespace coverpoly {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  for (Var v = 0; v < names_.size(); ++v)
    if (!index_.emplace(names_[v], v).second) throw InputError("duplicate variable '" + names_[v] + "'");
}

Var Ring::index(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw InputError("unknown variable '" + std::string(name) + "'");
  return it->second;
}

Monomial Monomial::variable(std::size_t nvars, Var v) {
  Monomial m(nvars);
  m.exps_.at(v) = 1;
  return m;
}

Monomial Monomial::squarefree(std::size_t nvars, const std::vector<Var>& vars) {
  Monomial m(nvars);
  for (Var v : vars) m.exps_.at(v) = 1;
  return m;
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::vector<Var> Monomial::support() const {
  std::vector<Var> out;
  for (Var v = 0; v < exps_.size(); ++v)
    if (exps_[v] > 0) out.push_back(v);
  return out;
}

bool Monomial::support_contains(const std::vector<Var>& vars) const {
  return std::all_of(vars.begin(), vars.end(), [&](Var v) { return exps_[v] > 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  r *= other;
  return r;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
  return *this;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) throw std::invalid_argument("monomial quotient is not exact");
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Exponent e : m.exponents()) {
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string format_monomial(const Ring& ring, const Monomial& m) {
  std::vector<Var> vars = m.support();
  std::sort(vars.begin(), vars.end(), [&](Var a, Var b) { return ring.name(a) < ring.name(b); });
  std::string out;
  for (Var v : vars) {
    if (!out.empty()) out += '*';
    out += ring.name(v);
    if (m[v] > 1) out += '^' + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(const Ring& ring, std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  Monomial m(ring.size());
  text = trim(text);
  if (text.empty()) throw InputError("empty monomial");
  if (text == "1") return m;
  while (true) {
    auto star = text.find('*');
    std::string_view factor = trim(text.substr(0, star));
    std::string_view name = factor;
    Exponent e = 1;
    if (auto caret = factor.find('^'); caret != std::string_view::npos) {
      name = trim(factor.substr(0, caret));
      auto digits = trim(factor.substr(caret + 1));
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
      if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
        throw InputError("bad exponent in '" + std::string(factor) + "'");
    }
    if (name.empty()) throw InputError("missing variable in monomial");
    m[ring.index(name)] += e;
    if (star == std::string_view::npos) break;
    text = text.substr(star + 1);
  }
  return m;
}

VariableOrder::VariableOrder(std::vector<Var> greatest_first) : by_rank_(std::move(greatest_first)) {
  rank_.assign(by_rank_.size(), by_rank_.size());
  for (std::size_t r = 0; r < by_rank_.size(); ++r) {
    Var v = by_rank_[r];
    if (v >= by_rank_.size() || rank_[v] != by_rank_.size()) throw std::invalid_argument("variable order is not a permutation");
    rank_[v] = r;
  }
}

VariableOrder VariableOrder::identity(std::size_t nvars) {
  std::vector<Var> vs(nvars);
  std::iota(vs.begin(), vs.end(), Var{0});
  return VariableOrder(std::move(vs));
}

VariableOrder VariableOrder::by_name(const Ring& ring) {
  std::vector<Var> vs(ring.size());
  std::iota(vs.begin(), vs.end(), Var{0});
  std::sort(vs.begin(), vs.end(), [&](Var a, Var b) { return ring.name(a) < ring.name(b); });
  return VariableOrder(std::move(vs));
}

std::strong_ordering VariableOrder::lex(const Monomial& a, const Monomial& b) const {
  for (Var v : by_rank_) {
    if (a[v] != b[v]) return a[v] <=> b[v];
  }
  return std::strong_ordering::equal;
}

}  // namespace coverpoly
