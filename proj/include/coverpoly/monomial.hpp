#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace coverpoly {

using Var = std::size_t;
using Exponent = std::uint32_t;

/// Variable names of a polynomial ring. For cover ideals the ring is the
/// vertex set, with variable index == vertex id.
class Ring {
public:
  Ring() = default;
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Var v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  /// Throws InputError for unknown names.
  Var index(std::string_view name) const;
  bool contains(std::string_view name) const { return index_.count(std::string(name)) != 0; }

  friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Var> index_;
};

/// Dense exponent vector over a ring. Comparison operators are plain
/// vector comparisons (a storage order, not a monomial order).
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, Var v);
  /// Squarefree monomial of a variable set.
  static Monomial squarefree(std::size_t nvars, const std::vector<Var>& vars);

  std::size_t nvars() const { return exps_.size(); }
  Exponent operator[](Var v) const { return exps_[v]; }
  Exponent& operator[](Var v) { return exps_[v]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;
  std::vector<Var> support() const;
  bool support_contains(const std::vector<Var>& vars) const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other);
  /// Exact quotient; throws std::invalid_argument unless `other` divides *this.
  Monomial operator/(const Monomial& other) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// "y1^2*y3*y5" with variables in name order; the unit monomial prints as "1".
std::string format_monomial(const Ring& ring, const Monomial& m);
/// Inverse of format_monomial; repeated variables multiply. Throws InputError.
Monomial parse_monomial(const Ring& ring, std::string_view text);

/// Total order on variables as a rank table: rank 0 is the greatest variable.
class VariableOrder {
public:
  VariableOrder() = default;
  /// `greatest_first` must be a permutation of 0..n-1.
  explicit VariableOrder(std::vector<Var> greatest_first);
  static VariableOrder identity(std::size_t nvars);
  /// Variables ranked by name, smallest name greatest.
  static VariableOrder by_name(const Ring& ring);

  std::size_t size() const { return by_rank_.size(); }
  std::size_t rank(Var v) const { return rank_.at(v); }
  Var at(std::size_t rank) const { return by_rank_.at(rank); }
  const std::vector<Var>& greatest_first() const { return by_rank_; }
  /// a > b in this order.
  bool greater(Var a, Var b) const { return rank_.at(a) < rank_.at(b); }

  /// Lexicographic comparison: the first variable (greatest first) where the
  /// exponents differ decides; a larger exponent is the larger monomial.
  std::strong_ordering lex(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const VariableOrder&, const VariableOrder&) = default;

private:
  std::vector<Var> by_rank_;
  std::vector<std::size_t> rank_;
};

}  // namespace coverpoly
