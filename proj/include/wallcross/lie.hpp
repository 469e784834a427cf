#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "wallcross/classes.hpp"
#include "wallcross/rational.hpp"

namespace wallcross {

// Antisymmetric integer pairing chi_bar on numerical classes. Two modes:
//   GeometricLinear: chi((beta,d),(gamma,e)) = d*L(gamma) - e*L(beta) for a
//     user-supplied integer linear functional L on the lattice.
//   ExplicitTable: values stored per ordered pair; the reverse pair is filled
//     by antisymmetry; pairs absent in both orders evaluate to 0.
class EulerPairing {
 public:
  enum class Mode { ExplicitTable, GeometricLinear };

  static EulerPairing geometric_linear(std::vector<std::int64_t> L);
  // Validates antisymmetry on all stored entries (diagonal must be 0) and
  // bi-additivity on every triple fully covered by stored entries. Throws
  // std::invalid_argument naming the offending pair.
  static EulerPairing explicit_table(
      const std::vector<std::tuple<NumClass, NumClass, std::int64_t>>& entries);

  Mode mode() const { return mode_; }
  std::int64_t operator()(const NumClass& x, const NumClass& y) const;

 private:
  EulerPairing() = default;

  Mode mode_ = Mode::GeometricLinear;
  std::vector<std::int64_t> linear_;                    // GeometricLinear
  std::map<std::pair<NumClass, NumClass>, std::int64_t> table_;  // ExplicitTable
};

// The finite class set S gating the Lie bracket: brackets landing outside S
// vanish.
class ClassSet {
 public:
  explicit ClassSet(std::set<NumClass> members) : members_(std::move(members)) {}
  // All (beta', d) with 0 <= beta' <= target coordinate-wise and 0 <= d <=
  // d_max, intersected with C(B_p). Contains every prefix sum of every
  // decomposition of the target into effective parts.
  static ClassSet box(const ChernClass& target, int d_max);

  bool contains(const NumClass& c) const { return members_.count(c) != 0; }
  const std::set<NumClass>& members() const { return members_; }

 private:
  std::set<NumClass> members_;
};

// Finite exact-rational linear combination of generators lambda^(class).
class LieElement {
 public:
  LieElement() = default;
  static LieElement generator(NumClass c, Rational coeff = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  const std::map<NumClass, Rational>& terms() const { return terms_; }
  Rational coefficient(const NumClass& c) const;

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Rational& s);

  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rational& s, LieElement a) { return a *= s; }

  friend bool operator==(const LieElement& a, const LieElement& b) = default;

  std::string to_string() const;  // "c·λ^(β,d) + ..."

 private:
  void add_term(const NumClass& c, const Rational& coeff);

  std::map<NumClass, Rational> terms_;
};

// Bilinear extension of
//   [lambda^x, lambda^y] = (-1)^chi(x,y) * chi(x,y) * lambda^(x+y)
// when x+y lies in S, and 0 otherwise.
LieElement lie_bracket(const LieElement& x, const LieElement& y, const EulerPairing& p,
                       const ClassSet& S);

// Map from a Chern class to its generalized Donaldson-Thomas value. Keys must
// be nonzero effective.
class DTTable {
 public:
  DTTable() = default;
  explicit DTTable(std::map<ChernClass, Rational> entries);

  bool contains(const ChernClass& c) const { return entries_.count(c) != 0; }
  Rational value(const ChernClass& c) const;  // throws if absent
  const std::map<ChernClass, Rational>& entries() const { return entries_; }
  std::vector<ChernClass> support() const;
  bool empty() const { return entries_.empty(); }

 private:
  std::map<ChernClass, Rational> entries_;
};

// Bracket-structured Hall expression over the generators eps^(0,1), eps^(0,2)
// and eps^(beta,0). The morphism to the Lie algebra is only bracket-
// homomorphic, so evaluation takes this tree form, never flat words.
class BracketExpr {
 public:
  static BracketExpr leaf(NumClass generator);
  static BracketExpr bracket(BracketExpr lhs, BracketExpr rhs);
  // [[...[[head, (p1,0)], (p2,0)], ...], (pl,0)]
  static BracketExpr left_nested(NumClass head, std::span<const ChernClass> parts);

  bool is_leaf() const { return gen_.has_value(); }
  const NumClass& generator() const;
  const BracketExpr& lhs() const { return *lhs_; }
  const BracketExpr& rhs() const { return *rhs_; }

 private:
  BracketExpr() = default;

  std::optional<NumClass> gen_;
  std::unique_ptr<BracketExpr> lhs_, rhs_;
};

// Substitutes the generator images
//   eps^(0,1)    -> -lambda^(0,1)
//   eps^(0,2)    -> -1/4 * lambda^(0,2)   (the stack-function reduction)
//   eps^(beta,0) -> -DT(beta) * lambda^(beta,0)
// into the bracket tree and evaluates with lie_bracket. Throws
// std::invalid_argument for a generator with no image.
LieElement psi_apply(const BracketExpr& expr, const DTTable& dt, const EulerPairing& p,
                     const ClassSet& S);

}  // namespace wallcross
