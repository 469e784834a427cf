#pragma once

#include <map>
#include <string>
#include <vector>

#include "wallcross/classes.hpp"
#include "wallcross/rational.hpp"

namespace wallcross {

// Ordered word in the formal generators epsilon^(class); the free associative
// model of the Ringel-Hall product.
using HallWord = std::vector<NumClass>;

// Finite exact-rational linear combination of Hall words. Zero coefficients
// are never stored, so equality is structural.
class HallElement {
 public:
  HallElement() = default;
  static HallElement generator(NumClass c);
  static HallElement word(HallWord w, Rational coeff = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<HallWord, Rational>& terms() const { return terms_; }
  Rational coefficient(const HallWord& w) const;

  HallElement& operator+=(const HallElement& o);
  HallElement& operator-=(const HallElement& o);
  HallElement& operator*=(const Rational& s);

  friend HallElement operator+(HallElement a, const HallElement& b) { return a += b; }
  friend HallElement operator-(HallElement a, const HallElement& b) { return a -= b; }
  friend HallElement operator*(const Rational& s, HallElement a) { return a *= s; }

  friend bool operator==(const HallElement& a, const HallElement& b) = default;

  // Every stored word has this total class; throws std::logic_error when the
  // element mixes gradings, returns false when the element is zero.
  bool graded_class(NumClass& out) const;

  std::string to_string() const;  // "c · ε^(β,d) ∗ ε^(β',d') + ..."

 private:
  void add_term(const HallWord& w, const Rational& coeff);

  std::map<HallWord, Rational> terms_;
};

// Bilinear extension of word concatenation.
HallElement hall_mul(const HallElement& x, const HallElement& y);

// Commutator x*y - y*x.
HallElement hall_bracket(const HallElement& x, const HallElement& y);

// The U-weighted flat assembly of epsilon^(sum parts, d)(tau_tilde) for one
// ordering of the parts: all (0,d)-insertions (d = 1: one (0,1); d = 2: one
// (0,2) plus every two-(0,1) placement), each word weighted by u_coefficient.
// `lattice_rank` fixes the rank of the zero class; parts must be nonzero
// effective of that rank; d must be 1 or 2.
HallElement assemble_epsilon_flat(int d, const std::vector<ChernClass>& parts, int lattice_rank);

// The nested-commutator form for one ordering of the parts:
//   (-1)^l / l! * [[...[[eps^(0,d), eps^(p1,0)], eps^(p2,0)], ...], eps^(pl,0)]
HallElement assemble_epsilon_nested(int d, const std::vector<ChernClass>& parts, int lattice_rank);

struct FlatNestedReport {
  HallElement flat_sum;     // flat assembly summed over distinct orderings
  HallElement nested_sum;   // nested assembly summed over distinct orderings
  HallElement difference;   // flat_sum - nested_sum, emitted verbatim
  bool identical = false;
  int orderings = 0;
};

// Compares the two assemblies summed over all distinct orderings of the given
// parts multiset.
FlatNestedReport compare_flat_nested(int d, std::vector<ChernClass> parts, int lattice_rank);

}  // namespace wallcross
