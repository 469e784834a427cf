#pragma once

#include <map>
#include <string>

#include "wallcross/lie.hpp"
#include "wallcross/rational.hpp"

namespace wallcross {

// The four quotient-stack symbols the rank-2 reduction needs. PtGm and PtGm2
// are normal forms; PtGL2 and PtA1Gm2 rewrite into them.
enum class StackSymbol { PtGL2, PtGm2, PtGm, PtA1Gm2 };

const char* stack_symbol_name(StackSymbol s);  // "[pt/GL2]", "[pt/Gm^2]", ...

class StackFnElement {
 public:
  StackFnElement() = default;
  static StackFnElement symbol(StackSymbol s, Rational coeff = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  const std::map<StackSymbol, Rational>& terms() const { return terms_; }
  Rational coefficient(StackSymbol s) const;

  StackFnElement& operator+=(const StackFnElement& o);
  StackFnElement& operator-=(const StackFnElement& o);
  StackFnElement& operator*=(const Rational& s);

  friend StackFnElement operator+(StackFnElement a, const StackFnElement& b) { return a += b; }
  friend StackFnElement operator-(StackFnElement a, const StackFnElement& b) { return a -= b; }
  friend StackFnElement operator*(const Rational& s, StackFnElement a) { return a *= s; }

  friend bool operator==(const StackFnElement& a, const StackFnElement& b) = default;

  bool in_normal_form() const;  // only PtGm / PtGm2 present

  std::string to_string() const;  // "c·[pt/G] + ..."

 private:
  void add_term(StackSymbol s, const Rational& coeff);

  std::map<StackSymbol, Rational> terms_;
};

// Applies the two rewrite rules (PtGL2 and PtA1Gm2 into normal-form symbols)
// until none is left. Idempotent.
StackFnElement normal_form(const StackFnElement& e);

// Torus splitting of delta^(0,2)(tau_bullet) = [pt/GL2]:
//   1/2 [pt/Gm^2] - 3/4 [pt/Gm]
// with the two F(GL2, Gm^2, -) values as cited constants.
StackFnElement split_gl2();

// eps^(0,1)(tau_bullet) * eps^(0,1)(tau_bullet) = [pt/(A^1 x| Gm^2)], in
// normal form: -[pt/Gm] + [pt/Gm^2].
StackFnElement product_e01_e01();

// eps^(0,2)(tau_bullet) = split_gl2() - 1/2 * product_e01_e01(), normalized.
// Equals -1/4 [pt/Gm]; the [pt/Gm^2] parts cancel.
StackFnElement epsilon_02_normal_form();

// The constant image of eps^(0,2)(tau_bullet) under the Lie morphism:
// (point sign -1) * (relative-dimension sign (-1)^3) * (-1/4) = -1/4.
Rational psi_epsilon_02_coefficient();

// -1/4 * lambda^(0,2) at the given lattice rank.
LieElement psi_constant_image_02(int lattice_rank);

// Cited constant: the image of delta^(0,2)(tau_bullet) is +1 * lambda^(0,2).
// Stored as an axiom, not derived; see psi_images_tension_note().
Rational psi_delta_02_coefficient();

// One-line statement of why the two psi constants cannot both come from a
// single linear evaluation of the normal-form symbols. Surfaced in reports.
std::string psi_images_tension_note();

}  // namespace wallcross
