#include "wallcross/stackcalc.hpp"

namespace wallcross {

const char* stack_symbol_name(StackSymbol s) {
  switch (s) {
    case StackSymbol::PtGL2:
      return "[pt/GL2]";
    case StackSymbol::PtGm2:
      return "[pt/Gm^2]";
    case StackSymbol::PtGm:
      return "[pt/Gm]";
    case StackSymbol::PtA1Gm2:
      return "[pt/(A1x|Gm^2)]";
  }
  return "?";
}

StackFnElement StackFnElement::symbol(StackSymbol s, Rational coeff) {
  StackFnElement e;
  e.add_term(s, coeff);
  return e;
}

Rational StackFnElement::coefficient(StackSymbol s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

void StackFnElement::add_term(StackSymbol s, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(s, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

StackFnElement& StackFnElement::operator+=(const StackFnElement& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

StackFnElement& StackFnElement::operator-=(const StackFnElement& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

StackFnElement& StackFnElement::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [sym, c] : terms_) c *= s;
  return *this;
}

bool StackFnElement::in_normal_form() const {
  for (const auto& [s, c] : terms_)
    if (s == StackSymbol::PtGL2 || s == StackSymbol::PtA1Gm2) return false;
  return true;
}

std::string StackFnElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += c.to_string();
    out += "·";
    out += stack_symbol_name(s);
  }
  return out;
}

StackFnElement split_gl2() {
  // F(GL2, Gm^2, Gm^2) = 1/2 and F(GL2, Gm^2, Gm) = -3/4
  StackFnElement e = StackFnElement::symbol(StackSymbol::PtGm2, Rational(BigInt(1), BigInt(2)));
  e += StackFnElement::symbol(StackSymbol::PtGm, Rational(BigInt(-3), BigInt(4)));
  return e;
}

StackFnElement product_e01_e01() {
  StackFnElement e = StackFnElement::symbol(StackSymbol::PtGm, Rational(-1));
  e += StackFnElement::symbol(StackSymbol::PtGm2, Rational(1));
  return e;
}

StackFnElement normal_form(const StackFnElement& e) {
  StackFnElement out;
  for (const auto& [s, c] : e.terms()) {
    switch (s) {
      case StackSymbol::PtGL2:
        out += c * split_gl2();
        break;
      case StackSymbol::PtA1Gm2:
        out += c * product_e01_e01();
        break;
      default:
        out += StackFnElement::symbol(s, c);
    }
  }
  return out;
}

StackFnElement epsilon_02_normal_form() {
  StackFnElement e = split_gl2();
  e -= Rational(BigInt(1), BigInt(2)) * product_e01_e01();
  return normal_form(e);
}

Rational psi_epsilon_02_coefficient() {
  // single point with Behrend multiplicity -1, relative dimension 3 over the
  // GL2 quotient, and the -1/4 [pt/Gm] normal form
  const Rational coeff = epsilon_02_normal_form().coefficient(StackSymbol::PtGm);
  return Rational(parity_sign(1)) * Rational(parity_sign(3)) * coeff;
}

LieElement psi_constant_image_02(int lattice_rank) {
  return LieElement::generator(NumClass::point(lattice_rank, 2), psi_epsilon_02_coefficient());
}

Rational psi_delta_02_coefficient() { return Rational(1); }

std::string psi_images_tension_note() {
  return "psi(delta^(0,2)) = 1 and psi(eps^(0,2)) = -1/4 are stored as independent cited "
         "constants: with delta^(0,2) = 1/2[pt/Gm^2] - 3/4[pt/Gm] and eps^(0,2) = -1/4[pt/Gm], "
         "no single linear evaluation of {[pt/Gm],[pt/Gm^2]} reproduces both values; the "
         "morphism is only defined on virtual indecomposables.";
}

}  // namespace wallcross
