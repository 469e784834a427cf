#include "wallcross/hall.hpp"

#include <algorithm>
#include <stdexcept>

#include "wallcross/coefficients.hpp"

namespace wallcross {

HallElement HallElement::generator(NumClass c) { return word(HallWord{std::move(c)}); }

HallElement HallElement::word(HallWord w, Rational coeff) {
  if (w.empty()) throw std::invalid_argument("HallElement::word: empty word");
  HallElement e;
  e.add_term(w, coeff);
  return e;
}

Rational HallElement::coefficient(const HallWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HallElement::add_term(const HallWord& w, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HallElement& HallElement::operator+=(const HallElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

HallElement& HallElement::operator-=(const HallElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

HallElement& HallElement::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

bool HallElement::graded_class(NumClass& out) const {
  if (terms_.empty()) return false;
  bool have = false;
  for (const auto& [w, c] : terms_) {
    NumClass cls = w.front();
    for (std::size_t i = 1; i < w.size(); ++i) cls = cls + w[i];
    if (!have) {
      out = cls;
      have = true;
    } else if (!(cls == out)) {
      throw std::logic_error("HallElement::graded_class: mixed gradings");
    }
  }
  return true;
}

std::string HallElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += c.to_string();
    for (const auto& letter : w) {
      s += &letter == &w.front() ? " · " : " ∗ ";
      s += "ε^" + letter.to_string();
    }
  }
  return s;
}

HallElement hall_mul(const HallElement& x, const HallElement& y) {
  HallElement out;
  for (const auto& [wx, cx] : x.terms()) {
    for (const auto& [wy, cy] : y.terms()) {
      HallWord w = wx;
      w.insert(w.end(), wy.begin(), wy.end());
      out += HallElement::word(std::move(w), cx * cy);
    }
  }
  return out;
}

HallElement hall_bracket(const HallElement& x, const HallElement& y) {
  return hall_mul(x, y) - hall_mul(y, x);
}

namespace {

void check_assembly_args(int d, const std::vector<ChernClass>& parts, int lattice_rank) {
  if (d != 1 && d != 2)
    throw std::invalid_argument("assemble_epsilon: d must be 1 or 2, got " + std::to_string(d));
  if (lattice_rank < 1) throw std::invalid_argument("assemble_epsilon: lattice rank must be >= 1");
  for (const auto& p : parts) {
    if (p.rank() != lattice_rank)
      throw std::invalid_argument("assemble_epsilon: part rank mismatch");
    if (!p.effective())
      throw std::invalid_argument("assemble_epsilon: part " + p.to_string() +
                                  " is not nonzero effective");
  }
}

HallWord sequence_to_word(const std::vector<NumClass>& seq) { return seq; }

}  // namespace

HallElement assemble_epsilon_flat(int d, const std::vector<ChernClass>& parts, int lattice_rank) {
  check_assembly_args(d, parts, lattice_rank);
  const int l = static_cast<int>(parts.size());
  HallElement out;

  if (d == 1) {
    for (int pos = 0; pos <= l; ++pos) {
      std::vector<NumClass> seq;
      for (int i = 0; i < pos; ++i) seq.push_back(NumClass::sheaf(parts[static_cast<std::size_t>(i)]));
      seq.push_back(NumClass::point(lattice_rank, 1));
      for (int i = pos; i < l; ++i) seq.push_back(NumClass::sheaf(parts[static_cast<std::size_t>(i)]));
      Rational u = u_coefficient(seq);
      if (!u.is_zero()) out += HallElement::word(sequence_to_word(seq), u);
    }
    return out;
  }

  // d = 2: one (0,2) insertion ...
  for (int pos = 0; pos <= l; ++pos) {
    std::vector<NumClass> seq;
    for (int i = 0; i < pos; ++i) seq.push_back(NumClass::sheaf(parts[static_cast<std::size_t>(i)]));
    seq.push_back(NumClass::point(lattice_rank, 2));
    for (int i = pos; i < l; ++i) seq.push_back(NumClass::sheaf(parts[static_cast<std::size_t>(i)]));
    Rational u = u_coefficient(seq);
    if (!u.is_zero()) out += HallElement::word(sequence_to_word(seq), u);
  }
  // ... plus every placement of two (0,1) letters
  for (int pos1 = 0; pos1 <= l; ++pos1) {
    for (int pos2 = pos1; pos2 <= l; ++pos2) {
      std::vector<NumClass> seq;
      for (int i = 0; i < l; ++i) {
        if (i == pos1) seq.push_back(NumClass::point(lattice_rank, 1));
        if (i == pos2) seq.push_back(NumClass::point(lattice_rank, 1));
        seq.push_back(NumClass::sheaf(parts[static_cast<std::size_t>(i)]));
      }
      if (pos1 == l) seq.push_back(NumClass::point(lattice_rank, 1));
      if (pos2 == l) seq.push_back(NumClass::point(lattice_rank, 1));
      Rational u = u_coefficient(seq);
      if (!u.is_zero()) out += HallElement::word(sequence_to_word(seq), u);
    }
  }
  return out;
}

HallElement assemble_epsilon_nested(int d, const std::vector<ChernClass>& parts,
                                    int lattice_rank) {
  check_assembly_args(d, parts, lattice_rank);
  const int l = static_cast<int>(parts.size());
  HallElement acc = HallElement::generator(NumClass::point(lattice_rank, d));
  for (const auto& p : parts)
    acc = hall_bracket(acc, HallElement::generator(NumClass::sheaf(p)));
  acc *= Rational(BigInt(parity_sign(l)), factorial(l));
  return acc;
}

FlatNestedReport compare_flat_nested(int d, std::vector<ChernClass> parts, int lattice_rank) {
  std::sort(parts.begin(), parts.end());
  FlatNestedReport report;
  do {
    report.flat_sum += assemble_epsilon_flat(d, parts, lattice_rank);
    report.nested_sum += assemble_epsilon_nested(d, parts, lattice_rank);
    ++report.orderings;
  } while (std::next_permutation(parts.begin(), parts.end()));
  report.difference = report.flat_sum - report.nested_sum;
  report.identical = report.difference.is_zero();
  return report;
}

}  // namespace wallcross
