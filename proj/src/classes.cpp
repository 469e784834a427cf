#include "wallcross/classes.hpp"

#include <algorithm>
#include <stdexcept>

namespace wallcross {

ChernClass::ChernClass(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("ChernClass: lattice rank must be >= 1");
}

ChernClass ChernClass::zero(int rank) {
  if (rank < 1) throw std::invalid_argument("ChernClass: lattice rank must be >= 1");
  return ChernClass(std::vector<std::int64_t>(static_cast<std::size_t>(rank), 0));
}

bool ChernClass::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

bool ChernClass::effective() const {
  bool nonzero = false;
  for (std::int64_t c : coords_) {
    if (c < 0) return false;
    if (c != 0) nonzero = true;
  }
  return nonzero;
}

ChernClass ChernClass::operator+(const ChernClass& o) const {
  ChernClass r(*this);
  r += o;
  return r;
}

ChernClass& ChernClass::operator+=(const ChernClass& o) {
  if (rank() != o.rank())
    throw std::invalid_argument("ChernClass: rank mismatch (" + std::to_string(rank()) + " vs " +
                                std::to_string(o.rank()) + ")");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

bool ChernClass::dominates(const ChernClass& small, const ChernClass& big) {
  if (small.rank() != big.rank())
    throw std::invalid_argument("ChernClass::dominates: rank mismatch");
  for (int i = 0; i < small.rank(); ++i)
    if (small[i] > big[i]) return false;
  return true;
}

std::string ChernClass::to_string() const {
  if (is_zero()) return "0";
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  s += ')';
  return s;
}

NumClass::NumClass(ChernClass b, std::int64_t dd) : beta(std::move(b)), d(dd) {
  if (d < 0) throw std::invalid_argument("NumClass: d must be >= 0");
}

NumClass NumClass::operator+(const NumClass& o) const { return NumClass(beta + o.beta, d + o.d); }

std::string NumClass::to_string() const {
  return "(" + beta.to_string() + "," + std::to_string(d) + ")";
}

bool in_positive_cone(const NumClass& c) {
  if (c.beta.effective()) return c.d >= 0;
  return c.beta.is_zero() && c.d > 0;
}

int stability_value(StabCondition cond, const NumClass& c) {
  if (!in_positive_cone(c))
    throw std::domain_error("stability_value: class " + c.to_string() + " outside C(B_p)");
  switch (cond) {
    case StabCondition::TauBullet:
      return c.d == 0 ? 0 : -1;
    case StabCondition::TauTilde:
      return c.d == 0 ? 0 : 1;
    case StabCondition::TauN:
      return 0;
  }
  throw std::logic_error("stability_value: bad condition tag");
}

const char* stab_condition_name(StabCondition cond) {
  switch (cond) {
    case StabCondition::TauBullet:
      return "tau_bullet";
    case StabCondition::TauTilde:
      return "tau_tilde";
    case StabCondition::TauN:
      return "tau_n";
  }
  return "?";
}

}  // namespace wallcross
