#include "wallcross/lie.hpp"

#include <stdexcept>

#include "wallcross/stackcalc.hpp"

namespace wallcross {

EulerPairing EulerPairing::geometric_linear(std::vector<std::int64_t> L) {
  if (L.empty()) throw std::invalid_argument("EulerPairing: empty L vector");
  EulerPairing p;
  p.mode_ = Mode::GeometricLinear;
  p.linear_ = std::move(L);
  return p;
}

EulerPairing EulerPairing::explicit_table(
    const std::vector<std::tuple<NumClass, NumClass, std::int64_t>>& entries) {
  EulerPairing p;
  p.mode_ = Mode::ExplicitTable;
  for (const auto& [x, y, v] : entries) {
    auto key = std::make_pair(x, y);
    auto it = p.table_.find(key);
    if (it != p.table_.end() && it->second != v)
      throw std::invalid_argument("pairing antisymmetry violated at (" + x.to_string() + "," +
                                  y.to_string() + "): conflicting entries");
    p.table_[key] = v;
    auto rkey = std::make_pair(y, x);
    auto rit = p.table_.find(rkey);
    if (rit != p.table_.end()) {
      if (rit->second != -v)
        throw std::invalid_argument("pairing antisymmetry violated at (" + x.to_string() + "," +
                                    y.to_string() + ")");
    } else {
      p.table_[rkey] = -v;
    }
  }
  for (const auto& [key, v] : p.table_) {
    if (key.first == key.second && v != 0)
      throw std::invalid_argument("pairing antisymmetry violated at (" + key.first.to_string() +
                                  "," + key.second.to_string() + "): nonzero diagonal");
  }
  // bi-additivity on triples fully covered by stored entries, grouped by the
  // second argument
  std::map<NumClass, std::map<NumClass, std::int64_t>> by_y;
  for (const auto& [key, v] : p.table_) by_y[key.second][key.first] = v;
  for (const auto& [y, group] : by_y) {
    for (const auto& [x1, v1] : group) {
      for (const auto& [x2, v2] : group) {
        if (x1.rank() != x2.rank()) continue;
        auto it = group.find(x1 + x2);
        if (it != group.end() && it->second != v1 + v2)
          throw std::invalid_argument("pairing bi-additivity violated at (" +
                                      (x1 + x2).to_string() + "," + y.to_string() + ")");
      }
    }
  }
  return p;
}

std::int64_t EulerPairing::operator()(const NumClass& x, const NumClass& y) const {
  if (mode_ == Mode::GeometricLinear) {
    if (x.rank() != static_cast<int>(linear_.size()) || y.rank() != x.rank())
      throw std::invalid_argument("EulerPairing: rank mismatch with L vector");
    std::int64_t lx = 0, ly = 0;
    for (int i = 0; i < x.rank(); ++i) {
      lx += linear_[static_cast<std::size_t>(i)] * x.beta[i];
      ly += linear_[static_cast<std::size_t>(i)] * y.beta[i];
    }
    return x.d * ly - y.d * lx;
  }
  auto it = table_.find(std::make_pair(x, y));
  return it == table_.end() ? 0 : it->second;
}

ClassSet ClassSet::box(const ChernClass& target, int d_max) {
  if (d_max < 0) throw std::invalid_argument("ClassSet::box: d_max must be >= 0");
  std::set<NumClass> members;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(target.rank()), 0);
  // enumerate the integer box 0 <= beta' <= target
  while (true) {
    ChernClass beta(cur);
    for (int d = 0; d <= d_max; ++d) {
      NumClass c(beta, d);
      if (in_positive_cone(c)) members.insert(std::move(c));
    }
    int i = 0;
    for (; i < target.rank(); ++i) {
      if (cur[static_cast<std::size_t>(i)] < target[i]) {
        ++cur[static_cast<std::size_t>(i)];
        break;
      }
      cur[static_cast<std::size_t>(i)] = 0;
    }
    if (i == target.rank()) break;
  }
  return ClassSet(std::move(members));
}

LieElement LieElement::generator(NumClass c, Rational coeff) {
  LieElement e;
  e.add_term(c, coeff);
  return e;
}

Rational LieElement::coefficient(const NumClass& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LieElement::add_term(const NumClass& c, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(c, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LieElement& LieElement::operator+=(const LieElement& o) {
  for (const auto& [c, v] : o.terms_) add_term(c, v);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  for (const auto& [c, v] : o.terms_) add_term(c, -v);
  return *this;
}

LieElement& LieElement::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [c, v] : terms_) v *= s;
  return *this;
}

std::string LieElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [c, v] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += v.to_string() + "·λ^" + c.to_string();
  }
  return s;
}

LieElement lie_bracket(const LieElement& x, const LieElement& y, const EulerPairing& p,
                       const ClassSet& S) {
  LieElement out;
  for (const auto& [cx, vx] : x.terms()) {
    for (const auto& [cy, vy] : y.terms()) {
      const std::int64_t chi = p(cx, cy);
      if (chi == 0) continue;
      NumClass sum = cx + cy;
      if (!S.contains(sum)) continue;
      out += LieElement::generator(std::move(sum),
                                   vx * vy * Rational(BigInt(parity_sign(chi) * chi)));
    }
  }
  return out;
}

DTTable::DTTable(std::map<ChernClass, Rational> entries) : entries_(std::move(entries)) {
  for (const auto& [c, v] : entries_)
    if (!c.effective())
      throw std::invalid_argument("DTTable: key " + c.to_string() + " is not nonzero effective");
}

Rational DTTable::value(const ChernClass& c) const {
  auto it = entries_.find(c);
  if (it == entries_.end())
    throw std::invalid_argument("DTTable: no DT value for class " + c.to_string());
  return it->second;
}

std::vector<ChernClass> DTTable::support() const {
  std::vector<ChernClass> out;
  out.reserve(entries_.size());
  for (const auto& [c, v] : entries_) out.push_back(c);
  return out;
}

BracketExpr BracketExpr::leaf(NumClass generator) {
  BracketExpr e;
  e.gen_ = std::move(generator);
  return e;
}

BracketExpr BracketExpr::bracket(BracketExpr lhs, BracketExpr rhs) {
  BracketExpr e;
  e.lhs_ = std::make_unique<BracketExpr>(std::move(lhs));
  e.rhs_ = std::make_unique<BracketExpr>(std::move(rhs));
  return e;
}

BracketExpr BracketExpr::left_nested(NumClass head, std::span<const ChernClass> parts) {
  BracketExpr e = leaf(std::move(head));
  for (const auto& p : parts) e = bracket(std::move(e), leaf(NumClass::sheaf(p)));
  return e;
}

const NumClass& BracketExpr::generator() const {
  if (!gen_) throw std::logic_error("BracketExpr::generator on a bracket node");
  return *gen_;
}

namespace {

LieElement generator_image(const NumClass& g, const DTTable& dt) {
  if (g.beta.is_zero()) {
    if (g.d == 1) return LieElement::generator(g, Rational(-1));
    if (g.d == 2) return LieElement::generator(g, psi_epsilon_02_coefficient());
    throw std::invalid_argument("psi_apply: no image for generator " + g.to_string());
  }
  if (g.d == 0) {
    if (!dt.contains(g.beta))
      throw std::invalid_argument("psi_apply: generator " + g.to_string() +
                                  " has no DT value in the table");
    return LieElement::generator(g, -dt.value(g.beta));
  }
  throw std::invalid_argument("psi_apply: no image for generator " + g.to_string());
}

}  // namespace

LieElement psi_apply(const BracketExpr& expr, const DTTable& dt, const EulerPairing& p,
                     const ClassSet& S) {
  if (expr.is_leaf()) return generator_image(expr.generator(), dt);
  return lie_bracket(psi_apply(expr.lhs(), dt, p, S), psi_apply(expr.rhs(), dt, p, S), p, S);
}

}  // namespace wallcross
