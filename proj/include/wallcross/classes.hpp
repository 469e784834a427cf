#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace wallcross {

// Integer vector in the rank-k K-theory lattice. The rank is a run-level
// configuration constant carried by each value; mixing ranks is an error.
class ChernClass {
 public:
  explicit ChernClass(std::vector<std::int64_t> coords);
  static ChernClass zero(int rank);

  int rank() const { return static_cast<int>(coords_.size()); }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  std::int64_t operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  // effective(beta) <=> beta != 0 and every coordinate >= 0
  bool effective() const;

  ChernClass operator+(const ChernClass& o) const;  // throws on rank mismatch
  ChernClass& operator+=(const ChernClass& o);

  friend bool operator==(const ChernClass& a, const ChernClass& b) = default;
  friend std::strong_ordering operator<=>(const ChernClass& a, const ChernClass& b) {
    return a.coords_ <=> b.coords_;
  }

  // coordinate-wise a <= b (defined only for equal ranks)
  static bool dominates(const ChernClass& small, const ChernClass& big);

  std::string to_string() const;  // "(c1,c2,...)" or "0" for the zero class

 private:
  std::vector<std::int64_t> coords_;
};

// Numerical class (beta, d) of an object in the auxiliary category.
struct NumClass {
  ChernClass beta;
  std::int64_t d = 0;

  NumClass(ChernClass b, std::int64_t dd);
  static NumClass point(int rank, std::int64_t d) { return NumClass(ChernClass::zero(rank), d); }
  static NumClass sheaf(ChernClass b) { return NumClass(std::move(b), 0); }

  int rank() const { return beta.rank(); }
  NumClass operator+(const NumClass& o) const;

  friend bool operator==(const NumClass& a, const NumClass& b) = default;
  friend std::strong_ordering operator<=>(const NumClass& a, const NumClass& b) = default;

  std::string to_string() const;  // "(beta,d)"
};

// Membership in the positive cone C(B_p):
//   (beta effective and d >= 0) or (beta = 0 and d > 0).
bool in_positive_cone(const NumClass& c);

// The three weak stability conditions on C(B_p).
enum class StabCondition { TauBullet, TauTilde, TauN };

// Value in {-1, 0, 1}; throws std::domain_error for classes outside C(B_p).
//   TauBullet: 0 if d = 0, -1 if d > 0
//   TauTilde:  0 if d = 0, +1 if d > 0
//   TauN:      0 everywhere
int stability_value(StabCondition cond, const NumClass& c);

const char* stab_condition_name(StabCondition cond);

}  // namespace wallcross
