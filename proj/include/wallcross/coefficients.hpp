#pragma once

#include <functional>
#include <span>
#include <vector>

#include "wallcross/classes.hpp"
#include "wallcross/rational.hpp"

namespace wallcross {

// One admissible choice (l, m, a, b) in the Lambda set of the U-coefficient
// sum: a splits the sequence into m consecutive theta-blocks, b groups those
// blocks into l gamma-groups.
struct LambdaChoice {
  int l = 0;
  int m = 0;
  std::vector<int> a;  // a[0] = 0 < a[1] < ... < a[m] = n
  std::vector<int> b;  // b[0] = 0 < b[1] < ... < b[l] = m

  friend bool operator==(const LambdaChoice&, const LambdaChoice&) = default;
};

// S((x_1,...,x_n); coarse, fine) in {-1, 0, +1}.
//
// Scans adjacent pairs i = 1..n-1. With prefix = x_1+...+x_i and
// suffix = x_{i+1}+...+x_n:
//   (a)  coarse(x_i) <= coarse(x_{i+1})  and  fine(prefix) >  fine(suffix)
//   (b)  coarse(x_i) >  coarse(x_{i+1})  and  fine(prefix) <= fine(suffix)
// If every i satisfies (a) or (b), the value is (-1)^r with r = #{i : (a)};
// otherwise 0. Throws on an empty sequence or a class outside C(B_p).
int s_function(std::span<const NumClass> seq, StabCondition coarse, StabCondition fine);

// All Lambda choices for the sequence, with coarse = tau_bullet and
// fine = tau_tilde, in lexicographic (l, m, a, b) order.
std::vector<LambdaChoice> enumerate_lambda(std::span<const NumClass> seq);

// The value of a single Lambda summand:
//   (-1)^(l-1)/l * prod_i S(theta-blocks of gamma-group i) * prod_i 1/(a_i - a_{i-1})!
Rational lambda_term(std::span<const NumClass> seq, const LambdaChoice& choice);

// The transformation coefficient U(seq; tau_bullet, tau_tilde): the exact
// rational sum of lambda_term over the full Lambda set.
Rational u_coefficient(std::span<const NumClass> seq);

// Streaming form of the Lambda sum; visits choices in the same order as
// enumerate_lambda. Used by u_coefficient and the case split.
void for_each_lambda(std::span<const NumClass> seq,
                     const std::function<void(const LambdaChoice&)>& visit);

// Partial sums of the U-coefficient Lambda sum for the two-(0,1) sequence,
// partitioned by the adjacency of the (0,1) letters and the first b-cut:
//   case 1 (m = k+1): (a) the (0,1) letters sit in distinct a-blocks,
//                     (b) both sit in one a-block;
//   case 2 (m = k+2): (a) l >= 2 and the first gamma-group ends at the block
//                     holding the first (0,1), (b) every other choice;
//   case 3 (gap >= 2): everything.
struct CaseSplit {
  Rational u1a, u1b, u2a, u2b, u3;
  Rational total() const { return u1a + u1b + u2a + u2b + u3; }
};

// Two (0,1) insertions at positions k < m among n-2 copies of a generic
// effective sheaf class, 1 <= k < m <= n. Throws on invalid positions.
CaseSplit u_case_decomposition(int n, int k, int m);

// The sequences the rank-2 analysis is phrased over. `generic` is the fixed
// nonzero effective class standing in for every sheaf entry.
std::vector<NumClass> two_point_sequence(int n, int k, int m, const ChernClass& generic);
// `before` sheaf classes, one (0,2), `after` sheaf classes.
std::vector<NumClass> single_d2_sequence(int before, int after, const ChernClass& generic);
std::vector<NumClass> single_d1_sequence(int before, int after, const ChernClass& generic);

}  // namespace wallcross
