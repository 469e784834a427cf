#include "wallcross/coefficients.hpp"

#include <algorithm>
#include <stdexcept>

namespace wallcross {

namespace {

void require_cone_sequence(std::span<const NumClass> seq, const char* who) {
  if (seq.empty()) throw std::invalid_argument(std::string(who) + ": empty sequence");
  for (const auto& c : seq)
    if (!in_positive_cone(c))
      throw std::invalid_argument(std::string(who) + ": class " + c.to_string() +
                                  " outside C(B_p)");
}

// Visits all strictly increasing vectors v[0..count-1] drawn from lo..hi in
// lexicographic order.
void for_each_increasing(int lo, int hi, int count, std::vector<int>& v,
                         const std::function<void()>& visit) {
  if (count == 0) {
    visit();
    return;
  }
  const int depth = static_cast<int>(v.size());
  int first = depth == 0 ? lo : v.back() + 1;
  // leave room for the remaining entries
  for (int x = first; x <= hi - (count - 1); ++x) {
    v.push_back(x);
    for_each_increasing(lo, hi, count - 1, v, visit);
    v.pop_back();
  }
}

}  // namespace

int s_function(std::span<const NumClass> seq, StabCondition coarse, StabCondition fine) {
  require_cone_sequence(seq, "s_function");
  const int n = static_cast<int>(seq.size());
  // suffix[i] = seq[i] + ... + seq[n-1]
  std::vector<NumClass> suffix(seq.begin(), seq.end());
  for (int i = n - 2; i >= 0; --i) suffix[static_cast<std::size_t>(i)] =
      suffix[static_cast<std::size_t>(i)] + suffix[static_cast<std::size_t>(i + 1)];

  int r = 0;
  NumClass prefix = seq[0];
  for (int i = 0; i + 1 < n; ++i) {
    if (i > 0) prefix = prefix + seq[static_cast<std::size_t>(i)];
    const int ci = stability_value(coarse, seq[static_cast<std::size_t>(i)]);
    const int cn = stability_value(coarse, seq[static_cast<std::size_t>(i + 1)]);
    const int fp = stability_value(fine, prefix);
    const int fs = stability_value(fine, suffix[static_cast<std::size_t>(i + 1)]);
    if (ci <= cn && fp > fs) {
      ++r;  // condition (a)
    } else if (ci > cn && fp <= fs) {
      // condition (b), no sign contribution
    } else {
      return 0;
    }
  }
  return parity_sign(r);
}

void for_each_lambda(std::span<const NumClass> seq,
                     const std::function<void(const LambdaChoice&)>& visit) {
  require_cone_sequence(seq, "for_each_lambda");
  const int n = static_cast<int>(seq.size());

  NumClass total = seq[0];
  for (int i = 1; i < n; ++i) total = total + seq[static_cast<std::size_t>(i)];
  const int fine_total = stability_value(StabCondition::TauTilde, total);

  LambdaChoice choice;
  std::vector<int> cuts;     // interior a-cuts
  std::vector<int> bcuts;    // interior b-cuts
  std::vector<NumClass> theta;

  for (int l = 1; l <= n; ++l) {
    for (int m = l; m <= n; ++m) {
      cuts.clear();
      for_each_increasing(1, n - 1, m - 1, cuts, [&] {
        // assemble a[0..m] with a_m = n (the theta-blocks must cover the sequence)
        choice.a.assign(1, 0);
        choice.a.insert(choice.a.end(), cuts.begin(), cuts.end());
        choice.a.push_back(n);

        // condition (1): each block's coarse value equals every member's
        theta.clear();
        for (int i = 1; i <= m; ++i) {
          NumClass block = seq[static_cast<std::size_t>(choice.a[static_cast<std::size_t>(i - 1)])];
          for (int j = choice.a[static_cast<std::size_t>(i - 1)] + 1;
               j < choice.a[static_cast<std::size_t>(i)]; ++j)
            block = block + seq[static_cast<std::size_t>(j)];
          theta.push_back(block);
        }
        for (int i = 1; i <= m; ++i) {
          const int tb = stability_value(StabCondition::TauBullet,
                                         theta[static_cast<std::size_t>(i - 1)]);
          for (int j = choice.a[static_cast<std::size_t>(i - 1)];
               j < choice.a[static_cast<std::size_t>(i)]; ++j)
            if (tb != stability_value(StabCondition::TauBullet, seq[static_cast<std::size_t>(j)]))
              return;
        }

        bcuts.clear();
        for_each_increasing(1, m - 1, l - 1, bcuts, [&] {
          choice.b.assign(1, 0);
          choice.b.insert(choice.b.end(), bcuts.begin(), bcuts.end());
          choice.b.push_back(m);

          // condition (2): every gamma-group has the total's fine value
          for (int i = 1; i <= l; ++i) {
            NumClass gamma = theta[static_cast<std::size_t>(choice.b[static_cast<std::size_t>(i - 1)])];
            for (int j = choice.b[static_cast<std::size_t>(i - 1)] + 1;
                 j < choice.b[static_cast<std::size_t>(i)]; ++j)
              gamma = gamma + theta[static_cast<std::size_t>(j)];
            if (stability_value(StabCondition::TauTilde, gamma) != fine_total) return;
          }

          choice.l = l;
          choice.m = m;
          visit(choice);
        });
      });
    }
  }
}

std::vector<LambdaChoice> enumerate_lambda(std::span<const NumClass> seq) {
  std::vector<LambdaChoice> out;
  for_each_lambda(seq, [&](const LambdaChoice& c) { out.push_back(c); });
  return out;
}

Rational lambda_term(std::span<const NumClass> seq, const LambdaChoice& choice) {
  const int l = choice.l;
  const int m = choice.m;

  std::vector<NumClass> theta;
  theta.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    NumClass block = seq[static_cast<std::size_t>(choice.a[static_cast<std::size_t>(i - 1)])];
    for (int j = choice.a[static_cast<std::size_t>(i - 1)] + 1;
         j < choice.a[static_cast<std::size_t>(i)]; ++j)
      block = block + seq[static_cast<std::size_t>(j)];
    theta.push_back(block);
  }

  int s_product = 1;
  for (int i = 1; i <= l && s_product != 0; ++i) {
    const int from = choice.b[static_cast<std::size_t>(i - 1)];
    const int to = choice.b[static_cast<std::size_t>(i)];
    s_product *= s_function(std::span<const NumClass>(theta.data() + from,
                                                      static_cast<std::size_t>(to - from)),
                            StabCondition::TauBullet, StabCondition::TauTilde);
  }
  if (s_product == 0) return Rational(0);

  BigInt denom = l;
  for (int i = 1; i <= m; ++i)
    denom *= factorial(choice.a[static_cast<std::size_t>(i)] -
                       choice.a[static_cast<std::size_t>(i - 1)]);
  return Rational(BigInt(parity_sign(l - 1) * s_product), std::move(denom));
}

Rational u_coefficient(std::span<const NumClass> seq) {
  Rational sum;
  for_each_lambda(seq, [&](const LambdaChoice& c) { sum += lambda_term(seq, c); });
  return sum;
}

std::vector<NumClass> two_point_sequence(int n, int k, int m, const ChernClass& generic) {
  if (!(1 <= k && k < m && m <= n))
    throw std::invalid_argument("two_point_sequence: need 1 <= k < m <= n");
  if (!generic.effective())
    throw std::invalid_argument("two_point_sequence: generic class must be nonzero effective");
  std::vector<NumClass> seq;
  seq.reserve(static_cast<std::size_t>(n));
  const int rank = generic.rank();
  for (int pos = 1; pos <= n; ++pos) {
    if (pos == k || pos == m)
      seq.push_back(NumClass::point(rank, 1));
    else
      seq.push_back(NumClass::sheaf(generic));
  }
  return seq;
}

std::vector<NumClass> single_d2_sequence(int before, int after, const ChernClass& generic) {
  if (before < 0 || after < 0) throw std::invalid_argument("single_d2_sequence: negative counts");
  std::vector<NumClass> seq;
  const int rank = generic.rank();
  for (int i = 0; i < before; ++i) seq.push_back(NumClass::sheaf(generic));
  seq.push_back(NumClass::point(rank, 2));
  for (int i = 0; i < after; ++i) seq.push_back(NumClass::sheaf(generic));
  return seq;
}

std::vector<NumClass> single_d1_sequence(int before, int after, const ChernClass& generic) {
  if (before < 0 || after < 0) throw std::invalid_argument("single_d1_sequence: negative counts");
  std::vector<NumClass> seq;
  const int rank = generic.rank();
  for (int i = 0; i < before; ++i) seq.push_back(NumClass::sheaf(generic));
  seq.push_back(NumClass::point(rank, 1));
  for (int i = 0; i < after; ++i) seq.push_back(NumClass::sheaf(generic));
  return seq;
}

CaseSplit u_case_decomposition(int n, int k, int m) {
  const ChernClass generic({1});
  const std::vector<NumClass> seq = two_point_sequence(n, k, m, generic);
  const int gap = m - k;

  // block index (1-based) whose positions a[i-1] < pos <= a[i] hold `pos`
  auto block_of = [](const LambdaChoice& c, int pos) {
    for (int i = 1; i <= c.m; ++i)
      if (c.a[static_cast<std::size_t>(i - 1)] < pos && pos <= c.a[static_cast<std::size_t>(i)])
        return i;
    throw std::logic_error("u_case_decomposition: position not covered by a-blocks");
  };

  CaseSplit split;
  for_each_lambda(seq, [&](const LambdaChoice& c) {
    const Rational term = lambda_term(seq, c);
    const int pk = block_of(c, k);
    const int pm = block_of(c, m);
    if (gap == 1) {
      if (pk == pm)
        split.u1b += term;
      else
        split.u1a += term;
    } else if (gap == 2) {
      if (c.l >= 2 && c.b[1] == pk)
        split.u2a += term;
      else
        split.u2b += term;
    } else {
      split.u3 += term;
    }
  });
  return split;
}

}  // namespace wallcross
