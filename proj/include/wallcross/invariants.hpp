#pragma once

#include <vector>

#include "wallcross/classes.hpp"
#include "wallcross/lie.hpp"
#include "wallcross/rational.hpp"

namespace wallcross {

// All ordered tuples (beta_1,...,beta_l) of support classes summing to beta,
// in lexicographic order. Finite because every part is nonzero effective.
std::vector<std::vector<ChernClass>> enumerate_decompositions(
    const ChernClass& beta, const std::vector<ChernClass>& support);

struct DecompositionContribution {
  std::vector<ChernClass> parts;
  Rational closed_form;
  Rational bracket_eval;
};

struct InvariantResult {
  Rational closed_form;
  Rational bracket_eval;
  bool agree = true;  // closed_form == bracket_eval exactly
  std::vector<DecompositionContribution> per_decomposition;  // lexicographic

  // first decomposition whose two routes differ, if any
  const DecompositionContribution* first_disagreement() const;
};

// Rank-2 invariant of tau_tilde-semistable objects of class (beta, 2), by the
// closed form (whose sign exponent keeps its doubled leading term) and by
// nested-bracket Lie evaluation, the designated ground truth. Decompositions
// run over the DT table's support.
InvariantResult bss_invariant(const ChernClass& beta, const DTTable& dt, const EulerPairing& p);
Rational bss_closed_form(const ChernClass& beta, const DTTable& dt, const EulerPairing& p);
Rational bss_bracket_eval(const ChernClass& beta, const DTTable& dt, const EulerPairing& p);

// Sum of the rank-2 invariant over the classes sharing a Hilbert polynomial
// (a user-declared selector set).
InvariantResult hft_rank2(const std::vector<ChernClass>& selector, const DTTable& dt,
                          const EulerPairing& p);

// Rank-1 pipeline: closed form = direct product formula over decompositions,
// bracket_eval = generic psi_apply route with eps^(0,1) -> -lambda^(0,1).
InvariantResult pair_invariant_rank1_detail(const ChernClass& beta, const DTTable& dt,
                                            const EulerPairing& p);
Rational pair_invariant_rank1(const ChernClass& beta, const DTTable& dt, const EulerPairing& p);

}  // namespace wallcross
