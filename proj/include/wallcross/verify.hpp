#pragma once

#include <string>
#include <vector>

#include "wallcross/rational.hpp"

namespace wallcross {

struct AuditCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // offending tuple / values on failure, empty otherwise
};

struct AuditReport {
  std::string title;
  std::vector<AuditCheck> checks;

  bool all_pass() const;
  int failed_count() const;
  void record(std::string name, bool pass, std::string detail = {});
};

// Vanishing sweep: for all 2 <= n <= n_max and 1 <= k < m <= n the
// two-(0,1) coefficient is exactly 0 (canonical and mixed-label sequences),
// the per-case partial sums match their closed forms, and the five case
// buckets add up to the full Lambda sum.
AuditReport verify_two_point_vanishing(int n_max);

// Brute-force U for the single-(0,2) sequences with k classes before and
// l - k after, k <= l <= l_max, compared against both candidate closed forms
// (the (k-1)!- and the k!-denominator variants). Names the uniformly matching
// candidate.
AuditReport verify_single_d2_coefficients(int l_max);

// The -1/4 stack reduction and the point-class evaluation constants.
AuditReport verify_stack_reduction();

// Flat vs nested assemblies summed over orderings, d in {1,2}, all part
// multisets up to the given size from small rank-1 and rank-2 universes.
AuditReport verify_flat_nested(int max_parts);

// Antisymmetry and Jacobi for the Lie bracket over random exact instances,
// both pairing modes.
AuditReport verify_lie_laws(int instances_per_mode, unsigned seed);

// Closed-form / bracket-evaluation agreement sweep over geometric-linear
// pairings with |L_i| <= l_bound, DT supports of size <= 3, decomposition
// lengths <= 4. Disagreements are reported with the minimal counterexample.
AuditReport verify_agreement_sweep(int l_bound, unsigned threads);

// Rank-1 pipeline: flat/nested agreement (<= 3 parts) and degree-l
// homogeneity in the DT values per decomposition length.
AuditReport verify_rank1_pipeline();

struct SelfCheckBounds {
  int vanishing_nmax = 8;
  int coeff_lmax = 5;
  int flat_nested_max_parts = 4;
  int lie_instances_per_mode = 120;
  int agreement_l_bound = 3;
  unsigned seed = 20240915;
  unsigned threads = 1;
};

struct SelfCheckSummary {
  std::vector<AuditReport> reports;
  bool all_pass() const;
  std::vector<std::string> failures() const;  // "title: check name" lines
};

// Runs every verifier. Deterministic for fixed bounds.
SelfCheckSummary selfcheck_all(const SelfCheckBounds& bounds);

}  // namespace wallcross
