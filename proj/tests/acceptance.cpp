// Acceptance suite: eight exact criteria, one pass/fail line each.
// Exact rational equality throughout; the only tolerances are wall-clock
// budgets, enforced where stated.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wallcross/coefficients.hpp"
#include "wallcross/hall.hpp"
#include "wallcross/invariants.hpp"
#include "wallcross/lie.hpp"
#include "wallcross/stackcalc.hpp"
#include "wallcross/verify.hpp"

using namespace wallcross;

namespace {

int g_failures = 0;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(int criterion, const std::string& label, bool pass, double elapsed_ms,
            const std::string& detail = {}) {
  std::printf("[%s] criterion %d: %s (%.0f ms)\n", pass ? "PASS" : "FAIL", criterion,
              label.c_str(), elapsed_ms);
  if (!pass) {
    ++g_failures;
    if (!detail.empty()) std::printf("       %s\n", detail.c_str());
  }
}

std::string first_failure(const AuditReport& r) {
  for (const auto& c : r.checks)
    if (!c.pass) return c.name + (c.detail.empty() ? "" : " — " + c.detail);
  return {};
}

// 1. Two-(0,1) vanishing, all n <= 8, with the per-case closed forms.
void criterion_1() {
  const auto start = Clock::now();
  const AuditReport r = verify_two_point_vanishing(8);
  int sequences = 0;
  for (int n = 2; n <= 8; ++n) sequences += 3 * (n * (n - 1) / 2);
  const double elapsed = ms_since(start);
  const bool in_budget = elapsed < 60000.0;
  report(1,
         "two-(0,1) vanishing: U = 0 for all placements n <= 8 (" + std::to_string(sequences) +
             " sequences incl. label variants), per-case sums match the closed forms, < 60 s",
         r.all_pass() && in_budget, elapsed,
         !r.all_pass() ? first_failure(r) : "budget exceeded");
}

// 2. Single-(0,2) coefficient table l <= 5: exactly one of the two candidate
// closed forms matches uniformly, and the report names it.
void criterion_2() {
  const auto start = Clock::now();
  const AuditReport r = verify_single_d2_coefficients(5);
  std::string named;
  for (const auto& c : r.checks)
    if (c.name.rfind("verdict: ", 0) == 0) named = c.name.substr(9);
  report(2, "single-(0,2) coefficient table l <= 5 matches exactly one closed form: " +
                (named.empty() ? std::string("<no verdict>") : named),
         r.all_pass() && !named.empty(), ms_since(start), first_failure(r));
}

// 3. Flat vs nested assemblies, d in {1,2}, <= 4 parts, summed over orderings.
void criterion_3() {
  const auto start = Clock::now();
  const AuditReport r = verify_flat_nested(4);
  report(3, "flat U-weighted assembly = nested commutator assembly, d in {1,2}, <= 4 parts",
         r.all_pass(), ms_since(start), first_failure(r));
}

// 4. Stack reduction to -1/4 [pt/Gm] and the -1/4 psi image, < 1 s.
void criterion_4() {
  const auto start = Clock::now();
  const AuditReport r = verify_stack_reduction();
  const double elapsed = ms_since(start);
  report(4, "eps^(0,2) normal form = -1/4 [pt/Gm] and psi image = -1/4 lambda^(0,2), < 1 s",
         r.all_pass() && elapsed < 1000.0, elapsed, first_failure(r));
}

// 5. Lie bracket laws over >= 100 random (pairing, triple) instances per mode.
void criterion_5() {
  const auto start = Clock::now();
  const AuditReport r = verify_lie_laws(120, 20240915);
  report(5, "antisymmetry and Jacobi over 120 random instances per pairing mode",
         r.all_pass(), ms_since(start), first_failure(r));
}

// 6. Closed form vs bracket evaluation agreement sweep, < 120 s.
void criterion_6() {
  const auto start = Clock::now();
  const AuditReport r = verify_agreement_sweep(3, 2);
  const double elapsed = ms_since(start);
  std::string label = "closed form = bracket evaluation";
  for (const auto& c : r.checks) label += ", " + c.name;
  label += ", < 120 s";
  report(6, label, r.all_pass() && elapsed < 120000.0, elapsed, first_failure(r));
}

// 7. Rank-1 pipeline: flat/nested <= 3 parts and degree-l homogeneity.
void criterion_7() {
  const auto start = Clock::now();
  const AuditReport r = verify_rank1_pipeline();
  report(7, "rank-1 flat/nested agreement (<= 3 parts) and per-stratum DT homogeneity",
         r.all_pass(), ms_since(start), first_failure(r));
}

// 8. Two runs of `verify --json` are byte-identical.
void criterion_8() {
  const auto start = Clock::now();
#ifdef WALLCROSS_CLI_PATH
  const std::string cli = WALLCROSS_CLI_PATH;
  const std::string out1 = "acceptance_verify_run1.json";
  const std::string out2 = "acceptance_verify_run2.json";
  const int rc1 =
      std::system((cli + " --json verify --nmax 6 > " + out1 + " 2>/dev/null").c_str());
  const int rc2 =
      std::system((cli + " --json verify --nmax 6 > " + out2 + " 2>/dev/null").c_str());
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::string a = slurp(out1), b = slurp(out2);
  const bool pass = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
  std::remove(out1.c_str());
  std::remove(out2.c_str());
  report(8, "two `verify --json` runs produce byte-identical reports", pass, ms_since(start),
         rc1 != 0 || rc2 != 0 ? "verify exited nonzero" : "reports differ");
#else
  report(8, "two `verify --json` runs produce byte-identical reports", false, ms_since(start),
         "CLI path not configured");
#endif
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (g_failures == 0) {
    std::printf("acceptance: all 8 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return 1;
}
