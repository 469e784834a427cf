#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "wallcross/config.hpp"
#include "wallcross/report.hpp"

namespace {

using wallcross::Json;

struct GlobalOpts {
  std::string config_path;
  bool json = false;
  unsigned parallel = 1;
};

wallcross::Config load_or_default(const GlobalOpts& opts) {
  if (opts.config_path.empty()) return wallcross::Config{};
  return wallcross::load_config(opts.config_path);
}

void emit(const GlobalOpts& opts, const Json& doc, const std::string& text) {
  if (opts.json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

int run_u_coeff(const GlobalOpts& opts, const std::string& sequence_text) {
  const wallcross::Config cfg = load_or_default(opts);
  const auto seq = wallcross::parse_class_sequence(sequence_text, cfg.lattice_rank);
  for (const auto& c : seq)
    if (!wallcross::in_positive_cone(c))
      throw wallcross::ConfigError("sequence", "class " + c.to_string() + " outside C(B_p)");
  const wallcross::Rational u = wallcross::u_coefficient(seq);
  Json doc;
  doc["command"] = "u-coeff";
  Json jseq = Json::array();
  for (const auto& c : seq) jseq.push_back(wallcross::to_json(c));
  doc["sequence"] = std::move(jseq);
  doc["lambda_choices"] = static_cast<int>(wallcross::enumerate_lambda(seq).size());
  doc["u"] = wallcross::to_json(u);
  emit(opts, doc, u.to_string() + "\n");
  return 0;
}

int run_case_split(const GlobalOpts& opts, int n, int k, int m) {
  const wallcross::CaseSplit split = wallcross::u_case_decomposition(n, k, m);
  const auto seq = wallcross::two_point_sequence(n, k, m, wallcross::ChernClass({1}));
  const wallcross::Rational u = wallcross::u_coefficient(seq);
  Json doc;
  doc["command"] = "case-split";
  doc["n"] = n;
  doc["k"] = k;
  doc["m"] = m;
  doc["case"] = m == k + 1 ? 1 : (m == k + 2 ? 2 : 3);
  doc["split"] = wallcross::to_json(split);
  doc["u_coefficient"] = wallcross::to_json(u);
  doc["consistent"] = split.total() == u;
  std::string text = "U1a = " + split.u1a.to_string() + "\nU1b = " + split.u1b.to_string() +
                     "\nU2a = " + split.u2a.to_string() + "\nU2b = " + split.u2b.to_string() +
                     "\nU3  = " + split.u3.to_string() + "\ntotal = " + split.total().to_string() +
                     "  (u_coefficient = " + u.to_string() + ")\n";
  emit(opts, doc, text);
  return 0;
}

int run_epsilon(const GlobalOpts& opts, int d, const std::string& parts_text) {
  const wallcross::Config cfg = load_or_default(opts);
  const auto parts = wallcross::parse_parts_list(parts_text, cfg.lattice_rank);
  for (const auto& p : parts)
    if (!p.effective())
      throw wallcross::ConfigError("parts", "part " + p.to_string() + " is not nonzero effective");
  const auto flat = wallcross::assemble_epsilon_flat(d, parts, cfg.lattice_rank);
  const auto nested = wallcross::assemble_epsilon_nested(d, parts, cfg.lattice_rank);
  const auto cmp = wallcross::compare_flat_nested(d, parts, cfg.lattice_rank);
  Json doc;
  doc["command"] = "epsilon";
  doc["d"] = d;
  Json jparts = Json::array();
  for (const auto& p : parts) jparts.push_back(wallcross::to_json(p));
  doc["parts"] = std::move(jparts);
  doc["flat"] = wallcross::to_json(flat);
  doc["nested"] = wallcross::to_json(nested);
  doc["comparison_over_orderings"] = wallcross::to_json(cmp);
  std::string text = "flat   = " + flat.to_string() + "\nnested = " + nested.to_string() +
                     "\nsummed over " + std::to_string(cmp.orderings) +
                     " orderings: " + (cmp.identical ? "identical" : "DIFFER") + "\n";
  if (!cmp.identical) text += "difference = " + cmp.difference.to_string() + "\n";
  emit(opts, doc, text);
  return 0;
}

int run_stack_reduce(const GlobalOpts& opts) {
  const auto split = wallcross::split_gl2();
  const auto prod = wallcross::product_e01_e01();
  const auto e02 = wallcross::epsilon_02_normal_form();
  Json doc;
  doc["command"] = "stack-reduce";
  doc["delta_02_split"] = wallcross::to_json(split);
  doc["e01_times_e01"] = wallcross::to_json(prod);
  doc["epsilon_02_normal_form"] = wallcross::to_json(e02);
  doc["psi_epsilon_02"] = wallcross::to_json(wallcross::psi_epsilon_02_coefficient());
  doc["psi_delta_02_axiom"] = wallcross::to_json(wallcross::psi_delta_02_coefficient());
  doc["note"] = wallcross::psi_images_tension_note();
  std::string text =
      "delta^(0,2)(tau*) -> " + split.to_string() + "\n" +
      "eps^(0,1)(tau*) * eps^(0,1)(tau*) -> " + prod.to_string() + "\n" +
      "eps^(0,2)(tau*) normal form = " + e02.to_string() + "\n" +
      "psi(eps^(0,2)) = " + wallcross::psi_epsilon_02_coefficient().to_string() +
      " · λ^(0,2)\npsi(delta^(0,2)) = " + wallcross::psi_delta_02_coefficient().to_string() +
      " · λ^(0,2)  [cited constant]\nnote: " + wallcross::psi_images_tension_note() + "\n";
  emit(opts, doc, text);
  return 0;
}

int run_invariant(const GlobalOpts& opts, const std::string& beta_text,
                  const std::string& selector_text, int d) {
  if (d != 1 && d != 2)
    throw wallcross::ConfigError("--rank", "invariant rank must be 1 or 2, got " +
                                               std::to_string(d));
  const wallcross::Config cfg = load_or_default(opts);
  if (!cfg.pairing)
    throw wallcross::ConfigError("$.pairing", "invariant evaluation needs a pairing in the config");
  if (cfg.dt.empty())
    throw wallcross::ConfigError("$.dt_table", "invariant evaluation needs a DT table");

  std::vector<wallcross::ChernClass> selector = cfg.selector;
  std::optional<wallcross::ChernClass> beta = cfg.target_beta;
  if (!selector_text.empty())
    selector = wallcross::parse_parts_list(selector_text, cfg.lattice_rank);
  if (!beta_text.empty()) beta = wallcross::parse_beta(beta_text, cfg.lattice_rank);

  wallcross::InvariantResult result;
  Json doc;
  doc["command"] = "invariant";
  doc["rank"] = d;
  if (!selector.empty()) {
    if (d != 2)
      throw wallcross::ConfigError("selector", "selector evaluation is the rank-2 invariant");
    result = wallcross::hft_rank2(selector, cfg.dt, *cfg.pairing);
    Json jsel = Json::array();
    for (const auto& c : selector) jsel.push_back(wallcross::to_json(c));
    doc["selector"] = std::move(jsel);
  } else if (beta) {
    result = d == 2 ? wallcross::bss_invariant(*beta, cfg.dt, *cfg.pairing)
                    : wallcross::pair_invariant_rank1_detail(*beta, cfg.dt, *cfg.pairing);
    doc["beta"] = wallcross::to_json(*beta);
  } else {
    throw wallcross::ConfigError("targets", "need --beta, --selector, or targets in the config");
  }
  doc["result"] = wallcross::to_json(result);
  std::string text = "closed_form  = " + result.closed_form.to_string() +
                     "\nbracket_eval = " + result.bracket_eval.to_string() +
                     "\nagree = " + (result.agree ? "yes" : "NO") + "\n";
  if (const auto* c = result.first_disagreement()) {
    text += "first disagreement at parts = ";
    for (const auto& p : c->parts) text += p.to_string();
    text += ": closed " + c->closed_form.to_string() + " vs bracket " +
            c->bracket_eval.to_string() + "\n";
  }
  emit(opts, doc, text);
  return 0;
}

int run_verify(const GlobalOpts& opts, int nmax) {
  wallcross::SelfCheckBounds bounds;
  bounds.vanishing_nmax = nmax;
  bounds.threads = opts.parallel;
  const wallcross::SelfCheckSummary summary = wallcross::selfcheck_all(bounds);
  Json doc;
  doc["command"] = "verify";
  Json jbounds;
  jbounds["vanishing_nmax"] = bounds.vanishing_nmax;
  jbounds["coeff_lmax"] = bounds.coeff_lmax;
  jbounds["flat_nested_max_parts"] = bounds.flat_nested_max_parts;
  jbounds["lie_instances_per_mode"] = bounds.lie_instances_per_mode;
  jbounds["agreement_l_bound"] = bounds.agreement_l_bound;
  jbounds["seed"] = bounds.seed;
  doc["bounds"] = std::move(jbounds);
  doc["summary"] = wallcross::to_json(summary);

  std::string text;
  for (const auto& report : summary.reports) {
    text += std::string(report.all_pass() ? "[PASS] " : "[FAIL] ") + report.title + " (" +
            std::to_string(report.checks.size() - static_cast<std::size_t>(report.failed_count())) +
            "/" + std::to_string(report.checks.size()) + " checks)\n";
    for (const auto& check : report.checks)
      if (!check.pass)
        text += "       FAILED: " + check.name + (check.detail.empty() ? "" : " — " + check.detail) +
                "\n";
  }
  text += summary.all_pass() ? "all checks passed\n" : "FAILURES PRESENT\n";
  emit(opts, doc, text);
  return summary.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact wall-crossing engine: U-coefficients, Hall-algebra assemblies, stack "
               "reduction and rank <= 2 pair invariants"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOpts opts;
  app.add_option("--config", opts.config_path, "config file (JSON)")
      ->envname("WALLCROSS_CONFIG");
  app.add_flag("--json,!--text", opts.json, "emit a JSON report instead of text");
  app.add_option("--parallel", opts.parallel, "worker threads for sweeps")->default_val(1u);

  std::string sequence_text, parts_text, beta_text, selector_text;
  int n = 0, k = 0, m = 0, d = 2, nmax = 8;

  CLI::App* ucoeff = app.add_subcommand("u-coeff", "transformation coefficient of a sequence");
  ucoeff->add_option("sequence", sequence_text, "e.g. [(0,2),(1;0)]")->required();

  CLI::App* casesplit =
      app.add_subcommand("case-split", "per-case Lambda partial sums for the two-(0,1) sequence");
  casesplit->add_option("n", n, "total letters")->required();
  casesplit->add_option("k", k, "first (0,1) position")->required();
  casesplit->add_option("m", m, "second (0,1) position")->required();

  CLI::App* epsilon = app.add_subcommand("epsilon", "flat and nested epsilon assemblies");
  epsilon->add_option("--rank", d, "invariant rank d (1 or 2)")->required();
  epsilon->add_option("--parts", parts_text, "e.g. [1,1] or [(1;0),(0;1)]")->default_val("[]");

  CLI::App* stackreduce = app.add_subcommand("stack-reduce", "the -1/4 stack-function reduction");

  CLI::App* invariant = app.add_subcommand("invariant", "pair invariant from DT inputs");
  invariant->add_option("--beta", beta_text, "target class");
  invariant->add_option("--selector", selector_text, "classes sharing the Hilbert polynomial");
  invariant->add_option("--rank", d, "invariant rank d (1 or 2)")->default_val(2);

  CLI::App* verify = app.add_subcommand("verify", "machine re-derivation of the hand computations");
  verify->add_option("--nmax", nmax, "largest sequence length for the vanishing sweep")
      ->default_val(8);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (ucoeff->parsed()) return run_u_coeff(opts, sequence_text);
    if (casesplit->parsed()) return run_case_split(opts, n, k, m);
    if (epsilon->parsed()) return run_epsilon(opts, d, parts_text);
    if (stackreduce->parsed()) return run_stack_reduce(opts);
    if (invariant->parsed()) return run_invariant(opts, beta_text, selector_text, d);
    if (verify->parsed()) return run_verify(opts, nmax);
  } catch (const wallcross::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
