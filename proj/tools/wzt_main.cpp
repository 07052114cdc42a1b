// Command-line surface for the cloning-system engine: expression evaluation
// over tree diagrams plus the randomized property suites.
//
// Exit codes: 0 success / all properties pass, 1 property failure,
// 2 usage or parse error.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wzt/braid.hpp"
#include "wzt/harness.hpp"
#include "wzt/instances.hpp"
#include "wzt/pure_braid.hpp"
#include "wzt/text.hpp"
#include "wzt/tree_diagram.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;

const wzt::CloningSystem* instance_or_null(const std::string& name) {
  if (name.empty()) return nullptr;
  return &wzt::find_instance(name);
}

int run_report(const wzt::TrialConfig& cfg, bool json) {
  wzt::Report report = wzt::run_suite(cfg);
  std::cout << (json ? report.render_json() : report.render_text());
  std::fprintf(stderr, "wall time: %.3fs\n", report.wall_seconds);
  return report.all_passed() ? kExitPass : kExitPropertyFailure;
}

std::string format_comb(const wzt::CombedPureBraid& combed) {
  std::string out = "(";
  for (size_t t = 0; t < combed.kernels.size(); ++t) {
    if (t) out += ", ";
    out += "k" + std::to_string(combed.strands - static_cast<int>(t)) + " = " +
           combed.kernels[t].to_text();
  }
  out += ")";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"element arithmetic and orderings for Thompson-like groups over cloning systems"};
  app.require_subcommand(1);

  std::string instance_name;
  std::string expr, lhs_text, rhs_text, braid_text;
  bool json = false;
  wzt::TrialConfig cfg;

  auto add_instance_flag = [&](CLI::App* cmd) {
    cmd->add_option("--instance", instance_name,
                    "instance registry name (f, v, bv, bf, dirpow[:int:phi1=...,phi2=...])");
  };
  auto add_trial_flags = [&](CLI::App* cmd) {
    cmd->add_option("--trials", cfg.trials, "trials per property");
    cmd->add_option("--n", cfg.max_degree, "maximum degree");
    cmd->add_option("--len", cfg.size_bound, "element size bound");
    cmd->add_option("--seed", cfg.seed, "random seed (fixes the whole trial stream)");
    cmd->add_flag("--json", json, "machine-readable report");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate a diagram expression");
  eval->add_option("expr", expr, "expression, e.g. '{Λ; b2: s1; Λ} * {Λ; b2: s1; Λ}'")
      ->required();
  add_instance_flag(eval);

  CLI::App* mul = app.add_subcommand("mul", "multiply two diagrams");
  mul->add_option("lhs", lhs_text)->required();
  mul->add_option("rhs", rhs_text)->required();
  add_instance_flag(mul);

  CLI::App* cmp = app.add_subcommand("cmp", "compare two diagrams");
  cmp->add_option("lhs", lhs_text)->required();
  cmp->add_option("rhs", rhs_text)->required();
  add_instance_flag(cmp);

  CLI::App* sign_cmd = app.add_subcommand("sign", "sign of a diagram in the positive cone");
  sign_cmd->add_option("diagram", lhs_text)->required();
  add_instance_flag(sign_cmd);

  CLI::App* comb_cmd = app.add_subcommand("comb", "comb a pure braid word into kernel entries");
  comb_cmd->add_option("braid", braid_text, "pure braid word, e.g. 'b3: s2 s1^2 s2^-1'")
      ->required();

  CLI::App* project_cmd = app.add_subcommand("project", "project a diagram to the V instance");
  project_cmd->add_option("diagram", lhs_text)->required();
  add_instance_flag(project_cmd);

  CLI::App* axioms = app.add_subcommand("axioms", "run the cloning-axiom suite");
  axioms->add_option("--instance", cfg.instance, "instance registry name")->required();
  add_trial_flags(axioms);

  CLI::App* order_check = app.add_subcommand("order-check", "run the ordering suites");
  order_check->add_option("--instance", cfg.instance, "instance registry name")->required();
  add_trial_flags(order_check);

  CLI::App* suite = app.add_subcommand("suite", "run a named property suite");
  suite->add_option("--instance", cfg.instance, "instance registry name")->required();
  suite->add_option("--suite", cfg.suite, "all|axioms|order|engine|braid|magnus|comb");
  add_trial_flags(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (eval->parsed()) {
      std::cout << wzt::eval_expression(expr, instance_or_null(instance_name)) << "\n";
      return kExitPass;
    }
    if (mul->parsed()) {
      const wzt::CloningSystem* sys = instance_or_null(instance_name);
      wzt::TreeDiagram a = wzt::parse_diagram(lhs_text, sys);
      wzt::TreeDiagram b = wzt::parse_diagram(rhs_text, &a.system());
      std::cout << wzt::to_text(wzt::multiply(a, b)) << "\n";
      return kExitPass;
    }
    if (cmp->parsed()) {
      const wzt::CloningSystem* sys = instance_or_null(instance_name);
      wzt::TreeDiagram a = wzt::parse_diagram(lhs_text, sys);
      wzt::TreeDiagram b = wzt::parse_diagram(rhs_text, &a.system());
      std::cout << wzt::to_string(wzt::compare(a, b)) << "\n";
      return kExitPass;
    }
    if (sign_cmd->parsed()) {
      wzt::TreeDiagram d = wzt::parse_diagram(lhs_text, instance_or_null(instance_name));
      std::cout << wzt::to_string(wzt::sign(d)) << "\n";
      return kExitPass;
    }
    if (comb_cmd->parsed()) {
      wzt::BraidWord w = wzt::BraidWord::parse(braid_text);
      std::cout << format_comb(wzt::comb(w)) << "\n";
      return kExitPass;
    }
    if (project_cmd->parsed()) {
      wzt::TreeDiagram d = wzt::parse_diagram(lhs_text, instance_or_null(instance_name));
      std::cout << wzt::to_text(wzt::project(d)) << "\n";
      return kExitPass;
    }
    if (axioms->parsed()) {
      cfg.suite = "axioms";
      return run_report(cfg, json);
    }
    if (order_check->parsed()) {
      cfg.suite = "order";
      return run_report(cfg, json);
    }
    if (suite->parsed()) {
      return run_report(cfg, json);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitPropertyFailure;
  }
  return kExitUsage;
}
