#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "coisored/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace coisored;
  CLI::App app{"Affine Hamiltonian reduction engine"};
  app.require_subcommand(1);

  CommandOptions opt;
  std::string session_path;
  std::string out_path;
  std::string emit_path;

  const std::map<std::string, std::string> about{
      {"check-groupoid", "Groupoid axioms, or subgroupoid descent with --subgroupoid"},
      {"check-symplectic", "Multiplication graph, source/target signs and nondegeneracy"},
      {"check-action", "Action axioms"},
      {"check-hamiltonian", "Graph coisotropy and the two Hamiltonian conditions"},
      {"invariants", "Invariants of an action up to the degree bound"},
      {"reduce", "Reduced Poisson algebra of an action by a subgroupoid"},
      {"residual", "Residual action on the reduction by a commuting action"},
      {"compose", "Composition of two Hamiltonian bimodules"},
  };
  for (const auto& name : command_names()) {
    CLI::App* sub = app.add_subcommand(name, about.at(name));
    sub->add_option("session", session_path, "Session file")->required();
    sub->add_option("--degree-bound", opt.degree_bound, "Invariant degree bound")->capture_default_str();
    sub->add_option("--order", opt.order, "Monomial order for normal forms: grevlex or lex")
        ->capture_default_str();
    sub->add_option("--seed", opt.seed, "Seed for randomized checks")->capture_default_str();
    sub->add_option("--verify-trials", opt.verify_trials, "Random trials per verification check")
        ->capture_default_str();
    sub->add_option("--budget", opt.budget, "Cap on processed Groebner S-pairs");
    sub->add_option("--closure-cap", opt.closure_cap, "Rounds of the bracket closure loop")
        ->capture_default_str();
    sub->add_option("--out", out_path, "Write the JSON report here");
    sub->add_option("--emit-session", emit_path, "Write the checked or produced entities as a session");
    sub->add_flag("--timing", opt.timing, "Include wall-clock time in the report");
    sub->add_option("--groupoid", opt.groupoid, "Groupoid to use (default: last declared)");
    sub->add_option("--subgroupoid", opt.subgroupoid, "Subgroupoid to use (default: last declared)");
    sub->add_option("--action", opt.action, "Action to use");
    sub->add_option("--with", opt.with, "Second action (residual, compose)");
    if (name == "reduce") {
      sub->add_option("--route", opt.route, "restrict: restrict to the subgroupoid, then invariants; quotient: invariants of the moment fiber")
          ->check(CLI::IsMember({"restrict", "quotient"}))
          ->capture_default_str();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  CommandResult result = run_session_command(command, session_path, opt);
  std::cout << result.text;
  try {
    if (!out_path.empty()) write_atomically(out_path, result.report.dump(2) + "\n");
    if (!emit_path.empty()) write_atomically(emit_path, result.session);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return result.exit_code;
}
