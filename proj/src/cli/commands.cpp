#include "coisored/cli/commands.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "coisored/groebner/groebner.hpp"

namespace coisored {

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "check-groupoid", "check-symplectic", "check-action", "check-hamiltonian",
      "invariants",     "reduce",           "residual",     "compose"};
  return names;
}

namespace {

struct Context {
  const Session& session;
  const CommandOptions& opt;
  CommandResult out;
  Json results = Json::object();
  std::vector<CheckReport> reports;
  std::string body;
  SessionWriter writer;

  std::string pick(const std::string& chosen, const std::string& kind) const {
    return chosen.empty() ? session.last(kind) : chosen;
  }

  const AffineGroupoid& groupoid() const { return session.groupoid(pick(opt.groupoid, "groupoid")); }

  std::string action_name() const { return pick(opt.action, "action"); }

  const SessionAction& action() const { return session.action(action_name()); }

  // First declared action other than `other`.
  std::string first_action_except(const std::string& other) const {
    for (const auto& e : session.entries()) {
      if (e.kind == "action" && e.name != other) return e.name;
    }
    throw InputError("the command needs two actions");
  }

  const Subgroupoid& subgroupoid() const {
    return session.subgroupoid(pick(opt.subgroupoid, "subgroupoid"));
  }

  static const PoissonStructure& poisson_of(const SessionAction& a, const std::string& name) {
    if (!a.poisson) throw InputError("action '" + name + "' has no Poisson structure on its module");
    return *a.poisson;
  }

  void emit_action(const std::string& name, const SessionAction& a) {
    writer.groupoid(name + "_G", a.action.groupoid);
    writer.ring(name + "_M", a.action.module);
    std::optional<std::string> pname;
    if (a.poisson) {
      pname = name + "_P";
      writer.poisson(*pname, name + "_M", *a.poisson);
    }
    writer.action(name, a.action, name + "_G", name + "_M", pname);
  }

  void emit_reduction(const ReductionResult& r) {
    writer.ring("R", r.reduced);
    writer.poisson("PR", "R", r.reduced_poisson);
  }
};

void check_groupoid(Context& c) {
  if (!c.opt.subgroupoid.empty()) {
    const Subgroupoid& h = c.subgroupoid();
    c.body += "subgroupoid: " + h.label + " of " + h.parent.label + "\n";
    c.reports.push_back(check_subgroupoid(h));
    c.writer.groupoid("G", h.parent);
    return;
  }
  const AffineGroupoid& g = c.groupoid();
  c.body += "groupoid: " + g.label + "\n";
  c.reports.push_back(check_groupoid_axioms(g));
  c.writer.groupoid("G", g);
}

void check_symplectic_cmd(Context& c) {
  const AffineGroupoid& g = c.groupoid();
  if (!g.is_symplectic()) throw InputError("groupoid '" + g.label + "' carries no Poisson structure");
  c.body += "groupoid: " + g.label + "\n";
  c.reports.push_back(check_symplectic(g));
  c.writer.groupoid("G", g);
}

void check_action_cmd(Context& c) {
  const std::string name = c.action_name();
  const SessionAction& a = c.action();
  c.body += "action: " + name + "\n";
  c.reports.push_back(check_action(a.action));
  c.emit_action(name, a);
}

void check_hamiltonian_cmd(Context& c) {
  const std::string name = c.action_name();
  const SessionAction& a = c.action();
  CheckReport r = check_hamiltonian(a.action, Context::poisson_of(a, name));
  const bool graph = r.item(kGraphCoisotropic).passed;
  const bool conditions = hamiltonian_conditions_hold(r);
  c.body += "action: " + name + "\n";
  c.body += std::string("graph verdict: ") + (graph ? "hamiltonian" : "not hamiltonian") + "\n";
  c.body += std::string("conditions verdict: ") + (conditions ? "hamiltonian" : "not hamiltonian") + "\n";
  c.results["graph_coisotropic"] = graph;
  c.results["conditions_hold"] = conditions;
  c.reports.push_back(std::move(r));
  c.emit_action(name, a);
}

void invariants_cmd(Context& c) {
  const std::string name = c.action_name();
  const SessionAction& a = c.action();
  InvariantBasis inv = invariants_up_to_degree(a.action, c.opt.degree_bound);
  CheckReport r("invariants of " + name);
  for (std::size_t e = 0; e < inv.per_degree.size(); ++e) {
    for (const auto& f : inv.per_degree[e]) {
      if (!check_invariant(a.action, f)) {
        r.fail("basis element invariant", Witness{f.to_string(), "not invariant"});
        break;
      }
    }
  }
  if (r.items().empty()) r.pass("basis element invariant");
  c.body += "action: " + name + "\ndegree bound: " + std::to_string(inv.degree_bound) + "\n";
  for (std::size_t e = 0; e < inv.per_degree.size(); ++e) {
    c.body += "  degree " + std::to_string(e) + ": " + std::to_string(inv.per_degree[e].size()) + "\n";
  }
  c.body += "generators:\n";
  for (const auto& t : inv.generators) c.body += "  " + t.name + " = " + t.generator.to_string() + "\n";
  c.results["invariants"] = to_json(inv);
  c.reports.push_back(std::move(r));
  c.emit_action(name, a);
}

void reduce_cmd(Context& c) {
  const std::string name = c.action_name();
  const SessionAction& a = c.action();
  const PoissonStructure& pm = Context::poisson_of(a, name);
  const Subgroupoid& h = c.subgroupoid();
  ReductionResult r = [&] {
    if (c.opt.route == "restrict") return reduce_restricted(a.action, h, pm, c.opt.degree_bound, c.opt.closure_cap);
    if (c.opt.route == "quotient") {
      return reduce_quotient(a.action, h.base_ideal.generators(), pm, c.opt.degree_bound, c.opt.closure_cap);
    }
    throw InputError("unknown route '" + c.opt.route + "' (expected restrict or quotient)");
  }();
  c.body += describe(r);
  c.results["reduction"] = to_json(r);
  c.reports.push_back(verify_reduction(r, c.opt.verify_trials, c.opt.seed));
  c.emit_reduction(r);
}

void residual_cmd(Context& c) {
  // --with names the action being reduced (by H); --action the one that descends.
  const std::string i_name = c.pick(c.opt.with, "action");
  const std::string g_name = c.opt.action.empty() ? c.first_action_except(i_name) : c.opt.action;
  const SessionAction& g = c.session.action(g_name);
  const SessionAction& i = c.session.action(i_name);
  const PoissonStructure& pm = i.poisson ? *i.poisson : Context::poisson_of(g, g_name);
  ResidualResult r = residual_action(g.action, i.action, c.subgroupoid(), pm, c.opt.degree_bound,
                                     c.opt.closure_cap);
  c.body += describe(r.reduction);
  c.body += "residual moment:\n";
  for (std::size_t k = 0; k < r.residual.moment.images().size(); ++k) {
    c.body += "  " + r.residual.moment.source().ring()->name(k) + " -> " +
              r.residual.moment.image(k).to_string() + "\n";
  }
  c.body += "residual action:\n";
  for (std::size_t k = 0; k < r.residual.act.images().size(); ++k) {
    c.body += "  " + r.residual.act.source().ring()->name(k) + " -> " +
              r.residual.act.image(k).to_string() + "\n";
  }
  c.results["reduction"] = to_json(r.reduction);
  c.results["residual"] = to_json(r.residual);
  c.reports.push_back(r.report);
  c.reports.push_back(verify_reduction(r.reduction, c.opt.verify_trials, c.opt.seed));
  c.emit_reduction(r.reduction);
  c.writer.groupoid("G", r.residual.groupoid);
  c.writer.action("residual", r.residual, "G", "R", std::string("PR"));
}

void compose_cmd(Context& c) {
  const std::string n_name = c.pick(c.opt.with, "action");
  const std::string m_name = c.opt.action.empty() ? c.first_action_except(n_name) : c.opt.action;
  const SessionAction& m = c.session.action(m_name);
  const SessionAction& n = c.session.action(n_name);
  CompositionResult comp =
      compose_hamiltonian_schemes(m.action, Context::poisson_of(m, m_name), n.action,
                                  Context::poisson_of(n, n_name), c.opt.degree_bound, c.opt.closure_cap);
  const ResidualResult& r = comp.residual;
  c.body += describe(r.reduction);
  c.results["reduction"] = to_json(r.reduction);
  c.results["residual"] = to_json(r.residual);
  c.reports.push_back(r.report);
  c.reports.push_back(verify_reduction(r.reduction, c.opt.verify_trials, c.opt.seed));
  if (n.bimodule_of) {
    CheckReport unit = check_unit_composition(comp, m.action, *m.poisson);
    const bool iso = unit.passed();
    c.body += std::string("isomorphic to input reduction: ") + (iso ? "yes" : "no") + "\n";
    c.results["isomorphic_to_input"] = iso;
    c.reports.push_back(std::move(unit));
  }
  c.emit_reduction(r.reduction);
  c.writer.groupoid("G", r.residual.groupoid);
  c.writer.action("residual", r.residual, "G", "R", std::string("PR"));
}

Json options_json(const CommandOptions& o) {
  Json j;
  j["degree_bound"] = o.degree_bound;
  j["order"] = o.order;
  j["seed"] = o.seed;
  j["verify_trials"] = o.verify_trials;
  j["budget"] = o.budget ? Json(*o.budget) : Json(default_pair_budget());
  j["route"] = o.route;
  return j;
}

std::string status_name(int code) {
  switch (code) {
    case kExitPass: return "pass";
    case kExitFail: return "fail";
    case kExitBudget: return "budget";
    default: return "input-error";
  }
}

CommandResult error_result(const std::string& command, const std::string& session_path,
                           const CommandOptions& o, int code, const std::string& message,
                           const std::optional<std::string>& witness = std::nullopt) {
  CommandResult out;
  out.exit_code = code;
  out.text = "command: " + command + "\nerror: " + message + "\n";
  if (witness) out.text += "witness: " + *witness + "\n";
  out.text += "verdict: " + std::string(code == kExitBudget ? "BUDGET" : code == kExitFail ? "FAIL" : "ERROR") + "\n";
  Json j;
  j["command"] = command;
  j["session"] = session_path;
  j["options"] = options_json(o);
  j["status"] = status_name(code);
  j["exit_code"] = code;
  j["error"] = message;
  if (witness) j["witness"] = *witness;
  out.report = std::move(j);
  return out;
}

}  // namespace

CommandResult run_command(const std::string& command, const Session& session,
                          const CommandOptions& options) {
  if (options.degree_bound < 0) throw InputError("--degree-bound must be nonnegative");
  if (options.verify_trials < 0) throw InputError("--verify-trials must be nonnegative");
  Context c{session, options, {}, Json::object(), {}, {}, {}};
  if (command == "check-groupoid") {
    check_groupoid(c);
  } else if (command == "check-symplectic") {
    check_symplectic_cmd(c);
  } else if (command == "check-action") {
    check_action_cmd(c);
  } else if (command == "check-hamiltonian") {
    check_hamiltonian_cmd(c);
  } else if (command == "invariants") {
    invariants_cmd(c);
  } else if (command == "reduce") {
    reduce_cmd(c);
  } else if (command == "residual") {
    residual_cmd(c);
  } else if (command == "compose") {
    compose_cmd(c);
  } else {
    throw InputError("unknown command '" + command + "'");
  }
  bool ok = true;
  Json checks = Json::array();
  std::string text = "command: " + command + "\n" + c.body;
  for (const auto& r : c.reports) {
    ok = ok && r.passed();
    checks.push_back(to_json(r));
    text += r.to_text();
  }
  text += std::string("verdict: ") + (ok ? "PASS" : "FAIL") + "\n";
  CommandResult out;
  out.exit_code = ok ? kExitPass : kExitFail;
  out.text = std::move(text);
  Json j;
  j["command"] = command;
  j["options"] = options_json(options);
  j["status"] = status_name(out.exit_code);
  j["exit_code"] = out.exit_code;
  j["checks"] = std::move(checks);
  j["results"] = std::move(c.results);
  out.report = std::move(j);
  out.session = c.writer.text();
  return out;
}

CommandResult run_session_command(const std::string& command, const std::string& session_path,
                                  const CommandOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CommandResult out;
  try {
    set_default_order(parse_order(options.order));
    set_default_pair_budget(options.budget ? *options.budget : default_pair_budget());
    Session session = parse_session_file(session_path);
    out = run_command(command, session, options);
    Json j;
    j["command"] = command;
    j["session"] = session_path;
    for (auto& [k, v] : out.report.items()) {
      if (k != "command") j[k] = v;
    }
    out.report = std::move(j);
  } catch (const BudgetExceeded& e) {
    out = error_result(command, session_path, options, kExitBudget, e.what());
  } catch (const VerificationError& e) {
    out = error_result(command, session_path, options, kExitFail, e.what(), e.witness());
  } catch (const InputError& e) {
    out = error_result(command, session_path, options, kExitInput, e.what());
  }
  if (options.timing) {
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.report["timing"] = {{"seconds", seconds}};
    std::ostringstream s;
    s << "time: " << seconds << " s\n";
    out.text += s.str();
  }
  return out;
}

void write_atomically(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError("cannot write '" + tmp + "'");
    f << content;
    f.flush();
    if (!f) throw InputError("cannot write '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw InputError("cannot move the report into '" + path + "'");
  }
}

}  // namespace coisored
