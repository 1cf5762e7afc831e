// Command-line front end: evaluate formulas on fuzzy Kripke models, check
// frame properties and validity, search for counterexamples to axiom
// schemes, verify Hilbert-style derivations, and build the bundled scenario
// models.
//
// Exit status: 0 = success / property holds; 1 = property fails or a
// counterexample was found; 2 = usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "luka/hilbert.hpp"
#include "luka/scenarios.hpp"

using namespace luka;
using nlohmann::json;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

json rational_json(const Rational01& r) {
  return json{{"num", r.num()},
              {"den", r.den()},
              {"fraction", r.to_fraction()},
              {"decimal", r.to_decimal()}};
}

struct GlobalFlags {
  bool json_out = false;
  std::string variant = "source";
  std::uint64_t seed = 0;
  long long trials = 1000;

  SkepticalVariant skeptical_variant() const {
    auto v = parse_skeptical_variant(variant);
    if (!v) throw std::runtime_error("unknown variant: " + variant + " (source|target)");
    return *v;
  }
};

json model_json(const Model& m) { return json::parse(save_model(m)); }

void print_model(std::ostream& os, const Model& m) {
  os << "states:";
  for (const auto& s : m.states()) os << " " << s;
  os << "\n";
  for (size_t a = 0; a < m.agents().size(); a++) {
    os << "access[" << m.agents()[a] << "]:\n";
    for (size_t s = 0; s < m.state_count(); s++) {
      os << "  " << m.states()[s] << ":";
      for (size_t t = 0; t < m.state_count(); t++)
        os << " " << m.access(a, s, t).to_fraction();
      os << "\n";
    }
  }
  os << "valuation:\n";
  for (size_t s = 0; s < m.state_count(); s++) {
    os << "  " << m.states()[s] << ":";
    for (size_t p = 0; p < m.props().size(); p++)
      os << " " << m.props()[p] << "=" << m.valuation(s, p).to_fraction();
    os << "\n";
  }
}

// ---------------------------------------------------------------------------

int cmd_eval(const GlobalFlags& g, const std::string& model_path, const std::string& state,
             const std::string& formula_text) {
  Model m = load_model(read_file(model_path));
  Formula f = parse_formula(formula_text);
  EvalContext ctx{m, g.skeptical_variant()};
  Rational01 v = eval_formula(ctx, state, f);
  if (g.json_out)
    std::cout << json{{"state", state},
                      {"formula", print_formula(f)},
                      {"variant", skeptical_variant_name(ctx.variant)},
                      {"value", rational_json(v)}}
                     .dump()
              << "\n";
  else
    std::cout << v.display() << "\n";
  return kExitHolds;
}

int cmd_frame(const GlobalFlags& g, const std::string& model_path,
              const std::string& property) {
  Model m = load_model(read_file(model_path));
  auto p = parse_frame_property(property);
  if (!p)
    throw std::runtime_error(
        "unknown frame property: " + property +
        " (serial|reflexive|transitive|recognizable|r-crisp)");
  FrameCheck check = check_frame_property(m, *p);
  if (g.json_out) {
    json out{{"property", frame_property_name(*p)}, {"holds", check.holds}};
    if (check.witness)
      out["witness"] = json{{"agent", check.witness->agent}, {"states", check.witness->states}};
    std::cout << out.dump() << "\n";
  } else if (check.holds) {
    std::cout << frame_property_name(*p) << ": holds\n";
  } else {
    std::cout << frame_property_name(*p) << ": fails for agent " << check.witness->agent
              << " at (";
    for (size_t i = 0; i < check.witness->states.size(); i++)
      std::cout << (i ? ", " : "") << check.witness->states[i];
    std::cout << ")\n";
  }
  return check.holds ? kExitHolds : kExitFails;
}

int cmd_valid(const GlobalFlags& g, const std::string& model_path,
              const std::string& formula_text) {
  Model m = load_model(read_file(model_path));
  Formula f = parse_formula(formula_text);
  auto res = check_validity_in_model(m, f, g.skeptical_variant());
  if (g.json_out) {
    json out{{"valid", res.valid}, {"min", rational_json(res.min_value)}};
    if (!res.valid) out["argmin"] = res.argmin;
    std::cout << out.dump() << "\n";
  } else if (res.valid) {
    std::cout << "valid\n";
  } else {
    std::cout << "not valid: min " << res.min_value.display() << " at " << res.argmin << "\n";
  }
  return res.valid ? kExitHolds : kExitFails;
}

int cmd_search(const GlobalFlags& g, const std::string& scheme_text, int states, int agents,
               long long denominator, int depth, const std::vector<std::string>& frames,
               const std::string& out_path) {
  Scheme scheme = Scheme::parse(scheme_text);
  SearchConfig cfg;
  cfg.sampler.states = states;
  cfg.sampler.agents = agents;
  cfg.sampler.denominator = denominator;
  cfg.sampler.seed = g.seed;
  for (const auto& name : frames) {
    auto p = parse_frame_property(name);
    if (!p) throw std::runtime_error("unknown frame property: " + name);
    cfg.sampler.constraints.push_back(*p);
  }
  cfg.instantiation_depth = depth;
  cfg.trials = g.trials;
  cfg.variant = g.skeptical_variant();

  auto report = search_counterexample(scheme, cfg);
  if (!report) {
    if (g.json_out)
      std::cout << json{{"found", false}, {"trials", cfg.trials}}.dump() << "\n";
    else
      std::cout << "no counterexample in " << cfg.trials
                << " trials (not a validity proof)\n";
    return kExitHolds;
  }
  json inst = json::object();
  for (const auto& [name, f] : report->instantiation.formulas)
    inst[name] = print_formula(f);
  for (const auto& [name, a] : report->instantiation.agents) inst[name] = a;
  if (g.json_out) {
    std::cout << json{{"found", true},
                      {"trial", report->trial},
                      {"state", report->state},
                      {"value", rational_json(report->value)},
                      {"instantiation", inst},
                      {"model", model_json(report->model)}}
                     .dump()
              << "\n";
  } else {
    std::cout << "counterexample (trial " << report->trial << "): value "
              << report->value.display() << " at " << report->state << "\n";
    std::cout << "instantiation: " << inst.dump() << "\n";
    print_model(std::cout, report->model);
  }
  if (!out_path.empty()) write_file(out_path, save_model(report->model));
  return kExitFails;
}

int cmd_prove(const GlobalFlags& g, const std::string& derivation_path) {
  DerivationFile file = load_derivation(read_file(derivation_path));
  VerifyResult res = verify_derivation(file.derivation, file.system);
  if (g.json_out) {
    json lines = json::array();
    for (const auto& d : res.lines)
      lines.push_back(json{{"line", d.line},
                           {"ok", d.ok},
                           {"premise_dependent", d.premise_dependent},
                           {"message", d.message}});
    std::cout << json{{"system", file.system.name()}, {"ok", res.ok}, {"lines", lines}}.dump()
              << "\n";
  } else {
    for (const auto& d : res.lines)
      std::cout << (d.ok ? "  ok " : "FAIL ") << d.line << ": "
                << print_formula(file.derivation.lines[d.line].formula) << "  [" << d.message
                << "]\n";
    std::cout << (res.ok ? "derivation verified" : "derivation rejected") << " ("
              << file.system.name() << ")\n";
  }
  return res.ok ? kExitHolds : kExitFails;
}

int cmd_scenario(const GlobalFlags& g, const std::string& kind, const std::string& config_path,
                 const std::string& out_path) {
  Model m = [&] {
    std::string text = read_file(config_path);
    if (kind == "muddy") return build_muddy_model(parse_muddy_config(text));
    if (kind == "cpa") return build_cpa_model(parse_cpa_config(text));
    throw std::runtime_error("unknown scenario: " + kind + " (muddy|cpa)");
  }();
  write_file(out_path, save_model(m));
  if (g.json_out)
    std::cout << json{{"written", out_path},
                      {"states", m.state_count()},
                      {"agents", m.agents().size()},
                      {"props", m.props().size()}}
                     .dump()
              << "\n";
  else
    std::cout << "wrote " << out_path << " (" << m.state_count() << " states, "
              << m.agents().size() << " agents)\n";
  return kExitHolds;
}

int cmd_cpastat(const GlobalFlags& g, const std::string& model_path, const std::string& agent,
                const std::string& prop, bool sweep, int nmin, int nmax, int queries,
                bool fresh, int explicit_max, int bound_poly) {
  if (sweep) {
    CpaSweepConfig cfg;
    cfg.n_min = nmin;
    cfg.n_max = nmax;
    cfg.queries = queries;
    cfg.reused = !fresh;
    cfg.explicit_max = explicit_max;
    cfg.bound_poly = bound_poly;
    cfg.variant = g.skeptical_variant();
    auto rows = cpa_security_sweep(cfg);
    bool all_pass = true;
    json jrows = json::array();
    for (const auto& row : rows) {
      all_pass = all_pass && row.pass;
      if (g.json_out)
        jrows.push_back(json{{"n", row.n},
                             {"statistic", rational_json(row.statistic)},
                             {"bound", rational_json(row.bound)},
                             {"pass", row.pass},
                             {"explicit", row.explicit_run}});
      else
        std::cout << "n=" << row.n << "  statistic " << row.statistic.display() << "  bound "
                  << row.bound.display() << "  " << (row.pass ? "pass" : "FAIL")
                  << (row.explicit_run ? "" : "  (closed form)") << "\n";
    }
    if (g.json_out)
      std::cout << json{{"rows", jrows}, {"all_pass", all_pass}}.dump() << "\n";
    return all_pass ? kExitHolds : kExitFails;
  }
  if (model_path.empty()) throw std::runtime_error("model file required unless --sweep");
  Model m = load_model(read_file(model_path));
  auto stat = belief_success_statistic(m, agent, prop, g.skeptical_variant());
  if (g.json_out)
    std::cout << json{{"count", stat.count_above},
                      {"total", stat.total_states},
                      {"ratio", rational_json(stat.ratio)}}
                     .dump()
              << "\n";
  else
    std::cout << stat.ratio.to_fraction() << " (" << stat.ratio.to_decimal() << "): "
              << stat.count_above << " of " << stat.total_states << " states\n";
  return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"doxastic Lukasiewicz logic toolkit"};
  app.require_subcommand(1);
  GlobalFlags g;
  app.add_flag("--json", g.json_out, "machine-readable JSON on stdout");
  app.add_option("--variant", g.variant, "skeptical-belief reading: source|target");
  app.add_option("--seed", g.seed, "base seed for sampling");
  app.add_option("--trials", g.trials, "sampling trial budget");

  std::string model_path, state, formula_text, property, scheme_text, derivation_path;
  std::string scenario_kind, config_path, out_path, agent = "a", prop = "p";
  int states = 3, agents = 1, depth = 1;
  long long denominator = 10;
  std::vector<std::string> frames;
  bool sweep = false, fresh = false;
  int nmin = 2, nmax = 8, queries = 1, explicit_max = 12, bound_poly = 2;

  auto* eval = app.add_subcommand("eval", "evaluate a formula at a state");
  eval->add_option("model", model_path)->required();
  eval->add_option("state", state)->required();
  eval->add_option("formula", formula_text)->required();

  auto* frame = app.add_subcommand("frame", "check a frame property");
  frame->add_option("model", model_path)->required();
  frame->add_option("property", property)->required();

  auto* valid = app.add_subcommand("valid", "check validity in one model");
  valid->add_option("model", model_path)->required();
  valid->add_option("formula", formula_text)->required();

  auto* search = app.add_subcommand("search", "search for a scheme counterexample");
  search->add_option("scheme", scheme_text)->required();
  search->add_option("--states", states, "states per sampled model");
  search->add_option("--agents", agents, "agents per sampled model");
  search->add_option("--den", denominator, "denominator bound for sampled values");
  search->add_option("--depth", depth, "instantiation depth");
  search->add_option("--frame", frames, "frame constraints for the sampler")->delimiter(',');
  search->add_option("--out", out_path, "write the found model to this file");

  auto* prove = app.add_subcommand("prove", "verify a derivation file");
  prove->add_option("derivation", derivation_path)->required();

  auto* scenario = app.add_subcommand("scenario", "build a scenario model");
  scenario->add_option("kind", scenario_kind)->required()->check(CLI::IsMember({"muddy", "cpa"}));
  scenario->add_option("config", config_path)->required();
  scenario->add_option("out", out_path)->required();

  auto* cpastat = app.add_subcommand("cpastat", "belief-success statistic / security sweep");
  cpastat->add_option("model", model_path);
  cpastat->add_option("--agent", agent);
  cpastat->add_option("--prop", prop);
  cpastat->add_flag("--sweep", sweep, "sweep over the security parameter");
  cpastat->add_option("--nmin", nmin);
  cpastat->add_option("--nmax", nmax);
  cpastat->add_option("--queries", queries, "learned nonces; the first is reused");
  cpastat->add_flag("--fresh", fresh, "challenge nonce is fresh, not reused");
  cpastat->add_option("--explicit-max", explicit_max, "build models explicitly up to this n");
  cpastat->add_option("--bound-poly", bound_poly, "bound(n) = 1/n^k");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitError;
  }

  try {
    if (eval->parsed()) return cmd_eval(g, model_path, state, formula_text);
    if (frame->parsed()) return cmd_frame(g, model_path, property);
    if (valid->parsed()) return cmd_valid(g, model_path, formula_text);
    if (search->parsed())
      return cmd_search(g, scheme_text, states, agents, denominator, depth, frames, out_path);
    if (prove->parsed()) return cmd_prove(g, derivation_path);
    if (scenario->parsed()) return cmd_scenario(g, scenario_kind, config_path, out_path);
    if (cpastat->parsed())
      return cmd_cpastat(g, model_path, agent, prop, sweep, nmin, nmax, queries, fresh,
                         explicit_max, bound_poly);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
