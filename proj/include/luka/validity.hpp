#pragma once

#include <map>
#include <optional>

#include "luka/semantics.hpp"

namespace luka {

// Formula template over "?"-metavariables, e.g. "(B{?a} ?phi & B{?a}(?phi -> ?psi)) -> B{?a} ?psi".
struct Scheme {
  Formula tmpl;
  std::vector<std::string> metavars;        // formula metavariables, template order
  std::vector<std::string> agent_vars;      // agent metavariables, template order

  static Scheme parse(std::string_view text);
  static Scheme of(Formula tmpl);
  bool ground() const { return metavars.empty() && agent_vars.empty(); }
};

struct Substitution {
  std::map<std::string, Formula> formulas;
  std::map<std::string, AgentId> agents;
};

// Leaf replacement; throws ModelError-style std::invalid_argument when a
// metavariable of the scheme has no binding.
Formula instantiate(const Scheme& s, const Substitution& subst);

struct ValidityResult {
  bool valid;            // min_value == 1
  Rational01 min_value;  // min over states of V_s(f)
  StateId argmin;        // first minimizing state in id order
};

ValidityResult check_validity_in_model(const Model& m, const Formula& f,
                                       SkepticalVariant variant);

struct SearchConfig {
  SamplerConfig sampler;       // seed here is the base seed; trial t uses seed+t
  int instantiation_depth = 1; // 0 = atomic instantiations only
  long long trials = 1000;
  SkepticalVariant variant = SkepticalVariant::SourceState;
};

struct CounterexampleReport {
  Model model;
  StateId state;
  Substitution instantiation;
  Rational01 value;  // < 1; re-evaluating the instantiated scheme reproduces it
  long long trial;
};

// Samples `trials` models (deterministic per config), instantiating the
// scheme's metavariables from a depth-bounded pool, atoms first. Returns the
// first violation found; absence is not a validity proof.
std::optional<CounterexampleReport> search_counterexample(const Scheme& s,
                                                          const SearchConfig& cfg);

// The deterministic instantiation pool used by the search: atoms and bot
// first, then connective combinations up to `depth` rounds. Belief operators
// use the given agent and kind.
std::vector<Formula> instantiation_pool(int depth, const AgentId& agent, BeliefKind kind,
                                        const std::vector<PropId>& props);

}  // namespace luka
