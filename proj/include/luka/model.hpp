#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "luka/formula.hpp"
#include "luka/rational.hpp"

namespace luka {

using StateId = std::string;

struct ModelError : std::runtime_error {
  explicit ModelError(const std::string& msg) : std::runtime_error(msg) {}
};

// Finite fuzzy Kripke structure: per-agent accessibility matrix r_a over
// states^2 and per-state fuzzy valuation of atomic propositions. Immutable
// after construction; state/agent/prop ids are kept sorted so enumeration
// order is always lexicographic id order.
class Model {
public:
  // Matrices are given in the order of the *input* id vectors (row-major
  // from*n+to for access); the constructor sorts ids and permutes entries.
  Model(std::vector<StateId> states, std::vector<AgentId> agents,
        std::vector<PropId> props,
        std::vector<std::vector<Rational01>> access_by_agent,
        std::vector<std::vector<Rational01>> valuation_by_state);

  size_t state_count() const { return states_.size(); }
  const std::vector<StateId>& states() const { return states_; }
  const std::vector<AgentId>& agents() const { return agents_; }
  const std::vector<PropId>& props() const { return props_; }

  size_t state_index(const StateId& id) const;
  size_t agent_index(const AgentId& id) const;
  size_t prop_index(const PropId& id) const;
  bool has_state(const StateId& id) const { return find(states_, id).has_value(); }

  const Rational01& access(size_t agent, size_t from, size_t to) const {
    return access_[agent][from * states_.size() + to];
  }
  const Rational01& valuation(size_t state, size_t prop) const {
    return valuation_[state][prop];
  }

  bool operator==(const Model& other) const = default;

private:
  static std::optional<size_t> find(const std::vector<std::string>& v, const std::string& id);

  std::vector<StateId> states_;
  std::vector<AgentId> agents_;
  std::vector<PropId> props_;
  std::vector<std::vector<Rational01>> access_;     // [agent][from*n+to]
  std::vector<std::vector<Rational01>> valuation_;  // [state][prop]
};

enum class FrameProperty : unsigned char { Serial, Reflexive, Transitive, Recognizable, RCrisp };

std::string frame_property_name(FrameProperty p);
std::optional<FrameProperty> parse_frame_property(std::string_view name);

// Agent plus the state tuple violating the property: (s) for serial,
// (s) for reflexive, (s,s',s'') for transitive, (s,s') for the rest.
struct FrameWitness {
  AgentId agent;
  std::vector<StateId> states;
};

struct FrameCheck {
  bool holds;
  std::optional<FrameWitness> witness;  // first violation in enumeration order
};

FrameCheck check_frame_property(const Model& m, FrameProperty p);

// JSON model files:
//   {"states":[...], "agents":[...], "props":[...],
//    "access":{agent:{from:{to:"3/5"}}}, "valuation":{state:{prop:"0.8"}}}
// Values are strings, decimal or fraction, parsed exactly; every access and
// valuation entry must be present.
Model load_model(const std::string& text);
std::string save_model(const Model& m);

struct SamplerConfig {
  int states = 3;
  int agents = 1;
  int props = 2;
  long long denominator = 10;  // all sampled values are k/denominator, reduced
  std::uint64_t seed = 0;
  std::vector<FrameProperty> constraints;
};

// Deterministic for a fixed config; all requested frame properties hold by
// construction. Throws ModelError on unsatisfiable constraint sets
// (serial+recognizable, reflexive+recognizable).
Model sample_model(const SamplerConfig& cfg);

}  // namespace luka
