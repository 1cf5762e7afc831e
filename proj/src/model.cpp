#include "luka/model.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>

#include "json.hpp"

namespace luka {

namespace {

std::vector<size_t> sort_permutation(const std::vector<std::string>& ids) {
  std::vector<size_t> perm(ids.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](size_t a, size_t b) { return ids[a] < ids[b]; });
  return perm;
}

void check_unique(const std::vector<std::string>& ids, const char* what) {
  for (size_t i = 0; i + 1 < ids.size(); i++)
    if (ids[i] == ids[i + 1])
      throw ModelError(std::string("duplicate ") + what + " id: " + ids[i]);
}

void check_ident(const std::string& id, const char* what) {
  if (id.empty()) throw ModelError(std::string("empty ") + what + " id");
  auto ok_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto ok_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  if (!ok_start(id[0]))
    throw ModelError(std::string("invalid ") + what + " id: " + id);
  for (char c : id.substr(1))
    if (!ok_char(c)) throw ModelError(std::string("invalid ") + what + " id: " + id);
}

}  // namespace

Model::Model(std::vector<StateId> states, std::vector<AgentId> agents,
             std::vector<PropId> props,
             std::vector<std::vector<Rational01>> access_by_agent,
             std::vector<std::vector<Rational01>> valuation_by_state) {
  if (states.empty()) throw ModelError("at least one state required");
  if (agents.empty()) throw ModelError("at least one agent required");
  const size_t n = states.size();
  if (access_by_agent.size() != agents.size())
    throw ModelError("access matrices do not match agent count");
  for (const auto& mat : access_by_agent)
    if (mat.size() != n * n) throw ModelError("access matrix has wrong size");
  if (valuation_by_state.size() != n)
    throw ModelError("valuation rows do not match state count");
  for (const auto& row : valuation_by_state)
    if (row.size() != props.size()) throw ModelError("valuation row has wrong size");

  const bool sorted = std::is_sorted(states.begin(), states.end()) &&
                      std::is_sorted(agents.begin(), agents.end()) &&
                      std::is_sorted(props.begin(), props.end());
  if (sorted) {
    states_ = std::move(states);
    agents_ = std::move(agents);
    props_ = std::move(props);
    access_ = std::move(access_by_agent);
    valuation_ = std::move(valuation_by_state);
  } else {
    auto sp = sort_permutation(states);
    auto ap = sort_permutation(agents);
    auto pp = sort_permutation(props);

    states_.reserve(n);
    for (size_t i : sp) states_.push_back(std::move(states[i]));
    agents_.reserve(agents.size());
    for (size_t i : ap) agents_.push_back(std::move(agents[i]));
    props_.reserve(props.size());
    for (size_t i : pp) props_.push_back(std::move(props[i]));

    access_.resize(agents_.size());
    for (size_t a = 0; a < agents_.size(); a++) {
      const auto& src = access_by_agent[ap[a]];
      auto& dst = access_[a];
      dst.resize(n * n);
      for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++) dst[i * n + j] = src[sp[i] * n + sp[j]];
    }
    valuation_.resize(n);
    for (size_t i = 0; i < n; i++) {
      valuation_[i].resize(props_.size());
      for (size_t j = 0; j < props_.size(); j++)
        valuation_[i][j] = valuation_by_state[sp[i]][pp[j]];
    }
  }

  for (const auto& s : states_) check_ident(s, "state");
  for (const auto& a : agents_) check_ident(a, "agent");
  for (const auto& p : props_) check_ident(p, "prop");
  check_unique(states_, "state");
  check_unique(agents_, "agent");
  check_unique(props_, "prop");
}

std::optional<size_t> Model::find(const std::vector<std::string>& v, const std::string& id) {
  auto it = std::lower_bound(v.begin(), v.end(), id);
  if (it == v.end() || *it != id) return std::nullopt;
  return static_cast<size_t>(it - v.begin());
}

size_t Model::state_index(const StateId& id) const {
  auto i = find(states_, id);
  if (!i) throw ModelError("unknown state: " + id);
  return *i;
}

size_t Model::agent_index(const AgentId& id) const {
  auto i = find(agents_, id);
  if (!i) throw ModelError("unknown agent: " + id);
  return *i;
}

size_t Model::prop_index(const PropId& id) const {
  auto i = find(props_, id);
  if (!i) throw ModelError("unknown prop: " + id);
  return *i;
}

// ---------------------------------------------------------------------------
// Frame properties
// ---------------------------------------------------------------------------

std::string frame_property_name(FrameProperty p) {
  switch (p) {
    case FrameProperty::Serial: return "serial";
    case FrameProperty::Reflexive: return "reflexive";
    case FrameProperty::Transitive: return "transitive";
    case FrameProperty::Recognizable: return "recognizable";
    case FrameProperty::RCrisp: return "r-crisp";
  }
  return "?";
}

std::optional<FrameProperty> parse_frame_property(std::string_view name) {
  if (name == "serial") return FrameProperty::Serial;
  if (name == "reflexive") return FrameProperty::Reflexive;
  if (name == "transitive") return FrameProperty::Transitive;
  if (name == "recognizable") return FrameProperty::Recognizable;
  if (name == "r-crisp" || name == "rcrisp") return FrameProperty::RCrisp;
  return std::nullopt;
}

FrameCheck check_frame_property(const Model& m, FrameProperty p) {
  const size_t n = m.state_count();
  const Rational01 one = Rational01::one();
  const Rational01 half = Rational01::half();
  for (size_t a = 0; a < m.agents().size(); a++) {
    switch (p) {
      case FrameProperty::Serial:
        for (size_t s = 0; s < n; s++) {
          bool found = false;
          for (size_t t = 0; t < n && !found; t++) found = m.access(a, s, t) == one;
          if (!found)
            return {false, FrameWitness{m.agents()[a], {m.states()[s]}}};
        }
        break;
      case FrameProperty::Reflexive:
        for (size_t s = 0; s < n; s++)
          if (m.access(a, s, s) != one)
            return {false, FrameWitness{m.agents()[a], {m.states()[s]}}};
        break;
      case FrameProperty::Transitive:
        for (size_t s = 0; s < n; s++)
          for (size_t t = 0; t < n; t++)
            for (size_t u = 0; u < n; u++) {
              Rational01 lo = Rational01::min(m.access(a, s, t), m.access(a, t, u));
              if (m.access(a, s, u) < lo)
                return {false, FrameWitness{m.agents()[a],
                                            {m.states()[s], m.states()[t], m.states()[u]}}};
            }
        break;
      case FrameProperty::Recognizable:
        for (size_t s = 0; s < n; s++)
          for (size_t t = 0; t < n; t++)
            if (half < m.access(a, s, t))
              return {false, FrameWitness{m.agents()[a], {m.states()[s], m.states()[t]}}};
        break;
      case FrameProperty::RCrisp:
        for (size_t s = 0; s < n; s++)
          for (size_t t = 0; t < n; t++) {
            const Rational01& v = m.access(a, s, t);
            if (!v.is_zero() && !v.is_one())
              return {false, FrameWitness{m.agents()[a], {m.states()[s], m.states()[t]}}};
          }
        break;
    }
  }
  return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// File I/O
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

Rational01 parse_value(const json& j, const std::string& where) {
  if (!j.is_string())
    throw ModelError("value at " + where + " must be a string (\"0.6\" or \"3/5\")");
  auto r = Rational01::parse(j.get<std::string>());
  if (!r)
    throw ModelError("value at " + where + " is not a rational in [0,1]: " +
                     j.get<std::string>());
  return *r;
}

std::vector<std::string> parse_id_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw ModelError(std::string("missing or non-array \"") + key + "\"");
  std::vector<std::string> out;
  for (const auto& e : j[key]) {
    if (!e.is_string()) throw ModelError(std::string("non-string id in \"") + key + "\"");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

Model load_model(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ModelError(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object()) throw ModelError("model file must be a JSON object");
  auto states = parse_id_array(j, "states");
  auto agents = parse_id_array(j, "agents");
  auto props = parse_id_array(j, "props");
  if (states.empty()) throw ModelError("at least one state required");

  if (!j.contains("access") || !j["access"].is_object())
    throw ModelError("missing or non-object \"access\"");
  if (!j.contains("valuation") || !j["valuation"].is_object())
    throw ModelError("missing or non-object \"valuation\"");

  const size_t n = states.size();
  std::vector<std::vector<Rational01>> access(agents.size(),
                                              std::vector<Rational01>(n * n));
  for (size_t a = 0; a < agents.size(); a++) {
    if (!j["access"].contains(agents[a]))
      throw ModelError("missing access matrix for agent " + agents[a]);
    const json& rows = j["access"][agents[a]];
    for (size_t s = 0; s < n; s++) {
      if (!rows.contains(states[s]))
        throw ModelError("missing access row " + agents[a] + "/" + states[s]);
      const json& row = rows[states[s]];
      for (size_t t = 0; t < n; t++) {
        if (!row.contains(states[t]))
          throw ModelError("missing access entry " + agents[a] + "/" + states[s] + "/" +
                           states[t]);
        access[a][s * n + t] =
            parse_value(row[states[t]], agents[a] + "/" + states[s] + "/" + states[t]);
      }
    }
  }

  std::vector<std::vector<Rational01>> valuation(n, std::vector<Rational01>(props.size()));
  for (size_t s = 0; s < n; s++) {
    if (!j["valuation"].contains(states[s]))
      throw ModelError("missing valuation for state " + states[s]);
    const json& row = j["valuation"][states[s]];
    for (size_t p = 0; p < props.size(); p++) {
      if (!row.contains(props[p]))
        throw ModelError("missing valuation entry " + states[s] + "/" + props[p]);
      valuation[s][p] = parse_value(row[props[p]], states[s] + "/" + props[p]);
    }
  }

  return Model(std::move(states), std::move(agents), std::move(props), std::move(access),
               std::move(valuation));
}

std::string save_model(const Model& m) {
  json j;
  j["states"] = m.states();
  j["agents"] = m.agents();
  j["props"] = m.props();
  const size_t n = m.state_count();
  json access = json::object();
  for (size_t a = 0; a < m.agents().size(); a++) {
    json rows = json::object();
    for (size_t s = 0; s < n; s++) {
      json row = json::object();
      for (size_t t = 0; t < n; t++) row[m.states()[t]] = m.access(a, s, t).to_fraction();
      rows[m.states()[s]] = std::move(row);
    }
    access[m.agents()[a]] = std::move(rows);
  }
  j["access"] = std::move(access);
  json valuation = json::object();
  for (size_t s = 0; s < n; s++) {
    json row = json::object();
    for (size_t p = 0; p < m.props().size(); p++)
      row[m.props()[p]] = m.valuation(s, p).to_fraction();
    valuation[m.states()[s]] = std::move(row);
  }
  j["valuation"] = std::move(valuation);
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

namespace {

bool has(const std::vector<FrameProperty>& v, FrameProperty p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

// mt19937_64 output is fully specified; avoid std::uniform_int_distribution,
// whose mapping is implementation-defined.
long long draw(std::mt19937_64& rng, long long bound_inclusive) {
  return static_cast<long long>(rng() % static_cast<unsigned long long>(bound_inclusive + 1));
}

std::string nth_name(const char* prefix, size_t i, size_t total) {
  size_t width = std::to_string(total > 0 ? total - 1 : 0).size();
  std::string num = std::to_string(i);
  return prefix + std::string(width - num.size(), '0') + num;
}

}  // namespace

Model sample_model(const SamplerConfig& cfg) {
  if (cfg.states < 1) throw ModelError("sampler needs at least one state");
  if (cfg.agents < 1) throw ModelError("sampler needs at least one agent");
  if (cfg.denominator < 1) throw ModelError("sampler denominator must be >= 1");

  const bool serial = has(cfg.constraints, FrameProperty::Serial);
  const bool reflexive = has(cfg.constraints, FrameProperty::Reflexive);
  const bool transitive = has(cfg.constraints, FrameProperty::Transitive);
  const bool recognizable = has(cfg.constraints, FrameProperty::Recognizable);
  const bool rcrisp = has(cfg.constraints, FrameProperty::RCrisp);
  if (recognizable && (serial || reflexive))
    throw ModelError("unsatisfiable frame constraints: " +
                     std::string(serial ? "serial" : "reflexive") +
                     " needs an entry 1, recognizable caps entries at 1/2");

  const size_t n = static_cast<size_t>(cfg.states);
  std::vector<StateId> states;
  for (size_t i = 0; i < n; i++) states.push_back(nth_name("s", i, n));
  std::vector<AgentId> agents;
  for (int i = 0; i < cfg.agents; i++) {
    if (i < 26)
      agents.push_back(std::string(1, static_cast<char>('a' + i)));
    else
      agents.push_back(nth_name("a", static_cast<size_t>(i), static_cast<size_t>(cfg.agents)));
  }
  std::vector<PropId> props;
  for (int i = 0; i < cfg.props; i++) {
    if (i == 0) props.push_back("p");
    else if (i == 1) props.push_back("q");
    else props.push_back("p" + std::to_string(i));
  }

  std::mt19937_64 rng(cfg.seed);
  const long long d = cfg.denominator;
  auto sample_value = [&] { return Rational01::of(draw(rng, d), d); };

  std::vector<std::vector<Rational01>> access(agents.size(),
                                              std::vector<Rational01>(n * n));
  const Rational01 one = Rational01::one();
  const Rational01 half = Rational01::half();
  for (auto& mat : access) {
    for (auto& v : mat) v = sample_value();
    if (recognizable && rcrisp) {
      // {0,1} intersected with [0,1/2] leaves only 0.
      for (auto& v : mat) v = Rational01::zero();
    } else {
      if (reflexive)
        for (size_t s = 0; s < n; s++) mat[s * n + s] = one;
      if (serial)
        for (size_t s = 0; s < n; s++)
          mat[s * n + static_cast<size_t>(draw(rng, static_cast<long long>(n) - 1))] = one;
      if (recognizable)
        for (auto& v : mat) v = Rational01::min(v, half);
      if (rcrisp)
        for (auto& v : mat) v = (v < half) ? Rational01::zero() : one;
    }
    if (transitive) {
      // Min-transitive closure; raises entries only, reaches a fixpoint.
      bool changed = true;
      while (changed) {
        changed = false;
        for (size_t s = 0; s < n; s++)
          for (size_t t = 0; t < n; t++)
            for (size_t u = 0; u < n; u++) {
              Rational01 lo = Rational01::min(mat[s * n + t], mat[t * n + u]);
              if (mat[s * n + u] < lo) {
                mat[s * n + u] = lo;
                changed = true;
              }
            }
      }
    }
  }

  std::vector<std::vector<Rational01>> valuation(n, std::vector<Rational01>(props.size()));
  for (auto& row : valuation)
    for (auto& v : row) v = sample_value();

  return Model(std::move(states), std::move(agents), std::move(props), std::move(access),
               std::move(valuation));
}

}  // namespace luka
