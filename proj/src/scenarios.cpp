#include "luka/scenarios.hpp"

#include <algorithm>

#include "json.hpp"

namespace luka {

namespace {

Rational01 grid_value(int index, int resolution) {
  // Grid {0, 1/(n-1), ..., 1}; resolution >= 2.
  return Rational01::of(index, resolution - 1);
}

Rational01 abs_diff(const Rational01& a, const Rational01& b) {
  // |a-b| = max(a,b) - min(a,b); complement trick keeps everything in [0,1]:
  // max - min = 1 - (min + (1 - max)) via strong_disj of complements.
  const Rational01& hi = Rational01::max(a, b);
  const Rational01& lo = Rational01::min(a, b);
  return Rational01::strong_disj(lo, hi.complement()).complement();
}

}  // namespace

Rational01 muddy_tau(const MuddyConfig& cfg, int i, int j,
                     std::span<const Rational01> s, std::span<const Rational01> s_prime) {
  if (i < 1 || i > cfg.children || j < 1 || j > cfg.children)
    throw ScenarioError("child index out of range");
  if (s.size() != static_cast<size_t>(cfg.children) || s_prime.size() != s.size())
    throw ScenarioError("state tuple has wrong arity");
  const Rational01& impairment = cfg.impairments[static_cast<size_t>(i - 1)].second;
  const Rational01& mj = s[static_cast<size_t>(j - 1)];
  const Rational01& mj_prime = s_prime[static_cast<size_t>(j - 1)];
  if (mj == mj_prime) return impairment;
  Rational01 damp = Rational01::product(cfg.alpha, abs_diff(mj, mj_prime)).complement();
  return Rational01::product(impairment, damp);
}

Model build_muddy_model(const MuddyConfig& cfg) {
  if (cfg.children < 1) throw ScenarioError("at least one child required");
  if (cfg.resolution < 2) throw ScenarioError("grid resolution must be >= 2");
  if (static_cast<int>(cfg.impairments.size()) != cfg.children)
    throw ScenarioError("impairments must list exactly one value per child");
  if (!std::is_sorted(cfg.impairments.begin(), cfg.impairments.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; }))
    throw ScenarioError("impairments must be sorted by agent id");
  if (cfg.alpha.is_zero() || cfg.alpha.is_one())
    throw ScenarioError("alpha must be strictly between 0 and 1");

  const int k = cfg.children, n = cfg.resolution;
  size_t count = 1;
  for (int i = 0; i < k; i++) {
    count *= static_cast<size_t>(n);
    if (count > cfg.state_cap)
      throw ScenarioError("state cap exceeded: n^k > " + std::to_string(cfg.state_cap));
  }

  // States are k-digit base-n counters; names use zero-padded digit strings
  // so lexicographic id order equals counter order.
  size_t width = std::to_string(n - 1).size();
  std::vector<std::vector<Rational01>> tuples;
  std::vector<StateId> states;
  std::vector<int> digits(static_cast<size_t>(k), 0);
  while (true) {
    std::string name = "s";
    std::vector<Rational01> tuple;
    for (int j = 0; j < k; j++) {
      std::string d = std::to_string(digits[static_cast<size_t>(j)]);
      name += "_" + std::string(width - d.size(), '0') + d;
      tuple.push_back(grid_value(digits[static_cast<size_t>(j)], n));
    }
    states.push_back(std::move(name));
    tuples.push_back(std::move(tuple));
    int j = k - 1;
    for (; j >= 0; j--) {
      if (++digits[static_cast<size_t>(j)] < n) break;
      digits[static_cast<size_t>(j)] = 0;
    }
    if (j < 0) break;
  }

  std::vector<AgentId> agents;
  std::vector<PropId> props;
  for (const auto& [agent, impairment] : cfg.impairments) {
    (void)impairment;
    agents.push_back(agent);
    props.push_back("m_" + agent);
  }

  std::vector<std::vector<Rational01>> access(
      agents.size(), std::vector<Rational01>(count * count));
  for (int i = 1; i <= k; i++) {
    auto& mat = access[static_cast<size_t>(i - 1)];
    for (size_t s = 0; s < count; s++)
      for (size_t t = 0; t < count; t++) {
        Rational01 acc = muddy_tau(cfg, i, 1, tuples[s], tuples[t]);
        for (int j = 2; j <= k; j++)
          acc = Rational01::min(acc, muddy_tau(cfg, i, j, tuples[s], tuples[t]));
        mat[s * count + t] = acc;
      }
  }

  std::vector<std::vector<Rational01>> valuation(count);
  for (size_t s = 0; s < count; s++) valuation[s] = tuples[s];

  return Model(std::move(states), std::move(agents), std::move(props), std::move(access),
               std::move(valuation));
}

// ---------------------------------------------------------------------------
// CPA experiment
// ---------------------------------------------------------------------------

namespace {

bool is_bits(const std::string& s, int n) {
  if (static_cast<int>(s.size()) != n) return false;
  for (char c : s)
    if (c != '0' && c != '1') return false;
  return true;
}

void validate_cpa_config(const CpaConfig& cfg) {
  if (cfg.n_bits < 1 || cfg.n_bits > 16)
    throw ScenarioError("n_bits must be between 1 and 16 for explicit construction");
  if (!is_bits(cfg.challenge, cfg.n_bits))
    throw ScenarioError("challenge must be an n-bit string");
  for (const auto& q : cfg.queried)
    if (!is_bits(q, cfg.n_bits)) throw ScenarioError("queried nonce must be an n-bit string");
  auto sorted = cfg.queried;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ScenarioError("duplicate queried nonce");
  if (cfg.distinguish_grade.is_zero())
    throw ScenarioError("distinguish_grade must be in (0,1]");
}

}  // namespace

Model build_cpa_model(const CpaConfig& cfg) {
  validate_cpa_config(cfg);

  const size_t count = static_cast<size_t>(1) << cfg.n_bits;
  std::vector<StateId> states;
  states.reserve(count);
  std::vector<bool> queried(count, false);
  auto bits_to_index = [&](const std::string& b) {
    size_t v = 0;
    for (char c : b) v = v * 2 + static_cast<size_t>(c - '0');
    return v;
  };
  for (size_t i = 0; i < count; i++) {
    std::string name(static_cast<size_t>(cfg.n_bits), '0');
    for (int b = 0; b < cfg.n_bits; b++)
      if (i & (static_cast<size_t>(1) << (cfg.n_bits - 1 - b)))
        name[static_cast<size_t>(b)] = '1';
    states.push_back("s" + name);
  }
  for (const auto& q : cfg.queried) queried[bits_to_index(q)] = true;

  std::vector<std::vector<Rational01>> access(1, std::vector<Rational01>(count * count));
  auto& mat = access[0];
  for (size_t s = 0; s < count; s++)
    for (size_t t = 0; t < count; t++)
      mat[s * count + t] = queried[t] ? Rational01::zero() : cfg.distinguish_grade;

  const bool reused = queried[bits_to_index(cfg.challenge)];
  std::vector<std::vector<Rational01>> valuation(count, {Rational01::half()});
  if (cfg.known_bit) {
    for (auto& row : valuation) row[0] = Rational01::one();
  } else if (reused) {
    valuation[bits_to_index(cfg.challenge)][0] = Rational01::one();
  }

  return Model(std::move(states), {"a"}, {"p"}, std::move(access), std::move(valuation));
}

BeliefStat belief_success_statistic(const Model& m, const AgentId& agent, const PropId& prop,
                                    SkepticalVariant variant) {
  (void)m.agent_index(agent);
  (void)m.prop_index(prop);
  EvalContext ctx{m, variant};
  Formula belief = Formula::belief(agent, BeliefKind::Skeptical, Formula::atom(prop));
  auto values = eval_all_states(ctx, belief);
  BeliefStat stat;
  stat.total_states = static_cast<long long>(values.size());
  const Rational01 half = Rational01::half();
  for (const auto& v : values)
    if (half < v) stat.count_above++;
  stat.ratio = Rational01::of(stat.count_above, stat.total_states);
  return stat;
}

std::vector<SweepRow> cpa_security_sweep(const CpaSweepConfig& cfg) {
  if (cfg.n_min < 1 || cfg.n_max < cfg.n_min)
    throw ScenarioError("invalid sweep range");
  if (cfg.queries < 0) throw ScenarioError("negative query count");
  if (cfg.bound_poly < 1) throw ScenarioError("bound exponent must be >= 1");

  std::vector<SweepRow> rows;
  for (int n = cfg.n_min; n <= cfg.n_max; n++) {
    SweepRow row;
    row.n = n;
    long long poly = 1;
    for (int i = 0; i < cfg.bound_poly; i++) poly *= n;
    row.bound = Rational01::of(1, poly);
    if ((n < 63 ? (static_cast<long long>(cfg.queries) > (1LL << n)) : false))
      throw ScenarioError("more queries than nonces");

    row.explicit_run = n <= cfg.explicit_max && n <= 16;
    if (row.explicit_run) {
      CpaConfig mc;
      mc.n_bits = n;
      for (int q = 0; q < cfg.queries; q++) {
        std::string bits(static_cast<size_t>(n), '0');
        int v = q;
        for (int b = n - 1; b >= 0 && v > 0; b--, v /= 2)
          bits[static_cast<size_t>(b)] = static_cast<char>('0' + (v & 1));
        mc.queried.push_back(std::move(bits));
      }
      if (cfg.reused && cfg.queries > 0) {
        mc.challenge = mc.queried.front();
      } else {
        // A nonce outside the queried prefix; all-ones is free when the
        // queried set is the numeric prefix 0..queries-1 < 2^n.
        mc.challenge = std::string(static_cast<size_t>(n), '1');
        if (static_cast<unsigned long long>(cfg.queries) >= (1ULL << n))
          throw ScenarioError("no fresh nonce available");
      }
      Model m = build_cpa_model(mc);
      row.statistic = belief_success_statistic(m, "a", "p", cfg.variant).ratio;
    } else {
      if (cfg.queries > 1)
        throw ScenarioError("closed form only available for a single query; raise explicit_max");
      bool hit = cfg.reused && cfg.queries == 1;
      row.statistic = hit ? Rational01::of(1, 1LL << n) : Rational01::zero();
    }
    row.pass = row.statistic <= row.bound;
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// JSON configs
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("bad JSON: ") + e.what());
  }
}

Rational01 value_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    throw ScenarioError(std::string("missing or non-string \"") + key + "\"");
  auto r = Rational01::parse(j[key].get<std::string>());
  if (!r) throw ScenarioError(std::string("bad rational for \"") + key + "\"");
  return *r;
}

}  // namespace

MuddyConfig parse_muddy_config(const std::string& text) {
  json j = parse_json(text);
  MuddyConfig cfg;
  if (!j.contains("children") || !j["children"].is_number_integer())
    throw ScenarioError("missing integer \"children\"");
  cfg.children = j["children"].get<int>();
  if (!j.contains("resolution") || !j["resolution"].is_number_integer())
    throw ScenarioError("missing integer \"resolution\"");
  cfg.resolution = j["resolution"].get<int>();
  cfg.alpha = value_field(j, "alpha");
  if (!j.contains("impairments") || !j["impairments"].is_object())
    throw ScenarioError("missing \"impairments\" object");
  for (const auto& [agent, value] : j["impairments"].items()) {
    if (!value.is_string()) throw ScenarioError("impairment values must be strings");
    auto r = Rational01::parse(value.get<std::string>());
    if (!r) throw ScenarioError("bad impairment for " + agent);
    cfg.impairments.emplace_back(agent, *r);
  }
  std::sort(cfg.impairments.begin(), cfg.impairments.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  if (j.contains("state_cap")) cfg.state_cap = j["state_cap"].get<size_t>();
  return cfg;
}

CpaConfig parse_cpa_config(const std::string& text) {
  json j = parse_json(text);
  CpaConfig cfg;
  if (!j.contains("n_bits") || !j["n_bits"].is_number_integer())
    throw ScenarioError("missing integer \"n_bits\"");
  cfg.n_bits = j["n_bits"].get<int>();
  if (!j.contains("queried") || !j["queried"].is_array())
    throw ScenarioError("missing \"queried\" array");
  for (const auto& q : j["queried"]) {
    if (!q.is_string()) throw ScenarioError("queried entries must be strings");
    cfg.queried.push_back(q.get<std::string>());
  }
  if (!j.contains("challenge") || !j["challenge"].is_string())
    throw ScenarioError("missing \"challenge\" string");
  cfg.challenge = j["challenge"].get<std::string>();
  if (j.contains("distinguish_grade")) cfg.distinguish_grade = value_field(j, "distinguish_grade");
  if (j.contains("known_bit")) {
    if (!j["known_bit"].is_boolean()) throw ScenarioError("\"known_bit\" must be a boolean");
    cfg.known_bit = j["known_bit"].get<bool>();
  }
  validate_cpa_config(cfg);
  return cfg;
}

}  // namespace luka
