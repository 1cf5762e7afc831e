#pragma once

#include <span>

#include "luka/semantics.hpp"

namespace luka {

struct ScenarioError : std::runtime_error {
  explicit ScenarioError(const std::string& msg) : std::runtime_error(msg) {}
};

// Fuzzy muddy children: k children on an n-point mud grid {0, 1/(n-1), .., 1},
// one state per k-tuple of grid values. Agent a_i's accessibility between two
// states is min over coordinates j of
//   tau(i,j) = V_i * (1 - alpha*|m_j - m_j'|)   if m_j != m_j'
//   tau(i,j) = V_i                              otherwise
// where V_i is the agent's visual impairment. Proposition m_<agent> takes the
// agent's own coordinate.
struct MuddyConfig {
  int children = 2;    // k >= 1
  int resolution = 3;  // n >= 2 grid points
  std::vector<std::pair<AgentId, Rational01>> impairments;  // sorted by agent id
  Rational01 alpha;    // strictly between 0 and 1
  size_t state_cap = 10000;
};

// tau for 1-based child indices i (observer) and j (observed coordinate).
Rational01 muddy_tau(const MuddyConfig& cfg, int i, int j,
                     std::span<const Rational01> s, std::span<const Rational01> s_prime);

Model build_muddy_model(const MuddyConfig& cfg);

// Chosen-plaintext indistinguishability game at toy scale: one state per
// n-bit nonce. Columns of nonces whose keystream the adversary has learned
// get accessibility 0 from everywhere; every other pair gets
// distinguish_grade. The challenge bit proposition p is 1 at the challenge
// state when its nonce was reused, otherwise 1/2 everywhere.
struct CpaConfig {
  int n_bits = 2;                   // 1..16
  std::vector<std::string> queried; // n-bit strings with known keystream
  std::string challenge;            // nonce used for the challenge ciphertext
  Rational01 distinguish_grade = Rational01::one();  // value for indistinct pairs, in (0,1]
  bool known_bit = false;           // p = 1 everywhere (broken scheme)
};

Model build_cpa_model(const CpaConfig& cfg);

struct BeliefStat {
  long long count_above = 0;  // states with V_s(S{agent} prop) > 1/2
  long long total_states = 0;
  Rational01 ratio;
};

BeliefStat belief_success_statistic(const Model& m, const AgentId& agent, const PropId& prop,
                                    SkepticalVariant variant);

struct SweepRow {
  int n;
  Rational01 statistic;
  Rational01 bound;
  bool pass;          // statistic <= bound
  bool explicit_run;  // counted on a constructed model (vs. closed form)
};

struct CpaSweepConfig {
  int n_min = 2;
  int n_max = 8;
  int queries = 1;       // number of learned nonces; challenge reuses the first
  bool reused = true;    // false: fresh challenge nonce
  int explicit_max = 12; // build models explicitly up to this n
  int bound_poly = 2;    // bound(n) = 1/n^bound_poly
  SkepticalVariant variant = SkepticalVariant::SourceState;
};

// For each n, the fraction of states whose skeptical belief in p exceeds 1/2,
// checked against the bound. Beyond explicit_max the closed form is used
// (reused single query: 1/2^n; fresh or no queries: 0); closed form is only
// available for queries <= 1.
std::vector<SweepRow> cpa_security_sweep(const CpaSweepConfig& cfg);

// JSON scenario configs (see README for the schemas).
MuddyConfig parse_muddy_config(const std::string& text);
CpaConfig parse_cpa_config(const std::string& text);

}  // namespace luka
