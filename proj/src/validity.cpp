#include "luka/validity.hpp"

#include <algorithm>

namespace luka {

Scheme Scheme::of(Formula tmpl) {
  Scheme s;
  s.metavars = formula_metavars(tmpl);
  s.agent_vars = agent_metavars(tmpl);
  s.tmpl = std::move(tmpl);
  return s;
}

Scheme Scheme::parse(std::string_view text) { return of(parse_scheme_formula(text)); }

namespace {

Formula substitute(const Formula& f, const Substitution& subst) {
  switch (f.kind()) {
    case Connective::Atom: {
      if (!f.is_metavar()) return f;
      auto it = subst.formulas.find(f.prop().substr(1));
      if (it == subst.formulas.end())
        throw std::invalid_argument("missing metavariable binding: " + f.prop().substr(1));
      return it->second;
    }
    case Connective::Bottom:
      return f;
    case Connective::Not:
      return Formula::negation(substitute(f.sub(), subst));
    case Connective::Belief: {
      AgentId agent = f.agent();
      if (f.has_agent_metavar()) {
        auto it = subst.agents.find(agent.substr(1));
        if (it == subst.agents.end())
          throw std::invalid_argument("missing agent binding: " + agent.substr(1));
        agent = it->second;
      }
      return Formula::belief(std::move(agent), f.belief_kind(), substitute(f.sub(), subst));
    }
    case Connective::StrongConj:
      return Formula::strong_conj(substitute(f.lhs(), subst), substitute(f.rhs(), subst));
    case Connective::Implies:
      return Formula::implies(substitute(f.lhs(), subst), substitute(f.rhs(), subst));
    case Connective::StrongDisj:
      return Formula::strong_disj(substitute(f.lhs(), subst), substitute(f.rhs(), subst));
    case Connective::MinConj:
      return Formula::min_conj(substitute(f.lhs(), subst), substitute(f.rhs(), subst));
    case Connective::MaxDisj:
      return Formula::max_disj(substitute(f.lhs(), subst), substitute(f.rhs(), subst));
    case Connective::Equiv:
      return Formula::equiv(substitute(f.lhs(), subst), substitute(f.rhs(), subst));
  }
  throw std::logic_error("unreachable connective");
}

}  // namespace

Formula instantiate(const Scheme& s, const Substitution& subst) {
  return substitute(s.tmpl, subst);
}

ValidityResult check_validity_in_model(const Model& m, const Formula& f,
                                       SkepticalVariant variant) {
  EvalContext ctx{m, variant};
  auto values = eval_all_states(ctx, f);
  size_t best = 0;
  for (size_t s = 1; s < values.size(); s++)
    if (values[s] < values[best]) best = s;
  return {values[best].is_one(), values[best], m.states()[best]};
}

std::vector<Formula> instantiation_pool(int depth, const AgentId& agent, BeliefKind kind,
                                        const std::vector<PropId>& props) {
  std::vector<Formula> pool;
  for (const auto& p : props) pool.push_back(Formula::atom(p));
  pool.push_back(Formula::bottom());
  size_t level_begin = 0;
  for (int d = 0; d < depth; d++) {
    size_t level_end = pool.size();
    for (size_t i = level_begin; i < level_end && pool.size() < 40; i++) {
      pool.push_back(Formula::negation(pool[i]));
      pool.push_back(Formula::belief(agent, kind, pool[i]));
    }
    for (size_t i = level_begin; i < level_end && pool.size() < 40; i++)
      for (size_t j = level_begin; j < level_end && pool.size() < 40; j++) {
        pool.push_back(Formula::implies(pool[i], pool[j]));
        pool.push_back(Formula::strong_conj(pool[i], pool[j]));
      }
    level_begin = level_end;
  }
  return pool;
}

std::optional<CounterexampleReport> search_counterexample(const Scheme& s,
                                                          const SearchConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("search needs at least one trial");
  if (cfg.instantiation_depth < 0) throw std::invalid_argument("negative instantiation depth");

  // Which belief kind does the scheme use? Drives the instantiation pool.
  BeliefKind pool_kind = BeliefKind::PseudoClassical;
  {
    std::vector<Formula> stack{s.tmpl};
    while (!stack.empty()) {
      Formula f = stack.back();
      stack.pop_back();
      if (f.kind() == Connective::Belief) {
        pool_kind = f.belief_kind();
        break;
      }
      if (f.is_unary()) stack.push_back(f.sub());
      else if (f.is_binary()) {
        stack.push_back(f.lhs());
        stack.push_back(f.rhs());
      }
    }
  }

  for (long long trial = 0; trial < cfg.trials; trial++) {
    SamplerConfig sc = cfg.sampler;
    sc.seed = cfg.sampler.seed + static_cast<std::uint64_t>(trial);
    Model model = sample_model(sc);

    const AgentId& agent = model.agents().front();
    Substitution subst;
    for (const auto& av : s.agent_vars) subst.agents[av] = agent;

    auto pool = instantiation_pool(cfg.instantiation_depth, agent, pool_kind, model.props());
    const size_t k = s.metavars.size();
    // Odometer over pool^k; empty product = single ground instantiation.
    std::vector<size_t> ix(k, 0);
    while (true) {
      for (size_t i = 0; i < k; i++) subst.formulas[s.metavars[i]] = pool[ix[i]];
      Formula f = instantiate(s, subst);
      auto res = check_validity_in_model(model, f, cfg.variant);
      if (!res.valid)
        return CounterexampleReport{std::move(model), res.argmin, subst, res.min_value, trial};
      size_t i = 0;
      for (; i < k; i++) {
        if (++ix[i] < pool.size()) break;
        ix[i] = 0;
      }
      if (i == k) break;
    }
  }
  return std::nullopt;
}

}  // namespace luka
