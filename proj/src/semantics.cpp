#include "luka/semantics.hpp"

namespace luka {

std::string skeptical_variant_name(SkepticalVariant v) {
  return v == SkepticalVariant::SourceState ? "source" : "target";
}

std::optional<SkepticalVariant> parse_skeptical_variant(std::string_view name) {
  if (name == "source") return SkepticalVariant::SourceState;
  if (name == "target") return SkepticalVariant::TargetState;
  return std::nullopt;
}

Rational01 apply_connective(Connective op, const Rational01& x,
                            const std::optional<Rational01>& y) {
  auto need_rhs = [&]() -> const Rational01& {
    if (!y) throw EvalError("binary connective needs two arguments");
    return *y;
  };
  switch (op) {
    case Connective::Not: return x.complement();
    case Connective::StrongConj: return Rational01::strong_conj(x, need_rhs());
    case Connective::Implies: return Rational01::implies(x, need_rhs());
    case Connective::StrongDisj: return Rational01::strong_disj(x, need_rhs());
    case Connective::MinConj: return Rational01::min(x, need_rhs());
    case Connective::MaxDisj: return Rational01::max(x, need_rhs());
    case Connective::Equiv: return Rational01::equiv(x, need_rhs());
    default: throw EvalError("not a truth-functional connective");
  }
}

namespace {

// One vector of values per node, computed bottom-up; each tree node is
// visited once, so nested belief operators stay polynomial in |S|.
std::vector<Rational01> eval_vec(const EvalContext& ctx, const Formula& f) {
  const Model& m = ctx.model;
  const size_t n = m.state_count();
  switch (f.kind()) {
    case Connective::Atom: {
      if (f.is_metavar())
        throw EvalError("cannot evaluate metavariable " + f.prop());
      size_t p;
      try {
        p = m.prop_index(f.prop());
      } catch (const ModelError& e) {
        throw EvalError(e.what());
      }
      std::vector<Rational01> out(n);
      for (size_t s = 0; s < n; s++) out[s] = m.valuation(s, p);
      return out;
    }
    case Connective::Bottom:
      return std::vector<Rational01>(n, Rational01::zero());
    case Connective::Not: {
      auto out = eval_vec(ctx, f.sub());
      for (auto& v : out) v = v.complement();
      return out;
    }
    case Connective::Belief: {
      size_t a;
      try {
        a = m.agent_index(f.agent());
      } catch (const ModelError& e) {
        throw EvalError(e.what());
      }
      auto sub = eval_vec(ctx, f.sub());
      std::vector<Rational01> out(n);
      const Rational01 one = Rational01::one();
      for (size_t s = 0; s < n; s++) {
        std::optional<Rational01> acc;
        for (size_t t = 0; t < n; t++) {
          const Rational01& r = m.access(a, s, t);
          Rational01 g;
          if (f.belief_kind() == BeliefKind::PseudoClassical) {
            g = Rational01::max(r.complement(), sub[t]);
          } else if (r.is_zero()) {
            g = sub[t];
          } else {
            const Rational01& v =
                ctx.variant == SkepticalVariant::SourceState ? sub[s] : sub[t];
            g = v.is_one() ? one : Rational01::product(r, v);
          }
          acc = acc ? Rational01::min(*acc, g) : g;
        }
        out[s] = *acc;
      }
      return out;
    }
    default: {
      auto l = eval_vec(ctx, f.lhs());
      auto r = eval_vec(ctx, f.rhs());
      std::vector<Rational01> out(n);
      for (size_t s = 0; s < n; s++) out[s] = apply_connective(f.kind(), l[s], r[s]);
      return out;
    }
  }
}

}  // namespace

Rational01 eval_formula(const EvalContext& ctx, const StateId& state, const Formula& f) {
  size_t s;
  try {
    s = ctx.model.state_index(state);
  } catch (const ModelError& e) {
    throw EvalError(e.what());
  }
  return eval_vec(ctx, f)[s];
}

std::vector<Rational01> eval_all_states(const EvalContext& ctx, const Formula& f) {
  return eval_vec(ctx, f);
}

}  // namespace luka
