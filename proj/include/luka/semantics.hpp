#pragma once

#include <optional>
#include <vector>

#include "luka/model.hpp"

namespace luka {

struct EvalError : std::runtime_error {
  explicit EvalError(const std::string& msg) : std::runtime_error(msg) {}
};

// The skeptical operator multiplies the edge value with the formula's value
// either at the current state (as the definition is written) or at the
// inspected state (the reading under which the three-state countermodel
// computations come out). Both are implemented; SourceState is the default.
enum class SkepticalVariant : unsigned char { SourceState, TargetState };

std::string skeptical_variant_name(SkepticalVariant v);
std::optional<SkepticalVariant> parse_skeptical_variant(std::string_view name);

struct EvalContext {
  const Model& model;
  SkepticalVariant variant = SkepticalVariant::SourceState;
};

// Truth function of a single connective:
//   !x      = 1-x            x & y  = max(0, x+y-1)
//   x -> y  = min(1, 1-x+y)  x + y  = min(1, x+y)
//   x /\ y  = min(x,y)       x \/ y = max(x,y)
//   x <-> y = max(0, (x->y)+(y->x)-1)
// Belief is not a truth function and is rejected here.
Rational01 apply_connective(Connective op, const Rational01& x,
                            const std::optional<Rational01>& y);

// V_s(f). Belief clauses:
//   V_s(B{a} f) = min over s' of max(1 - r_a(s,s'), V_s'(f))
//   V_s(S{a} f) = min over s' of g(s,s') where, with v = V_s(f) (SourceState)
//                 or v = V_s'(f) (TargetState):
//                   g = V_s'(f)        if r_a(s,s') = 0
//                   g = 1              if r_a(s,s') > 0 and v = 1
//                   g = r_a(s,s') * v  otherwise
Rational01 eval_formula(const EvalContext& ctx, const StateId& state, const Formula& f);

// V_s(f) for every state, indexed like ctx.model.states() (sorted id order).
std::vector<Rational01> eval_all_states(const EvalContext& ctx, const Formula& f);

}  // namespace luka
