#pragma once

// Naive reference evaluator, kept deliberately independent of the library's
// vectorized implementation: plain single-state recursion straight off the
// defining equations, with its own exact fraction arithmetic from scratch.

#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "luka/model.hpp"
#include "luka/semantics.hpp"

namespace oracle {

struct Frac {
  long long num = 0;
  long long den = 1;
};

inline Frac reduce(long long num, long long den) {
  long long g = std::gcd(num, den);
  if (g == 0) g = 1;
  return {num / g, den / g};
}

inline Frac from(const luka::Rational01& r) { return {r.num(), r.den()}; }

inline long long cmp(const Frac& a, const Frac& b) {
  __int128 l = static_cast<__int128>(a.num) * b.den;
  __int128 r = static_cast<__int128>(b.num) * a.den;
  return l < r ? -1 : (l > r ? 1 : 0);
}

inline Frac neg(const Frac& x) { return reduce(x.den - x.num, x.den); }

inline Frac conj(const Frac& x, const Frac& y) {
  // max(0, x+y-1)
  __int128 den = static_cast<__int128>(x.den) * y.den;
  __int128 num = static_cast<__int128>(x.num) * y.den +
                 static_cast<__int128>(y.num) * x.den - den;
  if (num < 0) return {0, 1};
  __int128 g = num;
  __int128 b = den;
  while (b) { __int128 t = g % b; g = b; b = t; }
  return {static_cast<long long>(num / g), static_cast<long long>(den / g)};
}

inline Frac impl(const Frac& x, const Frac& y) {
  // min(1, 1-x+y)
  __int128 den = static_cast<__int128>(x.den) * y.den;
  __int128 num = den - static_cast<__int128>(x.num) * y.den +
                 static_cast<__int128>(y.num) * x.den;
  if (num >= den) return {1, 1};
  __int128 g = num;
  __int128 b = den;
  while (b) { __int128 t = g % b; g = b; b = t; }
  if (g == 0) return {0, 1};
  return {static_cast<long long>(num / g), static_cast<long long>(den / g)};
}

inline Frac mul(const Frac& x, const Frac& y) {
  __int128 num = static_cast<__int128>(x.num) * y.num;
  __int128 den = static_cast<__int128>(x.den) * y.den;
  __int128 g = num;
  __int128 b = den;
  while (b) { __int128 t = g % b; g = b; b = t; }
  if (g == 0) return {0, 1};
  return {static_cast<long long>(num / g), static_cast<long long>(den / g)};
}

inline Frac fmin(const Frac& a, const Frac& b) { return cmp(a, b) <= 0 ? a : b; }
inline Frac fmax(const Frac& a, const Frac& b) { return cmp(a, b) >= 0 ? a : b; }

inline Frac eval(const luka::Model& m, luka::SkepticalVariant variant, size_t state,
                 const luka::Formula& f) {
  using luka::Connective;
  switch (f.kind()) {
    case Connective::Atom:
      return from(m.valuation(state, m.prop_index(f.prop())));
    case Connective::Bottom:
      return {0, 1};
    case Connective::Not:
      return neg(eval(m, variant, state, f.sub()));
    case Connective::StrongConj:
      return conj(eval(m, variant, state, f.lhs()), eval(m, variant, state, f.rhs()));
    case Connective::Implies:
      return impl(eval(m, variant, state, f.lhs()), eval(m, variant, state, f.rhs()));
    case Connective::StrongDisj: {
      // min(1, x+y) = !(!x) + y written directly
      Frac x = eval(m, variant, state, f.lhs());
      Frac y = eval(m, variant, state, f.rhs());
      return impl(neg(x), y);
    }
    case Connective::MinConj:
      return fmin(eval(m, variant, state, f.lhs()), eval(m, variant, state, f.rhs()));
    case Connective::MaxDisj:
      return fmax(eval(m, variant, state, f.lhs()), eval(m, variant, state, f.rhs()));
    case Connective::Equiv: {
      Frac x = eval(m, variant, state, f.lhs());
      Frac y = eval(m, variant, state, f.rhs());
      return conj(impl(x, y), impl(y, x));
    }
    case Connective::Belief: {
      size_t agent = m.agent_index(f.agent());
      const size_t n = m.state_count();
      bool first = true;
      Frac best{1, 1};
      for (size_t t = 0; t < n; t++) {
        Frac r = from(m.access(agent, state, t));
        Frac g;
        if (f.belief_kind() == luka::BeliefKind::PseudoClassical) {
          g = fmax(neg(r), eval(m, variant, t, f.sub()));
        } else if (r.num == 0) {
          g = eval(m, variant, t, f.sub());
        } else {
          Frac v = variant == luka::SkepticalVariant::SourceState
                       ? eval(m, variant, state, f.sub())
                       : eval(m, variant, t, f.sub());
          g = (v.num == v.den) ? Frac{1, 1} : mul(r, v);
        }
        best = first ? g : fmin(best, g);
        first = false;
      }
      return best;
    }
  }
  throw std::logic_error("oracle: unreachable");
}

inline bool equals(const Frac& a, const luka::Rational01& b) {
  return cmp(a, from(b)) == 0;
}

}  // namespace oracle
