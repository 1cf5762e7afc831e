#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace luka {

using PropId = std::string;
using AgentId = std::string;

enum class Connective : unsigned char {
  Atom,
  Bottom,
  Not,
  StrongConj,  // &
  Implies,     // ->
  StrongDisj,  // +
  MinConj,     // "/\"
  MaxDisj,     // "\/"
  Equiv,       // <->
  Belief,      // B{a} / S{a}
};

enum class BeliefKind : unsigned char { PseudoClassical, Skeptical };

// Immutable formula tree with value semantics; copies share nodes.
class Formula {
public:
  Formula() = default;

  static Formula atom(std::string prop);
  static Formula bottom();
  static Formula negation(Formula sub);
  static Formula strong_conj(Formula lhs, Formula rhs);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula strong_disj(Formula lhs, Formula rhs);
  static Formula min_conj(Formula lhs, Formula rhs);
  static Formula max_disj(Formula lhs, Formula rhs);
  static Formula equiv(Formula lhs, Formula rhs);
  static Formula belief(AgentId agent, BeliefKind kind, Formula sub);

  bool empty() const { return node_ == nullptr; }
  Connective kind() const { return node_->kind; }
  const std::string& prop() const { return node_->id; }    // Atom
  const AgentId& agent() const { return node_->id; }       // Belief
  BeliefKind belief_kind() const { return node_->belief; }
  Formula lhs() const { return Formula(node_->lhs); }
  Formula rhs() const { return Formula(node_->rhs); }
  Formula sub() const { return Formula(node_->lhs); }      // Not / Belief

  bool is_unary() const {
    return kind() == Connective::Not || kind() == Connective::Belief;
  }
  bool is_binary() const {
    auto k = kind();
    return k != Connective::Atom && k != Connective::Bottom && !is_unary();
  }
  // Metavariable leaves ("?phi") and agent slots ("?a") only appear in scheme
  // templates; plain parsing rejects them.
  bool is_metavar() const {
    return kind() == Connective::Atom && !node_->id.empty() && node_->id[0] == '?';
  }
  bool has_agent_metavar() const {
    return kind() == Connective::Belief && !node_->id.empty() && node_->id[0] == '?';
  }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

private:
  struct Node {
    Connective kind;
    std::string id;  // Atom: prop name; Belief: agent name
    BeliefKind belief = BeliefKind::PseudoClassical;
    std::shared_ptr<const Node> lhs, rhs;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula binary(Connective k, Formula lhs, Formula rhs);
  std::shared_ptr<const Node> node_;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, size_t line, size_t column)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
  size_t line;
  size_t column;
};

// Concrete syntax (whitespace-insensitive):
//   formula := impl
//   impl    := disj (("->" | "<->") impl)?
//   disj    := conj (("+" | "\/") conj)*
//   conj    := unary (("&" | "/\") unary)*
//   unary   := ("!" | "B{" ident "}" | "S{" ident "}")* primary
//   primary := "bot" | ident | "(" formula ")"
// with ident = [a-zA-Z_][a-zA-Z0-9_]*.
Formula parse_formula(std::string_view text);

// Same grammar, but additionally allows "?"ident as a metavariable leaf and
// as an agent slot inside B{...}/S{...}.
Formula parse_scheme_formula(std::string_view text);

// Fully parenthesized canonical text; parse_formula(print_formula(f)) == f.
std::string print_formula(const Formula& f);

// Rewrites +, /\, \/ and <-> into the primitive connectives:
//   a + b   = !a -> b
//   a /\ b  = a & (a -> b)
//   a \/ b  = ((a -> b) -> b) /\ ((b -> a) -> a)
//   a <-> b = (a -> b) & (b -> a)
// Output contains only Atom, Bottom, Not, StrongConj, Implies, Belief.
Formula expand_derived(const Formula& f);

// All distinct "?"-atoms (names without the '?') in template order.
std::vector<std::string> formula_metavars(const Formula& f);
// All distinct "?"-agents in belief operators.
std::vector<std::string> agent_metavars(const Formula& f);

}  // namespace luka
