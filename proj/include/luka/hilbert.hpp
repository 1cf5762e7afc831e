#pragma once

#include <variant>

#include "luka/validity.hpp"

namespace luka {

struct DerivationError : std::runtime_error {
  explicit DerivationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Named axiom schemes:
//   A1..A7           basic fuzzy-logic axioms
//   L1..L4           Lukasiewicz core
//   L5..L15          admitted lemma schemes
//   LB1..LB5         pseudo-classical belief (distribution, D, 4, 5, T)
//   SB1..SB3         skeptical belief (distribution, D, T)
//   SBplus, SBminus  skeptical introspection
const std::map<std::string, Scheme>& scheme_catalog();

enum class SystemBase : unsigned char { PseudoClassical, Skeptical };

// "BL", "BL_D", "BL_D45T" (extensions in order D,4,5,T), "SBL", "SBL_star".
struct AxiomSystem {
  SystemBase base = SystemBase::PseudoClassical;
  bool d = false, four = false, five = false, t = false;  // pseudo-classical extensions
  bool star = false;                                      // skeptical extension

  static std::optional<AxiomSystem> parse(std::string_view name);
  std::string name() const;
  std::vector<std::string> schemes() const;  // names available in this system
  bool allows(const std::string& scheme_name) const;
  BeliefKind generalization_kind() const {
    return base == SystemBase::PseudoClassical ? BeliefKind::PseudoClassical
                                               : BeliefKind::Skeptical;
  }
};

// One-way syntactic matching of a ground formula against a scheme, modulo
// expansion of derived connectives on both sides. Returns a substitution
// with instantiate(s, subst) equal to f up to that expansion.
std::optional<Substitution> match_scheme(const Formula& f, const Scheme& s);

struct AxiomRef {
  std::string name;
  std::optional<Substitution> subst;  // inferred via match_scheme when absent
};
struct PremiseRef {
  size_t index;
};
struct MpRef {
  size_t antecedent;   // line holding f
  size_t implication;  // line holding (f -> current)
};
struct GenRef {
  AgentId agent;
  size_t from;
};
using Justification = std::variant<AxiomRef, PremiseRef, MpRef, GenRef>;

struct DerivationLine {
  Formula formula;
  Justification just;
};

struct Derivation {
  std::vector<Formula> premises;
  std::vector<DerivationLine> lines;
};

struct LineDiagnostic {
  size_t line;  // 0-based
  bool ok;
  bool premise_dependent;  // some justification ancestor is a premise
  std::string message;
};

struct VerifyResult {
  bool ok;
  std::vector<LineDiagnostic> lines;
};

// Checks every line: axiom instances against the system's schemes, premise
// references, modus ponens shape, and generalization. Generalization is only
// accepted on premise-independent lines.
VerifyResult verify_derivation(const Derivation& d, const AxiomSystem& sys);

struct DerivationFile {
  AxiomSystem system;
  Derivation derivation;
};

// JSON: {"system":"BL_D4", "premises":["p1","p2"],
//        "lines":[{"formula":"...","just":{"kind":"axiom","name":"A3","subst":{"phi":"p2"}}},
//                 {"formula":"...","just":{"kind":"premise","index":0}},
//                 {"formula":"...","just":{"kind":"mp","from":[0,1]}},
//                 {"formula":"...","just":{"kind":"gen","agent":"a","from":2}}]}
// All line and premise references are 0-based.
DerivationFile load_derivation(const std::string& text);

}  // namespace luka
