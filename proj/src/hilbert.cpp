#include "luka/hilbert.hpp"

#include <algorithm>

#include "json.hpp"

namespace luka {

const std::map<std::string, Scheme>& scheme_catalog() {
  static const std::map<std::string, Scheme> catalog = [] {
    std::map<std::string, Scheme> c;
    auto add = [&](const char* name, const char* text) {
      c.emplace(name, Scheme::parse(text));
    };
    add("A1", "(?phi -> ?psi) -> ((?psi -> ?chi) -> (?phi -> ?chi))");
    add("A2", "(?phi & ?psi) -> ?phi");
    add("A3", "(?phi & ?psi) -> (?psi & ?phi)");
    add("A4", "(?phi & (?phi -> ?psi)) -> (?psi & (?psi -> ?phi))");
    add("A5", "(?phi -> (?psi -> ?chi)) <-> ((?phi & ?psi) -> ?chi)");
    add("A6", "((?phi -> ?psi) -> ?chi) -> (((?psi -> ?phi) -> ?chi) -> ?chi)");
    add("A7", "bot -> ?phi");

    add("L1", "?phi -> (?psi -> ?phi)");
    add("L2", "(?phi -> ?psi) -> ((?psi -> ?chi) -> (?phi -> ?chi))");
    add("L3", "(!?phi -> !?psi) -> (?psi -> ?phi)");
    add("L4", "((?phi -> ?psi) -> ?psi) -> ((?psi -> ?phi) -> ?phi)");

    add("L5", "!(?phi & ?psi) <-> (!?phi + !?psi)");
    add("L6", "!(?phi + ?psi) <-> (!?phi & !?psi)");
    add("L7", "(?phi + ?psi) <-> (!?phi -> ?psi)");
    add("L8", "?phi -> (?phi + ?psi)");
    add("L9", "(?phi & (?phi -> ?psi)) -> ?psi");
    add("L10",
        "((?phi1 -> ?psi1) & (?phi2 -> ?psi2)) -> ((?phi1 & ?phi2) -> (?psi1 & ?psi2))");
    add("L11", "!!?phi <-> ?phi");
    add("L12", "(?phi <-> ?psi) -> ((?phi -> ?chi) <-> (?psi -> ?chi))");
    add("L13", "(?phi <-> ?psi) -> ((?chi -> ?phi) <-> (?chi -> ?psi))");
    add("L14", "(?phi <-> ?psi) -> ((?phi & ?chi) <-> (?psi & ?chi))");
    add("L15", "(?phi -> bot) <-> !?phi");

    add("LB1", "(B{?a} ?phi & B{?a}(?phi -> ?psi)) -> B{?a} ?psi");
    add("LB2", "!B{?a} bot");
    add("LB3", "B{?a} ?phi -> B{?a} B{?a} ?phi");
    add("LB4", "!B{?a} ?phi -> B{?a} !B{?a} ?phi");
    add("LB5", "B{?a} ?phi -> ?phi");

    add("SB1", "(S{?a} ?phi & S{?a}(?phi -> ?psi)) -> S{?a} ?psi");
    add("SB2", "!S{?a} bot");
    add("SB3", "S{?a} ?phi -> ?phi");
    add("SBplus", "S{?a} ?phi -> S{?a} S{?a} ?phi");
    add("SBminus", "!S{?a} ?phi -> S{?a} !S{?a} ?phi");
    return c;
  }();
  return catalog;
}

std::optional<AxiomSystem> AxiomSystem::parse(std::string_view name) {
  AxiomSystem sys;
  if (name == "SBL" || name == "SBL_star") {
    sys.base = SystemBase::Skeptical;
    sys.star = name == "SBL_star";
    return sys;
  }
  if (name.substr(0, 2) != "BL") return std::nullopt;
  sys.base = SystemBase::PseudoClassical;
  std::string_view rest = name.substr(2);
  if (rest.empty()) return sys;
  if (rest[0] != '_' || rest.size() == 1) return std::nullopt;
  for (char c : rest.substr(1)) {
    switch (c) {
      case 'D': if (sys.d) return std::nullopt; sys.d = true; break;
      case '4': if (sys.four) return std::nullopt; sys.four = true; break;
      case '5': if (sys.five) return std::nullopt; sys.five = true; break;
      case 'T': if (sys.t) return std::nullopt; sys.t = true; break;
      default: return std::nullopt;
    }
  }
  return sys;
}

std::string AxiomSystem::name() const {
  if (base == SystemBase::Skeptical) return star ? "SBL_star" : "SBL";
  std::string ext;
  if (d) ext += 'D';
  if (four) ext += '4';
  if (five) ext += '5';
  if (t) ext += 'T';
  return ext.empty() ? "BL" : "BL_" + ext;
}

std::vector<std::string> AxiomSystem::schemes() const {
  std::vector<std::string> out;
  for (int i = 1; i <= 7; i++) out.push_back("A" + std::to_string(i));
  for (int i = 1; i <= 15; i++) out.push_back("L" + std::to_string(i));
  if (base == SystemBase::PseudoClassical) {
    out.push_back("LB1");
    if (d) out.push_back("LB2");
    if (four) out.push_back("LB3");
    if (five) out.push_back("LB4");
    if (t) out.push_back("LB5");
  } else {
    out.push_back("SB1");
    out.push_back("SB2");
    out.push_back("SB3");
    if (star) {
      out.push_back("SBplus");
      out.push_back("SBminus");
    }
  }
  return out;
}

bool AxiomSystem::allows(const std::string& scheme_name) const {
  auto names = schemes();
  return std::find(names.begin(), names.end(), scheme_name) != names.end();
}

// ---------------------------------------------------------------------------
// Matching
// ---------------------------------------------------------------------------

namespace {

bool match_rec(const Formula& tmpl, const Formula& f, Substitution& subst) {
  switch (tmpl.kind()) {
    case Connective::Atom: {
      if (tmpl.is_metavar()) {
        auto [it, inserted] = subst.formulas.try_emplace(tmpl.prop().substr(1), f);
        return inserted ? true : it->second == f;
      }
      return f.kind() == Connective::Atom && f.prop() == tmpl.prop();
    }
    case Connective::Bottom:
      return f.kind() == Connective::Bottom;
    case Connective::Not:
      return f.kind() == Connective::Not && match_rec(tmpl.sub(), f.sub(), subst);
    case Connective::Belief: {
      if (f.kind() != Connective::Belief || f.belief_kind() != tmpl.belief_kind())
        return false;
      if (tmpl.has_agent_metavar()) {
        auto [it, inserted] = subst.agents.try_emplace(tmpl.agent().substr(1), f.agent());
        if (!inserted && it->second != f.agent()) return false;
      } else if (f.agent() != tmpl.agent()) {
        return false;
      }
      return match_rec(tmpl.sub(), f.sub(), subst);
    }
    default:
      return f.kind() == tmpl.kind() && match_rec(tmpl.lhs(), f.lhs(), subst) &&
             match_rec(tmpl.rhs(), f.rhs(), subst);
  }
}

}  // namespace

std::optional<Substitution> match_scheme(const Formula& f, const Scheme& s) {
  Substitution subst;
  if (match_rec(expand_derived(s.tmpl), expand_derived(f), subst)) return subst;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

VerifyResult verify_derivation(const Derivation& d, const AxiomSystem& sys) {
  VerifyResult result{true, {}};
  const auto& catalog = scheme_catalog();

  std::vector<Formula> expanded;
  expanded.reserve(d.lines.size());
  for (const auto& line : d.lines) expanded.push_back(expand_derived(line.formula));
  std::vector<Formula> premises;
  premises.reserve(d.premises.size());
  for (const auto& p : d.premises) premises.push_back(expand_derived(p));

  std::vector<bool> dependent(d.lines.size(), false);

  for (size_t i = 0; i < d.lines.size(); i++) {
    LineDiagnostic diag{i, true, false, ""};
    const Justification& just = d.lines[i].just;

    if (const auto* ax = std::get_if<AxiomRef>(&just)) {
      auto it = catalog.find(ax->name);
      if (it == catalog.end()) {
        diag.ok = false;
        diag.message = "unknown scheme " + ax->name;
      } else if (!sys.allows(ax->name)) {
        diag.ok = false;
        diag.message = "scheme " + ax->name + " is not available in " + sys.name();
      } else if (ax->subst) {
        try {
          Formula inst = instantiate(it->second, *ax->subst);
          if (expand_derived(inst) == expanded[i]) {
            diag.message = "axiom " + ax->name;
          } else {
            diag.ok = false;
            diag.message = "formula is not the stated instance of " + ax->name;
          }
        } catch (const std::invalid_argument& e) {
          diag.ok = false;
          diag.message = e.what();
        }
      } else if (match_scheme(d.lines[i].formula, it->second)) {
        diag.message = "axiom " + ax->name;
      } else {
        diag.ok = false;
        diag.message = "formula does not match scheme " + ax->name;
      }
    } else if (const auto* pr = std::get_if<PremiseRef>(&just)) {
      if (pr->index >= premises.size()) {
        diag.ok = false;
        diag.message = "premise index " + std::to_string(pr->index) + " out of range";
      } else if (premises[pr->index] == expanded[i]) {
        diag.premise_dependent = true;
        diag.message = "premise " + std::to_string(pr->index);
      } else {
        diag.ok = false;
        diag.message = "formula differs from premise " + std::to_string(pr->index);
      }
    } else if (const auto* mp = std::get_if<MpRef>(&just)) {
      if (mp->antecedent >= i || mp->implication >= i) {
        diag.ok = false;
        diag.message = "mp references a line at or after this one";
      } else {
        const Formula& impl = expanded[mp->implication];
        if (impl.kind() != Connective::Implies) {
          diag.ok = false;
          diag.message = "line " + std::to_string(mp->implication) + " is not an implication";
        } else if (impl.lhs() != expanded[mp->antecedent]) {
          diag.ok = false;
          diag.message = "line " + std::to_string(mp->antecedent) +
                         " is not the antecedent of line " + std::to_string(mp->implication);
        } else if (impl.rhs() != expanded[i]) {
          diag.ok = false;
          diag.message = "formula is not the consequent of line " +
                         std::to_string(mp->implication);
        } else {
          diag.premise_dependent = dependent[mp->antecedent] || dependent[mp->implication];
          diag.message = "mp " + std::to_string(mp->antecedent) + "," +
                         std::to_string(mp->implication);
        }
      }
    } else if (const auto* gen = std::get_if<GenRef>(&just)) {
      if (gen->from >= i) {
        diag.ok = false;
        diag.message = "gen references a line at or after this one";
      } else {
        Formula want =
            Formula::belief(gen->agent, sys.generalization_kind(), expanded[gen->from]);
        if (expanded[i] != want) {
          diag.ok = false;
          diag.message = "formula is not the generalization of line " +
                         std::to_string(gen->from) + " for agent " + gen->agent;
        } else if (dependent[gen->from]) {
          diag.ok = false;
          diag.message = "generalization over premise-dependent line";
        } else {
          diag.message = "gen " + gen->agent + "," + std::to_string(gen->from);
        }
      }
    }

    dependent[i] = diag.premise_dependent;
    if (!diag.ok) result.ok = false;
    result.lines.push_back(std::move(diag));
  }
  return result;
}

// ---------------------------------------------------------------------------
// JSON derivation files
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

Formula parse_line_formula(const json& j, const std::string& where) {
  if (!j.is_string()) throw DerivationError(where + ": formula must be a string");
  try {
    return parse_formula(j.get<std::string>());
  } catch (const ParseError& e) {
    throw DerivationError(where + ": " + e.what());
  }
}

size_t get_index(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    throw DerivationError(where + ": missing or non-integer \"" + key + "\"");
  return j[key].get<size_t>();
}

}  // namespace

DerivationFile load_derivation(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DerivationError(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object()) throw DerivationError("derivation file must be a JSON object");
  if (!j.contains("system") || !j["system"].is_string())
    throw DerivationError("missing \"system\" name");
  auto sys = AxiomSystem::parse(j["system"].get<std::string>());
  if (!sys)
    throw DerivationError("unknown axiomatic system: " + j["system"].get<std::string>());

  DerivationFile out;
  out.system = *sys;
  if (j.contains("premises")) {
    if (!j["premises"].is_array()) throw DerivationError("\"premises\" must be an array");
    for (size_t i = 0; i < j["premises"].size(); i++)
      out.derivation.premises.push_back(
          parse_line_formula(j["premises"][i], "premise " + std::to_string(i)));
  }
  if (!j.contains("lines") || !j["lines"].is_array())
    throw DerivationError("missing \"lines\" array");

  const auto& catalog = scheme_catalog();
  for (size_t i = 0; i < j["lines"].size(); i++) {
    const std::string where = "line " + std::to_string(i);
    const json& jl = j["lines"][i];
    if (!jl.is_object() || !jl.contains("formula") || !jl.contains("just"))
      throw DerivationError(where + ": needs \"formula\" and \"just\"");
    DerivationLine line;
    line.formula = parse_line_formula(jl["formula"], where);
    const json& jj = jl["just"];
    if (!jj.is_object() || !jj.contains("kind") || !jj["kind"].is_string())
      throw DerivationError(where + ": justification needs a \"kind\"");
    std::string kind = jj["kind"].get<std::string>();
    if (kind == "axiom") {
      AxiomRef ax;
      if (!jj.contains("name") || !jj["name"].is_string())
        throw DerivationError(where + ": axiom justification needs a \"name\"");
      ax.name = jj["name"].get<std::string>();
      if (jj.contains("subst")) {
        if (!jj["subst"].is_object())
          throw DerivationError(where + ": \"subst\" must be an object");
        auto cat = catalog.find(ax.name);
        if (cat == catalog.end()) throw DerivationError(where + ": unknown scheme " + ax.name);
        Substitution subst;
        for (const auto& [key, value] : jj["subst"].items()) {
          if (!value.is_string())
            throw DerivationError(where + ": substitution values must be strings");
          bool is_agent = std::find(cat->second.agent_vars.begin(),
                                    cat->second.agent_vars.end(),
                                    key) != cat->second.agent_vars.end();
          if (is_agent) {
            subst.agents[key] = value.get<std::string>();
          } else {
            try {
              subst.formulas[key] = parse_formula(value.get<std::string>());
            } catch (const ParseError& e) {
              throw DerivationError(where + ": bad substitution for " + key + ": " + e.what());
            }
          }
        }
        ax.subst = std::move(subst);
      }
      line.just = std::move(ax);
    } else if (kind == "premise") {
      line.just = PremiseRef{get_index(jj, "index", where)};
    } else if (kind == "mp") {
      if (!jj.contains("from") || !jj["from"].is_array() || jj["from"].size() != 2 ||
          !jj["from"][0].is_number_unsigned() || !jj["from"][1].is_number_unsigned())
        throw DerivationError(where + ": mp needs \"from\":[antecedent,implication]");
      line.just = MpRef{jj["from"][0].get<size_t>(), jj["from"][1].get<size_t>()};
    } else if (kind == "gen") {
      if (!jj.contains("agent") || !jj["agent"].is_string())
        throw DerivationError(where + ": gen needs an \"agent\"");
      line.just = GenRef{jj["agent"].get<std::string>(), get_index(jj, "from", where)};
    } else {
      throw DerivationError(where + ": unknown justification kind \"" + kind + "\"");
    }
    out.derivation.lines.push_back(std::move(line));
  }
  return out;
}

}  // namespace luka
