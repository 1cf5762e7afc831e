#include "luka/formula.hpp"

#include <cctype>

namespace luka {

Formula Formula::atom(std::string prop) {
  auto n = std::make_shared<Node>();
  n->kind = Connective::Atom;
  n->id = std::move(prop);
  return Formula(n);
}

Formula Formula::bottom() {
  auto n = std::make_shared<Node>();
  n->kind = Connective::Bottom;
  return Formula(n);
}

Formula Formula::negation(Formula sub) {
  auto n = std::make_shared<Node>();
  n->kind = Connective::Not;
  n->lhs = std::move(sub.node_);
  return Formula(n);
}

Formula Formula::belief(AgentId agent, BeliefKind kind, Formula sub) {
  auto n = std::make_shared<Node>();
  n->kind = Connective::Belief;
  n->id = std::move(agent);
  n->belief = kind;
  n->lhs = std::move(sub.node_);
  return Formula(n);
}

Formula Formula::binary(Connective k, Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->lhs = std::move(lhs.node_);
  n->rhs = std::move(rhs.node_);
  return Formula(n);
}

Formula Formula::strong_conj(Formula l, Formula r) { return binary(Connective::StrongConj, std::move(l), std::move(r)); }
Formula Formula::implies(Formula l, Formula r) { return binary(Connective::Implies, std::move(l), std::move(r)); }
Formula Formula::strong_disj(Formula l, Formula r) { return binary(Connective::StrongDisj, std::move(l), std::move(r)); }
Formula Formula::min_conj(Formula l, Formula r) { return binary(Connective::MinConj, std::move(l), std::move(r)); }
Formula Formula::max_disj(Formula l, Formula r) { return binary(Connective::MaxDisj, std::move(l), std::move(r)); }
Formula Formula::equiv(Formula l, Formula r) { return binary(Connective::Equiv, std::move(l), std::move(r)); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.node_->kind != b.node_->kind) return false;
  switch (a.node_->kind) {
    case Connective::Atom:
      return a.node_->id == b.node_->id;
    case Connective::Bottom:
      return true;
    case Connective::Not:
      return a.sub() == b.sub();
    case Connective::Belief:
      return a.node_->id == b.node_->id && a.node_->belief == b.node_->belief &&
             a.sub() == b.sub();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

namespace {

enum class Tok : unsigned char {
  Ident, Bang, Amp, Plus, MinConjOp, MaxDisjOp, Arrow, Iff,
  LParen, RParen, LBrace, RBrace, Question, End,
};

struct Token {
  Tok type;
  std::string text;
  size_t line;
  size_t col;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Bang: return "'!'";
    case Tok::Amp: return "'&'";
    case Tok::Plus: return "'+'";
    case Tok::MinConjOp: return "'/\\'";
    case Tok::MaxDisjOp: return "'\\/'";
    case Tok::Arrow: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Question: return "'?'";
    case Tok::End: return "end of input";
  }
  return "?";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  size_t line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](size_t k) {
    for (size_t j = 0; j < k; j++) {
      if (text[i + j] == '\n') { line++; col = 1; } else { col++; }
    }
    i += k;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') { advance(1); continue; }
    size_t tl = line, tc = col;
    auto push = [&](Tok t, size_t len) {
      out.push_back({t, std::string(text.substr(i, len)), tl, tc});
      advance(len);
    };
    switch (c) {
      case '!': push(Tok::Bang, 1); continue;
      case '&': push(Tok::Amp, 1); continue;
      case '+': push(Tok::Plus, 1); continue;
      case '(': push(Tok::LParen, 1); continue;
      case ')': push(Tok::RParen, 1); continue;
      case '{': push(Tok::LBrace, 1); continue;
      case '}': push(Tok::RBrace, 1); continue;
      case '?': push(Tok::Question, 1); continue;
      case '/':
        if (i + 1 < text.size() && text[i + 1] == '\\') { push(Tok::MinConjOp, 2); continue; }
        throw ParseError("unknown escape after '/', expected '/\\'", tl, tc);
      case '\\':
        if (i + 1 < text.size() && text[i + 1] == '/') { push(Tok::MaxDisjOp, 2); continue; }
        throw ParseError("unknown escape after '\\', expected '\\/'", tl, tc);
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') { push(Tok::Arrow, 2); continue; }
        throw ParseError("expected '->'", tl, tc);
      case '<':
        if (text.substr(i, 3) == "<->") { push(Tok::Iff, 3); continue; }
        throw ParseError("expected '<->'", tl, tc);
      default:
        break;
    }
    if (ident_start(c)) {
      size_t len = 1;
      while (i + len < text.size() && ident_char(text[i + len])) len++;
      push(Tok::Ident, len);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", tl, tc);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

class Parser {
public:
  Parser(std::string_view text, bool scheme_mode)
      : tokens_(lex(text)), scheme_mode_(scheme_mode) {}

  Formula parse() {
    if (tokens_.size() == 1) throw ParseError("empty input", 1, 1);
    Formula f = parse_impl();
    expect(Tok::End, "end of input");
    return f;
  }

private:
  const Token& cur() const { return tokens_[pos_]; }
  const Token& peek() const { return tokens_[pos_ + 1 < tokens_.size() ? pos_ + 1 : pos_]; }
  void next() { if (cur().type != Tok::End) pos_++; }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError("expected " + expected + ", got " + tok_name(cur().type) +
                         (cur().type == Tok::Ident ? " '" + cur().text + "'" : ""),
                     cur().line, cur().col);
  }

  void expect(Tok t, const std::string& what) {
    if (cur().type != t) fail(what);
    next();
  }

  Formula parse_impl() {
    Formula lhs = parse_disj();
    if (cur().type == Tok::Arrow) {
      next();
      return Formula::implies(std::move(lhs), parse_impl());
    }
    if (cur().type == Tok::Iff) {
      next();
      return Formula::equiv(std::move(lhs), parse_impl());
    }
    return lhs;
  }

  Formula parse_disj() {
    Formula acc = parse_conj();
    while (cur().type == Tok::Plus || cur().type == Tok::MaxDisjOp) {
      Tok op = cur().type;
      next();
      Formula rhs = parse_conj();
      acc = op == Tok::Plus ? Formula::strong_disj(std::move(acc), std::move(rhs))
                            : Formula::max_disj(std::move(acc), std::move(rhs));
    }
    return acc;
  }

  Formula parse_conj() {
    Formula acc = parse_unary();
    while (cur().type == Tok::Amp || cur().type == Tok::MinConjOp) {
      Tok op = cur().type;
      next();
      Formula rhs = parse_unary();
      acc = op == Tok::Amp ? Formula::strong_conj(std::move(acc), std::move(rhs))
                           : Formula::min_conj(std::move(acc), std::move(rhs));
    }
    return acc;
  }

  Formula parse_unary() {
    if (cur().type == Tok::Bang) {
      next();
      return Formula::negation(parse_unary());
    }
    if (cur().type == Tok::Ident && (cur().text == "B" || cur().text == "S") &&
        peek().type == Tok::LBrace) {
      BeliefKind kind = cur().text == "B" ? BeliefKind::PseudoClassical : BeliefKind::Skeptical;
      next();  // B / S
      next();  // {
      std::string agent;
      if (cur().type == Tok::Question) {
        if (!scheme_mode_)
          throw ParseError("metavariables are not allowed here", cur().line, cur().col);
        next();
        if (cur().type != Tok::Ident) fail("identifier after '?'");
        agent = "?" + cur().text;
        next();
      } else if (cur().type == Tok::Ident) {
        agent = cur().text;
        next();
      } else {
        fail("agent identifier");
      }
      expect(Tok::RBrace, "'}'");
      return Formula::belief(std::move(agent), kind, parse_unary());
    }
    return parse_primary();
  }

  Formula parse_primary() {
    switch (cur().type) {
      case Tok::Ident: {
        std::string name = cur().text;
        next();
        if (name == "bot") return Formula::bottom();
        return Formula::atom(std::move(name));
      }
      case Tok::Question: {
        if (!scheme_mode_)
          throw ParseError("metavariables are not allowed here", cur().line, cur().col);
        next();
        if (cur().type != Tok::Ident) fail("identifier after '?'");
        std::string name = "?" + cur().text;
        next();
        return Formula::atom(std::move(name));
      }
      case Tok::LParen: {
        next();
        Formula f = parse_impl();
        expect(Tok::RParen, "')'");
        return f;
      }
      default:
        fail("a formula: atom, 'bot', '!', 'B{', 'S{' or '('");
    }
  }

  std::vector<Token> tokens_;
  bool scheme_mode_;
  size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text, false).parse(); }
Formula parse_scheme_formula(std::string_view text) { return Parser(text, true).parse(); }

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

static const char* op_text(Connective k) {
  switch (k) {
    case Connective::StrongConj: return "&";
    case Connective::Implies: return "->";
    case Connective::StrongDisj: return "+";
    case Connective::MinConj: return "/\\";
    case Connective::MaxDisj: return "\\/";
    case Connective::Equiv: return "<->";
    default: return "?";
  }
}

static void print_rec(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Connective::Atom: {
      const std::string& name = f.prop();
      if (!name.empty() && name[0] == '?') {
        out += '?';
        out += name.substr(1);
      } else {
        out += name;
      }
      return;
    }
    case Connective::Bottom:
      out += "bot";
      return;
    case Connective::Not:
      out += "(!";
      print_rec(f.sub(), out);
      out += ')';
      return;
    case Connective::Belief: {
      out += '(';
      out += f.belief_kind() == BeliefKind::PseudoClassical ? 'B' : 'S';
      out += '{';
      const AgentId& a = f.agent();
      if (!a.empty() && a[0] == '?') {
        out += '?';
        out += a.substr(1);
      } else {
        out += a;
      }
      out += "} ";
      print_rec(f.sub(), out);
      out += ')';
      return;
    }
    default: {
      out += '(';
      print_rec(f.lhs(), out);
      out += ' ';
      out += op_text(f.kind());
      out += ' ';
      print_rec(f.rhs(), out);
      out += ')';
      return;
    }
  }
}

std::string print_formula(const Formula& f) {
  std::string out;
  print_rec(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Derived-connective expansion
// ---------------------------------------------------------------------------

Formula expand_derived(const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom:
    case Connective::Bottom:
      return f;
    case Connective::Not:
      return Formula::negation(expand_derived(f.sub()));
    case Connective::Belief:
      return Formula::belief(f.agent(), f.belief_kind(), expand_derived(f.sub()));
    case Connective::StrongConj:
      return Formula::strong_conj(expand_derived(f.lhs()), expand_derived(f.rhs()));
    case Connective::Implies:
      return Formula::implies(expand_derived(f.lhs()), expand_derived(f.rhs()));
    case Connective::StrongDisj:
      // a + b = !a -> b
      return Formula::implies(Formula::negation(expand_derived(f.lhs())),
                              expand_derived(f.rhs()));
    case Connective::MinConj: {
      // a /\ b = a & (a -> b)
      Formula a = expand_derived(f.lhs()), b = expand_derived(f.rhs());
      return Formula::strong_conj(a, Formula::implies(a, b));
    }
    case Connective::MaxDisj: {
      // a \/ b = ((a -> b) -> b) /\ ((b -> a) -> a), then expand the /\.
      Formula a = expand_derived(f.lhs()), b = expand_derived(f.rhs());
      Formula x = Formula::implies(Formula::implies(a, b), b);
      Formula y = Formula::implies(Formula::implies(b, a), a);
      return Formula::strong_conj(x, Formula::implies(x, y));
    }
    case Connective::Equiv: {
      Formula a = expand_derived(f.lhs()), b = expand_derived(f.rhs());
      return Formula::strong_conj(Formula::implies(a, b), Formula::implies(b, a));
    }
  }
  throw std::logic_error("unreachable connective");
}

static void collect_metavars(const Formula& f, std::vector<std::string>& props,
                             std::vector<std::string>& agents) {
  auto add = [](std::vector<std::string>& v, const std::string& name) {
    for (const auto& s : v)
      if (s == name) return;
    v.push_back(name);
  };
  switch (f.kind()) {
    case Connective::Atom:
      if (f.is_metavar()) add(props, f.prop().substr(1));
      return;
    case Connective::Bottom:
      return;
    case Connective::Not:
      collect_metavars(f.sub(), props, agents);
      return;
    case Connective::Belief:
      if (f.has_agent_metavar()) add(agents, f.agent().substr(1));
      collect_metavars(f.sub(), props, agents);
      return;
    default:
      collect_metavars(f.lhs(), props, agents);
      collect_metavars(f.rhs(), props, agents);
      return;
  }
}

std::vector<std::string> formula_metavars(const Formula& f) {
  std::vector<std::string> props, agents;
  collect_metavars(f, props, agents);
  return props;
}

std::vector<std::string> agent_metavars(const Formula& f) {
  std::vector<std::string> props, agents;
  collect_metavars(f, props, agents);
  return agents;
}

}  // namespace luka
