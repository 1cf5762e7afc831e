#include "doctest.h"
#include "fixtures.hpp"
#include "generators.hpp"
#include "luka/hilbert.hpp"
#include "luka/validity.hpp"

using namespace luka;

TEST_CASE("instantiate replaces metavariable leaves") {
  const Scheme& lb1 = scheme_catalog().at("LB1");
  Substitution subst;
  subst.formulas["phi"] = Formula::atom("p");
  subst.formulas["psi"] = Formula::atom("q");
  subst.agents["a"] = "a";
  CHECK(instantiate(lb1, subst) == parse_formula("(B{a} p & B{a}(p -> q)) -> B{a} q"));

  Scheme ground = Scheme::parse("!B{a} bot");
  CHECK(instantiate(ground, {}) == parse_formula("!B{a} bot"));

  const Scheme& l1 = scheme_catalog().at("L1");
  Substitution s2;
  s2.formulas["phi"] = parse_formula("B{a} p");
  s2.formulas["psi"] = Formula::bottom();
  CHECK(instantiate(l1, s2) == parse_formula("B{a} p -> (bot -> B{a} p)"));

  Substitution missing;
  missing.formulas["phi"] = Formula::atom("p");
  CHECK_THROWS_AS(instantiate(lb1, missing), std::invalid_argument);
}

TEST_CASE("validity in a single model") {
  Model m = fixtures::m1();
  auto r1 = check_validity_in_model(m, parse_formula("B{a} p -> B{a} B{a} p"),
                                    SkepticalVariant::SourceState);
  CHECK_FALSE(r1.valid);
  CHECK(r1.min_value == Rational01::of(9, 10));
  CHECK(r1.argmin == "s0");

  auto r2 = check_validity_in_model(m, parse_formula("(B{a} p & B{a}(p -> q)) -> B{a} q"),
                                    SkepticalVariant::SourceState);
  CHECK(r2.valid);
  CHECK(r2.min_value.is_one());

  auto r3 = check_validity_in_model(m, parse_formula("S{a} p -> S{a} S{a} p"),
                                    SkepticalVariant::TargetState);
  CHECK_FALSE(r3.valid);
  CHECK(r3.min_value == Rational01::of(193, 250));
  CHECK(r3.argmin == "s0");

  // valid iff every state evaluates to 1
  EvalContext ctx{m};
  Formula f = parse_formula("B{a} q -> q");
  auto all = eval_all_states(ctx, f);
  bool all_one = true;
  for (const auto& v : all) all_one = all_one && v.is_one();
  CHECK(check_validity_in_model(m, f, SkepticalVariant::SourceState).valid == all_one);
}

TEST_CASE("counterexample search finds the non-theorems") {
  SearchConfig cfg;
  cfg.sampler.states = 3;
  cfg.sampler.denominator = 10;
  cfg.sampler.seed = 1;
  cfg.trials = 10000;

  for (const char* name : {"LB2", "LB3", "LB4", "LB5"}) {
    CAPTURE(name);
    auto report = search_counterexample(scheme_catalog().at(name), cfg);
    REQUIRE(report.has_value());
    CHECK(report->value < Rational01::one());
    // the report re-evaluates to its recorded value exactly
    Formula inst = instantiate(scheme_catalog().at(name), report->instantiation);
    EvalContext ctx{report->model, cfg.variant};
    CHECK(eval_formula(ctx, report->state, inst) == report->value);
  }
}

TEST_CASE("constrained search finds nothing for the matching scheme") {
  struct Case {
    FrameProperty frame;
    const char* scheme;
  };
  const Case cases[] = {
      {FrameProperty::Serial, "LB2"},
      {FrameProperty::Transitive, "LB3"},
      {FrameProperty::Recognizable, "LB4"},
      {FrameProperty::Reflexive, "LB5"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.scheme);
    SearchConfig cfg;
    cfg.sampler.states = 3;
    cfg.sampler.denominator = 8;
    cfg.sampler.seed = 7;
    cfg.sampler.constraints = {c.frame};
    cfg.trials = 300;
    CHECK_FALSE(search_counterexample(scheme_catalog().at(c.scheme), cfg).has_value());
  }
}

TEST_CASE("distribution scheme survives a long search") {
  SearchConfig cfg;
  cfg.sampler.states = 3;
  cfg.sampler.denominator = 6;
  cfg.sampler.seed = 3;
  cfg.trials = 2000;
  CHECK_FALSE(search_counterexample(scheme_catalog().at("LB1"), cfg).has_value());
}

TEST_CASE("search is deterministic for a fixed seed") {
  SearchConfig cfg;
  cfg.sampler.states = 3;
  cfg.sampler.denominator = 10;
  cfg.sampler.seed = 11;
  cfg.trials = 5000;
  auto a = search_counterexample(scheme_catalog().at("LB5"), cfg);
  auto b = search_counterexample(scheme_catalog().at("LB5"), cfg);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->trial == b->trial);
  CHECK(a->state == b->state);
  CHECK(a->value == b->value);
  CHECK(a->model == b->model);
}

TEST_CASE("search propagates unsatisfiable constraints") {
  SearchConfig cfg;
  cfg.sampler.constraints = {FrameProperty::Serial, FrameProperty::Recognizable};
  CHECK_THROWS_AS(search_counterexample(scheme_catalog().at("LB2"), cfg), ModelError);
}
