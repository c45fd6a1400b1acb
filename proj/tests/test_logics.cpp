#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "emcs/kernel.hpp"
#include "emcs/logics/datalog.hpp"
#include "emcs/logics/el.hpp"
#include "emcs/logics/normal_lp.hpp"
#include "emcs/logics/observation.hpp"
#include "testutil.hpp"

using namespace emcs;
using namespace testutil;

namespace {

LpRule rule_of(GroundAtom head, std::vector<std::pair<GroundAtom, bool>> body) {
  LpRule rule;
  rule.head = SchematicAtom::lift(head);
  for (auto& [body_atom, negated] : body)
    rule.body.push_back(LpLiteral{SchematicAtom::lift(body_atom), negated});
  return rule;
}

// Ground normal programs with seeded shape; stratified when requested.
KnowledgeBase random_program(std::mt19937_64& rng, bool stratified) {
  std::vector<GroundAtom> atoms;
  for (char c : {'p', 'q', 'r', 's', 't'}) atoms.push_back(atom(std::string(1, c)));
  std::vector<std::size_t> stratum(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) stratum[i] = i;

  KnowledgeBase kb;
  std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (coin(rng) < 0.3) kb.insert(atoms[i]);
  }
  std::uniform_int_distribution<std::size_t> count(0, 5);
  const std::size_t rules = count(rng);
  for (std::size_t r = 0; r < rules; ++r) {
    std::size_t head = pick(rng);
    LpRule rule;
    rule.head = SchematicAtom::lift(atoms[head]);
    std::uniform_int_distribution<std::size_t> body_size(0, 2);
    const std::size_t body = body_size(rng);
    for (std::size_t b = 0; b < body; ++b) {
      std::size_t pos = pick(rng);
      bool negated = coin(rng) < 0.4;
      if (stratified) {
        // Positive bodies stay within the stratum, negative strictly below.
        if (negated) {
          if (stratum[head] == 0) continue;
          pos = pos % stratum[head];
        } else {
          pos = pos % (stratum[head] + 1);
        }
      }
      rule.body.push_back(LpLiteral{SchematicAtom::lift(atoms[pos]), negated});
    }
    kb.insert(std::move(rule));
  }
  return kb;
}

}  // namespace

TEST_CASE("datalog least model closes facts under rules") {
  KnowledgeBase kb;
  kb.insert(atom("p"));
  kb.insert(rule_of(atom("q"), {{atom("p"), false}}));
  CHECK(acc_datalog(kb) == BeliefSet{atom("p"), atom("q")});

  CHECK(acc_datalog(KnowledgeBase{}) == BeliefSet{});
}

TEST_CASE("datalog computes transitive closure bottom-up") {
  ConstantPool pool;
  for (const char* c : {"a", "b", "c"}) pool.add(c);

  KnowledgeBase kb;
  kb.insert(atom("e", {"a", "b"}));
  kb.insert(atom("e", {"b", "c"}));
  LpRule base;
  base.head = SchematicAtom{"t", {Term::make_variable("x"), Term::make_variable("y")}};
  base.body.push_back(LpLiteral{
      SchematicAtom{"e", {Term::make_variable("x"), Term::make_variable("y")}},
      false});
  LpRule step;
  step.head = SchematicAtom{"t", {Term::make_variable("x"), Term::make_variable("z")}};
  step.body.push_back(LpLiteral{
      SchematicAtom{"e", {Term::make_variable("x"), Term::make_variable("y")}},
      false});
  step.body.push_back(LpLiteral{
      SchematicAtom{"t", {Term::make_variable("y"), Term::make_variable("z")}},
      false});
  kb.insert(base);
  kb.insert(step);

  BeliefSet model = acc_datalog(kb, pool);
  CHECK(model == BeliefSet{atom("e", {"a", "b"}), atom("e", {"b", "c"}),
                           atom("t", {"a", "b"}), atom("t", {"b", "c"}),
                           atom("t", {"a", "c"})});
}

TEST_CASE("datalog acc is monotone in the knowledge base") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 60; ++round) {
    KnowledgeBase small = random_program(rng, true);
    // Make it definite by stripping negated literals.
    KnowledgeBase definite;
    for (const Statement& s : small) {
      if (const auto* rule = std::get_if<LpRule>(&s)) {
        LpRule positive;
        positive.head = rule->head;
        for (const LpLiteral& literal : rule->body)
          if (!literal.negated) positive.body.push_back(literal);
        definite.insert(positive);
      } else {
        definite.insert(s);
      }
    }
    KnowledgeBase larger = definite;
    larger.insert(atom("s"));
    larger.insert(rule_of(atom("t"), {{atom("s"), false}}));
    CHECK(is_subset(acc_datalog(definite), acc_datalog(larger)));
  }
}

TEST_CASE("well-founded semantics resolves unopposed negation") {
  KnowledgeBase kb;
  kb.insert(rule_of(atom("p"), {{atom("q"), true}}));
  CHECK(acc_normal_lp(kb) == BeliefSet{atom("p")});
}

TEST_CASE("mutual negation leaves both atoms undefined hence not true") {
  KnowledgeBase kb;
  kb.insert(rule_of(atom("p"), {{atom("q"), true}}));
  kb.insert(rule_of(atom("q"), {{atom("p"), true}}));
  CHECK(acc_normal_lp(kb) == BeliefSet{});
}

TEST_CASE("admissibility by default with a named exception") {
  ConstantPool pool;
  pool.add("i1");
  pool.add("i2");
  KnowledgeBase kb;
  kb.insert(atom("SuspectedBadGuy", {"i1"}));
  LpRule admissible;
  admissible.head = SchematicAtom{"AdmissibleImporter", {Term::make_variable("x")}};
  admissible.body.push_back(LpLiteral{
      SchematicAtom{"SuspectedBadGuy", {Term::make_variable("x")}}, true});
  kb.insert(admissible);

  BeliefSet model = acc_normal_lp(kb, pool);
  CHECK(model.count(atom("AdmissibleImporter", {"i2"})));
  CHECK(!model.count(atom("AdmissibleImporter", {"i1"})));
}

TEST_CASE("on negation-free programs the WFS equals the least model") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 60; ++round) {
    KnowledgeBase kb = random_program(rng, false);
    KnowledgeBase definite;
    for (const Statement& s : kb) {
      if (const auto* rule = std::get_if<LpRule>(&s)) {
        LpRule positive;
        positive.head = rule->head;
        for (const LpLiteral& literal : rule->body)
          if (!literal.negated) positive.body.push_back(literal);
        definite.insert(positive);
      } else {
        definite.insert(s);
      }
    }
    CHECK(acc_normal_lp(definite) == acc_datalog(definite));
  }
}

TEST_CASE("the reduct deletes blocked rules and strips negation") {
  KnowledgeBase kb;
  kb.insert(rule_of(atom("p"), {{atom("q"), true}}));

  // Stripping empties the body, leaving p unconditionally derivable.
  KnowledgeBase open = gl_reduct(kb, {});
  CHECK(open == KnowledgeBase{Statement(atom("p"))});

  CHECK(gl_reduct(kb, {atom("q")}).empty());

  KnowledgeBase mixed;
  mixed.insert(rule_of(atom("p"), {{atom("r"), false}, {atom("q"), true}}));
  KnowledgeBase stripped = gl_reduct(mixed, {});
  CHECK(stripped == KnowledgeBase{Statement(rule_of(atom("p"),
                                                    {{atom("r"), false}}))});
}

TEST_CASE("the reduct is the identity on definite knowledge bases") {
  KnowledgeBase kb;
  kb.insert(atom("p"));
  kb.insert(rule_of(atom("q"), {{atom("p"), false}}));
  LpRule schematic;
  schematic.head = SchematicAtom{"t", {Term::make_variable("x")}};
  schematic.body.push_back(
      LpLiteral{SchematicAtom{"e", {Term::make_variable("x")}}, false});
  kb.insert(schematic);
  CHECK(gl_reduct(kb, {atom("p"), atom("q")}) == kb);
  CHECK(gl_reduct(kb, {}) == kb);
}

TEST_CASE("stability on programs without loops through negation") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 80; ++round) {
    KnowledgeBase kb = random_program(rng, true);
    BeliefSet wfm = acc_normal_lp(kb);
    CHECK(acc_datalog(gl_reduct(kb, wfm)) == wfm);
  }
}

TEST_CASE("reduct antitonicity and commutation with add") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int round = 0; round < 60; ++round) {
    KnowledgeBase kb = random_program(rng, false);
    BeliefSet big, small;
    for (const char* name : {"p", "q", "r", "s", "t"}) {
      if (coin(rng) < 0.5) {
        big.insert(atom(name));
        if (coin(rng) < 0.5) small.insert(atom(name));
      }
    }
    // small ⊆ big: the reduct against the bigger set keeps fewer rules.
    CHECK(kb_subset(gl_reduct(kb, big), gl_reduct(kb, small)));

    BeliefSet added = {atom("u"), atom("v")};
    KnowledgeBase with_facts = kb;
    kb_insert_facts(with_facts, added);
    KnowledgeBase reduced_then_added = gl_reduct(kb, big);
    kb_insert_facts(reduced_then_added, added);
    CHECK(gl_reduct(with_facts, big) == reduced_then_added);
  }
}

TEST_CASE("EL saturation applies concept inclusions to assertions") {
  KnowledgeBase kb;
  kb.insert(ElAxiom::subsumption("CherryTomato", "Tomato"));
  kb.insert(atom("CherryTomato", {"c1"}));
  CHECK(acc_el(kb).count(atom("Tomato", {"c1"})));
}

TEST_CASE("EL saturation materializes nominal existentials as roles") {
  KnowledgeBase kb;
  kb.insert(ElAxiom::nominal_right("CherryTomato", "HTSCode", "07020020"));
  kb.insert(atom("CherryTomato", {"c1"}));
  CHECK(acc_el(kb).count(atom("HTSCode", {"c1", "07020020"})));

  KnowledgeBase back;
  back.insert(ElAxiom::nominal_left("HTSCode", "07020020", "CherryTomato"));
  back.insert(atom("HTSCode", {"c1", "07020020"}));
  CHECK(acc_el(back).count(atom("CherryTomato", {"c1"})));
}

TEST_CASE("EL saturation of the empty knowledge base is empty") {
  CHECK(acc_el(KnowledgeBase{}) == BeliefSet{});
}

TEST_CASE("disjointness raises an inconsistency naming the individual") {
  KnowledgeBase kb;
  kb.insert(ElAxiom::disjoint("CherryTomato", "GrapeTomato"));
  kb.insert(atom("CherryTomato", {"c"}));
  kb.insert(atom("GrapeTomato", {"c"}));
  try {
    acc_el(kb);
    FAIL("expected an inconsistency");
  } catch (const InconsistencyError& error) {
    CHECK(error.individual() == "c");
  }
}

TEST_CASE("EL existential and conjunction rules fire together") {
  KnowledgeBase kb;
  kb.insert(ElAxiom::existential("CommodCountry", "EUCountry", "EUOrigin"));
  kb.insert(ElAxiom::existential("ExpeditableImporter", "", "Expedited"));
  kb.insert(ElAxiom::conjunction("Expedited", "EUOrigin", "LowRisk"));
  kb.insert(atom("EUCountry", {"portugal"}));
  kb.insert(atom("CommodCountry", {"c2", "portugal"}));
  kb.insert(atom("ExpeditableImporter", {"c2", "i2"}));
  BeliefSet beliefs = acc_el(kb);
  CHECK(beliefs.count(atom("EUOrigin", {"c2"})));
  CHECK(beliefs.count(atom("Expedited", {"c2"})));
  CHECK(beliefs.count(atom("LowRisk", {"c2"})));
}

TEST_CASE("EL saturation is monotone and stays within the step bound") {
  KnowledgeBase kb;
  kb.insert(ElAxiom::subsumption("A", "B"));
  kb.insert(ElAxiom::subsumption("B", "C"));
  kb.insert(ElAxiom::nominal_right("C", "r", "o"));
  kb.insert(ElAxiom::nominal_left("r", "o", "D"));
  kb.insert(atom("A", {"a1"}));

  BeliefSet small = acc_el(kb);
  KnowledgeBase larger = kb;
  larger.insert(atom("A", {"a2"}));
  CHECK(is_subset(small, acc_el(larger)));

  ElSaturation saturation = saturate_el(larger);
  // signature: 5 names, individuals: a1, a2, o.
  std::size_t signature = 5, individuals = 3;
  CHECK(saturation.steps <=
        signature * signature * individuals * individuals);
}

TEST_CASE("the observation logic is the identity on fact sets") {
  CHECK(acc_observation(kb_of_facts({atom("o")})) == BeliefSet{atom("o")});
  CHECK(acc_observation(KnowledgeBase{}) == BeliefSet{});
  CHECK(acc_observation(kb_of_facts({atom("Misfiling", {"i3"})})) ==
        BeliefSet{atom("Misfiling", {"i3"})});
}

TEST_CASE("logic factory hands out the four built-ins") {
  for (const char* kind : {"observation", "datalog", "normal-lp", "el"}) {
    std::shared_ptr<const ContextLogic> logic = make_logic(kind);
    CHECK(logic->kind() == kind);
    CHECK(logic->least_element().has_value());
    CHECK(logic->reducible());
  }
  CHECK(!make_logic("normal-lp")->monotone());
  CHECK(make_logic("datalog")->monotone());
  CHECK_THROWS_AS(make_logic("prolog"), ValidationError);
}
