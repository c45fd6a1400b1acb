#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "emcs/equilibria.hpp"
#include "emcs/evolution.hpp"
#include "emcs/oracle.hpp"
#include "testutil.hpp"

using namespace emcs;
using namespace testutil;

namespace {

// Observation context plus one reasoning context importing o persistently:
// next(add(p)) <- (1:o).
Emcs make_persistence_system() {
  return make_system(
      {identity_context("O", {}, {}, true),
       identity_context("R", {},
                        {add_rule(atom("p"), {lit(1, atom("o"))}, true)})});
}

ObservationInstant instant_of(std::vector<BeliefSet> observations) {
  ObservationInstant instant;
  for (BeliefSet& atoms : observations)
    instant.observations.push_back(kb_of_facts(atoms));
  return instant;
}

}  // namespace

TEST_CASE("step_kbs without firing next-heads keeps the knowledge bases") {
  Emcs system = make_persistence_system();
  std::vector<KnowledgeBase> kbs = initial_kbs(system);
  CHECK(step_kbs(system, kbs, BeliefState::empty(2)) == kbs);
}

TEST_CASE("a fired next-head lands in the following instant only") {
  Emcs system = make_persistence_system();
  ObservationSequence observations;
  observations.instants.push_back(instant_of({{atom("o")}}));
  observations.instants.push_back(instant_of({{}}));

  EvolvingRun run = evolving_wfs(system, observations, 2);
  REQUIRE(run.states.size() == 2);
  CHECK(!run.states.states[0].components[1].count(atom("p")));
  CHECK(run.states.states[1].components[1].count(atom("p")));

  // The import persists even though the observation is gone at instant 2.
  CHECK(run.states.states[1].components[0].empty());
}

TEST_CASE("next-heads in observation contexts have no effect") {
  Emcs system = make_system(
      {identity_context("O", {}, {add_rule(atom("o"), {}, true)}, true),
       identity_context("R")});
  std::vector<KnowledgeBase> kbs = initial_kbs(system);
  BeliefState fired = state({{atom("o")}, {}});
  CHECK(step_kbs(system, kbs, fired)[0] == kbs[0]);
}

TEST_CASE("instantiate replaces observation and reasoning knowledge bases") {
  Emcs system = make_persistence_system();
  std::vector<KnowledgeBase> kbs = initial_kbs(system);

  Emcs first = instantiate(system, instant_of({{atom("o")}}), kbs);
  CHECK(kb_facts(first.contexts[0].kb) == BeliefSet{atom("o")});
  CHECK(first.contexts[1].kb == system.contexts[1].kb);

  Emcs cleared = instantiate(system, instant_of({{}}), kbs);
  CHECK(cleared.contexts[0].kb.empty());

  CHECK_THROWS_AS(
      instantiate(system, instant_of({{atom("unknown")}}), kbs),
      ValidationError);
  CHECK_THROWS_AS(instantiate(system, instant_of({{}, {}}), kbs),
                  ValidationError);
}

TEST_CASE("the cargo system at instant 2 holds the misfiling observation") {
  CargoFixture cargo = load_cargo();
  std::vector<KnowledgeBase> kbs = initial_kbs(cargo.system);
  Emcs second =
      instantiate(cargo.system, cargo.observations.instants[1], kbs);
  CHECK(kb_facts(second.contexts[1].kb) == BeliefSet{atom("Misfiling", {"i3"})});
  CHECK(kb_facts(second.contexts[0].kb).count(atom("ShpmtCommod", {"s2", "c2"})));
}

TEST_CASE("evolving equilibrium checking accepts the engine's output") {
  CargoFixture cargo = load_cargo();
  EvolvingRun run = evolving_wfs(cargo.system, cargo.observations, 3);
  CHECK(check_evolving_equilibrium(cargo.system, cargo.observations,
                                   run.states));

  // Every prefix of an accepted evolving equilibrium is accepted.
  for (std::size_t size = 1; size <= 3; ++size) {
    EvolvingBeliefState prefix;
    prefix.states.assign(run.states.states.begin(),
                         run.states.states.begin() + size);
    CHECK(check_evolving_equilibrium(cargo.system, cargo.observations, prefix));
  }

  // Perturbing the first state by one atom breaks it at instant 1.
  EvolvingBeliefState perturbed = run.states;
  perturbed.states[0].components[3].insert(atom("CompliantShpmt", {"s1"}));
  EvolvingCheckDetail detail = check_evolving_equilibrium_detail(
      cargo.system, cargo.observations, perturbed);
  CHECK(!detail.accepted);
  CHECK(detail.failing_instant == 1);
}

TEST_CASE("a size-zero run is empty") {
  CargoFixture cargo = load_cargo();
  EvolvingRun run = evolving_wfs(cargo.system, cargo.observations, 0);
  CHECK(run.states.size() == 0);
  CHECK(run.trace.records.empty());
}

TEST_CASE("requested sizes beyond the observation sequence are rejected") {
  CargoFixture cargo = load_cargo();
  CHECK_THROWS_AS(evolving_wfs(cargo.system, cargo.observations, 4),
                  ValidationError);
}

TEST_CASE("the evolving semantics agree on definite and acyclic systems") {
  Emcs system = make_persistence_system();
  ObservationSequence observations;
  observations.instants.push_back(instant_of({{atom("o")}}));
  observations.instants.push_back(instant_of({{}}));

  EvolvingRun well_founded = evolving_wfs(system, observations, 2);
  EvolvingRun grounded =
      evolving_grounded_equilibrium(system, observations, 2);
  CHECK(well_founded.states == grounded.states);

  // Definite: the per-instant grounded fixpoint is the same thing.
  std::vector<KnowledgeBase> kbs = initial_kbs(system);
  for (std::size_t j = 0; j < 2; ++j) {
    Emcs instantiated = instantiate(system, observations.instants[j], kbs);
    GroundedFixpoint fixpoint =
        grounded_equilibrium_definite(ReductSystem::adopt(instantiated));
    CHECK(fixpoint.state == grounded.states.states[j]);
    kbs = step_kbs(instantiated, initial_kbs(instantiated), fixpoint.state);
  }
}

TEST_CASE("a context with the odd loop has no grounded equilibrium") {
  Emcs system = make_system(
      {identity_context("O", {}, {}, true),
       identity_context("R", {},
                        {add_rule(atom("p"), {lit(2, atom("p"), true)})})});
  ObservationSequence observations;
  observations.instants.push_back(instant_of({{}}));
  try {
    evolving_grounded_equilibrium(system, observations, 1);
    FAIL("expected no grounded equilibrium");
  } catch (const NoGroundedEquilibriumError& error) {
    CHECK(error.instant() == 1);
    CHECK(error.orbit().size() == 2);
  }
}

TEST_CASE("the stream driver emits the batch prefix instant by instant") {
  CargoFixture cargo = load_cargo();
  EvolvingRun batch = evolving_wfs(cargo.system, cargo.observations, 3);

  StreamDriver driver(cargo.system);
  for (std::size_t j = 0; j < 3; ++j) {
    BeliefState emitted = driver.feed(cargo.observations.instants[j]);
    CHECK(emitted == batch.states.states[j]);
  }
  CHECK(driver.instants_processed() == 3);
  CHECK(!driver.halted());
}

TEST_CASE("the stream driver supports the grounded semantics too") {
  CargoFixture cargo = load_cargo();
  EvolvingRun batch =
      evolving_grounded_equilibrium(cargo.system, cargo.observations, 3);
  StreamDriver driver(cargo.system, EvolvingSemantics::grounded);
  for (std::size_t j = 0; j < 3; ++j)
    CHECK(driver.feed(cargo.observations.instants[j]) ==
          batch.states.states[j]);
}

TEST_CASE("the stream driver halts on a malformed instant") {
  Emcs system = make_persistence_system();
  StreamDriver driver(system);
  BeliefState first = driver.feed(instant_of({{atom("o")}}));
  CHECK(first.components[0].count(atom("o")));
  CHECK_THROWS_AS(driver.feed(instant_of({{atom("unknown")}})),
                  ValidationError);
  CHECK(driver.halted());
  CHECK(driver.instants_processed() == 1);
  CHECK_THROWS_AS(driver.feed(instant_of({{}})), IntegrityError);
}

TEST_CASE("purely-now systems are time-invariant under repeated input") {
  Emcs system = make_system(
      {identity_context("O", {}, {}, true),
       identity_context("R", {}, {add_rule(atom("p"), {lit(1, atom("o"))})})});
  ObservationSequence observations;
  for (int j = 0; j < 4; ++j)
    observations.instants.push_back(instant_of({{atom("o")}}));
  EvolvingRun run = evolving_wfs(system, observations, 4);
  for (std::size_t j = 1; j < 4; ++j)
    CHECK(run.states.states[j] == run.states.states[0]);
}

TEST_CASE("two runs over the same inputs are identical") {
  CargoFixture cargo = load_cargo();
  EvolvingRun first = evolving_wfs(cargo.system, cargo.observations, 3);
  EvolvingRun second = evolving_wfs(cargo.system, cargo.observations, 3);
  CHECK(first.states == second.states);
  REQUIRE(first.trace.records.size() == second.trace.records.size());
  for (std::size_t j = 0; j < first.trace.records.size(); ++j) {
    CHECK(first.trace.records[j].kbs == second.trace.records[j].kbs);
    CHECK(first.trace.records[j].app_now == second.trace.records[j].app_now);
    CHECK(first.trace.records[j].app_next == second.trace.records[j].app_next);
  }
}

TEST_CASE("with no observation contexts one instant is the static case") {
  Emcs system = m2();
  ObservationSequence observations;
  observations.instants.push_back(ObservationInstant{});
  EvolvingRun run = evolving_wfs(system, observations, 1);
  REQUIRE(run.states.size() == 1);
  CHECK(run.states.states[0] == wfs(system));
}

TEST_CASE("prefix coherence on generated systems and streams") {
  for (std::uint64_t seed = 101; seed <= 106; ++seed) {
    oracle::GeneratorParams params;
    params.seed = seed;
    params.leading_observation_context = true;
    params.next_probability = 0.3;
    Emcs system = oracle::random_instance(params);
    ObservationSequence observations =
        oracle::random_observation_sequence(system, 6, seed * 977);

    EvolvingRun full = evolving_wfs(system, observations, 6);
    for (std::size_t size = 0; size <= 6; ++size) {
      EvolvingRun prefix = evolving_wfs(system, observations, size);
      CHECK(std::equal(prefix.states.states.begin(),
                       prefix.states.states.end(),
                       full.states.states.begin()));
    }
  }
}

TEST_CASE("the evolution trace records the instantiated knowledge bases") {
  CargoFixture cargo = load_cargo();
  EvolvingRun run = evolving_wfs(cargo.system, cargo.observations, 3);
  REQUIRE(run.trace.records.size() == 3);

  // Instant 1 starts from the declared reasoning kbs.
  CHECK(run.trace.records[0].kbs[3] == cargo.system.contexts[3].kb);
  // The misfiling next-rule fires at instant 2 and lands in kb_4 at 3.
  CHECK(run.trace.records[1].app_next[3].count(
      OperationalFormula{"add", atom("SuspectedBadGuy", {"i3"}), false}));
  CHECK(run.trace.records[2].kbs[3].count(
      Statement(atom("SuspectedBadGuy", {"i3"}))));
}
