#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "emcs/equilibria.hpp"
#include "emcs/oracle.hpp"
#include "testutil.hpp"

using namespace emcs;
using namespace testutil;

TEST_CASE("exhaustive equilibria of the three small fixtures") {
  CHECK(oracle::enumerate_equilibria(msj()) ==
        std::vector<BeliefState>{state({{}}), state({{atom("p")}})});
  CHECK(oracle::enumerate_equilibria(mol()).empty());
  CHECK(oracle::enumerate_equilibria(m2()) ==
        std::vector<BeliefState>{state({{atom("p")}, {atom("q")}})});
}

TEST_CASE("minimal equilibria of the three small fixtures") {
  CHECK(oracle::minimal_equilibria(msj()) ==
        std::vector<BeliefState>{state({{}})});
  CHECK(oracle::minimal_equilibria(mol()).empty());
  CHECK(oracle::minimal_equilibria(m2()) ==
        std::vector<BeliefState>{state({{atom("p")}, {atom("q")}})});
}

TEST_CASE("the reachable universe of the chain fixture has eight states") {
  oracle::BeliefUniverse universe = oracle::BeliefUniverse::reachable(m2());
  REQUIRE(universe.atoms.size() == 2);
  CHECK(universe.atoms[0] == std::vector<GroundAtom>{atom("p"), atom("r")});
  CHECK(universe.atoms[1] == std::vector<GroundAtom>{atom("q")});
  CHECK(universe.state_count() == std::size_t(8));
}

TEST_CASE("enumeration results come back sorted regardless of order") {
  std::vector<BeliefState> equilibria = oracle::enumerate_equilibria(msj());
  CHECK(std::is_sorted(equilibria.begin(), equilibria.end()));
}

TEST_CASE("the oracle refuses universes beyond the bound") {
  BeliefSet many;
  for (int i = 0; i < 24; ++i) many.insert(atom("p" + std::to_string(i)));
  Emcs system = make_system({identity_context("C1", many)});
  oracle::UniverseOptions tight;
  tight.max_states = 1u << 20;
  CHECK_THROWS_AS(oracle::enumerate_equilibria(system, tight),
                  UniverseBoundError);
}

TEST_CASE("property verdicts on the small fixtures") {
  oracle::PropertyReport self = oracle::verify_props(msj());
  CHECK(self.all_passed());

  // No grounded equilibria at all: the verdicts hold vacuously.
  oracle::PropertyReport odd = oracle::verify_props(mol());
  CHECK(odd.all_passed());
  CHECK(oracle::enumerate_grounded_equilibria(mol()).empty());
}

TEST_CASE("enumeration handles ontology contexts") {
  Emcs system = io::parse_system(
      "context Feed : observation {\n"
      "  vocab { pred a/0; }\n"
      "}\n"
      "context Onto : el {\n"
      "  vocab { pred A/1; pred B/1; }\n"
      "  kb { A sub B; A(c1); }\n"
      "}\n");
  system = ground_system(system);
  // No bridge rules: the only equilibrium pairs the empty observation with
  // the saturation of the ontology.
  std::vector<BeliefState> equilibria = oracle::enumerate_equilibria(system);
  REQUIRE(equilibria.size() == 1);
  CHECK(equilibria[0].components[1] ==
        BeliefSet{atom("A", {"c1"}), atom("B", {"c1"})});
}

TEST_CASE("generated instances are reproducible and validate-clean") {
  oracle::GeneratorParams params;
  params.seed = 5;
  Emcs first = oracle::random_instance(params);
  Emcs second = oracle::random_instance(params);
  CHECK(first == second);

  params.seed = 6;
  CHECK(!(oracle::random_instance(params) == first));
}

TEST_CASE("a twenty-instance property campaign passes") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    oracle::GeneratorParams params;
    params.seed = seed * 31 + 1;
    Emcs system = oracle::random_instance(params);
    oracle::PropertyReport report = oracle::verify_props(system);
    INFO("seed ", params.seed, "\n", report.to_string());
    CHECK(report.all_passed());
  }
}

TEST_CASE("wfs sits below every grounded equilibrium on random instances") {
  for (std::uint64_t seed = 301; seed <= 315; ++seed) {
    oracle::GeneratorParams params;
    params.seed = seed;
    Emcs system = oracle::random_instance(params);
    BeliefState well_founded = wfs(system);
    for (const BeliefState& grounded :
         oracle::enumerate_grounded_equilibria(system))
      CHECK(componentwise_subset(well_founded, grounded));
  }
}

TEST_CASE("grounded equilibria are a subset of the minimal equilibria") {
  for (std::uint64_t seed = 401; seed <= 412; ++seed) {
    oracle::GeneratorParams params;
    params.seed = seed;
    Emcs system = oracle::random_instance(params);
    std::vector<BeliefState> minimal = oracle::minimal_equilibria(system);
    for (const BeliefState& grounded :
         oracle::enumerate_grounded_equilibria(system)) {
      CHECK(std::find(minimal.begin(), minimal.end(), grounded) !=
            minimal.end());
    }
  }
}
