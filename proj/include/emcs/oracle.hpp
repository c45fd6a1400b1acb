#ifndef EMCS_ORACLE_HPP
#define EMCS_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "emcs/belief.hpp"
#include "emcs/context.hpp"
#include "emcs/equilibria.hpp"
#include "emcs/evolution.hpp"

namespace emcs::oracle {

struct UniverseOptions {
  std::size_t max_states = std::size_t(1) << 20;
  std::uint64_t sample_seed = 0;
  std::size_t sample_pairs = 128;
};

// Per context, the finite lattice of candidate belief sets: the powerset
// of the reachable belief vocabulary (kb atoms, bridge heads and bodies,
// and each logic's closure of kb plus every addable head).
struct BeliefUniverse {
  std::vector<std::vector<GroundAtom>> atoms;

  static BeliefUniverse reachable(const Emcs& system);

  // Total candidate count, or nullopt when it does not fit in size_t.
  std::optional<std::size_t> state_count() const;
};

// All static equilibria in the universe, sorted. Throws UniverseBoundError
// with a size report when the universe exceeds the bound.
std::vector<BeliefState> enumerate_equilibria(const Emcs& system,
                                              const UniverseOptions& options = {});

// ⊆-minimal elements of enumerate_equilibria.
std::vector<BeliefState> minimal_equilibria(const Emcs& system,
                                            const UniverseOptions& options = {});

// All grounded equilibria in the universe (exhaustive γ-fixpoint check).
std::vector<BeliefState> enumerate_grounded_equilibria(
    const Emcs& system, const UniverseOptions& options = {},
    const SolverOptions& solver = {});

struct PropertyReport {
  struct Entry {
    std::string property;
    bool passed = false;
    std::size_t checked = 0;
    std::string witness;  // set on failure
  };
  std::vector<Entry> entries;

  bool all_passed() const;
  std::string to_string() const;
};

// Exhaustive verdicts for the three structural properties: grounded
// equilibria are minimal equilibria, γ is antimonotone on sampled ⊆-pairs,
// and wfs is a componentwise lower bound of every grounded equilibrium.
PropertyReport verify_props(const Emcs& system,
                            const UniverseOptions& options = {},
                            const SolverOptions& solver = {});

// Seeded generator for the verification campaigns: propositional systems
// over identity and normal-lp contexts, with bridge negation and optional
// next heads. Instances come back grounded and validate-clean.
struct GeneratorParams {
  std::uint64_t seed = 0;
  std::size_t min_contexts = 1;
  std::size_t max_contexts = 3;
  std::size_t max_atoms_per_context = 4;
  std::size_t max_bridge_rules_per_context = 4;
  std::size_t max_lp_rules_per_context = 3;
  double lp_context_probability = 0.4;
  double fact_probability = 0.15;
  double negation_probability = 0.4;
  double next_probability = 0.0;
  bool leading_observation_context = false;
};

Emcs random_instance(const GeneratorParams& params);

ObservationSequence random_observation_sequence(const Emcs& system,
                                                std::size_t length,
                                                std::uint64_t seed);

std::string state_to_text(const BeliefState& state);

}  // namespace emcs::oracle

#endif
