#ifndef EMCS_EVOLUTION_HPP
#define EMCS_EVOLUTION_HPP

#include <cstddef>
#include <set>
#include <vector>

#include "emcs/belief.hpp"
#include "emcs/bridge.hpp"
#include "emcs/context.hpp"
#include "emcs/equilibria.hpp"
#include "emcs/statement.hpp"

namespace emcs {

// One instant observation: a knowledge base per observation context.
struct ObservationInstant {
  std::vector<KnowledgeBase> observations;

  bool operator==(const ObservationInstant&) const = default;
};

struct ObservationSequence {
  std::vector<ObservationInstant> instants;

  bool operator==(const ObservationSequence&) const = default;
  std::size_t size() const { return instants.size(); }
};

// ⟨S^1, …, S^s⟩.
struct EvolvingBeliefState {
  std::vector<BeliefState> states;

  bool operator==(const EvolvingBeliefState&) const = default;
  std::size_t size() const { return states.size(); }
};

// Per instant: the instantiated system's knowledge bases, the computed
// state, and the applicable now/next head sets.
struct EvolutionTrace {
  struct InstantRecord {
    std::size_t instant = 0;  // 1-based
    std::vector<KnowledgeBase> kbs;
    BeliefState state;
    std::vector<std::set<OperationalFormula>> app_now;
    std::vector<std::set<OperationalFormula>> app_next;
  };
  std::vector<InstantRecord> records;
};

// k_i^{j+1} = mng_i(app_i^next(S^j), k_i^j) for reasoning contexts;
// observation entries pass through untouched (instantiation replaces
// them).
std::vector<KnowledgeBase> step_kbs(const Emcs& system,
                                    const std::vector<KnowledgeBase>& current,
                                    const BeliefState& state);

// M^j: observation contexts get the instant's knowledge bases, reasoning
// contexts the supplied ones. Throws ValidationError when the instant does
// not fit the observation contexts.
Emcs instantiate(const Emcs& system, const ObservationInstant& instant,
                 const std::vector<KnowledgeBase>& kbs);

std::vector<KnowledgeBase> initial_kbs(const Emcs& system);

// Constants occurring anywhere in the sequence; grounding must cover them.
ConstantPool observation_constants(const ObservationSequence& observations);

// S_e is an evolving equilibrium of the system given Obs: every S^j is a
// static equilibrium of M^j with knowledge bases threaded by step_kbs.
bool check_evolving_equilibrium(const Emcs& system,
                                const ObservationSequence& observations,
                                const EvolvingBeliefState& candidate);

struct EvolvingCheckDetail {
  bool accepted = false;
  std::size_t failing_instant = 0;  // 0 when accepted
};

EvolvingCheckDetail check_evolving_equilibrium_detail(
    const Emcs& system, const ObservationSequence& observations,
    const EvolvingBeliefState& candidate);

struct EvolvingRun {
  EvolvingBeliefState states;
  EvolutionTrace trace;
};

// S^j = wfs(M^j) for j = 1..size, threading knowledge bases as above.
EvolvingRun evolving_wfs(const Emcs& system,
                         const ObservationSequence& observations,
                         std::size_t size, const SolverOptions& options = {});

// Per-instant grounded equilibria. Each instant's wfs candidate is
// verified with is_grounded_equilibrium; failure raises
// NoGroundedEquilibriumError carrying the instant and the γ orbit.
EvolvingRun evolving_grounded_equilibrium(const Emcs& system,
                                          const ObservationSequence& observations,
                                          std::size_t size,
                                          const SolverOptions& options = {});

enum class EvolvingSemantics { well_founded, grounded };

// Incremental packaging of the evolving semantics: hold only the current
// knowledge bases, consume one instant at a time, emit each S^j as
// computed. The emitted prefix equals the batch computation on the same
// prefix. A malformed instant throws without being applied and halts the
// driver.
class StreamDriver {
public:
  explicit StreamDriver(Emcs system,
                        EvolvingSemantics semantics = EvolvingSemantics::well_founded,
                        SolverOptions options = {});

  BeliefState feed(const ObservationInstant& instant);

  std::size_t instants_processed() const { return processed_; }
  bool halted() const { return halted_; }
  const std::vector<KnowledgeBase>& current_kbs() const { return kbs_; }

private:
  Emcs system_;
  EvolvingSemantics semantics_;
  SolverOptions options_;
  std::vector<KnowledgeBase> kbs_;
  std::size_t processed_ = 0;
  bool halted_ = false;
};

}  // namespace emcs

#endif
