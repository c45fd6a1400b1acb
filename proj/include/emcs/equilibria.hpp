#ifndef EMCS_EQUILIBRIA_HPP
#define EMCS_EQUILIBRIA_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "emcs/belief.hpp"
#include "emcs/context.hpp"
#include "emcs/errors.hpp"
#include "emcs/statement.hpp"

namespace emcs {

struct SolverOptions {
  // Overrides the computed iteration safety bound. When unset, the
  // EMCS_ITER_CAP environment variable applies, then the computed bound.
  std::optional<std::size_t> iteration_cap;
};

// Monotone growth over the finite ground lattice must stop within
// |ground heads| + |belief vocabulary| + 1 steps; exceeding the bound is
// an integrity error.
std::size_t iteration_safety_bound(const Emcs& system);
std::size_t effective_iteration_cap(const Emcs& system,
                                    const SolverOptions& options);

// The kb^α / E^α iteration of a definite system, first to last step.
struct FixpointTrace {
  struct Step {
    std::size_t index = 0;
    std::vector<KnowledgeBase> kbs;
    BeliefState beliefs;
  };
  std::vector<Step> steps;

  std::size_t iterations() const {
    return steps.empty() ? 0 : steps.size() - 1;
  }
};

// Negation-free bridge rules over reduced knowledge bases.
bool is_definite(const Emcs& system);

// An Emcs certified definite at construction.
struct ReductSystem {
  Emcs system;

  // Throws ValidationError when the system is not definite or not ground.
  static ReductSystem adopt(Emcs system);
};

// Def. of static equilibrium: S_i ∈ ACC_i(mng_i(app_i^now(S), kb_i)) for
// every context. A context whose ACC rejects the candidate outright (an
// inconsistent ontology) simply has no acceptable belief set here, so the
// candidate is not an equilibrium.
bool is_static_equilibrium(const Emcs& system, const BeliefState& state);

struct GroundedFixpoint {
  BeliefState state;
  FixpointTrace trace;
};

// Least equilibrium of a definite system with monotone operations, by
// iterating kb_i^{α+1} = mng_i(app_i^now(E^α), kb_i^α) to the fixpoint.
GroundedFixpoint grounded_equilibrium_definite(const ReductSystem& reduct,
                                               const SolverOptions& options = {});

// The S-reduct: delete bridge rules with a satisfied negated literal,
// strip the remaining negated literals, reduce every knowledge base.
// Every context must be reducible.
ReductSystem s_reduct(const Emcs& system, const BeliefState& state);

// γ(S) = GE(M^S).
BeliefState gamma(const Emcs& system, const BeliefState& state,
                  const SolverOptions& options = {});

// ⟨least elements⟩; throws IntegrityError when some logic is not normal.
BeliefState least_belief_state(const Emcs& system);

// Well-founded semantics: least fixpoint of γ², iterated from the least
// belief state. Requires a normal, reducible system with monotone
// operations and deterministic ACCs.
BeliefState wfs(const Emcs& system, const SolverOptions& options = {});

// S = γ(S) and S is a static equilibrium.
bool is_grounded_equilibrium(const Emcs& system, const BeliefState& state,
                             const SolverOptions& options = {});

// Predicate-level dependency graph: bridge edges from each body literal's
// (r, pred) to its head's (i, pred); intra-context edges over-approximated
// from kb rules and axioms. True iff no cycle passes through a bridge
// edge.
bool check_acyclic(const Emcs& system);

// γ iterates from the least state up to the first repeated value. Used in
// error reports when no grounded equilibrium can be certified.
std::vector<BeliefState> gamma_orbit(const Emcs& system,
                                     const SolverOptions& options = {});

class NoGroundedEquilibriumError : public SemanticsError {
public:
  NoGroundedEquilibriumError(std::size_t instant,
                             std::vector<BeliefState> orbit);

  std::size_t instant() const { return instant_; }
  const std::vector<BeliefState>& orbit() const { return orbit_; }

private:
  std::size_t instant_;
  std::vector<BeliefState> orbit_;
};

}  // namespace emcs

#endif
