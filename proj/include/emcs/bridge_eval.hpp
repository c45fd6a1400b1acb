#ifndef EMCS_BRIDGE_EVAL_HPP
#define EMCS_BRIDGE_EVAL_HPP

#include <set>

#include "emcs/belief.hpp"
#include "emcs/bridge.hpp"
#include "emcs/context.hpp"

namespace emcs {

// S ⊨ (r:b) iff b ∈ S_r; negation flips it. Out-of-range indices are
// never satisfied.
bool satisfies(const BeliefState& state, const BridgeLiteral& literal);

bool satisfies(const BeliefState& state,
               const std::vector<BridgeLiteral>& body);

// app_i(S): heads of the bridge rules of context i applicable in S.
// context_index is 1-based. Requires a grounded system.
std::set<OperationalFormula> app(const Emcs& system, std::size_t context_index,
                                 const BeliefState& state);

struct AppSplit {
  std::set<OperationalFormula> now;
  std::set<OperationalFormula> next;  // wrapper stripped
};

// Partition heads into app^now and app^next, stripping the next wrapper.
AppSplit split_now_next(const std::set<OperationalFormula>& heads);

std::set<OperationalFormula> app_now(const Emcs& system,
                                     std::size_t context_index,
                                     const BeliefState& state);
std::set<OperationalFormula> app_next(const Emcs& system,
                                      std::size_t context_index,
                                      const BeliefState& state);

}  // namespace emcs

#endif
