#include "emcs/bridge_eval.hpp"

#include "emcs/errors.hpp"

namespace emcs {

bool satisfies(const BeliefState& state, const BridgeLiteral& literal) {
  if (literal.context_index < 1 ||
      literal.context_index > state.components.size())
    return false;
  bool member =
      state.components[literal.context_index - 1].count(literal.formula) > 0;
  return member != literal.negated;
}

bool satisfies(const BeliefState& state,
               const std::vector<BridgeLiteral>& body) {
  for (const BridgeLiteral& literal : body) {
    if (!satisfies(state, literal)) return false;
  }
  return true;
}

std::set<OperationalFormula> app(const Emcs& system, std::size_t context_index,
                                 const BeliefState& state) {
  if (context_index < 1 || context_index > system.size())
    throw ValidationError("context index " + std::to_string(context_index) +
                          " out of range");
  if (!system.grounded)
    throw IntegrityError("app requires a grounded system");
  std::set<OperationalFormula> heads;
  for (const BridgeRule& rule : system.contexts[context_index - 1].ground_rules) {
    if (satisfies(state, rule.body)) heads.insert(rule.head);
  }
  return heads;
}

AppSplit split_now_next(const std::set<OperationalFormula>& heads) {
  AppSplit split;
  for (const OperationalFormula& head : heads) {
    if (head.next_wrapped)
      split.next.insert(head.unwrapped());
    else
      split.now.insert(head);
  }
  return split;
}

std::set<OperationalFormula> app_now(const Emcs& system,
                                     std::size_t context_index,
                                     const BeliefState& state) {
  return split_now_next(app(system, context_index, state)).now;
}

std::set<OperationalFormula> app_next(const Emcs& system,
                                      std::size_t context_index,
                                      const BeliefState& state) {
  return split_now_next(app(system, context_index, state)).next;
}

}  // namespace emcs
