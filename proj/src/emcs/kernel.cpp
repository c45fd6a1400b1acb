#include "emcs/kernel.hpp"

#include "emcs/errors.hpp"

namespace emcs {

bool operation_is_registered(const std::string& op) { return op == "add"; }

bool operation_is_monotone(const std::string& op) { return op == "add"; }

namespace {

void apply_operation(KnowledgeBase& kb, const OperationalFormula& op) {
  // `add` asserts the formula as a fact.
  kb.insert(op.formula);
}

}  // namespace

KnowledgeBase mng_apply(const EvolvingContext& context, const KnowledgeBase& kb,
                        const std::set<OperationalFormula>& ops) {
  KnowledgeBase out = kb;
  for (const OperationalFormula& op : ops) {
    if (op.next_wrapped)
      throw ValidationError("mng applied to next-wrapped formula " +
                            to_string(op));
    if (!context.op_base.count(op.op))
      throw ValidationError("operation '" + op.op +
                            "' not declared in context " + context.name);
    if (!operation_is_registered(op.op))
      throw ValidationError("operation '" + op.op + "' has no semantics");
    apply_operation(out, op);
  }
  return out;
}

KnowledgeBase mng_apply(const EvolvingContext& context,
                        const std::set<OperationalFormula>& ops) {
  return mng_apply(context, context.kb, ops);
}

EvolvingContext replace_kb(const EvolvingContext& context, KnowledgeBase kb) {
  if (context.logic) {
    for (const Statement& s : kb) {
      if (const auto* fact = std::get_if<GroundAtom>(&s)) {
        if (!context.vocabulary.admits(*fact))
          throw ValidationError("fact " + to_string(*fact) +
                                " outside the vocabulary of context " +
                                context.name);
      }
    }
  }
  EvolvingContext out = context;
  out.kb = std::move(kb);
  return out;
}

std::vector<BeliefSet> out_vocabulary(const Emcs& system) {
  std::vector<BeliefSet> out(system.size());
  for (const EvolvingContext& context : system.contexts) {
    for (const BridgeRule& rule : context.ground_rules) {
      for (const BridgeLiteral& literal : rule.body) {
        if (literal.context_index >= 1 &&
            literal.context_index <= system.size()) {
          out[literal.context_index - 1].insert(literal.formula);
        }
      }
    }
  }
  return out;
}

BeliefState output_projection(const BeliefState& state, const Emcs& system) {
  std::vector<BeliefSet> out = out_vocabulary(system);
  BeliefState projected = BeliefState::empty(state.size());
  for (std::size_t i = 0; i < state.size() && i < out.size(); ++i) {
    for (const GroundAtom& atom : state.components[i]) {
      if (out[i].count(atom)) projected.components[i].insert(atom);
    }
  }
  return projected;
}

}  // namespace emcs
