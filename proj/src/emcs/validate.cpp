#include "emcs/validate.hpp"

#include <set>

#include "emcs/grounding.hpp"
#include "emcs/kernel.hpp"

namespace emcs {

std::vector<Diagnostic> validate(const Emcs& system) {
  std::vector<Diagnostic> out;
  const std::size_t n = system.size();

  std::set<std::string> names;
  bool reasoning_seen = false;
  for (std::size_t i = 0; i < n; ++i) {
    const EvolvingContext& context = system.contexts[i];
    const std::size_t index = i + 1;

    if (!names.insert(context.name).second)
      out.push_back({Severity::error, "duplicate-name", index, "",
                     "context name '" + context.name + "' already used"});
    if (!context.logic) {
      out.push_back({Severity::error, "missing-logic", index, "",
                     "context has no logic"});
      continue;
    }
    if (context.is_observation && reasoning_seen)
      out.push_back({Severity::error, "observation-ordering", index, "",
                     "observation context '" + context.name +
                         "' placed after a reasoning context"});
    if (!context.is_observation) reasoning_seen = true;

    for (Diagnostic& d :
         context.logic->check_kb(context.kb, context.vocabulary, index))
      out.push_back(std::move(d));

    std::size_t rule_position = 0;
    for (const SchematicBridgeRule& rule : context.bridge_rules) {
      ++rule_position;
      std::string id = "bridge#" + std::to_string(rule_position);

      if (!context.op_base.count(rule.head.op))
        out.push_back({Severity::error, "undeclared-operation", index, id,
                       "operation '" + rule.head.op +
                           "' not in the context's management base"});
      else if (!operation_is_registered(rule.head.op))
        out.push_back({Severity::error, "unknown-operation", index, id,
                       "operation '" + rule.head.op + "' has no semantics"});

      if (!context.vocabulary.admits(rule.head.formula))
        out.push_back({Severity::error, "head-vocabulary", index, id,
                       "head formula " + to_string(rule.head.formula) +
                           " not in the declared vocabulary of context " +
                           context.name});

      if (!is_safe(rule))
        out.push_back({Severity::error, "unsafe-rule", index, id,
                       "head variables of '" + to_string(rule) +
                           "' must occur in a positive body literal"});

      for (const SchematicBridgeLiteral& literal : rule.body) {
        if (literal.context_index < 1 || literal.context_index > n) {
          out.push_back({Severity::error, "index-out-of-range", index, id,
                         "bridge literal references context " +
                             std::to_string(literal.context_index) +
                             " in a " + std::to_string(n) + "-context system"});
          continue;
        }
        const EvolvingContext& referenced =
            system.contexts[literal.context_index - 1];
        auto it = referenced.vocabulary.predicates.find(
            literal.formula.predicate);
        if (it == referenced.vocabulary.predicates.end()) {
          out.push_back({Severity::warning, "vocabulary-inference", index, id,
                         "predicate " + literal.formula.predicate +
                             "/" + std::to_string(literal.formula.args.size()) +
                             " not declared by context " + referenced.name +
                             "; accepting it by inference"});
        } else if (it->second != literal.formula.args.size()) {
          out.push_back({Severity::error, "arity-mismatch", index, id,
                         "predicate " + literal.formula.predicate +
                             " used with arity " +
                             std::to_string(literal.formula.args.size()) +
                             " but declared /" + std::to_string(it->second) +
                             " by context " + referenced.name});
        }
      }
    }
  }
  return out;
}

}  // namespace emcs
