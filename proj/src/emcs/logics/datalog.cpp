#include "emcs/logics/datalog.hpp"

#include <map>

#include "emcs/context.hpp"
#include "emcs/errors.hpp"
#include "emcs/grounding.hpp"

namespace emcs {

BeliefSet least_model(const std::vector<LpRule>& ground_rules,
                      const BeliefSet& facts) {
  // Counting propagation: every rule keeps the number of body atoms not
  // yet derived; deriving an atom decrements the counters of the rules it
  // occurs in.
  struct RuleState {
    GroundAtom head;
    std::size_t pending = 0;
  };
  std::vector<RuleState> rules;
  rules.reserve(ground_rules.size());
  std::map<GroundAtom, std::vector<std::size_t>> occurrences;

  BeliefSet derived = facts;
  std::vector<GroundAtom> queue(facts.begin(), facts.end());

  for (const LpRule& rule : ground_rules) {
    if (!rule.is_ground())
      throw IntegrityError("least_model on schematic rule " + to_string(rule));
    RuleState state;
    state.head = rule.head.to_ground();
    BeliefSet body;
    for (const LpLiteral& literal : rule.body) {
      if (literal.negated)
        throw IntegrityError("least_model on non-definite rule " +
                             to_string(rule));
      body.insert(literal.atom.to_ground());
    }
    std::size_t index = rules.size();
    for (const GroundAtom& atom : body) {
      if (derived.count(atom)) continue;
      occurrences[atom].push_back(index);
      ++state.pending;
    }
    rules.push_back(std::move(state));
    if (rules.back().pending == 0 && derived.insert(rules.back().head).second)
      queue.push_back(rules.back().head);
  }

  while (!queue.empty()) {
    GroundAtom atom = std::move(queue.back());
    queue.pop_back();
    auto it = occurrences.find(atom);
    if (it == occurrences.end()) continue;
    for (std::size_t index : it->second) {
      if (--rules[index].pending == 0) {
        if (derived.insert(rules[index].head).second)
          queue.push_back(rules[index].head);
      }
    }
    occurrences.erase(it);
  }
  return derived;
}

namespace {

BeliefSet datalog_model(const KnowledgeBase& kb) {
  std::vector<LpRule> rules = kb_lp_rules(kb);
  for (const LpRule& rule : rules) {
    if (!rule.is_ground())
      throw IntegrityError("datalog acc on schematic rule '" + to_string(rule) +
                           "'; ground the system first");
  }
  return least_model(rules, kb_facts(kb));
}

}  // namespace

std::vector<BeliefSet> DatalogLogic::acc(const KnowledgeBase& kb) const {
  return {datalog_model(kb)};
}

std::vector<Diagnostic> DatalogLogic::check_kb(const KnowledgeBase& kb,
                                               const Vocabulary& vocabulary,
                                               std::size_t context_index) const {
  std::vector<Diagnostic> out;
  std::size_t position = 0;
  for (const Statement& s : kb) {
    ++position;
    std::string id = "kb#" + std::to_string(position);
    if (const auto* fact = std::get_if<GroundAtom>(&s)) {
      if (!vocabulary.admits(*fact))
        out.push_back({Severity::error, "kb-vocabulary", context_index, id,
                       "fact " + to_string(*fact) +
                           " not in the declared vocabulary"});
    } else if (const auto* rule = std::get_if<LpRule>(&s)) {
      if (!rule->is_definite())
        out.push_back({Severity::error, "kb-statement-kind", context_index, id,
                       "datalog contexts admit definite rules only: " +
                           to_string(*rule)});
      if (!vocabulary.admits(rule->head))
        out.push_back({Severity::error, "kb-vocabulary", context_index, id,
                       "head of " + to_string(*rule) +
                           " not in the declared vocabulary"});
      for (const LpLiteral& literal : rule->body) {
        if (!vocabulary.admits(literal.atom))
          out.push_back({Severity::error, "kb-vocabulary", context_index, id,
                         "body atom " + to_string(literal.atom) +
                             " not in the declared vocabulary"});
      }
    } else {
      out.push_back({Severity::error, "kb-statement-kind", context_index, id,
                     "ontology axioms are not datalog statements"});
    }
  }
  return out;
}

BeliefSet acc_datalog(const KnowledgeBase& kb) { return datalog_model(kb); }

BeliefSet acc_datalog(const KnowledgeBase& kb, const ConstantPool& pool) {
  return datalog_model(ground_statements(kb, pool));
}

}  // namespace emcs
