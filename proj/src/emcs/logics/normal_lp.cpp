#include "emcs/logics/normal_lp.hpp"

#include "emcs/context.hpp"
#include "emcs/errors.hpp"
#include "emcs/grounding.hpp"
#include "emcs/logics/datalog.hpp"

namespace emcs {

KnowledgeBase gl_reduct(const KnowledgeBase& kb, const BeliefSet& s) {
  KnowledgeBase out;
  for (const Statement& statement : kb) {
    const auto* rule = std::get_if<LpRule>(&statement);
    if (!rule || rule->is_definite()) {
      out.insert(statement);
      continue;
    }
    if (!rule->is_ground())
      throw IntegrityError("gl_reduct on schematic rule '" + to_string(*rule) +
                           "'; ground the system first");
    bool blocked = false;
    LpRule reduced;
    reduced.head = rule->head;
    for (const LpLiteral& literal : rule->body) {
      if (!literal.negated) {
        reduced.body.push_back(literal);
        continue;
      }
      if (s.count(literal.atom.to_ground())) {
        blocked = true;
        break;
      }
    }
    if (blocked) continue;
    // Stripping can empty the body; the canonical form of a bodiless
    // ground rule is the fact itself.
    if (reduced.body.empty())
      out.insert(reduced.head.to_ground());
    else
      out.insert(std::move(reduced));
  }
  return out;
}

namespace {

BeliefSet gamma_lp(const std::vector<LpRule>& rules, const BeliefSet& facts,
                   const BeliefSet& s) {
  // Reduct and least model fused over the pre-split rule list.
  std::vector<LpRule> reduct;
  reduct.reserve(rules.size());
  for (const LpRule& rule : rules) {
    bool blocked = false;
    LpRule reduced;
    reduced.head = rule.head;
    for (const LpLiteral& literal : rule.body) {
      if (!literal.negated) {
        reduced.body.push_back(literal);
        continue;
      }
      if (s.count(literal.atom.to_ground())) {
        blocked = true;
        break;
      }
    }
    if (!blocked) reduct.push_back(std::move(reduced));
  }
  return least_model(reduct, facts);
}

BeliefSet wfm_true(const KnowledgeBase& kb) {
  std::vector<LpRule> rules = kb_lp_rules(kb);
  for (const LpRule& rule : rules) {
    if (!rule.is_ground())
      throw IntegrityError("well-founded model on schematic rule '" +
                           to_string(rule) + "'; ground the system first");
  }
  BeliefSet facts = kb_facts(kb);

  // Alternating fixpoint: lower iterates increase, upper iterates
  // decrease, the true atoms are the limit of the lower sequence.
  BeliefSet lower;
  BeliefSet upper = gamma_lp(rules, facts, lower);
  while (true) {
    BeliefSet next_lower = gamma_lp(rules, facts, upper);
    BeliefSet next_upper = gamma_lp(rules, facts, next_lower);
    if (next_lower == lower && next_upper == upper) break;
    lower = std::move(next_lower);
    upper = std::move(next_upper);
  }
  return lower;
}

}  // namespace

BeliefSet well_founded_true_atoms(const KnowledgeBase& kb) {
  return wfm_true(kb);
}

bool NormalLpLogic::is_reduced(const KnowledgeBase& kb) const {
  for (const Statement& statement : kb) {
    if (const auto* rule = std::get_if<LpRule>(&statement)) {
      if (!rule->is_definite()) return false;
    }
  }
  return true;
}

std::vector<BeliefSet> NormalLpLogic::acc(const KnowledgeBase& kb) const {
  return {wfm_true(kb)};
}

std::vector<Diagnostic> NormalLpLogic::check_kb(
    const KnowledgeBase& kb, const Vocabulary& vocabulary,
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
                     "ontology axioms are not logic-program statements"});
    }
  }
  return out;
}

BeliefSet acc_normal_lp(const KnowledgeBase& kb) { return wfm_true(kb); }

BeliefSet acc_normal_lp(const KnowledgeBase& kb, const ConstantPool& pool) {
  return wfm_true(ground_statements(kb, pool));
}

}  // namespace emcs
