#include "emcs/logics/observation.hpp"

#include "emcs/context.hpp"

namespace emcs {

std::vector<BeliefSet> ObservationLogic::acc(const KnowledgeBase& kb) const {
  return {kb_facts(kb)};
}

std::vector<Diagnostic> ObservationLogic::check_kb(
    const KnowledgeBase& kb, const Vocabulary& vocabulary,
    std::size_t context_index) const {
  std::vector<Diagnostic> out;
  std::size_t position = 0;
  for (const Statement& s : kb) {
    ++position;
    std::string id = "kb#" + std::to_string(position);
    if (const auto* fact = std::get_if<GroundAtom>(&s)) {
      if (!vocabulary.admits(*fact)) {
        out.push_back({Severity::error, "kb-vocabulary", context_index, id,
                       "fact " + to_string(*fact) +
                           " not in the declared vocabulary"});
      }
    } else {
      out.push_back({Severity::error, "kb-statement-kind", context_index, id,
                     "observation contexts hold facts only"});
    }
  }
  return out;
}

BeliefSet acc_observation(const KnowledgeBase& kb) { return kb_facts(kb); }

}  // namespace emcs
