#ifndef EMCS_LOGICS_OBSERVATION_HPP
#define EMCS_LOGICS_OBSERVATION_HPP

#include "emcs/logic.hpp"

namespace emcs {

// The identity logic: a knowledge base is a set of ground atoms and its
// single acceptable belief set is that very set. Monotone, normal,
// trivially reducible. Observation contexts use it, and it doubles as a
// plain fact store for reasoning contexts in tests.
class ObservationLogic final : public ContextLogic {
public:
  std::string_view kind() const override { return "observation"; }
  bool monotone() const override { return true; }
  bool reducible() const override { return true; }
  bool is_reduced(const KnowledgeBase&) const override { return true; }
  KnowledgeBase reduce(const KnowledgeBase& kb,
                       const BeliefSet&) const override {
    return kb;
  }
  std::vector<BeliefSet> acc(const KnowledgeBase& kb) const override;
  std::vector<Diagnostic> check_kb(const KnowledgeBase& kb,
                                   const Vocabulary& vocabulary,
                                   std::size_t context_index) const override;
};

BeliefSet acc_observation(const KnowledgeBase& kb);

}  // namespace emcs

#endif
