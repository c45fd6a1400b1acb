#ifndef EMCS_LOGICS_DATALOG_HPP
#define EMCS_LOGICS_DATALOG_HPP

#include "emcs/atom.hpp"
#include "emcs/logic.hpp"

namespace emcs {

// Least Herbrand model of ground definite rules plus facts, computed by
// counting propagation (linear in the total body size).
BeliefSet least_model(const std::vector<LpRule>& ground_rules,
                      const BeliefSet& facts);

// Definite logic programs under least-model semantics. Monotone, so
// reducible with red = identity.
class DatalogLogic final : public ContextLogic {
public:
  std::string_view kind() const override { return "datalog"; }
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

// Least model of the kb. The overload with a pool grounds schematic rules
// first; the plain one requires ground rules.
BeliefSet acc_datalog(const KnowledgeBase& kb);
BeliefSet acc_datalog(const KnowledgeBase& kb, const ConstantPool& pool);

}  // namespace emcs

#endif
