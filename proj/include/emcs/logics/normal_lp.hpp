#ifndef EMCS_LOGICS_NORMAL_LP_HPP
#define EMCS_LOGICS_NORMAL_LP_HPP

#include "emcs/atom.hpp"
#include "emcs/logic.hpp"

namespace emcs {

// The Gelfond-Lifschitz reduct: drop rules with ~a in the body for a ∈ s,
// strip the remaining negative literals, keep facts and definite rules
// untouched. Identity on definite knowledge bases (including schematic
// ones); rules that actually carry negation must be ground.
KnowledgeBase gl_reduct(const KnowledgeBase& kb, const BeliefSet& s);

// True atoms of the well-founded model, by the alternating fixpoint of
// S ↦ least_model(gl_reduct(kb, S)). Undefined atoms are reported as not
// true.
BeliefSet well_founded_true_atoms(const KnowledgeBase& kb);

// Normal logic programs whose ACC returns the singleton set of true atoms
// of the well-founded model. Reducible via gl_reduct; KB* is the definite
// programs.
class NormalLpLogic final : public ContextLogic {
public:
  std::string_view kind() const override { return "normal-lp"; }
  bool monotone() const override { return false; }
  bool reducible() const override { return true; }
  bool is_reduced(const KnowledgeBase& kb) const override;
  KnowledgeBase reduce(const KnowledgeBase& kb,
                       const BeliefSet& s) const override {
    return gl_reduct(kb, s);
  }
  std::vector<BeliefSet> acc(const KnowledgeBase& kb) const override;
  std::vector<Diagnostic> check_kb(const KnowledgeBase& kb,
                                   const Vocabulary& vocabulary,
                                   std::size_t context_index) const override;
};

BeliefSet acc_normal_lp(const KnowledgeBase& kb);
BeliefSet acc_normal_lp(const KnowledgeBase& kb, const ConstantPool& pool);

}  // namespace emcs

#endif
