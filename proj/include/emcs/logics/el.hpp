#ifndef EMCS_LOGICS_EL_HPP
#define EMCS_LOGICS_EL_HPP

#include <optional>

#include "emcs/logic.hpp"

namespace emcs {

struct ElSaturation {
  BeliefSet beliefs;  // derived concept and role assertions over individuals
  std::optional<std::string> bottom_individual;
  std::size_t steps = 0;  // completion-rule applications
};

// Saturate the kb under the completion rules of the supported fragment:
//   A sub B              A(a)            ⇒ B(a)
//   A1 and A2 sub B      A1(a), A2(a)    ⇒ B(a)
//   some r A sub B       r(a,b), A(b)    ⇒ B(a)       (A = top: r(a,b) alone)
//   A sub some r {o}     A(a)            ⇒ r(a,o)
//   some r {o} sub B     r(a,o)          ⇒ B(a)
//   A1 and A2 sub bot    A1(a), A2(a)    ⇒ inconsistent, witness a
// Unary facts are concept assertions, binary facts role assertions.
ElSaturation saturate_el(const KnowledgeBase& kb);

// The ontology logic. Monotone on consistent kbs; ACC throws
// InconsistencyError naming the individual when bottom is derived.
class ElLogic final : public ContextLogic {
public:
  std::string_view kind() const override { return "el"; }
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

// Throws InconsistencyError when the kb derives bottom.
BeliefSet acc_el(const KnowledgeBase& kb);

}  // namespace emcs

#endif
