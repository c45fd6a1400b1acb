#ifndef EMCS_KERNEL_HPP
#define EMCS_KERNEL_HPP

#include <set>
#include <string>
#include <vector>

#include "emcs/belief.hpp"
#include "emcs/bridge.hpp"
#include "emcs/context.hpp"
#include "emcs/statement.hpp"

namespace emcs {

// The operation registry. Only `add` ships; extensions must be monotone
// (kb ⊆ mng(op, kb)) to stay inside the polynomial pipeline, which is why
// registration and the monotonicity answer live side by side.
bool operation_is_registered(const std::string& op);
bool operation_is_monotone(const std::string& op);

// mng(ops, kb): apply a set of non-next operational formulas to the
// context's knowledge base. mng(∅, kb) = kb. Throws ValidationError on an
// undeclared or unregistered operation symbol, and on next-wrapped input.
KnowledgeBase mng_apply(const EvolvingContext& context,
                        const std::set<OperationalFormula>& ops);

// Same, against an explicit knowledge base instead of context.kb.
KnowledgeBase mng_apply(const EvolvingContext& context, const KnowledgeBase& kb,
                        const std::set<OperationalFormula>& ops);

// C[k]: the context with its knowledge base replaced by k. Throws
// ValidationError when k does not fit the context's logic and vocabulary.
EvolvingContext replace_kb(const EvolvingContext& context, KnowledgeBase kb);

// OUT_i: the beliefs of context i mentioned in any bridge-rule body of the
// system. Requires a grounded system.
std::vector<BeliefSet> out_vocabulary(const Emcs& system);

// S restricted componentwise to OUT.
BeliefState output_projection(const BeliefState& state, const Emcs& system);

}  // namespace emcs

#endif
