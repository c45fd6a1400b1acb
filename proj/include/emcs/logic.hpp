#ifndef EMCS_LOGIC_HPP
#define EMCS_LOGIC_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "emcs/belief.hpp"
#include "emcs/diagnostics.hpp"
#include "emcs/statement.hpp"

namespace emcs {

struct Vocabulary;

// A pluggable logic (KB, BS, ACC) with the extra structure the solvers
// need: monotonicity, a least belief set for normal logics, and an
// optional reduction function.
//
// acc() expects ground knowledge bases on engine paths; the logics that
// evaluate rules reject schematic input. It throws InconsistencyError
// when no belief set is acceptable (the EL logic on derived bottom).
class ContextLogic {
public:
  virtual ~ContextLogic() = default;

  virtual std::string_view kind() const = 0;

  // ACC(kb) is a singleton and ⊆-monotone in kb.
  virtual bool monotone() const = 0;

  // ACC(kb) always returns exactly one belief set.
  virtual bool deterministic() const { return true; }

  // Least element of BS; present iff the logic is normal.
  virtual std::optional<BeliefSet> least_element() const {
    return BeliefSet{};
  }

  virtual bool reducible() const = 0;

  // kb already lies in the monotone fragment KB*.
  virtual bool is_reduced(const KnowledgeBase& kb) const = 0;

  // The reduction function red(kb, s). Identity on reduced kbs.
  virtual KnowledgeBase reduce(const KnowledgeBase& kb,
                               const BeliefSet& s) const = 0;

  virtual std::vector<BeliefSet> acc(const KnowledgeBase& kb) const = 0;

  // Statement-kind and vocabulary admissibility diagnostics for validate.
  virtual std::vector<Diagnostic> check_kb(const KnowledgeBase& kb,
                                           const Vocabulary& vocabulary,
                                           std::size_t context_index) const = 0;
};

// Shared instances of the built-in logics:
// "observation", "datalog", "normal-lp", "el".
std::shared_ptr<const ContextLogic> make_logic(std::string_view kind);

}  // namespace emcs

#endif
