#ifndef EMCS_VALIDATE_HPP
#define EMCS_VALIDATE_HPP

#include <vector>

#include "emcs/context.hpp"
#include "emcs/diagnostics.hpp"

namespace emcs {

// Whole-system validation. Errors: bridge-literal indices out of range,
// undeclared head operations, head formulas outside the owning
// vocabulary, unsafe bridge rules, malformed knowledge bases, observation
// contexts that do not form a leading prefix. Body formulas whose
// predicate the referenced context never declared are accepted by
// vocabulary inference and reported as warnings.
std::vector<Diagnostic> validate(const Emcs& system);

}  // namespace emcs

#endif
