#ifndef EMCS_GROUNDING_HPP
#define EMCS_GROUNDING_HPP

#include <vector>

#include "emcs/atom.hpp"
#include "emcs/bridge.hpp"
#include "emcs/context.hpp"
#include "emcs/statement.hpp"

namespace emcs {

// Head variables must occur in some positive body literal.
bool is_safe(const SchematicBridgeRule& rule);

// All substitutions of the rule's variables by pool constants. Grounding
// is unsorted: every constant is tried in every position. Throws
// ValidationError on unsafe rules.
std::vector<BridgeRule> ground(const SchematicBridgeRule& rule,
                               const ConstantPool& pool);
std::vector<BridgeRule> ground(const std::vector<SchematicBridgeRule>& rules,
                               const ConstantPool& pool);

// Logic-program rules ground the same way; kb rules have no safety
// requirement since the pool is finite.
std::vector<LpRule> ground(const LpRule& rule, const ConstantPool& pool);

// Replace every schematic rule statement by its ground instances.
KnowledgeBase ground_statements(const KnowledgeBase& kb,
                                const ConstantPool& pool);

// Every constant occurring in kbs, bridge rules and declared vocabularies.
ConstantPool collect_constants(const Emcs& system);

// Put the whole system into ground form: pool = declared ∪ occurring ∪
// extra, kb rules grounded in place, bridge rules grounded into the
// ground_rules cache (and mirrored schematically so serialization shows
// what the engine runs).
Emcs ground_system(const Emcs& system, const ConstantPool& extra = {});

}  // namespace emcs

#endif
