#ifndef EMCS_IO_PARSE_HPP
#define EMCS_IO_PARSE_HPP

#include <string_view>
#include <vector>

#include "emcs/context.hpp"
#include "emcs/evolution.hpp"

namespace emcs::io {

// Parse a system spec:
//   context <name> : <kind> { vocab { … } kb { … } bridge { … } ops { … } }
// with kinds observation | datalog | normal-lp | el, atoms Pred(c1,c2),
// heads add(Atom) or next(add(Atom)), bridge literals (<context>:Atom)
// optionally under not, schematic variables as single lowercase letters,
// quoted constants 'like this', and # comments. Semantic checks beyond
// name resolution are deferred to validate().
Emcs parse_system(std::string_view text);

// Newline-delimited instants, each a JSON object mapping observation
// context names to arrays of atom strings; a missing name means an empty
// knowledge base. Atoms must fit the declared vocabularies. Errors carry
// the line number.
ObservationSequence parse_observations(std::string_view text,
                                       const Emcs& system);

// "Pred(a,'b')"; bare identifier arguments are constants here.
GroundAtom parse_ground_atom(std::string_view text);

struct StateRecord {
  std::size_t instant = 0;
  BeliefState state;
};

// Newline-delimited belief states: either run output records
// {"instant": j, "state": {...}} or bare {"C1": [...], ...} objects.
std::vector<StateRecord> parse_state_file(std::string_view text,
                                          const Emcs& system);

}  // namespace emcs::io

#endif
