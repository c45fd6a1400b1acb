#ifndef EMCS_IO_SERIALIZE_HPP
#define EMCS_IO_SERIALIZE_HPP

#include <string>

#include "emcs/context.hpp"
#include "emcs/equilibria.hpp"
#include "emcs/evolution.hpp"

namespace emcs::io {

// Concrete spec-file text; parse_system(serialize_system(m)) == m.
std::string serialize_system(const Emcs& system);

// One run-output line: {"instant": j, "state": {"C1": [...], ...}}.
std::string state_record_line(std::size_t instant, const BeliefState& state,
                              const Emcs& system);

// One trace line: the state record plus knowledge bases and applicable
// now/next head sets.
std::string trace_record_line(const EvolutionTrace::InstantRecord& record,
                              const Emcs& system);

// The kb^α / E^α iteration as a JSON document.
std::string fixpoint_trace_json(const FixpointTrace& trace,
                                const Emcs& system);

}  // namespace emcs::io

#endif
