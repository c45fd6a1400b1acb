#ifndef EMCS_DIAGNOSTICS_HPP
#define EMCS_DIAGNOSTICS_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace emcs {

enum class Severity { warning, error };

// One validation finding. context_index is 1-based; 0 means system level.
// rule identifies the offending item within the context, e.g. "bridge#2"
// or "kb#5"; empty when not rule-specific.
struct Diagnostic {
  Severity severity = Severity::error;
  std::string code;
  std::size_t context_index = 0;
  std::string rule;
  std::string message;

  std::string to_string() const;
};

bool has_errors(const std::vector<Diagnostic>& diagnostics);

}  // namespace emcs

#endif
