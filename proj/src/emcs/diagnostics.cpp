#include "emcs/diagnostics.hpp"

namespace emcs {

std::string Diagnostic::to_string() const {
  std::string out = severity == Severity::error ? "error" : "warning";
  out += " [" + code + "]";
  if (context_index > 0) out += " context " + std::to_string(context_index);
  if (!rule.empty()) out += " " + rule;
  out += ": " + message;
  return out;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  for (const Diagnostic& d : diagnostics) {
    if (d.severity == Severity::error) return true;
  }
  return false;
}

}  // namespace emcs
