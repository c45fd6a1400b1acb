#include "emcs/belief.hpp"

#include <algorithm>

namespace emcs {

bool is_subset(const BeliefSet& a, const BeliefSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool componentwise_subset(const BeliefState& a, const BeliefState& b) {
  if (a.components.size() != b.components.size()) return false;
  for (std::size_t i = 0; i < a.components.size(); ++i) {
    if (!is_subset(a.components[i], b.components[i])) return false;
  }
  return true;
}

std::size_t total_atom_count(const BeliefState& s) {
  std::size_t n = 0;
  for (const BeliefSet& c : s.components) n += c.size();
  return n;
}

}  // namespace emcs
