#ifndef EMCS_BELIEF_HPP
#define EMCS_BELIEF_HPP

#include <cstddef>
#include <set>
#include <vector>

#include "emcs/atom.hpp"

namespace emcs {

using BeliefSet = std::set<GroundAtom>;

// One belief set per context, in context order.
struct BeliefState {
  std::vector<BeliefSet> components;

  auto operator<=>(const BeliefState&) const = default;

  std::size_t size() const { return components.size(); }

  static BeliefState empty(std::size_t n) {
    BeliefState s;
    s.components.resize(n);
    return s;
  }
};

bool is_subset(const BeliefSet& a, const BeliefSet& b);

// a_i ⊆ b_i for every component.
bool componentwise_subset(const BeliefState& a, const BeliefState& b);

std::size_t total_atom_count(const BeliefState& s);

}  // namespace emcs

#endif
