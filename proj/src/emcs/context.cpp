#include "emcs/context.hpp"

#include "emcs/kernel.hpp"

namespace emcs {

bool Vocabulary::admits(const GroundAtom& atom) const {
  auto it = predicates.find(atom.predicate);
  return it != predicates.end() && it->second == atom.args.size();
}

bool Vocabulary::admits(const SchematicAtom& atom) const {
  auto it = predicates.find(atom.predicate);
  return it != predicates.end() && it->second == atom.args.size();
}

bool EvolvingContext::operator==(const EvolvingContext& other) const {
  return name == other.name &&
         ((logic == nullptr) == (other.logic == nullptr)) &&
         (logic == nullptr || logic->kind() == other.logic->kind()) &&
         vocabulary == other.vocabulary && kb == other.kb &&
         bridge_rules == other.bridge_rules && op_base == other.op_base &&
         is_observation == other.is_observation;
}

bool Emcs::operator==(const Emcs& other) const {
  // The pool and the grounded flag are derived; authored content decides.
  return contexts == other.contexts;
}

std::size_t Emcs::observation_count() const {
  std::size_t n = 0;
  while (n < contexts.size() && contexts[n].is_observation) ++n;
  return n;
}

std::optional<std::size_t> Emcs::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < contexts.size(); ++i) {
    if (contexts[i].name == name) return i + 1;
  }
  return std::nullopt;
}

bool Emcs::all_monotone_ops() const {
  for (const EvolvingContext& c : contexts) {
    for (const std::string& op : c.op_base) {
      if (!operation_is_monotone(op)) return false;
    }
  }
  return true;
}

bool Emcs::all_reducible() const {
  for (const EvolvingContext& c : contexts) {
    if (!c.logic || !c.logic->reducible()) return false;
  }
  return true;
}

bool Emcs::all_normal() const {
  for (const EvolvingContext& c : contexts) {
    if (!c.logic || !c.logic->least_element().has_value()) return false;
  }
  return true;
}

bool Emcs::all_deterministic() const {
  for (const EvolvingContext& c : contexts) {
    if (!c.logic || !c.logic->deterministic()) return false;
  }
  return true;
}

}  // namespace emcs
