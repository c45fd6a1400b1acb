#ifndef EMCS_CONTEXT_HPP
#define EMCS_CONTEXT_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "emcs/atom.hpp"
#include "emcs/bridge.hpp"
#include "emcs/logic.hpp"
#include "emcs/statement.hpp"

namespace emcs {

// The declared finite signature of one context: predicate arities plus
// any constants that appear nowhere in the initial knowledge.
struct Vocabulary {
  std::map<std::string, std::size_t> predicates;
  std::set<std::string> constants;

  auto operator<=>(const Vocabulary&) const = default;

  bool declares(const std::string& predicate) const {
    return predicates.count(predicate) > 0;
  }
  bool admits(const GroundAtom& atom) const;
  bool admits(const SchematicAtom& atom) const;
  void declare(std::string predicate, std::size_t arity) {
    predicates.emplace(std::move(predicate), arity);
  }
};

// One evolving context: a logic, a knowledge base, bridge rules, the
// operations its management function understands, and its role in the
// observation prefix. ground_rules is a derived cache filled by
// ground_system and excluded from equality.
struct EvolvingContext {
  std::string name;
  std::shared_ptr<const ContextLogic> logic;
  Vocabulary vocabulary;
  KnowledgeBase kb;
  std::vector<SchematicBridgeRule> bridge_rules;
  std::set<std::string> op_base{"add"};
  bool is_observation = false;

  std::vector<BridgeRule> ground_rules;

  bool operator==(const EvolvingContext& other) const;
};

// An evolving multi-context system. Contexts are stored in declaration
// order; observation contexts must form a leading prefix (validate flags
// violations). grounded marks that ground_system has put the knowledge
// bases and bridge rules into variable-free form.
struct Emcs {
  std::vector<EvolvingContext> contexts;
  ConstantPool pool;
  bool grounded = false;

  bool operator==(const Emcs& other) const;

  std::size_t size() const { return contexts.size(); }

  // Number of leading observation contexts.
  std::size_t observation_count() const;

  std::optional<std::size_t> index_of(const std::string& name) const;  // 1-based

  bool all_monotone_ops() const;
  bool all_reducible() const;
  bool all_normal() const;
  bool all_deterministic() const;
};

}  // namespace emcs

#endif
