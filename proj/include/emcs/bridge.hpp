#ifndef EMCS_BRIDGE_HPP
#define EMCS_BRIDGE_HPP

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "emcs/atom.hpp"

namespace emcs {

// op(formula), optionally wrapped in next(...). Elements of the evolving
// operational language; next-wrapped formulas only ever appear in bridge
// rule heads.
struct OperationalFormula {
  std::string op;
  GroundAtom formula;
  bool next_wrapped = false;

  auto operator<=>(const OperationalFormula&) const = default;

  OperationalFormula unwrapped() const {
    return OperationalFormula{op, formula, false};
  }
};

// (r:b) or not (r:b); context_index is 1-based.
struct BridgeLiteral {
  std::size_t context_index = 0;
  GroundAtom formula;
  bool negated = false;

  auto operator<=>(const BridgeLiteral&) const = default;
};

// A ground bridge rule: head <- body.
struct BridgeRule {
  OperationalFormula head;
  std::vector<BridgeLiteral> body;

  auto operator<=>(const BridgeRule&) const = default;
};

// Schematic twins of the above, as authored in system specs. Grounding
// over the constant pool turns them into BridgeRule values.
struct SchematicHead {
  std::string op;
  SchematicAtom formula;
  bool next_wrapped = false;

  auto operator<=>(const SchematicHead&) const = default;

  bool is_ground() const { return formula.is_ground(); }
  OperationalFormula to_ground() const {
    return OperationalFormula{op, formula.to_ground(), next_wrapped};
  }
};

struct SchematicBridgeLiteral {
  std::size_t context_index = 0;
  SchematicAtom formula;
  bool negated = false;

  auto operator<=>(const SchematicBridgeLiteral&) const = default;

  bool is_ground() const { return formula.is_ground(); }
  BridgeLiteral to_ground() const {
    return BridgeLiteral{context_index, formula.to_ground(), negated};
  }
};

struct SchematicBridgeRule {
  SchematicHead head;
  std::vector<SchematicBridgeLiteral> body;

  auto operator<=>(const SchematicBridgeRule&) const = default;

  bool is_ground() const;
  BridgeRule to_ground() const;
  static SchematicBridgeRule lift(const BridgeRule& rule);
};

std::string to_string(const OperationalFormula& head);
std::string to_string(const BridgeLiteral& literal);
std::string to_string(const BridgeRule& rule);
std::string to_string(const SchematicHead& head);
std::string to_string(const SchematicBridgeLiteral& literal);
std::string to_string(const SchematicBridgeRule& rule);

}  // namespace emcs

#endif
