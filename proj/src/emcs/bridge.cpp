#include "emcs/bridge.hpp"

#include <algorithm>

namespace emcs {

bool SchematicBridgeRule::is_ground() const {
  if (!head.is_ground()) return false;
  return std::all_of(body.begin(), body.end(),
                     [](const SchematicBridgeLiteral& l) { return l.is_ground(); });
}

BridgeRule SchematicBridgeRule::to_ground() const {
  BridgeRule out;
  out.head = head.to_ground();
  out.body.reserve(body.size());
  for (const SchematicBridgeLiteral& l : body) out.body.push_back(l.to_ground());
  return out;
}

SchematicBridgeRule SchematicBridgeRule::lift(const BridgeRule& rule) {
  SchematicBridgeRule out;
  out.head = SchematicHead{rule.head.op, SchematicAtom::lift(rule.head.formula),
                           rule.head.next_wrapped};
  out.body.reserve(rule.body.size());
  for (const BridgeLiteral& l : rule.body) {
    out.body.push_back(SchematicBridgeLiteral{l.context_index,
                                              SchematicAtom::lift(l.formula),
                                              l.negated});
  }
  return out;
}

std::string to_string(const OperationalFormula& head) {
  std::string inner = head.op + "(" + to_string(head.formula) + ")";
  if (head.next_wrapped) return "next(" + inner + ")";
  return inner;
}

std::string to_string(const BridgeLiteral& literal) {
  std::string out;
  if (literal.negated) out += "not ";
  out += "(" + std::to_string(literal.context_index) + ":" +
         to_string(literal.formula) + ")";
  return out;
}

std::string to_string(const BridgeRule& rule) {
  std::string out = to_string(rule.head);
  if (!rule.body.empty()) {
    out += " <- ";
    for (std::size_t i = 0; i < rule.body.size(); ++i) {
      if (i > 0) out += ", ";
      out += to_string(rule.body[i]);
    }
  }
  return out;
}

std::string to_string(const SchematicHead& head) {
  std::string inner = head.op + "(" + to_string(head.formula) + ")";
  if (head.next_wrapped) return "next(" + inner + ")";
  return inner;
}

std::string to_string(const SchematicBridgeLiteral& literal) {
  std::string out;
  if (literal.negated) out += "not ";
  out += "(" + std::to_string(literal.context_index) + ":" +
         to_string(literal.formula) + ")";
  return out;
}

std::string to_string(const SchematicBridgeRule& rule) {
  std::string out = to_string(rule.head);
  if (!rule.body.empty()) {
    out += " <- ";
    for (std::size_t i = 0; i < rule.body.size(); ++i) {
      if (i > 0) out += ", ";
      out += to_string(rule.body[i]);
    }
  }
  return out;
}

}  // namespace emcs
