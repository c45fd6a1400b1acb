#include "emcs/grounding.hpp"

#include <map>
#include <set>

#include "emcs/errors.hpp"

namespace emcs {

namespace {

using VarSlots = std::map<std::string, std::size_t>;

void collect_variables(const SchematicAtom& atom, std::vector<std::string>& order,
                       VarSlots& slots) {
  for (const Term& t : atom.args) {
    if (t.is_variable() && !slots.count(t.text)) {
      slots.emplace(t.text, order.size());
      order.push_back(t.text);
    }
  }
}

GroundAtom substitute(const SchematicAtom& atom, const VarSlots& slots,
                      const std::vector<const std::string*>& values) {
  GroundAtom out;
  out.predicate = atom.predicate;
  out.args.reserve(atom.args.size());
  for (const Term& t : atom.args) {
    if (t.is_variable())
      out.args.push_back(*values[slots.at(t.text)]);
    else
      out.args.push_back(t.text);
  }
  return out;
}

constexpr double kMaxInstances = 5e7;

void check_instance_count(std::size_t variables, std::size_t pool_size,
                          const std::string& rule) {
  double count = 1.0;
  for (std::size_t i = 0; i < variables; ++i) {
    count *= static_cast<double>(pool_size);
    if (count > kMaxInstances)
      throw IntegrityError("grounding of rule '" + rule +
                           "' exceeds the instance limit");
  }
}

// Enumerate all assignments of `order` over the pool, invoking emit once
// per assignment with the values vector filled in.
template <typename Emit>
void for_each_assignment(const std::vector<std::string>& order,
                         const ConstantPool& pool, Emit&& emit) {
  std::vector<const std::string*> universe;
  universe.reserve(pool.constants.size());
  for (const std::string& c : pool.constants) universe.push_back(&c);

  if (order.empty()) {
    std::vector<const std::string*> none;
    emit(none);
    return;
  }
  if (universe.empty()) return;

  std::vector<std::size_t> odometer(order.size(), 0);
  std::vector<const std::string*> values(order.size(), universe[0]);
  while (true) {
    for (std::size_t i = 0; i < order.size(); ++i)
      values[i] = universe[odometer[i]];
    emit(values);
    std::size_t pos = 0;
    while (pos < odometer.size()) {
      if (++odometer[pos] < universe.size()) break;
      odometer[pos] = 0;
      ++pos;
    }
    if (pos == odometer.size()) break;
  }
}

}  // namespace

bool is_safe(const SchematicBridgeRule& rule) {
  std::set<std::string> positive;
  for (const SchematicBridgeLiteral& literal : rule.body) {
    if (literal.negated) continue;
    for (const Term& t : literal.formula.args) {
      if (t.is_variable()) positive.insert(t.text);
    }
  }
  for (const Term& t : rule.head.formula.args) {
    if (t.is_variable() && !positive.count(t.text)) return false;
  }
  return true;
}

std::vector<BridgeRule> ground(const SchematicBridgeRule& rule,
                               const ConstantPool& pool) {
  if (!is_safe(rule))
    throw ValidationError("unsafe bridge rule: " + to_string(rule));
  if (rule.is_ground()) return {rule.to_ground()};

  std::vector<std::string> order;
  VarSlots slots;
  collect_variables(rule.head.formula, order, slots);
  for (const SchematicBridgeLiteral& literal : rule.body)
    collect_variables(literal.formula, order, slots);
  check_instance_count(order.size(), pool.size(), to_string(rule));

  std::set<BridgeRule> instances;
  for_each_assignment(order, pool, [&](const auto& values) {
    BridgeRule ground_rule;
    ground_rule.head = OperationalFormula{
        rule.head.op, substitute(rule.head.formula, slots, values),
        rule.head.next_wrapped};
    ground_rule.body.reserve(rule.body.size());
    for (const SchematicBridgeLiteral& literal : rule.body) {
      ground_rule.body.push_back(
          BridgeLiteral{literal.context_index,
                        substitute(literal.formula, slots, values),
                        literal.negated});
    }
    instances.insert(std::move(ground_rule));
  });
  return {instances.begin(), instances.end()};
}

std::vector<BridgeRule> ground(const std::vector<SchematicBridgeRule>& rules,
                               const ConstantPool& pool) {
  std::set<BridgeRule> instances;
  for (const SchematicBridgeRule& rule : rules) {
    for (BridgeRule& g : ground(rule, pool)) instances.insert(std::move(g));
  }
  return {instances.begin(), instances.end()};
}

std::vector<LpRule> ground(const LpRule& rule, const ConstantPool& pool) {
  if (rule.is_ground()) return {rule};

  std::vector<std::string> order;
  VarSlots slots;
  collect_variables(rule.head, order, slots);
  for (const LpLiteral& literal : rule.body)
    collect_variables(literal.atom, order, slots);
  check_instance_count(order.size(), pool.size(), to_string(rule));

  std::set<LpRule> instances;
  for_each_assignment(order, pool, [&](const auto& values) {
    LpRule ground_rule;
    ground_rule.head = SchematicAtom::lift(substitute(rule.head, slots, values));
    ground_rule.body.reserve(rule.body.size());
    for (const LpLiteral& literal : rule.body) {
      ground_rule.body.push_back(LpLiteral{
          SchematicAtom::lift(substitute(literal.atom, slots, values)),
          literal.negated});
    }
    instances.insert(std::move(ground_rule));
  });
  return {instances.begin(), instances.end()};
}

KnowledgeBase ground_statements(const KnowledgeBase& kb,
                                const ConstantPool& pool) {
  // Bodiless ground rules are facts; keep the canonical form.
  auto insert_rule = [](KnowledgeBase& into, LpRule rule) {
    if (rule.body.empty() && rule.head.is_ground())
      into.insert(rule.head.to_ground());
    else
      into.insert(std::move(rule));
  };
  KnowledgeBase out;
  for (const Statement& s : kb) {
    if (const auto* rule = std::get_if<LpRule>(&s)) {
      if (!rule->is_ground()) {
        for (LpRule& g : ground(*rule, pool)) insert_rule(out, std::move(g));
      } else {
        insert_rule(out, *rule);
      }
      continue;
    }
    out.insert(s);
  }
  return out;
}

ConstantPool collect_constants(const Emcs& system) {
  ConstantPool pool = system.pool;
  for (const EvolvingContext& context : system.contexts) {
    pool.constants.insert(context.vocabulary.constants.begin(),
                          context.vocabulary.constants.end());
    for (const Statement& s : context.kb) {
      if (const auto* fact = std::get_if<GroundAtom>(&s)) {
        pool.absorb(*fact);
      } else if (const auto* rule = std::get_if<LpRule>(&s)) {
        pool.absorb(rule->head);
        for (const LpLiteral& literal : rule->body) pool.absorb(literal.atom);
      } else if (const auto* axiom = std::get_if<ElAxiom>(&s)) {
        if (axiom->kind == ElAxiom::Kind::nominal_rhs ||
            axiom->kind == ElAxiom::Kind::nominal_lhs)
          pool.add(axiom->filler);
      }
    }
    for (const SchematicBridgeRule& rule : context.bridge_rules) {
      pool.absorb(rule.head.formula);
      for (const SchematicBridgeLiteral& literal : rule.body)
        pool.absorb(literal.formula);
    }
  }
  return pool;
}

Emcs ground_system(const Emcs& system, const ConstantPool& extra) {
  Emcs out = system;
  out.pool = collect_constants(system);
  out.pool.merge(extra);
  for (EvolvingContext& context : out.contexts) {
    context.kb = ground_statements(context.kb, out.pool);
    context.ground_rules = ground(context.bridge_rules, out.pool);
    context.bridge_rules.clear();
    context.bridge_rules.reserve(context.ground_rules.size());
    for (const BridgeRule& rule : context.ground_rules)
      context.bridge_rules.push_back(SchematicBridgeRule::lift(rule));
  }
  out.grounded = true;
  return out;
}

}  // namespace emcs
