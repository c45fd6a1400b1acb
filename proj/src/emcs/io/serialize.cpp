#include "emcs/io/serialize.hpp"

#include <json.hpp>

namespace emcs::io {

namespace {

void append_vocab(std::string& out, const Vocabulary& vocabulary) {
  if (vocabulary.predicates.empty() && vocabulary.constants.empty()) return;
  out += "  vocab {\n";
  for (const auto& [predicate, arity] : vocabulary.predicates)
    out += "    pred " + predicate + "/" + std::to_string(arity) + ";\n";
  if (!vocabulary.constants.empty()) {
    out += "    const ";
    bool first = true;
    for (const std::string& constant : vocabulary.constants) {
      if (!first) out += ", ";
      first = false;
      if (constant_needs_quoting(constant))
        out += "'" + constant + "'";
      else
        out += constant;
    }
    out += ";\n";
  }
  out += "  }\n";
}

}  // namespace

std::string serialize_system(const Emcs& system) {
  std::string out;
  for (const EvolvingContext& context : system.contexts) {
    out += "context " + context.name + " : " +
           std::string(context.logic ? context.logic->kind() : "observation") +
           " {\n";
    append_vocab(out, context.vocabulary);
    if (!context.kb.empty()) {
      out += "  kb {\n";
      for (const Statement& statement : context.kb)
        out += "    " + to_string(statement) + ";\n";
      out += "  }\n";
    }
    if (!context.bridge_rules.empty()) {
      out += "  bridge {\n";
      for (const SchematicBridgeRule& rule : context.bridge_rules)
        out += "    " + to_string(rule) + ";\n";
      out += "  }\n";
    }
    if (context.op_base != std::set<std::string>{"add"}) {
      out += "  ops { ";
      bool first = true;
      for (const std::string& op : context.op_base) {
        if (!first) out += ", ";
        first = false;
        out += op;
      }
      out += "; }\n";
    }
    out += "}\n";
  }
  return out;
}

namespace {

nlohmann::json state_json(const BeliefState& state, const Emcs& system) {
  nlohmann::json out = nlohmann::json::object();
  for (std::size_t i = 0; i < state.components.size(); ++i) {
    nlohmann::json atoms = nlohmann::json::array();
    for (const GroundAtom& atom : state.components[i])
      atoms.push_back(to_string(atom));
    std::string name = i < system.size() ? system.contexts[i].name
                                         : "C" + std::to_string(i + 1);
    out[name] = std::move(atoms);
  }
  return out;
}

nlohmann::json kbs_json(const std::vector<KnowledgeBase>& kbs,
                        const Emcs& system) {
  nlohmann::json out = nlohmann::json::object();
  for (std::size_t i = 0; i < kbs.size(); ++i) {
    nlohmann::json statements = nlohmann::json::array();
    for (const Statement& statement : kbs[i])
      statements.push_back(to_string(statement));
    std::string name = i < system.size() ? system.contexts[i].name
                                         : "C" + std::to_string(i + 1);
    out[name] = std::move(statements);
  }
  return out;
}

nlohmann::json heads_json(
    const std::vector<std::set<OperationalFormula>>& heads,
    const Emcs& system) {
  nlohmann::json out = nlohmann::json::object();
  for (std::size_t i = 0; i < heads.size(); ++i) {
    nlohmann::json entries = nlohmann::json::array();
    for (const OperationalFormula& head : heads[i])
      entries.push_back(to_string(head));
    std::string name = i < system.size() ? system.contexts[i].name
                                         : "C" + std::to_string(i + 1);
    out[name] = std::move(entries);
  }
  return out;
}

}  // namespace

std::string state_record_line(std::size_t instant, const BeliefState& state,
                              const Emcs& system) {
  nlohmann::json record;
  record["instant"] = instant;
  record["state"] = state_json(state, system);
  return record.dump();
}

std::string trace_record_line(const EvolutionTrace::InstantRecord& record,
                              const Emcs& system) {
  nlohmann::json out;
  out["instant"] = record.instant;
  out["state"] = state_json(record.state, system);
  out["kbs"] = kbs_json(record.kbs, system);
  out["app_now"] = heads_json(record.app_now, system);
  out["app_next"] = heads_json(record.app_next, system);
  return out.dump();
}

std::string fixpoint_trace_json(const FixpointTrace& trace,
                                const Emcs& system) {
  nlohmann::json steps = nlohmann::json::array();
  for (const FixpointTrace::Step& step : trace.steps) {
    nlohmann::json entry;
    entry["index"] = step.index;
    entry["kbs"] = kbs_json(step.kbs, system);
    entry["beliefs"] = state_json(step.beliefs, system);
    steps.push_back(std::move(entry));
  }
  nlohmann::json out;
  out["steps"] = std::move(steps);
  return out.dump();
}

}  // namespace emcs::io
