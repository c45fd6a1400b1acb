#include "emcs/statement.hpp"

#include <algorithm>

namespace emcs {

namespace {

std::string quoted_symbol(const std::string& s) {
  if (constant_needs_quoting(s)) return "'" + s + "'";
  return s;
}

}  // namespace

bool LpRule::is_definite() const {
  return std::none_of(body.begin(), body.end(),
                      [](const LpLiteral& l) { return l.negated; });
}

bool LpRule::is_ground() const {
  if (!head.is_ground()) return false;
  return std::all_of(body.begin(), body.end(),
                     [](const LpLiteral& l) { return l.atom.is_ground(); });
}

ElAxiom ElAxiom::subsumption(std::string a, std::string b) {
  ElAxiom ax;
  ax.kind = Kind::concept_subsumption;
  ax.lhs_a = std::move(a);
  ax.rhs = std::move(b);
  return ax;
}

ElAxiom ElAxiom::conjunction(std::string a, std::string b, std::string c) {
  ElAxiom ax;
  ax.kind = Kind::conjunction_subsumption;
  ax.lhs_a = std::move(a);
  ax.lhs_b = std::move(b);
  ax.rhs = std::move(c);
  return ax;
}

ElAxiom ElAxiom::existential(std::string role, std::string filler_concept,
                             std::string b) {
  ElAxiom ax;
  ax.kind = Kind::existential_subsumption;
  ax.role = std::move(role);
  ax.filler = std::move(filler_concept);
  ax.rhs = std::move(b);
  return ax;
}

ElAxiom ElAxiom::nominal_right(std::string a, std::string role, std::string o) {
  ElAxiom ax;
  ax.kind = Kind::nominal_rhs;
  ax.lhs_a = std::move(a);
  ax.role = std::move(role);
  ax.filler = std::move(o);
  return ax;
}

ElAxiom ElAxiom::nominal_left(std::string role, std::string o, std::string b) {
  ElAxiom ax;
  ax.kind = Kind::nominal_lhs;
  ax.role = std::move(role);
  ax.filler = std::move(o);
  ax.rhs = std::move(b);
  return ax;
}

ElAxiom ElAxiom::disjoint(std::string a, std::string b) {
  ElAxiom ax;
  ax.kind = Kind::disjointness;
  ax.lhs_a = std::move(a);
  ax.lhs_b = std::move(b);
  return ax;
}

bool is_fact(const Statement& s) {
  return std::holds_alternative<GroundAtom>(s);
}

bool is_lp_rule(const Statement& s) { return std::holds_alternative<LpRule>(s); }

bool is_el_axiom(const Statement& s) {
  return std::holds_alternative<ElAxiom>(s);
}

BeliefSet kb_facts(const KnowledgeBase& kb) {
  BeliefSet out;
  for (const Statement& s : kb) {
    if (const auto* atom = std::get_if<GroundAtom>(&s)) out.insert(*atom);
  }
  return out;
}

std::vector<LpRule> kb_lp_rules(const KnowledgeBase& kb) {
  std::vector<LpRule> out;
  for (const Statement& s : kb) {
    if (const auto* rule = std::get_if<LpRule>(&s)) out.push_back(*rule);
  }
  return out;
}

std::vector<ElAxiom> kb_el_axioms(const KnowledgeBase& kb) {
  std::vector<ElAxiom> out;
  for (const Statement& s : kb) {
    if (const auto* axiom = std::get_if<ElAxiom>(&s)) out.push_back(*axiom);
  }
  return out;
}

KnowledgeBase kb_of_facts(const BeliefSet& atoms) {
  KnowledgeBase kb;
  for (const GroundAtom& a : atoms) kb.insert(a);
  return kb;
}

void kb_insert_facts(KnowledgeBase& kb, const BeliefSet& atoms) {
  for (const GroundAtom& a : atoms) kb.insert(a);
}

bool kb_is_ground(const KnowledgeBase& kb) {
  for (const Statement& s : kb) {
    if (const auto* rule = std::get_if<LpRule>(&s)) {
      if (!rule->is_ground()) return false;
    }
  }
  return true;
}

bool kb_subset(const KnowledgeBase& a, const KnowledgeBase& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string to_string(const ElAxiom& axiom) {
  using Kind = ElAxiom::Kind;
  switch (axiom.kind) {
    case Kind::concept_subsumption:
      return axiom.lhs_a + " sub " + axiom.rhs;
    case Kind::conjunction_subsumption:
      return axiom.lhs_a + " and " + axiom.lhs_b + " sub " + axiom.rhs;
    case Kind::existential_subsumption:
      return "some " + axiom.role + " " +
             (axiom.filler.empty() ? std::string("top") : axiom.filler) +
             " sub " + axiom.rhs;
    case Kind::nominal_rhs:
      return axiom.lhs_a + " sub some " + axiom.role + " {" +
             quoted_symbol(axiom.filler) + "}";
    case Kind::nominal_lhs:
      return "some " + axiom.role + " {" + quoted_symbol(axiom.filler) +
             "} sub " + axiom.rhs;
    case Kind::disjointness:
      return axiom.lhs_a + " and " + axiom.lhs_b + " sub bot";
  }
  return "";
}

std::string to_string(const LpRule& rule) {
  std::string out = to_string(rule.head);
  if (!rule.body.empty()) {
    out += " <- ";
    for (std::size_t i = 0; i < rule.body.size(); ++i) {
      if (i > 0) out += ", ";
      if (rule.body[i].negated) out += "~";
      out += to_string(rule.body[i].atom);
    }
  }
  return out;
}

std::string to_string(const Statement& statement) {
  if (const auto* atom = std::get_if<GroundAtom>(&statement))
    return to_string(*atom);
  if (const auto* rule = std::get_if<LpRule>(&statement)) return to_string(*rule);
  return to_string(std::get<ElAxiom>(statement));
}

}  // namespace emcs
