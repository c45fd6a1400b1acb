#ifndef EMCS_STATEMENT_HPP
#define EMCS_STATEMENT_HPP

#include <compare>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "emcs/atom.hpp"
#include "emcs/belief.hpp"

namespace emcs {

// A body literal of a logic-program rule; negated means default negation.
struct LpLiteral {
  SchematicAtom atom;
  bool negated = false;

  auto operator<=>(const LpLiteral&) const = default;
};

// head <- body. Definite when no body literal is negated.
struct LpRule {
  SchematicAtom head;
  std::vector<LpLiteral> body;

  auto operator<=>(const LpRule&) const = default;

  bool is_definite() const;
  bool is_ground() const;
};

// The supported description-logic axiom shapes:
//   concept_subsumption        lhs_a sub rhs
//   conjunction_subsumption    lhs_a and lhs_b sub rhs
//   existential_subsumption    some role filler sub rhs   (empty filler = top)
//   nominal_rhs                lhs_a sub some role {filler}
//   nominal_lhs                some role {filler} sub rhs
//   disjointness               lhs_a and lhs_b sub bot
struct ElAxiom {
  enum class Kind {
    concept_subsumption,
    conjunction_subsumption,
    existential_subsumption,
    nominal_rhs,
    nominal_lhs,
    disjointness,
  };

  Kind kind = Kind::concept_subsumption;
  std::string lhs_a;
  std::string lhs_b;
  std::string role;
  std::string filler;
  std::string rhs;

  auto operator<=>(const ElAxiom&) const = default;

  static ElAxiom subsumption(std::string a, std::string b);
  static ElAxiom conjunction(std::string a, std::string b, std::string c);
  static ElAxiom existential(std::string role, std::string filler_concept,
                             std::string b);
  static ElAxiom nominal_right(std::string a, std::string role, std::string o);
  static ElAxiom nominal_left(std::string role, std::string o, std::string b);
  static ElAxiom disjoint(std::string a, std::string b);
};

// A knowledge base is a set of statements: ground facts, rules, axioms.
// The management function only ever adds facts, so set algebra on
// knowledge bases is exactly set algebra on statements.
using Statement = std::variant<GroundAtom, LpRule, ElAxiom>;
using KnowledgeBase = std::set<Statement>;

bool is_fact(const Statement& s);
bool is_lp_rule(const Statement& s);
bool is_el_axiom(const Statement& s);

BeliefSet kb_facts(const KnowledgeBase& kb);
std::vector<LpRule> kb_lp_rules(const KnowledgeBase& kb);
std::vector<ElAxiom> kb_el_axioms(const KnowledgeBase& kb);

KnowledgeBase kb_of_facts(const BeliefSet& atoms);
void kb_insert_facts(KnowledgeBase& kb, const BeliefSet& atoms);

bool kb_is_ground(const KnowledgeBase& kb);
bool kb_subset(const KnowledgeBase& a, const KnowledgeBase& b);

std::string to_string(const ElAxiom& axiom);
std::string to_string(const LpRule& rule);
std::string to_string(const Statement& statement);

}  // namespace emcs

#endif
