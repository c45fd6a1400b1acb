#include "emcs/logics/el.hpp"

#include <map>
#include <set>
#include <tuple>

#include "emcs/context.hpp"
#include "emcs/errors.hpp"

namespace emcs {

ElSaturation saturate_el(const KnowledgeBase& kb) {
  using ConceptAssertion = std::pair<std::string, std::string>;  // (concept, a)
  using RoleAssertion = std::tuple<std::string, std::string, std::string>;

  std::set<ConceptAssertion> concepts;
  std::set<RoleAssertion> roles;
  std::vector<ElAxiom> axioms = kb_el_axioms(kb);

  for (const Statement& s : kb) {
    const auto* fact = std::get_if<GroundAtom>(&s);
    if (!fact) continue;
    if (fact->args.size() == 1) {
      concepts.emplace(fact->predicate, fact->args[0]);
    } else if (fact->args.size() == 2) {
      roles.emplace(fact->predicate, fact->args[0], fact->args[1]);
    } else {
      throw ValidationError("EL assertion " + to_string(*fact) +
                            " must be unary or binary");
    }
  }

  ElSaturation result;
  auto add_concept = [&](const std::string& cname, const std::string& a) {
    if (concepts.emplace(cname, a).second) {
      ++result.steps;
      return true;
    }
    return false;
  };
  auto add_role = [&](const std::string& role, const std::string& a,
                      const std::string& b) {
    if (roles.emplace(role, a, b).second) {
      ++result.steps;
      return true;
    }
    return false;
  };

  bool changed = true;
  while (changed && !result.bottom_individual) {
    changed = false;
    for (const ElAxiom& axiom : axioms) {
      switch (axiom.kind) {
        case ElAxiom::Kind::concept_subsumption: {
          for (const auto& [cname, a] : concepts) {
            if (cname == axiom.lhs_a) changed |= add_concept(axiom.rhs, a);
          }
          break;
        }
        case ElAxiom::Kind::conjunction_subsumption: {
          for (const auto& [cname, a] : concepts) {
            if (cname != axiom.lhs_a) continue;
            if (concepts.count({axiom.lhs_b, a}))
              changed |= add_concept(axiom.rhs, a);
          }
          break;
        }
        case ElAxiom::Kind::existential_subsumption: {
          for (const auto& [role, a, b] : roles) {
            if (role != axiom.role) continue;
            if (axiom.filler.empty() || concepts.count({axiom.filler, b}))
              changed |= add_concept(axiom.rhs, a);
          }
          break;
        }
        case ElAxiom::Kind::nominal_rhs: {
          for (const auto& [cname, a] : concepts) {
            if (cname == axiom.lhs_a)
              changed |= add_role(axiom.role, a, axiom.filler);
          }
          break;
        }
        case ElAxiom::Kind::nominal_lhs: {
          for (const auto& [role, a, b] : roles) {
            if (role == axiom.role && b == axiom.filler)
              changed |= add_concept(axiom.rhs, a);
          }
          break;
        }
        case ElAxiom::Kind::disjointness: {
          for (const auto& [cname, a] : concepts) {
            if (cname != axiom.lhs_a) continue;
            if (concepts.count({axiom.lhs_b, a})) {
              result.bottom_individual = a;
              break;
            }
          }
          break;
        }
      }
      if (result.bottom_individual) break;
    }
  }

  for (const auto& [cname, a] : concepts)
    result.beliefs.insert(GroundAtom{cname, {a}});
  for (const auto& [role, a, b] : roles)
    result.beliefs.insert(GroundAtom{role, {a, b}});
  return result;
}

std::vector<BeliefSet> ElLogic::acc(const KnowledgeBase& kb) const {
  ElSaturation saturation = saturate_el(kb);
  if (saturation.bottom_individual)
    throw InconsistencyError(
        "inconsistent ontology: bottom derived for individual '" +
            *saturation.bottom_individual + "'",
        *saturation.bottom_individual);
  return {std::move(saturation.beliefs)};
}

std::vector<Diagnostic> ElLogic::check_kb(const KnowledgeBase& kb,
                                          const Vocabulary& vocabulary,
                                          std::size_t context_index) const {
  std::vector<Diagnostic> out;
  for (const auto& [predicate, arity] : vocabulary.predicates) {
    if (arity > 2)
      out.push_back({Severity::error, "el-vocabulary-arity", context_index, "",
                     "EL signature admits concepts and roles only: " +
                         predicate + "/" + std::to_string(arity)});
  }

  auto check_concept = [&](const std::string& name, const std::string& id) {
    auto it = vocabulary.predicates.find(name);
    if (it == vocabulary.predicates.end() || it->second != 1)
      out.push_back({Severity::error, "kb-vocabulary", context_index, id,
                     "undeclared concept " + name});
  };
  auto check_role = [&](const std::string& name, const std::string& id) {
    auto it = vocabulary.predicates.find(name);
    if (it == vocabulary.predicates.end() || it->second != 2)
      out.push_back({Severity::error, "kb-vocabulary", context_index, id,
                     "undeclared role " + name});
  };

  std::size_t position = 0;
  for (const Statement& s : kb) {
    ++position;
    std::string id = "kb#" + std::to_string(position);
    if (const auto* fact = std::get_if<GroundAtom>(&s)) {
      if (fact->args.size() != 1 && fact->args.size() != 2) {
        out.push_back({Severity::error, "kb-statement-kind", context_index, id,
                       "EL assertion " + to_string(*fact) +
                           " must be unary or binary"});
      } else if (!vocabulary.admits(*fact)) {
        out.push_back({Severity::error, "kb-vocabulary", context_index, id,
                       "assertion " + to_string(*fact) +
                           " not in the declared vocabulary"});
      }
    } else if (const auto* axiom = std::get_if<ElAxiom>(&s)) {
      switch (axiom->kind) {
        case ElAxiom::Kind::concept_subsumption:
          check_concept(axiom->lhs_a, id);
          check_concept(axiom->rhs, id);
          break;
        case ElAxiom::Kind::conjunction_subsumption:
        case ElAxiom::Kind::disjointness:
          check_concept(axiom->lhs_a, id);
          check_concept(axiom->lhs_b, id);
          if (axiom->kind == ElAxiom::Kind::conjunction_subsumption)
            check_concept(axiom->rhs, id);
          break;
        case ElAxiom::Kind::existential_subsumption:
          check_role(axiom->role, id);
          if (!axiom->filler.empty()) check_concept(axiom->filler, id);
          check_concept(axiom->rhs, id);
          break;
        case ElAxiom::Kind::nominal_rhs:
          check_concept(axiom->lhs_a, id);
          check_role(axiom->role, id);
          break;
        case ElAxiom::Kind::nominal_lhs:
          check_role(axiom->role, id);
          check_concept(axiom->rhs, id);
          break;
      }
    } else {
      out.push_back({Severity::error, "kb-statement-kind", context_index, id,
                     "logic-program rules are not ontology statements"});
    }
  }
  return out;
}

BeliefSet acc_el(const KnowledgeBase& kb) {
  ElLogic logic;
  return logic.acc(kb).front();
}

}  // namespace emcs
