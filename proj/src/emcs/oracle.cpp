#include "emcs/oracle.hpp"

#include <algorithm>
#include <random>

#include "emcs/bridge_eval.hpp"
#include "emcs/grounding.hpp"
#include "emcs/logics/datalog.hpp"
#include "emcs/logics/el.hpp"
#include "emcs/validate.hpp"

namespace emcs::oracle {

namespace {

// Upper bound on the beliefs a context can reach under any set of fired
// bridge heads: its logic's closure of kb plus every addable head formula.
BeliefSet logic_closure(const EvolvingContext& context, const BeliefSet& seeds) {
  KnowledgeBase kb = context.kb;
  kb_insert_facts(kb, seeds);
  std::string_view kind = context.logic->kind();
  if (kind == "datalog") return acc_datalog(kb);
  if (kind == "normal-lp") {
    // Least model with all negative literals stripped dominates the
    // well-founded true atoms of every fact extension.
    std::vector<LpRule> stripped;
    for (const LpRule& rule : kb_lp_rules(kb)) {
      LpRule positive;
      positive.head = rule.head;
      for (const LpLiteral& literal : rule.body) {
        if (!literal.negated) positive.body.push_back(literal);
      }
      stripped.push_back(std::move(positive));
    }
    return least_model(stripped, kb_facts(kb));
  }
  if (kind == "el") {
    // Best effort: saturation stops at bottom, which only makes the
    // universe smaller for kbs no equilibrium can accept anyway.
    return saturate_el(kb).beliefs;
  }
  return kb_facts(kb);
}

}  // namespace

BeliefUniverse BeliefUniverse::reachable(const Emcs& system) {
  std::vector<BeliefSet> reachable(system.size());
  std::vector<BeliefSet> head_seeds(system.size());

  for (const EvolvingContext& context : system.contexts) {
    for (const BridgeRule& rule : context.ground_rules) {
      for (const BridgeLiteral& literal : rule.body) {
        if (literal.context_index >= 1 && literal.context_index <= system.size())
          reachable[literal.context_index - 1].insert(literal.formula);
      }
    }
  }
  for (std::size_t i = 0; i < system.size(); ++i) {
    for (const BridgeRule& rule : system.contexts[i].ground_rules)
      head_seeds[i].insert(rule.head.formula);
  }
  for (std::size_t i = 0; i < system.size(); ++i) {
    BeliefSet closure = logic_closure(system.contexts[i], head_seeds[i]);
    reachable[i].insert(closure.begin(), closure.end());
  }

  BeliefUniverse universe;
  universe.atoms.resize(system.size());
  for (std::size_t i = 0; i < system.size(); ++i)
    universe.atoms[i].assign(reachable[i].begin(), reachable[i].end());
  return universe;
}

std::optional<std::size_t> BeliefUniverse::state_count() const {
  std::size_t bits = 0;
  for (const auto& context_atoms : atoms) bits += context_atoms.size();
  if (bits >= 63) return std::nullopt;
  return std::size_t(1) << bits;
}

namespace {

BeliefUniverse bounded_universe(const Emcs& system,
                                const UniverseOptions& options) {
  BeliefUniverse universe = BeliefUniverse::reachable(system);
  std::optional<std::size_t> count = universe.state_count();
  std::size_t bits = 0;
  for (const auto& context_atoms : universe.atoms) bits += context_atoms.size();
  if (!count || *count > options.max_states)
    throw UniverseBoundError(
        "candidate universe holds 2^" + std::to_string(bits) +
        " belief states, beyond the bound of " +
        std::to_string(options.max_states));
  return universe;
}

BeliefState state_from_masks(const BeliefUniverse& universe,
                             const std::vector<std::uint64_t>& masks) {
  BeliefState state = BeliefState::empty(universe.atoms.size());
  for (std::size_t i = 0; i < universe.atoms.size(); ++i) {
    for (std::size_t bit = 0; bit < universe.atoms[i].size(); ++bit) {
      if (masks[i] & (std::uint64_t(1) << bit))
        state.components[i].insert(universe.atoms[i][bit]);
    }
  }
  return state;
}

// Enumerate every candidate state of the universe in a fixed order.
template <typename Visit>
void for_each_candidate(const BeliefUniverse& universe, Visit&& visit) {
  const std::size_t n = universe.atoms.size();
  std::vector<std::uint64_t> masks(n, 0);
  while (true) {
    visit(state_from_masks(universe, masks));
    std::size_t pos = 0;
    while (pos < n) {
      ++masks[pos];
      if (masks[pos] < (std::uint64_t(1) << universe.atoms[pos].size())) break;
      masks[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
}

}  // namespace

std::vector<BeliefState> enumerate_equilibria(const Emcs& system,
                                              const UniverseOptions& options) {
  BeliefUniverse universe = bounded_universe(system, options);
  std::vector<BeliefState> out;
  for_each_candidate(universe, [&](BeliefState candidate) {
    if (is_static_equilibrium(system, candidate))
      out.push_back(std::move(candidate));
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool strictly_below(const BeliefState& a, const BeliefState& b) {
  return componentwise_subset(a, b) && a != b;
}

}  // namespace

std::vector<BeliefState> minimal_equilibria(const Emcs& system,
                                            const UniverseOptions& options) {
  std::vector<BeliefState> equilibria = enumerate_equilibria(system, options);
  std::vector<BeliefState> out;
  for (const BeliefState& candidate : equilibria) {
    bool minimal = true;
    for (const BeliefState& other : equilibria) {
      if (strictly_below(other, candidate)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(candidate);
  }
  return out;
}

std::vector<BeliefState> enumerate_grounded_equilibria(
    const Emcs& system, const UniverseOptions& options,
    const SolverOptions& solver) {
  BeliefUniverse universe = bounded_universe(system, options);
  std::vector<BeliefState> out;
  for_each_candidate(universe, [&](BeliefState candidate) {
    if (is_grounded_equilibrium(system, candidate, solver))
      out.push_back(std::move(candidate));
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool PropertyReport::all_passed() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const Entry& e) { return e.passed; });
}

std::string PropertyReport::to_string() const {
  std::string out;
  for (const Entry& entry : entries) {
    out += entry.property;
    out += entry.passed ? ": pass" : ": FAIL";
    out += " (" + std::to_string(entry.checked) + " checked)";
    if (!entry.witness.empty()) out += " witness: " + entry.witness;
    out += "\n";
  }
  return out;
}

std::string state_to_text(const BeliefState& state) {
  std::string out = "<";
  for (std::size_t i = 0; i < state.components.size(); ++i) {
    if (i > 0) out += ",";
    out += "{";
    bool first = true;
    for (const GroundAtom& atom : state.components[i]) {
      if (!first) out += ",";
      first = false;
      out += to_string(atom);
    }
    out += "}";
  }
  out += ">";
  return out;
}

PropertyReport verify_props(const Emcs& system, const UniverseOptions& options,
                            const SolverOptions& solver) {
  BeliefUniverse universe = bounded_universe(system, options);
  PropertyReport report;

  std::vector<BeliefState> equilibria;
  std::vector<BeliefState> grounded;
  for_each_candidate(universe, [&](BeliefState candidate) {
    if (is_static_equilibrium(system, candidate)) {
      if (is_grounded_equilibrium(system, candidate, solver))
        grounded.push_back(candidate);
      equilibria.push_back(std::move(candidate));
    }
  });

  {
    PropertyReport::Entry entry;
    entry.property = "grounded-equilibria-minimal";
    entry.passed = true;
    for (const BeliefState& g : grounded) {
      ++entry.checked;
      for (const BeliefState& e : equilibria) {
        if (strictly_below(e, g)) {
          entry.passed = false;
          entry.witness = state_to_text(e) + " below " + state_to_text(g);
          break;
        }
      }
      if (!entry.passed) break;
    }
    report.entries.push_back(std::move(entry));
  }

  {
    PropertyReport::Entry entry;
    entry.property = "gamma-antimonotone";
    entry.passed = true;
    std::mt19937_64 rng(options.sample_seed);
    std::vector<std::uint64_t> lower(universe.atoms.size());
    std::vector<std::uint64_t> upper(universe.atoms.size());
    for (std::size_t sample = 0; sample < options.sample_pairs; ++sample) {
      for (std::size_t i = 0; i < universe.atoms.size(); ++i) {
        std::uint64_t limit = std::uint64_t(1) << universe.atoms[i].size();
        std::uint64_t a = rng() % limit;
        std::uint64_t b = rng() % limit;
        lower[i] = a & b;
        upper[i] = a | b;
      }
      BeliefState small = state_from_masks(universe, lower);
      BeliefState large = state_from_masks(universe, upper);
      ++entry.checked;
      if (!componentwise_subset(gamma(system, large, solver),
                                gamma(system, small, solver))) {
        entry.passed = false;
        entry.witness = state_to_text(small) + " ⊆ " + state_to_text(large);
        break;
      }
    }
    report.entries.push_back(std::move(entry));
  }

  {
    PropertyReport::Entry entry;
    entry.property = "wfs-lower-bound";
    entry.passed = true;
    BeliefState well_founded = wfs(system, solver);
    for (const BeliefState& g : grounded) {
      ++entry.checked;
      if (!componentwise_subset(well_founded, g)) {
        entry.passed = false;
        entry.witness = "wfs " + state_to_text(well_founded) + " not below " +
                        state_to_text(g);
        break;
      }
    }
    report.entries.push_back(std::move(entry));
  }

  return report;
}

namespace {

GroundAtom nullary(const std::string& name) { return GroundAtom{name, {}}; }

}  // namespace

Emcs random_instance(const GeneratorParams& params) {
  std::mt19937_64 rng(params.seed);
  auto chance = [&](double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
  };
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };

  const std::size_t n = pick(std::max<std::size_t>(params.min_contexts, 1),
                             std::max(params.max_contexts, params.min_contexts));

  Emcs system;
  std::vector<std::vector<GroundAtom>> atoms(n);
  for (std::size_t i = 0; i < n; ++i) {
    EvolvingContext context;
    context.name = "C" + std::to_string(i + 1);
    bool observation = params.leading_observation_context && i == 0;
    bool lp = !observation && chance(params.lp_context_probability);
    // Reasoning fact stores are datalog contexts with rule-free kbs, so
    // generated instances stay expressible in the spec-file syntax.
    context.logic = make_logic(observation ? "observation"
                               : lp        ? "normal-lp"
                                           : "datalog");
    context.is_observation = observation;

    const std::size_t k = pick(1, std::max<std::size_t>(
                                      params.max_atoms_per_context, 1));
    for (std::size_t a = 0; a < k; ++a) {
      std::string name = "p" + std::to_string(i + 1) + std::to_string(a + 1);
      context.vocabulary.declare(name, 0);
      atoms[i].push_back(nullary(name));
    }
    system.contexts.push_back(std::move(context));
  }

  for (std::size_t i = 0; i < n; ++i) {
    EvolvingContext& context = system.contexts[i];
    if (context.is_observation) continue;

    for (const GroundAtom& atom : atoms[i]) {
      if (chance(params.fact_probability)) context.kb.insert(atom);
    }
    if (context.logic->kind() == "normal-lp") {
      const std::size_t rules = pick(0, params.max_lp_rules_per_context);
      for (std::size_t r = 0; r < rules; ++r) {
        LpRule rule;
        rule.head =
            SchematicAtom::lift(atoms[i][pick(0, atoms[i].size() - 1)]);
        const std::size_t body = pick(1, 2);
        for (std::size_t b = 0; b < body; ++b) {
          LpLiteral literal;
          literal.atom =
              SchematicAtom::lift(atoms[i][pick(0, atoms[i].size() - 1)]);
          literal.negated = chance(params.negation_probability);
          rule.body.push_back(std::move(literal));
        }
        context.kb.insert(std::move(rule));
      }
    }

    const std::size_t rules = pick(0, params.max_bridge_rules_per_context);
    for (std::size_t r = 0; r < rules; ++r) {
      SchematicBridgeRule rule;
      rule.head.op = "add";
      rule.head.formula =
          SchematicAtom::lift(atoms[i][pick(0, atoms[i].size() - 1)]);
      rule.head.next_wrapped = chance(params.next_probability);
      const std::size_t body = pick(0, 2);
      for (std::size_t b = 0; b < body; ++b) {
        SchematicBridgeLiteral literal;
        literal.context_index = pick(1, n);
        literal.formula = SchematicAtom::lift(
            atoms[literal.context_index - 1]
                 [pick(0, atoms[literal.context_index - 1].size() - 1)]);
        literal.negated = chance(params.negation_probability);
        rule.body.push_back(std::move(literal));
      }
      rule.body.erase(std::unique(rule.body.begin(), rule.body.end()),
                      rule.body.end());
      context.bridge_rules.push_back(std::move(rule));
    }
  }

  return ground_system(system);
}

ObservationSequence random_observation_sequence(const Emcs& system,
                                                std::size_t length,
                                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto chance = [&](double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
  };
  const std::size_t observation = system.observation_count();
  ObservationSequence sequence;
  for (std::size_t j = 0; j < length; ++j) {
    ObservationInstant instant;
    instant.observations.resize(observation);
    for (std::size_t i = 0; i < observation; ++i) {
      for (const auto& [predicate, arity] :
           system.contexts[i].vocabulary.predicates) {
        if (arity == 0 && chance(0.4))
          instant.observations[i].insert(GroundAtom{predicate, {}});
      }
    }
    sequence.instants.push_back(std::move(instant));
  }
  return sequence;
}

}  // namespace emcs::oracle
