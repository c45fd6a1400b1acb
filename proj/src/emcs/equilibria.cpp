#include "emcs/equilibria.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "emcs/bridge_eval.hpp"
#include "emcs/kernel.hpp"

namespace emcs {

namespace {

constexpr std::size_t kBoundCeiling = 1000000000;

std::size_t saturating_add(std::size_t a, std::size_t b) {
  if (a > kBoundCeiling - std::min(b, kBoundCeiling)) return kBoundCeiling;
  return std::min(a + b, kBoundCeiling);
}

std::size_t saturating_pow(std::size_t base, std::size_t exponent) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && out > kBoundCeiling / base) return kBoundCeiling;
    out *= base;
  }
  return out;
}

void require_ground(const Emcs& system, const char* who) {
  if (!system.grounded)
    throw IntegrityError(std::string(who) + " requires a grounded system");
}

void require_monotone_ops(const Emcs& system, const char* who) {
  if (!system.all_monotone_ops())
    throw IntegrityError(std::string(who) +
                         " requires monotone operations in every context");
}

void require_state_size(const Emcs& system, const BeliefState& state,
                        const char* who) {
  if (state.size() != system.size())
    throw ValidationError(std::string(who) + ": belief state has " +
                          std::to_string(state.size()) + " components for a " +
                          std::to_string(system.size()) + "-context system");
}

}  // namespace

std::size_t iteration_safety_bound(const Emcs& system) {
  std::size_t heads = 0;
  std::size_t vocabulary = 0;
  const std::size_t pool = std::max<std::size_t>(system.pool.size(), 1);
  for (const EvolvingContext& context : system.contexts) {
    heads = saturating_add(heads, context.ground_rules.size());
    heads = saturating_add(heads, context.bridge_rules.size());
    for (const auto& [predicate, arity] : context.vocabulary.predicates) {
      (void)predicate;
      vocabulary = saturating_add(vocabulary, saturating_pow(pool, arity));
    }
  }
  return saturating_add(saturating_add(heads, vocabulary), 1);
}

std::size_t effective_iteration_cap(const Emcs& system,
                                    const SolverOptions& options) {
  if (options.iteration_cap) return *options.iteration_cap;
  if (const char* env = std::getenv("EMCS_ITER_CAP")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && parsed > 0)
      return static_cast<std::size_t>(parsed);
  }
  return iteration_safety_bound(system);
}

bool is_definite(const Emcs& system) {
  for (const EvolvingContext& context : system.contexts) {
    if (!context.logic || !context.logic->is_reduced(context.kb)) return false;
    for (const SchematicBridgeRule& rule : context.bridge_rules) {
      for (const SchematicBridgeLiteral& literal : rule.body) {
        if (literal.negated) return false;
      }
    }
    for (const BridgeRule& rule : context.ground_rules) {
      for (const BridgeLiteral& literal : rule.body) {
        if (literal.negated) return false;
      }
    }
  }
  return true;
}

ReductSystem ReductSystem::adopt(Emcs system) {
  require_ground(system, "ReductSystem");
  if (!is_definite(system))
    throw ValidationError(
        "not a definite system: negated bridge literals or unreduced "
        "knowledge bases remain");
  return ReductSystem{std::move(system)};
}

bool is_static_equilibrium(const Emcs& system, const BeliefState& state) {
  require_state_size(system, state, "is_static_equilibrium");
  require_ground(system, "is_static_equilibrium");
  for (std::size_t i = 0; i < system.size(); ++i) {
    const EvolvingContext& context = system.contexts[i];
    std::set<OperationalFormula> now = app_now(system, i + 1, state);
    KnowledgeBase updated = mng_apply(context, now);
    std::vector<BeliefSet> acceptable;
    try {
      acceptable = context.logic->acc(updated);
    } catch (const InconsistencyError&) {
      return false;
    }
    if (std::find(acceptable.begin(), acceptable.end(), state.components[i]) ==
        acceptable.end())
      return false;
  }
  return true;
}

namespace {

BeliefState acc_all(const Emcs& system, const std::vector<KnowledgeBase>& kbs) {
  BeliefState state = BeliefState::empty(system.size());
  for (std::size_t i = 0; i < system.size(); ++i) {
    std::vector<BeliefSet> sets = system.contexts[i].logic->acc(kbs[i]);
    if (sets.size() != 1)
      throw IntegrityError("deterministic ACC required: context " +
                           system.contexts[i].name + " returned " +
                           std::to_string(sets.size()) + " belief sets");
    state.components[i] = std::move(sets.front());
  }
  return state;
}

}  // namespace

GroundedFixpoint grounded_equilibrium_definite(const ReductSystem& reduct,
                                               const SolverOptions& options) {
  const Emcs& system = reduct.system;
  require_monotone_ops(system, "grounded_equilibrium_definite");
  const std::size_t cap = effective_iteration_cap(system, options);

  std::vector<KnowledgeBase> kbs;
  kbs.reserve(system.size());
  for (const EvolvingContext& context : system.contexts)
    kbs.push_back(context.kb);
  BeliefState beliefs = acc_all(system, kbs);

  FixpointTrace trace;
  trace.steps.push_back({0, kbs, beliefs});

  for (std::size_t alpha = 1; alpha <= cap; ++alpha) {
    std::vector<KnowledgeBase> next(system.size());
    bool changed = false;
    for (std::size_t i = 0; i < system.size(); ++i) {
      std::set<OperationalFormula> now = app_now(system, i + 1, beliefs);
      next[i] = mng_apply(system.contexts[i], kbs[i], now);
      if (!kb_subset(kbs[i], next[i]))
        throw IntegrityError("knowledge base of context " +
                             system.contexts[i].name +
                             " shrank under supposedly monotone operations");
      if (next[i] != kbs[i]) changed = true;
    }
    if (!changed) {
      trace.steps.push_back({alpha, kbs, beliefs});
      return {std::move(beliefs), std::move(trace)};
    }
    kbs = std::move(next);
    beliefs = acc_all(system, kbs);
    trace.steps.push_back({alpha, kbs, beliefs});
  }
  throw IntegrityError("grounded equilibrium iteration exceeded the cap of " +
                       std::to_string(cap) + " steps");
}

ReductSystem s_reduct(const Emcs& system, const BeliefState& state) {
  require_ground(system, "s_reduct");
  require_state_size(system, state, "s_reduct");
  for (const EvolvingContext& context : system.contexts) {
    if (!context.logic->reducible())
      throw ValidationError("context " + context.name +
                            " has no reduction function");
  }

  Emcs reduced = system;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    EvolvingContext& context = reduced.contexts[i];
    context.kb = context.logic->reduce(context.kb, state.components[i]);

    std::vector<BridgeRule> kept;
    kept.reserve(context.ground_rules.size());
    for (const BridgeRule& rule : context.ground_rules) {
      bool deleted = false;
      BridgeRule stripped;
      stripped.head = rule.head;
      for (const BridgeLiteral& literal : rule.body) {
        if (!literal.negated) {
          stripped.body.push_back(literal);
          continue;
        }
        BridgeLiteral positive = literal;
        positive.negated = false;
        if (satisfies(state, positive)) {
          deleted = true;
          break;
        }
      }
      if (!deleted) kept.push_back(std::move(stripped));
    }
    context.ground_rules = std::move(kept);
    context.bridge_rules.clear();
    context.bridge_rules.reserve(context.ground_rules.size());
    for (const BridgeRule& rule : context.ground_rules)
      context.bridge_rules.push_back(SchematicBridgeRule::lift(rule));
  }
  return ReductSystem::adopt(std::move(reduced));
}

BeliefState gamma(const Emcs& system, const BeliefState& state,
                  const SolverOptions& options) {
  require_monotone_ops(system, "gamma");
  return grounded_equilibrium_definite(s_reduct(system, state), options).state;
}

BeliefState least_belief_state(const Emcs& system) {
  BeliefState least = BeliefState::empty(system.size());
  for (std::size_t i = 0; i < system.size(); ++i) {
    std::optional<BeliefSet> bottom = system.contexts[i].logic->least_element();
    if (!bottom)
      throw IntegrityError("context " + system.contexts[i].name +
                           " has no least belief set; the system is not "
                           "normal");
    least.components[i] = std::move(*bottom);
  }
  return least;
}

namespace {

void require_wfs_preconditions(const Emcs& system, const char* who) {
  require_ground(system, who);
  require_monotone_ops(system, who);
  if (!system.all_reducible())
    throw IntegrityError(std::string(who) + " requires reducible contexts");
  if (!system.all_deterministic())
    throw IntegrityError(std::string(who) + " requires deterministic ACCs");
}

}  // namespace

BeliefState wfs(const Emcs& system, const SolverOptions& options) {
  require_wfs_preconditions(system, "wfs");
  const std::size_t cap = effective_iteration_cap(system, options);

  BeliefState current = least_belief_state(system);
  for (std::size_t step = 0; step <= cap; ++step) {
    BeliefState next = gamma(system, gamma(system, current, options), options);
    if (next == current) return current;
    if (!componentwise_subset(current, next))
      throw IntegrityError("γ² iterate is not monotone; a context violates "
                           "the reducibility laws");
    current = std::move(next);
  }
  throw IntegrityError("wfs iteration exceeded the cap of " +
                       std::to_string(cap) + " steps");
}

bool is_grounded_equilibrium(const Emcs& system, const BeliefState& state,
                             const SolverOptions& options) {
  return gamma(system, state, options) == state &&
         is_static_equilibrium(system, state);
}

bool check_acyclic(const Emcs& system) {
  // Nodes are (context, predicate) pairs at predicate granularity.
  std::map<std::pair<std::size_t, std::string>, std::size_t> node_ids;
  auto node = [&](std::size_t context_index, const std::string& predicate) {
    auto [it, inserted] =
        node_ids.emplace(std::make_pair(context_index, predicate),
                         node_ids.size());
    (void)inserted;
    return it->second;
  };

  struct Edge {
    std::size_t from, to;
    bool bridge;
  };
  std::vector<Edge> edges;

  for (std::size_t i = 0; i < system.size(); ++i) {
    const EvolvingContext& context = system.contexts[i];
    const std::size_t index = i + 1;
    for (const SchematicBridgeRule& rule : context.bridge_rules) {
      std::size_t head = node(index, rule.head.formula.predicate);
      for (const SchematicBridgeLiteral& literal : rule.body)
        edges.push_back(
            {node(literal.context_index, literal.formula.predicate), head,
             true});
    }
    for (const Statement& s : context.kb) {
      if (const auto* rule = std::get_if<LpRule>(&s)) {
        std::size_t head = node(index, rule->head.predicate);
        for (const LpLiteral& literal : rule->body)
          edges.push_back({node(index, literal.atom.predicate), head, false});
      } else if (const auto* axiom = std::get_if<ElAxiom>(&s)) {
        auto add = [&](const std::string& from, const std::string& to) {
          edges.push_back({node(index, from), node(index, to), false});
        };
        switch (axiom->kind) {
          case ElAxiom::Kind::concept_subsumption:
            add(axiom->lhs_a, axiom->rhs);
            break;
          case ElAxiom::Kind::conjunction_subsumption:
            add(axiom->lhs_a, axiom->rhs);
            add(axiom->lhs_b, axiom->rhs);
            break;
          case ElAxiom::Kind::existential_subsumption:
            add(axiom->role, axiom->rhs);
            if (!axiom->filler.empty()) add(axiom->filler, axiom->rhs);
            break;
          case ElAxiom::Kind::nominal_rhs:
            add(axiom->lhs_a, axiom->role);
            break;
          case ElAxiom::Kind::nominal_lhs:
            add(axiom->role, axiom->rhs);
            break;
          case ElAxiom::Kind::disjointness:
            break;
        }
      }
    }
  }

  // Tarjan over the collected edges; a bridge edge inside one strongly
  // connected component closes a cycle through a bridge rule.
  const std::size_t n = node_ids.size();
  std::vector<std::vector<std::size_t>> adjacency(n);
  for (const Edge& e : edges) adjacency[e.from].push_back(e.to);

  std::vector<std::size_t> component(n, 0), index_of(n, 0), low(n, 0);
  std::vector<bool> on_stack(n, false), visited(n, false);
  std::vector<std::size_t> stack;
  std::size_t next_index = 1, components = 0;

  // Iterative Tarjan to stay safe on deep graphs.
  struct Frame {
    std::size_t v;
    std::size_t child = 0;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (visited[root]) continue;
    std::vector<Frame> frames{{root}};
    while (!frames.empty()) {
      Frame& frame = frames.back();
      std::size_t v = frame.v;
      if (frame.child == 0) {
        visited[v] = true;
        index_of[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      bool descended = false;
      while (frame.child < adjacency[v].size()) {
        std::size_t w = adjacency[v][frame.child++];
        if (!visited[w]) {
          frames.push_back({w});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index_of[w]);
      }
      if (descended) continue;
      if (low[v] == index_of[v]) {
        ++components;
        while (true) {
          std::size_t w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component[w] = components;
          if (w == v) break;
        }
      }
      frames.pop_back();
      if (!frames.empty())
        low[frames.back().v] = std::min(low[frames.back().v], low[v]);
    }
  }

  for (const Edge& e : edges) {
    if (e.bridge && component[e.from] == component[e.to]) return false;
  }
  return true;
}

std::vector<BeliefState> gamma_orbit(const Emcs& system,
                                     const SolverOptions& options) {
  const std::size_t cap = effective_iteration_cap(system, options);
  std::vector<BeliefState> orbit;
  BeliefState current = least_belief_state(system);
  for (std::size_t step = 0; step <= cap; ++step) {
    if (std::find(orbit.begin(), orbit.end(), current) != orbit.end())
      return orbit;
    orbit.push_back(current);
    current = gamma(system, current, options);
  }
  throw IntegrityError("gamma orbit exceeded the cap of " +
                       std::to_string(cap) + " steps");
}

namespace {

std::string orbit_summary(const std::vector<BeliefState>& orbit) {
  std::string out = "{";
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(total_atom_count(orbit[i])) + " atoms";
  }
  out += "}";
  return out;
}

}  // namespace

NoGroundedEquilibriumError::NoGroundedEquilibriumError(
    std::size_t instant, std::vector<BeliefState> orbit)
    : SemanticsError("no grounded equilibrium certified at instant " +
                     std::to_string(instant) + "; γ orbit " +
                     orbit_summary(orbit) + " has no fixpoint"),
      instant_(instant),
      orbit_(std::move(orbit)) {}

}  // namespace emcs
