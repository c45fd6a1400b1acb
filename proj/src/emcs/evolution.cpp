#include "emcs/evolution.hpp"

#include "emcs/bridge_eval.hpp"
#include "emcs/kernel.hpp"

namespace emcs {

std::vector<KnowledgeBase> step_kbs(const Emcs& system,
                                    const std::vector<KnowledgeBase>& current,
                                    const BeliefState& state) {
  if (current.size() != system.size())
    throw ValidationError("step_kbs: knowledge-base vector has " +
                          std::to_string(current.size()) +
                          " entries for a " + std::to_string(system.size()) +
                          "-context system");
  const std::size_t observation = system.observation_count();
  std::vector<KnowledgeBase> next;
  next.reserve(current.size());
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (i < observation) {
      next.push_back(current[i]);
      continue;
    }
    std::set<OperationalFormula> heads = app_next(system, i + 1, state);
    next.push_back(mng_apply(system.contexts[i], current[i], heads));
  }
  return next;
}

Emcs instantiate(const Emcs& system, const ObservationInstant& instant,
                 const std::vector<KnowledgeBase>& kbs) {
  const std::size_t observation = system.observation_count();
  if (instant.observations.size() != observation)
    throw ValidationError("instant observation has " +
                          std::to_string(instant.observations.size()) +
                          " components for " + std::to_string(observation) +
                          " observation contexts");
  if (kbs.size() != system.size())
    throw ValidationError("instantiate: knowledge-base vector has " +
                          std::to_string(kbs.size()) + " entries for a " +
                          std::to_string(system.size()) + "-context system");

  Emcs out = system;
  for (std::size_t i = 0; i < system.size(); ++i) {
    const KnowledgeBase& kb = i < observation ? instant.observations[i] : kbs[i];
    if (i < observation) {
      std::vector<Diagnostic> issues = system.contexts[i].logic->check_kb(
          kb, system.contexts[i].vocabulary, i + 1);
      if (has_errors(issues))
        throw ValidationError("instant observation rejected: " +
                              issues.front().to_string());
    }
    out.contexts[i] = replace_kb(system.contexts[i], kb);
  }
  return out;
}

std::vector<KnowledgeBase> initial_kbs(const Emcs& system) {
  std::vector<KnowledgeBase> kbs;
  kbs.reserve(system.size());
  for (const EvolvingContext& context : system.contexts)
    kbs.push_back(context.kb);
  return kbs;
}

ConstantPool observation_constants(const ObservationSequence& observations) {
  ConstantPool pool;
  for (const ObservationInstant& instant : observations.instants) {
    for (const KnowledgeBase& kb : instant.observations) {
      for (const Statement& statement : kb) {
        if (const auto* fact = std::get_if<GroundAtom>(&statement))
          pool.absorb(*fact);
      }
    }
  }
  return pool;
}

namespace {

std::vector<KnowledgeBase> kbs_of(const Emcs& system) {
  return initial_kbs(system);
}

void require_span(const Emcs&, const ObservationSequence& observations,
                  std::size_t size, const char* who) {
  if (size > observations.size())
    throw ValidationError(std::string(who) + ": requested size " +
                          std::to_string(size) + " exceeds the " +
                          std::to_string(observations.size()) +
                          "-instant observation sequence");
}

}  // namespace

EvolvingCheckDetail check_evolving_equilibrium_detail(
    const Emcs& system, const ObservationSequence& observations,
    const EvolvingBeliefState& candidate) {
  require_span(system, observations, candidate.size(),
               "check_evolving_equilibrium");
  std::vector<KnowledgeBase> kbs = initial_kbs(system);
  for (std::size_t j = 0; j < candidate.size(); ++j) {
    Emcs instantiated = instantiate(system, observations.instants[j], kbs);
    if (!is_static_equilibrium(instantiated, candidate.states[j]))
      return {false, j + 1};
    kbs = step_kbs(instantiated, kbs_of(instantiated), candidate.states[j]);
  }
  return {true, 0};
}

bool check_evolving_equilibrium(const Emcs& system,
                                const ObservationSequence& observations,
                                const EvolvingBeliefState& candidate) {
  return check_evolving_equilibrium_detail(system, observations, candidate)
      .accepted;
}

namespace {

EvolvingRun run_evolving(const Emcs& system,
                         const ObservationSequence& observations,
                         std::size_t size, const SolverOptions& options,
                         EvolvingSemantics semantics) {
  require_span(system, observations, size, "evolving semantics");
  EvolvingRun run;
  std::vector<KnowledgeBase> kbs = initial_kbs(system);
  for (std::size_t j = 0; j < size; ++j) {
    Emcs instantiated = instantiate(system, observations.instants[j], kbs);
    BeliefState state = wfs(instantiated, options);
    if (semantics == EvolvingSemantics::grounded &&
        !is_grounded_equilibrium(instantiated, state, options))
      throw NoGroundedEquilibriumError(j + 1, gamma_orbit(instantiated, options));

    EvolutionTrace::InstantRecord record;
    record.instant = j + 1;
    record.kbs = kbs_of(instantiated);
    record.state = state;
    record.app_now.resize(system.size());
    record.app_next.resize(system.size());
    for (std::size_t i = 0; i < system.size(); ++i) {
      AppSplit split = split_now_next(app(instantiated, i + 1, state));
      record.app_now[i] = std::move(split.now);
      record.app_next[i] = std::move(split.next);
    }

    kbs = step_kbs(instantiated, record.kbs, state);
    run.states.states.push_back(std::move(state));
    run.trace.records.push_back(std::move(record));
  }
  return run;
}

}  // namespace

EvolvingRun evolving_wfs(const Emcs& system,
                         const ObservationSequence& observations,
                         std::size_t size, const SolverOptions& options) {
  return run_evolving(system, observations, size, options,
                      EvolvingSemantics::well_founded);
}

EvolvingRun evolving_grounded_equilibrium(const Emcs& system,
                                          const ObservationSequence& observations,
                                          std::size_t size,
                                          const SolverOptions& options) {
  return run_evolving(system, observations, size, options,
                      EvolvingSemantics::grounded);
}

StreamDriver::StreamDriver(Emcs system, EvolvingSemantics semantics,
                           SolverOptions options)
    : system_(std::move(system)),
      semantics_(semantics),
      options_(options),
      kbs_(initial_kbs(system_)) {}

BeliefState StreamDriver::feed(const ObservationInstant& instant) {
  if (halted_)
    throw IntegrityError("stream driver halted after a malformed instant");
  Emcs instantiated;
  try {
    instantiated = instantiate(system_, instant, kbs_);
  } catch (const ValidationError&) {
    halted_ = true;
    throw;
  }
  BeliefState state = wfs(instantiated, options_);
  if (semantics_ == EvolvingSemantics::grounded &&
      !is_grounded_equilibrium(instantiated, state, options_)) {
    halted_ = true;
    throw NoGroundedEquilibriumError(processed_ + 1,
                                     gamma_orbit(instantiated, options_));
  }
  kbs_ = step_kbs(instantiated, initial_kbs(instantiated), state);
  ++processed_;
  return state;
}

}  // namespace emcs
