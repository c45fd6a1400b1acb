#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "emcs/equilibria.hpp"
#include "emcs/errors.hpp"
#include "emcs/evolution.hpp"
#include "emcs/grounding.hpp"
#include "emcs/io/parse.hpp"
#include "emcs/io/serialize.hpp"
#include "emcs/oracle.hpp"
#include "emcs/validate.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kSemanticError = 1;
constexpr int kInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw emcs::ParseError("cannot read file '" + path + "'", 0, 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Parse, report diagnostics, reject on errors.
emcs::Emcs load_system(const std::string& path) {
  emcs::Emcs system = emcs::io::parse_system(read_file(path));
  std::vector<emcs::Diagnostic> diagnostics = emcs::validate(system);
  for (const emcs::Diagnostic& diagnostic : diagnostics)
    std::cerr << path << ": " << diagnostic.to_string() << "\n";
  if (emcs::has_errors(diagnostics))
    throw emcs::ValidationError("system spec '" + path +
                                "' failed validation");
  return system;
}

struct RunConfig {
  std::string spec;
  std::string observations;
  std::string state_file;
  std::string trace_file;
  std::string semantics = "wfs";
  std::size_t size = 0;
  std::size_t max_states = std::size_t(1) << 20;
};

int run_command(const RunConfig& config) {
  emcs::Emcs parsed = load_system(config.spec);
  emcs::ObservationSequence observations =
      emcs::io::parse_observations(read_file(config.observations), parsed);
  emcs::Emcs system =
      emcs::ground_system(parsed, emcs::observation_constants(observations));

  std::size_t size = config.size == 0 ? observations.size() : config.size;
  emcs::EvolvingRun run =
      config.semantics == "grounded"
          ? emcs::evolving_grounded_equilibrium(system, observations, size)
          : emcs::evolving_wfs(system, observations, size);

  for (std::size_t j = 0; j < run.states.size(); ++j)
    std::cout << emcs::io::state_record_line(j + 1, run.states.states[j],
                                             system)
              << "\n";

  if (!config.trace_file.empty()) {
    std::ofstream trace(config.trace_file);
    if (!trace)
      throw emcs::ParseError("cannot write file '" + config.trace_file + "'",
                             0, 0);
    for (const auto& record : run.trace.records)
      trace << emcs::io::trace_record_line(record, system) << "\n";
  }
  return kOk;
}

int check_command(const RunConfig& config) {
  emcs::Emcs parsed = load_system(config.spec);
  emcs::ObservationSequence observations =
      emcs::io::parse_observations(read_file(config.observations), parsed);
  emcs::Emcs system =
      emcs::ground_system(parsed, emcs::observation_constants(observations));

  std::vector<emcs::io::StateRecord> records =
      emcs::io::parse_state_file(read_file(config.state_file), system);
  emcs::EvolvingBeliefState candidate;
  for (const emcs::io::StateRecord& record : records)
    candidate.states.push_back(record.state);

  emcs::EvolvingCheckDetail detail =
      emcs::check_evolving_equilibrium_detail(system, observations, candidate);
  if (!detail.accepted) {
    std::cerr << "not an evolving equilibrium: instant "
              << detail.failing_instant << " fails\n";
    return kSemanticError;
  }
  std::cout << "evolving equilibrium of size " << candidate.size()
            << " verified\n";
  return kOk;
}

int reduct_command(const RunConfig& config) {
  emcs::Emcs system = emcs::ground_system(load_system(config.spec));
  std::vector<emcs::io::StateRecord> records =
      emcs::io::parse_state_file(read_file(config.state_file), system);
  if (records.empty())
    throw emcs::ParseError("state file '" + config.state_file +
                               "' holds no record",
                           0, 0);
  emcs::ReductSystem reduct = emcs::s_reduct(system, records.front().state);
  std::cout << emcs::io::serialize_system(reduct.system);
  return kOk;
}

int oracle_command(const RunConfig& config) {
  emcs::Emcs system = emcs::ground_system(load_system(config.spec));
  emcs::oracle::UniverseOptions options;
  options.max_states = config.max_states;

  std::vector<emcs::BeliefState> equilibria =
      emcs::oracle::enumerate_equilibria(system, options);
  std::cout << "equilibria: " << equilibria.size() << "\n";
  for (const emcs::BeliefState& state :
       emcs::oracle::minimal_equilibria(system, options))
    std::cout << "minimal: " << emcs::oracle::state_to_text(state) << "\n";

  emcs::oracle::PropertyReport report =
      emcs::oracle::verify_props(system, options);
  std::cout << report.to_string();
  return report.all_passed() ? kOk : kSemanticError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reasoner for evolving multi-context systems"};
  app.require_subcommand(1);

  RunConfig config;

  CLI::App* validate = app.add_subcommand("validate", "Check a system spec");
  validate->add_option("spec", config.spec, "system spec file")->required();

  CLI::App* run = app.add_subcommand(
      "run", "Compute the evolving semantics over an observation stream");
  run->add_option("spec", config.spec, "system spec file")->required();
  run->add_option("obs", config.observations, "observation stream file")
      ->required();
  run->add_option("--size", config.size,
                  "number of instants to process (default: all)");
  run->add_option("--semantics", config.semantics,
                  "wfs (default) or grounded")
      ->check(CLI::IsMember({"wfs", "grounded"}));
  run->add_option("--trace", config.trace_file, "write a trace file");

  CLI::App* check = app.add_subcommand(
      "check", "Verify a state file as an evolving equilibrium");
  check->add_option("spec", config.spec, "system spec file")->required();
  check->add_option("obs", config.observations, "observation stream file")
      ->required();
  check->add_option("state", config.state_file, "state file")->required();

  CLI::App* reduct =
      app.add_subcommand("reduct", "Print the S-reduct of a system");
  reduct->add_option("spec", config.spec, "system spec file")->required();
  reduct->add_option("state", config.state_file, "state file")->required();

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Brute-force equilibria and property verdicts");
  oracle->add_option("spec", config.spec, "system spec file")->required();
  oracle->add_option("--max-states", config.max_states,
                     "candidate universe bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    int code = app.exit(error);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (validate->parsed()) {
      load_system(config.spec);
      return kOk;
    }
    if (run->parsed()) return run_command(config);
    if (check->parsed()) return check_command(config);
    if (reduct->parsed()) return reduct_command(config);
    if (oracle->parsed()) return oracle_command(config);
  } catch (const emcs::ParseError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kInputError;
  } catch (const emcs::ValidationError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kInputError;
  } catch (const emcs::EmcsError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kSemanticError;
  }
  return kOk;
}
