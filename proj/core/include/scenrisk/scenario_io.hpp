#ifndef SCENRISK_SCENARIO_IO_HPP
#define SCENRISK_SCENARIO_IO_HPP

#include <stdexcept>
#include <string>

#include "scenrisk/sim.hpp"
#include "scenrisk/types.hpp"

namespace scenrisk::io {

/// Schema or validation problem in a scenario/config file. `exit_hint`
/// distinguishes malformed input (validation) from I/O failures.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kSchemaVersion = 1;

/// Parse and validate a scenario file. Throws SchemaError naming the bad
/// field on parse problems, or listing every invariant violation.
ScenarioSpec load_scenario(const std::string& path);

/// Parse a scenario from a JSON string (exposed for tests).
ScenarioSpec parse_scenario(const std::string& json_text);

/// Serialize a scenario back to its JSON form; parse(emit(spec)) == spec.
std::string emit_scenario(const ScenarioSpec& spec);

/// Monitor configuration file: detector, cost, predictor, noise, and IDM
/// blocks, all optional with library defaults.
sim::MonitorConfig load_config(const std::string& path);
sim::MonitorConfig parse_config(const std::string& json_text);

}  // namespace scenrisk::io

#endif  // SCENRISK_SCENARIO_IO_HPP
