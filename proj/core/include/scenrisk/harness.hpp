#ifndef SCENRISK_HARNESS_HPP
#define SCENRISK_HARNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "scenrisk/sim.hpp"

namespace scenrisk::harness {

struct Metrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double accuracy = 0.0;
};

/// Precision, recall, F1 = 2PR/(P+R), and accuracy from confusion counts.
/// Every 0/0 resolves to 0.
Metrics metrics_from_confusion(std::size_t tp, std::size_t fn, std::size_t fp,
                               std::size_t tn);

struct ScenarioOutcome {
  std::string name;
  bool truth_label = false;  // a collision occurred in the truth stream
  bool rsr_predicted = false;
  bool baseline_predicted = false;
  std::optional<double> first_collision;
  std::optional<double> rsr_first_alarm;
  std::optional<double> baseline_first_alarm;
  std::vector<sim::StepBounds> bounds;  // per-step risk bounds
  double runtime_seconds = 0.0;
  std::string error;  // non-empty: run failed, excluded from aggregates
};

struct DetectorAggregate {
  std::string algorithm;
  std::string parameters;
  std::size_t tp = 0, fn = 0, fp = 0, tn = 0;
  Metrics metrics;
  /// first_collision - first_alarm over true positives where the alarm
  /// precedes the collision (late alarms are not anticipatory).
  std::vector<double> alarm_to_collision;
  std::vector<double> runtimes;  // per-scenario wall seconds when timed
};

struct BenchmarkResult {
  std::vector<ScenarioOutcome> outcomes;  // sorted by scenario file name
  DetectorAggregate rsr;
  DetectorAggregate baseline;
  double gamma = 0.9;
  bool timing = false;
};

/// Run every scenario file (*.json, sorted by name) in the corpus directory
/// under both detectors with per-scenario seeds derived from `seed`.
/// Scenario failures are recorded in the outcome and excluded from the
/// aggregates. `jobs` > 1 dispatches scenarios to a worker pool; results
/// are identical regardless of job count. Throws SchemaError-compatible
/// runtime errors when the corpus is empty.
BenchmarkResult run_benchmark(const std::string& corpus_dir,
                              const sim::MonitorConfig& config, std::uint64_t seed,
                              int jobs = 1, bool timing = false);

/// Metrics table: one row per detector. Runtime columns contain "na"
/// unless the run was timed (timing breaks byte-for-byte determinism).
std::string to_csv(const BenchmarkResult& result);

/// One JSON line per scenario with labels, alarm/collision times, and the
/// per-step (lower, upper) risk-bound trajectory.
std::string to_trace_jsonl(const BenchmarkResult& result);

/// One JSON line per simulation step (truth and perceived scenes, active
/// faults, collision flag) for offline analysis.
std::string simlog_to_jsonl(const sim::SimLog& log);

double mean(const std::vector<double>& xs);
double median(std::vector<double> xs);

}  // namespace scenrisk::harness

#endif  // SCENRISK_HARNESS_HPP
