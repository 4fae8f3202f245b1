// Command-line front end: closed-loop simulation, single-scenario detection,
// corpus benchmarking, and confidence-band queries.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "scenrisk/harness.hpp"
#include "scenrisk/scenario_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitRuntime = 3;

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

int run_simulate(const std::string& scenario_path, std::uint64_t seed,
                 const std::string& out_path, const std::string& config_path) {
  scenrisk::sim::MonitorConfig config;
  if (!config_path.empty()) config = scenrisk::io::load_config(config_path);
  config.run_rsr = false;
  config.run_baseline = false;
  const auto spec = scenrisk::io::load_scenario(scenario_path);
  const auto log = scenrisk::sim::run_scenario(spec, config, seed);
  const std::string jsonl = scenrisk::harness::simlog_to_jsonl(log);
  if (out_path.empty() || out_path == "-")
    std::cout << jsonl;
  else
    write_text_file(out_path, jsonl);
  std::cout << "steps: " << log.steps.size() << "\n";
  if (log.first_collision_time)
    std::cout << "first_collision: " << *log.first_collision_time << " s\n";
  else
    std::cout << "first_collision: none\n";
  return kExitOk;
}

int run_detect(const std::string& scenario_path, const std::string& detector,
               const std::string& cost, double p, double gamma, double alpha,
               std::size_t n, std::uint64_t seed, const std::string& config_path) {
  scenrisk::sim::MonitorConfig config;
  if (!config_path.empty()) config = scenrisk::io::load_config(config_path);
  config.detector = scenrisk::stats::DetectorParams(p, gamma, alpha, n);
  if (cost == "msd")
    config.cost.metric = scenrisk::costs::CostMetric::Msd;
  else if (cost == "ttc")
    config.cost.metric = scenrisk::costs::CostMetric::Ttc;
  else
    throw scenrisk::io::SchemaError("unknown cost metric: " + cost);

  const bool use_rsr = detector == "rsr";
  if (!use_rsr && detector != "collision-prob")
    throw scenrisk::io::SchemaError("unknown detector: " + detector);
  config.run_rsr = use_rsr;
  config.run_baseline = !use_rsr;

  const auto spec = scenrisk::io::load_scenario(scenario_path);
  const auto log = scenrisk::sim::run_scenario(spec, config, seed);

  if (use_rsr) {
    for (const auto& alarm : log.alarms)
      std::printf("alarm t=%.1f tau=%d lower=%.4f upper=%.4f\n", alarm.time, alarm.tau,
                  alarm.lower, alarm.upper);
  } else {
    for (double t : log.baseline_alarms) std::printf("alarm t=%.1f\n", t);
  }
  const bool predicted = use_rsr ? !log.alarms.empty() : !log.baseline_alarms.empty();
  std::printf("predicted: %s\n", predicted ? "high-risk" : "low-risk");
  if (log.first_collision_time)
    std::printf("truth: collision at %.1f s\n", *log.first_collision_time);
  else
    std::printf("truth: no collision\n");
  return kExitOk;
}

int run_bench(const std::string& corpus, const std::string& config_path,
              const std::string& csv_path, const std::string& traces_path,
              std::uint64_t seed, int jobs, bool timing) {
  scenrisk::sim::MonitorConfig config;
  if (!config_path.empty()) config = scenrisk::io::load_config(config_path);
  const auto result = scenrisk::harness::run_benchmark(corpus, config, seed, jobs, timing);
  const std::string csv = scenrisk::harness::to_csv(result);
  if (csv_path.empty() || csv_path == "-")
    std::cout << csv;
  else
    write_text_file(csv_path, csv);
  if (!traces_path.empty())
    write_text_file(traces_path, scenrisk::harness::to_trace_jsonl(result));

  std::size_t failures = 0;
  for (const auto& o : result.outcomes)
    if (!o.error.empty()) {
      ++failures;
      std::cerr << "scenario " << o.name << " failed: " << o.error << "\n";
    }
  std::printf("scenarios: %zu (%zu failed)\n", result.outcomes.size(), failures);
  std::printf("RSR: F1=%.4f acc=%.4f prec=%.4f rec=%.4f (tp=%zu fn=%zu fp=%zu tn=%zu)\n",
              result.rsr.metrics.f1, result.rsr.metrics.accuracy,
              result.rsr.metrics.precision, result.rsr.metrics.recall, result.rsr.tp,
              result.rsr.fn, result.rsr.fp, result.rsr.tn);
  std::printf(
      "Collision Probability: F1=%.4f acc=%.4f prec=%.4f rec=%.4f (tp=%zu fn=%zu fp=%zu "
      "tn=%zu)\n",
      result.baseline.metrics.f1, result.baseline.metrics.accuracy,
      result.baseline.metrics.precision, result.baseline.metrics.recall,
      result.baseline.tp, result.baseline.fn, result.baseline.fp, result.baseline.tn);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Task-aware risk estimation of perception failures"};
  app.require_subcommand(1);

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Run a scenario and dump a step log");
  std::string sim_scenario, sim_out, sim_config;
  std::uint64_t sim_seed = 0;
  simulate->add_option("--scenario", sim_scenario, "Scenario JSON file")->required();
  simulate->add_option("--seed", sim_seed, "Random seed");
  simulate->add_option("--out", sim_out, "Output JSONL path (default stdout)");
  simulate->add_option("--config", sim_config, "Monitor config JSON");

  // detect
  auto* detect = app.add_subcommand("detect", "Run a detector on one scenario");
  std::string det_scenario, det_detector = "rsr", det_cost = "msd", det_config;
  double det_p = 0.99, det_gamma = 0.9, det_alpha = 0.1;
  std::size_t det_n = 1000;
  std::uint64_t det_seed = 0;
  detect->add_option("--scenario", det_scenario, "Scenario JSON file")->required();
  detect->add_option("--detector", det_detector, "rsr or collision-prob");
  detect->add_option("--cost", det_cost, "msd or ttc");
  detect->add_option("--p", det_p, "Risk-aversion quantile");
  detect->add_option("--gamma", det_gamma, "Risk threshold");
  detect->add_option("--alpha", det_alpha, "1 - confidence");
  detect->add_option("--n", det_n, "Samples per scene");
  detect->add_option("--seed", det_seed, "Random seed");
  detect->add_option("--config", det_config, "Monitor config JSON");

  // bench
  auto* bench = app.add_subcommand("bench", "Benchmark both detectors on a corpus");
  std::string bench_corpus, bench_config, bench_csv, bench_traces;
  std::uint64_t bench_seed = 0;
  int bench_jobs = 1;
  bool bench_timing = false;
  bench->add_option("--corpus", bench_corpus, "Directory of scenario JSON files")->required();
  bench->add_option("--config", bench_config, "Monitor config JSON");
  bench->add_option("--csv", bench_csv, "CSV output path (default stdout)");
  bench->add_option("--traces", bench_traces, "Risk-trace JSONL output path");
  bench->add_option("--seed", bench_seed, "Random seed");
  bench->add_option("--jobs", bench_jobs, "Worker threads");
  bench->add_flag("--timing", bench_timing,
                  "Fill runtime columns (breaks byte-identical output)");

  // epsilon
  auto* epsilon = app.add_subcommand("epsilon", "Print the DKW confidence half-width");
  double eps_alpha = 0.1;
  std::size_t eps_n = 1000;
  epsilon->add_option("--alpha", eps_alpha, "1 - confidence")->required();
  epsilon->add_option("--n", eps_n, "Sample count")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (simulate->parsed()) return run_simulate(sim_scenario, sim_seed, sim_out, sim_config);
    if (detect->parsed())
      return run_detect(det_scenario, det_detector, det_cost, det_p, det_gamma, det_alpha,
                        det_n, det_seed, det_config);
    if (bench->parsed())
      return run_bench(bench_corpus, bench_config, bench_csv, bench_traces, bench_seed,
                       bench_jobs, bench_timing);
    if (epsilon->parsed()) {
      std::printf("%.12f\n", scenrisk::stats::dkw_epsilon(eps_alpha, eps_n));
      return kExitOk;
    }
  } catch (const scenrisk::io::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
