#include "scenrisk/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "scenrisk/rng.hpp"
#include "scenrisk/scenario_io.hpp"

namespace scenrisk::harness {

namespace {

using nlohmann::json;

std::string format_fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

std::string format_short(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", x);
  return buf;
}

json agent_json(const AgentState& a) {
  json j;
  j["id"] = a.id;
  j["position"] = json::array({a.position.x, a.position.y});
  j["heading"] = a.heading;
  j["speed"] = a.speed;
  j["extent"] = json::array({a.extent.x, a.extent.y});
  return j;
}

void aggregate_detector(DetectorAggregate& agg, const BenchmarkResult& result,
                        bool baseline) {
  for (const ScenarioOutcome& o : result.outcomes) {
    if (!o.error.empty()) continue;
    const bool predicted = baseline ? o.baseline_predicted : o.rsr_predicted;
    const auto first_alarm = baseline ? o.baseline_first_alarm : o.rsr_first_alarm;
    if (o.truth_label && predicted)
      ++agg.tp;
    else if (o.truth_label && !predicted)
      ++agg.fn;
    else if (!o.truth_label && predicted)
      ++agg.fp;
    else
      ++agg.tn;
    if (o.truth_label && predicted && o.first_collision && first_alarm) {
      const double lead = *o.first_collision - *first_alarm;
      if (lead >= 0.0) agg.alarm_to_collision.push_back(lead);
    }
    agg.runtimes.push_back(o.runtime_seconds);
  }
  agg.metrics = metrics_from_confusion(agg.tp, agg.fn, agg.fp, agg.tn);
}

void append_csv_row(std::ostringstream& out, const DetectorAggregate& agg, bool timing) {
  out << agg.algorithm << ",\"" << agg.parameters << "\","
      << format_fixed(agg.metrics.f1) << "," << format_fixed(agg.metrics.accuracy) << ","
      << format_fixed(agg.metrics.precision) << "," << format_fixed(agg.metrics.recall)
      << ",";
  if (agg.alarm_to_collision.empty())
    out << "na,na,";
  else
    out << format_fixed(mean(agg.alarm_to_collision)) << ","
        << format_fixed(median(agg.alarm_to_collision)) << ",";
  if (timing && !agg.runtimes.empty())
    out << format_fixed(mean(agg.runtimes)) << "," << format_fixed(median(agg.runtimes));
  else
    out << "na,na";
  out << "\n";
}

}  // namespace

double mean(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double total = 0.0;
  for (double x : xs) total += x;
  return total / static_cast<double>(xs.size());
}

double median(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size() / 2;
  if (xs.size() % 2 == 1) return xs[m];
  return 0.5 * (xs[m - 1] + xs[m]);
}

Metrics metrics_from_confusion(std::size_t tp, std::size_t fn, std::size_t fp,
                               std::size_t tn) {
  Metrics m;
  const double tp_d = static_cast<double>(tp);
  const double denom_p = static_cast<double>(tp + fp);
  const double denom_r = static_cast<double>(tp + fn);
  m.precision = denom_p > 0.0 ? tp_d / denom_p : 0.0;
  m.recall = denom_r > 0.0 ? tp_d / denom_r : 0.0;
  m.f1 = (m.precision + m.recall) > 0.0
             ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
  const double total = static_cast<double>(tp + fn + fp + tn);
  m.accuracy = total > 0.0 ? static_cast<double>(tp + tn) / total : 0.0;
  return m;
}

BenchmarkResult run_benchmark(const std::string& corpus_dir,
                              const sim::MonitorConfig& config, std::uint64_t seed,
                              int jobs, bool timing) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  {
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(corpus_dir, ec)) {
      if (entry.path().extension() == ".json") files.push_back(entry.path().string());
    }
    if (ec) throw io::SchemaError("cannot read corpus directory: " + corpus_dir);
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw io::SchemaError("no scenarios in " + corpus_dir);

  BenchmarkResult result;
  result.gamma = config.detector.gamma;
  result.timing = timing;
  result.outcomes.resize(files.size());

  sim::MonitorConfig run_config = config;
  run_config.run_rsr = true;
  run_config.run_baseline = true;

  const RandomStream root(seed);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= files.size()) return;
      ScenarioOutcome& out = result.outcomes[idx];
      out.name = fs::path(files[idx]).stem().string();
      try {
        const ScenarioSpec spec = io::load_scenario(files[idx]);
        const std::uint64_t scenario_seed = root.substream({idx}).next_u64();
        const auto t0 = std::chrono::steady_clock::now();
        const sim::SimLog log = sim::run_scenario(spec, run_config, scenario_seed);
        const auto t1 = std::chrono::steady_clock::now();
        out.runtime_seconds = std::chrono::duration<double>(t1 - t0).count();
        out.truth_label = log.first_collision_time.has_value();
        out.first_collision = log.first_collision_time;
        out.rsr_predicted = !log.alarms.empty();
        out.rsr_first_alarm = log.first_alarm_time();
        out.baseline_predicted = !log.baseline_alarms.empty();
        out.baseline_first_alarm = log.first_baseline_alarm_time();
        out.bounds = log.bounds;
      } catch (const std::exception& e) {
        out.error = e.what();
      }
    }
  };

  const int thread_count = std::max(1, jobs);
  if (thread_count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(thread_count));
    for (int i = 0; i < thread_count; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::ostringstream rsr_params, base_params;
  rsr_params << "p=" << format_short(config.detector.p)
             << " gamma=" << format_short(config.detector.gamma)
             << " alpha=" << format_short(config.detector.alpha)
             << " n=" << config.detector.n << " cost="
             << (config.cost.metric == costs::CostMetric::Msd ? "msd" : "ttc");
  base_params << "gamma=" << format_short(config.detector.gamma)
              << " n=" << config.detector.n;

  result.rsr.algorithm = "RSR";
  result.rsr.parameters = rsr_params.str();
  aggregate_detector(result.rsr, result, false);
  result.baseline.algorithm = "Collision Probability";
  result.baseline.parameters = base_params.str();
  aggregate_detector(result.baseline, result, true);
  return result;
}

std::string to_csv(const BenchmarkResult& result) {
  std::ostringstream out;
  out << "Algorithm,Parameters,F1 Score,Accuracy,Precision,Recall,"
         "Alarm-to-Collision Mean [s],Alarm-to-Collision Median [s],"
         "Runtime Mean [s],Runtime Median [s]\n";
  append_csv_row(out, result.rsr, result.timing);
  append_csv_row(out, result.baseline, result.timing);
  return out.str();
}

std::string to_trace_jsonl(const BenchmarkResult& result) {
  std::ostringstream out;
  for (const ScenarioOutcome& o : result.outcomes) {
    json j;
    j["scenario"] = o.name;
    j["gamma"] = result.gamma;
    if (!o.error.empty()) {
      j["error"] = o.error;
      out << j.dump() << "\n";
      continue;
    }
    j["truth_label"] = o.truth_label;
    j["rsr_predicted"] = o.rsr_predicted;
    j["baseline_predicted"] = o.baseline_predicted;
    j["first_collision"] = o.first_collision ? json(*o.first_collision) : json(nullptr);
    j["rsr_first_alarm"] = o.rsr_first_alarm ? json(*o.rsr_first_alarm) : json(nullptr);
    j["baseline_first_alarm"] =
        o.baseline_first_alarm ? json(*o.baseline_first_alarm) : json(nullptr);
    json bounds = json::array();
    for (const sim::StepBounds& b : o.bounds)
      bounds.push_back(json::array({b.lower, b.upper}));
    j["bounds"] = bounds;
    out << j.dump() << "\n";
  }
  return out.str();
}

std::string simlog_to_jsonl(const sim::SimLog& log) {
  std::ostringstream out;
  for (const sim::SimStep& step : log.steps) {
    json j;
    j["t"] = step.time;
    j["collision"] = step.collision;
    j["active_faults"] = step.active_faults;
    json truth;
    truth["ego"] = agent_json(step.truth.ego);
    json agents = json::array();
    for (const AgentState& a : step.truth.agents) agents.push_back(agent_json(a));
    truth["agents"] = agents;
    j["truth"] = truth;
    json perceived;
    perceived["ego"] = agent_json(step.perceived.ego);
    json perceived_agents = json::array();
    for (const AgentState& a : step.perceived.agents)
      perceived_agents.push_back(agent_json(a));
    perceived["agents"] = perceived_agents;
    j["perceived"] = perceived;
    out << j.dump() << "\n";
  }
  return out.str();
}

}  // namespace scenrisk::harness
