// End-to-end acceptance gate for the risk-monitoring toolkit.
//
// Each criterion prints exactly one line:
//   [PASS|FAIL] <criterion> <detail>
// and the process exits non-zero if any criterion fails. The checks cover
// statistical coverage of the risk bounds, agreement with exhaustively
// enumerable joints, bound sharpness, reporting formulas, the shipped
// scenario corpus, numeric precision, bitwise reproducibility, and six
// randomized invariant suites of at least 1000 cases each.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "scenrisk/ecdf.hpp"
#include "scenrisk/faults.hpp"
#include "scenrisk/harness.hpp"
#include "scenrisk/plausible.hpp"
#include "scenrisk/risk.hpp"
#include "scenrisk/rng.hpp"
#include "scenrisk/scenario_io.hpp"
#include "scenrisk/sim.hpp"
#include "scenrisk/types.hpp"

namespace {

using namespace scenrisk;

struct Outcome {
  bool pass = false;
  std::string detail;
};

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  char buf[768];
  std::snprintf(buf, sizeof(buf), f, args...);
  return buf;
}

void run_criterion(const char* name, const std::function<Outcome()>& fn,
                   int& failures) {
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  std::printf("[%s] %-22s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

// ---------------------------------------------------------------------------
// Shared scene builders for the randomized suites.

std::shared_ptr<MapContext> straight_map() {
  auto map = std::make_shared<MapContext>();
  Lane lane;
  lane.id = 1;
  lane.centerline = {{-50.0, 0.0}, {350.0, 0.0}};
  lane.speed_limit = 13.0;
  lane.forward = true;
  map->lanes.push_back(lane);
  map->traffic_lights.push_back({50, 1, 200.0, LightState::Red});
  return map;
}

EgoState make_ego(double x, double speed) {
  EgoState ego;
  ego.id = 0;
  ego.kind = AgentKind::Vehicle;
  ego.position = {x, 0.0};
  ego.heading = 0.0;
  ego.speed = speed;
  ego.extent = {2.25, 1.0};
  ego.route = {1};
  return ego;
}

AgentState make_agent(AgentId id, double x, double y, double heading, double speed) {
  AgentState a;
  a.id = id;
  a.kind = AgentKind::Vehicle;
  a.position = {x, y};
  a.heading = heading;
  a.speed = speed;
  a.extent = {2.25, 1.0};
  return a;
}

FaultSpec fault_for_mode(int mode_index, const WorldState& world, std::size_t pick) {
  FaultSpec spec;
  switch (mode_index % 7) {
    case 0:
      spec.mode = FaultMode::MisdetectOrientation;
      spec.target = world.agents[pick % world.agents.size()].id;
      break;
    case 1:
      spec.mode = FaultMode::MisdetectSize;
      spec.target = world.agents[pick % world.agents.size()].id;
      break;
    case 2:
      spec.mode = FaultMode::MisdetectVelocity;
      spec.target = world.agents[pick % world.agents.size()].id;
      break;
    case 3:
      spec.mode = FaultMode::MissingObstacle;
      spec.subtype = FaultSubtype::InPath;
      spec.target = world.agents[pick % world.agents.size()].id;
      break;
    case 4:
      spec.mode = FaultMode::GhostObstacle;
      spec.subtype = (pick % 2 == 0) ? FaultSubtype::InPath : FaultSubtype::NotInPath;
      spec.target = 100;
      break;
    case 5:
      spec.mode = FaultMode::MisdetectTrafficLight;
      spec.target = 50;
      break;
    default:
      spec.mode = FaultMode::Mislocalization;
      break;
  }
  return spec;
}

// ---------------------------------------------------------------------------
// 1. Coverage of the probabilistic risk envelope across joint structures.

Outcome pac_coverage() {
  const double alpha = 0.1;
  const std::size_t n = 1000;
  const int trials = 1000;
  const double quantiles[] = {0.9, 0.95, 0.99};
  const RandomStream root(0xACC1);

  double min_coverage = 1.0;
  for (int kind = 0; kind < 3; ++kind) {        // matched, opposed, independent
    for (int qi = 0; qi < 3; ++qi) {
      const double p = quantiles[qi];
      const double truth =
          kind == 0 ? 0.0 : (kind == 1 ? (1.0 - p) / p : 1.0 - p);
      int covered = 0;
      for (int t = 0; t < trials; ++t) {
        RandomStream s = root.substream({static_cast<std::uint64_t>(kind),
                                         static_cast<std::uint64_t>(qi),
                                         static_cast<std::uint64_t>(t)});
        std::vector<double> a(n), b(n);
        for (std::size_t i = 0; i < n; ++i) {
          const double u = s.uniform01();
          a[i] = u;
          if (kind == 0)
            b[i] = u;
          else if (kind == 1)
            b[i] = 1.0 - u;
          else
            b[i] = s.uniform01();
        }
        const stats::RiskBounds rb = stats::rsr_bounds(a, b, p, alpha);
        if (rb.lower <= truth + 1e-12 && truth <= rb.upper + 1e-12) ++covered;
      }
      min_coverage = std::min(min_coverage, covered / static_cast<double>(trials));
    }
  }
  Outcome o;
  o.pass = min_coverage >= 0.90;
  o.detail = fmt("min coverage %.1f%% over 9 joint/quantile settings, "
                 "1000 trials each (need >= 90%%)",
                 100.0 * min_coverage);
  return o;
}

// ---------------------------------------------------------------------------
// 2. Bounds must bracket the exactly enumerable risk of small discrete joints.

Outcome bound_vs_enumeration() {
  const double alpha = 0.1;
  const std::size_t n = 5000;
  const RandomStream root(0xACC2);
  int total = 0;
  int covered = 0;

  for (int trial = 0; trial < 200; ++trial) {
    RandomStream gen = root.substream({static_cast<std::uint64_t>(trial), 1});
    const int k = 2 + trial % 4;  // 2..5 atoms
    std::vector<double> av(k), bv(k), w(k);
    double wsum = 0.0;
    for (int i = 0; i < k; ++i) {
      av[i] = gen.uniform01();
      bv[i] = gen.uniform01();
      w[i] = gen.uniform01();
      wsum += w[i];
    }
    for (double& x : w) x /= wsum;
    std::vector<double> cum(k);
    double run = 0.0;
    for (int i = 0; i < k; ++i) {
      run += w[i];
      cum[i] = run;
    }
    cum[k - 1] = 1.0;

    RandomStream samp = root.substream({static_cast<std::uint64_t>(trial), 2});
    std::vector<double> a(n), b(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double u = samp.uniform01();
      int idx = 0;
      while (idx < k - 1 && cum[idx] < u) ++idx;
      a[j] = av[idx];
      b[j] = bv[idx];
    }

    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int l, int r) { return av[l] < av[r]; });

    for (int pi = 1; pi <= 19; ++pi) {
      const double p = 0.05 * pi;
      double phi = 0.0;
      double theta = av[order.back()];
      for (int oi : order) {
        phi += w[oi];
        if (phi >= p) {
          theta = av[oi];
          break;
        }
      }
      double mass_cond = 0.0, mass_exceed = 0.0;
      for (int i = 0; i < k; ++i) {
        if (av[i] <= theta) {
          mass_cond += w[i];
          if (bv[i] > theta) mass_exceed += w[i];
        }
      }
      const double exact = mass_exceed / mass_cond;
      const stats::RiskBounds rb = stats::rsr_bounds(a, b, p, alpha);
      ++total;
      if (rb.lower <= exact + 1e-12 && exact <= rb.upper + 1e-12) ++covered;
    }
  }

  Outcome o;
  const double frac = covered / static_cast<double>(total);
  o.pass = frac >= 0.95;
  o.detail = fmt("enumerated risk inside bounds for %d/%d joint/quantile pairs "
                 "(%.1f%%, need >= 95%%)",
                 covered, total, 100.0 * frac);
  return o;
}

// ---------------------------------------------------------------------------
// 3. Sharpness: identical samples pin the lower bound at exactly zero;
//    fully separated samples reach the best achievable 1 - eps/p.

Outcome bound_sharpness() {
  const std::size_t n = 1000;
  const double p = 0.99, alpha = 0.1;
  RandomStream s(0xACC3);
  std::vector<double> base(n);
  for (double& x : base) x = s.uniform01();

  const stats::RiskBounds same = stats::rsr_bounds(base, base, p, alpha);
  const bool identical_ok = same.lower == 0.0;

  std::vector<double> above(n);
  for (std::size_t i = 0; i < n; ++i) above[i] = base[i] + 10.0;
  const stats::RiskBounds split = stats::rsr_bounds(base, above, p, alpha);
  const double target = 0.960906792321162;
  const bool separated_ok =
      std::abs(split.lower - target) <= 1e-6 && split.upper == 1.0;

  Outcome o;
  o.pass = identical_ok && separated_ok;
  o.detail = fmt("identical lower=%.3g (want exactly 0), separated "
                 "lower=%.15f (want %.15f +/- 1e-6)",
                 same.lower, split.lower, target);
  return o;
}

// ---------------------------------------------------------------------------
// 4. Reported confusion metrics reproduce hand-computed reference values.

Outcome metric_formulas() {
  const harness::Metrics m = harness::metrics_from_confusion(22, 2, 5, 71);
  const double tol = 0.005;
  const bool ok = std::abs(m.precision - 0.8148148148148148) <= tol &&
                  std::abs(m.recall - 0.9166666666666666) <= tol &&
                  std::abs(m.f1 - 0.8627450980392157) <= tol &&
                  std::abs(m.accuracy - 0.93) <= tol;
  Outcome o;
  o.pass = ok;
  o.detail = fmt("precision=%.4f recall=%.4f f1=%.4f accuracy=%.4f "
                 "(targets 0.8148/0.9167/0.8627/0.9300 +/- 0.005)",
                 m.precision, m.recall, m.f1, m.accuracy);
  return o;
}

// ---------------------------------------------------------------------------
// 5 & 7. Full corpus benchmark: detection quality, anticipation, runtime,
//         and bitwise reproducibility across reruns with the same seed.

struct BenchState {
  sim::MonitorConfig config;
  std::uint64_t seed = 2024;
  bool ran = false;
  std::string csv;
  std::string trace;
};

Outcome corpus_benchmark(BenchState& state) {
  state.config = io::load_config(SCENRISK_CONFIG_PATH);
  const auto t0 = std::chrono::steady_clock::now();
  const harness::BenchmarkResult result =
      harness::run_benchmark(SCENRISK_CORPUS_DIR, state.config, state.seed, 1);
  const auto t1 = std::chrono::steady_clock::now();
  const double secs = std::chrono::duration<double>(t1 - t0).count();

  state.csv = harness::to_csv(result);
  state.trace = harness::to_trace_jsonl(result);
  state.ran = true;

  std::size_t errors = 0;
  for (const auto& outcome : result.outcomes)
    if (!outcome.error.empty()) ++errors;
  std::vector<double> atc = result.rsr.alarm_to_collision;
  const double atc_median = harness::median(atc);

  const bool ok = errors == 0 && result.rsr.metrics.recall >= 0.8 &&
                  result.rsr.metrics.precision >= 0.7 && !atc.empty() &&
                  atc_median >= 1.0 &&
                  result.rsr.metrics.f1 > result.baseline.metrics.f1 &&
                  secs < 600.0;
  Outcome o;
  o.pass = ok;
  o.detail = fmt("%zu scenarios: recall=%.3f precision=%.3f medianLead=%.2fs "
                 "f1=%.3f baselineF1=%.3f errors=%zu runtime=%.1fs "
                 "(need recall>=0.8 precision>=0.7 lead>=1.0 f1>baseline <600s)",
                 result.outcomes.size(), result.rsr.metrics.recall,
                 result.rsr.metrics.precision, atc_median, result.rsr.metrics.f1,
                 result.baseline.metrics.f1, errors, secs);
  return o;
}

Outcome benchmark_determinism(BenchState& state) {
  Outcome o;
  if (!state.ran) {
    o.pass = false;
    o.detail = "corpus benchmark did not run; nothing to compare";
    return o;
  }
  const harness::BenchmarkResult again =
      harness::run_benchmark(SCENRISK_CORPUS_DIR, state.config, state.seed, 1);
  const bool csv_same = harness::to_csv(again) == state.csv;
  const bool trace_same = harness::to_trace_jsonl(again) == state.trace;
  o.pass = csv_same && trace_same;
  o.detail = fmt("same-seed rerun: csv %s, trace %s",
                 csv_same ? "byte-identical" : "DIFFERS",
                 trace_same ? "byte-identical" : "DIFFERS");
  return o;
}

// ---------------------------------------------------------------------------
// 6. Confidence half-width formula at reference arguments.

Outcome confidence_halfwidth() {
  const double value = stats::dkw_epsilon(0.1, 1000);
  const double target = 0.0387022756020494936;
  Outcome o;
  o.pass = std::abs(value - target) <= 1e-12;
  o.detail = fmt("epsilon(0.1, 1000) = %.17g (target %.17g +/- 1e-12)", value, target);
  return o;
}

// ---------------------------------------------------------------------------
// 8. Randomized invariant suites, >= 1000 cases each.

bool suite_ecdf_galois(std::string& note) {
  const RandomStream root(0xACC8A);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    RandomStream s = root.substream({static_cast<std::uint64_t>(i)});
    const std::size_t n = 1 + static_cast<std::size_t>(s.uniform(0.0, 40.0));
    std::vector<double> xs(n);
    for (double& x : xs) x = s.uniform(-5.0, 5.0);
    const stats::Ecdf ecdf{xs};
    for (int j = 0; j < 5; ++j) {
      const double q = s.uniform01();
      const double x = s.uniform(-6.0, 6.0);
      // Adjunction: quantile(q) <= x exactly when q <= eval(x).
      const bool left = ecdf.quantile(q) <= x;
      const bool right = q <= ecdf.eval(x);
      if (left != right) {
        note = fmt("adjunction broken at case %d", i);
        return false;
      }
      if (ecdf.eval(ecdf.quantile(q)) < q) {
        note = fmt("eval(quantile(q)) < q at case %d", i);
        return false;
      }
      ++checked;
    }
  }
  note = fmt("%d adjunction checks", checked);
  return true;
}

bool suite_band_shift(std::string& note) {
  const RandomStream root(0xACC8B);
  for (int i = 0; i < 1000; ++i) {
    RandomStream s = root.substream({static_cast<std::uint64_t>(i)});
    const std::size_t n = 2 + static_cast<std::size_t>(s.uniform(0.0, 48.0));
    std::vector<double> xs(n);
    for (double& x : xs) x = s.uniform(-5.0, 5.0);
    std::sort(xs.begin(), xs.end());
    const stats::Ecdf ecdf{xs};
    const double t = s.uniform01();
    const double eps = s.uniform(0.01, 0.5);

    // inf{c : eval(c) - eps >= t} must equal quantile(t + eps).
    double brute_hi = std::numeric_limits<double>::infinity();
    for (double c : xs)
      if (ecdf.eval(c) - eps >= t) {
        brute_hi = c;
        break;
      }
    const double q_hi = ecdf.quantile(t + eps);
    const bool hi_ok = (std::isinf(brute_hi) && std::isinf(q_hi) && q_hi > 0)
                           ? true
                           : brute_hi == q_hi;

    // inf{c : eval(c) + eps >= t} must equal quantile(t - eps); when the
    // shifted level drops to zero or below every c qualifies (infimum -inf).
    bool lo_ok;
    if (t - eps <= 0.0) {
      const double q_lo = ecdf.quantile(t - eps);
      lo_ok = std::isinf(q_lo) && q_lo < 0;
    } else {
      double brute_lo = std::numeric_limits<double>::infinity();
      for (double c : xs)
        if (ecdf.eval(c) + eps >= t) {
          brute_lo = c;
          break;
        }
      lo_ok = brute_lo == ecdf.quantile(t - eps);
    }
    if (!hi_ok || !lo_ok) {
      note = fmt("band shift mismatch at case %d", i);
      return false;
    }
  }
  note = "1000 shifted-band inversions";
  return true;
}

bool suite_joint_envelope(std::string& note) {
  const RandomStream root(0xACC8C);
  for (int i = 0; i < 1000; ++i) {
    RandomStream s = root.substream({static_cast<std::uint64_t>(i)});
    const std::size_t n = 2 + static_cast<std::size_t>(s.uniform(0.0, 58.0));
    std::vector<double> a(n), b(n);
    const int kind = i % 4;
    for (std::size_t j = 0; j < n; ++j) {
      a[j] = s.uniform01();
      if (kind == 0)
        b[j] = a[j];
      else if (kind == 1)
        b[j] = 1.0 - a[j];
      else if (kind == 2)
        b[j] = s.uniform01();
      else
        b[j] = a[j] + 0.1 * s.normal();
    }
    const double x = s.uniform(-0.5, 1.5);
    const double y = s.uniform(-0.5, 1.5);
    std::size_t ca = 0, cb = 0, cab = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const bool in_a = a[j] <= x;
      const bool in_b = b[j] <= y;
      ca += in_a;
      cb += in_b;
      cab += in_a && in_b;
    }
    const double nf = static_cast<double>(n);
    const auto [w, m] = stats::frechet_bounds(ca / nf, cb / nf);
    const double h = cab / nf;
    if (h < w - 1e-12 || h > m + 1e-12) {
      note = fmt("joint CDF escaped the envelope at case %d", i);
      return false;
    }
  }
  note = "1000 joint-CDF envelope checks";
  return true;
}

bool suite_rank_equivariance(std::string& note) {
  const RandomStream root(0xACC8D);
  for (int i = 0; i < 1000; ++i) {
    RandomStream s = root.substream({static_cast<std::uint64_t>(i)});
    const std::size_t n = 2 + static_cast<std::size_t>(s.uniform(0.0, 198.0));
    std::vector<double> a(n), b(n), ta(n), tb(n);
    const double scale = std::exp(s.uniform(-2.0, 2.0));
    const double shift = s.uniform(-10.0, 10.0);
    for (std::size_t j = 0; j < n; ++j) {
      a[j] = s.uniform(-3.0, 3.0);
      b[j] = s.uniform(-3.0, 3.0);
      ta[j] = scale * a[j] + shift;
      tb[j] = scale * b[j] + shift;
    }
    const double p = s.uniform(0.05, 0.95);
    const double alpha = s.uniform(0.01, 0.5);
    const stats::RiskBounds r1 = stats::rsr_bounds(a, b, p, alpha);
    const stats::RiskBounds r2 = stats::rsr_bounds(ta, tb, p, alpha);
    if (r1.lower != r2.lower || r1.upper != r2.upper || r1.v_low != r2.v_low ||
        r1.v_high != r2.v_high) {
      note = fmt("bounds changed under a monotone rescaling at case %d", i);
      return false;
    }
  }
  note = "1000 monotone-transform comparisons";
  return true;
}

bool suite_fault_roundtrip(std::string& note) {
  const RandomStream root(0xACC8E);
  auto map = straight_map();
  for (int i = 0; i < 1050; ++i) {
    RandomStream gen = root.substream({static_cast<std::uint64_t>(i), 1});
    WorldState truth;
    truth.time = 0.0;
    truth.map = map;
    truth.ego = make_ego(gen.uniform(0.0, 30.0), gen.uniform(0.0, 13.0));
    const int agents = 1 + i % 3;
    for (int j = 0; j < agents; ++j)
      truth.agents.push_back(make_agent(j + 1, gen.uniform(5.0, 60.0),
                                        gen.uniform(-3.0, 3.0),
                                        gen.uniform(-3.1, 3.1),
                                        gen.uniform(0.0, 15.0)));

    const FaultSpec spec = fault_for_mode(i, truth, static_cast<std::size_t>(i / 7));
    RandomStream inject_stream = root.substream({static_cast<std::uint64_t>(i), 2});
    const faults::InjectResult res = faults::inject(truth, spec, true, inject_stream);
    if (!res.truth_hint) {
      note = fmt("active injection produced no diagnostic hint at case %d", i);
      return false;
    }
    WorldHistory history;
    history.dt = 0.1;
    history.states = {res.perceived};
    RandomStream rebuild_stream = root.substream({static_cast<std::uint64_t>(i), 3});
    const WorldState rebuilt = plausible::generate_plausible(
        history, {spec}, *res.truth_hint, plausible::NoiseModel{0.0, 0.0, 0.0},
        rebuild_stream);
    if (!(rebuilt == truth)) {
      note = fmt("zero-noise correction failed to restore the scene at case %d "
                 "(mode %d)",
                 i, i % 7);
      return false;
    }
  }
  note = "1050 corrupt-then-correct round trips across all 7 fault modes";
  return true;
}

bool suite_truth_independence(std::string& note) {
  const RandomStream root(0xACC8F);
  auto map = straight_map();
  sim::MonitorConfig quiet;
  quiet.run_rsr = false;
  quiet.run_baseline = false;

  for (int i = 0; i < 1000; ++i) {
    RandomStream gen = root.substream({static_cast<std::uint64_t>(i)});
    ScenarioSpec spec;
    spec.name = "randomized";
    spec.map = map;
    spec.initial.time = 0.0;
    spec.initial.map = map;
    spec.initial.ego = make_ego(0.0, gen.uniform(3.0, 13.0));
    const int agents = 1 + i % 2;
    for (int j = 0; j < agents; ++j)
      spec.initial.agents.push_back(make_agent(
          j + 1, gen.uniform(15.0, 40.0) + 30.0 * j, gen.uniform(-1.0, 1.0), 0.0,
          gen.uniform(0.0, 10.0)));
    FaultSpec fault = fault_for_mode(i, spec.initial, static_cast<std::size_t>(i));
    fault.timing = (i % 2 == 0) ? FaultTiming::Static : FaultTiming::Dynamic;
    spec.faults = {fault};
    spec.duration = 0.5;
    spec.dt = 0.1;

    ScenarioSpec clean = spec;
    clean.faults.clear();

    const std::uint64_t seed_a = 1000 + static_cast<std::uint64_t>(i);
    const std::uint64_t seed_b = 900000 + static_cast<std::uint64_t>(i);
    const sim::SimLog with_fault = sim::run_scenario(spec, quiet, seed_a);
    const sim::SimLog no_fault = sim::run_scenario(clean, quiet, seed_a);
    const sim::SimLog reseeded = sim::run_scenario(spec, quiet, seed_b);

    if (with_fault.steps.size() != no_fault.steps.size() ||
        with_fault.steps.size() != reseeded.steps.size()) {
      note = fmt("step counts diverged at case %d", i);
      return false;
    }
    for (std::size_t k = 0; k < with_fault.steps.size(); ++k) {
      if (!(with_fault.steps[k].truth == no_fault.steps[k].truth) ||
          !(with_fault.steps[k].truth == reseeded.steps[k].truth)) {
        note = fmt("truth stream depends on faults or seed at case %d step %zu",
                   i, k);
        return false;
      }
    }
    if (with_fault.first_collision_time != no_fault.first_collision_time ||
        with_fault.first_collision_time != reseeded.first_collision_time) {
      note = fmt("collision time depends on faults or seed at case %d", i);
      return false;
    }
  }
  note = "1000 scenario triples (fault on/off, reseeded)";
  return true;
}

Outcome invariant_suites() {
  struct Suite {
    const char* name;
    bool (*fn)(std::string&);
  };
  const Suite suites[] = {
      {"ecdf-adjunction", suite_ecdf_galois},
      {"band-shift", suite_band_shift},
      {"joint-envelope", suite_joint_envelope},
      {"rank-equivariance", suite_rank_equivariance},
      {"fault-roundtrip", suite_fault_roundtrip},
      {"truth-independence", suite_truth_independence},
  };
  Outcome o;
  o.pass = true;
  std::string summary;
  for (const Suite& suite : suites) {
    std::string note;
    const bool ok = suite.fn(note);
    if (!ok) {
      o.pass = false;
      o.detail = fmt("%s: %s", suite.name, note.c_str());
      return o;
    }
    if (!summary.empty()) summary += "; ";
    summary += suite.name;
  }
  o.detail = "6 suites passed (" + summary + "), >= 1000 randomized cases each";
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  BenchState bench;

  run_criterion("pac-coverage", pac_coverage, failures);
  run_criterion("bound-vs-enumeration", bound_vs_enumeration, failures);
  run_criterion("bound-sharpness", bound_sharpness, failures);
  run_criterion("metric-formulas", metric_formulas, failures);
  run_criterion("corpus-benchmark", [&] { return corpus_benchmark(bench); },
                failures);
  run_criterion("confidence-halfwidth", confidence_halfwidth, failures);
  run_criterion("benchmark-determinism",
                [&] { return benchmark_determinism(bench); }, failures);
  run_criterion("invariant-suites", invariant_suites, failures);

  if (failures == 0) {
    std::printf("all 8 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
