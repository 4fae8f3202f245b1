// Scenario and config serialization: lossless round-trips over the shipped
// corpus, schema guards with field-naming messages, and config defaulting.
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "scenrisk/scenario_io.hpp"
#include "scenrisk/types.hpp"
#include "test_helpers.hpp"

using namespace scenrisk;
using namespace scenrisk::io;

namespace {

// Minimal well-formed scenario; individual tests break one field at a time.
std::string valid_json(const std::string& agents = "[]",
                       const std::string& faults = "[]",
                       const std::string& extra = "") {
  return std::string(R"({
    "schema_version": 1,
    "name": "unit",
    "map": {"lanes": [{"id": 1, "centerline": [[-50, 0], [350, 0]],
                       "speed_limit": 13.0, "forward": true}],
            "traffic_lights": []},
    "ego": {"id": 0, "position": [0, 0], "heading": 0.0, "speed": 13.0,
            "extent": [2.25, 1.0], "route": [1]},
    "agents": )") +
         agents + R"(, "faults": )" + faults + R"(, "duration": 2.0, "dt": 0.1)" +
         extra + "}";
}

std::string failure_message(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const SchemaError& e) {
    return e.what();
  }
  return "";  // did not throw
}

bool mentions(const std::string& msg, const std::string& needle) {
  return msg.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("every shipped scenario file survives an emit/parse round-trip") {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(SCENRISK_CORPUS_DIR))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  CHECK(files.size() == 25);

  for (const fs::path& file : files) {
    INFO("file: ", file.string());
    const ScenarioSpec spec = load_scenario(file.string());
    const std::string emitted = emit_scenario(spec);
    CHECK(emit_scenario(spec) == emitted);  // emission is deterministic
    const ScenarioSpec reparsed = parse_scenario(emitted);
    CHECK(reparsed == spec);
  }
}

TEST_CASE("a fully featured hand-built scenario round-trips exactly") {
  auto map = std::make_shared<MapContext>();
  map->lanes.push_back({1, {{-50.0, 0.0}, {350.0, 0.0}}, 13.0, true});
  map->lanes.push_back({2, {{350.0, 3.5}, {-50.0, 3.5}}, 13.0, true});
  map->traffic_lights.push_back({50, 1, 205.0, LightState::Red});

  ScenarioSpec spec;
  spec.name = "round-trip";
  spec.map = map;
  spec.initial.map = map;
  spec.initial.ego = testutil::make_ego(0.0, 0.0, 0.0, 13.0);
  spec.initial.agents.push_back(testutil::make_agent(3, 40.0, 0.0, 0.0, 10.0));
  spec.initial.agents.push_back(
      testutil::make_agent(4, 100.0, 3.5, 0.25, 2.0, AgentKind::Bicycle));
  AgentPolicy replay;
  replay.agent = 3;
  replay.kind = PolicyKind::Replay;
  replay.trajectory = {{{40.0, 0.0}, 0.0, 10.0}, {{41.0, 0.0}, 0.0, 10.0}};
  AgentPolicy idm;
  idm.agent = 4;
  idm.kind = PolicyKind::Idm;
  spec.policies = {replay, idm};
  FaultSpec fault;
  fault.mode = FaultMode::MissingObstacle;
  fault.subtype = FaultSubtype::InPath;
  fault.timing = FaultTiming::Dynamic;
  fault.target = 3;
  fault.params = FaultParams{0.5, 0.1};
  spec.faults = {fault};
  spec.duration = 4.0;
  spec.dt = 0.1;

  const ScenarioSpec reparsed = parse_scenario(emit_scenario(spec));
  CHECK(reparsed == spec);
  CHECK(reparsed.find_policy(3)->trajectory.size() == 2);
  CHECK(reparsed.find_policy(4)->kind == PolicyKind::Idm);
  CHECK(reparsed.faults[0].params->mean == 0.5);
  CHECK(reparsed.faults[0].timing == FaultTiming::Dynamic);
}

TEST_CASE("schema problems are reported by field name") {
  SUBCASE("unsupported schema version") {
    const auto msg = failure_message(
        [] { parse_scenario(valid_json("[]", "[]", R"(, "schema_version_x": 0)")); });
    CHECK(msg.empty());  // extra keys are ignored, file still valid
    const auto bad = failure_message([] {
      std::string j = valid_json();
      const auto pos = j.find("\"schema_version\": 1");
      j.replace(pos, 19, "\"schema_version\": 2");
      parse_scenario(j);
    });
    CHECK(mentions(bad, "schema_version"));
  }
  SUBCASE("missing top-level blocks") {
    CHECK(mentions(failure_message([] { parse_scenario(R"({"ego": {}})"); }),
                   "map: missing"));
    CHECK(mentions(failure_message([] { parse_scenario(R"({"map": {}})"); }),
                   "ego: missing"));
  }
  SUBCASE("malformed JSON text") {
    CHECK_THROWS_AS(parse_scenario("{ not json"), SchemaError);
  }
  SUBCASE("vector fields must be two-element arrays") {
    const auto msg = failure_message([] {
      parse_scenario(valid_json(R"([{"id": 3, "position": [1, 2, 3]}])"));
    });
    CHECK(mentions(msg, "agent position"));
    CHECK(mentions(msg, "expected [x, y]"));
  }
  SUBCASE("agent validation names the agent") {
    const auto msg = failure_message([] {
      parse_scenario(valid_json(
          R"([{"id": 3, "position": [5, 5], "extent": [0.0, 1.0]}])"));
    });
    CHECK(mentions(msg, "agent 3: extent must be positive"));
  }
  SUBCASE("heading range is enforced") {
    const auto msg = failure_message([] {
      parse_scenario(valid_json(R"([{"id": 3, "position": [5, 5], "heading": 4.0}])"));
    });
    CHECK(mentions(msg, "agent 3: heading must lie in (-pi, pi]"));
  }
  SUBCASE("duplicate agent ids are caught") {
    const auto msg = failure_message([] {
      parse_scenario(valid_json(
          R"([{"id": 5, "position": [5, 5]}, {"id": 5, "position": [9, 9]}])"));
    });
    CHECK(mentions(msg, "agent 5: duplicate id"));
  }
  SUBCASE("unknown enum spellings are named") {
    CHECK(mentions(failure_message([] {
            parse_scenario(valid_json(R"([{"id": 3, "kind": "dog"}])"));
          }),
          "unknown agent kind 'dog'"));
    CHECK(mentions(failure_message([] {
            parse_scenario(valid_json("[]", R"([{"mode": "bogus"}])"));
          }),
          "unknown fault mode 'bogus'"));
    CHECK(mentions(failure_message([] {
            parse_scenario(valid_json(
                R"([{"id": 3, "position": [5, 5], "policy": "teleport"}])"));
          }),
          "unknown policy 'teleport'"));
  }
  SUBCASE("fault target references are validated by index") {
    const auto msg = failure_message([] {
      parse_scenario(valid_json(
          "[]",
          R"([{"mode": "missing_obstacle", "subtype": "in_path", "target": 42}])"));
    });
    CHECK(mentions(msg, "fault 0: unknown target"));
  }
  SUBCASE("ghost and missing faults need a path subtype") {
    const auto msg = failure_message([] {
      parse_scenario(valid_json(
          R"([{"id": 3, "position": [5, 5]}])",
          R"([{"mode": "missing_obstacle", "target": 3}])"));
    });
    CHECK(mentions(msg, "fault 0"));
    CHECK(mentions(msg, "subtype"));
  }
  SUBCASE("trajectory rows are quadruples") {
    const auto msg = failure_message([] {
      parse_scenario(valid_json(
          R"([{"id": 3, "position": [5, 5], "trajectory": [[1, 2, 3]]}])"));
    });
    CHECK(mentions(msg, "trajectory: expected [x, y, heading, speed]"));
  }
  SUBCASE("timing grid must divide the duration") {
    const auto msg = failure_message([] {
      std::string j = valid_json();
      const auto pos = j.find("\"duration\": 2.0");
      j.replace(pos, 15, "\"duration\": 2.05");
      parse_scenario(j);
    });
    CHECK(mentions(msg, "duration must be an integer multiple of dt"));
  }
  SUBCASE("lights must sit on a known lane, within it") {
    const auto inner = R"({
      "schema_version": 1, "name": "t",
      "map": {"lanes": [{"id": 1, "centerline": [[-50, 0], [350, 0]]}],
              "traffic_lights": [{"id": 50, "lane": 9, "stop_s": 10.0, "state": "red"}]},
      "ego": {"id": 0, "position": [0, 0], "route": [1]},
      "duration": 2.0, "dt": 0.1})";
    CHECK(mentions(failure_message([&] { parse_scenario(inner); }),
                   "light 50: unknown lane"));
    const auto outside = R"({
      "schema_version": 1, "name": "t",
      "map": {"lanes": [{"id": 1, "centerline": [[-50, 0], [350, 0]]}],
              "traffic_lights": [{"id": 50, "lane": 1, "stop_s": 1000.0, "state": "red"}]},
      "ego": {"id": 0, "position": [0, 0], "route": [1]},
      "duration": 2.0, "dt": 0.1})";
    CHECK(mentions(failure_message([&] { parse_scenario(outside); }),
                   "light 50: stop point outside lane extent"));
  }
  SUBCASE("files that cannot be opened are reported") {
    CHECK(mentions(failure_message(
                       [] { (void)load_scenario("/nonexistent/nowhere.json"); }),
                   "cannot open file"));
  }
}

TEST_CASE("an empty config document yields the library defaults") {
  const sim::MonitorConfig cfg = parse_config("{}");
  CHECK(cfg.detector.p == 0.99);
  CHECK(cfg.detector.gamma == 0.9);
  CHECK(cfg.detector.alpha == 0.1);
  CHECK(cfg.detector.n == 1000);
  CHECK(cfg.cost.metric == costs::CostMetric::Msd);
  CHECK(cfg.cost.ttc_cap == 3.0);
  CHECK(cfg.predictor.horizon == 20);
  CHECK(cfg.predictor.intent_modes.size() == 3);
  CHECK(cfg.noise.pos_std == 0.2);
  CHECK(cfg.idm.desired_speed == 13.0);
}

TEST_CASE("the shipped default config file parses to the documented values") {
  const sim::MonitorConfig cfg = load_config(SCENRISK_CONFIG_PATH);
  CHECK(cfg.detector.p == 0.99);
  CHECK(cfg.detector.gamma == 0.9);
  CHECK(cfg.detector.alpha == 0.1);
  CHECK(cfg.detector.n == 1000);
  CHECK(cfg.cost.metric == costs::CostMetric::Msd);
  CHECK(cfg.cost.weight_vehicle == 0.5);
  CHECK(cfg.cost.weight_pedestrian == 1.0);
  CHECK(cfg.cost.weight_bicycle == 1.0);
  CHECK(cfg.cost.msd_literal_formula == false);
  REQUIRE(cfg.predictor.intent_modes.size() == 3);
  CHECK(cfg.predictor.intent_modes[0].probability == 0.6);
  CHECK(cfg.predictor.intent_modes[1].accel == -3.0);
  CHECK(cfg.idm.desired_speed == 13.0);
  CHECK(cfg.idm.comfort_decel == 1.5);
}

TEST_CASE("config field errors name the offending block") {
  CHECK(mentions(
      failure_message([] { parse_config(R"({"cost": {"metric": "lidar"}})"); }),
      "cost.metric: unknown metric 'lidar'"));
  CHECK(mentions(
      failure_message([] { parse_config(R"({"cost": {"ttc_cap": 0.0}})"); }),
      "cost.ttc_cap: must be positive"));
  CHECK(mentions(failure_message([] {
          parse_config(R"({"cost": {"weights": {"vehicle": -1.0}}})");
        }),
        "cost.weights: must be positive"));
  CHECK(mentions(failure_message([] {
          parse_config(
              R"({"predictor": {"intent_modes": [{"accel": 0.0, "probability": 0.5}]}})");
        }),
        "probabilities must sum to 1"));
  CHECK(mentions(failure_message([] {
          parse_config(
              R"({"predictor": {"intent_modes": [{"accel": 0.0, "probability": 1.5}]}})");
        }),
        "probabilities must lie in [0, 1]"));
  CHECK(mentions(
      failure_message([] { parse_config(R"({"predictor": {"horizon": 0}})"); }),
      "predictor.horizon: must be >= 1"));
  CHECK(mentions(
      failure_message([] { parse_config(R"({"noise": {"pos_std": -0.1}})"); }),
      "noise: stds must be non-negative"));
  CHECK(mentions(
      failure_message([] { parse_config(R"({"idm": {"min_gap": 0.0}})"); }),
      "idm: all parameters must be positive"));
  // Detector limits come from the detector's own constructor.
  CHECK_THROWS_AS(parse_config(R"({"detector": {"p": 1.0}})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("not json at all"), SchemaError);
}
