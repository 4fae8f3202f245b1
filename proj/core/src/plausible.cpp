#include "scenrisk/plausible.hpp"

#include <algorithm>
#include <stdexcept>

namespace scenrisk::plausible {

namespace {

std::invalid_argument unknown_target(const FaultSpec& fault) {
  std::string msg = "generate_plausible: fault references unknown target";
  if (fault.target) msg += " " + std::to_string(*fault.target);
  return std::invalid_argument(msg);
}

}  // namespace

WorldState generate_plausible(const WorldHistory& perceived,
                              const std::vector<FaultSpec>& faults,
                              const WorldState& truth_hint, const NoiseModel& noise,
                              RandomStream& stream) {
  if (faults.empty()) throw std::invalid_argument("generate_plausible: no active faults");
  if (perceived.states.empty())
    throw std::invalid_argument("generate_plausible: empty perceived history");

  WorldState out = perceived.current();

  for (const FaultSpec& fault : faults) {
    switch (fault.mode) {
      case FaultMode::MissingObstacle: {
        if (!fault.target) throw unknown_target(fault);
        const AgentState* truth_agent = truth_hint.find_agent(*fault.target);
        if (!truth_agent) throw unknown_target(fault);
        AgentState restored = *truth_agent;
        restored.position.x += stream.normal(0.0, noise.pos_std);
        restored.position.y += stream.normal(0.0, noise.pos_std);
        restored.heading = normalize_heading(restored.heading + stream.normal(0.0, noise.heading_std));
        restored.speed = std::max(0.0, restored.speed + stream.normal(0.0, noise.speed_std));
        // Re-insert at the agent's position in the truth ordering so a
        // zero-noise reconstruction matches the truth scene exactly.
        std::size_t truth_index = 0;
        for (; truth_index < truth_hint.agents.size(); ++truth_index)
          if (truth_hint.agents[truth_index].id == restored.id) break;
        truth_index = std::min(truth_index, out.agents.size());
        out.agents.insert(out.agents.begin() + static_cast<std::ptrdiff_t>(truth_index),
                          restored);
        break;
      }
      case FaultMode::GhostObstacle: {
        if (!fault.target) throw unknown_target(fault);
        const auto before = out.agents.size();
        std::erase_if(out.agents,
                      [&](const AgentState& a) { return a.id == *fault.target; });
        if (out.agents.size() == before) throw unknown_target(fault);
        break;
      }
      case FaultMode::MisdetectOrientation: {
        if (!fault.target) throw unknown_target(fault);
        AgentState* agent = out.find_agent(*fault.target);
        const AgentState* truth_agent = truth_hint.find_agent(*fault.target);
        if (!agent || !truth_agent) throw unknown_target(fault);
        agent->heading =
            normalize_heading(truth_agent->heading + stream.normal(0.0, noise.heading_std));
        break;
      }
      case FaultMode::MisdetectSize: {
        if (!fault.target) throw unknown_target(fault);
        AgentState* agent = out.find_agent(*fault.target);
        const AgentState* truth_agent = truth_hint.find_agent(*fault.target);
        if (!agent || !truth_agent) throw unknown_target(fault);
        agent->extent.x =
            std::max(0.01, truth_agent->extent.x + stream.normal(0.0, noise.pos_std));
        agent->extent.y =
            std::max(0.01, truth_agent->extent.y + stream.normal(0.0, noise.pos_std));
        break;
      }
      case FaultMode::MisdetectVelocity: {
        if (!fault.target) throw unknown_target(fault);
        AgentState* agent = out.find_agent(*fault.target);
        const AgentState* truth_agent = truth_hint.find_agent(*fault.target);
        if (!agent || !truth_agent) throw unknown_target(fault);
        agent->speed = std::max(0.0, truth_agent->speed + stream.normal(0.0, noise.speed_std));
        break;
      }
      case FaultMode::MisdetectTrafficLight: {
        if (!fault.target || !out.map || !out.map->find_light(*fault.target))
          throw unknown_target(fault);
        auto map_copy = std::make_shared<MapContext>(*out.map);
        for (TrafficLight& light : map_copy->traffic_lights) {
          if (light.id == *fault.target)
            light.state =
                light.state == LightState::Red ? LightState::Green : LightState::Red;
        }
        out.map = std::move(map_copy);
        break;
      }
      case FaultMode::Mislocalization: {
        out.ego.position.x = truth_hint.ego.position.x + stream.normal(0.0, noise.pos_std);
        out.ego.position.y = truth_hint.ego.position.y + stream.normal(0.0, noise.pos_std);
        out.ego.heading = normalize_heading(truth_hint.ego.heading +
                                            stream.normal(0.0, noise.heading_std));
        break;
      }
    }
  }
  return out;
}

}  // namespace scenrisk::plausible
