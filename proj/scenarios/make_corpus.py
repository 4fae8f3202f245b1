#!/usr/bin/env python3
"""Regenerate the bundled scenario corpus.

Each scenario is a single JSON file consumed by the `scenrisk` CLI. The
corpus spans every fault mode / subtype / timing cell at least once and is
split into collision scenarios (the fault hides or distorts the thing the
ego hits) and benign scenarios (the fault is present but harmless), so the
detectors can be scored for both recall and precision.

Geometry conventions: the main road is lane 1 along the x axis (centerline
y = 0, span x in [-50, 350], limit 13 m/s); crossing traffic uses lane 10
(x = 150, southbound); the oncoming lane 2 runs parallel at y = 3.5.
"""

import json
import math
import os

DT = 0.1
DURATION = 20.0
STEPS = int(round(DURATION / DT))

VEHICLE_EXTENT = [2.25, 1.0]
PED_EXTENT = [0.3, 0.3]
BIKE_EXTENT = [0.9, 0.35]

OUT_DIR = os.path.dirname(os.path.abspath(__file__))


def lane_main():
    return {"id": 1, "centerline": [[-50.0, 0.0], [350.0, 0.0]], "speed_limit": 13.0,
            "forward": True}


def lane_oncoming():
    # Arc length increases toward -x, so "forward" means westbound travel.
    return {"id": 2, "centerline": [[350.0, 3.5], [-50.0, 3.5]], "speed_limit": 13.0,
            "forward": True}


def lane_crossing():
    return {"id": 10, "centerline": [[150.0, 130.0], [150.0, -60.0]], "speed_limit": 10.0,
            "forward": True}


def ego(x=0.0, y=0.0, heading=0.0, speed=13.0, route=(1,)):
    return {"id": 0, "position": [x, y], "heading": heading, "speed": speed,
            "extent": VEHICLE_EXTENT, "route": list(route)}


def agent(aid, kind, x, y, heading, speed, extent, policy="replay", trajectory=None):
    out = {"id": aid, "kind": kind, "position": [x, y], "heading": heading,
           "speed": speed, "extent": extent, "policy": policy}
    if trajectory is not None:
        out["trajectory"] = trajectory
    return out


def straight_walk(x0, y0, heading, speed, steps=STEPS):
    """Constant-velocity replay trajectory: pose after each step."""
    dx = math.cos(heading) * speed * DT
    dy = math.sin(heading) * speed * DT
    return [[round(x0 + dx * (k + 1), 6), round(y0 + dy * (k + 1), 6), heading, speed]
            for k in range(steps)]


def fault(mode, subtype="none", timing="static", target=None, params=None):
    out = {"mode": mode, "subtype": subtype, "timing": timing}
    if target is not None:
        out["target"] = target
    if params is not None:
        out["params"] = params
    return out


def scenario(name, lanes, agents, faults, ego_state=None, lights=None):
    return {
        "schema_version": 1,
        "name": name,
        "map": {"lanes": lanes, "traffic_lights": lights or []},
        "ego": ego_state or ego(),
        "agents": agents,
        "faults": faults,
        "duration": DURATION,
        "dt": DT,
    }


def build_all():
    scenarios = []
    south = -math.pi / 2

    # ---- collision scenarios (the fault masks the hazard) -----------------

    # Stopped car inside the ego's braking distance; perception drops it.
    scenarios.append(scenario(
        "missing_inpath_static",
        [lane_main()],
        [agent(2, "vehicle", 25.0, 0.0, 0.0, 0.0, VEHICLE_EXTENT)],
        [fault("missing_obstacle", "in_path", "static", target=2)]))

    # Same geometry, intermittent dropout.
    scenarios.append(scenario(
        "missing_inpath_dynamic",
        [lane_main()],
        [agent(2, "vehicle", 25.0, 0.0, 0.0, 0.0, VEHICLE_EXTENT)],
        [fault("missing_obstacle", "in_path", "dynamic", target=2)]))

    # Pedestrian walks into the lane too late for the ego to stop;
    # perception never reports them.
    scenarios.append(scenario(
        "missing_ped_crossing_static",
        [lane_main()],
        [agent(3, "pedestrian", 150.0, 22.0, south, 2.0, PED_EXTENT,
               trajectory=straight_walk(150.0, 22.0, south, 2.0))],
        [fault("missing_obstacle", "in_path", "static", target=3)]))

    # Crossing cyclist with an intermittent dropout.
    scenarios.append(scenario(
        "missing_bike_crossing_dynamic",
        [lane_main()],
        [agent(3, "bicycle", 150.0, 33.0, south, 3.0, BIKE_EXTENT,
               trajectory=straight_walk(150.0, 33.0, south, 3.0))],
        [fault("missing_obstacle", "in_path", "dynamic", target=3)]))

    # Stopped car ahead; perception reports it moving at 8 m/s.
    scenarios.append(scenario(
        "misdetect_velocity_collision",
        [lane_main()],
        [agent(2, "vehicle", 25.0, 0.0, 0.0, 0.0, VEHICLE_EXTENT)],
        [fault("misdetect_velocity", "none", "static", target=2,
               params={"mean": 8.0, "std": 0.3})]))

    # Crossing car on the intersection lane; its heading is misread by ~30
    # degrees so the perceived track misses the ego corridor.
    scenarios.append(scenario(
        "misdetect_orientation_collision",
        [lane_main(), lane_crossing()],
        [agent(4, "vehicle", 150.0, 114.0, south, 10.0, VEHICLE_EXTENT, policy="idm")],
        [fault("misdetect_orientation", "none", "static", target=4,
               params={"mean": math.pi / 6, "std": 0.1})]))

    # Red light the ego cannot brake for, crossing traffic arriving;
    # perception reports the light green.
    scenarios.append(scenario(
        "misdetect_light_collision",
        [lane_main(), lane_crossing()],
        [agent(5, "vehicle", 157.0, 17.6, south, 8.0, VEHICLE_EXTENT,
               trajectory=straight_walk(157.0, 17.6, south, 8.0))],
        [fault("misdetect_traffic_light", "none", "static", target=50)],
        ego_state=ego(x=135.0),
        lights=[{"id": 50, "lane": 1, "stop_s": 205.0, "state": "red"}]))

    # Stopped car inside braking distance; localization places the ego six
    # meters back-left of where it really is.
    scenarios.append(scenario(
        "mislocalization_collision",
        [lane_main()],
        [agent(2, "vehicle", 25.0, 0.0, 0.0, 0.0, VEHICLE_EXTENT)],
        [fault("mislocalization", "none", "static",
               params={"mean": -6.0, "std": 0.3})]))

    # ---- benign scenarios (fault present, no hazard) ----------------------

    # Phantom stationary car on the route; the real road is clear.
    scenarios.append(scenario(
        "ghost_inpath_static",
        [lane_main()],
        [],
        [fault("ghost_obstacle", "in_path", "static", target=100)]))

    scenarios.append(scenario(
        "ghost_inpath_dynamic",
        [lane_main()],
        [],
        [fault("ghost_obstacle", "in_path", "dynamic", target=100)]))

    # Phantom car well off the roadway.
    scenarios.append(scenario(
        "ghost_notinpath_static",
        [lane_main()],
        [],
        [fault("ghost_obstacle", "not_in_path", "static", target=100)]))

    scenarios.append(scenario(
        "ghost_notinpath_dynamic",
        [lane_main()],
        [],
        [fault("ghost_obstacle", "not_in_path", "dynamic", target=100)]))

    # Phantom car on the route while a real lead car is also present.
    scenarios.append(scenario(
        "ghost_inpath_static_traffic",
        [lane_main()],
        [agent(2, "vehicle", 45.0, 0.0, 0.0, 14.0, VEHICLE_EXTENT, policy="idm")],
        [fault("ghost_obstacle", "in_path", "static", target=100)]))

    # Parked car behind the ego disappears from perception; it is receding
    # the whole run.
    scenarios.append(scenario(
        "missing_notinpath_static",
        [lane_main()],
        [agent(2, "vehicle", -30.0, 7.0, 0.0, 0.0, VEHICLE_EXTENT)],
        [fault("missing_obstacle", "not_in_path", "static", target=2)]))

    scenarios.append(scenario(
        "missing_notinpath_dynamic",
        [lane_main()],
        [agent(2, "vehicle", -25.0, -7.0, 0.0, 0.0, VEHICLE_EXTENT)],
        [fault("missing_obstacle", "not_in_path", "dynamic", target=2)]))

    # Parked car beyond the distance the ego covers in the whole run.
    scenarios.append(scenario(
        "missing_notinpath_static_far",
        [lane_main()],
        [agent(2, "vehicle", 320.0, 7.0, 0.0, 0.0, VEHICLE_EXTENT)],
        [fault("missing_obstacle", "not_in_path", "static", target=2)]))

    # Receding lead car reported 1.5x its size.
    scenarios.append(scenario(
        "misdetect_size_lead",
        [lane_main()],
        [agent(2, "vehicle", 40.0, 0.0, 0.0, 14.0, VEHICLE_EXTENT, policy="idm")],
        [fault("misdetect_size", "none", "static", target=2,
               params={"mean": 1.5, "std": 0.1})]))

    # Parked car just off the lane reported oversized.
    scenarios.append(scenario(
        "misdetect_size_parked",
        [lane_main()],
        [agent(2, "vehicle", 60.0, 4.5, 0.0, 0.0, VEHICLE_EXTENT)],
        [fault("misdetect_size", "none", "static", target=2,
               params={"mean": 1.5, "std": 0.1})]))

    # Fast receding lead car with a misread heading.
    scenarios.append(scenario(
        "misdetect_orientation_benign",
        [lane_main()],
        [agent(2, "vehicle", 40.0, 0.0, 0.0, 16.0, VEHICLE_EXTENT,
               trajectory=straight_walk(40.0, 0.0, 0.0, 16.0))],
        [fault("misdetect_orientation", "none", "static", target=2,
               params={"mean": math.pi / 6, "std": 0.1})]))

    # Fast receding lead car perceived slower than it is.
    scenarios.append(scenario(
        "misdetect_velocity_benign",
        [lane_main()],
        [agent(2, "vehicle", 55.0, 0.0, 0.0, 18.0, VEHICLE_EXTENT,
               trajectory=straight_walk(55.0, 0.0, 0.0, 18.0))],
        [fault("misdetect_velocity", "none", "static", target=2,
               params={"mean": -3.0, "std": 0.3})]))

    # Green light misread as red: the monitor's plan stops, nothing crosses.
    scenarios.append(scenario(
        "misdetect_light_benign",
        [lane_main(), lane_crossing()],
        [],
        [fault("misdetect_traffic_light", "none", "static", target=50)],
        lights=[{"id": 50, "lane": 1, "stop_s": 205.0, "state": "green"}]))

    # Localization offset on an empty road.
    scenarios.append(scenario(
        "mislocalization_benign",
        [lane_main()],
        [],
        [fault("mislocalization", "none", "static",
               params={"mean": -6.0, "std": 0.3})]))

    # Fault-free following of a lead car at a safe gap.
    scenarios.append(scenario(
        "nofault_cruise",
        [lane_main()],
        [agent(2, "vehicle", 45.0, 0.0, 0.0, 13.0, VEHICLE_EXTENT, policy="idm")],
        []))

    # Fault-free near miss: the crossing car clears the intersection long
    # before the ego arrives.
    scenarios.append(scenario(
        "nofault_intersection",
        [lane_main(), lane_crossing()],
        [agent(4, "vehicle", 150.0, 30.0, south, 8.0, VEHICLE_EXTENT,
               trajectory=straight_walk(150.0, 30.0, south, 8.0))],
        []))

    # Oncoming car in the opposite lane passes safely (fault-free control
    # for the oncoming geometry).
    scenarios.append(scenario(
        "nofault_oncoming",
        [lane_main(), lane_oncoming()],
        [agent(6, "vehicle", 200.0, 3.5, math.pi, 10.0, VEHICLE_EXTENT, policy="idm")],
        []))

    return scenarios


def main():
    specs = build_all()
    for spec in specs:
        path = os.path.join(OUT_DIR, spec["name"] + ".json")
        with open(path, "w") as f:
            json.dump(spec, f, indent=1)
            f.write("\n")
    print(f"wrote {len(specs)} scenarios to {OUT_DIR}")


if __name__ == "__main__":
    main()
