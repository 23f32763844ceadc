"""Simulation predictor: trace a unit test mass through the force field.

The test mass starts at the query point and takes a fixed number of
normalized steps of constant length along the net gravitational pull of
all planets. Afterwards the class is read off the planets whose radius
reaches the final position (most frequent class wins), falling back to
the nearest planet when none reaches it.
"""

from dataclasses import dataclass

import numpy as np

from .core import EUCLIDEAN, _as_vector

CAPTURE_IN_REACH = "in_reach_mode"
CAPTURE_NEAREST = "nearest_fallback"
CAPTURE_EQUILIBRIUM = "equilibrium_stop"


@dataclass
class TraceResult:
    predicted_class: int
    final_position: np.ndarray
    steps_taken: int
    capture: str


def net_force(universe, pos):
    """Sum of mass-scaled direction vectors with inverse-square falloff."""
    if len(universe) == 0:
        raise ValueError("net_force on empty universe")
    pos = universe._check_dimension(pos)
    if not np.isfinite(pos).all():
        raise ValueError("non-finite position")
    positions, masses = universe.positions_and_masses()
    return _net_force(positions, masses, pos, universe.config)


def _net_force(positions, masses, pos, config):
    diff = positions - pos
    if config.metric == EUCLIDEAN:
        dist = np.sqrt(np.sum(diff * diff, axis=1))
    else:
        dist = np.sum(np.abs(diff), axis=1)
    dist = np.maximum(dist, config.epsilon_distance)
    scale = masses / (dist * dist)
    return scale @ diff


def _classify_in_reach(universe, in_reach_ids):
    """Most frequent class; ties by larger summed mass, then smaller label."""
    counts = {}
    mass_sums = {}
    for pid in in_reach_ids:
        p = universe.planet(pid)
        counts[p.class_label] = counts.get(p.class_label, 0) + 1
        mass_sums[p.class_label] = mass_sums.get(p.class_label, 0.0) + p.mass
    return min(counts, key=lambda c: (-counts[c], -mass_sums[c], c))


def predict_sim(universe, index, x):
    """Classify ``x`` by force-field trace and capture."""
    if len(universe) == 0:
        raise ValueError("predict_sim on empty universe")
    pos = universe._check_dimension(x)
    if not np.isfinite(pos).all():
        raise ValueError("non-finite query")
    config = universe.config
    positions, masses = universe.positions_and_masses()
    eps = config.epsilon_distance
    alpha = config.step_fraction
    pos = pos.copy()
    steps = 0
    equilibrium = False
    for _ in range(config.iteration_count):
        force = _net_force(positions, masses, pos, config)
        norm = float(np.sqrt(np.sum(force * force)))
        if norm <= eps:
            equilibrium = True
            break
        pos = pos + (alpha / norm) * force
        steps += 1
        if config.early_stop_on_collision:
            in_reach = index.planets_in_reach(pos)
            if in_reach:
                label = _classify_in_reach(universe, in_reach)
                return TraceResult(label, pos, steps, CAPTURE_IN_REACH)
    in_reach = index.planets_in_reach(pos)
    if in_reach:
        label = _classify_in_reach(universe, in_reach)
        capture = CAPTURE_EQUILIBRIUM if equilibrium else CAPTURE_IN_REACH
    else:
        label = universe.planet(index.nearest_planet(pos)).class_label
        capture = CAPTURE_EQUILIBRIUM if equilibrium else CAPTURE_NEAREST
    return TraceResult(label, pos, steps, capture)
