"""Online training: each weighted sample spawns a planet or merges into one.

A sample merges into the same-class in-reach planet generating the most
force (mass over squared distance; a distance of zero counts as infinite
force); otherwise it becomes a new planet at the configured initial
radius. Merging conserves mass, scales the radius to keep the
radius-to-mass ratio fixed, and moves the center to the mass-weighted
average of the two positions.
"""

from dataclasses import dataclass

from .core import distance

CREATED = "created"
MERGED = "merged"


@dataclass
class TrainOutcome:
    action: str  # CREATED or MERGED
    planet_id: int
    prior_mass: float = 0.0


def train_one(universe, index, sample):
    """Apply one weighted sample to the universe, updating the index."""
    if not sample.mass > 0:
        raise ValueError(f"sample mass must be positive, got {sample.mass}")
    if universe.dimension is not None and sample.position.shape[0] != universe.dimension:
        raise ValueError(
            f"dimension mismatch: universe has d={universe.dimension}, "
            f"sample has d={sample.position.shape[0]}"
        )
    target = None
    if universe.dimension is not None and len(universe) > 0:
        target = _merge_target(universe, index, sample)
    if target is None:
        planet = universe.add_planet(
            mass=sample.mass,
            radius=universe.config.initial_radius,
            position=sample.position,
            class_label=sample.class_label,
        )
        index.insert(planet)
        return TrainOutcome(CREATED, planet.id)
    prior_mass = target.mass
    new_mass = target.mass + sample.mass
    new_radius = new_mass * (target.radius / target.mass)
    w_old = target.mass / new_mass
    w_new = sample.mass / new_mass
    new_position = w_old * target.position + w_new * sample.position
    universe.update_planet(target.id, new_mass, new_radius, new_position)
    index.update_planet(target)
    return TrainOutcome(MERGED, target.id, prior_mass)


def _merge_target(universe, index, sample):
    """Same-class in-reach planet with maximal force, or None."""
    metric = universe.config.metric
    best = None
    best_force = -1.0
    for pid in index.planets_in_reach(sample.position):
        planet = universe.planet(pid)
        if planet.class_label != sample.class_label:
            continue
        d = distance(planet.position, sample.position, metric)
        force = float("inf") if d == 0.0 else planet.mass / (d * d)
        # ids ascend in iteration order, so strict > keeps the smallest id
        if force > best_force:
            best = planet
            best_force = force
    return best


def train_batch(universe, index, samples):
    """Fold :func:`train_one` over the samples in order."""
    outcomes = []
    for i, sample in enumerate(samples):
        try:
            outcomes.append(train_one(universe, index, sample))
        except ValueError as exc:
            raise ValueError(f"sample {i}: {exc}") from exc
    return outcomes
