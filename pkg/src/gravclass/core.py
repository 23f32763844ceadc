"""Core data model: planets, weighted samples, universe configuration.

A trained model is a ``Universe``: an ordered set of ``Planet`` prototypes,
each carrying an accumulated mass, a capture radius, a feature-space
position and a fixed class label, plus the global constants shared by the
trainer and both predictors.
"""

from dataclasses import dataclass, field

import numpy as np

EUCLIDEAN = "euclidean"
MANHATTAN = "manhattan"
METRICS = (EUCLIDEAN, MANHATTAN)


def _as_vector(x):
    v = np.asarray(x, dtype=np.float64)
    if v.ndim != 1:
        raise ValueError(f"expected a 1-d vector, got shape {v.shape}")
    return v


def distance(a, b, metric=EUCLIDEAN):
    """Metric distance between two finite vectors of equal dimension."""
    a = _as_vector(a)
    b = _as_vector(b)
    if a.shape[0] != b.shape[0]:
        raise ValueError(
            f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}"
        )
    if not (np.isfinite(a).all() and np.isfinite(b).all()):
        raise ValueError("non-finite input to distance")
    if metric == EUCLIDEAN:
        return float(np.sqrt(np.sum((a - b) ** 2)))
    if metric == MANHATTAN:
        return float(np.sum(np.abs(a - b)))
    raise ValueError(f"unknown metric {metric!r}")


@dataclass
class Planet:
    """A cluster prototype: mass accumulator, capture radius, center, class."""

    id: int
    mass: float
    radius: float
    position: np.ndarray
    class_label: int

    def __post_init__(self):
        self.position = _as_vector(self.position)
        if not self.mass > 0:
            raise ValueError(f"planet mass must be positive, got {self.mass}")
        if not self.radius > 0:
            raise ValueError(f"planet radius must be positive, got {self.radius}")
        if not np.isfinite(self.position).all():
            raise ValueError("planet position must be finite")


@dataclass
class HybridSample:
    """A weighted training vector: position, importance mass, class label."""

    position: np.ndarray
    mass: float = 1.0
    class_label: int = 0

    def __post_init__(self):
        self.position = _as_vector(self.position)
        if not self.mass > 0:
            raise ValueError(f"sample mass must be positive, got {self.mass}")
        if not np.isfinite(self.position).all():
            raise ValueError("sample position must be finite")


@dataclass
class UniverseConfig:
    """Global constants: initial radius, step fraction, iteration count, metric.

    ``epsilon_distance`` clamps distance-zero singularities in force and
    score denominators and doubles as the zero-force equilibrium threshold.
    """

    initial_radius: float = 50.0
    step_fraction: float = 0.01
    iteration_count: int = 100
    metric: str = EUCLIDEAN
    epsilon_distance: float = 1e-9
    early_stop_on_collision: bool = False

    def __post_init__(self):
        if not self.initial_radius > 0:
            raise ValueError("initial_radius must be positive")
        if not self.step_fraction > 0:
            raise ValueError("step_fraction must be positive")
        if self.iteration_count < 1:
            raise ValueError("iteration_count must be >= 1")
        if self.metric not in METRICS:
            raise ValueError(f"unknown metric {self.metric!r}")
        if not self.epsilon_distance > 0:
            raise ValueError("epsilon_distance must be positive")


class Universe:
    """An ordered collection of planets plus the shared configuration.

    The dimension is fixed by the first planet; later mismatches are
    rejected. Planet ids are assigned sequentially and never reused, which
    makes them the deterministic tie-break everywhere.
    """

    def __init__(self, config=None):
        self.config = config if config is not None else UniverseConfig()
        self.planets = []
        self.dimension = None
        self._next_id = 0
        self._by_id = {}
        self._arrays = None

    def __len__(self):
        return len(self.planets)

    def _check_dimension(self, vector):
        v = _as_vector(vector)
        if self.dimension is not None and v.shape[0] != self.dimension:
            raise ValueError(
                f"dimension mismatch: universe has d={self.dimension}, "
                f"got d={v.shape[0]}"
            )
        return v

    def add_planet(self, mass, radius, position, class_label):
        position = self._check_dimension(position)
        if self.dimension is None:
            self.dimension = position.shape[0]
        p = Planet(self._next_id, mass, radius, position.copy(), int(class_label))
        self._next_id += 1
        self.planets.append(p)
        self._by_id[p.id] = p
        self._arrays = None
        return p

    def update_planet(self, planet_id, mass, radius, position):
        """Replace a planet's mass/radius/position in place (merge step)."""
        p = self._by_id[planet_id]
        position = self._check_dimension(position)
        if not mass > 0 or not radius > 0:
            raise ValueError("updated mass and radius must be positive")
        p.mass = float(mass)
        p.radius = float(radius)
        p.position = position.copy()
        self._arrays = None
        return p

    def planet(self, planet_id):
        return self._by_id[planet_id]

    def as_arrays(self):
        """Dense planet arrays (positions, masses, radii, labels), cached."""
        if self._arrays is None:
            self._arrays = (
                np.array([p.position for p in self.planets], dtype=np.float64),
                np.array([p.mass for p in self.planets], dtype=np.float64),
                np.array([p.radius for p in self.planets], dtype=np.float64),
                np.array([p.class_label for p in self.planets], dtype=np.int64),
            )
        return self._arrays

    def positions_and_masses(self):
        pos, mass, _, _ = self.as_arrays()
        return pos, mass

    def planets_containing(self, point):
        """All planets whose own radius reaches ``point``, ascending id."""
        point = self._check_dimension(point)
        metric = self.config.metric
        hits = [
            p
            for p in self.planets
            if distance(p.position, point, metric) <= p.radius
        ]
        hits.sort(key=lambda p: p.id)
        return hits

    def total_mass(self):
        return float(sum(p.mass for p in self.planets))

    def class_labels(self):
        return sorted({p.class_label for p in self.planets})
