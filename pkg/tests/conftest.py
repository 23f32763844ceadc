import numpy as np
import pytest

import gravclass as gc


def make_universe(planet_specs, config=None):
    """Universe + index from (mass, radius, position, label) tuples."""
    u = gc.Universe(config if config is not None else gc.UniverseConfig())
    for mass, radius, position, label in planet_specs:
        u.add_planet(mass, radius, np.asarray(position, float), label)
    idx = gc.PlanetIndex(u.dimension, u.config.metric)
    for p in u.planets:
        idx.insert(p)
    return u, idx


def random_universe(rng, dimension=None, max_planets=40, n_classes=3,
                    config=None, min_planets=1):
    if dimension is None:
        dimension = int(rng.integers(1, 6))
    if config is None:
        config = gc.UniverseConfig(
            initial_radius=float(rng.uniform(0.2, 2.0)),
            metric=str(rng.choice([gc.EUCLIDEAN, gc.MANHATTAN])),
        )
    n = int(rng.integers(min_planets, max_planets + 1))
    specs = [
        (
            float(rng.uniform(0.1, 5.0)),
            float(rng.uniform(0.1, 3.0)),
            rng.uniform(-5, 5, dimension),
            int(rng.integers(0, n_classes)),
        )
        for _ in range(n)
    ]
    return make_universe(specs, config)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
