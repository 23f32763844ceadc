import numpy as np
import pytest

import gravclass as gc

from conftest import make_universe, random_universe
from oracles import oracle_in_reach, oracle_nearest


class TestInsert:
    def test_single_element_nearest(self):
        u, idx = make_universe([(1.0, 1.0, (2.0, 3.0), 0)])
        assert idx.nearest_planet(np.array([2.0, 3.0])) == 0

    def test_duplicate_id(self):
        u, idx = make_universe([(1.0, 1.0, (0.0, 0.0), 0)])
        with pytest.raises(ValueError, match="duplicate"):
            idx.insert(u.planets[0])

    def test_wrong_dimension(self):
        idx = gc.PlanetIndex(2)
        p = gc.Planet(0, 1.0, 1.0, np.array([1.0, 2.0, 3.0]), 0)
        with pytest.raises(ValueError, match="dimension mismatch"):
            idx.insert(p)

    def test_hundred_inserts_match_scan(self, rng):
        u, idx = random_universe(rng, dimension=3, max_planets=100, min_planets=100)
        for _ in range(50):
            q = rng.uniform(-6, 6, 3)
            assert idx.planets_in_reach(q) == oracle_in_reach(
                u.planets, q, u.config.metric)


class TestUpdate:
    def test_move_then_nearest(self):
        u, idx = make_universe([(1.0, 1.0, (0.0, 0.0), 0),
                                (1.0, 1.0, (9.0, 9.0), 0)])
        u.update_planet(0, 1.0, 1.0, np.array([1.0, 1.0]))
        idx.update_planet(u.planet(0))
        assert idx.nearest_planet(np.array([1.0, 1.0])) == 0

    def test_unknown_id(self):
        _, idx = make_universe([(1.0, 1.0, (0.0, 0.0), 0)])
        stray = gc.Planet(99, 1.0, 1.0, np.array([0.0, 0.0]), 0)
        with pytest.raises(ValueError, match="unknown"):
            idx.update_planet(stray)

    def test_thousand_updates_match_scan(self, rng):
        u, idx = random_universe(rng, dimension=2, max_planets=60, min_planets=40)
        n = len(u.planets)
        for _ in range(1000):
            p = u.planets[int(rng.integers(0, n))]
            u.update_planet(p.id, p.mass, float(rng.uniform(0.1, 2.0)),
                            rng.uniform(-5, 5, 2))
            idx.update_planet(p)
        for _ in range(50):
            q = rng.uniform(-6, 6, 2)
            assert idx.planets_in_reach(q) == oracle_in_reach(
                u.planets, q, u.config.metric)
            assert idx.nearest_planet(q) == oracle_nearest(
                u.planets, q, u.config.metric)


class TestQueries:
    def test_overlap_returns_both(self):
        _, idx = make_universe([(1.0, 2.0, (0.0,), 0), (1.0, 2.0, (1.0,), 1)])
        assert idx.planets_in_reach(np.array([0.5])) == [0, 1]

    def test_empty_index(self):
        idx = gc.PlanetIndex(2)
        assert idx.planets_in_reach(np.array([0.0, 0.0])) == []
        with pytest.raises(ValueError, match="empty"):
            idx.nearest_planet(np.array([0.0, 0.0]))

    def test_nearest_basic(self):
        _, idx = make_universe([(1.0, 1.0, (0.0, 0.0), 0),
                                (1.0, 1.0, (10.0, 0.0), 1)])
        assert idx.nearest_planet(np.array([1.0, 0.0])) == 0

    def test_nearest_exact_tie_smaller_id(self):
        _, idx = make_universe([(1.0, 1.0, (-1.0, 0.0), 0),
                                (1.0, 1.0, (1.0, 0.0), 1)])
        assert idx.nearest_planet(np.array([0.0, 0.0])) == 0

    def test_own_center_always_in_reach(self, rng):
        u, idx = random_universe(rng, max_planets=50)
        for p in u.planets:
            assert p.id in idx.planets_in_reach(p.position)

    def test_dimension_mismatch(self):
        _, idx = make_universe([(1.0, 1.0, (0.0, 0.0), 0)])
        with pytest.raises(ValueError, match="dimension mismatch"):
            idx.planets_in_reach(np.array([0.0]))


def test_oracle_equivalence_randomized(rng):
    """Queries match the linear scan on random sets, dims 1-16."""
    for trial in range(250):
        d = int(rng.integers(1, 17))
        u, idx = random_universe(rng, dimension=d, max_planets=60)
        for _ in range(4):
            q = rng.uniform(-6, 6, d)
            assert idx.planets_in_reach(q) == oracle_in_reach(
                u.planets, q, u.config.metric)
            assert idx.nearest_planet(q) == oracle_nearest(
                u.planets, q, u.config.metric)


def test_duplicate_coordinates(rng):
    # integer-valued features produce many equal axis values
    u = gc.Universe(gc.UniverseConfig(initial_radius=1.0))
    idx = gc.PlanetIndex(3)
    for i in range(200):
        p = u.add_planet(1.0, 1.5, rng.integers(0, 4, 3).astype(float), i % 2)
        idx.insert(p)
    for _ in range(30):
        p = u.planets[int(rng.integers(0, 200))]
        u.update_planet(p.id, p.mass, p.radius, rng.integers(0, 4, 3).astype(float))
        idx.update_planet(p)
    for _ in range(40):
        q = rng.integers(0, 4, 3).astype(float)
        assert idx.planets_in_reach(q) == oracle_in_reach(u.planets, q, "euclidean")
        assert idx.nearest_planet(q) == oracle_nearest(u.planets, q, "euclidean")
