"""KD-tree over planet centers for radius-containment and nearest queries.

Planets carry their own radii, so pure KD containment pruning is unsound
with a per-planet query radius; instead the traversal prunes against the
largest live planet radius and filters candidates exactly. Inserts go into
the tree unbalanced; the whole tree is rebuilt balanced after every 2x
growth (and when lazy deletions from position updates dominate).
"""

import numpy as np

from .core import EUCLIDEAN, MANHATTAN, _as_vector


class _Node:
    __slots__ = ("point", "pid", "left", "right", "deleted")

    def __init__(self, point, pid):
        self.point = point
        self.pid = pid
        self.left = None
        self.right = None
        self.deleted = False


def _dist(a, b, metric):
    if metric == EUCLIDEAN:
        s = 0.0
        for x, y in zip(a, b):
            d = x - y
            s += d * d
        return s ** 0.5
    s = 0.0
    for x, y in zip(a, b):
        s += abs(x - y)
    return s


class PlanetIndex:
    """Accelerates the two geometric queries behind training and prediction.

    Results are exactly those of a linear scan over the same planet set;
    ``candidates_examined`` counts full distance computations for the
    scaling instrumentation.
    """

    def __init__(self, dimension, metric=EUCLIDEAN):
        if dimension < 1:
            raise ValueError("dimension must be >= 1")
        if metric not in (EUCLIDEAN, MANHATTAN):
            raise ValueError(f"unknown metric {metric!r}")
        self.dimension = int(dimension)
        self.metric = metric
        self._root = None
        self._entries = {}  # pid -> (point tuple, radius)
        self._max_radius = 0.0  # monotone upper bound; radii only grow in training
        self._built_size = 0
        self._deleted = 0
        self.candidates_examined = 0

    def __len__(self):
        return len(self._entries)

    def _check_point(self, point):
        v = _as_vector(point)
        if v.shape[0] != self.dimension:
            raise ValueError(
                f"dimension mismatch: index has d={self.dimension}, "
                f"got d={v.shape[0]}"
            )
        return tuple(float(x) for x in v)

    # -- maintenance ----------------------------------------------------

    def _insert_node(self, point, pid):
        node = _Node(point, pid)
        if self._root is None:
            self._root = node
            return
        cur = self._root
        axis = 0
        d = self.dimension
        while True:
            if point[axis] < cur.point[axis]:
                if cur.left is None:
                    cur.left = node
                    return
                cur = cur.left
            else:
                if cur.right is None:
                    cur.right = node
                    return
                cur = cur.right
            axis = (axis + 1) % d

    def _build(self, pids, points, axis):
        # balanced rebuild via median partitioning on the cycling axis
        n = len(pids)
        if n == 0:
            return None
        if n == 1:
            return _Node(tuple(points[0]), int(pids[0]))
        mid = n // 2
        order = np.argpartition(points[:, axis], mid)
        pids = pids[order]
        points = points[order]
        node = _Node(tuple(points[mid]), int(pids[mid]))
        nxt = (axis + 1) % self.dimension
        node.left = self._build(pids[:mid], points[:mid], nxt)
        node.right = self._build(pids[mid + 1 :], points[mid + 1 :], nxt)
        return node

    def _rebuild(self):
        pids = np.fromiter(self._entries.keys(), dtype=np.int64, count=len(self._entries))
        points = np.array([self._entries[p][0] for p in pids], dtype=np.float64)
        points = points.reshape(len(pids), self.dimension)
        self._root = self._build(pids, points, 0)
        self._built_size = len(pids)
        self._deleted = 0

    def _maybe_rebuild(self):
        n = len(self._entries)
        if n >= max(2 * self._built_size, 2) or self._deleted > n:
            self._rebuild()

    def insert(self, planet):
        if planet.id in self._entries:
            raise ValueError(f"duplicate planet id {planet.id}")
        point = self._check_point(planet.position)
        self._entries[planet.id] = (point, float(planet.radius))
        if planet.radius > self._max_radius:
            self._max_radius = float(planet.radius)
        self._insert_node(point, planet.id)
        self._maybe_rebuild()

    def update_planet(self, planet):
        if planet.id not in self._entries:
            raise ValueError(f"unknown planet id {planet.id}")
        point = self._check_point(planet.position)
        old_point, _ = self._entries[planet.id]
        self._entries[planet.id] = (point, float(planet.radius))
        if planet.radius > self._max_radius:
            self._max_radius = float(planet.radius)
        if point == old_point:
            return
        self._delete_node(old_point, planet.id)
        self._insert_node(point, planet.id)
        self._maybe_rebuild()

    def _delete_node(self, point, pid):
        # equal axis coordinates can sit on either side after a balanced
        # rebuild, so descend both subtrees on ties
        d = self.dimension
        stack = [(self._root, 0)]
        while stack:
            node, axis = stack.pop()
            if node is None:
                continue
            if node.pid == pid and not node.deleted:
                node.deleted = True
                self._deleted += 1
                return
            nxt = (axis + 1) % d
            if point[axis] < node.point[axis]:
                stack.append((node.left, nxt))
            elif point[axis] > node.point[axis]:
                stack.append((node.right, nxt))
            else:
                stack.append((node.left, nxt))
                stack.append((node.right, nxt))
        raise AssertionError(f"planet {pid} missing from tree")

    # -- queries --------------------------------------------------------

    def planets_in_reach(self, point):
        """Ids of planets whose own radius reaches ``point``, ascending."""
        q = self._check_point(point)
        if not self._entries:
            return []
        hits = []
        entries = self._entries
        metric = self.metric
        bound = self._max_radius
        d = self.dimension
        stack = [(self._root, 0)]
        examined = 0
        while stack:
            node, axis = stack.pop()
            if node is None:
                continue
            if not node.deleted:
                examined += 1
                dist = _dist(node.point, q, metric)
                if dist <= bound and dist <= entries[node.pid][1]:
                    hits.append(node.pid)
            nxt = (axis + 1) % d
            delta = q[axis] - node.point[axis]
            if delta < 0:
                stack.append((node.left, nxt))
                if -delta <= bound:
                    stack.append((node.right, nxt))
            else:
                stack.append((node.right, nxt))
                if delta <= bound:
                    stack.append((node.left, nxt))
        self.candidates_examined += examined
        hits.sort()
        return hits

    def nearest_planet(self, point):
        """Id of the closest planet; exact ties go to the smallest id."""
        q = self._check_point(point)
        if not self._entries:
            raise ValueError("nearest_planet on empty index")
        metric = self.metric
        d = self.dimension
        best_dist = float("inf")
        best_pid = -1
        examined = 0
        stack = [(self._root, 0)]
        while stack:
            node, axis = stack.pop()
            if node is None:
                continue
            delta = q[axis] - node.point[axis]
            if abs(delta) > best_dist:
                # axis distance already exceeds the best, so neither this
                # node nor its far subtree can win; only the near side may
                near = node.left if delta < 0 else node.right
                stack.append((near, (axis + 1) % d))
                continue
            if not node.deleted:
                examined += 1
                dist = _dist(node.point, q, metric)
                if dist < best_dist or (dist == best_dist and node.pid < best_pid):
                    best_dist = dist
                    best_pid = node.pid
            nxt = (axis + 1) % d
            if delta < 0:
                stack.append((node.right, nxt))
                stack.append((node.left, nxt))
            else:
                stack.append((node.left, nxt))
                stack.append((node.right, nxt))
        self.candidates_examined += examined
        return best_pid
