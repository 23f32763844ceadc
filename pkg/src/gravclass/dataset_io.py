"""CSV ingestion, train/test splitting, scaling, and universe persistence."""

import csv
import os
from dataclasses import dataclass, field

import numpy as np

from .core import EUCLIDEAN, MANHATTAN, HybridSample, Universe, UniverseConfig
from .rng import Xoshiro256StarStar

FRACTION = "fraction"
ONE_PER_CLASS = "one-per-class"
KFOLD = "kfold"

UNIVERSE_MAGIC = "gravclass-universe"
UNIVERSE_VERSION = 1


@dataclass
class Dataset:
    samples: list
    dimension: int
    class_labels: list
    name: str = ""
    feature_names: list = field(default_factory=list)
    label_mapping: dict = field(default_factory=dict)  # original label -> int

    def __len__(self):
        return len(self.samples)

    def _subset(self, indices, name_suffix=""):
        samples = [self.samples[i] for i in indices]
        labels = sorted({s.class_label for s in samples})
        return Dataset(
            samples,
            self.dimension,
            labels,
            self.name + name_suffix,
            self.feature_names,
            self.label_mapping,
        )


@dataclass
class SplitSpec:
    mode: str = FRACTION
    test_fraction: float = 0.3
    k: int = 5
    seed: int = 0

    def __post_init__(self):
        if self.mode not in (FRACTION, ONE_PER_CLASS, KFOLD):
            raise ValueError(f"unknown split mode {self.mode!r}")
        if self.mode == FRACTION and not 0.0 < self.test_fraction < 1.0:
            raise ValueError("test_fraction must be in (0, 1)")
        if self.mode == KFOLD and self.k < 2:
            raise ValueError("k must be >= 2")


def load_csv(path, label_column, weight_column=None, name=None):
    """Read a headered CSV into weighted samples.

    Feature cells must be numeric. The label column may hold integers or
    strings; strings are mapped to dense integers in first-appearance
    order and the mapping is recorded on the dataset. Masses come from the
    optional weight column, else default to 1.0.
    """
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"{path}: empty file, header row required")
        if label_column not in header:
            raise ValueError(f"{path}: no column named {label_column!r}")
        label_idx = header.index(label_column)
        weight_idx = None
        if weight_column is not None:
            if weight_column not in header:
                raise ValueError(f"{path}: no column named {weight_column!r}")
            weight_idx = header.index(weight_column)
        feature_idx = [
            i for i in range(len(header)) if i not in (label_idx, weight_idx)
        ]
        feature_names = [header[i] for i in feature_idx]

        samples = []
        label_mapping = {}
        for row_no, row in enumerate(reader, start=2):
            if len(row) != len(header):
                raise ValueError(
                    f"{path}: ragged row, row {row_no} has {len(row)} cells, "
                    f"expected {len(header)}"
                )
            try:
                features = np.array([float(row[i]) for i in feature_idx])
            except ValueError:
                raise ValueError(f"{path}: non-numeric feature, row {row_no}")
            if not np.isfinite(features).all():
                raise ValueError(f"{path}: non-finite feature, row {row_no}")
            mass = 1.0
            if weight_idx is not None:
                try:
                    mass = float(row[weight_idx])
                except ValueError:
                    raise ValueError(f"{path}: non-numeric weight, row {row_no}")
                if not mass > 0:
                    raise ValueError(f"{path}: non-positive weight, row {row_no}")
            raw_label = row[label_idx].strip()
            try:
                label = int(raw_label)
            except ValueError:
                if raw_label not in label_mapping:
                    label_mapping[raw_label] = len(label_mapping)
                label = label_mapping[raw_label]
            if label < 0:
                raise ValueError(f"{path}: negative class label, row {row_no}")
            samples.append(HybridSample(features, mass, label))

    if not samples:
        raise ValueError(f"{path}: no data rows")
    dimension = samples[0].position.shape[0]
    labels = sorted({s.class_label for s in samples})
    if name is None:
        name = os.path.splitext(os.path.basename(path))[0]
    return Dataset(samples, dimension, labels, name, feature_names, label_mapping)


def _by_class(ds):
    groups = {}
    for i, s in enumerate(ds.samples):
        groups.setdefault(s.class_label, []).append(i)
    return groups


def split(ds, spec):
    """Deterministic (train, test) split; KFold yields its first fold."""
    if spec.mode == KFOLD:
        return kfold_splits(ds, spec.k, spec.seed)[0]
    rng = Xoshiro256StarStar(spec.seed)
    groups = _by_class(ds)
    train_idx, test_idx = [], []
    for label in sorted(groups):
        indices = groups[label]
        if spec.mode == ONE_PER_CLASS:
            if len(indices) < 2:
                raise ValueError(
                    f"one-per-class split needs >= 2 samples of class {label}"
                )
            pick = indices[rng.randbelow(len(indices))]
            train_idx.append(pick)
            test_idx.extend(i for i in indices if i != pick)
        else:
            shuffled = list(indices)
            rng.shuffle(shuffled)
            n_test = int(len(indices) * spec.test_fraction)
            test_idx.extend(shuffled[:n_test])
            train_idx.extend(shuffled[n_test:])
    # dataset order (= file row order) is preserved within each side
    train_idx.sort()
    test_idx.sort()
    return ds._subset(train_idx, ":train"), ds._subset(test_idx, ":test")


def kfold_splits(ds, k, seed=0):
    """Stratified k-fold: list of (train, test) pairs."""
    if k < 2:
        raise ValueError("k must be >= 2")
    rng = Xoshiro256StarStar(seed)
    folds = [[] for _ in range(k)]
    for label in sorted(_by_class(ds)):
        indices = list(_by_class(ds)[label])
        rng.shuffle(indices)
        for j, i in enumerate(indices):
            folds[j % k].append(i)
    pairs = []
    for f in range(k):
        test_idx = sorted(folds[f])
        train_idx = sorted(i for g in range(k) if g != f for i in folds[g])
        pairs.append((ds._subset(train_idx, ":train"), ds._subset(test_idx, ":test")))
    return pairs


class MinMaxScaler:
    """Per-feature min-max scaling to [0, 1], fit on train only.

    Constant features map to 0. Useful because the initial radius and the
    step fraction operate in raw feature units.
    """

    def __init__(self):
        self.mins = None
        self.ranges = None

    def fit(self, ds):
        matrix = np.array([s.position for s in ds.samples])
        self.mins = matrix.min(axis=0)
        spread = matrix.max(axis=0) - self.mins
        self.ranges = np.where(spread > 0, spread, 1.0)
        return self

    def transform(self, ds):
        if self.mins is None:
            raise ValueError("scaler not fitted")
        samples = [
            HybridSample((s.position - self.mins) / self.ranges, s.mass, s.class_label)
            for s in ds.samples
        ]
        return Dataset(
            samples,
            ds.dimension,
            ds.class_labels,
            ds.name,
            ds.feature_names,
            ds.label_mapping,
        )


def save_universe(universe, path):
    """Write the versioned line-oriented universe file."""
    cfg = universe.config
    lines = [
        f"{UNIVERSE_MAGIC} v{UNIVERSE_VERSION}",
        f"r_init={cfg.initial_radius!r} alpha={cfg.step_fraction!r} "
        f"beta={cfg.iteration_count} metric={cfg.metric} "
        f"eps={cfg.epsilon_distance!r}",
        f"dim={universe.dimension or 0} planets={len(universe)}",
    ]
    for p in universe.planets:
        pos = ",".join(repr(float(x)) for x in p.position)
        lines.append(
            f"id={p.id} class={p.class_label} mass={p.mass!r} "
            f"radius={p.radius!r} pos={pos}"
        )
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def _fields(line, expected_keys, path):
    parts = line.split()
    if [p.split("=", 1)[0] for p in parts] != expected_keys:
        raise ValueError(f"{path}: corrupt universe file, bad line {line!r}")
    return [p.split("=", 1)[1] for p in parts]


def load_universe(path):
    """Read a file produced by :func:`save_universe`; round-trip exact."""
    with open(path) as fh:
        lines = [line.rstrip("\n") for line in fh]
    lines = [line for line in lines if line]
    if not lines or not lines[0].startswith(UNIVERSE_MAGIC):
        raise ValueError(f"{path}: not a universe file")
    version = lines[0][len(UNIVERSE_MAGIC) :].strip()
    if version != f"v{UNIVERSE_VERSION}":
        raise ValueError(f"{path}: unsupported universe file version {version!r}")
    if len(lines) < 3:
        raise ValueError(f"{path}: corrupt universe file, truncated header")
    r_init, alpha, beta, metric, eps = _fields(
        lines[1], ["r_init", "alpha", "beta", "metric", "eps"], path
    )
    if metric not in (EUCLIDEAN, MANHATTAN):
        raise ValueError(f"{path}: corrupt universe file, bad metric {metric!r}")
    config = UniverseConfig(
        initial_radius=float(r_init),
        step_fraction=float(alpha),
        iteration_count=int(beta),
        metric=metric,
        epsilon_distance=float(eps),
    )
    dim, count = _fields(lines[2], ["dim", "planets"], path)
    dim, count = int(dim), int(count)
    if len(lines) != 3 + count:
        raise ValueError(
            f"{path}: corrupt universe file, expected {count} planets, "
            f"found {len(lines) - 3}"
        )
    universe = Universe(config)
    for line in lines[3:]:
        pid, label, mass, radius, pos = _fields(
            line, ["id", "class", "mass", "radius", "pos"], path
        )
        position = np.array([float(x) for x in pos.split(",")])
        if position.shape[0] != dim:
            raise ValueError(f"{path}: corrupt universe file, bad planet dimension")
        planet = universe.add_planet(float(mass), float(radius), position, int(label))
        if planet.id != int(pid):
            # id sequence in the file is authoritative
            universe._by_id.pop(planet.id)
            planet.id = int(pid)
            universe._by_id[planet.id] = planet
            universe._next_id = max(universe._next_id, planet.id + 1)
    return universe
