"""Benchmark harness: train on a split, score both predictors, report."""

import time
from dataclasses import dataclass, field

from .core import Universe
from .dataset_io import KFOLD, MinMaxScaler, kfold_splits, split
from .prob_predictor import predict_prob
from .rng import Xoshiro256StarStar
from .sim_predictor import predict_sim
from .spatial_index import PlanetIndex
from .trainer import train_batch

MODE_SIM = "sim"
MODE_PROB = "prob"


@dataclass
class EvaluationReport:
    dataset: str
    split_description: str
    config: object
    planet_count: int = 0
    accuracy_sim: float = None
    accuracy_prob: float = None
    confusion_sim: dict = None  # (true, predicted) -> count
    confusion_prob: dict = None
    train_seconds: float = 0.0
    predict_seconds: dict = field(default_factory=dict)

    def to_lines(self):
        cfg = self.config
        lines = [
            f"dataset={self.dataset}",
            f"split={self.split_description}",
            f"r_init={cfg.initial_radius}",
            f"alpha={cfg.step_fraction}",
            f"beta={cfg.iteration_count}",
            f"metric={cfg.metric}",
            f"planet_count={self.planet_count}",
            f"train_seconds={self.train_seconds:.4f}",
        ]
        for mode, acc, confusion in (
            (MODE_SIM, self.accuracy_sim, self.confusion_sim),
            (MODE_PROB, self.accuracy_prob, self.confusion_prob),
        ):
            if acc is None:
                continue
            lines.append(f"accuracy_{mode}={acc:.6f}")
            lines.append(f"predict_seconds_{mode}={self.predict_seconds[mode]:.4f}")
            labels = sorted({t for t, _ in confusion} | {p for _, p in confusion})
            for true in labels:
                row = ",".join(str(confusion.get((true, p), 0)) for p in labels)
                lines.append(f"confusion_{mode}_row_{true}={row}")
        return lines


def train_universe(train_ds, config, shuffle_seed=None):
    """Build a universe from a dataset; optional seeded order shuffle."""
    samples = list(train_ds.samples)
    if shuffle_seed is not None:
        Xoshiro256StarStar(shuffle_seed).shuffle(samples)
    universe = Universe(config)
    index = PlanetIndex(train_ds.dimension, config.metric)
    train_batch(universe, index, samples)
    return universe, index


def _score(universe, index, test_ds, mode):
    correct = 0
    confusion = {}
    for s in test_ds.samples:
        if mode == MODE_SIM:
            predicted = predict_sim(universe, index, s.position).predicted_class
        else:
            predicted = predict_prob(universe, s.position)
        if predicted == s.class_label:
            correct += 1
        key = (s.class_label, predicted)
        confusion[key] = confusion.get(key, 0) + 1
    return correct / len(test_ds.samples), confusion


def evaluate_split(train_ds, test_ds, config, modes=(MODE_SIM, MODE_PROB),
                   shuffle_seed=None, split_description=""):
    """Train on one split and score the requested predictors on the test side."""
    t0 = time.perf_counter()
    universe, index = train_universe(train_ds, config, shuffle_seed)
    report = EvaluationReport(
        dataset=train_ds.name.removesuffix(":train"),
        split_description=split_description,
        config=config,
        planet_count=len(universe),
        train_seconds=time.perf_counter() - t0,
    )
    for mode in modes:
        t0 = time.perf_counter()
        accuracy, confusion = _score(universe, index, test_ds, mode)
        report.predict_seconds[mode] = time.perf_counter() - t0
        if mode == MODE_SIM:
            report.accuracy_sim, report.confusion_sim = accuracy, confusion
        else:
            report.accuracy_prob, report.confusion_prob = accuracy, confusion
    return report


def evaluate(ds, spec, config, modes=(MODE_SIM, MODE_PROB), shuffle_seed=None,
             scale_minmax=False):
    """Split, train and score; k-fold pools accuracies over all folds.

    With ``scale_minmax`` the scaler is fit on each train side only and
    applied to the matching test side.
    """
    if spec.mode == KFOLD:
        pairs = kfold_splits(ds, spec.k, spec.seed)
        description = f"kfold:{spec.k} seed={spec.seed}"
    else:
        pairs = [split(ds, spec)]
        if spec.mode == "fraction":
            description = f"frac:{spec.test_fraction} seed={spec.seed}"
        else:
            description = f"one-per-class seed={spec.seed}"
    if scale_minmax:
        description += " scale=minmax"
        scaled = []
        for tr, te in pairs:
            scaler = MinMaxScaler().fit(tr)
            scaled.append((scaler.transform(tr), scaler.transform(te)))
        pairs = scaled
    reports = [
        evaluate_split(tr, te, config, modes, shuffle_seed, description)
        for tr, te in pairs
    ]
    if len(reports) == 1:
        return reports[0]
    merged = reports[0]
    for mode in modes:
        conf_attr = f"confusion_{mode}"
        combined = {}
        for r in reports:
            for key, n in getattr(r, conf_attr).items():
                combined[key] = combined.get(key, 0) + n
        total = sum(combined.values())
        correct = sum(n for (t, p), n in combined.items() if t == p)
        # pooled accuracy keeps it recomputable from the confusion matrix
        setattr(merged, f"accuracy_{mode}", correct / total)
        setattr(merged, conf_attr, combined)
        merged.predict_seconds[mode] = sum(r.predict_seconds[mode] for r in reports)
    merged.train_seconds = sum(r.train_seconds for r in reports)
    merged.split_description += f" (averaged over {len(reports)} folds)"
    return merged
