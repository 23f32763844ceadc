"""Probabilistic predictor: per-class mean of mass-weighted Gaussian exponents.

Each planet is treated as a Gaussian around its center whose standard
deviation is a function of the radius (squared radius by default). The
class score is the sum of the mass-damped log-density exponents over that
class's planets, divided by the class's planet count so classes with many
planets are not favored. Scores are relative, not calibrated posteriors.
"""

from dataclasses import dataclass

import numpy as np

from .core import EUCLIDEAN

SIGMA_SQUARE = "square"
SIGMA_IDENTITY = "identity"


@dataclass
class ClassScore:
    class_label: int
    score: float
    planet_count: int


def class_scores(universe, x, sigma=SIGMA_SQUARE):
    """Score of every class present, sorted best first."""
    if len(universe) == 0:
        raise ValueError("class_scores on empty universe")
    pos = universe._check_dimension(x)
    if not np.isfinite(pos).all():
        raise ValueError("non-finite query")
    if sigma not in (SIGMA_SQUARE, SIGMA_IDENTITY):
        raise ValueError(f"unknown sigma function {sigma!r}")
    eps = universe.config.epsilon_distance

    positions, masses, radii, labels = universe.as_arrays()
    diff = positions - pos
    if universe.config.metric == EUCLIDEAN:
        dist = np.sqrt(np.sum(diff * diff, axis=1))
    else:
        dist = np.sum(np.abs(diff), axis=1)
    sig = radii * radii if sigma == SIGMA_SQUARE else radii
    denom = np.maximum(masses * 2.0 * sig * sig, eps)
    exponents = -(dist * dist) / denom

    scores = []
    for label in np.unique(labels):
        mask = labels == label
        count = int(np.sum(mask))
        scores.append(
            ClassScore(int(label), float(np.sum(exponents[mask]) / count), count)
        )
    scores.sort(key=lambda s: (-s.score, s.class_label))
    return scores


def predict_prob(universe, x, sigma=SIGMA_SQUARE):
    """Class with the maximal score; ties go to the smallest label."""
    return class_scores(universe, x, sigma)[0].class_label
