"""Gravitational clustering classifier.

Train a universe of mass/radius/position/class planets from weighted
samples and classify new points either by simulating a test mass through
the gravitational field or by probabilistic per-class scoring.
"""

from .core import (
    EUCLIDEAN,
    MANHATTAN,
    HybridSample,
    Planet,
    Universe,
    UniverseConfig,
    distance,
)
from .dataset_io import (
    Dataset,
    MinMaxScaler,
    SplitSpec,
    load_csv,
    load_universe,
    save_universe,
    split,
)
from .evaluation import EvaluationReport, evaluate, train_universe
from .prob_predictor import ClassScore, class_scores, predict_prob
from .sim_predictor import TraceResult, net_force, predict_sim
from .spatial_index import PlanetIndex
from .trainer import TrainOutcome, train_batch, train_one

__all__ = [
    "EUCLIDEAN",
    "MANHATTAN",
    "ClassScore",
    "Dataset",
    "EvaluationReport",
    "HybridSample",
    "MinMaxScaler",
    "Planet",
    "PlanetIndex",
    "SplitSpec",
    "TraceResult",
    "TrainOutcome",
    "Universe",
    "UniverseConfig",
    "class_scores",
    "distance",
    "evaluate",
    "load_csv",
    "load_universe",
    "net_force",
    "predict_prob",
    "predict_sim",
    "save_universe",
    "split",
    "train_batch",
    "train_one",
    "train_universe",
]
