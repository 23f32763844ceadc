"""Run the benchmark evaluations and print accuracy tables.

Covers the 70/30 stratified splits on Wisconsin breast cancer, Iris, and
Digits, plus the one-label-per-class few-shot setting, averaged over
several split seeds. Mirrors what tests/test_acceptance.py checks, but as
a readable report instead of assertions.

Usage: python scripts/reproduce_tables.py [--seeds 10]
"""

import argparse

import numpy as np
from sklearn.datasets import load_breast_cancer, load_digits, load_iris

from gravclass import Dataset, HybridSample, UniverseConfig
from gravclass.dataset_io import SplitSpec
from gravclass.evaluation import evaluate

CONFIGS = {
    "wisconsin": UniverseConfig(initial_radius=50.0, step_fraction=0.01,
                                iteration_count=100),
    "iris": UniverseConfig(initial_radius=0.05, step_fraction=0.001,
                           iteration_count=10),
    "digits": UniverseConfig(initial_radius=1.0, step_fraction=0.01,
                             iteration_count=100),
}
LOADERS = {
    "wisconsin": load_breast_cancer,
    "iris": load_iris,
    "digits": load_digits,
}


def to_dataset(name):
    data = LOADERS[name]()
    samples = [HybridSample(x.astype(float), 1.0, int(y))
               for x, y in zip(data.data, data.target)]
    labels = sorted({s.class_label for s in samples})
    return Dataset(samples, data.data.shape[1], labels, name)


def run(ds, config, spec_for_seed, seeds):
    sims, probs = [], []
    for seed in seeds:
        r = evaluate(ds, spec_for_seed(seed), config)
        sims.append(r.accuracy_sim)
        probs.append(r.accuracy_prob)
    return (np.mean(sims), np.std(sims), np.mean(probs), np.std(probs))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seeds", type=int, default=10,
                        help="number of split seeds to average over")
    args = parser.parse_args()
    seeds = range(args.seeds)

    header = f"{'dataset':<12} {'setting':<14} {'sim acc':<16} {'prob acc':<16}"
    print(header)
    print("-" * len(header))
    for name in ("wisconsin", "iris", "digits"):
        ds = to_dataset(name)
        config = CONFIGS[name]
        for setting, spec in (
            ("70/30", lambda s: SplitSpec(mode="fraction", test_fraction=0.3,
                                          seed=s)),
            ("one-per-class", lambda s: SplitSpec(mode="one-per-class", seed=s)),
        ):
            ms, ss, mp, sp = run(ds, config, spec, seeds)
            print(f"{name:<12} {setting:<14} "
                  f"{ms:.4f} +/- {ss:.4f}  {mp:.4f} +/- {sp:.4f}")


if __name__ == "__main__":
    main()
