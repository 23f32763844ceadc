"""Command-line surface: train, predict, evaluate."""

import argparse
import sys

import numpy as np

from .core import EUCLIDEAN, MANHATTAN, Universe, UniverseConfig
from .dataset_io import (
    FRACTION,
    KFOLD,
    ONE_PER_CLASS,
    MinMaxScaler,
    SplitSpec,
    load_csv,
    load_universe,
    save_universe,
)
from .evaluation import MODE_PROB, MODE_SIM, evaluate, train_universe
from .prob_predictor import class_scores, predict_prob
from .sim_predictor import predict_sim
from .spatial_index import PlanetIndex


def _add_config_flags(parser):
    parser.add_argument("--r-init", type=float, default=50.0,
                        help="initial planet radius (default 50)")
    parser.add_argument("--alpha", type=float, default=0.01,
                        help="simulation step length (default 0.01)")
    parser.add_argument("--beta", type=int, default=100,
                        help="simulation iteration count (default 100)")
    parser.add_argument("--metric", choices=[EUCLIDEAN, MANHATTAN],
                        default=EUCLIDEAN)
    parser.add_argument("--early-stop-collision", action="store_true",
                        help="stop the trace on the first planet capture")


def _add_data_flags(parser):
    parser.add_argument("--data", required=True, help="input CSV path")
    parser.add_argument("--label-col", required=True)
    parser.add_argument("--weight-col", default=None)
    parser.add_argument("--scale", choices=["minmax", "none"], default="none")
    parser.add_argument("--shuffle-seed", type=int, default=None,
                        help="shuffle training order with this seed")


def _config_from_args(args):
    return UniverseConfig(
        initial_radius=args.r_init,
        step_fraction=args.alpha,
        iteration_count=args.beta,
        metric=args.metric,
        early_stop_on_collision=getattr(args, "early_stop_collision", False),
    )


def _parse_split(text, seed):
    if text == ONE_PER_CLASS:
        return SplitSpec(mode=ONE_PER_CLASS, seed=seed)
    if text.startswith("frac:"):
        return SplitSpec(mode=FRACTION, test_fraction=float(text[5:]), seed=seed)
    if text.startswith("kfold:"):
        return SplitSpec(mode=KFOLD, k=int(text[6:]), seed=seed)
    raise ValueError(f"unknown split spec {text!r}")


def cmd_train(args):
    ds = load_csv(args.data, args.label_col, args.weight_col)
    if args.scale == "minmax":
        ds = MinMaxScaler().fit(ds).transform(ds)
    universe, _ = train_universe(ds, _config_from_args(args), args.shuffle_seed)
    save_universe(universe, args.out)
    print(f"trained {len(ds)} samples -> {len(universe)} planets, "
          f"total mass {universe.total_mass():g}")
    print(f"universe written to {args.out}")
    return 0


def cmd_predict(args):
    universe = load_universe(args.model)
    query = np.array([float(x) for x in args.query.split(",")])
    if args.mode == MODE_PROB:
        scores = class_scores(universe, query)
        label = scores[0].class_label
        print(label)
        if args.verbose:
            for s in scores:
                print(f"  class {s.class_label}: score {s.score:.6g} "
                      f"({s.planet_count} planets)", file=sys.stderr)
    else:
        index = PlanetIndex(universe.dimension, universe.config.metric)
        for p in universe.planets:
            index.insert(p)
        result = predict_sim(universe, index, query)
        print(result.predicted_class)
        if args.verbose:
            pos = ",".join(f"{x:.6g}" for x in result.final_position)
            print(f"  final position ({pos}), {result.steps_taken} steps, "
                  f"capture {result.capture}", file=sys.stderr)
    return 0


def cmd_evaluate(args):
    ds = load_csv(args.data, args.label_col, args.weight_col)
    spec = _parse_split(args.split, args.seed)
    config = _config_from_args(args)
    modes = (MODE_SIM, MODE_PROB) if args.mode == "both" else (args.mode,)
    report = evaluate(ds, spec, config, modes, args.shuffle_seed,
                      scale_minmax=args.scale == "minmax")

    print(f"dataset: {report.dataset}   split: {report.split_description}")
    print(f"planets: {report.planet_count}   train time: {report.train_seconds:.2f}s")
    header = f"{'mode':<6} {'accuracy':>9}"
    print(header)
    if report.accuracy_sim is not None:
        print(f"{'sim':<6} {report.accuracy_sim:>8.2%}")
    if report.accuracy_prob is not None:
        print(f"{'prob':<6} {report.accuracy_prob:>8.2%}")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(report.to_lines()) + "\n")
        print(f"report written to {args.out}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gravclass",
        description="Gravitational clustering classifier",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_train = sub.add_parser("train", help="train a universe from a CSV")
    _add_data_flags(p_train)
    _add_config_flags(p_train)
    p_train.add_argument("--out", required=True, help="universe file to write")
    p_train.set_defaults(func=cmd_train)

    p_predict = sub.add_parser("predict", help="classify one query vector")
    p_predict.add_argument("query", help="comma-separated feature vector")
    p_predict.add_argument("--model", required=True, help="universe file")
    p_predict.add_argument("--mode", choices=[MODE_SIM, MODE_PROB],
                           default=MODE_SIM)
    p_predict.add_argument("--verbose", action="store_true")
    p_predict.set_defaults(func=cmd_predict)

    p_eval = sub.add_parser("evaluate", help="split, train and score a CSV")
    _add_data_flags(p_eval)
    _add_config_flags(p_eval)
    p_eval.add_argument("--split", default="frac:0.3",
                        help="frac:<f> | one-per-class | kfold:<k>")
    p_eval.add_argument("--seed", type=int, default=0, help="split seed")
    p_eval.add_argument("--mode", choices=[MODE_SIM, MODE_PROB, "both"],
                        default="both")
    p_eval.add_argument("--out", default=None, help="report file to write")
    p_eval.set_defaults(func=cmd_evaluate)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
