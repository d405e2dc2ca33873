"""Command-line entry points: run, rank and validate.

``run`` executes the full pipeline on a CSV file (ingest, rank with FRSD
and PCA, decide between selection and extraction, reduce, cluster) and
writes the report, weight tables and figures. ``rank`` stops after the two
weight tables. ``validate`` exercises the decision rule on random cases and
emits the resolution sweep.

Exit codes: 0 on success, 1 on data or compute errors, 2 on flag errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import warnings

from .dataset import load_csv, minmax_columns, minmax_normalize
from .decision import (DecisionConfig, DecisionOutcome, SELECTION,
                       run_decision_detailed)
from .errors import DimredError
from .figures import RadarSeries, cluster_letter, render_silhouette_plot, render_stacked_radar
from .frsd import FeatureWeights, enumerate_subsets, frsd_rank, write_subset_scores
from .pca import pca_fit, pca_importance
from .validation import (REFERENCE_EXTRACTION_WEIGHTS, REFERENCE_SELECTION_WEIGHTS,
                         count_misclassified, generate_cases, resolution_sweep,
                         write_cases_csv, write_scatter_csv, write_sweep_csv)


def _default_threads() -> int:
    env = os.environ.get("DIMRED_THREADS")
    if env is not None:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--k-min", type=int, default=3, help="smallest cluster count tried")
    parser.add_argument("--k-max", type=int, default=10, help="largest cluster count tried")
    parser.add_argument("--seed", type=int, default=42, help="base random seed")
    parser.add_argument("--restarts", type=int, default=10,
                        help="k-means restarts per fit")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker processes for the FRSD sweep "
                             "(default: DIMRED_THREADS or the CPU count)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dimred",
        description="Decide between feature selection and feature extraction, "
                    "then cluster at the chosen resolution.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="full pipeline: report, weights, figures")
    run.add_argument("--input", required=True, help="input CSV (id column + numeric features)")
    run.add_argument("--out", default="dimred_out", help="output directory")
    run.add_argument("--interpretability", type=float, default=None,
                     help="preference for keeping feature names, in [0, 1]")
    run.add_argument("--integrity", type=float, default=None,
                     help="preference for information retention, in [0, 1]")
    run.add_argument("--target-resolution", type=float, default=0.85,
                     help="minimum cumulative importance to retain, in (0, 1]")
    run.add_argument("--case", default="run", help="label used in figure file names")
    run.add_argument("--subset-scores", action="store_true",
                     help="also dump the full FRSD score table")
    run.add_argument("--no-figures", action="store_true", help="skip SVG output")
    _add_common_flags(run)
    run.set_defaults(func=cmd_run, parser=run)

    rank = sub.add_parser("rank", help="FRSD and PCA weight tables only")
    rank.add_argument("--input", required=True, help="input CSV")
    rank.add_argument("--out", default="dimred_out", help="output directory")
    rank.add_argument("--subset-scores", action="store_true",
                      help="also dump the full FRSD score table")
    _add_common_flags(rank)
    rank.set_defaults(func=cmd_rank, parser=rank)

    validate = sub.add_parser("validate",
                              help="random-case decision check plus resolution sweep")
    validate.add_argument("--cases", type=int, default=250, help="number of random cases")
    validate.add_argument("--seed", type=int, default=42, help="random seed")
    validate.add_argument("--out", default="dimred_out", help="output directory")
    validate.set_defaults(func=cmd_validate, parser=validate)

    return parser


def _resolve_orientation(args) -> tuple[float, float]:
    interp, integ = args.interpretability, args.integrity
    if interp is None and integ is None:
        return 0.5, 0.5
    if interp is None:
        interp = 1.0 - integ
    elif integ is None:
        integ = 1.0 - interp
    elif abs(interp + integ - 1.0) > 1e-9:
        args.parser.error(
            f"--interpretability and --integrity must sum to 1 (got {interp + integ})"
        )
    return interp, integ


def _resolve_threads(args) -> int:
    threads = args.threads if getattr(args, "threads", None) is not None else _default_threads()
    if threads < 1:
        args.parser.error("--threads must be at least 1")
    return threads


def _write_weights_csv(weights: FeatureWeights, path, with_minmax: bool = False) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        if with_minmax:
            writer.writerow(["name", "weight", "weight_minmax"])
            for (name, w), (_, z) in zip(weights.entries, weights.minmax_view()):
                writer.writerow([name, repr(w), repr(z)])
        else:
            writer.writerow(["name", "weight"])
            for name, w in weights.entries:
                writer.writerow([name, repr(w)])


def _print_weights(title: str, weights: FeatureWeights) -> None:
    print(title)
    for rank, (name, w) in enumerate(weights.entries, start=1):
        print(f"  {rank}. {name:<24s} {w:.4f}")


def _print_report(outcome: DecisionOutcome, config: DecisionConfig) -> None:
    report = outcome.report
    n_subsets = len(enumerate_subsets(len(report.frsd_weights.entries)))
    n_k = config.k_max - config.k_min + 1
    print(f"FRSD sweep: {n_subsets * n_k} silhouette runs "
          f"({n_subsets} subsets x {n_k} cluster counts)")
    _print_weights("FRSD feature weights:", report.frsd_weights)
    _print_weights("PCA component weights:", report.pca_weights)
    print(f"best FS silhouette index:  {report.best_si_fs:.4f}")
    print(f"best FE silhouette index:  {report.best_si_fe:.4f}")
    print(f"interpretability score:    {report.interpretability_score:.4f}")
    print(f"integrity score:           {report.integrity_score:.4f}")
    print(f"chosen method:             {report.chosen_method}")
    if report.chosen_method == SELECTION:
        print(f"selected features:         {report.n_selected}")
    else:
        print(f"principal components:      {report.n_selected}")
    print(f"achieved resolution:       {report.achieved_resolution:.4f} "
          f"({report.achieved_resolution * 100:.1f}%)")
    print(f"best number of clusters:   {report.best_k}")


def _emit_figures(outcome: DecisionOutcome, out_dir: str, case: str) -> None:
    render_silhouette_plot(outcome.clustering,
                           os.path.join(out_dir, f"silhouette_{case}.svg"))
    if len(outcome.axis_labels) < 3:
        print("note: fewer than 3 retained dimensions; radar charts skipped")
        return
    scaled = minmax_columns(outcome.reduced_values)
    for c in range(outcome.clustering.k):
        series = RadarSeries(axis_labels=outcome.axis_labels,
                             rows=scaled[outcome.clustering.labels == c],
                             cluster_id=c)
        render_stacked_radar(
            series, os.path.join(out_dir, f"radar_{case}_{cluster_letter(c)}.svg")
        )


def cmd_run(args) -> int:
    interp, integ = _resolve_orientation(args)
    if not 0.0 < args.target_resolution <= 1.0:
        args.parser.error("--target-resolution must be in (0, 1]")
    if not 2 <= args.k_min <= args.k_max:
        args.parser.error("need 2 <= --k-min <= --k-max")
    if args.restarts < 1:
        args.parser.error("--restarts must be at least 1")
    threads = _resolve_threads(args)

    config = DecisionConfig(
        interpretability_oriented=interp,
        integrity_oriented=integ,
        target_resolution=args.target_resolution,
        k_min=args.k_min,
        k_max=args.k_max,
        seed=args.seed,
        restarts=args.restarts,
    )
    data = load_csv(args.input)
    os.makedirs(args.out, exist_ok=True)

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        outcome = run_decision_detailed(data, config, max_workers=threads)
    for w in caught:
        print(f"warning: {w.message}")

    report_path = os.path.join(args.out, "report.json")
    with open(report_path, "w", encoding="utf-8") as fh:
        json.dump(outcome.report.to_json_dict(), fh, indent=2)
        fh.write("\n")
    _write_weights_csv(outcome.report.frsd_weights,
                       os.path.join(args.out, "frsd_weights.csv"), with_minmax=True)
    _write_weights_csv(outcome.report.pca_weights,
                       os.path.join(args.out, "pca_weights.csv"))
    if args.subset_scores:
        write_subset_scores(outcome.subset_scores,
                            os.path.join(args.out, "subset_scores.csv"))
    if not args.no_figures:
        _emit_figures(outcome, args.out, args.case)

    _print_report(outcome, config)
    print(f"outputs written to {args.out}")
    return 0


def cmd_rank(args) -> int:
    if not 2 <= args.k_min <= args.k_max:
        args.parser.error("need 2 <= --k-min <= --k-max")
    if args.restarts < 1:
        args.parser.error("--restarts must be at least 1")
    threads = _resolve_threads(args)

    data = load_csv(args.input)
    os.makedirs(args.out, exist_ok=True)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        normalized = minmax_normalize(data)
        frsd_weights, scores = frsd_rank(normalized, args.k_min, args.k_max,
                                         args.seed, restarts=args.restarts,
                                         max_workers=threads)
        pca_weights = pca_importance(pca_fit(normalized.values))
    for w in caught:
        print(f"warning: {w.message}")

    _write_weights_csv(frsd_weights, os.path.join(args.out, "frsd_weights.csv"),
                       with_minmax=True)
    _write_weights_csv(pca_weights, os.path.join(args.out, "pca_weights.csv"))
    if args.subset_scores:
        write_subset_scores(scores, os.path.join(args.out, "subset_scores.csv"))

    print(f"FRSD sweep: {len(scores)} silhouette runs")
    _print_weights("FRSD feature weights:", frsd_weights)
    _print_weights("PCA component weights:", pca_weights)
    print(f"outputs written to {args.out}")
    return 0


def cmd_validate(args) -> int:
    if args.cases < 1:
        args.parser.error("--cases must be at least 1")
    os.makedirs(args.out, exist_ok=True)

    cases = generate_cases(args.cases, args.seed)
    wrong = count_misclassified(cases)
    sweep = resolution_sweep(REFERENCE_SELECTION_WEIGHTS, REFERENCE_EXTRACTION_WEIGHTS)

    write_cases_csv(cases, os.path.join(args.out, "cases.csv"))
    write_scatter_csv(cases, os.path.join(args.out, "scatter.csv"))
    write_sweep_csv(sweep, os.path.join(args.out, "sweep.csv"))

    print(f"misclassified: {wrong}/{len(cases)}")
    print("resolution sweep (reference 8-feature profiles):")
    for row in sweep:
        delta = "" if row.delta is None else f"  delta={row.delta * 100:+.2f}pp"
        print(f"  target {row.target:.1f}: features={row.m_fs} "
              f"({row.achieved_fs * 100:.1f}%)  PCs={row.m_fe} "
              f"({row.achieved_fe * 100:.1f}%){delta}")
    print(f"outputs written to {args.out}")
    return 0 if wrong == 0 else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DimredError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
