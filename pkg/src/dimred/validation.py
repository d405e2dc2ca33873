"""Monte Carlo validation of the decision rule plus resolution sweeps.

Random cases draw both hypothetical silhouettes and the interpretability
preference uniformly from [0, 1]; the decision rule must agree with the
analytic argmax of the two scores on every case. The resolution sweep
tabulates how many features/components each target resolution requires and,
where the counts match, the resolution advantage of extraction.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .decision import DecisionConfig, decide, select_for_resolution
from .errors import ParameterError
from .frsd import FeatureWeights


@dataclass(frozen=True)
class RandomCase:
    """One synthetic decision problem and its outcome."""

    si_fs: float
    si_fe: float
    alpha: float
    integrity: float
    interpretability_score: float
    integrity_score: float
    chosen_method: str


@dataclass(frozen=True)
class SweepRow:
    """Resolution sweep entry for one target resolution."""

    target: float
    m_fs: int
    achieved_fs: float
    m_fe: int
    achieved_fe: float
    delta: Optional[float]  # achieved_fe - achieved_fs where m_fs == m_fe


# Fixed reference importance profiles for an 8-feature deprivation-scores
# dataset (London wards), used by the sweep when no dataset is supplied.
REFERENCE_SELECTION_WEIGHTS = FeatureWeights.from_scores(
    ["Employment Score", "Income Score", "Crime Score", "Health Score",
     "IMD Score", "Education Score", "Living Score", "Barriers Score"],
    [0.1319, 0.1315, 0.1298, 0.1294, 0.1217, 0.1205, 0.1178, 0.1172],
    source="FRSD",
)
REFERENCE_EXTRACTION_WEIGHTS = FeatureWeights.from_scores(
    [f"PC{i}" for i in range(1, 9)],
    [0.1366, 0.1365, 0.1357, 0.1329, 0.1286, 0.1222, 0.1139, 0.0931],
    source="PCA",
)

SWEEP_TARGETS = tuple(round(0.1 * i, 1) for i in range(1, 11))


def generate_cases(n: int, seed: int) -> list[RandomCase]:
    """Draw n random decision cases and decide each one."""
    if n < 1:
        raise ParameterError("n must be at least 1")
    rng = np.random.default_rng(seed)
    cases = []
    for _ in range(n):
        si_fs = float(rng.uniform())
        si_fe = float(rng.uniform())
        alpha = float(rng.uniform())
        config = DecisionConfig(
            interpretability_oriented=alpha,
            integrity_oriented=1.0 - alpha,
            target_resolution=1.0,
            k_min=2,
            k_max=2,
        )
        method, s_interp, s_integ = decide(si_fs, si_fe, config)
        cases.append(RandomCase(
            si_fs=si_fs,
            si_fe=si_fe,
            alpha=alpha,
            integrity=1.0 - alpha,
            interpretability_score=s_interp,
            integrity_score=s_integ,
            chosen_method=method,
        ))
    return cases


def count_misclassified(cases) -> int:
    """Cases whose recorded choice differs from the analytic argmax."""
    wrong = 0
    for case in cases:
        expected = "SELECTION" if case.interpretability_score >= case.integrity_score \
            else "EXTRACTION"
        if case.chosen_method != expected:
            wrong += 1
    return wrong


def resolution_sweep(weights_fs: FeatureWeights, weights_fe: FeatureWeights,
                     targets=SWEEP_TARGETS) -> list[SweepRow]:
    """Feature/component counts for each target, with deltas where comparable."""
    rows = []
    for target in targets:
        if not 0.0 < target <= 1.0:
            raise ParameterError(f"target {target} outside (0, 1]")
        m_fs, achieved_fs = select_for_resolution(weights_fs, target)
        m_fe, achieved_fe = select_for_resolution(weights_fe, target)
        delta = achieved_fe - achieved_fs if m_fs == m_fe else None
        rows.append(SweepRow(target=float(target), m_fs=m_fs, achieved_fs=achieved_fs,
                             m_fe=m_fe, achieved_fe=achieved_fe, delta=delta))
    return rows


def write_cases_csv(cases, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["si_fs", "si_fe", "alpha", "integrity",
                         "interpretability_score", "integrity_score", "chosen_method"])
        for c in cases:
            writer.writerow([repr(c.si_fs), repr(c.si_fe), repr(c.alpha),
                             repr(c.integrity), repr(c.interpretability_score),
                             repr(c.integrity_score), c.chosen_method])


def write_scatter_csv(cases, path) -> None:
    """Scatter-plot data: one point per case, classed by the chosen method."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["interpretability_score", "integrity_score", "chosen_method"])
        for c in cases:
            writer.writerow([repr(c.interpretability_score),
                             repr(c.integrity_score), c.chosen_method])


def write_sweep_csv(rows, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["target", "m_fs", "achieved_fs", "m_fe", "achieved_fe", "delta"])
        for r in rows:
            writer.writerow([r.target, r.m_fs, repr(r.achieved_fs),
                             r.m_fe, repr(r.achieved_fe),
                             "" if r.delta is None else repr(r.delta)])
