"""Automated dimensionality-reduction decisions for k-means clustering.

Given a numeric table and a preference split between interpretability and
integrity, the pipeline ranks features with silhouette decomposition (FRSD)
and principal components with explained variance, keeps just enough of
either to reach a target resolution, clusters both candidates, and picks
the strategy with the better preference-weighted silhouette.
"""

from .dataset import Dataset, load_csv, minmax_columns, minmax_normalize
from .decision import (DecisionConfig, DecisionOutcome, DecisionReport,
                       EXTRACTION, SELECTION, best_silhouette_over_k, decide,
                       run_decision, run_decision_detailed, select_for_resolution)
from .errors import (ConstantColumnWarning, DimredError, IngestionError,
                     MetricUndefinedError, ParameterError, SchemaError)
from .figures import RadarSeries, render_silhouette_plot, render_stacked_radar
from .frsd import (FeatureWeights, SubsetScore, enumerate_subsets, frsd_rank,
                   write_subset_scores)
from .kmeans import ClusteringResult, kmeans_fit, silhouette
from .pca import PcaModel, jacobi_eigh, pca_fit, pca_importance, pca_project
from .validation import (RandomCase, SweepRow, generate_cases,
                         count_misclassified, resolution_sweep)

__version__ = "0.1.0"

__all__ = [
    "ClusteringResult",
    "ConstantColumnWarning",
    "Dataset",
    "DecisionConfig",
    "DecisionOutcome",
    "DecisionReport",
    "DimredError",
    "EXTRACTION",
    "FeatureWeights",
    "IngestionError",
    "MetricUndefinedError",
    "ParameterError",
    "PcaModel",
    "RadarSeries",
    "RandomCase",
    "SELECTION",
    "SchemaError",
    "SubsetScore",
    "SweepRow",
    "best_silhouette_over_k",
    "count_misclassified",
    "decide",
    "enumerate_subsets",
    "frsd_rank",
    "generate_cases",
    "jacobi_eigh",
    "kmeans_fit",
    "load_csv",
    "minmax_columns",
    "minmax_normalize",
    "pca_fit",
    "pca_importance",
    "pca_project",
    "render_silhouette_plot",
    "render_stacked_radar",
    "resolution_sweep",
    "run_decision",
    "run_decision_detailed",
    "select_for_resolution",
    "silhouette",
    "write_subset_scores",
]
