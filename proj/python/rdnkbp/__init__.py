"""Python bindings for the rdnkbp relation extraction library."""

from rdnkbp._core import (
    DataError,
    TrainingError,
    auc_roc,
    candidate_pairs,
    canonical_clause,
    canonical_fact,
    f1,
    featurize,
    generate,
    recall_at_precision,
    run_experiment,
    setting_name,
    template_names,
)

__all__ = [
    "DataError",
    "TrainingError",
    "auc_roc",
    "candidate_pairs",
    "canonical_clause",
    "canonical_fact",
    "f1",
    "featurize",
    "generate",
    "recall_at_precision",
    "run_experiment",
    "setting_name",
    "template_names",
]
