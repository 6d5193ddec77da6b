# Copyright 2026 The waveliq authors
# SPDX-License-Identifier: Apache-2.0

"""Training-free wavelet/Hausdorff full-reference image quality metric."""

from waveliq._core import (
    apply_logistic4,
    coupled_distance,
    decompose,
    evaluate_pair,
    fit_logistic4,
    hausdorff,
    hellinger_weight,
    histogram,
    load_features,
    load_image,
    map_similarity,
    plcc,
    refine_features,
    run_benchmark,
    save_features,
    save_image,
    srcc,
    synthesize,
    to_luma,
    WaveliqError,
)

__all__ = [
    "apply_logistic4",
    "coupled_distance",
    "decompose",
    "evaluate_pair",
    "fit_logistic4",
    "hausdorff",
    "hellinger_weight",
    "histogram",
    "load_features",
    "load_image",
    "map_similarity",
    "plcc",
    "refine_features",
    "run_benchmark",
    "save_features",
    "save_image",
    "srcc",
    "synthesize",
    "to_luma",
    "WaveliqError",
]

__version__ = "0.1.0"
