"""Singular spectra of discretized integral operators.

Thin wrapper over the compiled _core module; everything heavy lives in C++.
"""

from ._core import (
    SingularSpectrum,
    TailFit,
    carleman_singular_values,
    complex_eigenvalues,
    experiments,
    fit_tail_exponent,
    predict_decay,
    predict_r_main,
    predict_r_mixed,
    riesz_constant,
    run_experiment,
    schatten_norm,
    singular_values,
)

__all__ = [
    "SingularSpectrum",
    "TailFit",
    "carleman_singular_values",
    "complex_eigenvalues",
    "experiments",
    "fit_tail_exponent",
    "predict_decay",
    "predict_r_main",
    "predict_r_mixed",
    "riesz_constant",
    "run_experiment",
    "schatten_norm",
    "singular_values",
]
