"""Small shared helpers: scalar/array dispatch and argument checks."""

from __future__ import annotations

import numpy as np

EPS = float(np.finfo(float).eps)


def as_float_array(x):
    """Coerce to a float ndarray; report whether the input was scalar.

    Returns (array, was_scalar). Scalar inputs come back as 0-d arrays so the
    caller can do `float(out)` at the end and keep a scalar-in scalar-out API.
    """
    arr = np.asarray(x, dtype=float)
    return arr, arr.ndim == 0


def maybe_scalar(out, was_scalar):
    return float(out) if was_scalar else out


def require_positive(value, name):
    value = float(value)
    if not np.isfinite(value) or value <= 0.0:
        raise ValueError(f"{name} must be a finite positive number, got {value!r}")
    return value
