"""Neville extrapolation of the regulated sum to epsilon = 0."""

from typing import Sequence

import numpy as np

from ..models import ExtrapolationTrace


def neville_extrapolate(xs: Sequence[float], ys: Sequence[float], x0: float = 0.0) -> list[float]:
    """
    Diagonal of the Neville tableau at x0.

    Entry k is the value at x0 of the polynomial interpolating the first
    k + 1 points.
    """
    xs = np.asarray(xs, dtype=float)
    p = np.array(ys, dtype=float)
    n = len(xs)
    if n == 0 or len(p) != n:
        raise ValueError("neville_extrapolate needs equal, non-empty xs and ys")

    diagonal = [float(p[0])]
    for k in range(1, n):
        for i in range(n - k):
            p[i] = ((x0 - xs[i + k]) * p[i] + (xs[i] - x0) * p[i + 1]) / (xs[i] - xs[i + k])
        diagonal.append(float(p[0]))
    return diagonal


def extrapolate_to_zero(epsilons: Sequence[float], values: Sequence[float]) -> ExtrapolationTrace:
    """Extrapolate values(epsilon) to epsilon = 0; error = |last - second-to-last|."""
    extrapolants = neville_extrapolate(epsilons, values)
    error = abs(extrapolants[-1] - extrapolants[-2]) if len(extrapolants) > 1 else float("inf")
    return ExtrapolationTrace(
        epsilons=list(epsilons),
        values=list(values),
        extrapolants=extrapolants,
        extrapolant=extrapolants[-1],
        error_estimate=error,
    )
