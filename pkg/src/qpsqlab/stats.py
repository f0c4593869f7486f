"""Small statistical helpers shared by the experiment drivers."""

from __future__ import annotations

import math

import numpy as np


def wilson_interval(successes: int, trials: int, z: float = 1.96) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if trials <= 0:
        raise ValueError("need at least one trial")
    if not 0 <= successes <= trials:
        raise ValueError("successes outside 0..trials")
    p = successes / trials
    z2 = z * z
    denom = 1.0 + z2 / trials
    center = (p + z2 / (2 * trials)) / denom
    half = z * math.sqrt(p * (1 - p) / trials + z2 / (4 * trials * trials)) / denom
    return max(0.0, center - half), min(1.0, center + half)


def bootstrap_variance_ci(
    values: np.ndarray,
    rng: np.random.Generator,
    n_boot: int = 1000,
    level: float = 0.95,
) -> tuple[np.ndarray, np.ndarray]:
    """Percentile bootstrap interval for the sample variance (ddof=1).

    Resamples along the last axis with shared indices, so for 2-D input the
    returned (lo, hi) are arrays, one entry per leading row."""
    m = values.shape[-1]
    if m < 2:
        raise ValueError("need at least two observations")
    stats = np.empty((n_boot,) + values.shape[:-1])
    for b in range(n_boot):
        idx = rng.integers(0, m, size=m)
        stats[b] = np.var(values[..., idx], axis=-1, ddof=1)
    lo = np.quantile(stats, (1 - level) / 2, axis=0)
    hi = np.quantile(stats, 1 - (1 - level) / 2, axis=0)
    return lo, hi
