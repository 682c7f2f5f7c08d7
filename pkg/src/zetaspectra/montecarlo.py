"""Seeded Monte Carlo harness over the percolation ensemble.

Trials are pure functions of (n, radius, profile, v, seed + trial index),
so runs are reproducible and trivially parallel.  Results are reduced in
trial-index order regardless of completion order.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .moments import limit_moments
from .percolation import Profile, build_h, sample_adjacency
from .spectra import eigenvalue_summary, log_prefactor_density

__all__ = [
    "EnsembleResult",
    "run_trial",
    "run_ensemble",
    "ComparisonRow",
    "moment_comparison",
    "SweepPoint",
    "convergence_sweep",
]


@dataclass
class EnsembleResult:
    """Per-trial spectral moments (rows) and degree statistics."""

    n: int
    radius: float
    profile: Profile
    v: float
    seed: int
    k_max: int
    moments: np.ndarray = field(repr=False)  # (trials, k_max + 1)
    prefactor_u: float = 0.3
    prefactors: np.ndarray = field(repr=False, default=None)  # (trials,)
    mean_degrees: np.ndarray = field(repr=False, default=None)

    @property
    def trials(self) -> int:
        return self.moments.shape[0]

    def moment_mean(self, k: int) -> float:
        return float(self.moments[:, k].mean())

    def moment_std(self, k: int) -> float:
        return float(self.moments[:, k].std(ddof=1))

    def moment_stderr(self, k: int) -> float:
        return self.moment_std(k) / math.sqrt(self.trials)


def run_trial(
    n: int,
    radius: float,
    profile: Profile,
    v: float,
    seed: int,
    k_max: int,
    prefactor_u: float = 0.3,
    use_eigenvalues: bool = True,
):
    """One seeded draw: spectral moments 0..k_max plus degree statistics.

    With use_eigenvalues the moments come from the full spectrum (one
    decomposition serves all k); otherwise they come from traces of matrix
    powers, which is cheaper when k_max <= 4 and numerically identical.
    """
    sample = sample_adjacency(n, radius, profile, seed)
    degrees = sample.degrees()
    h = build_h(sample.entries, degrees, v, profile.phi1)
    n_vertices = sample.n_vertices
    moments = np.empty(k_max + 1)
    moments[0] = 1.0
    if use_eigenvalues:
        summary = eigenvalue_summary(h, v=v, phi1=profile.phi1, n=n, radius=radius, seed=seed)
        for k in range(1, k_max + 1):
            moments[k] = float(np.mean(summary.eigenvalues**k))
    else:
        if k_max > 4:
            raise ValueError("trace route implemented for k_max <= 4")
        if k_max >= 1:
            moments[1] = float(np.trace(h)) / n_vertices
        if k_max >= 2:
            moments[2] = float(np.sum(h * h)) / n_vertices
        if k_max >= 3:
            h2 = h @ h
            moments[3] = float(np.sum(h2 * h)) / n_vertices
            if k_max >= 4:
                moments[4] = float(np.sum(h2 * h2)) / n_vertices
    prefactor = log_prefactor_density(degrees, prefactor_u)
    return moments, prefactor, sample.mean_degree()


def run_ensemble(
    n: int,
    radius: float,
    profile: Profile,
    v: float,
    seed: int,
    trials: int,
    k_max: int,
    prefactor_u: float = 0.3,
    threads: int = 1,
    use_eigenvalues: bool = True,
) -> EnsembleResult:
    """Independent trials with per-trial seeds seed + trial index."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    moments = np.empty((trials, k_max + 1))
    prefactors = np.empty(trials)
    mean_degrees = np.empty(trials)

    def work(t: int):
        return run_trial(
            n, radius, profile, v, seed + t, k_max,
            prefactor_u=prefactor_u, use_eigenvalues=use_eigenvalues,
        )

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(work, range(trials)))
    else:
        results = [work(t) for t in range(trials)]
    for t, (mom, pref, mdeg) in enumerate(results):
        moments[t] = mom
        prefactors[t] = pref
        mean_degrees[t] = mdeg
    return EnsembleResult(
        n=n, radius=radius, profile=profile, v=v, seed=seed, k_max=k_max,
        moments=moments, prefactor_u=prefactor_u, prefactors=prefactors,
        mean_degrees=mean_degrees,
    )


@dataclass(frozen=True)
class ComparisonRow:
    k: int
    mean: float
    stderr: float
    theory: float
    abs_diff: float
    z_score: float


def moment_comparison(result: EnsembleResult) -> list[ComparisonRow]:
    """Empirical moment means against the limiting theory values.

    The z_score column is abs_diff over the standard error of the mean;
    at finite (N, R) it reflects the systematic finite-size gap, which
    shrinks only as N and R grow.
    """
    theory = limit_moments(result.k_max, result.v, result.profile.phi1)
    rows = []
    for k in range(0, result.k_max + 1):
        mean = result.moment_mean(k)
        stderr = result.moment_stderr(k) if k > 0 else 0.0
        diff = abs(mean - theory[k])
        z = diff / stderr if stderr > 0 else 0.0
        rows.append(ComparisonRow(k, mean, stderr, theory[k], diff, z))
    return rows


@dataclass(frozen=True)
class SweepPoint:
    n: int
    n_vertices: int
    radius: float
    trials: int
    gaps: tuple[float, ...]      # |mean M_k - m_k| for k = 0..k_max
    stderrs: tuple[float, ...]


def convergence_sweep(
    n_values,
    gamma: float,
    profile: Profile,
    v: float,
    seed: int,
    trials,
    k_max: int = 4,
    r_scale: float = 1.0,
    threads: int = 1,
    use_eigenvalues: bool = True,
) -> list[SweepPoint]:
    """Gap-versus-size table along R = ceil(r_scale * N^gamma).

    gamma must lie in (0, 1) so that R grows sublinearly in N.  trials may
    be an int or a per-point sequence.
    """
    if not 0.0 < gamma < 1.0:
        raise ValueError("violates sublinear radius growth: need 0 < gamma < 1")
    n_values = list(n_values)
    if isinstance(trials, int):
        trials = [trials] * len(n_values)
    theory = limit_moments(k_max, v, profile.phi1)
    points = []
    for n, n_trials in zip(n_values, trials):
        n_vertices = 2 * n + 1
        radius = max(1.0, math.ceil(r_scale * n_vertices**gamma))
        result = run_ensemble(
            n, radius, profile, v, seed, n_trials, k_max,
            threads=threads, use_eigenvalues=use_eigenvalues,
        )
        gaps = tuple(abs(result.moment_mean(k) - theory[k]) for k in range(k_max + 1))
        errs = tuple(result.moment_stderr(k) if k else 0.0 for k in range(k_max + 1))
        points.append(SweepPoint(n, n_vertices, radius, n_trials, gaps, errs))
    return points
