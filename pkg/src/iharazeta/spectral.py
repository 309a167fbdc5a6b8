"""Dense symmetric eigensolver and nontrivial-spectrum extraction.

The eigensolver is a cyclic Jacobi iteration: sweep all off-diagonal pivots
with Givens rotations until the off-diagonal Frobenius mass drops below a
relative threshold.  Inputs here are small integer adjacency matrices, well
inside Jacobi's robust regime, and the full multiset of eigenvalues (no
clustering, no multiplicity inference) is what downstream formulas consume.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import GraphProfile

JACOBI_TOL = 1e-12
MAX_SWEEPS = 100
TRIVIAL_MATCH_TOL = 1e-6


class NonSymmetricError(ValueError):
    pass


class JacobiConvergenceError(RuntimeError):
    """Sweep cap exceeded; carries the remaining off-diagonal mass."""

    def __init__(self, residual: float):
        super().__init__(f"no convergence after {MAX_SWEEPS} sweeps, "
                         f"off-diagonal mass {residual:.3e}")
        self.residual = residual


class TrivialEigenvalueMissing(ValueError):
    """The expected eigenvalue q+1 (or -(q+1) for bipartite graphs) is not
    present: the input was not a connected regular graph."""


@dataclass(frozen=True)
class Spectrum:
    """All eigenvalues of a symmetric matrix, sorted descending, with
    multiplicity."""

    values: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.array(self.values)


@dataclass(frozen=True)
class NontrivialSpectrum:
    """Eigenvalue multiset with the trivial eigenvalues removed.

    Size is n-1 for a nonbipartite graph (q+1 removed) and n-2 for a
    bipartite one (both q+1 and -(q+1) removed).
    """

    values: tuple[float, ...]
    q: int

    def __len__(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.array(self.values)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.values))) if self.values else 0.0


def _off_mass(a: np.ndarray) -> float:
    return float(np.sqrt(np.sum(np.square(a - np.diag(np.diagonal(a))))))


def _sweep(a: np.ndarray) -> None:
    n = a.shape[0]
    for p in range(n - 1):
        for q in range(p + 1, n):
            apq = a[p, q]
            if apq == 0.0:
                continue
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
            c = 1.0 / math.sqrt(t * t + 1.0)
            s = t * c
            rp, rq = a[p, :].copy(), a[q, :].copy()
            a[p, :] = c * rp - s * rq
            a[q, :] = s * rp + c * rq
            cp, cq = a[:, p].copy(), a[:, q].copy()
            a[:, p] = c * cp - s * cq
            a[:, q] = s * cp + c * cq


def eigenvalues_symmetric(m: np.ndarray, tol: float = JACOBI_TOL) -> Spectrum:
    """All eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Iterates sweeps until the off-diagonal Frobenius mass falls below
    tol * ||m||_F, with a cap of MAX_SWEEPS sweeps.  Symmetry is required
    exactly (inputs are integer matrices).
    """
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NonSymmetricError(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise NonSymmetricError("matrix is not symmetric")
    a = a.astype(np.float64).copy()
    target = tol * float(np.linalg.norm(a))
    for _ in range(MAX_SWEEPS):
        if _off_mass(a) <= target:
            break
        _sweep(a)
    else:
        residual = _off_mass(a)
        if residual > target:
            raise JacobiConvergenceError(residual)
    vals = np.sort(np.diagonal(a))[::-1]
    return Spectrum(tuple(float(v) for v in vals))


def nontrivial_spectrum(s: Spectrum, p: GraphProfile,
                        match_tol: float = TRIVIAL_MATCH_TOL) -> NontrivialSpectrum:
    """Remove the trivial eigenvalues from a full spectrum.

    Removes exactly one occurrence nearest q+1 and, for bipartite graphs,
    one nearest -(q+1).  A nearest candidate deviating by more than
    match_tol * (q+1) signals a non-connected or non-regular input that
    slipped through validation.
    """
    targets = [p.q + 1.0]
    if p.bipartite:
        targets.append(-(p.q + 1.0))
    remaining = list(s.values)
    for t in targets:
        idx = min(range(len(remaining)), key=lambda i: abs(remaining[i] - t))
        if abs(remaining[idx] - t) > match_tol * (p.q + 1.0):
            raise TrivialEigenvalueMissing(
                f"no eigenvalue within {match_tol:.1e}*(q+1) of {t:g}; "
                f"nearest is {remaining[idx]:.12g}")
        remaining.pop(idx)
    return NontrivialSpectrum(values=tuple(remaining), q=p.q)


def scaled_spectrum(ns: NontrivialSpectrum) -> np.ndarray:
    """The nontrivial eigenvalues divided by sqrt(q), order preserved."""
    return ns.as_array() / math.sqrt(ns.q)
