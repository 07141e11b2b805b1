"""Majorization engine over real vectors plus the doubly-stochastic machinery.

Vectors are accepted unsorted and possibly of unequal length; operations
sort descending and zero-pad internally, so callers never pre-sort.
"""

from __future__ import annotations

import enum

import numpy as np

from .errors import BadResolution, NotMajorized, TraceMismatch
from .linalg import eigvals_hermitian, is_hermitian
from .tolerances import MAJ_TOL, TRACE_TOL


class MajVerdict(enum.Enum):
    XPrecY = "XPrecY"  # x majorized by y
    YPrecX = "YPrecX"
    Equal = "Equal"
    Incomparable = "Incomparable"


def as_prob_vector(v, tol=TRACE_TOL):
    """Validate and clean a probability vector (clamps -1e-12 noise to 0)."""
    v = np.asarray(v, dtype=float).copy()
    if v.ndim != 1 or v.size == 0:
        raise TraceMismatch("expected a nonempty 1-d probability vector")
    if np.min(v) < -1e-12:
        raise TraceMismatch(f"negative component {np.min(v)} in probability vector")
    v[v < 0] = 0.0
    if abs(v.sum() - 1.0) > tol:
        raise TraceMismatch(f"probability vector sums to {v.sum()}, not 1")
    return v


def sorted_padded(x, y):
    """Descending-sorted copies zero-padded to a common length."""
    x = np.sort(np.asarray(x, dtype=float))[::-1]
    y = np.sort(np.asarray(y, dtype=float))[::-1]
    d = max(x.size, y.size)
    x = np.pad(x, (0, d - x.size))
    y = np.pad(y, (0, d - y.size))
    return x, y


def partial_sums(v):
    return np.cumsum(np.sort(np.asarray(v, dtype=float))[::-1])


def majorizes(x, y, tol=MAJ_TOL):
    """True iff x is majorized by y (x more mixed than y).

    Every descending partial sum of x must stay <= the corresponding sum of
    y within `tol`; totals must agree within the trace tolerance.
    """
    xs, ys = sorted_padded(x, y)
    if abs(xs.sum() - ys.sum()) > TRACE_TOL:
        raise TraceMismatch(f"totals differ: {xs.sum()} vs {ys.sum()}")
    return bool(np.all(np.cumsum(xs) <= np.cumsum(ys) + tol))


def compare(x, y, tol=MAJ_TOL):
    """Classify the pair: XPrecY, YPrecX, Equal or Incomparable."""
    xs, ys = sorted_padded(x, y)
    if abs(xs.sum() - ys.sum()) > TRACE_TOL:
        raise TraceMismatch(f"totals differ: {xs.sum()} vs {ys.sum()}")
    if np.max(np.abs(xs - ys)) <= tol:
        return MajVerdict.Equal
    fwd = bool(np.all(np.cumsum(xs) <= np.cumsum(ys) + tol))
    bwd = bool(np.all(np.cumsum(ys) <= np.cumsum(xs) + tol))
    if fwd and bwd:
        return MajVerdict.Equal
    if fwd:
        return MajVerdict.XPrecY
    if bwd:
        return MajVerdict.YPrecX
    return MajVerdict.Incomparable


def is_doubly_stochastic(a, tol=MAJ_TOL):
    """Entries nonnegative, every row and column summing to 1."""
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    if np.iscomplexobj(a):
        if np.max(np.abs(a.imag)) > 1e-12:
            return False
        a = a.real
    return bool(
        np.min(a) >= -tol
        and np.max(np.abs(a.sum(axis=0) - 1.0)) <= tol
        and np.max(np.abs(a.sum(axis=1) - 1.0)) <= tol
    )


def ds_witness(x, y, tol=MAJ_TOL):
    """Doubly stochastic A with A @ sort(y) = sort(x), as a T-transform chain.

    Classical Hardy-Littlewood-Polya construction: each step mixes the
    identity with one transposition, fixing at least one coordinate, so at
    most d-1 factors are needed.
    """
    if not majorizes(x, y, tol):
        raise NotMajorized("x is not majorized by y")
    xs, ys = sorted_padded(x, y)
    d = xs.size
    a = np.eye(d)
    v = ys.copy()
    for _ in range(d):
        diff = v - xs
        if np.max(np.abs(diff)) <= tol:
            break
        j = int(np.argmax(diff > tol))  # first v_j > x_j
        ks = np.nonzero(diff[j + 1:] < -tol)[0]
        if ks.size == 0:
            break
        k = j + 1 + int(ks[0])
        delta = min(v[j] - xs[j], xs[k] - v[k])
        t = 1.0 - delta / (v[j] - v[k])
        step = np.eye(d)
        step[j, j] = step[k, k] = t
        step[j, k] = step[k, j] = 1.0 - t
        v = step @ v
        a = step @ a
    return a


def spectra_majorized(rho, sigma, tol=MAJ_TOL):
    """spectrum(rho) majorized by spectrum(sigma), traces matching."""
    return majorizes(eigvals_hermitian(rho), eigvals_hermitian(sigma), tol)


def dephase(rho, projectors, tol=MAJ_TOL):
    """Pinch rho through a complete set of orthogonal projectors.

    Returns sum_j P_j rho P_j; its spectrum is majorized by rho's.
    """
    rho = np.asarray(rho, dtype=complex)
    n = rho.shape[0]
    total = np.zeros_like(rho)
    for i, p in enumerate(projectors):
        p = np.asarray(p, dtype=complex)
        if not is_hermitian(p) or np.max(np.abs(p @ p - p)) > 1e-9:
            raise BadResolution(f"element {i} is not an orthogonal projector")
        total += p
    if np.max(np.abs(total - np.eye(n))) > tol:
        raise BadResolution("projectors do not resolve the identity")
    out = np.zeros_like(rho)
    for p in projectors:
        out += np.asarray(p, dtype=complex) @ rho @ np.asarray(p, dtype=complex)
    return out


def ensemble_exists(p, lam, tol=MAJ_TOL):
    """Whether a pure-state ensemble with probabilities p realizes a state
    whose spectrum is lam: holds iff p is majorized by lam."""
    return majorizes(as_prob_vector(p), as_prob_vector(lam), tol)
