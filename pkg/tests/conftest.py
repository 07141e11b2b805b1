"""Shared test helpers: seeded random objects and independent oracles."""

import zlib

import numpy as np


def rng_for(*key):
    """Deterministic generator from a mixed string/int key."""
    parts = [zlib.crc32(k.encode()) if isinstance(k, str) else int(k) for k in key]
    return np.random.default_rng(parts)


def random_prob(d, rng):
    v = rng.dirichlet(np.ones(d))
    return np.sort(v)[::-1]


def random_density(d, rng, rank=None):
    k = d if rank is None else rank
    g = rng.standard_normal((d, k)) + 1j * rng.standard_normal((d, k))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_unitary(d, rng):
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(g)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def random_doubly_stochastic(d, rng, terms=6):
    """Convex mixture of random permutation matrices (Birkhoff form)."""
    w = rng.dirichlet(np.ones(terms))
    a = np.zeros((d, d))
    for t in range(terms):
        a += w[t] * np.eye(d)[rng.permutation(d)]
    return a


def brute_majorized(x, y, tol=1e-9):
    """Independent partial-sum check (no library calls)."""
    xs = sorted(x, reverse=True)
    ys = sorted(y, reverse=True)
    d = max(len(xs), len(ys))
    xs = xs + [0.0] * (d - len(xs))
    ys = ys + [0.0] * (d - len(ys))
    sx = sy = 0.0
    for i in range(d):
        sx += xs[i]
        sy += ys[i]
        if sx > sy + tol:
            return False
    return abs(sx - sy) <= tol
