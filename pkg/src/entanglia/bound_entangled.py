"""Activable bound entangled states on 2N qubits, the 3x3 bound entangled
state of the mixed-plus-product form, and the Tiles unextendible product
basis with its complement state.

Qubit index 0 is the leftmost tensor factor throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import BadLabel, BadParam, OddN, TooLarge
from .linalg import (
    eigvals_hermitian,
    kron,
    kron_all,
    partial_trace,
    partial_transpose,
    permute_subsystems,
    projector,
)
from .states import ID2, SIGMA_X, SIGMA_Y, SIGMA_Z, bell, ket

LABELS = ("rho+", "rho-", "sigma+", "sigma-")

# Bell state paired with each measurement outcome, per family label.
PAIRING = {
    "rho+": {"rho+": "phi+", "rho-": "phi-", "sigma+": "psi+", "sigma-": "psi-"},
    "rho-": {"rho+": "phi-", "rho-": "phi+", "sigma+": "psi-", "sigma-": "psi+"},
    "sigma+": {"rho+": "psi+", "rho-": "psi-", "sigma+": "phi+", "sigma-": "phi-"},
    "sigma-": {"rho+": "psi-", "rho-": "psi+", "sigma+": "phi-", "sigma-": "phi+"},
}

# Conjugating rho+ by this Pauli on any single qubit yields the sibling.
PAULI_CONNECTION = {"rho+": ID2, "rho-": SIGMA_Z, "sigma+": SIGMA_X, "sigma-": 1j * SIGMA_Y}


@dataclass
class BEFamily:
    n_qubits: int
    states: dict  # label -> 2^n x 2^n density matrix
    support_vectors: dict  # label -> list of 2^n amplitude vectors

    @property
    def dims(self):
        return (2,) * self.n_qubits


def _check_n(n, cap=10):
    if n % 2 != 0:
        raise OddN(f"family exists only for even qubit numbers, got {n}")
    if not 4 <= n <= cap:
        raise TooLarge(f"n = {n} outside supported range 4..{cap}")


def support_strings(n):
    """Basis-string pairs (p, complement of p) per family label.

    p runs over strings with first bit 0; even zero-count strings feed the
    rho family, odd the sigma family.
    """
    pairs = {"rho": [], "sigma": []}
    mask = (1 << n) - 1
    for p in range(1 << (n - 1)):  # first (leftmost) qubit is 0
        zeros = n - bin(p).count("1")
        fam = "rho" if zeros % 2 == 0 else "sigma"
        pairs[fam].append((p, p ^ mask))
    return pairs


def support_vectors(n):
    """The four orthonormal support sets (|p> +/- |pbar>)/sqrt(2)."""
    dim = 1 << n
    pairs = support_strings(n)
    out = {}
    for fam in ("rho", "sigma"):
        for sign, tag in ((1.0, "+"), (-1.0, "-")):
            vecs = []
            for p, pbar in pairs[fam]:
                v = np.zeros(dim, dtype=complex)
                v[p] = 1.0 / math.sqrt(2.0)
                v[pbar] = sign / math.sqrt(2.0)
                vecs.append(v)
            out[fam + tag] = vecs
    return out


def be_family_direct(n):
    """Support-set construction: each state is the uniform mixture of its
    2^(n-2) support vectors."""
    _check_n(n)
    sup = support_vectors(n)
    states = {}
    for label in LABELS:
        acc = np.zeros((1 << n, 1 << n), dtype=complex)
        for v in sup[label]:
            acc += projector(v)
        states[label] = acc / len(sup[label])
    return BEFamily(n_qubits=n, states=states, support_vectors=sup)


def _base_four_qubit():
    bells = {k: projector(bell(k)) for k in ("phi+", "phi-", "psi+", "psi-")}
    mix = lambda pairs: sum(kron(bells[x], bells[y]) for x, y in pairs) / 4.0
    return {
        "rho+": mix([("phi+", "phi+"), ("phi-", "phi-"), ("psi+", "psi+"), ("psi-", "psi-")]),
        "rho-": mix([("phi+", "phi-"), ("phi-", "phi+"), ("psi+", "psi-"), ("psi-", "psi+")]),
        "sigma+": mix([("phi+", "psi+"), ("phi-", "psi-"), ("psi+", "phi+"), ("psi-", "phi-")]),
        "sigma-": mix([("phi+", "psi-"), ("phi-", "psi+"), ("psi+", "phi-"), ("psi-", "phi+")]),
    }


def be_family(n):
    """Recursive construction: Bell-correlate the four (n-2)-qubit states
    with the four Bell projectors on two appended qubits."""
    _check_n(n)
    states = _base_four_qubit()
    bells = {k: projector(bell(k)) for k in ("phi+", "phi-", "psi+", "psi-")}
    for _ in range((n - 4) // 2):
        states = {
            lab: sum(kron(states[out], bells[PAIRING[lab][out]]) for out in LABELS) / 4.0
            for lab in LABELS
        }
    return BEFamily(n_qubits=n, states=states, support_vectors=support_vectors(n))


def even_cuts(n):
    """Canonical even:even bipartitions (side containing qubit 0)."""
    from itertools import combinations

    cuts = []
    for size in range(2, n - 1, 2):
        for rest in combinations(range(1, n), size - 1):
            cuts.append((0,) + rest)
    return cuts


@dataclass
class FamilyReport:
    n_qubits: int
    orthogonal: bool
    permutation_symmetric: bool
    even_cut_ppt: bool
    single_vs_rest_npt: bool
    pauli_connected: bool
    reduced_max_mixed: bool
    unlock_ok: bool
    cut_evidence: list = field(default_factory=list)  # (label, cut, min PT eig)

    @property
    def all_pass(self):
        return all(
            [
                self.orthogonal,
                self.permutation_symmetric,
                self.even_cut_ppt,
                self.single_vs_rest_npt,
                self.pauli_connected,
                self.reduced_max_mixed,
                self.unlock_ok,
            ]
        )


def _pauli_on(op, k, n):
    return kron_all([op if j == k else ID2 for j in range(n)])


def verify_family(fam, quick=False, npt_tol=1e-6, jobs=1):
    """Run the seven family checks and collect per-cut PT evidence.

    quick=True skips the partial-transpose eigenproblems (intended for
    n = 10 where full verification is out of desk range); jobs > 1 fans the
    per-cut eigenproblems over a thread pool with deterministic collection.
    """
    n = fam.n_qubits
    dims = fam.dims
    labels = LABELS

    orthogonal = all(
        abs(np.trace(fam.states[x] @ fam.states[y]).real) < 1e-12
        for i, x in enumerate(labels)
        for y in labels[i + 1:]
    )

    permutation_symmetric = True
    for k in range(n - 1):
        perm = list(range(n))
        perm[k], perm[k + 1] = perm[k + 1], perm[k]
        for lab in labels:
            swapped, _ = permute_subsystems(fam.states[lab], dims, perm)
            if np.max(np.abs(swapped - fam.states[lab])) > 1e-12:
                permutation_symmetric = False

    evidence = []
    even_cut_ppt = True
    single_vs_rest_npt = True
    if not quick:
        even = even_cuts(n)
        tasks = [(lab, cut) for cut in even for lab in labels]
        tasks += [(lab, (j,)) for j in range(n) for lab in labels]

        def min_pt(task):
            lab, cut = task
            return float(eigvals_hermitian(partial_transpose(fam.states[lab], dims, cut))[-1])

        if jobs and jobs > 1:
            from concurrent.futures import ThreadPoolExecutor

            with ThreadPoolExecutor(max_workers=jobs) as pool:
                mins = list(pool.map(min_pt, tasks))
        else:
            mins = [min_pt(t) for t in tasks]
        for (lab, cut), m in zip(tasks, mins):
            evidence.append((lab, cut, m))
            if len(cut) > 1:  # even:even cut
                if m < -1e-9:
                    even_cut_ppt = False
            elif m >= -npt_tol:  # 1:(n-1) cut
                single_vs_rest_npt = False

    pauli_connected = True
    for k in (0, n - 1):
        for lab in labels:
            u = _pauli_on(PAULI_CONNECTION[lab], k, n)
            if np.max(np.abs(u @ fam.states["rho+"] @ u.conj().T - fam.states[lab])) > 1e-9:
                pauli_connected = False

    eye = np.eye(1 << (n - 1)) / (1 << (n - 1))
    reduced_max_mixed = True
    for j in range(n):
        keep = [i for i in range(n) if i != j]
        for lab in labels:
            red = partial_trace(fam.states[lab], dims, keep)
            if np.max(np.abs(red - eye)) > 1e-12:
                reduced_max_mixed = False

    unlock_ok = True
    for lab in labels:
        for out in unlock(fam, lab):
            if abs(out["probability"] - 0.25) > 1e-9 or out["fidelity"] < 1.0 - 1e-9:
                unlock_ok = False

    return FamilyReport(
        n_qubits=n,
        orthogonal=orthogonal,
        permutation_symmetric=permutation_symmetric,
        even_cut_ppt=even_cut_ppt,
        single_vs_rest_npt=single_vs_rest_npt,
        pauli_connected=pauli_connected,
        reduced_max_mixed=reduced_max_mixed,
        unlock_ok=unlock_ok,
        cut_evidence=evidence,
    )


def unlock(fam, label):
    """Group the first n-2 qubits and measure the four family supports.

    Every outcome has probability 1/4 and leaves the last two qubits in the
    Bell state dictated by the recursion pairing.
    """
    if label not in LABELS:
        raise BadLabel(f"unknown state label {label!r}; want one of {LABELS}")
    n = fam.n_qubits
    dims = fam.dims
    rho = fam.states[label]
    eye4 = np.eye(4)
    outcomes = []
    for out_label in LABELS:
        # at n = 4 the (n-2)-qubit supports are exactly the Bell projectors
        proj = sum(projector(v) for v in support_vectors(n - 2)[out_label])
        op = kron(proj, eye4)
        prob = float(np.trace(op @ rho).real)
        cond = partial_trace(op @ rho @ op, dims, keep=[n - 2, n - 1])
        cond = cond / np.trace(cond).real
        predicted = PAIRING[label][out_label]
        b = bell(predicted)
        outcomes.append(
            {
                "outcome": out_label,
                "probability": prob,
                "predicted_bell": predicted,
                "fidelity": float((b.conj() @ cond @ b).real),
                "conditional": cond,
            }
        )
    return outcomes


# ---------------------------------------------------------------------------
# 3x3 bound entangled states


def horodecki_insep():
    """The NPT 3x3 mixed part: (1/8)(I + |v><v| - P00 - P11 - P22 - P20)
    with v = |00> + |11> + |22> (unnormalized)."""
    v = ket(0, 9) + ket(4, 9) + ket(8, 9)
    m = np.eye(9, dtype=complex) + projector(v)
    for idx in (0, 4, 8, 6):  # |00>, |11>, |22>, |20>
        m -= projector(ket(idx, 9))
    return m / 8.0


def horodecki_state(a):
    """(8a rho_ins + |phi_a><phi_a|) / (8a + 1): PPT yet entangled for
    0 < a < 1."""
    if not 0.0 <= a <= 1.0:
        raise BadParam(f"parameter a = {a} outside [0, 1]")
    phi = np.kron(
        ket(2, 3),
        math.sqrt((1.0 + a) / 2.0) * ket(0, 3) + math.sqrt((1.0 - a) / 2.0) * ket(2, 3),
    )
    return (8.0 * a * horodecki_insep() + projector(phi)) / (8.0 * a + 1.0)


def tiles_upb():
    """The five-tile unextendible product basis of the 3x3 system."""
    k0, k1, k2 = (ket(i, 3) for i in range(3))
    s2 = math.sqrt(2.0)
    states = [
        np.kron(k0, (k0 - k1) / s2),
        np.kron((k0 - k1) / s2, k2),
        np.kron(k2, (k1 - k2) / s2),
        np.kron((k1 - k2) / s2, k0),
        np.kron(k0 + k1 + k2, k0 + k1 + k2) / 3.0,
    ]
    return states


def upb_complement(states=None):
    """Normalized projector onto the subspace complementary to the product
    basis: (I - sum |psi_j><psi_j|) / (9 - #states)."""
    if states is None:
        states = tiles_upb()
    comp = np.eye(9, dtype=complex)
    for v in states:
        comp -= projector(v)
    return comp / (9 - len(states))


def upb_unextendibility_score(trials=64, seed=0, states=None, iters=200):
    """Seesaw-maximized overlap of a product state with the complement
    subspace; a value bounded away from 1 evidences unextendibility."""
    if trials < 1:
        raise BadParam("trials must be >= 1")
    if states is None:
        states = tiles_upb()
    comp = np.eye(9, dtype=complex)
    for v in states:
        comp -= projector(v)
    t = comp.reshape(3, 3, 3, 3)
    best = 0.0
    for r in range(trials):
        rng = np.random.default_rng((seed, r))
        u = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        u /= np.linalg.norm(u)
        v = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        v /= np.linalg.norm(v)
        prev = -1.0
        for _ in range(iters):
            mu = np.einsum("b,abcd,d->ac", v.conj(), t, v)
            w, vecs = np.linalg.eigh(mu)
            u = vecs[:, -1]
            mv = np.einsum("a,abcd,c->bd", u.conj(), t, u)
            w, vecs = np.linalg.eigh(mv)
            v = vecs[:, -1]
            val = float(w[-1].real)
            if abs(val - prev) < 1e-14:
                break
            prev = val
        best = max(best, prev)
    return best
