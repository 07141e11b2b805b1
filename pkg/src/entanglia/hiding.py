"""Two-classical-bit hiding over the activable bound entangled family.

The codebook is fixed: 0 -> rho+, 1 -> rho-, 2 -> sigma+, 3 -> sigma-.
The parity attack (computational-basis sampling) leaks the family bit by
design; the +/- bit and every (n-1)-party marginal carry no information.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bound_entangled import PAIRING, BEFamily, be_family, unlock
from .errors import BadParty, BadSecret, OddN
from .linalg import partial_trace, trace_norm
from .states import bell

CODEBOOK = {0: "rho+", 1: "rho-", 2: "sigma+", 3: "sigma-"}


@dataclass
class HiddenState:
    n_qubits: int
    secret: int
    label: str
    state: np.ndarray
    family: BEFamily

    @property
    def dims(self):
        return (2,) * self.n_qubits


def hide(secret, n, family=None):
    """Encode a 2-bit secret as the codebook state on n qubits."""
    if secret not in CODEBOOK:
        raise BadSecret(f"secret must be 0..3, got {secret}")
    if n % 2 != 0 or n < 4:
        raise OddN(f"need an even qubit count >= 4, got {n}")
    fam = family if family is not None else be_family(n)
    label = CODEBOOK[secret]
    return HiddenState(n_qubits=n, secret=secret, label=label, state=fam.states[label], family=fam)


def decode_global(h):
    """Authorized global decode: argmax overlap against the codebook."""
    overlaps = {
        s: float(np.trace(h.family.states[lab] @ h.state).real) for s, lab in CODEBOOK.items()
    }
    return max(overlaps, key=overlaps.get)


def string_distribution(state):
    """Exact computational-basis sampling distribution (the diagonal)."""
    return np.asarray(state).diagonal().real.copy()


def parity_attack(h, seed=0, shots=1000):
    """Sample basis strings and read the zero-count parity.

    The returned family bit always equals the secret's high bit (the
    protocol's documented leak); the +/- guess (taken from each string's
    first bit) stays at chance.
    """
    if shots < 1:
        raise BadSecret(f"shots must be >= 1, got {shots}")
    rng = np.random.default_rng(seed)
    n = h.n_qubits
    support = h.family.support_vectors[h.label]
    # each support vector is (|p> +/- |pbar>)/sqrt(2): grab the two strings
    pairs = [tuple(int(i) for i in np.nonzero(v)[0]) for v in support]
    even_count = 0
    pm_matches = 0
    counts = {}
    true_pm = h.secret & 1
    for _ in range(shots):
        p = pairs[rng.integers(len(pairs))]
        s = int(p[rng.integers(2)])
        zeros = n - bin(s).count("1")
        if zeros % 2 == 0:
            even_count += 1
        first_bit = (s >> (n - 1)) & 1
        if first_bit == true_pm:
            pm_matches += 1
        key = format(s, f"0{n}b")
        counts[key] = counts.get(key, 0) + 1
    family_bit = 0 if even_count * 2 >= shots else 1
    return {
        "family_bit": family_bit,
        "family_bit_correct": family_bit == (h.secret >> 1),
        "even_parity_fraction": even_count / shots,
        "pm_match_rate": pm_matches / shots,
        "counts": counts,
    }


def trace_security(h, excluded_party):
    """Trace distance of the remaining parties' marginal from maximal
    mixedness; zero means the coalition learns nothing."""
    n = h.n_qubits
    if not 0 <= excluded_party < n:
        raise BadParty(f"party index {excluded_party} outside 0..{n - 1}")
    keep = [i for i in range(n) if i != excluded_party]
    reduced = partial_trace(h.state, h.dims, keep)
    flat = np.eye(1 << (n - 1)) / (1 << (n - 1))
    return trace_norm(reduced - flat)


def decode_by_unlock(h, seed=0):
    """Authorized decode with the first n-2 parties grouped.

    They measure the four (n-2)-qubit supports; the conditional Bell state
    on the last pair pins the secret through the recursion pairing.
    """
    outcomes = unlock(h.family, h.label)
    rng = np.random.default_rng(seed)
    probs = np.array([o["probability"] for o in outcomes])
    picked = outcomes[rng.choice(len(outcomes), p=probs / probs.sum())]
    cond = picked["conditional"]
    fid = {k: float((bell(k).conj() @ cond @ bell(k)).real) for k in ("phi+", "phi-", "psi+", "psi-")}
    observed_bell = max(fid, key=fid.get)
    for secret, lab in CODEBOOK.items():
        if PAIRING[lab][picked["outcome"]] == observed_bell:
            return secret
    raise BadSecret("outcome/Bell combination matches no codebook state")


def run_demo(n, trials, seed=0, shots=500):
    """Full protocol simulation: hide, attack, security check, unlock-decode.

    Deterministic per seed; returns aggregate rates.
    """
    fam = be_family(n)
    unlock_hits = 0
    family_hits = 0
    pm_rate_total = 0.0
    sec_max = 0.0
    for t in range(trials):
        rng = np.random.default_rng((seed, t))
        secret = int(rng.integers(4))
        h = hide(secret, n, family=fam)
        attack = parity_attack(h, seed=(seed, t, 1), shots=shots)
        family_hits += attack["family_bit_correct"]
        pm_rate_total += attack["pm_match_rate"]
        sec_max = max(sec_max, max(trace_security(h, p) for p in range(n)))
        if decode_by_unlock(h, seed=(seed, t, 2)) == secret:
            unlock_hits += 1
    return {
        "n": n,
        "trials": trials,
        "seed": seed,
        "shots": shots,
        "unlock_rate": unlock_hits / trials,
        "family_leak_rate": family_hits / trials,
        "pm_bit_rate": pm_rate_total / trials,
        "trace_security_max": sec_max,
    }
