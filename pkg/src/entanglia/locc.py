"""Deterministic LOCC convertibility of pure bipartite states: the Nielsen
criterion, incomparability classification, catalysis, multi-copy conversion,
entanglement assistance and mutual cooperation.

States enter as Schmidt vectors (descending probabilities).  Every plan
emitted by the constructive routines is certified by the direct
product-vector majorization check before it is returned, so search
heuristics affect completeness, never soundness.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    Degenerate,
    EmptyRange,
    NoPlanFound,
    NotIncomparable3x3,
    RankMismatch,
    TooLarge,
)
from .majorization import MajVerdict, as_prob_vector, compare, majorizes
from .measures import binary_entropy
from .tolerances import MAJ_TOL

_TIE = 1e-9


def _schmidt_sorted(v):
    return np.sort(as_prob_vector(v))[::-1]


def _strip(v):
    """Descending sort with trailing zeros removed."""
    v = _schmidt_sorted(v)
    nz = np.nonzero(v > 1e-12)[0]
    return v[: nz[-1] + 1] if nz.size else v[:1]


def vec_kron(a, b):
    """Schmidt vector of a tensor product (outer product, flattened)."""
    return np.outer(np.asarray(a, dtype=float), np.asarray(b, dtype=float)).reshape(-1)


def nielsen(a, b, tol=MAJ_TOL):
    """True iff the state with Schmidt vector a converts to b under
    deterministic LOCC (a majorized by b)."""
    return majorizes(_schmidt_sorted(a), _schmidt_sorted(b), tol)


@dataclass(frozen=True)
class PairClass:
    verdict: MajVerdict
    pattern_3x3: str | None  # "A", "B" or None
    strong: bool
    catalysis_possible: bool


def _chain_ge(seq):
    return all(seq[i] >= seq[i + 1] - _TIE for i in range(len(seq) - 1))


def classify(a, b):
    """Full pair classification: verdict, 3x3 interleaving pattern, strong
    incomparability, and the first/last-coefficient catalysis filter."""
    verdict = compare(a, b)
    sa, sb = _strip(a), _strip(b)
    d = max(sa.size, sb.size)
    sa = np.pad(sa, (0, d - sa.size))
    sb = np.pad(sb, (0, d - sb.size))
    a1, ad = float(sa[0]), float(sa[-1])
    b1, bd = float(sb[0]), float(sb[-1])
    strong = (a1 < b1 - _TIE and ad < bd - _TIE) or (a1 > b1 + _TIE and ad > bd + _TIE)
    cat = (a1 <= b1 + _TIE) and (ad >= bd - _TIE)
    pattern = None
    if verdict is MajVerdict.Incomparable and _strip(a).size == 3 and _strip(b).size == 3:
        if _chain_ge([a1, b1, sb[1], sa[1], sa[2], sb[2]]):
            pattern = "A"
        elif _chain_ge([b1, a1, sa[1], sb[1], sb[2], sa[2]]):
            pattern = "B"
    return PairClass(verdict=verdict, pattern_3x3=pattern, strong=strong, catalysis_possible=cat)


def tensor_power(a, k):
    out = np.asarray(a, dtype=float)
    for _ in range(k - 1):
        out = vec_kron(out, a)
    return out


def multicopy(a, b, k, tol=MAJ_TOL):
    """Whether k joint copies convert: nielsen on the k-fold tensor powers."""
    sa, sb = _strip(a), _strip(b)
    if (sa.size * sb.size) ** k > 10**6:
        raise TooLarge(f"(rank_a * rank_b)^k = {(sa.size * sb.size) ** k} exceeds 10^6")
    return majorizes(tensor_power(sa, k), tensor_power(sb, k), tol)


def find_catalyst_2x2(a, b, grid_step=1e-3):
    """First c in [1/2, 1) whose 2x2 catalyst (c, 1-c) makes the conversion
    pass; None when the necessary condition fails or no grid point works."""
    if not classify(a, b).catalysis_possible:
        return None
    sa, sb = _schmidt_sorted(a), _schmidt_sorted(b)
    i = 0
    while True:
        c = 0.5 + i * grid_step
        if c >= 1.0 - 1e-12:
            return None
        chi = np.array([c, 1.0 - c])
        if majorizes(vec_kron(sa, chi), vec_kron(sb, chi)):
            return float(c)
        i += 1


def assist_max_entangled(a, b):
    """Whether a (x) maxent(d-1) -> b (x) product passes, via the d-1
    simplified partial-sum conditions k a1/(d-1) <= sum_1^k b_i."""
    sa, sb = _strip(a), _strip(b)
    if sa.size != sb.size or sa.size < 3:
        raise RankMismatch(
            f"equal Schmidt rank >= 3 required, got ranks {sa.size} and {sb.size}"
        )
    d = sa.size
    sums = np.cumsum(sb)
    return bool(all(k * sa[0] / (d - 1) <= sums[k - 1] + MAJ_TOL for k in range(1, d)))


def assist_max_entangled_direct(a, b):
    """The same transformation checked on the explicit product vectors
    (cross-validation partner of assist_max_entangled)."""
    sa, sb = _strip(a), _strip(b)
    if sa.size != sb.size or sa.size < 3:
        raise RankMismatch(
            f"equal Schmidt rank >= 3 required, got ranks {sa.size} and {sb.size}"
        )
    d = sa.size
    maxent = np.full(d - 1, 1.0 / (d - 1))
    product = np.zeros(d - 1)
    product[0] = 1.0
    return majorizes(vec_kron(sa, maxent), vec_kron(sb, product))


@dataclass(frozen=True)
class AssistPlan:
    kind: str  # "MaxEntangledLowerRank" or "TwoByTwo"
    resource: np.ndarray
    consumed: bool
    c0: float | None = None
    e0: float | None = None


def _require_incomparable_3x3(a, b):
    sa, sb = _strip(a), _strip(b)
    if sa.size != 3 or sb.size != 3:
        raise NotIncomparable3x3(f"need rank-3 vectors, got ranks {sa.size}, {sb.size}")
    if compare(sa, sb) is not MajVerdict.Incomparable:
        raise NotIncomparable3x3("pair is comparable")
    return sa, sb


def min_assist_3x3(a, b):
    """Cheapest 2x2 assisting state for a 3x3 incomparable pair.

    Type-1 (a1 < b1): c0 = (b1+b2)/(a1+a2); Type-2 (a1 > b1): c0 = b1/a1.
    The plan resource (c0, 1-c0) is consumed (target arrives with a product
    ancilla), unlike a catalyst.
    """
    sa, sb = _require_incomparable_3x3(a, b)
    if sa[0] < sb[0] and sa[0] + sa[1] > sb[0] + sb[1]:
        c0 = (sb[0] + sb[1]) / (sa[0] + sa[1])
    elif sa[0] > sb[0] and sa[0] + sa[1] < sb[0] + sb[1]:
        c0 = sb[0] / sa[0]
    else:
        raise NotIncomparable3x3("pair fits neither 3x3 incomparability type")
    return AssistPlan(
        kind="TwoByTwo",
        resource=np.array([c0, 1.0 - c0]),
        consumed=True,
        c0=float(c0),
        e0=binary_entropy(c0),
    )


def maxent_ladder(d):
    """2x2 Schmidt vectors whose joint product reaches the rank-d maximally
    entangled state: ((d-i)/(d-i+1), 1/(d-i+1)) for i = 1..d-1."""
    if d < 2:
        raise RankMismatch(f"d = {d} must be at least 2")
    return [np.array([(d - i) / (d - i + 1.0), 1.0 / (d - i + 1.0)]) for i in range(1, d)]


# ---------------------------------------------------------------------------
# mutual cooperation


@dataclass(frozen=True)
class CoopPlan:
    chi: np.ndarray
    eta: np.ndarray
    joint_ok: bool
    cross_incomparable: dict  # keys: psi_phi, chi_eta, psi_eta, chi_phi

    @property
    def valid(self):
        return self.joint_ok and self.cross_incomparable["chi_eta"]


def coop_validate(a, b, chi, eta):
    """Evaluate a proposed auxiliary pair: the joint conversion check plus
    all four cross-incomparability flags."""
    sa, sb = _schmidt_sorted(a), _schmidt_sorted(b)
    sc, se = _schmidt_sorted(chi), _schmidt_sorted(eta)
    inc = lambda x, y: compare(x, y) is MajVerdict.Incomparable
    return CoopPlan(
        chi=sc,
        eta=se,
        joint_ok=majorizes(vec_kron(sa, sc), vec_kron(sb, se)),
        cross_incomparable={
            "psi_phi": inc(sa, sb),
            "chi_eta": inc(sc, se),
            "psi_eta": inc(sa, se),
            "chi_phi": inc(sc, sb),
        },
    )


def _coop_case1_candidates(sa, sb):
    """Recipe for a1 > b1: chi = (b1, b1, b2), eta = (a1, a2, a2) shapes."""
    a1, _, a3 = sa
    b1, b2, b3 = sb
    ratio0 = max(a1 / sa[1], b1 / b3)
    for margin in (1.02, 1.05, 1.1, 1.2, 1.5, 2.0, 3.0):
        ratio = ratio0 * margin
        alpha2 = 1.0 / (ratio + 2.0)
        alpha1 = ratio * alpha2
        lower = max(
            alpha2 * b3 / a3,
            alpha2 * (b2 + 2.0 * b3),
            (alpha2 * (2.0 - b1) - a3) / (1.0 - a3),
            1.0 - alpha1 * (b1 + b2) / a1,
            1.0 - 2.0 * alpha1,
            0.0,
        )
        upper = min(a3 / (2.0 * a1 + a3), 1.0 / 3.0, alpha2)
        if lower >= upper:
            continue
        for frac in (0.05, 0.25, 0.5, 0.75, 0.95):
            beta2 = lower + frac * (upper - lower)
            beta1 = (1.0 - beta2) / 2.0
            yield np.array([beta1, beta1, beta2]), np.array([alpha1, alpha2, alpha2])


def _coop_case2_candidates(sa, sb, seed):
    """Structured search for a1 < b1: chi = (b1, b2, b3), eta = (a1, a1, a2)."""
    a1 = sa[0]
    b1 = sb[0]
    rng = np.random.default_rng((seed, 2))
    # first guesses: chi with its two small entries tied
    for beta1 in np.linspace(max(a1, 1.0 / 3.0) + 0.005, min(0.95, a1 + 0.25), 12):
        tail = (1.0 - beta1) / 2.0
        chi = np.array([beta1, tail, tail])
        lo = max(1.0 / 3.0 + 1e-6, a1 * beta1 / b1 + 1e-6)
        hi = min(beta1, (beta1 + tail) / 2.0, 0.5 - 1e-6)
        if lo >= hi:
            continue
        for alpha1 in np.linspace(lo + 0.02 * (hi - lo), hi - 0.02 * (hi - lo), 9):
            yield chi, np.array([alpha1, alpha1, 1.0 - 2.0 * alpha1])
    # loosen the tie
    for _ in range(4000):
        beta = np.sort(rng.dirichlet(np.ones(3)))[::-1]
        if beta[0] <= a1 or beta[2] < 1e-3:
            continue
        lo = max(1.0 / 3.0 + 1e-6, a1 * beta[0] / b1 + 1e-6)
        hi = min(beta[0], (beta[0] + beta[1]) / 2.0, 0.5 - 1e-6)
        if lo >= hi:
            continue
        alpha1 = rng.uniform(lo, hi)
        yield beta, np.array([alpha1, alpha1, 1.0 - 2.0 * alpha1])


def coop_construct(a, b, seed=0, fallback_samples=10**5):
    """Auxiliary incomparable pair (chi, eta) making the joint conversion
    a (x) chi -> b (x) eta pass with certainty.

    Follows the 3x3 case recipes first, then a seeded randomized search;
    every candidate is certified by the direct majorization check, and a
    candidate whose four cross pairs are all incomparable is preferred.
    """
    sa, sb = _require_incomparable_3x3(a, b)
    if sa[0] - sa[1] <= _TIE or sa[1] - sa[2] <= _TIE:
        raise Degenerate("source vector must have strictly distinct entries")

    if sa[0] > sb[0]:
        candidates = _coop_case1_candidates(sa, sb)
    else:
        candidates = _coop_case2_candidates(sa, sb, seed)

    first_valid = None
    for chi, eta in candidates:
        plan = coop_validate(sa, sb, chi, eta)
        if plan.valid:
            if all(plan.cross_incomparable.values()):
                return plan
            if first_valid is None:
                first_valid = plan

    # randomized search; a plan whose four cross pairs are all incomparable
    # wins over the recipe's partially-comparable one
    rng = np.random.default_rng((seed, 99))
    for i in range(fallback_samples):
        chi = np.sort(rng.dirichlet(np.ones(3)))[::-1]
        eta = np.sort(rng.dirichlet(np.ones(3)))[::-1]
        plan = coop_validate(sa, sb, chi, eta)
        if plan.valid:
            if all(plan.cross_incomparable.values()):
                return plan
            if first_valid is None:
                first_valid = plan
            if i >= fallback_samples // 5:
                break
    if first_valid is not None:
        return first_valid
    raise NoPlanFound("no auxiliary pair found by recipe or randomized search")


# ---------------------------------------------------------------------------
# two copies of the same source


@dataclass(frozen=True)
class SplitRange:
    case: int  # 1: eta = (x, x, 1-2x); 2: eta = (1-2x, x, x)
    param_interval: tuple
    eta: np.ndarray  # validated representative (interval midpoint)
    subcase: str


def _split_eta(case, x):
    if case == 1:
        return np.array([x, x, 1.0 - 2.0 * x])
    return np.array([1.0 - 2.0 * x, x, x])


def split_two_copies(a, b):
    """Admissible eta range with psi^(x2) -> chi (x) eta and eta
    incomparable with the source psi (Schmidt vectors a and b here).

    Case-1 (a1 < b1) uses eta = (x, x, 1-2x); Case-2 (a1 > b1) uses
    eta = (1-2x, x, x).  The returned representative is re-validated by the
    direct 9-entry majorization check.
    """
    sa, sb = _require_incomparable_3x3(a, b)
    a1, a2, a3 = sa
    b1, b2, b3 = sb
    if a1 - a2 <= _TIE or a2 - a3 <= _TIE:
        raise Degenerate("source Schmidt coefficients must be strictly distinct")

    shared = [a1**2 / b1, a1 * (a1 + 2.0 * a2) / (2.0 * b1 + b2), a1 - (a1**2 - a2**2) / 2.0]
    if a1 < b1:
        case = 1
        if a2**2 >= a1 * a3:
            subcase = "a2^2 >= a1*a3"
            if (a1 + a2) ** 2 / (2.0 * (b1 + b2)) >= a1:
                raise EmptyRange("(a1+a2)^2 / (2(b1+b2)) >= a1: no admissible eta")
            lo = max(*shared, (a1 + a2) ** 2 / (2.0 * (b1 + b2)), (a1 + a2) / 2.0)
        else:
            subcase = "a2^2 < a1*a3"
            if a1 + 2.0 * a2 >= 2.0 * b1 + b2:
                raise EmptyRange("a1 + 2 a2 >= 2 b1 + b2: no admissible eta")
            lo = max(*shared, a1 * (2.0 - a1) / (2.0 - b3), (a1 + a2) / 2.0)
        hi = min(a1, 0.5 - 1e-12)
    else:
        case = 2
        if a3 >= 0.5 * (1.0 - a1**2 / b1):
            raise EmptyRange("a3 >= (1 - a1^2/b1)/2: no admissible eta")
        bounds = [a3**2 / b3, a3 * (2.0 * a2 + a3) / (b2 + 2.0 * b3)]
        if a2**2 >= a1 * a3:
            subcase = "a2^2 >= a1*a3"
            bounds.append(a1 * a3 / b1)
        else:
            subcase = "a2^2 < a1*a3"
            bounds.append(a3 + (a2**2 - a3**2) / 2.0)
        lo = a3
        hi = min(*bounds, (1.0 - a1) / 2.0, 1.0 / 3.0)
    if lo >= hi - 1e-12:
        raise EmptyRange(f"empty parameter interval ({lo}, {hi})")

    source_sq = vec_kron(sa, sa)
    for frac in (0.5, 0.25, 0.75, 0.1, 0.9):
        x = lo + frac * (hi - lo)
        eta = _split_eta(case, x)
        if (
            majorizes(source_sq, vec_kron(sb, eta))
            and compare(sa, eta) is MajVerdict.Incomparable
        ):
            return SplitRange(case=case, param_interval=(float(lo), float(hi)), eta=eta, subcase=subcase)
    raise EmptyRange("interval candidates failed the direct validation checks")
