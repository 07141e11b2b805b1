"""Tripartite probe constructions that turn candidate single-qubit
operations (exact flip, anti-unitary, angle-preserving) into LOCC verdicts.

The probe is a 3 x (2 x 2) pure state; the candidate operation acts on the
last qubit and the qutrit's reduced spectra before/after are compared.  The
explicit 12-dimensional construction is the primary path; the cubic
closed forms act as a cross-check.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import BadParam
from .linalg import cardan_roots, eigvals_hermitian
from .majorization import MajVerdict, compare
from .measures import shannon
from .states import ket, qubit_to_bloch, reduced_density
from .tolerances import MAJ_TOL

DIMS = (3, 2, 2)

KET_0X = np.array([1.0, 1.0], dtype=complex) / math.sqrt(2.0)
KET_0Y = np.array([1.0, 1.0j], dtype=complex) / math.sqrt(2.0)
KET_0Z = np.array([1.0, 0.0], dtype=complex)
KET_1X = np.array([1.0, -1.0], dtype=complex) / math.sqrt(2.0)
KET_1Y = np.array([1.0, -1.0j], dtype=complex) / math.sqrt(2.0)
KET_1Z = np.array([0.0, 1.0], dtype=complex)


@dataclass(frozen=True)
class GadgetResult:
    initial_schmidt: np.ndarray
    final_schmidt: np.ndarray
    verdict: str  # Incomparable | EntanglementIncreased | NoViolation
    a_initial: float
    b_initial: float
    a_final: float
    b_final: float
    entropy_initial: float
    entropy_final: float
    cardan_initial: np.ndarray
    cardan_final: np.ndarray
    diagnostics: dict = field(default_factory=dict)


def _probe(states_b1, states_b2):
    """(1/sqrt 3) sum_i |i> (x) |b1_i> (x) |b2_i> on dims (3, 2, 2)."""
    psi = np.zeros(12, dtype=complex)
    for i in range(3):
        psi += np.kron(ket(i, 3), np.kron(states_b1[i], states_b2[i]))
    return psi / math.sqrt(3.0)


def _offdiag_pqr(rho):
    """Off-diagonal parameters of a qutrit state written as (I + K)/3."""
    k = 3.0 * np.asarray(rho)
    return k[0, 1], k[0, 2], k[1, 2]


def _cubic_coeffs(rho):
    """(A, B) of the eigenvalue cubic x^3 - 3 A x + B with x = 1 - 3 lambda."""
    p, q, r = _offdiag_pqr(rho)
    a = (abs(p) ** 2 + abs(q) ** 2 + abs(r) ** 2) / 3.0
    b = 2.0 * (p * r * q.conjugate()).real
    return float(a), float(b)


def _cardan_spectrum(a, b):
    """Descending spectrum from the cubic closed form."""
    return np.sort((1.0 - cardan_roots(a, b)) / 3.0)[::-1]


def _verdict(spec_i, spec_f):
    cmp = compare(spec_i, spec_f)
    if cmp is MajVerdict.Incomparable:
        return "Incomparable"
    if shannon(spec_f) > shannon(spec_i) + MAJ_TOL:
        return "EntanglementIncreased"
    return "NoViolation"


def _result(psi_i, psi_f, diagnostics=None):
    rho_i = reduced_density(psi_i, DIMS, keep=[0])
    rho_f = reduced_density(psi_f, DIMS, keep=[0])
    spec_i = np.clip(eigvals_hermitian(rho_i), 0.0, None)
    spec_f = np.clip(eigvals_hermitian(rho_f), 0.0, None)
    a_i, b_i = _cubic_coeffs(rho_i)
    a_f, b_f = _cubic_coeffs(rho_f)
    return GadgetResult(
        initial_schmidt=spec_i,
        final_schmidt=spec_f,
        verdict=_verdict(spec_i, spec_f),
        a_initial=a_i,
        b_initial=b_i,
        a_final=a_f,
        b_final=b_f,
        entropy_initial=shannon(spec_i),
        entropy_final=shannon(spec_f),
        cardan_initial=_cardan_spectrum(a_i, b_i),
        cardan_final=_cardan_spectrum(a_f, b_f),
        diagnostics=diagnostics or {},
    )


def _flip_states(a, b, c, d, theta):
    if abs(a * a + b * b - 1.0) > 1e-9 or abs(c * c + d * d - 1.0) > 1e-9:
        raise BadParam("flip gadget needs a^2 + b^2 = 1 = c^2 + d^2")
    if not 0.0 <= theta <= math.pi:
        raise BadParam(f"theta = {theta} outside [0, pi]")
    psi = np.array([a, b], dtype=complex)
    phi = np.array([c, d * cmath.exp(1j * theta)], dtype=complex)
    return psi, phi


def flip_gadget(a, b, c, d, theta, mu=0.0, nu=0.0):
    """Probe the exact flipper defined on |0>, a|0>+b|1>, c|0>+d e^{i theta}|1>.

    The three states sit on one great circle exactly when a b c d sin(theta)
    vanishes; anywhere else the initial/final spectra are incomparable.
    """
    psi, phi = _flip_states(a, b, c, d, theta)
    f0 = ket(1, 2)
    fpsi = cmath.exp(1j * mu) * np.array([b, -a], dtype=complex)
    fphi = cmath.exp(1j * nu) * np.array([d * cmath.exp(-1j * theta), -c], dtype=complex)
    zero = ket(0, 2)
    initial = _probe([zero, psi, phi], [zero, phi, psi])
    final = _probe([zero, psi, phi], [f0, fphi, fpsi])
    ip = a * c + b * d * cmath.exp(1j * theta)  # <psi|phi>
    diag = {
        "closed_form_A": (2.0 * a * a * c * c + abs(ip) ** 4) / 3.0,
        "closed_form_B": 2.0 * a * a * c * c * abs(ip) ** 2,
        "closed_form_B_final": 2.0 * a * a * c * c * (ip * ip).real,
        "coplanarity_gap": coplanarity_gap(a, b, c, d, theta),
    }
    return _result(initial, final, diag)


def coplanarity_gap(a, b, c, d, theta):
    """B - B' = 4 a^2 b^2 c^2 d^2 sin^2(theta); zero iff the three probe
    states share a great circle."""
    return 4.0 * (a * b * c * d) ** 2 * math.sin(theta) ** 2


def antiunitary_gadget(theta, alpha, beta):
    """Probe Gamma = C.U (conjugation after a general unitary) on the three
    axis states.  The final spectrum carries no (theta, alpha, beta)
    dependence; a plain-U leg confirms nothing signals without the
    conjugation."""
    u = np.array(
        [
            [math.cos(theta), cmath.exp(1j * alpha) * math.sin(theta)],
            [-cmath.exp(1j * beta) * math.sin(theta), cmath.exp(1j * (alpha + beta)) * math.cos(theta)],
        ]
    )
    gamma = lambda v: (u @ v).conj()
    initial = _probe([KET_0Z, KET_0X, KET_0Y], [KET_0Z, KET_0Y, KET_0X])
    final = _probe([KET_0Z, KET_0X, KET_0Y], [gamma(KET_0Z), gamma(KET_0Y), gamma(KET_0X)])
    plain = _probe([KET_0Z, KET_0X, KET_0Y], [u @ KET_0Z, u @ KET_0Y, u @ KET_0X])
    rho_i = reduced_density(initial, DIMS, keep=[0])
    rho_u = reduced_density(plain, DIMS, keep=[0])
    diag = {"plain_u_delta": float(np.max(np.abs(rho_u - rho_i)))}
    return _result(initial, final, diag)


def angle_preserving_gadget(alpha, beta):
    """Probe the inner-product preserving map |0_k> -> alpha|0_k> + beta|1_k>
    defined on the three axis states."""
    alpha = complex(alpha)
    beta = complex(beta)
    if abs(abs(alpha) ** 2 + abs(beta) ** 2 - 1.0) > 1e-9:
        raise BadParam("|alpha|^2 + |beta|^2 must be 1")
    out_z = alpha * KET_0Z + beta * KET_1Z
    out_x = alpha * KET_0X + beta * KET_1X
    out_y = alpha * KET_0Y + beta * KET_1Y
    initial = _probe([KET_0Z, KET_0X, KET_0Y], [KET_0Z, KET_0X, KET_0Y])
    final = _probe([KET_0Z, KET_0X, KET_0Y], [out_z, out_x, out_y])
    res = _result(initial, final)
    a_f, b_f = res.a_final, res.b_final
    if abs(b_f) <= 1e-12:
        case = "B=0"
    else:
        case = "B<0" if b_f < 0 else "B>0"
    if abs(a_f - 0.25) <= 1e-12:
        case += ",A=1/4"
    elif a_f < 0.25:
        case += ",A<1/4"
    else:
        case += ",A>1/4"
    res.diagnostics["case"] = case
    return res


def mixed_flip_demo(n_hat=(0.0, 0.0, 1.0)):
    """Mixed-qubit flip seen on a one-qubit marginal.

    Encodes the incomparable pair (.51,.30,.19) / (.49,.36,.15) over a
    composite Bob basis built from a qubit along n_hat; the B1 marginals come
    out with Bloch vectors +0.02 n_hat and -0.02 n_hat.
    """
    n = np.asarray(n_hat, dtype=float)
    n = n / np.linalg.norm(n)
    th = math.acos(np.clip(n[2], -1.0, 1.0))
    ph = math.atan2(n[1], n[0])
    q = np.array([math.cos(th / 2.0), cmath.exp(1j * ph) * math.sin(th / 2.0)])
    qbar = np.array([-q[1].conjugate(), q[0].conjugate()])

    lam_psi = np.array([0.51, 0.30, 0.19])
    lam_phi = np.array([0.49, 0.36, 0.15])
    basis = [np.kron(q, q), np.kron(qbar, q), np.kron(qbar, qbar)]

    def joint(lam):
        v = np.zeros(12, dtype=complex)
        for i in range(3):
            v += math.sqrt(lam[i]) * np.kron(ket(i, 3), basis[i])
        return v

    bloch_psi = qubit_to_bloch(reduced_density(joint(lam_psi), DIMS, keep=[1]))
    bloch_phi = qubit_to_bloch(reduced_density(joint(lam_phi), DIMS, keep=[1]))
    err = max(
        float(np.max(np.abs(bloch_psi - 0.02 * n))),
        float(np.max(np.abs(bloch_phi + 0.02 * n))),
    )
    return {
        "direction": n,
        "bloch_psi": bloch_psi,
        "bloch_phi": bloch_phi,
        "max_error": err,
        "incomparable": compare(lam_psi, lam_phi) is MajVerdict.Incomparable,
    }
