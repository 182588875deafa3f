"""One-tangle, Wootters two-qubit tangle and the three tangle."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import WOOTTERS_CLAMP
from .core import DensityOperator, PureState, hermitian_eigensystem, outer, partial_trace

_SY = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_SYSY = np.kron(_SY, _SY)


@dataclass
class TangleReport:
    tau_focus: float
    tau_pairs: dict
    tau3: float


def one_tangle(psi: PureState, p: int) -> float:
    """4 det of the reduced one-qubit state; equals (N_G^p)^2 for pure input."""
    r1 = partial_trace(outer(psi), [p])
    return float(4.0 * np.linalg.det(r1.matrix).real)


def spin_flip(rho2: DensityOperator) -> np.ndarray:
    if rho2.matrix.shape != (4, 4):
        raise ValueError("spin flip is defined for two-qubit states")
    return _SYSY @ rho2.matrix.conj() @ _SYSY


def wootters_tangle(rho2: DensityOperator) -> float:
    """Squared concurrence via the spin-flipped product spectrum.

    The spectrum of rho.rho_tilde is taken from the Hermitian similar matrix
    sqrt(rho).rho_tilde.sqrt(rho); eigenvalues below the clamp are zeroed
    before square roots (exact zeros of low-rank inputs otherwise surface as
    sqrt(machine noise)).
    """
    rt = spin_flip(rho2)
    es = hermitian_eigensystem(rho2.matrix)
    ev = np.clip(es.eigenvalues, 0.0, None)
    sq = (es.eigenvectors * np.sqrt(ev)) @ es.eigenvectors.conj().T
    lam2 = hermitian_eigensystem(sq @ rt @ sq).eigenvalues
    lam2 = np.where(np.abs(lam2) < WOOTTERS_CLAMP, 0.0, np.clip(lam2, 0.0, None))
    lam = np.sqrt(lam2)[::-1]
    c = max(float(lam[0] - lam[1] - lam[2] - lam[3]), 0.0)
    return c * c


def _reduced_pair(rho: DensityOperator, focus: int, partner: int) -> DensityOperator:
    # two-qubit reduction with the focus qubit first
    red = partial_trace(rho, [focus, partner])
    if focus > partner:
        m = red.matrix.reshape(2, 2, 2, 2).transpose(1, 0, 3, 2).reshape(4, 4)
        red = DensityOperator(red.layout, m)
    return red


def three_tangle(psi: PureState, focus: int = 0) -> TangleReport:
    if psi.layout.dims != (2, 2, 2):
        raise ValueError("three tangle needs a three-qubit pure state")
    rho = outer(psi)
    tau_f = one_tangle(psi, focus)
    tau_pairs = {}
    for partner in range(3):
        if partner == focus:
            continue
        tau_pairs[partner] = wootters_tangle(_reduced_pair(rho, focus, partner))
    return TangleReport(
        tau_focus=tau_f,
        tau_pairs=tau_pairs,
        tau3=float(tau_f - sum(tau_pairs.values())),
    )
