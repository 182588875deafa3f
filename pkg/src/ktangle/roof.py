"""Convex-roof extended negativities over pure-state decompositions.

The roof of a measure over a mixed state is the minimum ensemble average
over all decompositions.  Decompositions of a rank-r state into m members
are parameterized by m x r matrices with orthonormal columns acting on the
weighted eigenvectors, so the search runs over that isometry manifold with
random restarts and accept-if-better two-member rotations under a cooling
schedule.  Values reported are upper bounds on the true roof; the result
record carries that caveat explicitly.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT_TOLERANCES, ValidationError
from .core import DensityOperator, PureState, outer, partial_trace, trace_norm
from .negativity import partial_kway_negativity
from .transpose import global_pt

_T = DEFAULT_TOLERANCES


@dataclass(frozen=True)
class Ensemble:
    members: tuple  # of (probability, PureState)

    def __post_init__(self):
        if not self.members:
            raise ValidationError("ensemble needs at least one member")
        total = 0.0
        layout = self.members[0][1].layout
        for p, psi in self.members:
            if p <= 0:
                raise ValidationError(f"ensemble probability {p} must be positive")
            if psi.layout.dims != layout.dims:
                raise ValidationError("ensemble members live on different layouts")
            total += p
        if abs(total - 1.0) > _T.eps_norm:
            raise ValidationError(f"ensemble probabilities sum to {total}, must be 1")

    def density(self) -> DensityOperator:
        layout = self.members[0][1].layout
        m = sum(p * np.outer(s.amplitudes, s.amplitudes.conj()) for p, s in self.members)
        return DensityOperator(layout, m)


@dataclass(frozen=True)
class RoofBudget:
    restarts: int = 32
    m_max: int = 8
    iterations: int = 400
    seed: int = 0

    def __post_init__(self):
        if self.restarts < 1 or self.iterations < 1 or self.m_max < 2:
            raise ValidationError("roof budget must allow at least one restart and iteration")


@dataclass
class RoofResult:
    value: float
    certificate: Ensemble
    restarts_used: int
    converged: bool
    bound: str = field(default="upper")  # reported value is an upper bound on the roof


def eigen_ensemble(rho: DensityOperator) -> Ensemble:
    lam, vec = np.linalg.eigh(rho.matrix)
    members = [
        (float(l), PureState(rho.layout, vec[:, k] / np.linalg.norm(vec[:, k])))
        for k, l in enumerate(lam)
        if l > 1e-12
    ]
    return Ensemble(members=tuple(members))


def isometry_ensemble(rho: DensityOperator, W: np.ndarray, m: int) -> Ensemble:
    lam, vec = np.linalg.eigh(rho.matrix)
    keep = lam > 1e-12
    lam, vec = lam[keep], vec[:, keep]
    r = lam.size
    W = np.asarray(W, dtype=complex)
    if W.shape != (m, r):
        raise ValidationError(f"isometry shape {W.shape} does not map rank {r} to {m} members")
    if m < r or np.abs(W.conj().T @ W - np.eye(r)).max() > 1e-10:
        raise ValidationError("decomposition matrix must have orthonormal columns")
    base = vec * np.sqrt(lam)
    phis = W @ base.T
    members = []
    for row in phis:
        p = float(np.vdot(row, row).real)
        if p > 1e-14:
            members.append((p, PureState(rho.layout, row / math.sqrt(p))))
    return Ensemble(members=tuple(members))


def _member_value(measure: str, p: int, layout):
    d_p = layout.dims[p]
    if measure == "global":
        def val(vec: np.ndarray) -> float:
            rho = DensityOperator(layout, np.outer(vec, vec.conj()))
            return (trace_norm(global_pt(rho, p)) - 1.0) / (d_p - 1)

        return val
    if measure.startswith("k") and measure[1:].isdigit():
        k = int(measure[1:])
        if not 2 <= k <= layout.n_subsystems:
            raise ValidationError(f"k-way order {k} out of range for {layout.n_subsystems} parts")

        def val(vec: np.ndarray) -> float:
            rho = DensityOperator(layout, np.outer(vec, vec.conj()))
            return partial_kway_negativity(rho, k, p)

        return val
    raise ValidationError(f"unknown roof measure {measure!r} (use global, k2, k3)")


def roof_negativity(
    rho: DensityOperator, p: int, measure: str = "global", budget: RoofBudget = RoofBudget()
) -> RoofResult:
    """Minimize the ensemble-averaged measure over decompositions of rho.

    Deterministic given budget.seed; monotone nonincreasing in restarts
    (restart RNG streams are a prefix-stable spawn of the seed).
    """
    layout = rho.layout
    value_of = _member_value(measure, p, layout)
    lam, vec = np.linalg.eigh(rho.matrix)
    keep = lam > 1e-12
    lam, vec = lam[keep], vec[:, keep]
    r = lam.size
    if r == 1:
        # rank one: the only decomposition is the state itself, so evaluate
        # the measure on rho as given (bitwise equal to the direct route)
        psi = PureState(layout, vec[:, 0] / np.linalg.norm(vec[:, 0]))
        if measure == "global":
            value = (trace_norm(global_pt(rho, p)) - 1.0) / (layout.dims[p] - 1)
        else:
            value = partial_kway_negativity(rho, int(measure[1:]), p)
        return RoofResult(
            value=value,
            certificate=Ensemble(members=((1.0, psi),)),
            restarts_used=0,
            converged=True,
        )

    m = max(r, min(2 * r, budget.m_max))
    base = (vec * np.sqrt(lam)).T  # row k = sqrt(lam_k) e_k
    iters = budget.iterations
    mark = max(1, int(0.8 * iters))
    ss = np.random.SeedSequence(budget.seed)
    best = None  # (value, phis, probs, converged)
    for ridx, child in enumerate(ss.spawn(budget.restarts)):
        g = np.random.default_rng(child)
        if ridx == 0:
            W = np.zeros((m, r), dtype=complex)
            W[:r, :r] = np.eye(r)
        else:
            Z = g.standard_normal((m, r)) + 1j * g.standard_normal((m, r))
            W, _ = np.linalg.qr(Z)
        phis = W @ base
        probs = np.einsum("jd,jd->j", phis, phis.conj()).real
        vals = np.array(
            [
                value_of(phis[j] / math.sqrt(probs[j])) if probs[j] > 1e-14 else 0.0
                for j in range(m)
            ]
        )
        cur = float(probs @ vals)
        at_mark = cur
        theta = 0.5
        for it in range(iters):
            j, k = g.choice(m, size=2, replace=False)
            t = g.uniform(-theta, theta)
            ph = g.uniform(0.0, 2.0 * math.pi)
            c, s = math.cos(t), math.sin(t)
            ei = cmath.exp(1j * ph)
            nj = c * phis[j] + s * ei * phis[k]
            nk = -s * np.conj(ei) * phis[j] + c * phis[k]
            pj = float(np.vdot(nj, nj).real)
            pk = float(np.vdot(nk, nk).real)
            vj = value_of(nj / math.sqrt(pj)) if pj > 1e-14 else 0.0
            vk = value_of(nk / math.sqrt(pk)) if pk > 1e-14 else 0.0
            new = cur - probs[j] * vals[j] - probs[k] * vals[k] + pj * vj + pk * vk
            if new < cur - 1e-15:
                cur = new
                phis[j], phis[k] = nj, nk
                probs[j], probs[k] = pj, pk
                vals[j], vals[k] = vj, vk
            theta *= 0.995
            if it == mark - 1:
                at_mark = cur
        converged = (at_mark - cur) < 1e-8
        if best is None or cur < best[0]:
            best = (cur, phis.copy(), probs.copy(), converged)

    members = []
    for j in range(m):
        if best[2][j] > 1e-14:
            members.append(
                (float(best[2][j]), PureState(layout, best[1][j] / math.sqrt(best[2][j])))
            )
    return RoofResult(
        value=float(best[0]),
        certificate=Ensemble(members=tuple(members)),
        restarts_used=budget.restarts,
        converged=best[3],
    )


def reduced_pair_negativity(psi: PureState, pair) -> float:
    """Direct global negativity of the two-qubit reduction onto the given pair.

    The value for the focus-partner reduction of a pure three-qubit state;
    its square measures pairwise entanglement on top of which the roof
    minimization can only improve downward.
    """
    if psi.layout.dims != (2, 2, 2):
        raise ValidationError("pair reduction is defined for three-qubit pure states")
    p, partner = pair
    if p == partner:
        raise ValidationError("pair must name two distinct subsystems")
    keep = sorted((p, partner))
    rho2 = partial_trace(outer(psi), keep)
    pos = keep.index(p)
    return trace_norm(global_pt(rho2, pos)) - 1.0
