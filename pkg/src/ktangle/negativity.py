"""Negativity measures built on the partial transposes.

The global negativity of focus p is (|| rho^{T_p} ||_1 - 1)/(d_p - 1).  The
partial K-way negativities E_K^p project the K-way transposed operator onto
the negative subspace of the GLOBAL transpose,

    E_K^p = -(2/(d_p - 1)) Tr(P_minus rho_K^{T_p}),

and E_0^p = -(2(N-2)/(d_p - 1)) Tr(P_minus rho) closes the sum rule
N_G^p = sum_K E_K^p - E_0^p whenever the transpose decomposition identity
rho_G^{T_p} = sum_K rho_K^{T_p} - (N-2) rho holds for the input.

That identity is exact for density matrices with real matrix elements (in
the computational basis) and is generally broken by complex off-diagonal
phases: the residual is reported in sum_residual rather than hidden.  The
pair split E_2^p = E_2^{p-q} + E_2^{p-r} is exact for every input.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT_TOLERANCES
from .core import DensityOperator, hermitian_eigensystem, trace_norm
from .transpose import global_pt, kway_pt, pair_pt

_T = DEFAULT_TOLERANCES


@dataclass
class NegativityReport:
    """All negativity measures of one focus subsystem.

    sum_residual = |n_global - (sum_K e_partial[K] - e0)|.  It is <= 1e-9
    for real-representation inputs; a larger value flags complex two-way or
    three-way coherences that the decomposition identity does not cover.
    """

    focus: int
    n_global: float
    n_kway: dict
    e_partial: dict
    e0: float
    pair_split: dict
    negative_eigenpairs: list
    sum_residual: float
    violations: list = field(default_factory=list)


def negativity_from_pt(M: np.ndarray, d_p: int) -> float:
    """(trace_norm - 1)/(d_p - 1) of a Hermitian trace-one matrix."""
    if d_p < 2:
        raise ValueError("focus dimension must be >= 2")
    return (trace_norm(M) - 1.0) / (d_p - 1)


def negative_subspace(M: np.ndarray):
    """Eigenpairs of a Hermitian matrix with eigenvalue < -eps_eig."""
    es = hermitian_eigensystem(M)
    out = []
    for lam, vec in zip(es.eigenvalues, es.eigenvectors.T):
        if lam < -_T.eps_eig:
            out.append((float(lam), vec.copy()))
    return out


def _negative_projector(M: np.ndarray) -> np.ndarray:
    pairs = negative_subspace(M)
    D = M.shape[0]
    P = np.zeros((D, D), dtype=complex)
    for _, vec in pairs:
        P += np.outer(vec, vec.conj())
    return P


def partial_kway_negativity(rho: DensityOperator, K: int, p: int) -> float:
    P = _negative_projector(global_pt(rho, p))
    d_p = rho.layout.dims[p]
    return float(-(2.0 / (d_p - 1)) * np.trace(P @ kway_pt(rho, K, p)).real)


def e0_negativity(rho: DensityOperator, p: int) -> float:
    n = rho.layout.n_subsystems
    d_p = rho.layout.dims[p]
    if n == 2:
        return 0.0
    P = _negative_projector(global_pt(rho, p))
    return float(-(2.0 * (n - 2) / (d_p - 1)) * np.trace(P @ rho.matrix).real)


def pair_partial_negativity(rho: DensityOperator, p: int, partner: int) -> float:
    """One term of the symmetric pair split of E_2^p.

    The identity rho_2^{T_p} = rho_2^{T_{p-pq}} + rho_2^{T_{p-pr}} - rho
    makes -(2/(d_p-1)) Tr(P rho_2^{T_{p-pq}}) + (1/(d_p-1)) Tr(P rho) the
    unique symmetric split whose two terms sum exactly to E_2^p.
    """
    P = _negative_projector(global_pt(rho, p))
    d_p = rho.layout.dims[p]
    t_pair = np.trace(P @ pair_pt(rho, p, partner)).real
    t_id = np.trace(P @ rho.matrix).real
    return float((-2.0 * t_pair + t_id) / (d_p - 1))


def negativity_report(rho: DensityOperator, p: int) -> NegativityReport:
    n = rho.layout.n_subsystems
    d_p = rho.layout.dims[p]
    g = global_pt(rho, p)
    pairs = negative_subspace(g)
    D = rho.layout.total_dim
    P = np.zeros((D, D), dtype=complex)
    for _, vec in pairs:
        P += np.outer(vec, vec.conj())

    n_global = negativity_from_pt(g, d_p)
    n_kway = {}
    e_partial = {}
    for K in range(2, n + 1):
        rk = kway_pt(rho, K, p)
        n_kway[K] = negativity_from_pt(rk, d_p)
        e_partial[K] = float(-(2.0 / (d_p - 1)) * np.trace(P @ rk).real)
    e0 = 0.0
    if n > 2:
        e0 = float(-(2.0 * (n - 2) / (d_p - 1)) * np.trace(P @ rho.matrix).real)

    pair_split = {}
    if n == 3:
        t_id = np.trace(P @ rho.matrix).real
        for partner in range(3):
            if partner == p:
                continue
            t_pair = np.trace(P @ pair_pt(rho, p, partner)).real
            pair_split[partner] = float((-2.0 * t_pair + t_id) / (d_p - 1))

    sum_residual = abs(n_global - (sum(e_partial.values()) - e0))
    violations = []
    if abs(e0) <= _T.eps_norm:
        for K, ek in e_partial.items():
            if ek > n_global + _T.eps_norm:
                violations.append(f"e_partial[{K}] = {ek} exceeds n_global = {n_global}")

    return NegativityReport(
        focus=p,
        n_global=float(n_global),
        n_kway=n_kway,
        e_partial=e_partial,
        e0=e0,
        pair_split=pair_split,
        negative_eigenpairs=pairs,
        sum_residual=float(sum_residual),
        violations=violations,
    )
