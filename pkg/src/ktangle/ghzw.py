"""One-parameter GHZ+W superposition family.

State: sqrt(q) (|000>+|111>)/sqrt(2) + s sqrt(1-q) (|100>+|010>+|001>)/sqrt(3)
with s = +1 or -1.  The three tangle has a closed form in q; the minus branch
has a unique interior zero.  Canonicalization of the family is delegated to
the general reducer and cross-checked against the closed-form root of the
first-qubit rotation where that root is real.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .canonical import (
    CanonicalForm3Q,
    CanonicalizationResult,
    canonical_closed_forms,
    canonicalize3,
    coherence_delta,
)
from .core import LocalUnitary, PureState, outer, qubit_layout
from .negativity import negativity_from_pt
from .config import NumericalError, ValidationError
from .transpose import global_pt

_L3 = qubit_layout(3)
_TAU_COEF = 8.0 * math.sqrt(6.0) / 9.0


@dataclass(frozen=True)
class GhzwParams:
    q: float
    sign: int

    def __post_init__(self):
        if not 0.0 <= self.q <= 1.0:
            raise ValidationError(f"mixing parameter q = {self.q} outside [0, 1]")
        if self.sign not in (1, -1):
            raise ValidationError(f"sign must be +1 or -1, got {self.sign}")


@dataclass(frozen=True)
class SweepRow:
    q: float
    n_global: float
    e2: float
    e3: float
    tau3_formula: float
    e3_times_ng: float
    delta: float


def build_ghzw(params: GhzwParams) -> PureState:
    v = np.zeros(8, dtype=complex)
    v[0] = v[7] = math.sqrt(params.q / 2.0)
    v[4] = v[2] = v[1] = params.sign * math.sqrt((1.0 - params.q) / 3.0)
    return PureState(_L3, v)


def tau3_closed_form(params: GhzwParams) -> float:
    q = params.q
    return abs(q * q + params.sign * _TAU_COEF * math.sqrt(q * (1.0 - q) ** 3))


def tau3_minus_zero(lo: float = 0.5, hi: float = 0.7, tol: float = 1e-12) -> float:
    """Interior zero of the minus-branch three tangle, by bisection."""

    def h(q):
        return q * q - _TAU_COEF * math.sqrt(q * (1.0 - q) ** 3)

    if h(lo) >= 0 or h(hi) <= 0:
        raise ValueError("bisection bracket does not straddle the zero")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if h(mid) < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def x_parameter(params: GhzwParams) -> float:
    """Rotation parameter x = -s sqrt(3q/(2(1-q))); the degenerate point is x^3 = 4."""
    if params.q >= 1.0:
        raise ValueError("x is undefined at q = 1")
    return -params.sign * math.sqrt(3.0 * params.q / (2.0 * (1.0 - params.q)))


def _exact_limit_result(params: GhzwParams) -> CanonicalizationResult:
    # q = 1 is the GHZ state, already canonical; q = 0 is (sign) W, mapped by
    # a first-qubit swap plus sign fixes
    eye = np.eye(2)
    if params.q == 1.0:
        form = CanonicalForm3Q(
            a=1 / math.sqrt(2), b=0.0, c=0.0, d=0.0, f=1 / math.sqrt(2), phi=0.0
        )
        us = (LocalUnitary(0, eye), LocalUnitary(1, eye), LocalUnitary(2, eye))
        return CanonicalizationResult(forms=(form,), unitaries=(us,), residual=0.0)
    r = 1 / math.sqrt(3)
    form = CanonicalForm3Q(a=r, b=0.0, c=r, d=r, f=0.0, phi=0.0)
    flip = np.diag([1.0, -1.0])
    if params.sign == 1:
        us = (
            LocalUnitary(0, np.array([[0.0, 1.0], [-1.0, 0.0]])),
            LocalUnitary(1, flip),
            LocalUnitary(2, flip),
        )
    else:
        us = (
            LocalUnitary(0, np.array([[0.0, -1.0], [-1.0, 0.0]])),
            LocalUnitary(1, eye),
            LocalUnitary(2, eye),
        )
    return CanonicalizationResult(forms=(form,), unitaries=(us,), residual=0.0)


def _closed_form_root_check(result: CanonicalizationResult, x: float):
    # the ratio |UA00|/|UA01| of each form's first-qubit rotation must match
    # a root x^2 (1 +- sqrt(1 - 4/x^3))/2 whenever that expression is real
    t = 1.0 - 4.0 / x**3
    if t < 0.0:
        return
    roots = [abs(x * x * (1.0 + math.sqrt(t)) / 2.0), abs(x * x * (1.0 - math.sqrt(t)) / 2.0)]
    for us in result.unitaries:
        ua = us[0].matrix
        den = abs(ua[0, 1])
        if den < 1e-9:
            continue
        ratio = abs(ua[0, 0]) / den
        # the printed assignment of (alpha, beta) to rotation entries is
        # convention-dependent, so the inverse ratio is accepted too
        candidates = [ratio, 1.0 / ratio if ratio > 1e-9 else math.inf]
        ok = any(
            abs(cand - r) <= 1e-6 * (1.0 + r) for r in roots for cand in candidates
        )
        if not ok:
            raise NumericalError(
                f"first-qubit rotation ratio {ratio} matches no closed-form root {roots}"
            )


def ghzw_canonical_params(params: GhzwParams) -> CanonicalizationResult:
    """Canonical form(s) of the family state, single form at the degenerate point."""
    if params.q in (0.0, 1.0):
        return _exact_limit_result(params)
    result = canonicalize3(build_ghzw(params))
    x = x_parameter(params)
    _closed_form_root_check(result, x)
    if abs(x**3 - 4.0) < 1e-9 and len(result.forms) > 1:
        result = CanonicalizationResult(
            forms=result.forms[:1],
            unitaries=result.unitaries[:1],
            residual=result.residual,
        )
    return result


def e3_from_amplitudes(a000: float, a111: float) -> float:
    """Three-way channel value 2 a000 a111^2 / sqrt(1 - a000^2 - a111^2).

    Valid for canonical amplitudes whose remaining weight sits in the b, c, d
    slots; zero whenever either argument vanishes.
    """
    if a000 == 0.0 or a111 == 0.0:
        return 0.0
    rest = 1.0 - a000 * a000 - a111 * a111
    if rest <= 0.0:
        raise ValueError(f"amplitudes leave no residual weight (1 - a000^2 - a111^2 = {rest})")
    return 2.0 * a000 * a111 * a111 / math.sqrt(rest)


def sweep_family(sign: int, q_start: float, q_end: float, steps: int):
    """SweepRow per grid point: raw-state N_G and delta, canonical-form e2/e3."""
    if not 0.0 <= q_start < q_end <= 1.0:
        raise ValidationError(f"bad q range [{q_start}, {q_end}]")
    if steps < 2:
        raise ValidationError("a sweep needs at least 2 grid points")
    rows = []
    for q in np.linspace(q_start, q_end, steps):
        params = GhzwParams(q=float(q), sign=sign)
        psi = build_ghzw(params)
        rho = outer(psi)
        n_global = negativity_from_pt(global_pt(rho, 0), 2)
        form = ghzw_canonical_params(params).forms[0]
        neg_closed, _ = canonical_closed_forms(form)
        e2 = neg_closed.e_partial[2]
        e3 = neg_closed.e_partial[3]
        rows.append(
            SweepRow(
                q=float(q),
                n_global=n_global,
                e2=e2,
                e3=e3,
                tau3_formula=tau3_closed_form(params),
                e3_times_ng=e3 * n_global,
                delta=coherence_delta(psi),
            )
        )
    return rows
