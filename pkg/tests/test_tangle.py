import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

import ktangle as kt

from conftest import L2, L3, random_form


def test_wootters_reference_states(bell, w_state):
    assert abs(kt.wootters_tangle(kt.outer(bell)) - 1.0) < 1e-12
    rho = kt.outer(w_state)
    pair = kt.partial_trace(rho, [0, 1])
    assert abs(kt.wootters_tangle(pair) - 4.0 / 9.0) < 1e-12
    product = kt.PureState(L2, np.array([1.0, 0, 0, 0]))
    assert kt.wootters_tangle(kt.outer(product)) == 0.0


@given(st.integers(0, 2**32 - 1))
def test_wootters_range(seed):
    rng = np.random.default_rng(seed)
    psi = kt.haar_random_pure(L3, rng)
    pair = kt.partial_trace(kt.outer(psi), [0, 1])
    t = kt.wootters_tangle(pair)
    assert 0.0 <= t <= 1.0 + 1e-12


def test_spin_flip_is_involution():
    rng = np.random.default_rng(5)
    psi = kt.haar_random_pure(L2, rng)
    rho = kt.outer(psi)
    flipped = kt.spin_flip(rho)
    # flipping the flip restores the original matrix
    sy2 = np.kron([[0, -1j], [1j, 0]], [[0, -1j], [1j, 0]])
    again = sy2 @ flipped.conj() @ sy2
    assert np.abs(again - rho.matrix).max() < 1e-12
    with pytest.raises(ValueError):
        kt.spin_flip(kt.DensityOperator(L3, np.eye(8) / 8))


@given(st.integers(0, 2**32 - 1), st.integers(0, 2))
def test_one_tangle_is_squared_global_negativity(seed, p):
    psi = kt.haar_random_pure(L3, np.random.default_rng(seed))
    rho = kt.outer(psi)
    ng = kt.negativity_from_pt(kt.global_pt(rho, p), 2)
    assert abs(kt.one_tangle(psi, p) - ng * ng) < 1e-9


def test_three_tangle_reference_states(ghz, w_state):
    rep = kt.three_tangle(ghz)
    assert abs(rep.tau3 - 1.0) < 1e-12
    assert abs(rep.tau_focus - 1.0) < 1e-12
    assert all(abs(t) < 1e-12 for t in rep.tau_pairs.values())
    wrep = kt.three_tangle(w_state)
    assert abs(wrep.tau3) < 1e-10
    assert all(abs(t - 4.0 / 9.0) < 1e-10 for t in wrep.tau_pairs.values())


def test_three_tangle_focus_independence():
    # residual permutation invariance, a nontrivial property of the measure
    spread = 0.0
    for seed in range(500):
        psi = kt.haar_random_pure(L3, seed)
        vals = [kt.three_tangle(psi, focus=p).tau3 for p in range(3)]
        spread = max(spread, max(vals) - min(vals))
    assert spread < 1e-8


@given(st.integers(0, 2**32 - 1))
def test_pair_tangles_match_closed_forms(seed):
    # tau_AB = 4 a^2 c^2 and tau_AC = 4 a^2 d^2 hold for every phase
    form = random_form(np.random.default_rng(seed))
    psi = kt.build_canonical_state(form)
    rep = kt.three_tangle(psi, focus=0)
    a, c, d, f, g = form.a, form.c, form.d, form.f, form.g
    assert abs(rep.tau_pairs[1] - 4 * a * a * c * c) < 1e-9
    assert abs(rep.tau_pairs[2] - 4 * a * a * d * d) < 1e-9
    assert abs(rep.tau3 - 4 * a * a * f * f) < 1e-9
    assert abs(rep.tau_focus - 4 * a * a * g * g) < 1e-9


def test_three_tangle_rejects_other_layouts():
    psi = kt.haar_random_pure(L2, 0)
    with pytest.raises(ValueError):
        kt.three_tangle(psi)
