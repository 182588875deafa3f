import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

import ktangle as kt

from conftest import L2, L3, mixed_state


def _basis_state(layout, k):
    v = np.zeros(layout.total_dim)
    v[k] = 1.0
    return kt.PureState(layout, v)


def _separable_mixture():
    # classical mixture of product basis states, exactly PPT
    members = ((0.5, _basis_state(L2, 0)), (0.3, _basis_state(L2, 1)), (0.2, _basis_state(L2, 3)))
    return kt.Ensemble(members=members).density()


SMALL = kt.RoofBudget(restarts=6, iterations=150, seed=0)


def test_separable_mixture_has_zero_roof():
    res = kt.roof_negativity(_separable_mixture(), 0, "global", SMALL)
    assert res.value <= 1e-6
    assert res.bound == "upper"


def test_roof_beats_eigenbasis_when_it_should():
    # an equal mixture of the four Bell states is maximally mixed, hence
    # separable, but every eigen-member is maximally entangled: the
    # optimizer must rotate the ensemble to reach ~0
    rho = kt.DensityOperator(L2, np.eye(4) / 4.0)
    eig = kt.eigen_ensemble(rho)
    res = kt.roof_negativity(rho, 0, "global", SMALL)
    assert res.value <= 1e-6
    avg = sum(
        p * kt.negativity_from_pt(kt.global_pt(kt.outer(s), 0), 2) for p, s in eig.members
    )
    assert res.value < avg or avg <= 1e-9


def test_pure_state_short_circuits():
    psi = kt.haar_random_pure(L3, 4)
    rho = kt.outer(psi)
    direct = kt.negativity_from_pt(kt.global_pt(rho, 0), 2)
    res = kt.roof_negativity(rho, 0, "global", SMALL)
    assert res.restarts_used == 0
    assert res.converged
    assert abs(res.value - direct) < 1e-10
    assert len(res.certificate.members) == 1


@given(st.integers(0, 2**32 - 1))
def test_roof_is_upper_bounded_by_eigen_average(seed):
    rng = np.random.default_rng(seed)
    rho = mixed_state(L2, rng, rank=2)
    budget = kt.RoofBudget(restarts=3, iterations=100, seed=1)
    res = kt.roof_negativity(rho, 0, "global", budget)
    avg = sum(
        p * kt.negativity_from_pt(kt.global_pt(kt.outer(s), 0), 2)
        for p, s in kt.eigen_ensemble(rho).members
    )
    assert res.value <= avg + 1e-9


def test_certificate_reconstructs_and_averages():
    rng = np.random.default_rng(8)
    rho = mixed_state(L2, rng, rank=3)
    res = kt.roof_negativity(rho, 0, "global", SMALL)
    recon = res.certificate.density()
    assert np.abs(recon.matrix - rho.matrix).max() < 1e-8
    avg = sum(
        p * kt.negativity_from_pt(kt.global_pt(kt.outer(s), 0), 2)
        for p, s in res.certificate.members
    )
    assert abs(avg - res.value) < 1e-9


def test_determinism_and_restart_monotonicity():
    rho = mixed_state(L2, np.random.default_rng(2), rank=3)
    b1 = kt.RoofBudget(restarts=4, iterations=120, seed=7)
    v1 = kt.roof_negativity(rho, 0, "global", b1).value
    v2 = kt.roof_negativity(rho, 0, "global", b1).value
    assert v1 == v2
    # more restarts extend the same stream, so the value cannot get worse
    b2 = kt.RoofBudget(restarts=8, iterations=120, seed=7)
    v3 = kt.roof_negativity(rho, 0, "global", b2).value
    assert v3 <= v1 + 1e-15


def test_wootters_crosscheck_on_reduced_pair(printed_qstar_state):
    # squared roof of the reduced pair equals the Wootters tangle of the
    # same reduction: two independent routes to one number
    rho2 = kt.partial_trace(kt.outer(printed_qstar_state), [0, 1])
    budget = kt.RoofBudget(restarts=14, iterations=500, seed=5)
    roof = kt.roof_negativity(rho2, 0, "global", budget)
    woot = kt.wootters_tangle(rho2)
    assert abs(roof.value**2 - woot) < 2e-4
    assert abs(roof.value - 0.643658) < 2e-4
    # the direct (unminimized) reduction value is a different, larger number
    direct = kt.reduced_pair_negativity(printed_qstar_state, (0, 1))
    assert abs(direct - 0.402242) < 1e-5
    assert roof.value >= direct - 1e-9


def test_w_state_pair_roof(w_state):
    rho2 = kt.partial_trace(kt.outer(w_state), [0, 1])
    direct = kt.negativity_from_pt(kt.global_pt(rho2, 0), 2)
    assert abs(direct - (math.sqrt(5) - 1) / 3) < 1e-9
    budget = kt.RoofBudget(restarts=10, iterations=400, seed=3)
    roof = kt.roof_negativity(rho2, 0, "global", budget)
    assert abs(roof.value - 2.0 / 3.0) < 1e-3
    assert roof.value >= direct - 1e-9


def test_isometry_ensemble_identity_is_eigen():
    rho = mixed_state(L2, np.random.default_rng(1), rank=3)
    eig = kt.eigen_ensemble(rho)
    r = len(eig.members)
    ens = kt.isometry_ensemble(rho, np.eye(r), r)
    for (p1, s1), (p2, s2) in zip(eig.members, ens.members):
        assert abs(p1 - p2) < 1e-12
        # member states agree up to a global phase
        assert abs(abs(np.vdot(s1.amplitudes, s2.amplitudes)) - 1.0) < 1e-10


def test_isometry_ensemble_rotation_splits_evenly():
    # equal-weight rank-2 state, balanced 2x2 rotation: equal probabilities
    v0, v1 = np.zeros(4), np.zeros(4)
    v0[0] = 1.0
    v1[3] = 1.0
    rho = kt.DensityOperator(L2, 0.5 * np.outer(v0, v0) + 0.5 * np.outer(v1, v1))
    c = 1 / math.sqrt(2)
    W = np.array([[c, c], [c, -c]])
    ens = kt.isometry_ensemble(rho, W, 2)
    assert len(ens.members) == 2
    assert all(abs(p - 0.5) < 1e-12 for p, _ in ens.members)
    assert np.abs(ens.density().matrix - rho.matrix).max() < 1e-12


def test_isometry_ensemble_accepts_tall_w():
    rho = mixed_state(L2, np.random.default_rng(1), rank=2)
    ens = kt.isometry_ensemble(rho, np.eye(3)[:, :2], 3)
    assert np.abs(ens.density().matrix - rho.matrix).max() < 1e-10


def test_isometry_ensemble_rejects_bad_w():
    rho = mixed_state(L2, np.random.default_rng(1), rank=2)
    with pytest.raises(kt.ValidationError):
        kt.isometry_ensemble(rho, np.ones((2, 2)), 2)  # not orthonormal
    with pytest.raises(kt.ValidationError):
        kt.isometry_ensemble(rho, np.eye(2), 3)  # shape mismatch


def test_ensemble_validation():
    psi = _basis_state(L2, 0)
    with pytest.raises(kt.ValidationError):
        kt.Ensemble(members=())
    with pytest.raises(kt.ValidationError):
        kt.Ensemble(members=((0.0, psi), (1.0, psi)))
    with pytest.raises(kt.ValidationError):
        kt.Ensemble(members=((0.4, psi), (0.4, psi)))
    with pytest.raises(kt.ValidationError):
        kt.Ensemble(members=((0.5, psi), (0.5, _basis_state(L3, 0))))


def test_budget_and_measure_validation():
    with pytest.raises(kt.ValidationError):
        kt.RoofBudget(restarts=0)
    with pytest.raises(kt.ValidationError):
        kt.RoofBudget(iterations=0)
    rho = _separable_mixture()
    with pytest.raises(kt.ValidationError):
        kt.roof_negativity(rho, 0, "k7", SMALL)
    with pytest.raises(kt.ValidationError):
        kt.roof_negativity(rho, 0, "spectral", SMALL)


def test_two_qubit_ppt_iff_zero_roof():
    # PPT is exact for 2 qubits: positive partial transpose means zero roof,
    # and an NPT state keeps a strictly positive roof
    rho_sep = _separable_mixture()
    assert kt.negativity_from_pt(kt.global_pt(rho_sep, 0), 2) <= 1e-12
    assert kt.roof_negativity(rho_sep, 0, "global", SMALL).value <= 1e-6

    bell = np.zeros(4)
    bell[0] = bell[3] = 1 / math.sqrt(2)
    rho_npt = kt.DensityOperator(
        L2, 0.9 * np.outer(bell, bell) + 0.1 * np.eye(4) / 4.0
    )
    direct = kt.negativity_from_pt(kt.global_pt(rho_npt, 0), 2)
    assert direct > 0.1
    roof = kt.roof_negativity(rho_npt, 0, "global", SMALL)
    assert roof.value > 0.1


def test_reduced_pair_negativity_validation(w_state):
    with pytest.raises(kt.ValidationError):
        kt.reduced_pair_negativity(w_state, (1, 1))
    with pytest.raises(kt.ValidationError):
        kt.reduced_pair_negativity(kt.haar_random_pure(L2, 0), (0, 1))
    # order of the pair matters only through the focus
    a = kt.reduced_pair_negativity(w_state, (0, 1))
    b = kt.reduced_pair_negativity(w_state, (1, 0))
    assert abs(a - b) < 1e-12
