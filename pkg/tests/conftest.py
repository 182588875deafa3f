import json
import math

import numpy as np
import pytest
from hypothesis import settings

import ktangle as kt

settings.register_profile("suite", max_examples=30, deadline=None, derandomize=True)
settings.load_profile("suite")

L2 = kt.qubit_layout(2)
L3 = kt.qubit_layout(3)
L4 = kt.qubit_layout(4)


def real_pure(layout, rng):
    # real amplitudes keep the transpose decomposition identity exact
    v = rng.standard_normal(layout.total_dim)
    return kt.PureState(layout, v / np.linalg.norm(v))


def mixed_state(layout, rng, rank=3, real=False):
    w = rng.dirichlet(np.ones(rank))
    m = np.zeros((layout.total_dim, layout.total_dim), dtype=complex)
    for k in range(rank):
        psi = real_pure(layout, rng) if real else kt.haar_random_pure(layout, rng)
        m += w[k] * np.outer(psi.amplitudes, psi.amplitudes.conj())
    return kt.DensityOperator(layout, m)


def random_form(rng, phases=None):
    """Valid CanonicalForm3Q with amplitudes bounded away from zero.

    phases: None draws phi uniformly on [0, 2pi); otherwise a tuple of
    allowed phi values (the real slice is phases=(0.0, math.pi)).
    """
    amps = rng.uniform(0.05, 1.0, size=5)
    amps /= np.linalg.norm(amps)
    if phases is None:
        phi = float(rng.uniform(0.0, 2.0 * math.pi))
    else:
        phi = float(phases[rng.integers(len(phases))])
    return kt.CanonicalForm3Q(
        a=float(amps[0]), b=float(amps[1]), c=float(amps[2]), d=float(amps[3]),
        f=float(amps[4]), phi=phi,
    )


@pytest.fixture
def ghz():
    v = np.zeros(8, dtype=complex)
    v[0] = v[7] = 1.0 / math.sqrt(2)
    return kt.PureState(L3, v)


@pytest.fixture
def w_state():
    v = np.zeros(8, dtype=complex)
    v[1] = v[2] = v[4] = 1.0 / math.sqrt(3)
    return kt.PureState(L3, v)


@pytest.fixture
def bell():
    v = np.zeros(4, dtype=complex)
    v[0] = v[3] = 1.0 / math.sqrt(2)
    return kt.PureState(L2, v)


@pytest.fixture
def printed_qstar_state():
    # support {010, 100, 110, 111}; headline invariants NG=0.9103,
    # squared pair values 0.4143, despite lying outside the 5-slot gauge
    v = np.zeros(8, dtype=complex)
    v[2] = -0.56731
    v[4] = -0.56731
    v[6] = 0.18578
    v[7] = 0.56731
    v /= np.linalg.norm(v)
    return kt.PureState(L3, v)


@pytest.fixture
def write_state(tmp_path):
    def _write(name, doc):
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        return str(path)

    return _write


def amplitudes_json(vec):
    return [{"re": float(z.real), "im": float(z.imag)} for z in np.asarray(vec, complex)]
