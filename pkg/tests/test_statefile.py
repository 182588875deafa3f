import json
import math

import numpy as np
import pytest

import ktangle as kt
from ktangle.statefile import parse_state_file

from conftest import amplitudes_json


def test_parse_pure_state_roundtrip():
    v = np.zeros(8, dtype=complex)
    v[0] = v[7] = 1 / math.sqrt(2)
    doc = {"dims": [2, 2, 2], "amplitudes": amplitudes_json(v)}
    obj = parse_state_file(json.dumps(doc))
    assert isinstance(obj, kt.PureState)
    assert obj.layout.dims == (2, 2, 2)
    assert np.abs(obj.amplitudes - v).max() < 1e-15


def test_parse_matrix_and_ensemble():
    m = np.diag([0.5, 0.5, 0.0, 0.0])
    doc = {
        "dims": [2, 2],
        "matrix": [[{"re": float(x.real), "im": 0.0} for x in row] for row in m],
    }
    rho = parse_state_file(json.dumps(doc))
    assert isinstance(rho, kt.DensityOperator)

    v = np.zeros(4)
    v[0] = 1.0
    doc = {"dims": [2, 2], "ensemble": [{"p": 1.0, "amplitudes": amplitudes_json(v)}]}
    ens = parse_state_file(json.dumps(doc))
    assert isinstance(ens, kt.Ensemble)
    assert len(ens.members) == 1


@pytest.mark.parametrize(
    "text",
    [
        "[1, 2]",                                  # top level not an object
        '{"amplitudes": []}',                      # dims missing
        '{"dims": [2, true], "amplitudes": []}',   # bool is not a dimension
        '{"dims": [2, 1], "amplitudes": []}',      # dimension below 2
        '{"dims": []}',                            # empty dims
        '{"dims": [2, 2]}',                        # no payload
        '{"dims": [2], "amplitudes": [{"re": 1.0, "im": 0.0, "x": 1}, {"re": 0, "im": 0}]}',
        '{"dims": [2], "amplitudes": [{"re": "1", "im": 0}, {"re": 0, "im": 0}]}',
        '{"dims": [2], "amplitudes": [{"re": 1, "im": 0}]}',  # wrong length
        '{"dims": [2, 2], "matrix": [[]]}',        # wrong row count
        '{"dims": [2, 2], "ensemble": []}',        # empty ensemble
        '{"dims": [2, 2], "ensemble": [{"p": true, "amplitudes": []}]}',
        '{"dims": [2, 2], "ensemble": [{"amplitudes": []}]}',
    ],
)
def test_parse_rejects_bad_schema(text):
    with pytest.raises(kt.ParseError):
        parse_state_file(text)


def test_parse_error_is_value_error():
    # callers treating schema problems as input errors can catch ValueError
    assert issubclass(kt.ParseError, ValueError)


def test_parse_propagates_state_validation():
    v = np.zeros(4)
    v[0] = 0.5  # not normalized
    doc = {"dims": [2, 2], "amplitudes": amplitudes_json(v)}
    with pytest.raises(kt.ValidationError):
        parse_state_file(json.dumps(doc))
