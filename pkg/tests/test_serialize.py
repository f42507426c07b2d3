"""Canonical JSON emission and the element/field/descriptor codecs."""

import json

import numpy as np
import pytest

import conetube as ct
from conetube import serialize as sz


def test_format_float():
    assert sz.format_float(0.5) == "0.5"
    assert sz.format_float(-0.0) == "0"
    assert sz.format_float(1e-9) == "1e-09"
    assert sz.format_float(1 / 3) == "0.333333333333"
    assert sz.format_float(2.0) == "2"


def test_dumps_canonical_is_valid_json():
    payload = {
        "name": "x",
        "ok": True,
        "missing": None,
        "count": 3,
        "value": 0.1 + 0.2,
        "z": 1 + 2j,
        "vec": np.array([1.0, -0.0, 2.5]),
        "nested": [{"a": 1}, (2, 3)],
    }
    text = sz.dumps_canonical(payload)
    parsed = json.loads(text)
    assert parsed["z"] == [1, 2]
    assert parsed["vec"] == [1, 0, 2.5]
    assert parsed["nested"] == [{"a": 1}, [2, 3]]


def test_dumps_canonical_deterministic():
    obj = {"b": [0.1, 0.2 + 0.3j], "a": {"k": np.arange(3)}}
    assert sz.dumps_canonical(obj) == sz.dumps_canonical(obj)


def test_dumps_canonical_preserves_key_order():
    text = sz.dumps_canonical({"zeta": 1, "alpha": 2})
    assert text.index("zeta") < text.index("alpha")


def test_descriptor_round_trip():
    for A in ct.desk_algebras():
        data = sz.descriptor_to_json(A)
        assert set(data) == {"family", "rank", "n"}
        back = sz.descriptor_from_json(json.loads(json.dumps(data)))
        assert back == A
    with pytest.raises(ct.DimensionMismatch):
        sz.descriptor_from_json([1, 2, 3])
    with pytest.raises(ct.ClassificationError):
        sz.descriptor_from_json({"family": "who"})


def test_element_round_trip_real():
    A = ct.make_algebra("hermR", rank=3)
    rng = np.random.default_rng(501)
    x = rng.standard_normal(A.dim)
    data = sz.element_to_json(x)
    assert all(isinstance(v, float) for v in data)
    back = sz.element_from_json(A, data)
    np.testing.assert_allclose(back, x)
    assert back.dtype == float


def test_element_round_trip_complex():
    A = ct.make_algebra("hermR", rank=2)
    z = np.array([1 + 2j, 0.5j, -1.0])
    data = sz.element_to_json(z)
    assert data[0] == [1.0, 2.0]
    back = sz.element_from_json(A, data)
    np.testing.assert_allclose(back, z)


def test_element_from_json_flattens_real_pairs():
    A = ct.make_algebra("hermR", rank=2)
    back = sz.element_from_json(A, [[1.0, 0.0], [2.0, 0.0], [3.0, 0.0]])
    assert back.dtype == float
    np.testing.assert_allclose(back, [1.0, 2.0, 3.0])


def test_element_from_json_checks_length():
    A = ct.make_algebra("hermR", rank=2)
    with pytest.raises(ct.DimensionMismatch):
        sz.element_from_json(A, [1.0, 2.0])


def test_matrix_from_json():
    M = sz.matrix_from_json([[1.0, 2.0], [3.0, 4.0]])
    np.testing.assert_allclose(M, [[1, 2], [3, 4]])
    Mc = sz.matrix_from_json([[[0.0, 1.0]]], allow_complex=True)
    assert Mc[0, 0] == 1j
    with pytest.raises(ct.DimensionMismatch):
        sz.matrix_from_json([[[0.0, 1.0]]], allow_complex=False)
    with pytest.raises(ct.DimensionMismatch):
        sz.matrix_from_json([[1.0], [2.0, 3.0]])


def test_field_round_trip():
    A = ct.make_algebra("hermR", rank=2)
    rng = np.random.default_rng(503)
    from conetube import fields as fl
    f = fl.random_field(A, rng)
    data = sz.field_to_json(f)
    assert set(data) == {"u", "A", "w"}
    back = sz.field_from_json(A, data)
    np.testing.assert_allclose(back.u, f.u)
    np.testing.assert_allclose(back.A, f.A)
    np.testing.assert_allclose(back.w, f.w)
    partial = sz.field_from_json(A, {"u": [1.0, 0.0, 0.0]})
    assert np.max(np.abs(partial.A)) == 0
    with pytest.raises(ct.DimensionMismatch):
        sz.field_from_json(A, {"u": [1.0, 0.0, 0.0], "typo": []})


def test_spectral_to_json():
    A = ct.make_algebra("hermR", rank=3)
    x = np.zeros(A.dim)
    x[0], x[1] = 1.0, -2.0
    data = ct.spectral_decompose(A, x)
    out = sz.spectral_to_json(A, data)
    assert out["descriptor"]["family"] == "hermR"
    assert len(out["eigenvalues"]) == 3
    assert "projections" not in out
    joint = ct.joint_peirce(A, data.frame)
    out = sz.spectral_to_json(A, data, joint)
    assert out["block_dims"]["1,2"] == 1
    text = sz.dumps_canonical(out)
    json.loads(text)
