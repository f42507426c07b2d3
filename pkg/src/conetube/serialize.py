"""Deterministic JSON encoding of elements, descriptors, and reports.

Floats render with 12 significant digits through repeated runs, so equal
inputs produce byte-identical output. Complex numbers are [re, im] pairs,
elements are coordinate arrays, descriptors are {"family", "rank", "n"},
graded fields are {"u", "A", "w"}.
"""

from __future__ import annotations

import json

import numpy as np

from . import algebra as al
from .errors import DimensionMismatch


def format_float(x: float) -> str:
    if x == 0:
        x = 0.0  # fold -0.0
    out = "%.12g" % float(x)
    return out


def _encode(obj, parts: list):
    if obj is None:
        parts.append("null")
    elif obj is True:
        parts.append("true")
    elif obj is False:
        parts.append("false")
    elif isinstance(obj, str):
        parts.append(json.dumps(obj))
    elif isinstance(obj, (int, np.integer)):
        parts.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        parts.append(format_float(obj))
    elif isinstance(obj, (complex, np.complexfloating)):
        _encode([obj.real, obj.imag], parts)
    elif isinstance(obj, dict):
        parts.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if i:
                parts.append(",")
            parts.append(json.dumps(str(k)))
            parts.append(":")
            _encode(v, parts)
        parts.append("}")
    elif isinstance(obj, (list, tuple, np.ndarray)):
        parts.append("[")
        seq = obj.tolist() if isinstance(obj, np.ndarray) else obj
        for i, v in enumerate(seq):
            if i:
                parts.append(",")
            _encode(v, parts)
        parts.append("]")
    else:
        raise TypeError(f"cannot canonically encode {type(obj).__name__}")


def dumps_canonical(obj) -> str:
    parts: list = []
    _encode(obj, parts)
    return "".join(parts)


def complex_pair(c) -> list:
    c = complex(c)
    return [c.real, c.imag]


def descriptor_to_json(algebra: al.AlgebraDescriptor) -> dict:
    return {"family": algebra.family, "rank": algebra.rank,
            "n": algebra.peirce_constant}


def descriptor_from_json(data) -> al.AlgebraDescriptor:
    if not isinstance(data, dict) or "family" not in data:
        raise DimensionMismatch("descriptor must be an object with a family")
    return al.make_algebra(data["family"], rank=data.get("rank"),
                           peirce_constant=data.get("n"))


def element_to_json(x) -> list:
    x = np.asarray(x)
    if np.iscomplexobj(x):
        return [[float(v.real), float(v.imag)] for v in x]
    return [float(v) for v in x]


def element_from_json(algebra: al.AlgebraDescriptor, data) -> np.ndarray:
    if not isinstance(data, list):
        raise DimensionMismatch("element must be a JSON array")
    vals = []
    is_complex = False
    for entry in data:
        if isinstance(entry, (int, float)):
            vals.append(complex(entry))
        elif (isinstance(entry, list) and len(entry) == 2
              and all(isinstance(t, (int, float)) for t in entry)):
            vals.append(complex(entry[0], entry[1]))
            is_complex = True
        else:
            raise DimensionMismatch(
                f"element entries must be numbers or [re, im] pairs, got {entry!r}")
    arr = np.asarray(vals, dtype=complex)
    if not is_complex or np.all(arr.imag == 0):
        return al.as_element(algebra, arr.real)
    return al.as_element(algebra, arr)


def matrix_from_json(data, allow_complex: bool = False) -> np.ndarray:
    if not isinstance(data, list) or not data or not all(
            isinstance(row, list) for row in data):
        raise DimensionMismatch("matrix must be a JSON array of rows")
    rows = []
    for row in data:
        vals = []
        for entry in row:
            if isinstance(entry, (int, float)):
                vals.append(complex(entry))
            elif (allow_complex and isinstance(entry, list) and len(entry) == 2
                  and all(isinstance(t, (int, float)) for t in entry)):
                vals.append(complex(entry[0], entry[1]))
            else:
                raise DimensionMismatch(f"bad matrix entry {entry!r}")
        rows.append(vals)
    if len({len(r) for r in rows}) != 1:
        raise DimensionMismatch("matrix rows have unequal lengths")
    arr = np.asarray(rows, dtype=complex)
    if np.all(arr.imag == 0):
        arr = arr.real
    elif not allow_complex:
        raise DimensionMismatch("matrix must be real")
    return arr


def field_to_json(field) -> dict:
    return {"u": element_to_json(field.u),
            "A": [element_to_json(row) for row in field.A],
            "w": element_to_json(field.w)}


def field_from_json(algebra: al.AlgebraDescriptor, data):
    from .fields import GradedField
    if not isinstance(data, dict) or set(data) - {"u", "A", "w"}:
        raise DimensionMismatch('field must be {"u": …, "A": …, "w": …}')
    d = algebra.dim
    u = element_from_json(algebra, data.get("u", [0.0] * d))
    w = element_from_json(algebra, data.get("w", [0.0] * d))
    A = matrix_from_json(data.get("A", np.zeros((d, d)).tolist()))
    if np.iscomplexobj(u) or np.iscomplexobj(w):
        raise DimensionMismatch("field coefficients u, w must be real")
    return GradedField(u, A, w)


def spectral_to_json(algebra, data, joint=None) -> dict:
    out = {
        "descriptor": descriptor_to_json(algebra),
        "eigenvalues": [float(v) for v in data.eigenvalues],
        "frame": [element_to_json(row) for row in data.frame],
    }
    if joint is not None:
        out["projections"] = {
            f"{j},{k}": [element_to_json(row) for row in mat]
            for (j, k), mat in sorted(joint.projections.items())
        }
        out["block_dims"] = {f"{j},{k}": int(d)
                             for (j, k), d in sorted(joint.dims.items())}
    return out
