"""JSON input formats: Hopf algebra files, ideal files, group files.

Hopf algebra file:

    {
      "name": "...",
      "field": {"type": "Q"} | {"type": "Fp", "p": <prime>},
      "dim": <n>,
      "basis": ["e", "g", ...],
      "mult":     [[i, j, k, "num/den"], ...],   # coeff of e_k in e_i e_j
      "unit":     ["c0", ...],
      "comult":   [[k, i, j, "num/den"], ...],   # coeff of e_i (x) e_j in D(e_k)
      "counit":   ["c0", ...],
      "antipode": [[i, j, "num/den"], ...]       # coeff of e_i in S(e_j)
    }

Coefficients are exact fraction strings (plain integers allowed); indices
are 0-based.  Ideal file: {"generators": [[coeff, ...], ...]}.
Group file: {"name": ..., "order": n, "table": [[...]]} with an optional
"names" list.
"""

from __future__ import annotations

import json

from .groups import FiniteGroup
from .hopf import HopfAlgebra
from .linalg import QQ, PrimeField, SparseMatrix


class InputError(ValueError):
    pass


def _field_from_spec(spec):
    if spec is None or spec.get("type", "Q").upper() == "Q":
        return QQ
    if spec["type"] == "Fp":
        return PrimeField(int(spec["p"]))
    raise InputError(f"unknown field {spec!r}")


def _coeff(field, value):
    if isinstance(value, int):
        return field.from_int(value)
    return field.from_str(str(value))


def load_hopf_json(data, field=None):
    try:
        dim = int(data["dim"])
        basis = list(data["basis"])
        if len(basis) != dim:
            raise InputError("basis length does not match dim")
        f = field if field is not None else _field_from_spec(data.get("field"))
        mult = {}
        for i, j, k, v in data["mult"]:
            mult[(int(i), int(j), int(k))] = _coeff(f, v)
        unit = {i: _coeff(f, v) for i, v in enumerate(data["unit"])}
        comult = {}
        for k, i, j, v in data["comult"]:
            comult[(int(k), int(i), int(j))] = _coeff(f, v)
        counit = {i: _coeff(f, v) for i, v in enumerate(data["counit"])}
        entries = [(int(i), int(j), _coeff(f, v)) for i, j, v in data["antipode"]]
        antipode = SparseMatrix.from_entries(dim, dim, f, entries)
        return HopfAlgebra(data.get("name", "hopf"), f, basis, mult, unit,
                           comult, counit, antipode)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise InputError(f"bad Hopf algebra file: {exc}") from exc


def load_hopf_file(path, field=None):
    with open(path) as fh:
        return load_hopf_json(json.load(fh), field)


def load_ideal_file(path, h):
    try:
        with open(path) as fh:
            data = json.load(fh)
        gens = data["generators"]
        cols = []
        for vec in gens:
            if len(vec) != h.dim:
                raise InputError("generator length does not match dim")
            cols.append({i: _coeff(h.field, v) for i, v in enumerate(vec)
                         if not h.field.is_zero(_coeff(h.field, v))})
        return SparseMatrix.from_columns(h.dim, cols, h.field)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad ideal file: {exc}") from exc


def load_subalgebra_file(path, h):
    return load_ideal_file(path, h)


def load_group_file(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
        order = int(data["order"])
        table = data["table"]
        names = data.get("names", [str(i) for i in range(order)])
        return FiniteGroup(data.get("name", "group"), names, table)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad group file: {exc}") from exc
