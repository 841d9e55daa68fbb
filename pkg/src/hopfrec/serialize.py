"""Canonical JSON forms for every object the tool exchanges.

Five payload kinds, tagged by a top level "kind": hopf, fusion, fiber,
modules, group.  Scalars are strings "p/q" (reduced, positive
denominator, always written with one) or, beyond the rationals, objects
{"conductor": n, "coeffs": [...]} whose coefficient list has the degree
of the n-th cyclotomic polynomial.  Dumps are compact with sorted keys,
so equal data serializes to identical bytes.

Lexically malformed input raises ParseError (with line and column for
JSON syntax errors); structurally invalid input, including any unknown
field, raises SchemaError.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import NamedTuple

from .errors import ParseError, SchemaError
from .fusion import FiberData, FusionSkeleton
from .groups import GroupTable
from .hopf import AlgebraPresentation, HopfPresentation
from .matrices import Matrix
from .repcat import ModuleRep
from .scalars import Scalar, phi_degree

_RAT = re.compile(r"^-?\d+(/\d+)?$")


def format_scalar(s: Scalar):
    if s.conductor == 1:
        f = s.coeffs[0]
        return f"{f.numerator}/{f.denominator}"
    return {
        "conductor": s.conductor,
        "coeffs": [f"{c.numerator}/{c.denominator}" for c in s.coeffs],
    }


def _parse_fraction(text) -> Fraction:
    if not isinstance(text, str):
        raise SchemaError(f"scalar must be a string or conductor object, got {type(text).__name__}")
    if not _RAT.match(text):
        raise ParseError(f"malformed rational {text!r}")
    if "/" in text:
        p, q = text.split("/")
        if int(q) == 0:
            raise ParseError(f"zero denominator in {text!r}")
        return Fraction(int(p), int(q))
    return Fraction(int(text))


def parse_scalar(obj) -> Scalar:
    if isinstance(obj, str):
        return Scalar(1, (_parse_fraction(obj),))
    if isinstance(obj, dict):
        _expect_fields(obj, {"conductor", "coeffs"}, "scalar")
        n = obj["conductor"]
        if not isinstance(n, int) or n < 1:
            raise SchemaError("conductor must be a positive integer")
        coeffs = obj["coeffs"]
        if not isinstance(coeffs, list) or len(coeffs) != phi_degree(n):
            raise SchemaError(f"coeffs must be a list of length {phi_degree(n)} for conductor {n}")
        return Scalar(n, tuple(_parse_fraction(c) for c in coeffs))
    raise SchemaError(f"scalar must be a string or conductor object, got {type(obj).__name__}")


def format_matrix(m: Matrix):
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[format_scalar(m.at(i, j)) for j in range(m.cols)] for i in range(m.rows)],
    }


def parse_matrix(obj) -> Matrix:
    if not isinstance(obj, dict):
        raise SchemaError("matrix must be an object")
    _expect_fields(obj, {"rows", "cols", "entries"}, "matrix")
    rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
    if not isinstance(rows, int) or not isinstance(cols, int) or rows < 0 or cols < 0:
        raise SchemaError("matrix rows and cols must be nonnegative integers")
    if not isinstance(entries, list) or len(entries) != rows:
        raise SchemaError(f"matrix needs {rows} entry rows")
    data = []
    for r in entries:
        if not isinstance(r, list) or len(r) != cols:
            raise SchemaError(f"matrix rows must have {cols} entries")
        data.append([parse_scalar(x) for x in r])
    return Matrix(rows, cols, [x for r in data for x in r]) if rows * cols else Matrix.zeros(rows, cols)


def _expect_fields(d: dict, fields: set, where: str):
    unknown = set(d) - fields
    if unknown:
        raise SchemaError(f"unknown fields {sorted(unknown)} in {where}")
    missing = fields - set(d)
    if missing:
        raise SchemaError(f"missing fields {sorted(missing)} in {where}")


def _tensor3_payload(t):
    return [[[format_scalar(x) for x in row] for row in plane] for plane in t]


def _parse_tensor3(obj, n: int, where: str):
    if (
        not isinstance(obj, list)
        or len(obj) != n
        or any(not isinstance(p, list) or len(p) != n for p in obj)
        or any(not isinstance(r, list) or len(r) != n for p in obj for r in p)
    ):
        raise SchemaError(f"{where} must be a {n}x{n}x{n} nested list")
    return [[[parse_scalar(x) for x in row] for row in plane] for plane in obj]


def _parse_scalar_list(obj, n: int, where: str):
    if not isinstance(obj, list) or len(obj) != n:
        raise SchemaError(f"{where} must be a list of length {n}")
    return [parse_scalar(x) for x in obj]


class Loaded(NamedTuple):
    kind: str
    obj: object
    extras: dict


# -- per kind ---------------------------------------------------------------

def _hopf_payload(h: HopfPresentation, extras: dict):
    out = {
        "kind": "hopf",
        "dim": h.dim,
        "mult": _tensor3_payload(h.alg.mult),
        "unit": [format_scalar(x) for x in h.alg.unit],
        "comult": _tensor3_payload(h.comult),
        "counit": [format_scalar(x) for x in h.counit],
        "antipode": format_matrix(h.antipode),
    }
    if "basis" in extras:
        out["basis"] = [list(b) for b in extras["basis"]]
    return out


def _hopf_parse(d: dict) -> Loaded:
    fields = {"kind", "dim", "mult", "unit", "comult", "counit", "antipode"}
    if "basis" in d:
        fields.add("basis")
    _expect_fields(d, fields, "hopf")
    n = d["dim"]
    if not isinstance(n, int) or n < 1:
        raise SchemaError("hopf dim must be a positive integer")
    h = HopfPresentation(
        AlgebraPresentation(
            n,
            _parse_tensor3(d["mult"], n, "mult"),
            _parse_scalar_list(d["unit"], n, "unit"),
        ),
        _parse_tensor3(d["comult"], n, "comult"),
        _parse_scalar_list(d["counit"], n, "counit"),
        parse_matrix(d["antipode"]),
    )
    extras = {}
    if "basis" in d:
        basis = d["basis"]
        if not isinstance(basis, list) or any(
            not isinstance(b, list) or len(b) != 3 or any(not isinstance(x, int) for x in b)
            for b in basis
        ):
            raise SchemaError("basis must be a list of integer triples")
        extras["basis"] = tuple(tuple(b) for b in basis)
    return Loaded("hopf", h, extras)


def _fusion_payload(s: FusionSkeleton, extras: dict):
    return {
        "kind": "fusion",
        "rank": s.rank,
        "unit": s.unit,
        "names": list(s.names),
        "fusion": [[[x for x in row] for row in plane] for plane in s.fusion],
        "dual": list(s.dual),
        "F": [
            {"key": list(key), "matrix": format_matrix(s.F[key])}
            for key in sorted(s.F)
        ],
    }


def _fusion_parse(d: dict) -> Loaded:
    _expect_fields(d, {"kind", "rank", "unit", "names", "fusion", "dual", "F"}, "fusion")
    r = d["rank"]
    if not isinstance(r, int) or r < 1:
        raise SchemaError("fusion rank must be a positive integer")
    fus = d["fusion"]
    if (
        not isinstance(fus, list)
        or len(fus) != r
        or any(not isinstance(p, list) or len(p) != r for p in fus)
        or any(not isinstance(row, list) or len(row) != r for p in fus for row in p)
        or any(not isinstance(x, int) for p in fus for row in p for x in row)
    ):
        raise SchemaError(f"fusion must be a {r}x{r}x{r} nested list of integers")
    if not isinstance(d["dual"], list) or any(not isinstance(x, int) for x in d["dual"]):
        raise SchemaError("dual must be a list of integers")
    if not isinstance(d["names"], list) or any(not isinstance(x, str) for x in d["names"]):
        raise SchemaError("names must be a list of strings")
    if not isinstance(d["unit"], int):
        raise SchemaError("unit must be an integer")
    fmat = {}
    if not isinstance(d["F"], list):
        raise SchemaError("F must be a list of key/matrix records")
    for rec in d["F"]:
        if not isinstance(rec, dict):
            raise SchemaError("F records must be objects")
        _expect_fields(rec, {"key", "matrix"}, "F record")
        key = rec["key"]
        if not isinstance(key, list) or len(key) != 4 or any(not isinstance(x, int) for x in key):
            raise SchemaError("F keys must be integer quadruples")
        if tuple(key) in fmat:
            raise SchemaError(f"duplicate F key {key}")
        fmat[tuple(key)] = parse_matrix(rec["matrix"])
    skel = FusionSkeleton(
        rank=r,
        fusion=fus,
        dual=tuple(d["dual"]),
        F=fmat,
        unit=d["unit"],
        names=tuple(d["names"]),
    )
    return Loaded("fusion", skel, {})


def _coeff_vectors_payload(vecs):
    return [[format_scalar(x) for x in v] for v in vecs]


def _parse_coeff_vectors(obj, where: str):
    if not isinstance(obj, list) or any(not isinstance(v, list) for v in obj):
        raise SchemaError(f"{where} must be a list of scalar lists")
    return tuple(tuple(parse_scalar(x) for x in v) for v in obj)


def _fiber_payload(f: FiberData, extras: dict):
    return {
        "kind": "fiber",
        "dims": list(f.dims),
        "iota": format_scalar(f.iota),
        "ev": _coeff_vectors_payload(f.ev_coeff),
        "coev": _coeff_vectors_payload(f.coev_coeff),
        "J": [{"key": list(key), "matrix": format_matrix(f.J[key])} for key in sorted(f.J)],
    }


def _fiber_parse(d: dict) -> Loaded:
    _expect_fields(d, {"kind", "dims", "iota", "ev", "coev", "J"}, "fiber")
    dims = d["dims"]
    if not isinstance(dims, list) or any(not isinstance(x, int) for x in dims):
        raise SchemaError("dims must be a list of integers")
    jmap = {}
    if not isinstance(d["J"], list):
        raise SchemaError("J must be a list of key/matrix records")
    for rec in d["J"]:
        if not isinstance(rec, dict):
            raise SchemaError("J records must be objects")
        _expect_fields(rec, {"key", "matrix"}, "J record")
        key = rec["key"]
        if not isinstance(key, list) or len(key) != 2 or any(not isinstance(x, int) for x in key):
            raise SchemaError("J keys must be integer pairs")
        if tuple(key) in jmap:
            raise SchemaError(f"duplicate J key {key}")
        jmap[tuple(key)] = parse_matrix(rec["matrix"])
    fiber = FiberData(
        dims=tuple(dims),
        J=jmap,
        iota=parse_scalar(d["iota"]),
        ev_coeff=_parse_coeff_vectors(d["ev"], "ev"),
        coev_coeff=_parse_coeff_vectors(d["coev"], "coev"),
    )
    return Loaded("fiber", fiber, {})


def _modules_payload(mods: list, extras: dict):
    return {
        "kind": "modules",
        "algebra_dim": len(mods[0].action) if mods else 0,
        "modules": [
            {
                "name": v.name,
                "dim": v.dim,
                "action": [format_matrix(m) for m in v.action],
            }
            for v in mods
        ],
    }


def _modules_parse(d: dict) -> Loaded:
    _expect_fields(d, {"kind", "algebra_dim", "modules"}, "modules")
    n = d["algebra_dim"]
    if not isinstance(n, int) or n < 1:
        raise SchemaError("algebra_dim must be a positive integer")
    if not isinstance(d["modules"], list):
        raise SchemaError("modules must be a list")
    out = []
    for rec in d["modules"]:
        if not isinstance(rec, dict):
            raise SchemaError("module records must be objects")
        _expect_fields(rec, {"name", "dim", "action"}, "module record")
        if not isinstance(rec["name"], str) or not isinstance(rec["dim"], int):
            raise SchemaError("module name must be a string and dim an integer")
        if not isinstance(rec["action"], list) or len(rec["action"]) != n:
            raise SchemaError(f"module action must list {n} matrices")
        out.append(
            ModuleRep(rec["dim"], tuple(parse_matrix(m) for m in rec["action"]), rec["name"])
        )
    return Loaded("modules", out, {})


def _group_payload(g: GroupTable, extras: dict):
    out = {
        "kind": "group",
        "order": g.order,
        "name": g.name,
        "table": [list(row) for row in g.table],
    }
    if g.elements:
        out["elements"] = [list(e) for e in g.elements]
    return out


def _group_parse(d: dict) -> Loaded:
    fields = {"kind", "order", "name", "table"}
    if "elements" in d:
        fields.add("elements")
    _expect_fields(d, fields, "group")
    n = d["order"]
    if not isinstance(n, int) or n < 1:
        raise SchemaError("group order must be a positive integer")
    t = d["table"]
    if (
        not isinstance(t, list)
        or len(t) != n
        or any(not isinstance(r, list) or len(r) != n for r in t)
        or any(not isinstance(x, int) for r in t for x in r)
    ):
        raise SchemaError(f"table must be a {n}x{n} list of integers")
    if not isinstance(d["name"], str):
        raise SchemaError("group name must be a string")
    elements = ()
    if "elements" in d:
        e = d["elements"]
        if not isinstance(e, list) or any(
            not isinstance(p, list) or any(not isinstance(x, int) for x in p) for p in e
        ):
            raise SchemaError("elements must be lists of integers")
        elements = tuple(tuple(p) for p in e)
    g = GroupTable(n, tuple(tuple(r) for r in t), name=d["name"], elements=elements)
    return Loaded("group", g, {})


_PARSERS = {
    "hopf": _hopf_parse,
    "fusion": _fusion_parse,
    "fiber": _fiber_parse,
    "modules": _modules_parse,
    "group": _group_parse,
}


def to_payload(obj, **extras) -> dict:
    if isinstance(obj, HopfPresentation):
        return _hopf_payload(obj, extras)
    if isinstance(obj, FusionSkeleton):
        return _fusion_payload(obj, extras)
    if isinstance(obj, FiberData):
        return _fiber_payload(obj, extras)
    if isinstance(obj, GroupTable):
        return _group_payload(obj, extras)
    if isinstance(obj, list) and obj and all(isinstance(v, ModuleRep) for v in obj):
        return _modules_payload(obj, extras)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj, **extras) -> str:
    return json.dumps(to_payload(obj, **extras), sort_keys=True, separators=(",", ":")) + "\n"


def loads(text: str) -> Loaded:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno, column=e.colno) from None
    if not isinstance(d, dict):
        raise SchemaError("top level must be an object")
    kind = d.get("kind")
    if kind not in _PARSERS:
        raise SchemaError(f"unknown kind {kind!r}")
    return _PARSERS[kind](d)


def save(path, obj, **extras) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj, **extras))


def load(path) -> Loaded:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
