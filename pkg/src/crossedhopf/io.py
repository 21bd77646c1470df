"""Deterministic JSON files for T-coalgebras, modules, YD modules and twist pairs.

Every scalar is written as a string (``"3/4"`` over QQ, ``"5"`` over GF(p)) and
every array as ``{"shape": [...], "entries": [...]}`` in row-major order.  Group
elements are their integer indices, the identity being ``0``.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from .errors import ParseError, ShapeMismatch
from .exact_linalg import Field, Tensor, field_from_name
from .finite_group import FiniteGroup
from .fixtures import demo
from .modules import HModule
from .quasitriangular import RibbonFamily, RMatrixFamily
from .rib import RibObject
from .tcoalg import Component, TCoalg
from .yetter_drinfeld import YDModule

Loadable = Union[TCoalg, HModule, YDModule, RibObject]

DEMO_SCHEME = "demo:"


# ---------------------------------------------------------------------------
# encoding


def encode_tensor(t: Tensor) -> dict[str, Any]:
    return {"shape": list(t.shape), "entries": [t.field.format(x) for x in t.entries()]}


def _encode_extra(value: Any) -> Any:
    if isinstance(value, Tensor):
        return {"tensor": encode_tensor(value)}
    if isinstance(value, dict):
        return {"map": [[k, _encode_extra(v)] for k, v in sorted(value.items())]}
    if isinstance(value, (int, str)):
        return value
    raise TypeError(f"cannot serialize extra data of type {type(value).__name__}")


def encode_tcoalg(H: TCoalg) -> dict[str, Any]:
    g = H.group
    doc: dict[str, Any] = {
        "kind": "tcoalg",
        "name": H.name,
        "field": H.field.name,
        "group": {"name": g.name, "table": [list(r) for r in g.table]},
        "components": [
            {"grade": a, "mul": encode_tensor(H.comp(a).mul), "unit": encode_tensor(H.unit(a))} for a in g.elements
        ],
        "comul": [{"grades": [a, b], "matrix": encode_tensor(m)} for (a, b), m in sorted(H.comul.items())],
        "counit": encode_tensor(H.counit),
        "antipode": [{"grade": a, "matrix": encode_tensor(H.antipode[a])} for a in g.elements],
        "conj": [{"by": b, "grade": a, "matrix": encode_tensor(m)} for (b, a), m in sorted(H.conj.items())],
    }
    if H.rmatrix is not None:
        doc["rmatrix"] = [
            {"grades": [a, b], "R": encode_tensor(r), "Rinv": encode_tensor(H.rmatrix.Rinv[(a, b)])}
            for (a, b), r in sorted(H.rmatrix.R.items())
        ]
    if H.twist is not None:
        doc["twist"] = [
            {"grade": a, "theta": encode_tensor(t)}
            | ({"theta_inv": encode_tensor(H.twist.theta_inv[a])} if a in H.twist.theta_inv else {})
            for a, t in sorted(H.twist.theta.items())
        ]
    if H.basis_names:
        doc["basis_names"] = [{"grade": a, "names": list(H.basis_names[a])} for a in g.elements]
    if H.extra:
        doc["extra"] = {k: _encode_extra(v) for k, v in sorted(H.extra.items())}
    return doc


def encode_module(M: HModule) -> dict[str, Any]:
    return {"kind": "module", "name": M.name, "field": M.field.name, "grade": M.grade, "act": encode_tensor(M.act)}


def encode_yd(V: YDModule) -> dict[str, Any]:
    return {
        "kind": "yd",
        "name": V.name,
        "module": encode_module(V.module),
        "coaction": [{"grade": lam, "matrix": encode_tensor(m)} for lam, m in sorted(V.coaction.items())],
    }


def encode_rib(O: RibObject) -> dict[str, Any]:
    return {"kind": "rib", "name": O.name, "module": encode_module(O.module), "t": encode_tensor(O.t)}


def encode(obj: Loadable) -> dict[str, Any]:
    if isinstance(obj, TCoalg):
        return encode_tcoalg(obj)
    if isinstance(obj, HModule):
        return encode_module(obj)
    if isinstance(obj, YDModule):
        return encode_yd(obj)
    if isinstance(obj, RibObject):
        return encode_rib(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Loadable) -> str:
    return json.dumps(encode(obj), indent=1, sort_keys=True) + "\n"


def save(obj: Loadable, path: str | Path) -> None:
    Path(path).write_text(dumps(obj))


# ---------------------------------------------------------------------------
# decoding


class _Reader:
    """Field access that reports the dotted path of whatever is missing or malformed."""

    def __init__(self, field: Field | None = None) -> None:
        self.field = field

    def get(self, doc: Any, key: str, where: str) -> Any:
        if not isinstance(doc, dict) or key not in doc:
            raise ParseError(f"missing field {where}.{key}" if where else f"missing field {key}")
        return doc[key]

    def integer(self, doc: Any, key: str, where: str) -> int:
        v = self.get(doc, key, where)
        if not isinstance(v, int) or isinstance(v, bool):
            raise ParseError(f"field {where}.{key} must be an integer")
        return v

    def tensor(self, doc: Any, key: str, where: str) -> Tensor:
        path = f"{where}.{key}"
        t = self.get(doc, key, where)
        shape = self.get(t, "shape", path)
        entries = self.get(t, "entries", path)
        if not isinstance(shape, list) or not all(isinstance(s, int) and s >= 0 for s in shape):
            raise ParseError(f"field {path}.shape must be a list of sizes")
        if not isinstance(entries, list) or not all(isinstance(e, str) for e in entries):
            raise ParseError(f"field {path}.entries must be a list of exact scalars written as strings")
        size = 1
        for s in shape:
            size *= s
        if len(entries) != size:
            raise ShapeMismatch(f"field {path}: {len(entries)} entries for shape {tuple(shape)}")
        try:
            values = [self.field.parse(e) for e in entries]
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"field {path}: {exc}") from exc
        return Tensor.from_scalars(self.field, values, shape)

    def read_field(self, doc: Any, where: str) -> Field:
        name = self.get(doc, "field", where)
        try:
            return field_from_name(str(name))
        except ValueError as exc:
            raise ParseError(f"field {where}.field: {exc}") from exc


def _decode_extra(r: _Reader, value: Any, where: str) -> Any:
    if isinstance(value, dict) and "tensor" in value:
        return r.tensor(value, "tensor", where)
    if isinstance(value, dict) and "map" in value:
        return {int(k) if isinstance(k, int) else k: _decode_extra(r, v, f"{where}[{k}]") for k, v in value["map"]}
    return value


def decode_tcoalg(doc: dict[str, Any]) -> TCoalg:
    r = _Reader()
    r.field = r.read_field(doc, "")
    gdoc = r.get(doc, "group", "")
    table = r.get(gdoc, "table", "group")
    try:
        g = FiniteGroup(table, gdoc.get("name", ""))
    except (TypeError, ValueError) as exc:
        raise ParseError(f"field group.table: {exc}") from exc
    comps = {}
    for k, c in enumerate(r.get(doc, "components", "")):
        w = f"components[{k}]"
        comps[r.integer(c, "grade", w)] = Component(r.tensor(c, "mul", w), r.tensor(c, "unit", w))
    comul = {}
    for k, c in enumerate(r.get(doc, "comul", "")):
        w = f"comul[{k}]"
        a, b = _pair(r.get(c, "grades", w), f"{w}.grades")
        comul[(a, b)] = r.tensor(c, "matrix", w)
    antipode = {}
    for k, c in enumerate(r.get(doc, "antipode", "")):
        w = f"antipode[{k}]"
        antipode[r.integer(c, "grade", w)] = r.tensor(c, "matrix", w)
    conj = {}
    for k, c in enumerate(r.get(doc, "conj", "")):
        w = f"conj[{k}]"
        conj[(r.integer(c, "by", w), r.integer(c, "grade", w))] = r.tensor(c, "matrix", w)
    counit = r.tensor(doc, "counit", "")
    rm = None
    if "rmatrix" in doc:
        R, Rinv = {}, {}
        for k, c in enumerate(doc["rmatrix"]):
            w = f"rmatrix[{k}]"
            key = _pair(r.get(c, "grades", w), f"{w}.grades")
            R[key] = r.tensor(c, "R", w)
            Rinv[key] = r.tensor(c, "Rinv", w)
        rm = RMatrixFamily(R, Rinv)
    tw = None
    if "twist" in doc:
        theta, theta_inv = {}, {}
        for k, c in enumerate(doc["twist"]):
            w = f"twist[{k}]"
            a = r.integer(c, "grade", w)
            theta[a] = r.tensor(c, "theta", w)
            if "theta_inv" in c:
                theta_inv[a] = r.tensor(c, "theta_inv", w)
        tw = RibbonFamily(theta, theta_inv)
    names = None
    if "basis_names" in doc:
        names = {int(c["grade"]): tuple(c["names"]) for c in doc["basis_names"]}
    extra = {k: _decode_extra(r, v, f"extra.{k}") for k, v in doc.get("extra", {}).items()}
    H = TCoalg(g, comps, comul, counit, antipode, conj, rmatrix=rm, twist=tw, basis_names=names,
               name=str(doc.get("name", "")), extra=extra)
    H.check_shapes()
    return H


def _pair(v: Any, where: str) -> tuple[int, int]:
    if not (isinstance(v, list) and len(v) == 2 and all(isinstance(x, int) for x in v)):
        raise ParseError(f"field {where} must be a pair of group indices")
    return v[0], v[1]


def decode_module(doc: dict[str, Any], where: str = "") -> HModule:
    r = _Reader()
    r.field = r.read_field(doc, where)
    act = r.tensor(doc, "act", where)
    if act.ndim != 3 or act.shape[1] != act.shape[2]:
        raise ShapeMismatch(f"field {where + '.' if where else ''}act: shape {act.shape} is not a stack of square matrices")
    return HModule(r.integer(doc, "grade", where), act, str(doc.get("name", "")))


def decode_yd(doc: dict[str, Any]) -> YDModule:
    M = decode_module(_Reader().get(doc, "module", ""), "module")
    r = _Reader(M.field)
    co = {}
    for k, c in enumerate(r.get(doc, "coaction", "")):
        w = f"coaction[{k}]"
        co[r.integer(c, "grade", w)] = r.tensor(c, "matrix", w)
    return YDModule(M, co, str(doc.get("name", "")))


def decode_rib(doc: dict[str, Any]) -> RibObject:
    M = decode_module(_Reader().get(doc, "module", ""), "module")
    t = _Reader(M.field).tensor(doc, "t", "")
    if t.shape != (M.dim, M.dim):
        raise ShapeMismatch(f"field t: shape {t.shape}, expected {(M.dim, M.dim)}")
    return RibObject(M, t, str(doc.get("name", "")))


_DECODERS = {"tcoalg": decode_tcoalg, "module": decode_module, "yd": decode_yd, "rib": decode_rib}


def decode(doc: Any) -> Loadable:
    kind = _Reader().get(doc, "kind", "")
    if kind not in _DECODERS:
        raise ParseError(f"field kind: unknown kind {kind!r}")
    return _DECODERS[kind](doc)


def loads(text: str) -> Loadable:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}: {exc.msg}") from exc
    return decode(doc)


def load(path: str | Path) -> Loadable:
    """Read a file, or build a fixture when ``path`` is ``demo:NAME``."""
    s = str(path)
    if s.startswith(DEMO_SCHEME):
        return demo(s[len(DEMO_SCHEME):])
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {s}: {exc.strerror}") from exc
    return loads(text)
