"""JSON file formats: state sets, tile-diagram sidecars, verdicts.

Scalars are ``{"re": "p/q", "im": "p/q"}`` with ``/q`` omitted when q = 1
and ``im`` omitted when zero. Output is canonical (reduced rationals, fixed
key order, one record per line, trailing newline) so serialising the same
object always yields the same bytes.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .algebra import GaussianRational
from .errors import MalformedDiagram, MalformedInput
from .states import ProductState, StateSet, Tile, TileDiagram

_RATIONAL = re.compile(r"(-?)(0|[1-9][0-9]*)(?:/([0-9]+))?")


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: Any, where: str) -> Fraction:
    if not isinstance(text, str):
        raise MalformedInput(f"expected a rational string like \"-3/4\", got {json.dumps(text)}", where)
    match = _RATIONAL.fullmatch(text)
    if not match:
        raise MalformedInput(f"not a rational: {text!r}", where)
    sign, num, den = match.groups()
    if sign and num == "0":
        raise MalformedInput("negative zero is not canonical", where)
    if den is None:
        return Fraction(int(sign + num))
    q = int(den)
    if q == 0:
        raise MalformedInput("denominator is zero", where)
    if q == 1:
        raise MalformedInput(f"{text!r}: a denominator of 1 must be omitted", where)
    x = Fraction(int(sign + num), q)
    if x.denominator != q:
        raise MalformedInput(f"{text!r} is not in lowest terms", where)
    return x


def scalar_to_json(z) -> dict:
    z = GaussianRational.coerce(z)
    out = {"re": format_rational(z.re)}
    if z.im:
        out["im"] = format_rational(z.im)
    return out


def scalar_from_json(obj: Any, where: str) -> GaussianRational:
    if not isinstance(obj, dict):
        raise MalformedInput("scalar must be an object with \"re\" and optional \"im\"", where)
    extra = set(obj) - {"re", "im"}
    if extra:
        raise MalformedInput(f"unexpected keys {sorted(extra)}", where)
    if "re" not in obj:
        raise MalformedInput("missing \"re\"", where)
    re_ = parse_rational(obj["re"], f"{where}.re")
    im = Fraction(0)
    if "im" in obj:
        im = parse_rational(obj["im"], f"{where}.im")
        if not im:
            raise MalformedInput("zero imaginary part must be omitted", f"{where}.im")
    return GaussianRational(re_, im)


def matrix_to_json(h) -> list:
    return [[scalar_to_json(z) for z in row] for row in h]


def _dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def _load(data: bytes | str) -> Any:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedInput(f"not UTF-8: {exc}", "byte %d" % exc.start) from exc
    try:
        return json.loads(data)
    except json.JSONDecodeError as exc:
        raise MalformedInput(exc.msg, f"line {exc.lineno} column {exc.colno}") from exc


def _dims(doc: Any) -> tuple[int, int]:
    if not isinstance(doc, dict):
        raise MalformedInput("top level must be an object", "$")
    dims = doc.get("dims")
    if not isinstance(dims, dict) or set(dims) != {"a", "b"}:
        raise MalformedInput("expected {\"a\": m, \"b\": n}", "dims")
    out = []
    for key in ("a", "b"):
        v = dims[key]
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise MalformedInput(f"dimension must be a positive integer, got {json.dumps(v)}", f"dims.{key}")
        out.append(v)
    return out[0], out[1]


def serialize_states(states: StateSet) -> bytes:
    lines = ["{", f'  "dims": {{"a": {states.m}, "b": {states.n}}},', '  "states": [']
    body = []
    for s in states:
        rec = {"label": s.label, "a": [scalar_to_json(z) for z in s.a], "b": [scalar_to_json(z) for z in s.b]}
        body.append("    " + _dumps(rec))
    if body:
        lines.append(",\n".join(body))
    lines += ["  ]", "}"]
    return ("\n".join(lines) + "\n").encode("utf-8")


def parse_states(data: bytes | str) -> StateSet:
    doc = _load(data)
    m, n = _dims(doc)
    raw = doc.get("states")
    if not isinstance(raw, list):
        raise MalformedInput("expected a list", "states")
    extra = set(doc) - {"dims", "states"}
    if extra:
        raise MalformedInput(f"unexpected keys {sorted(extra)}", "$")
    out = []
    labels = set()
    for i, rec in enumerate(raw):
        where = f"states[{i}]"
        if not isinstance(rec, dict) or set(rec) != {"label", "a", "b"}:
            raise MalformedInput("state must have exactly \"label\", \"a\", \"b\"", where)
        label = rec["label"]
        if not isinstance(label, str) or not label:
            raise MalformedInput("label must be a non-empty string", f"{where}.label")
        if label in labels:
            raise MalformedInput(f"duplicate label {label!r}", f"{where}.label")
        labels.add(label)
        vecs = {}
        for key, dim in (("a", m), ("b", n)):
            v = rec[key]
            if not isinstance(v, list):
                raise MalformedInput("expected a list of scalars", f"{where}.{key}")
            if len(v) != dim:
                raise MalformedInput(f"length {len(v)} does not match dims.{key} = {dim}", f"{where}.{key}")
            vecs[key] = tuple(scalar_from_json(z, f"{where}.{key}[{k}]") for k, z in enumerate(v))
            if not any(vecs[key]):
                raise MalformedInput("zero vector", f"{where}.{key}")
        out.append(ProductState(label, vecs["a"], vecs["b"]))
    return StateSet(m, n, tuple(out))


def tile_to_json(t: Tile) -> dict:
    return {"kind": t.kind, "row": t.row, "col": t.col, "color": t.color}


def serialize_tiles(d: TileDiagram) -> bytes:
    lines = ["{", f'  "dims": {{"a": {d.m}, "b": {d.n}}},', '  "tiles": [']
    body = ["    " + _dumps(tile_to_json(t)) for t in d.tiles]
    if body:
        lines.append(",\n".join(body))
    lines += ["  ]", "}"]
    return ("\n".join(lines) + "\n").encode("utf-8")


def parse_tiles(data: bytes | str) -> TileDiagram:
    doc = _load(data)
    m, n = _dims(doc)
    raw = doc.get("tiles")
    if not isinstance(raw, list):
        raise MalformedInput("expected a list", "tiles")
    tiles = []
    for i, rec in enumerate(raw):
        where = f"tiles[{i}]"
        if not isinstance(rec, dict) or set(rec) != {"kind", "row", "col", "color"}:
            raise MalformedInput("tile must have exactly \"kind\", \"row\", \"col\", \"color\"", where)
        for key in ("row", "col"):
            if not isinstance(rec[key], int) or isinstance(rec[key], bool):
                raise MalformedInput("must be an integer", f"{where}.{key}")
        try:
            tiles.append(Tile(rec["kind"], rec["row"], rec["col"], rec["color"]))
        except MalformedDiagram as exc:
            raise MalformedInput(str(exc), where) from exc
    try:
        return TileDiagram(m, n, tuple(tiles))
    except MalformedDiagram as exc:
        raise MalformedInput(str(exc), "tiles") from exc


def verdict_to_json(v) -> dict:
    out: dict[str, Any] = {
        "dims": {"a": v.m, "b": v.n},
        "stateCount": v.state_count,
        "dimA": v.dim_a,
        "dimB": v.dim_b,
        "status": v.status,
    }
    if v.witness is not None:
        w = v.witness
        out["witness"] = {
            "party": w.party,
            "epsilon": scalar_to_json(w.epsilon),
            "K": matrix_to_json(w.direction),
            "operators": [matrix_to_json(e) for e in w.effects],
        }
    return out


def dumps_json(obj) -> str:
    """Canonical JSON text for CLI output."""
    return json.dumps(obj, ensure_ascii=False, indent=2) + "\n"
