"""JSON datum files and structure-constant bundles."""

from __future__ import annotations

import json
from pathlib import Path

from .abgroup import AbelianGroup
from .datum import PRESETS, DatumError, QLSDatum, preset
from .prenichols import import_prenichols
from .scalars import FieldError, field_create


class DatumFileError(ValueError):
    pass


def _need(obj: dict, key: str, where: str):
    if key not in obj:
        raise DatumFileError(f"{where}: missing key {key!r}")
    return obj[key]


def _vectors(obj: dict, key: str, n: int, rank: int) -> list:
    vals = _need(obj, key, "datum")
    if not isinstance(vals, list) or len(vals) != n:
        raise DatumFileError(f"datum.{key}: expected a list of {n} exponent vectors")
    out = []
    for k, v in enumerate(vals):
        if isinstance(v, int):
            v = [v]
        if not isinstance(v, list) or len(v) != rank or not all(isinstance(x, int) for x in v):
            raise DatumFileError(f"datum.{key}[{k}]: expected {rank} integers, got {v!r}")
        out.append(tuple(v))
    return out


def datum_from_json(obj: dict) -> QLSDatum:
    if not isinstance(obj, dict):
        raise DatumFileError("datum: top level must be an object")
    fspec = obj.get("field")
    if "preset" in obj:
        name = obj["preset"]
        if name not in PRESETS:
            raise DatumFileError(f"datum.preset: unknown preset {name!r}; known: {', '.join(PRESETS)}")
        try:
            return preset(name, field=fspec)
        except (FieldError, DatumError) as exc:
            raise DatumFileError(f"datum.field: {exc}") from exc
    group = _need(obj, "group", "datum")
    moduli = _need(group, "moduli", "datum.group")
    if not isinstance(moduli, list) or not all(isinstance(m, int) and m > 0 for m in moduli):
        raise DatumFileError("datum.group.moduli: expected a list of positive integers")
    G = AbelianGroup(tuple(moduli))
    if fspec is None:
        raise DatumFileError("datum: missing key 'field'")
    try:
        F = field_create(fspec, G.exponent)
    except (FieldError, KeyError, TypeError) as exc:
        raise DatumFileError(f"datum.field: {exc}") from exc
    n = obj.get("rank", obj.get("n"))
    if n is None:
        n = len(_need(obj, "f", "datum"))
    f = _vectors(obj, "f", n, G.rank)
    g = _vectors(obj, "g", n, G.rank)
    chi = _vectors(obj, "chi", n, G.rank)
    c = _need(obj, "c", "datum")
    m = _need(obj, "m", "datum")
    e = obj.get("e", [])
    for key, vals in (("c", c), ("m", m)):
        if not isinstance(vals, list) or len(vals) != n:
            raise DatumFileError(f"datum.{key}: expected a list of length {n}")
    try:
        cs = [F.from_json(x) if isinstance(x, list) else F.coerce(x) for x in c]
    except (FieldError, ValueError, TypeError, ZeroDivisionError) as exc:
        raise DatumFileError(f"datum.c: {exc}") from exc
    try:
        return QLSDatum(G, F, f=f, g=g, chi=chi, c=cs, m=m, e=e, name=obj.get("name", ""))
    except DatumError as exc:
        raise DatumFileError(f"datum: {exc}") from exc


def load_json(path: str | Path) -> dict:
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DatumFileError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def load_datum(path: str | Path) -> tuple[QLSDatum, dict]:
    """Datum plus optional imported factors {"L": algebra, "R": algebra}."""
    obj = load_json(path)
    d = datum_from_json(obj)
    factors = {}
    for side, bpath in (obj.get("bundles") or {}).items():
        bpath = Path(path).parent / bpath
        factors[side] = import_prenichols(load_json(bpath), d.field)
    return d, factors


def datum_to_json(d: QLSDatum) -> dict:
    out = d.describe()
    out["n"] = out.pop("rank")
    return out


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def write_json(path: str | Path, obj) -> None:
    Path(path).write_text(dumps(obj))
