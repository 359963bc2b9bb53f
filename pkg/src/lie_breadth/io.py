"""JSON file formats for algebras and cochains.

Both share one shape::

    {"name": "g_1_0_4", "dim": 5,
     "brackets": [{"i": 1, "j": 2, "terms": [{"k": 3, "c": "1"}]}, ...]}

A cochain file may also carry ``"base"``, the name of the algebra it deforms.
Indices are 1-based with ``i < j``; coefficients are canonical rational
strings. Serialization is canonical: records sorted by ``(i, j)``, terms by
``k``, zero terms dropped, two-space indent and a trailing newline.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import DuplicateBracket, IndexOutOfRange, ParseError
from .exact_linalg import format_rational, parse_rational
from .lie import Cochain2, LieAlgebra


@dataclass(frozen=True)
class CochainFile:
    name: str
    cochain: Cochain2
    base: str | None = None


def _expect(value, kind, path: str):
    if kind is int:
        ok = isinstance(value, int) and not isinstance(value, bool)
    else:
        ok = isinstance(value, kind)
    if not ok:
        raise ParseError(f"expected {kind.__name__}, got {type(value).__name__}", path)
    return value


def _load(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", f"line {exc.lineno}, column {exc.colno}") from None
    return _expect(doc, dict, "$")


def _parse_table(doc: dict, extra_keys: tuple = ()) -> tuple[str, Cochain2]:
    allowed = {"name", "dim", "brackets", *extra_keys}
    for key in doc:
        if key not in allowed:
            raise ParseError(f"unknown field {key!r}", f"$.{key}")
    for key in ("name", "dim", "brackets"):
        if key not in doc:
            raise ParseError("missing field", f"$.{key}")
    name = _expect(doc["name"], str, "$.name")
    dim = _expect(doc["dim"], int, "$.dim")
    if dim < 1:
        raise ParseError("dimension must be positive", "$.dim")
    table: dict = {}
    for r, rec in enumerate(_expect(doc["brackets"], list, "$.brackets")):
        where = f"$.brackets[{r}]"
        _expect(rec, dict, where)
        for key in ("i", "j", "terms"):
            if key not in rec:
                raise ParseError("missing field", f"{where}.{key}")
        for key in rec:
            if key not in ("i", "j", "terms"):
                raise ParseError(f"unknown field {key!r}", f"{where}.{key}")
        i = _expect(rec["i"], int, f"{where}.i")
        j = _expect(rec["j"], int, f"{where}.j")
        if not 1 <= i < j <= dim:
            raise IndexOutOfRange(f"need 1 <= i < j <= {dim}, got i={i}, j={j}", where)
        if (i, j) in table:
            raise DuplicateBracket(f"bracket [{i},{j}] given twice", where)
        terms: dict = {}
        for t, term in enumerate(_expect(rec["terms"], list, f"{where}.terms")):
            tw = f"{where}.terms[{t}]"
            _expect(term, dict, tw)
            if set(term) != {"k", "c"}:
                raise ParseError("a term has exactly the fields 'k' and 'c'", tw)
            k = _expect(term["k"], int, f"{tw}.k")
            if not 1 <= k <= dim:
                raise IndexOutOfRange(f"need 1 <= k <= {dim}, got {k}", f"{tw}.k")
            if k in terms:
                raise DuplicateBracket(f"target X{k} given twice in [{i},{j}]", f"{tw}.k")
            raw = _expect(term["c"], str, f"{tw}.c")
            try:
                terms[k] = parse_rational(raw)
            except ParseError as exc:
                raise ParseError(str(exc), f"{tw}.c") from None
        table[(i, j)] = terms
    return name, Cochain2.from_dict(dim, table)


def _records(mu: Cochain2) -> list[dict]:
    return [
        {"i": i, "j": j, "terms": [{"k": k, "c": format_rational(c)} for k, c in terms]}
        for (i, j), terms in mu.values
    ]


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def parse_algebra(text: str, strict: bool = False) -> LieAlgebra:
    """Parse an algebra file. ``strict`` additionally enforces the Jacobi identity."""
    name, mu = _parse_table(_load(text))
    return LieAlgebra(name, mu, strict=strict)


def serialize_algebra(g: LieAlgebra) -> str:
    return _dump({"name": g.name, "dim": g.dim, "brackets": _records(g.mu)})


def parse_cochain(text: str) -> CochainFile:
    doc = _load(text)
    name, phi = _parse_table(doc, extra_keys=("base",))
    base = doc.get("base")
    if base is not None:
        _expect(base, str, "$.base")
    return CochainFile(name, phi, base)


def serialize_cochain(phi: Cochain2, name: str, base: str | None = None) -> str:
    doc: dict = {"name": name}
    if base is not None:
        doc["base"] = base
    doc["dim"] = phi.dim
    doc["brackets"] = _records(phi)
    return _dump(doc)


def read_algebra(path, strict: bool = False) -> LieAlgebra:
    return parse_algebra(Path(path).read_text(encoding="utf-8"), strict=strict)


def read_cochain(path) -> CochainFile:
    return parse_cochain(Path(path).read_text(encoding="utf-8"))


def write_text(path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")
