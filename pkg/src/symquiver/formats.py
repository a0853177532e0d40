"""JSON file formats for quivers, representations and matrices.

Quiver file::

    {"vertices": 4,
     "arrows": [{"from": 2, "to": 1}, {"from": 2, "to": 3}, {"from": 4, "to": 3}],
     "epsilon": -1,
     "dims": [1, 3, 3, 1]}

Representation file (matrices over the positive and tau-fixed arrows; a
negative arrow may be listed too, and must then agree with the embedding)::

    {"arrows": [{"from": 2, "to": 1, "matrix": [[1, 0, 0]]}, ...]}

A matrix file is either JSON (a list of rows, or ``{"matrix": [...]}``) or
plain text with one whitespace-separated row per line.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .linalg import IntMatrix
from .quiver import QuiverError, SymQuiverA, check_dims
from .quiver import quiver_from_arrows
from .reps import Representation, symmetric_embed

__all__ = ["load_quiver", "parse_quiver", "load_representation", "parse_representation",
           "load_matrix", "parse_matrix", "quiver_to_json"]


def _read_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as ex:
        raise QuiverError(f"cannot read {path}: {ex.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as ex:
        raise QuiverError(f"{path} is not valid JSON: {ex}") from None


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise QuiverError(f"{what} must be an integer, got {x!r}")
    return x


def parse_quiver(doc: Any) -> tuple[SymQuiverA, tuple[int, ...]]:
    if not isinstance(doc, dict):
        raise QuiverError("quiver document must be a JSON object")
    for key in ("vertices", "arrows", "epsilon", "dims"):
        if key not in doc:
            raise QuiverError(f"quiver document is missing field {key!r}")
    n = _int(doc["vertices"], "vertices")
    eps = _int(doc["epsilon"], "epsilon")
    arrows = []
    if not isinstance(doc["arrows"], list):
        raise QuiverError("arrows must be a list")
    for a in doc["arrows"]:
        if not isinstance(a, dict) or "from" not in a or "to" not in a:
            raise QuiverError(f"each arrow needs 'from' and 'to', got {a!r}")
        arrows.append((_int(a["from"], "arrow 'from'"), _int(a["to"], "arrow 'to'")))
    Q = quiver_from_arrows(n, arrows, eps)
    if not isinstance(doc["dims"], list):
        raise QuiverError("dims must be a list")
    dims = check_dims(Q, [_int(x, "dimension") for x in doc["dims"]])
    return Q, dims


def load_quiver(path: str | Path) -> tuple[SymQuiverA, tuple[int, ...]]:
    return parse_quiver(_read_json(path))


def quiver_to_json(Q: SymQuiverA, dims) -> dict:
    return {"vertices": Q.n, "arrows": [{"from": t, "to": h} for t, h in Q.arrows()],
            "epsilon": Q.epsilon, "dims": list(dims)}


def _matrix(rows: Any, what: str) -> list[list[int]]:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise QuiverError(f"{what} must be a list of rows")
    return [[_int(x, f"{what} entry") for x in r] for r in rows]


def parse_representation(doc: Any, Q: SymQuiverA, dims) -> Representation:
    if not isinstance(doc, dict) or not isinstance(doc.get("arrows"), list):
        raise QuiverError("representation document needs an 'arrows' list")
    given: dict[int, list[list[int]]] = {}
    for a in doc["arrows"]:
        if not isinstance(a, dict) or not {"from", "to", "matrix"} <= a.keys():
            raise QuiverError(f"each arrow needs 'from', 'to' and 'matrix', got {a!r}")
        s, t = _int(a["from"], "arrow 'from'"), _int(a["to"], "arrow 'to'")
        e = min(s, t)
        if abs(s - t) != 1 or not (1 <= e < Q.n) or (Q.tail(e), Q.head(e)) != (s, t):
            raise QuiverError(f"arrow {s}->{t} is not an arrow of {Q.describe()}")
        if e in given:
            raise QuiverError(f"arrow {s}->{t} is listed twice")
        given[e] = _matrix(a["matrix"], f"matrix over {s}->{t}")
    for e, rows in given.items():
        want = (dims[Q.head(e) - 1], dims[Q.tail(e) - 1])
        got = (len(rows), len(rows[0]) if rows else want[1])
        if got != want or any(len(r) != want[1] for r in rows):
            raise QuiverError(
                f"shape mismatch over arrow {Q.tail(e)}->{Q.head(e)}: got {got}, want {want}")
    sym = {e: IntMatrix.from_rows(m, cols=dims[Q.tail(e) - 1])
           for e, m in given.items() if Q.edge_kind(e) != "negative"}
    V = Representation.symmetric(Q, dims, sym)
    full = symmetric_embed(V)
    for e, m in given.items():
        if Q.edge_kind(e) == "negative" and full.mat(e).tolist() != m:
            raise QuiverError(
                f"matrix over negative arrow {Q.tail(e)}->{Q.head(e)} does not match the "
                f"symmetric embedding of the positive half")
    return V


def load_representation(path: str | Path, Q: SymQuiverA, dims) -> Representation:
    return parse_representation(_read_json(path), Q, dims)


def parse_matrix(text: str) -> IntMatrix:
    s = text.strip()
    if not s:
        raise QuiverError("matrix file is empty")
    if s[0] in "[{":
        try:
            doc = json.loads(s)
        except json.JSONDecodeError as ex:
            raise QuiverError(f"matrix is not valid JSON: {ex}") from None
        if isinstance(doc, dict):
            doc = doc.get("matrix")
        rows = _matrix(doc, "matrix")
    else:
        try:
            rows = [[int(x) for x in line.replace(",", " ").split()]
                    for line in s.splitlines() if line.strip()]
        except ValueError:
            raise QuiverError("matrix rows must contain integers only") from None
    if any(len(r) != len(rows[0]) for r in rows):
        raise QuiverError("matrix rows have different lengths")
    return IntMatrix.from_rows(rows)


def load_matrix(path: str | Path) -> IntMatrix:
    try:
        return parse_matrix(Path(path).read_text())
    except OSError as ex:
        raise QuiverError(f"cannot read {path}: {ex.strerror}") from None
