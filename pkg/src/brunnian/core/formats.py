"""Text and JSON encodings for matrices and block forms.

Matrix text: a header line ``rows cols`` followed by the entries in
row-major order, whitespace separated.  JSON output is canonical: sorted
keys and no insignificant whitespace.
"""

from __future__ import annotations

import json
from typing import Any

from brunnian.core.blocks import MultiBlockForm, SeifertBlock2, SignDiagonal
from brunnian.core.matrix import IntMatrix
from brunnian.errors import DimensionMismatch, ParseError


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def parse_matrix_text(text: str) -> IntMatrix:
    tokens = text.split()
    if len(tokens) < 2:
        raise ParseError("matrix text needs a 'rows cols' header")
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(f"non-integer token in matrix text: {exc}") from None
    rows, cols = nums[0], nums[1]
    if rows < 0 or cols < 0:
        raise ParseError("negative matrix dimension")
    body = nums[2:]
    if len(body) != rows * cols:
        raise ParseError(f"header says {rows}x{cols} = {rows * cols} entries, found {len(body)}")
    return IntMatrix(rows, cols, tuple(tuple(body[i * cols:(i + 1) * cols]) for i in range(rows)))


def format_matrix_text(m: IntMatrix) -> str:
    lines = [f"{m.rows} {m.cols}"]
    lines.extend(" ".join(str(v) for v in r) for r in m.entries)
    return "\n".join(lines) + "\n"


def _int_rows(value: Any, what: str) -> list[list[int]]:
    if not isinstance(value, list) or not all(isinstance(r, list) for r in value):
        raise ParseError(f"{what} must be a list of rows")
    for r in value:
        for v in r:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ParseError(f"{what} entries must be integers")
    return value


def _to_matrix(rows: list[list[int]], n: int, what: str) -> IntMatrix:
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ParseError(f"{what} must be {n}x{n}")
    return IntMatrix.from_rows(rows, n)


def block2_to_json(b: SeifertBlock2) -> dict:
    return {"n": b.n, "E": list(b.E.signs), "H": b.H.tolist()}


def block2_from_json(doc: dict) -> SeifertBlock2:
    try:
        n = doc["n"]
        signs = doc["E"]
        h = _int_rows(doc["H"], "H")
    except KeyError as exc:
        raise ParseError(f"missing key {exc}") from None
    if not isinstance(n, int) or n < 1:
        raise ParseError("n must be a positive integer")
    try:
        return SeifertBlock2(n, SignDiagonal(tuple(signs)), _to_matrix(h, n - 1, "H"))
    except (ValueError, DimensionMismatch) as exc:
        raise ParseError(str(exc)) from None


def multi_to_json(f: MultiBlockForm) -> dict:
    return {
        "parts": list(f.parts),
        "E": [list(e.signs) for e in f.E_blocks],
        "H": [h.tolist() for h in f.H_blocks],
        "P": {f"{l},{m}": blk.tolist() for (l, m), blk in sorted(f.P_blocks.items())},
    }


def multi_from_json(doc: dict, lenient_e: bool = False) -> MultiBlockForm:
    try:
        parts = doc["parts"]
        hs = doc["H"]
    except KeyError as exc:
        raise ParseError(f"missing key {exc}") from None
    if not isinstance(parts, list) or not all(isinstance(p, int) for p in parts):
        raise ParseError("parts must be a list of integers")
    if "E" in doc:
        es = [SignDiagonal(tuple(e)) for e in doc["E"]]
    else:
        es = [SignDiagonal.alternating(n) for n in parts]
    if not isinstance(hs, list) or len(hs) != len(parts):
        raise ParseError("H must hold one block per part")
    H = [_to_matrix(_int_rows(h, "H"), n - 1, "H block") for h, n in zip(hs, parts)]
    P = {}
    for key, rows in dict(doc.get("P", {})).items():
        try:
            l, m = (int(x) for x in key.split(","))
        except ValueError:
            raise ParseError(f"bad P key {key!r}; expected 'l,m'") from None
        if not (1 <= l <= len(parts) and 1 <= m <= len(parts)):
            raise ParseError(f"P key {key!r} out of range")
        rows = _int_rows(rows, f"P[{key}]")
        P[(l, m)] = IntMatrix.from_rows(rows, parts[m - 1] - 1)
    return MultiBlockForm(tuple(parts), tuple(es), tuple(H), P, lenient_e)


def load_json(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("JSON document must be an object")
    return doc
