"""Lattice files and vector expressions.

A lattice file is a JSON object::

    {"rank": 2, "gram": [[4, 9], [9, 8]], "labels": ["f4", "f8"]}

``labels`` is optional.  Vector expressions are signed integer combinations
of labels, e.g. ``5*f4 - f8`` or ``f8-2*e``.
"""
from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Sequence, Union

from .lattice import IntegralLattice, LatticeInputError, Vector


class LatticeFileError(LatticeInputError):
    pass


def _is_int(v):
    return isinstance(v, int) and not isinstance(v, bool)


def lattice_from_dict(doc) -> IntegralLattice:
    if not isinstance(doc, dict):
        raise LatticeFileError("top level: expected an object with fields rank, gram, labels")
    unknown = sorted(set(doc) - {"rank", "gram", "labels"})
    if unknown:
        raise LatticeFileError(f"{unknown[0]}: unknown field")
    if "rank" not in doc:
        raise LatticeFileError("rank: missing field")
    rank = doc["rank"]
    if not _is_int(rank) or rank < 0:
        raise LatticeFileError(f"rank: expected a nonnegative integer, got {rank!r}")
    if "gram" not in doc:
        raise LatticeFileError("gram: missing field")
    gram = doc["gram"]
    if not isinstance(gram, list) or len(gram) != rank:
        raise LatticeFileError(f"gram: expected {rank} rows")
    for i, row in enumerate(gram):
        if not isinstance(row, list) or len(row) != rank:
            raise LatticeFileError(f"gram[{i}]: expected a row of {rank} integers")
        for j, v in enumerate(row):
            if not _is_int(v):
                raise LatticeFileError(f"gram[{i}][{j}]: expected integer, got {v!r}")
    labels = doc.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != rank:
            raise LatticeFileError(f"labels: expected a list of {rank} strings")
        for i, s in enumerate(labels):
            if not isinstance(s, str) or not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", s):
                raise LatticeFileError(f"labels[{i}]: expected an identifier, got {s!r}")
    try:
        return IntegralLattice(gram, labels)
    except LatticeFileError:
        raise
    except LatticeInputError as exc:
        raise LatticeFileError(str(exc)) from None


def load_lattice(path: Union[str, Path]) -> IntegralLattice:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise LatticeFileError(f"{path}: cannot read ({exc.strerror})") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LatticeFileError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return lattice_from_dict(doc)


def lattice_to_dict(L: IntegralLattice) -> dict:
    doc = {"rank": L.rank, "gram": [list(r) for r in L.gram]}
    if L.labels is not None:
        doc["labels"] = list(L.labels)
    return doc


def dump_lattice(L: IntegralLattice) -> str:
    rows = ",\n    ".join(json.dumps(list(r)) for r in L.gram)
    out = f'{{\n  "rank": {L.rank},\n  "gram": [\n    {rows}\n  ]'
    if L.labels is not None:
        out += f',\n  "labels": {json.dumps(list(L.labels))}'
    return out + "\n}\n"


_TERM = re.compile(r"([+-])?(?:(\d+)\*)?([A-Za-z_][A-Za-z0-9_']*)")


def parse_vector(expr: str, names: Sequence[str]) -> Vector:
    """Parse ``term (("+"|"-") term)*`` with ``term = [int "*"] label``."""
    s = re.sub(r"\s+", "", expr)
    if not s:
        raise LatticeInputError("empty vector expression")
    index = {name: i for i, name in enumerate(names)}
    coords = [0] * len(names)
    pos = 0
    while pos < len(s):
        mt = _TERM.match(s, pos)
        if not mt or (pos > 0 and not mt.group(1)):
            raise LatticeInputError(f"cannot parse vector expression {expr!r} at {s[pos:]!r}")
        sign, coef, label = mt.groups()
        if label not in index:
            raise LatticeInputError(f"unknown label {label!r}; known labels: {', '.join(names)}")
        c = int(coef) if coef else 1
        coords[index[label]] += -c if sign == "-" else c
        pos = mt.end()
    return tuple(coords)


def format_vector(v: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for c, name in zip(v, names):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        term = name if mag == 1 else f"{mag}*{name}"
        parts.append((sign, term))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, term in parts[1:]:
        out += f" {sign} {term}"
    return out
