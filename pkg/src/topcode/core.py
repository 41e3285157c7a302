"""The Topcode-matrix value type and its matrix-level algebra.

A Topcode-matrix is three parallel label rows ``x``, ``e`` and ``y`` of a
common length ``q``.  Column ``i`` stands for an edge labelled ``e[i]`` whose
ends carry the labels ``x[i]`` and ``y[i]``.

Public operations take 1-based column indices, matching the way columns are
numbered in the literature; the rows themselves are plain 0-based tuples.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    ColumnDegenerate,
    EmptyInput,
    IndexOutOfRange,
    LengthMismatch,
    NegativeLabel,
    RuleNotApplicable,
)

Column = tuple[int, int, int]


@dataclass(frozen=True)
class TopcodeMatrix:
    """Immutable 3 x q label matrix.

    Dataclass equality is raw (column order matters); use :func:`equivalent`
    for equality up to column and XY exchanges.  An empty matrix (q = 0) is
    representable because set algebra can produce one, but :func:`construct`
    refuses it as input.
    """

    x: tuple[int, ...]
    e: tuple[int, ...]
    y: tuple[int, ...]

    def __post_init__(self) -> None:
        rows = [tuple(self.x), tuple(self.e), tuple(self.y)]
        if not len(rows[0]) == len(rows[1]) == len(rows[2]):
            raise LengthMismatch(
                f"row lengths differ: x={len(rows[0])}, e={len(rows[1])}, y={len(rows[2])}"
            )
        for name, row in zip("xey", rows):
            for pos, v in enumerate(row, start=1):
                if isinstance(v, bool) or not isinstance(v, int):
                    raise TypeError(f"{name}[{pos}] is not an integer: {v!r}")
                if v < 0:
                    raise NegativeLabel(f"{name}[{pos}] = {v} is negative")
        for pos, (a, b) in enumerate(zip(rows[0], rows[2]), start=1):
            if a == b:
                raise ColumnDegenerate(f"column {pos} has x = y = {a}")
        object.__setattr__(self, "x", rows[0])
        object.__setattr__(self, "e", rows[1])
        object.__setattr__(self, "y", rows[2])

    @property
    def q(self) -> int:
        return len(self.x)

    def columns(self) -> list[Column]:
        return list(zip(self.x, self.e, self.y))

    def column(self, i: int) -> Column:
        _check_index(self, i)
        return (self.x[i - 1], self.e[i - 1], self.y[i - 1])

    @classmethod
    def from_columns(cls, columns: Iterable[Sequence[int]]) -> "TopcodeMatrix":
        cols = [tuple(c) for c in columns]
        for c in cols:
            if len(c) != 3:
                raise LengthMismatch(f"column {c!r} does not have three entries")
        return cls(
            tuple(c[0] for c in cols), tuple(c[1] for c in cols), tuple(c[2] for c in cols)
        )

    @classmethod
    def empty(cls) -> "TopcodeMatrix":
        return cls((), (), ())

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class LabelSets:
    xy_star: frozenset[int]
    e_star: frozenset[int]

    @property
    def p(self) -> int:
        return len(self.xy_star)


@dataclass(frozen=True)
class EvaluationRule:
    """How an e-label is computed from its two end labels.

    ``kind`` is one of ``abs_difference``, ``sum_mod`` (needs ``modulus``)
    or ``explicit`` (no rule; labels are given, not derived).
    """

    kind: str = "abs_difference"
    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("abs_difference", "sum_mod", "explicit"):
            raise ValueError(f"unknown evaluation rule {self.kind!r}")
        if self.kind == "sum_mod" and (self.modulus is None or self.modulus < 1):
            raise ValueError("sum_mod needs a positive modulus")

    def apply(self, a: int, b: int) -> int:
        if self.kind == "abs_difference":
            return abs(a - b)
        if self.kind == "sum_mod":
            return (a + b) % self.modulus
        raise RuleNotApplicable("an explicit labelling cannot re-evaluate e-labels")


def construct(x_row: Sequence[int], e_row: Sequence[int], y_row: Sequence[int]) -> TopcodeMatrix:
    """Validate three rows and build a matrix (q >= 1)."""
    if not len(x_row) == len(e_row) == len(y_row):
        raise LengthMismatch(
            f"row lengths differ: x={len(x_row)}, e={len(e_row)}, y={len(y_row)}"
        )
    if len(x_row) == 0:
        raise EmptyInput("a Topcode-matrix needs at least one column")
    return TopcodeMatrix(tuple(x_row), tuple(e_row), tuple(y_row))


def label_sets(T: TopcodeMatrix) -> LabelSets:
    return LabelSets(frozenset(T.x) | frozenset(T.y), frozenset(T.e))


def _check_index(T: TopcodeMatrix, i: int) -> None:
    if not 1 <= i <= T.q:
        raise IndexOutOfRange(f"column index {i} outside [1, {T.q}]")


def column_exchange(T: TopcodeMatrix, i: int, j: int) -> TopcodeMatrix:
    _check_index(T, i)
    _check_index(T, j)
    cols = T.columns()
    cols[i - 1], cols[j - 1] = cols[j - 1], cols[i - 1]
    return TopcodeMatrix.from_columns(cols)


def xy_exchange(T: TopcodeMatrix, i: int) -> TopcodeMatrix:
    _check_index(T, i)
    cols = T.columns()
    a, e, b = cols[i - 1]
    cols[i - 1] = (b, e, a)
    return TopcodeMatrix.from_columns(cols)


def standard_form(T: TopcodeMatrix) -> TopcodeMatrix:
    """Orient every column with x < y, then sort by (e, x, y)."""
    cols = [(min(a, b), e, max(a, b)) for a, e, b in T.columns()]
    cols.sort(key=lambda c: (c[1], c[0], c[2]))
    return TopcodeMatrix.from_columns(cols)


def equivalent(A: TopcodeMatrix, B: TopcodeMatrix) -> bool:
    """Equality up to column exchanges and XY exchanges."""
    return standard_form(A) == standard_form(B)


def union_addition(parts: Sequence[TopcodeMatrix]) -> TopcodeMatrix:
    parts = list(parts)
    if not parts:
        raise EmptyInput("union-addition needs at least one part")
    cols: list[Column] = []
    for part in parts:
        cols.extend(part.columns())
    return TopcodeMatrix.from_columns(cols)


def _dedupe(cols: Iterable[Column]) -> list[Column]:
    seen: set[Column] = set()
    out = []
    for c in cols:
        if c not in seen:
            seen.add(c)
            out.append(c)
    return out


# Set algebra treats columns as whole (x, e, y) triples; each result lists
# its columns once, Ai's order first.

def set_intersect(Ai: TopcodeMatrix, Bj: TopcodeMatrix) -> TopcodeMatrix:
    other = set(Bj.columns())
    return TopcodeMatrix.from_columns(c for c in _dedupe(Ai.columns()) if c in other)


def set_subtract(Ai: TopcodeMatrix, Bj: TopcodeMatrix) -> TopcodeMatrix:
    other = set(Bj.columns())
    return TopcodeMatrix.from_columns(c for c in _dedupe(Ai.columns()) if c not in other)


def set_union(Ai: TopcodeMatrix, Bj: TopcodeMatrix) -> TopcodeMatrix:
    return TopcodeMatrix.from_columns(_dedupe(Ai.columns() + Bj.columns()))


def v_dual(T: TopcodeMatrix, rule: EvaluationRule = EvaluationRule()) -> TopcodeMatrix:
    """Reflect vertex labels inside [min, max] of (XY)* and re-evaluate e."""
    if rule.kind == "explicit":
        raise RuleNotApplicable("an explicit labelling cannot re-evaluate e-labels")
    xy = label_sets(T).xy_star
    c = max(xy) + min(xy)
    cols = []
    for a, _, b in T.columns():
        a2, b2 = c - a, c - b
        cols.append((a2, rule.apply(a2, b2), b2))
    return TopcodeMatrix.from_columns(cols)


def total_dual(T: TopcodeMatrix) -> TopcodeMatrix:
    """Replace every entry z by (max S + min S) - z with S = (XY)* | E*."""
    ls = label_sets(T)
    S = ls.xy_star | ls.e_star
    c = max(S) + min(S)
    return TopcodeMatrix(
        tuple(c - v for v in T.x), tuple(c - v for v in T.e), tuple(c - v for v in T.y)
    )


# ---- serialization -------------------------------------------------------

def to_dict(T: TopcodeMatrix) -> dict:
    return {"x": list(T.x), "e": list(T.e), "y": list(T.y)}


def from_dict(d: dict) -> TopcodeMatrix:
    try:
        return construct(d["x"], d["e"], d["y"])
    except KeyError as exc:
        raise LengthMismatch(f"matrix object is missing key {exc}") from None


def to_json(T: TopcodeMatrix) -> str:
    return json.dumps(to_dict(T))


def from_json(text: str) -> TopcodeMatrix:
    return from_dict(json.loads(text))


def to_text(T: TopcodeMatrix) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in (T.x, T.e, T.y)) + "\n"


def from_text(text: str) -> TopcodeMatrix:
    """Parse three whitespace-separated integer rows; '#' starts a comment."""
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append([int(tok) for tok in line.split()])
    if len(rows) != 3:
        raise LengthMismatch(f"expected 3 rows, found {len(rows)}")
    return construct(*rows)


def parse_matrix(text: str) -> TopcodeMatrix:
    """Accept either the JSON or the three-row text format."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return from_json(stripped)
    return from_text(text)
