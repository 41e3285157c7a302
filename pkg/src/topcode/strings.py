"""Text passwords read off matrices along fold lines.

A fold line is an ordered list of 1-based (row, col) lattice points; walking
it over a matrix and concatenating the decimal labels gives the TB-paw.
Without a separator the result cannot always be split back into labels, so
the matrix layout also has a separator mode that round-trips.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

from .core import TopcodeMatrix, construct
from .errors import InstanceTooLarge, LayoutMismatch, OutOfBounds, RepeatedPoint
from .realize import RealizationGraph, adjacency_ve_matrix

MAX_LATTICE_CELLS = 16

Point = tuple[int, int]


@dataclass(frozen=True)
class FoldLine:
    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        pts = tuple((int(r), int(c)) for r, c in self.points)
        seen = set()
        for pt in pts:
            if pt in seen:
                raise RepeatedPoint(f"point {pt} appears twice")
            seen.add(pt)
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    def to_text(self) -> str:
        return "".join(f"{r} {c}\n" for r, c in self.points)

    @classmethod
    def from_text(cls, text: str) -> "FoldLine":
        pts = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.replace(",", " ").split()
            if len(parts) != 2:
                raise ValueError(f"expected 'row col', got {line!r}")
            pts.append((int(parts[0]), int(parts[1])))
        return cls(tuple(pts))


def read_fold_line(path: str | Path) -> FoldLine:
    return FoldLine.from_text(Path(path).read_text())


def write_fold_line(line: FoldLine, path: str | Path) -> None:
    Path(path).write_text(line.to_text())


# ---- matrix layout ----------------------------------------------------------

def serialize_eq18(T: TopcodeMatrix, sep: str | None = None) -> str:
    """x-row left to right, e-row right to left, y-row left to right."""
    labels = list(T.x) + list(reversed(T.e)) + list(T.y)
    return (sep or "").join(str(v) for v in labels)


def parse_eq18(text: str, sep: str | None = None) -> TopcodeMatrix:
    """Inverse of :func:`serialize_eq18`.  Without a separator every label
    must be a single digit."""
    if sep:
        tokens = [int(tok) for tok in text.strip().split(sep)]
    else:
        text = text.strip()
        if not text.isdigit():
            raise LayoutMismatch(f"not a digit string: {text!r}")
        tokens = [int(ch) for ch in text]
    if len(tokens) % 3:
        raise LayoutMismatch(f"{len(tokens)} labels do not split into three rows")
    q = len(tokens) // 3
    return construct(tokens[:q], tokens[q : 2 * q][::-1], tokens[2 * q :])


# ---- traversals -------------------------------------------------------------

def _shape(M: Sequence[Sequence[int]]) -> tuple[int, int]:
    if not M or not M[0]:
        raise ValueError("matrix must be non-empty")
    n = len(M[0])
    if any(len(row) != n for row in M):
        raise ValueError("matrix rows differ in length")
    return len(M), n


def boustrophedon_line(m: int, n: int) -> FoldLine:
    pts = []
    for r in range(1, m + 1):
        cols = range(1, n + 1) if r % 2 else range(n, 0, -1)
        pts.extend((r, c) for c in cols)
    return FoldLine(tuple(pts))


def traverse(M: Sequence[Sequence[int]], L: FoldLine, sep: str | None = None) -> str:
    m, n = _shape(M)
    out = []
    for r, c in L.points:
        if not (1 <= r <= m and 1 <= c <= n):
            raise OutOfBounds(f"point ({r}, {c}) outside {m}x{n}")
        out.append(str(M[r - 1][c - 1]))
    return (sep or "").join(out)


def boustrophedon(M: Sequence[Sequence[int]] | TopcodeMatrix, sep: str | None = None) -> str:
    """Odd rows left to right, even rows right to left."""
    if isinstance(M, TopcodeMatrix):
        M = [M.x, M.e, M.y]
    m, n = _shape(M)
    return traverse(M, boustrophedon_line(m, n), sep)


@dataclass(frozen=True)
class LineKind:
    adjacent: bool
    closed_adjacent: bool
    total: bool

    def to_dict(self) -> dict:
        return {"adjacent": self.adjacent, "closed_adjacent": self.closed_adjacent, "total": self.total}


def _step(a: Point, b: Point) -> bool:
    return abs(a[0] - b[0]) + abs(a[1] - b[1]) == 1


def line_kind(L: FoldLine, m: int, n: int) -> LineKind:
    pts = L.points
    adjacent = all(_step(a, b) for a, b in zip(pts, pts[1:]))
    closed = adjacent and len(pts) > 2 and _step(pts[-1], pts[0])
    cells = {(r, c) for r in range(1, m + 1) for c in range(1, n + 1)}
    total = len(pts) == m * n and set(pts) == cells
    return LineKind(adjacent, closed, total)


def _hamiltonian_paths(m: int, n: int) -> Iterator[FoldLine]:
    cells = [(r, c) for r in range(1, m + 1) for c in range(1, n + 1)]
    total = len(cells)

    def nbrs(pt: Point) -> Iterator[Point]:
        r, c = pt
        for dr, dc in ((-1, 0), (0, -1), (0, 1), (1, 0)):
            rr, cc = r + dr, c + dc
            if 1 <= rr <= m and 1 <= cc <= n:
                yield (rr, cc)

    path: list[Point] = []
    seen: set[Point] = set()

    def dfs(pt: Point) -> Iterator[FoldLine]:
        path.append(pt)
        seen.add(pt)
        if len(path) == total:
            yield FoldLine(tuple(path))
        else:
            for nxt in nbrs(pt):
                if nxt not in seen:
                    yield from dfs(nxt)
        path.pop()
        seen.discard(pt)

    for start in cells:
        yield from dfs(start)


def iter_total_lines(m: int, n: int, adjacent_only: bool = True) -> Iterator[FoldLine]:
    if m < 1 or n < 1:
        raise ValueError("lattice must be non-empty")
    if m * n > MAX_LATTICE_CELLS:
        raise InstanceTooLarge(f"{m}x{n} lattice exceeds {MAX_LATTICE_CELLS} cells")
    if adjacent_only:
        return _hamiltonian_paths(m, n)
    cells = [(r, c) for r in range(1, m + 1) for c in range(1, n + 1)]
    return (FoldLine(perm) for perm in itertools.permutations(cells))


def enumerate_total_lines(
    m: int, n: int, adjacent_only: bool = True, limit: int | None = None
) -> list[FoldLine]:
    """All total lines of the m x n lattice in a fixed order, up to ``limit``."""
    return list(itertools.islice(iter_total_lines(m, n, adjacent_only), limit))


def random_total_line(m: int, n: int, seed: int | None = None, adjacent_only: bool = True) -> FoldLine:
    rng = random.Random(seed)
    if adjacent_only:
        return rng.choice(enumerate_total_lines(m, n, True))
    if m * n > MAX_LATTICE_CELLS:
        raise InstanceTooLarge(f"{m}x{n} lattice exceeds {MAX_LATTICE_CELLS} cells")
    cells = [(r, c) for r in range(1, m + 1) for c in range(1, n + 1)]
    rng.shuffle(cells)
    return FoldLine(tuple(cells))


def vev_tbpaw(G: RealizationGraph, L: FoldLine | None = None, sep: str | None = None) -> str:
    """TB-paw of the adjacency ve-value matrix of ``G`` (boustrophedon by default)."""
    A = adjacency_ve_matrix(G)
    if L is None:
        L = boustrophedon_line(len(A), len(A))
    return traverse(A, L, sep)
