"""Closed-form transformations between labeling classes.

All three maps start from a set-ordered graceful matrix with 0-based labels:
X-side labels sit below Y-side labels and (XY)* lies in [0, q].

* F1 doubles X-side labels and sends y to 2y - 1, giving a set-ordered
  odd-graceful matrix.
* F2 shifts X-side labels by one, reverses the Y-side order and lifts edge
  labels by p, giving an edge-magic total matrix with constant s + 2p + 1.
* F3 shifts all vertex labels by one and reverses the edge labels above p,
  giving a 6C matrix with e-magic constant p + q + 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .classify import check_class
from .core import TopcodeMatrix, label_sets, standard_form
from .errors import NotInClass, ParityViolation


@dataclass(frozen=True)
class SetOrderedDecomposition:
    x_labels: tuple[int, ...]
    y_labels: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.x_labels)

    @property
    def t(self) -> int:
        return len(self.y_labels)

    @property
    def p(self) -> int:
        return self.s + self.t


def decompose(T: TopcodeMatrix) -> SetOrderedDecomposition:
    xs, ys = tuple(sorted(set(T.x))), tuple(sorted(set(T.y)))
    if xs[-1] >= ys[0]:
        raise NotInClass("matrix is not set-ordered")
    return SetOrderedDecomposition(xs, ys)


def _require(T: TopcodeMatrix, name: str) -> None:
    if check_class(T, name) is None:
        raise NotInClass(f"input is not {name.replace('_', '-')}")


def _reverse_map(labels: tuple[int, ...]) -> dict[int, int]:
    """j-th smallest -> (t - j + 1)-th smallest."""
    return dict(zip(labels, reversed(labels)))


def f1_to_odd_graceful(T: TopcodeMatrix) -> TopcodeMatrix:
    _require(T, "set_ordered_graceful")
    cols = [(2 * a, (2 * b - 1) - 2 * a, 2 * b - 1) for a, _, b in T.columns()]
    return TopcodeMatrix.from_columns(cols)


def f1_inverse(T1: TopcodeMatrix) -> TopcodeMatrix:
    if any(a % 2 for a in T1.x) or any(b % 2 == 0 for b in T1.y):
        raise ParityViolation("need every x even and every y odd")
    _require(T1, "set_ordered_odd_graceful")
    cols = [(a // 2, (b + 1) // 2 - a // 2, (b + 1) // 2) for a, _, b in T1.columns()]
    return TopcodeMatrix.from_columns(cols)


def f2_to_edge_magic(T: TopcodeMatrix) -> TopcodeMatrix:
    _require(T, "set_ordered_graceful")
    dec = decompose(T)
    if dec.x_labels[0] != 0:
        raise NotInClass("F2 expects 0-based labels")
    rev = _reverse_map(dec.y_labels)
    p = dec.p
    out = TopcodeMatrix.from_columns(
        (a + 1, e + p, rev[b] + 1) for a, e, b in T.columns()
    )
    if len(set(a + e + b for a, e, b in out.columns())) != 1:
        # Only happens when the Y-side labels are not symmetric (non-tree input).
        raise NotInClass("F2 image is not edge-magic; Y-side labels are not an interval")
    return out


def f2_inverse(T2: TopcodeMatrix) -> TopcodeMatrix:
    _require(T2, "edge_magic_total")
    dec = decompose(T2)
    p, q = dec.p, T2.q
    if set(T2.e) != set(range(p + 1, p + q + 1)):
        raise NotInClass("E* must be the interval [p+1, p+q]")
    rev = _reverse_map(dec.y_labels)
    out = TopcodeMatrix.from_columns(
        (a - 1, e - p, rev[b] - 1) for a, e, b in T2.columns()
    )
    _require(out, "set_ordered_graceful")
    return out


def f3_to_six_c(T: TopcodeMatrix) -> TopcodeMatrix:
    _require(T, "set_ordered_graceful")
    T = standard_form(T)
    p, q = label_sets(T).p, T.q
    return TopcodeMatrix(
        tuple(a + 1 for a in T.x),
        tuple(T.e[q - i - 1] + p for i in range(q)),
        tuple(b + 1 for b in T.y),
    )


def f3_inverse(T3: TopcodeMatrix) -> TopcodeMatrix:
    _require(T3, "six_c")
    # Restore F3's column order: ascending |x - y| (the preimage's e order).
    cols = sorted(T3.columns(), key=lambda c: (abs(c[0] - c[2]), c[0], c[2]))
    p, q = label_sets(T3).p, T3.q
    out = TopcodeMatrix(
        tuple(c[0] - 1 for c in cols),
        tuple(cols[q - i - 1][1] - p for i in range(q)),
        tuple(c[2] - 1 for c in cols),
    )
    if any(v < 0 for v in out.x + out.y) or check_class(out, "set_ordered_graceful") is None:
        raise NotInClass("six-c input has no set-ordered graceful preimage")
    return out


def generate_set_ordered_graceful_tree(n: int, seed: int | None = None) -> TopcodeMatrix:
    """Random caterpillar on n vertices with its canonical graceful labelling.

    The two colour classes are ordered x_1..x_s and y_1..y_t and the edges
    follow a monotone staircase from (x_1, y_1) to (x_s, y_t).  Labelling
    x_i -> i - 1 and y_j -> n - j makes the differences along the staircase
    run n - 1, n - 2, ..., 1.
    """
    if n < 2:
        raise ValueError("need at least two vertices")
    rng = random.Random(seed)
    s = rng.randint(1, n - 1)
    t = n - s
    steps = ["down"] * (s - 1) + ["right"] * (t - 1)
    rng.shuffle(steps)
    i = j = 1
    cells = [(1, 1)]
    for step in steps:
        if step == "down":
            i += 1
        else:
            j += 1
        cells.append((i, j))
    cols = []
    for i, j in cells:
        a, b = i - 1, n - j
        cols.append((a, b - a, b))
    return standard_form(TopcodeMatrix.from_columns(cols))
