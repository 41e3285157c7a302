"""GB2312-80 Hanzi-matrices and the mod-10 linear cipher over them.

A Hanzi is addressed by a four-digit area/position code ``abcd``: area
(row) ``ab`` and position (col) ``cd``, both in [1, 94].  Hanzi proper live
in areas 16 to 87.  A sentence of m Hanzi stacks into a 4 x m digit matrix
whose columns are the codes.

The cipher is Y = A X (mod 10) with a 4 x 4 digit key A.  Decryption needs
A invertible modulo 10, i.e. gcd(det A, 10) = 1; a non-zero determinant is
not enough because 10 is composite.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidCode, NotInvertibleMod10, ShapeMismatch

HANZI_ROWS = (16, 87)


@dataclass(frozen=True)
class HanziCode:
    digits: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        d = tuple(self.digits)
        if len(d) != 4 or any(not isinstance(v, int) or not 0 <= v <= 9 for v in d):
            raise InvalidCode(f"a code needs four decimal digits, got {self.digits!r}")
        object.__setattr__(self, "digits", d)

    @classmethod
    def parse(cls, text: str) -> "HanziCode":
        text = str(text).strip()
        if len(text) != 4 or not text.isdigit():
            raise InvalidCode(f"{text!r} is not a four-digit code")
        return cls(tuple(int(ch) for ch in text))

    @property
    def row(self) -> int:
        return 10 * self.digits[0] + self.digits[1]

    @property
    def col(self) -> int:
        return 10 * self.digits[2] + self.digits[3]

    @property
    def structurally_valid(self) -> bool:
        return 1 <= self.row <= 94 and 1 <= self.col <= 94

    @property
    def is_hanzi(self) -> bool:
        return self.structurally_valid and HANZI_ROWS[0] <= self.row <= HANZI_ROWS[1]

    def __str__(self) -> str:
        return "".join(map(str, self.digits))


def parse_codes(text: str) -> list[HanziCode]:
    return [HanziCode.parse(tok) for tok in text.split()]


def _as_code(c) -> HanziCode:
    if isinstance(c, HanziCode):
        return c
    if isinstance(c, str):
        return HanziCode.parse(c)
    return HanziCode(tuple(c))


def build_hanzi_matrix(codes: Iterable[HanziCode | str]) -> np.ndarray:
    """Stack codes as the columns of a 4 x m digit matrix."""
    codes = [_as_code(c) for c in codes]
    if not codes:
        raise InvalidCode("need at least one code")
    for c in codes:
        if not c.structurally_valid:
            raise InvalidCode(f"{c}: row {c.row} / col {c.col} outside [1, 94]")
    return np.array([c.digits for c in codes], dtype=np.int64).T


def matrix_codes(H: np.ndarray) -> list[HanziCode]:
    H = np.asarray(H)
    if H.ndim != 2 or H.shape[0] != 4:
        raise ShapeMismatch(f"expected a 4 x m matrix, got shape {H.shape}")
    return [HanziCode(tuple(int(v) for v in H[:, j])) for j in range(H.shape[1])]


def _digits(M, name: str) -> np.ndarray:
    arr = np.asarray(M, dtype=np.int64)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2:
        raise ShapeMismatch(f"{name} must be a matrix")
    if ((arr < 0) | (arr > 9)).any():
        raise ValueError(f"{name} has entries outside [0, 9]")
    return arr


def hanzi_encrypt(A, X) -> np.ndarray:
    """Y = A X (mod 10)."""
    A, X = _digits(A, "A"), _digits(X, "X")
    if A.shape != (4, 4) or X.shape[0] != 4:
        raise ShapeMismatch(f"need A 4x4 and X 4xm, got {A.shape} and {X.shape}")
    return (A @ X) % 10


def _det(M: list[list[int]]) -> int:
    """Exact integer determinant (Bareiss fraction-free elimination)."""
    n = len(M)
    a = [row[:] for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def determinant(A) -> int:
    A = np.asarray(A, dtype=np.int64)
    return _det(A.tolist())


def inverse_mod10(A) -> np.ndarray:
    """Adjugate times det^-1 modulo 10."""
    A = _digits(A, "A")
    n = A.shape[0]
    if A.shape != (n, n):
        raise ShapeMismatch(f"A must be square, got {A.shape}")
    rows = A.tolist()
    det = _det(rows)
    if gcd(det % 10, 10) != 1:
        raise NotInvertibleMod10(f"det A = {det} shares a factor with 10")
    det_inv = pow(det % 10, -1, 10)
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [r[:j] + r[j + 1 :] for k, r in enumerate(rows) if k != i]
            cof = (-1) ** (i + j) * (_det(minor) if minor else 1)
            adj[j][i] = cof
    return (np.array(adj, dtype=np.int64) * det_inv) % 10


def hanzi_decrypt(A, Y) -> np.ndarray:
    """Solve A X = Y (mod 10) for X."""
    Y = _digits(Y, "Y")
    if Y.shape[0] != 4:
        raise ShapeMismatch(f"Y must have 4 rows, got {Y.shape}")
    return (inverse_mod10(A) @ Y) % 10


def _vec4(v) -> tuple[int, ...]:
    v = _as_code(v).digits if isinstance(v, (str, HanziCode)) else tuple(int(d) for d in v)
    if len(v) != 4:
        raise ShapeMismatch(f"need a 4-digit vector, got {v!r}")
    return v


def componentwise_mul(Xk, Yj) -> HanziCode:
    return HanziCode(tuple(a * b % 10 for a, b in zip(_vec4(Xk), _vec4(Yj))))


def componentwise_add(Xk, Yj) -> HanziCode:
    return HanziCode(tuple((a + b) % 10 for a, b in zip(_vec4(Xk), _vec4(Yj))))


@dataclass(frozen=True)
class TableEntry:
    code: HanziCode
    valid: bool

    def to_dict(self) -> dict:
        return {"code": str(self.code), "valid": self.valid}


def cross_table(rows: Sequence, cols: Sequence, op: str = "mul") -> list[list[TableEntry]]:
    """Entry (k, j) = rows[k] op cols[j]; invalid codes are flagged, not dropped.

    ``rows`` is an m x 4 sequence of codes and ``cols`` a 4 x n Hanzi-matrix
    (or a flat list of codes).
    """
    fn = {"mul": componentwise_mul, "add": componentwise_add}.get(op)
    if fn is None:
        raise ValueError(f"unknown op {op!r}")
    if isinstance(cols, np.ndarray):
        cols = matrix_codes(cols)
    rows_v = [_vec4(r) for r in rows]
    cols_v = [_vec4(c) for c in cols]
    table = []
    for r in rows_v:
        line = []
        for c in cols_v:
            code = fn(r, c)
            line.append(TableEntry(code, code.is_hanzi))
        table.append(line)
    return table
