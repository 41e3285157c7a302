"""Every-zero groups over matrices, digit strings and label grids.

A family F = (F_1, ..., F_m) with m = M members is an every-zero group when
any member F_k can act as the zero of

    F_i (+)_k F_j = F_lam,   lam = i + j - k (mod M) in [1, m]
    F_i (-)_k F_j = F_lam,   lam = i - j + k (mod M) in [1, m]

and the same law holds entrywise on the members' vertex labels.  Matrix
members contribute their x and y rows; digit strings contribute their
active positions; label grids contribute every cell.

The module also carries the two protocol-level pieces built on groups:
evaluated colourings of set-ordered graceful trees and the neighbourhood
permit check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Union

from .classify import check_class
from .core import TopcodeMatrix, column_exchange, label_sets, xy_exchange
from .errors import (
    ClosureViolation,
    IndexOutOfRange,
    InstanceTooLarge,
    LayoutMismatch,
    NotInClass,
    ShapeMismatch,
    SizeMismatch,
    TopcodeError,
    UnknownVertex,
)
from .realize import RealizationGraph, is_connected
from .strings import serialize_eq18

MAX_VERIFY_M = 64

Grid = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class DigitString:
    """Decimal digit string; only ``active_positions`` (1-based) take part in
    the group law.  ``None`` means every position is active."""

    digits: tuple[int, ...]
    active_positions: frozenset[int] | None = None

    def __post_init__(self) -> None:
        digits = tuple(self.digits)
        for d in digits:
            if isinstance(d, bool) or not isinstance(d, int) or not 0 <= d <= 9:
                raise ValueError(f"not a decimal digit: {d!r}")
        object.__setattr__(self, "digits", digits)
        if self.active_positions is not None:
            active = frozenset(self.active_positions)
            bad = [pos for pos in active if not 1 <= pos <= len(digits)]
            if bad:
                raise IndexOutOfRange(f"active positions {sorted(bad)} outside [1, {len(digits)}]")
            object.__setattr__(self, "active_positions", active)

    @classmethod
    def from_text(cls, text: str, active: Iterable[int] | None = None) -> "DigitString":
        text = text.strip()
        if not text.isdigit():
            raise ValueError(f"not a digit string: {text!r}")
        return cls(tuple(int(ch) for ch in text), None if active is None else frozenset(active))

    def active(self) -> list[int]:
        if self.active_positions is None:
            return list(range(1, len(self.digits) + 1))
        return sorted(self.active_positions)

    def __str__(self) -> str:
        return "".join(map(str, self.digits))


Member = Union[TopcodeMatrix, DigitString, Grid]


def _shape(member: Member) -> tuple:
    if isinstance(member, TopcodeMatrix):
        return ("matrix", member.q)
    if isinstance(member, DigitString):
        return ("string", len(member.digits), tuple(member.active()))
    return ("grid", tuple(len(row) for row in member))


def _vector(member: Member) -> tuple[int, ...]:
    """The entries the group law acts on."""
    if isinstance(member, TopcodeMatrix):
        return member.x + member.y
    if isinstance(member, DigitString):
        return tuple(member.digits[pos - 1] for pos in member.active())
    return tuple(v for row in member for v in row)


@dataclass(frozen=True)
class EveryZeroFamily:
    members: tuple[Member, ...]
    modulus: int
    op_kind: str = "additive"
    recompute_e: bool = True

    def __post_init__(self) -> None:
        members = tuple(self.members)
        object.__setattr__(self, "members", members)
        if self.op_kind not in ("additive", "subtractive"):
            raise ValueError(f"unknown op_kind {self.op_kind!r}")
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        if len(members) != self.modulus:
            raise SizeMismatch(f"{len(members)} members but modulus {self.modulus}; need m = M")
        shapes = {_shape(mem) for mem in members}
        if len(shapes) > 1:
            raise ShapeMismatch("family members differ in shape")

    @property
    def m(self) -> int:
        return len(self.members)

    def member(self, i: int) -> Member:
        self._check(i)
        return self.members[i - 1]

    def _check(self, *indices: int) -> None:
        for i in indices:
            if not 1 <= i <= self.m:
                raise IndexOutOfRange(f"member index {i} outside [1, {self.m}]")

    def index(self, n: int) -> int:
        """Reduce an index expression mod M into [1, m] (0 maps to m)."""
        return (n - 1) % self.modulus + 1

    def to_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "op_kind": self.op_kind,
            "recompute_e": self.recompute_e,
            "members": [_member_to_json(mem) for mem in self.members],
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "EveryZeroFamily":
        try:
            members = tuple(_member_from_json(mem) for mem in d["members"])
            modulus = int(d.get("modulus", len(members)))
        except KeyError as exc:
            raise ShapeMismatch(f"family object is missing key {exc}") from None
        return cls(members, modulus, d.get("op_kind", "additive"), bool(d.get("recompute_e", True)))


def _member_to_json(mem: Member):
    if isinstance(mem, TopcodeMatrix):
        return {"x": list(mem.x), "e": list(mem.e), "y": list(mem.y)}
    if isinstance(mem, DigitString):
        out: dict = {"digits": str(mem)}
        if mem.active_positions is not None:
            out["active"] = sorted(mem.active_positions)
        return out
    return [list(row) for row in mem]


def _member_from_json(obj) -> Member:
    if isinstance(obj, str):
        return DigitString.from_text(obj)
    if isinstance(obj, list):
        return tuple(tuple(int(v) for v in row) for row in obj)
    if "digits" in obj:
        return DigitString.from_text(obj["digits"], obj.get("active"))
    return TopcodeMatrix(tuple(obj["x"]), tuple(obj["e"]), tuple(obj["y"]))


# ---- generation -----------------------------------------------------------

def shift_generate(base: TopcodeMatrix, M: int, recompute_e: bool = True) -> EveryZeroFamily:
    """Member i has v-rows (base + i - 1) mod M; e is |x - y| or shifted too."""
    if M < 2:
        raise ValueError("modulus must be at least 2")
    members = []
    for off in range(M):
        xs = tuple((a + off) % M for a in base.x)
        ys = tuple((b + off) % M for b in base.y)
        if recompute_e:
            es = tuple(abs(a - b) for a, b in zip(xs, ys))
        else:
            es = tuple((e + off) % M for e in base.e)
        members.append(TopcodeMatrix(xs, es, ys))
    return EveryZeroFamily(tuple(members), M, "additive", recompute_e)


def string_group_construct(
    S1: DigitString, active: Iterable[int], M: int, op_kind: str = "additive"
) -> EveryZeroFamily:
    """Member i adds i - 1 (mod M) at the active positions of S1."""
    active = frozenset(active)
    if not active:
        raise ValueError("need at least one active position")
    if M > 10:
        raise ValueError("digit-string groups need M <= 10")
    base = DigitString(S1.digits, active)
    for pos in base.active():
        if base.digits[pos - 1] >= M:
            raise ValueError(f"active digit at position {pos} is not below M = {M}")
    members = []
    for off in range(M):
        digits = list(base.digits)
        for pos in active:
            digits[pos - 1] = (digits[pos - 1] + off) % M
        members.append(DigitString(tuple(digits), active))
    return EveryZeroFamily(tuple(members), M, op_kind)


def string_family_from_matrices(F: EveryZeroFamily) -> EveryZeroFamily:
    """Serialize every matrix member; the x and y blocks are the active digits."""
    if not all(isinstance(mem, TopcodeMatrix) for mem in F.members):
        raise ShapeMismatch("family members are not matrices")
    members = []
    for T in F.members:
        text = serialize_eq18(T)
        if len(text) != 3 * T.q:
            raise LayoutMismatch("multi-digit labels cannot form a digit-string family")
        active = frozenset(range(1, T.q + 1)) | frozenset(range(2 * T.q + 1, 3 * T.q + 1))
        members.append(DigitString.from_text(text, active))
    return EveryZeroFamily(tuple(members), F.modulus, F.op_kind)


def _parse_eq18(S: DigitString, q: int) -> TopcodeMatrix:
    d = S.digits
    try:
        return TopcodeMatrix(d[:q], tuple(reversed(d[q : 2 * q])), d[2 * q :])
    except TopcodeError as exc:
        raise LayoutMismatch(f"{S} is not a serialized matrix: {exc}") from None


def string_exchange(F: EveryZeroFamily, ops: Sequence[tuple]) -> EveryZeroFamily:
    """Apply column exchanges ("c", i, j) and XY exchanges ("l", i) to every
    serialized member and re-serialize."""
    if not all(isinstance(mem, DigitString) for mem in F.members):
        raise LayoutMismatch("string_exchange needs digit-string members")
    n = len(F.members[0].digits)
    if n % 3:
        raise LayoutMismatch(f"length {n} is not a multiple of 3")
    q = n // 3
    out = []
    for S in F.members:
        T = _parse_eq18(S, q)
        for op in ops:
            if op[0] == "c":
                T = column_exchange(T, op[1], op[2])
            elif op[0] == "l":
                T = xy_exchange(T, op[1])
            else:
                raise ValueError(f"unknown exchange {op[0]!r}")
        out.append(DigitString.from_text(serialize_eq18(T), S.active_positions))
    return EveryZeroFamily(tuple(out), F.modulus, F.op_kind)


def shifted_grid_family(grid: Sequence[Sequence[int]], M: int) -> EveryZeroFamily:
    """Member k is (grid + k - 1) mod M cellwise, e.g. over an adjacency
    ve-value matrix."""
    if M < 2:
        raise ValueError("modulus must be at least 2")
    members = tuple(
        tuple(tuple((v + off) % M for v in row) for row in grid) for off in range(M)
    )
    return EveryZeroFamily(members, M)


# ---- the operations -------------------------------------------------------

def _combine(F: EveryZeroFamily, i: int, j: int, k: int, op_kind: str) -> tuple[int, ...]:
    a, b, z = _vector(F.members[i - 1]), _vector(F.members[j - 1]), _vector(F.members[k - 1])
    M = F.modulus
    if op_kind == "additive":
        return tuple((u + v - w) % M for u, v, w in zip(a, b, z))
    return tuple((u - v + w) % M for u, v, w in zip(a, b, z))


def _lam(F: EveryZeroFamily, i: int, j: int, k: int, op_kind: str) -> int:
    return F.index(i + j - k if op_kind == "additive" else i - j + k)


def _apply(F: EveryZeroFamily, i: int, j: int, k: int, op_kind: str) -> int:
    F._check(i, j, k)
    lam = _lam(F, i, j, k, op_kind)
    if _combine(F, i, j, k, op_kind) != _vector(F.members[lam - 1]):
        sign = "+" if op_kind == "additive" else "-"
        raise ClosureViolation(f"F_{i} ({sign})_{k} F_{j} does not equal member {lam} entrywise")
    return lam


def v_add(F: EveryZeroFamily, i: int, j: int, k: int) -> int:
    return _apply(F, i, j, k, "additive")


def v_sub(F: EveryZeroFamily, i: int, j: int, k: int) -> int:
    return _apply(F, i, j, k, "subtractive")


@dataclass(frozen=True)
class GroupReport:
    every_zero: bool
    closure: bool
    inverses: bool
    associativity: bool

    @property
    def ok(self) -> bool:
        return self.every_zero and self.closure and self.inverses and self.associativity

    def to_dict(self) -> dict:
        return {
            "every_zero": self.every_zero,
            "closure": self.closure,
            "inverses": self.inverses,
            "associativity": self.associativity,
        }


def verify_group(F: EveryZeroFamily, k: int, op_kind: str | None = None) -> GroupReport:
    """Check the group laws exhaustively with F_k as the zero.

    Results are looked up by value, so a corrupted member shows up as a
    failed law rather than an exception.  For the subtractive operation
    associativity is the restricted form (i - j) - k = i - (j - k).
    """
    op = op_kind or F.op_kind
    m = F.m
    if m > MAX_VERIFY_M:
        raise InstanceTooLarge(f"m = {m} exceeds {MAX_VERIFY_M}")
    F._check(k)
    vecs = [_vector(mem) for mem in F.members]
    lookup: dict[tuple[int, ...], int] = {}
    for idx, vec in enumerate(vecs, start=1):
        lookup.setdefault(vec, idx)
    rng = range(1, m + 1)
    table = {
        (i, j): lookup.get(_combine(F, i, j, k, op)) for i in rng for j in rng
    }

    closure = all(
        vecs[_lam(F, i, j, k, op) - 1] == _combine(F, i, j, k, op) for i in rng for j in rng
    )
    every_zero = all(table[i, k] is not None and vecs[table[i, k] - 1] == vecs[i - 1] for i in rng)
    inverses = all(any(table[i, j] == lookup[vecs[k - 1]] for j in rng) for i in rng)

    def op2(a: int | None, b: int | None) -> int | None:
        return None if a is None or b is None else table[a, b]

    if op == "additive":
        triples = ((i, j, s) for i in rng for j in rng for s in rng)
    else:
        triples = ((i, j, k) for i in rng for j in rng)
    associativity = True
    for i, j, s in triples:
        left, right = op2(op2(i, j), s), op2(i, op2(j, s))
        if left is None or left != right:
            associativity = False
            break
    return GroupReport(every_zero, closure, inverses, associativity)


# ---- evaluated colourings ---------------------------------------------------

@dataclass(frozen=True)
class EvaluatedColoring:
    vertex_index: dict[int, int]  # vertex label -> member index
    edge_index: dict[int, int]  # 1-based column -> member index

    def to_dict(self) -> dict:
        return {
            "vertices": {str(v): i for v, i in sorted(self.vertex_index.items())},
            "edges": {str(c): i for c, i in sorted(self.edge_index.items())},
        }


def evaluated_coloring(tree: TopcodeMatrix, F: EveryZeroFamily, k: int) -> EvaluatedColoring:
    """Assign group members to the vertices and edges of a set-ordered
    graceful tree so vertices hit [1, p] and edges hit [1, p - 1] once each.

    X-side labels a map to 1 + a; Y-side labels take 1 + the label of the
    opposite rank.  An edge gets (g(x) + g(y) - k) mod (p - 1) in [1, p - 1].
    """
    if check_class(tree, "set_ordered_graceful") is None:
        raise NotInClass("tree is not set-ordered graceful")
    p = label_sets(tree).p
    if p != tree.q + 1 or not is_connected(tree):
        raise NotInClass("matrix is not a tree")
    if F.m != p:
        raise SizeMismatch(f"family has {F.m} members, tree has {p} vertices")
    F._check(k)
    xs, ys = sorted(set(tree.x)), sorted(set(tree.y))
    g = {a: 1 + a for a in xs}
    g.update({b: 1 + r for b, r in zip(ys, reversed(ys))})
    edges = {}
    for col, (a, _, b) in enumerate(tree.columns(), start=1):
        edges[col] = (g[a] + g[b] - k - 1) % (p - 1) + 1
    return EvaluatedColoring(g, edges)


# ---- security mechanism ---------------------------------------------------

def permit_protocol(
    network: RealizationGraph,
    assignment: Mapping[int, int],
    visitor_claims: Iterable[int],
    target: int,
) -> bool:
    """Admit a visitor to ``target`` iff it holds the permit of every neighbour."""
    ids = {v for v, _ in network.vertices}
    if target not in ids:
        raise UnknownVertex(f"vertex {target} is not in the network")
    required = set()
    for w in network.neighbors(target):
        if w not in assignment:
            raise UnknownVertex(f"vertex {w} has no permit assigned")
        required.add(assignment[w])
    return required <= set(visitor_claims)


def authenticate(public: TopcodeMatrix, private: TopcodeMatrix) -> bool:
    """A public/private key pair authenticates when their union is connected."""
    return is_connected(TopcodeMatrix.from_columns(public.columns() + private.columns()))


def common_boundary(public: TopcodeMatrix, private: TopcodeMatrix) -> frozenset[int]:
    """Vertex labels shared by the two keys."""
    return label_sets(public).xy_star & label_sets(private).xy_star


@dataclass(frozen=True)
class KeyPair:
    public: TopcodeMatrix
    private: TopcodeMatrix
    boundary: frozenset[int] = field(default_factory=frozenset)


def split_keys(T: TopcodeMatrix, public_columns: Iterable[int]) -> KeyPair:
    """Cut an authentication matrix into public and private column sets."""
    chosen = set(public_columns)
    for c in chosen:
        if not 1 <= c <= T.q:
            raise IndexOutOfRange(f"column index {c} outside [1, {T.q}]")
    cols = T.columns()
    pub = TopcodeMatrix.from_columns(c for i, c in enumerate(cols, start=1) if i in chosen)
    pri = TopcodeMatrix.from_columns(c for i, c in enumerate(cols, start=1) if i not in chosen)
    return KeyPair(pub, pri, common_boundary(pub, pri))
