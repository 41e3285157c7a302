"""Labeling conditions, named matrix classes and pairwise matchings.

Conditions come in two numbered families: ``cond-1`` .. ``cond-15`` (the
traditional restrictions) and ``comp-1`` .. ``comp-21`` (the more restrictive
ones, some parameterised by ``(k, d)``).  Named classes are fixed
conjunctions of conditions.  Whenever a condition asserts that *some*
constant exists, the constant is solved for and reported.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .core import TopcodeMatrix, equivalent, label_sets, union_addition
from .errors import MissingParams, ShapeMismatch
from .realize import is_connected, perfect_matching


@dataclass(frozen=True)
class ConditionId:
    family: str  # "cond" or "comp"
    index: int
    k: int | None = None
    d: int | None = None
    M: int | None = None  # comp-4 only; solved when omitted

    def __post_init__(self) -> None:
        top = {"cond": 15, "comp": 21}.get(self.family)
        if top is None or not 1 <= self.index <= top:
            raise ValueError(f"no condition {self.family}-{self.index}")

    @property
    def name(self) -> str:
        base = f"{self.family}-{self.index}"
        if self.k is not None and self.d is not None:
            base += f"({self.k},{self.d})"
        return base

    @classmethod
    def parse(cls, text: str) -> "ConditionId":
        m = re.fullmatch(r"\s*(cond|comp)-(\d+)\s*(?:\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))?\s*", text.lower())
        if not m:
            raise ValueError(f"cannot parse condition name {text!r}")
        k = int(m.group(3)) if m.group(3) else None
        d = int(m.group(4)) if m.group(4) else None
        return cls(m.group(1), int(m.group(2)), k, d)


@dataclass(frozen=True)
class ConditionResult:
    holds: bool
    constants: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds


_NO = ConditionResult(False)
_YES = ConditionResult(True)


def _res(flag: bool, **constants) -> ConditionResult:
    return ConditionResult(bool(flag), constants if flag else {})


def _interval(a: int, b: int) -> set[int]:
    return set(range(a, b + 1))


def _odd_interval(a: int, b: int) -> set[int]:
    return {v for v in range(a, b + 1) if v % 2}


def _arith(k: int, d: int, n: int) -> set[int]:
    """S_{k,d} = {k, k+d, ..., k+(n-1)d}."""
    return {k + i * d for i in range(n)}


class _View:
    """Derived quantities shared by all predicates."""

    def __init__(self, T: TopcodeMatrix) -> None:
        ls = label_sets(T)
        self.T = T
        self.cols = T.columns()
        self.xy = set(ls.xy_star)
        self.E = set(ls.e_star)
        self.p = ls.p
        self.q = T.q
        self.diff = [abs(a - b) for a, _, b in self.cols]
        self.sums = [a + e + b for a, e, b in self.cols]


def _constant(values: Iterable[int]) -> int | None:
    vals = set(values)
    return vals.pop() if len(vals) == 1 else None


# ---- traditional conditions ----------------------------------------------

def _cond(v: _View, i: int) -> ConditionResult:
    p, q, xy, E = v.p, v.q, v.xy, v.E
    if i == 1:
        return _res(xy == _interval(0, p - 1) and p <= q + 1)
    if i == 2:
        return _res(p <= q + 1)
    if i == 3:
        return _res(xy <= _interval(0, q))
    if i == 4:
        return _res(xy <= _interval(0, 2 * q - 1))
    if i == 5:
        return _res(xy <= _interval(0, 2 * q))
    if i == 6:
        return _res(xy | E == _interval(1, p + q))
    if i == 7:
        return _res(E == _odd_interval(1, 2 * q - 1))
    if i == 8:
        return _res(xy == _interval(1, p) and E == _interval(p + 1, p + q))
    if i == 9:
        return _res(max(v.T.x) < min(v.T.y))
    if i == 10:
        return _res(list(v.T.e) == v.diff and E == _interval(1, q))
    if i == 11:
        return _res(list(v.T.e) == v.diff and E == _odd_interval(1, 2 * q - 1))
    if i == 12:
        ok = all(e == (a + b) % (2 * q) for a, e, b in v.cols)
        return _res(ok and E == _odd_interval(1, 2 * q - 1))
    if i == 13:
        ok = all(e == (a + b) % q for a, e, b in v.cols)
        return _res(ok and E == _interval(0, q - 1))
    if i == 14:
        k = _constant(v.sums)
        return _res(k is not None, k=k)
    if i == 15:
        k = _constant(e + dd for e, dd in zip(v.T.e, v.diff))
        return _res(k is not None, k=k)
    raise AssertionError(i)


# ---- restrictive conditions ------------------------------------------------

def _comp2(v: _View) -> ConditionResult:
    """Some k such that the columns with x + y = k cover (XY)*."""
    for k in sorted({a + b for a, _, b in v.cols}):
        chosen = [c for c in v.cols if c[0] + c[2] == k]
        if {w for a, _, b in chosen for w in (a, b)} == v.xy:
            return _res(True, k=k, cover=sorted({c[1] for c in chosen}))
    return _NO


def _comp4(v: _View, M: int | None) -> ConditionResult:
    D = set(v.diff)

    def ok(m: int | None) -> bool:
        return all(e in D or (m is not None and 2 * m - e in D) for e in v.T.e)

    if M is not None:
        return _res(ok(M), M=M)
    outside = [e for e in v.T.e if e not in D]
    if not outside:
        return _res(True, M=None)
    # 2M - d_j = e for the first column that needs the second form.
    candidates = sorted({(outside[0] + dd) // 2 for dd in D if (outside[0] + dd) % 2 == 0})
    for m in candidates:
        if ok(m):
            return _res(True, M=m)
    return _NO


def _comp5(v: _View) -> ConditionResult:
    """ee-difference: every column i has a partner j (j = i allowed)."""
    q2 = 2 * v.q
    partner = {}
    for i, e in enumerate(v.T.e):
        for j, ej in enumerate(v.T.e):
            if e + ej == q2 and e in (q2 + v.diff[j], q2 - v.diff[j]):
                partner[i + 1] = j + 1
                break
        else:
            return _NO
    return _res(True, pairing=partner)


def _comp12(v: _View) -> ConditionResult:
    xy, E = v.xy, v.E
    forms = {
        "xy_above_e": min(xy) > max(E),
        "xy_below_e": max(xy) < min(E),
        "xy_in_e": xy <= E,
        "e_in_xy": E <= xy,
        "odd_xy_even_e": all(w % 2 for w in xy) and all(e % 2 == 0 for e in E),
    }
    held = [name for name, flag in forms.items() if flag]
    return _res(bool(held), forms=held)


def _comp13(v: _View) -> ConditionResult:
    """ee-balanced.  The pair constant is forced to min(s) + max(s).

    The two offset variants only shift the constant, so they hold exactly
    when the plain form does.
    """
    s = [dd - e for dd, e in zip(v.diff, v.T.e)]
    c = min(s) + max(s)
    values = set(s)
    if all(c - si in values for si in s):
        return _res(True, k_prime=c)
    return _NO


def _comp14(v: _View) -> ConditionResult:
    singular = (v.p + v.q + 1) // 2
    first_e = min(v.E)
    for k in sorted(first_e + w for w in v.xy):
        if all(k - e in v.xy for e in v.E) and all(
            k - z in v.E for z in v.xy if z != singular
        ):
            return _res(True, k_double_prime=k, singularity=singular)
    return _NO


def _need_kd(c: ConditionId) -> tuple[int, int]:
    if c.k is None or c.d is None:
        raise MissingParams(f"{c.family}-{c.index} needs parameters (k, d)")
    return c.k, c.d


def _comp(v: _View, c: ConditionId) -> ConditionResult:
    i, p, q, xy, E = c.index, v.p, v.q, v.xy, v.E
    if i == 1:
        cover = perfect_matching(v.T, "relaxed")
        return _res(cover is not None, cover=sorted(set(cover.e)) if cover else None)
    if i == 2:
        return _comp2(v)
    if i == 3:
        return _res(list(v.T.e) == v.diff)
    if i == 4:
        return _comp4(v, c.M)
    if i == 5:
        return _comp5(v)
    if i == 6:
        return _res(all(e == (a + b) % q for a, e, b in v.cols))
    if i == 7:
        k = _constant(abs(a + b - e) for a, e, b in v.cols)
        return _res(k is not None, k=k)
    if i == 8:
        return _res(len(E) == q and xy | E == _interval(1, p + q))
    if i == 9:
        k, d = _need_kd(c)
        return _res(len(E) == q and xy | E <= _interval(0, k + (q - 1) * d), k=k, d=d)
    if i == 10:
        k = _constant(e + dd for e, dd in zip(v.T.e, v.diff))
        return _res(k is not None, k=k)
    if i == 11:
        k = _constant(v.sums)
        return _res(k is not None, k=k)
    if i == 12:
        return _comp12(v)
    if i == 13:
        return _comp13(v)
    if i == 14:
        return _comp14(v)
    if i == 15:
        k, d = _need_kd(c)
        mod = q * d
        if mod <= 0:
            return _NO
        return _res(all((e + k - (a + b - k)) % mod == 0 for a, e, b in v.cols), k=k, d=d)
    if i == 16:
        k, d = _need_kd(c)
        return _res(E == _arith(k, d, q), k=k, d=d)
    if i == 17:
        k, d = _need_kd(c)
        allowed = {2 * k + 2 * d * t for t in range(1, q + 1)}
        return _res(all(s in allowed for s in v.sums), k=k, d=d)
    if i == 18:
        k, d = _need_kd(c)
        S = _arith(k, d, q)
        return _res(all(e == a + b and e in S for a, e, b in v.cols), k=k, d=d)
    if i == 19:
        return _res(xy <= _interval(0, q - 1) and E == _odd_interval(1, 2 * q - 1))
    if i == 20:
        return _res(all(e % 2 for e in v.T.e) and xy | E <= _interval(1, 4 * q - 1))
    if i == 21:
        sums = set(v.sums)
        a, b = min(sums), max(sums)
        return _res(sums == _interval(a, b) and q == b - a + 1, a=a, b=b)
    raise AssertionError(i)


def eval_condition(T: TopcodeMatrix, c: ConditionId | str) -> ConditionResult:
    if isinstance(c, str):
        c = ConditionId.parse(c)
    v = _View(T)
    return _cond(v, c.index) if c.family == "cond" else _comp(v, c)


# ---- named classes -----------------------------------------------------------

CLASS_NAMES = (
    "graceful",
    "set_ordered_graceful",
    "odd_graceful",
    "set_ordered_odd_graceful",
    "elegant",
    "edge_magic_total",
    "super_edge_magic_total",
    "odd_edge_magic_total",
    "edge_sum_difference",
    "odd_elegant",
    "harmonious",
    "perfect_odd_graceful",
    "strongly_graceful",
    "strongly_odd_graceful",
    "kd_graceful",
    "kd_felicitous",
    "kd_edge_magic_total",
    "kd_edge_antimagic_total",
    "total_graceful",
    "ve_magic_total_graceful",
    "relaxed_edge_magic_total",
    "edge_magic_graceful",
    "six_c",
    "odd_six_c",
    "ee_difference_odd_edge_magic_matching",
    "odd_edge_magic_matching",
    "edge_odd_graceful_total",
    "multiple_edge_meaning_vertex",
)

# Plain conjunctions.  Parameterised and special classes are handled below.
_CONJUNCTIONS: dict[str, tuple[str, ...]] = {
    "graceful": ("cond-3", "cond-10"),
    "set_ordered_graceful": ("cond-3", "cond-9", "cond-10"),
    "odd_graceful": ("cond-4", "cond-11"),
    "set_ordered_odd_graceful": ("cond-4", "cond-9", "cond-11"),
    "elegant": ("cond-1", "cond-13"),
    "edge_magic_total": ("cond-6", "cond-14"),
    "super_edge_magic_total": ("cond-8", "cond-14"),
    # Vertex labels may reach 2q here (cond-5, not cond-4); see README.
    "odd_edge_magic_total": ("cond-2", "cond-5", "cond-7", "comp-11"),
    "edge_sum_difference": ("cond-6", "cond-15"),
    "odd_elegant": ("cond-4", "cond-12"),
    "harmonious": ("cond-3", "cond-13"),
    "strongly_graceful": ("cond-3", "cond-10", "comp-1", "comp-2"),
    "strongly_odd_graceful": ("cond-4", "cond-11", "comp-1", "comp-2"),
    "total_graceful": ("comp-3", "comp-8"),
    "ve_magic_total_graceful": ("comp-8", "comp-10"),
    "relaxed_edge_magic_total": ("comp-8", "comp-11", "comp-4"),
    "edge_magic_graceful": ("comp-7", "comp-8"),
    "six_c": ("comp-4", "comp-8", "cond-9", "comp-10", "comp-12", "comp-13", "comp-14"),
    "ee_difference_odd_edge_magic_matching": ("comp-4", "comp-10", "comp-13", "comp-19"),
    "odd_edge_magic_matching": ("comp-11", "comp-19"),
    "edge_odd_graceful_total": ("comp-19", "comp-21"),
}

_KD_CLASSES: dict[str, tuple[str, ...]] = {
    "kd_graceful": ("comp-3", "comp-16"),
    "kd_felicitous": ("comp-15", "comp-16"),
    "kd_edge_magic_total": ("comp-11", "comp-14", "comp-16"),
    "kd_edge_antimagic_total": ("comp-9", "comp-16", "comp-17"),
}

MEANINGS = (1, 2, 3, 4, 5)


@dataclass(frozen=True)
class Membership:
    name: str
    conditions: tuple[str, ...]
    constants: dict

    def to_dict(self) -> dict:
        return {
            "class": self.name.replace("_", "-"),
            "constants": self.constants,
            "conditions": list(self.conditions),
        }


def _solve_kd(v: _View) -> tuple[int, int] | None:
    """(k, d) with E* = S_{k,d}; d defaults to 1 when q = 1."""
    es = sorted(v.E)
    if len(es) != v.q:
        return None
    if v.q == 1:
        return es[0], 1
    d = es[1] - es[0]
    if d < 1 or any(b - a != d for a, b in zip(es, es[1:])):
        return None
    return es[0], d


def _conjunction(v: _View, names: Iterable[str], k=None, d=None) -> tuple[bool, dict]:
    constants: dict = {}
    for nm in names:
        c = ConditionId.parse(nm)
        if k is not None and c.family == "comp" and c.index in (9, 15, 16, 17, 18):
            c = ConditionId(c.family, c.index, k, d)
        r = _cond(v, c.index) if c.family == "cond" else _comp(v, c)
        if not r:
            return False, {}
        for key, val in r.constants.items():
            constants[f"{nm}.{key}"] = val
    return True, constants


def _odd_six_c(v: _View) -> tuple[bool, dict]:
    # Differences are taken per column; see README for why.
    if set(v.diff) != _odd_interval(1, 2 * v.q - 1):
        return False, {}
    ok, constants = _conjunction(
        v, ("comp-5", "cond-9", "comp-10", "comp-12", "comp-20", "comp-13")
    )
    if not ok:
        return False, {}
    pair = _two_constants(v)
    if pair is None:
        return False, {}
    constants["k1"], constants["k2"] = pair
    return True, constants


def _two_constants(v: _View) -> tuple[int, int] | None:
    """k1 <= k2 such that every e_i + w hits k1 or k2 for some vertex label w."""
    options = [{e + w for w in v.xy} for e in v.T.e]
    for k1 in sorted(options[0]):
        rest = [opt for opt in options if k1 not in opt]
        if not rest:
            return k1, k1
        common = set.intersection(*rest)
        if common:
            k2 = min(common)
            return min(k1, k2), max(k1, k2)
    return None


def multiple_meanings(T: TopcodeMatrix) -> list[int]:
    """Which of the five edge meanings hold (empty unless (XY)* = [0, p-1])."""
    v = _View(T)
    if v.xy != _interval(0, v.p - 1):
        return []
    q, p, E = v.q, v.p, v.E
    magic = _constant(v.sums) is not None
    held = []
    if E == _interval(1, q) and magic:
        held.append(1)
    if E == _interval(p, p + q - 1) and magic:
        held.append(2)
    if E == _interval(0, q - 1) and all(e == (a + b) % q for a, e, b in v.cols):
        held.append(3)
    if E == _interval(1, q) and _constant(abs(a + b - e) for a, e, b in v.cols) is not None:
        held.append(4)
    if E == _odd_interval(1, 2 * q - 1) and _comp(v, ConditionId("comp", 21)):
        held.append(5)
    return held


def _perfect_odd_graceful(v: _View) -> bool:
    diffs = {abs(a - b) for a in v.xy for b in v.xy if a != b}
    return bool(_cond(v, 4)) and bool(_cond(v, 7)) and diffs == _interval(1, v.p)


def check_class(
    T: TopcodeMatrix, name: str, k: int | None = None, d: int | None = None,
    meanings: Iterable[int] | None = None,
) -> Membership | None:
    name = name.replace("-", "_")
    v = _View(T)
    if name in _CONJUNCTIONS:
        ok, consts = _conjunction(v, _CONJUNCTIONS[name])
        return Membership(name, _CONJUNCTIONS[name], consts) if ok else None
    if name in _KD_CLASSES:
        if k is None or d is None:
            solved = _solve_kd(v)
            if solved is None:
                return None
            k, d = solved
        ok, consts = _conjunction(v, _KD_CLASSES[name], k, d)
        if not ok:
            return None
        return Membership(name, tuple(f"{c}({k},{d})" for c in _KD_CLASSES[name]), consts)
    if name == "perfect_odd_graceful":
        if _perfect_odd_graceful(v):
            return Membership(name, ("cond-4", "cond-7", "vertex-differences"), {})
        return None
    if name == "odd_six_c":
        ok, consts = _odd_six_c(v)
        conds = ("column-differences", "comp-5", "cond-9", "comp-10", "comp-12",
                 "comp-20", "comp-13", "k1-k2")
        return Membership(name, conds, consts) if ok else None
    if name == "multiple_edge_meaning_vertex":
        wanted = set(meanings) if meanings is not None else set(MEANINGS)
        held = [m for m in multiple_meanings(T) if m in wanted]
        if held:
            return Membership(name, ("cond-1",), {"meanings": held})
        return None
    raise ValueError(f"unknown class {name!r}")


def classify(T: TopcodeMatrix, meanings: Iterable[int] | None = None) -> list[Membership]:
    out = []
    for name in CLASS_NAMES:
        m = check_class(T, name, meanings=meanings)
        if m is not None:
            out.append(m)
    return out


def class_names(T: TopcodeMatrix) -> set[str]:
    return {m.name for m in classify(T)}


# ---- matchings between two matrices ------------------------------------------

MATCH_KINDS = (
    "twin_kd",
    "kd_harmonious_image",
    "mirror_image",
    "multiple_matching",
    "complementary",
    "twin_odd_graceful",
    "h_complementary",
)


@dataclass(frozen=True)
class MatchKind:
    kind: str
    k: int | None = None
    d: int | None = None
    variant: int | None = None
    epsilon: str | None = None  # class name every part must have (multiple_matching)

    def __post_init__(self) -> None:
        if self.kind not in MATCH_KINDS:
            raise ValueError(f"unknown matching kind {self.kind!r}")
        needs_kd = self.kind in ("twin_kd", "kd_harmonious_image")
        if needs_kd and (self.k is None or self.d is None):
            raise MissingParams(f"{self.kind} needs parameters (k, d)")
        if self.kind == "h_complementary" and self.variant not in (1, 2, 3, 4):
            raise MissingParams("h_complementary needs variant 1..4")


def _same_graph(T1: TopcodeMatrix, T2: TopcodeMatrix) -> bool:
    """Column i of both matrices labels the same edge of one underlying graph."""
    fwd: dict[int, int] = {}
    back: dict[int, int] = {}
    for (a1, _, b1), (a2, _, b2) in zip(T1.columns(), T2.columns()):
        for u, w in ((a1, a2), (b1, b2)):
            if fwd.setdefault(u, w) != w or back.setdefault(w, u) != u:
                return False
    return True


def _need_same_q(T1: TopcodeMatrix, T2: TopcodeMatrix, kind: str) -> None:
    if T1.q != T2.q:
        raise ShapeMismatch(f"{kind} needs equal column counts, got {T1.q} and {T2.q}")


def check_matching(
    T1: TopcodeMatrix, T2: TopcodeMatrix, kind: MatchKind | str,
    whole: TopcodeMatrix | None = None,
) -> ConditionResult:
    """Evaluate a pairwise matching.

    ``whole`` is only used by ``h_complementary``: when given it must equal
    T1 + T2 up to column order.
    """
    if isinstance(kind, str):
        kind = MatchKind(kind)
    v1, v2 = _View(T1), _View(T2)
    name = kind.kind
    if name == "twin_kd":
        k, d, q = kind.k, kind.d, T1.q
        base = {t * d for t in range(q)} | _arith(k, d, q)
        return _res(base - (v1.xy | v1.E) == v2.xy | v2.E, k=k, d=d)
    if name == "kd_harmonious_image":
        _need_same_q(T1, T2, name)
        k, d, q = kind.k, kind.d, T1.q
        base = {t * d for t in range(q)} | _arith(k, d, q)
        mod = q * d
        for v in (v1, v2):
            if not v.xy <= base:
                return _NO
            if any(e - k != (a + b - k) % mod for a, e, b in v.cols):
                return _NO
        ok = _same_graph(T1, T2) and all(
            e1 + e2 == 2 * k + (q - 1) * d for e1, e2 in zip(T1.e, T2.e)
        )
        return _res(ok, k=k, d=d)
    if name == "mirror_image":
        _need_same_q(T1, T2, name)
        if list(T1.e) != v1.diff or list(T2.e) != v2.diff or not _same_graph(T1, T2):
            return _NO
        k = _constant(e1 + e2 for e1, e2 in zip(T1.e, T2.e))
        return _res(k is not None and k > 0, k=k)
    if name == "multiple_matching":
        union = union_addition([T1, T2])
        if _View(union).xy != _interval(0, label_sets(union).p - 1):
            return _NO
        found = []
        for part in (T1, T2):
            if kind.epsilon is not None:
                m = check_class(part, kind.epsilon)
                if m is None:
                    return _NO
                found.append(kind.epsilon)
            else:
                names = sorted(class_names(part))
                if not names:
                    return _NO
                found.append(names)
        return _res(True, classes=found)
    if name == "complementary":
        union = union_addition([T1, T2])
        vu = _View(union)
        n = vu.p
        pairs = {frozenset((a, b)) for a, _, b in vu.cols}
        complete = len(pairs) == n * (n - 1) // 2 == union.q
        return _res(complete and not (v1.E & v2.E), n=n)
    if name == "twin_odd_graceful":
        _need_same_q(T1, T2, name)
        q = T1.q
        odd = _odd_interval(1, 2 * q - 1)
        first = v1.xy <= _interval(0, 2 * q - 1) and list(T1.e) == v1.diff and v1.E == odd
        second = v2.xy <= _interval(0, 2 * q) and list(T2.e) == v2.diff and v2.E == odd
        return _res(first and second and v1.xy | v2.xy == _interval(0, 2 * q))
    if name == "h_complementary":
        return _h_complementary(T1, T2, kind.variant, whole)
    raise AssertionError(name)


def _h_complementary(
    T1: TopcodeMatrix, T2: TopcodeMatrix, variant: int, whole: TopcodeMatrix | None
) -> ConditionResult:
    union = union_addition([T1, T2])
    if whole is not None:
        if not equivalent(whole, union):
            return _NO
    if not is_connected(union):
        return _NO
    V1, V2 = label_sets(T1).xy_star, label_sets(T2).xy_star
    E1, E2 = set(T1.columns()), set(T2.columns())
    same_v = V1 == V2
    joint_v = bool(V1 & V2)
    disjoint_e = not (E1 & E2)
    # Condition pairs per variant: vertex rule, edge rule.
    rules = {
        1: (same_v, disjoint_e),
        2: (joint_v, disjoint_e),
        3: (same_v, not disjoint_e),
        4: (joint_v, not disjoint_e),
    }
    v_ok, e_ok = rules[variant]
    return _res(v_ok and e_ok, variant=variant)


# ---- distinguishing ----------------------------------------------------------

DISTINGUISHING_KINDS = ("v", "adjacent_v", "adjacent_e", "adjacent_total")


def neighbor_sets(T: TopcodeMatrix) -> tuple[dict[int, frozenset], dict[int, frozenset]]:
    """(v-neighbour sets, e-neighbour sets) per label on the merged realization."""
    nv: dict[int, set] = {}
    ne: dict[int, set] = {}
    for a, e, b in T.columns():
        nv.setdefault(a, set()).add(b)
        nv.setdefault(b, set()).add(a)
        ne.setdefault(a, set()).add(e)
        ne.setdefault(b, set()).add(e)
    return (
        {w: frozenset(s) for w, s in nv.items()},
        {w: frozenset(s) for w, s in ne.items()},
    )


def check_distinguishing(T: TopcodeMatrix, kind: str) -> bool:
    kind = kind.replace("-", "_")
    if kind not in DISTINGUISHING_KINDS:
        raise ValueError(f"unknown distinguishing kind {kind!r}")
    nv, ne = neighbor_sets(T)
    if kind == "v":
        sets = list(nv.values())
        return len(set(sets)) == len(sets)
    key: Callable[[int], frozenset] = {
        "adjacent_v": lambda w: nv[w],
        "adjacent_e": lambda w: ne[w],
        "adjacent_total": lambda w: nv[w] | ne[w],
    }[kind]
    return all(key(a) != key(b) for a, _, b in T.columns())


__all__ = [
    "CLASS_NAMES",
    "ConditionId",
    "ConditionResult",
    "MatchKind",
    "Membership",
    "check_class",
    "check_distinguishing",
    "check_matching",
    "class_names",
    "classify",
    "eval_condition",
    "multiple_meanings",
    "neighbor_sets",
]
