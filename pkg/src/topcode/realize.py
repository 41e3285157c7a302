"""Graphs behind a Topcode-matrix.

Structure predicates (paths, cycles, trees, matchings, Euler/Hamilton) are
evaluated on the *merged* realization, which has one vertex per distinct
label.  Split realizations, where one label is carried by several vertices,
are enumerated separately.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import networkx as nx

from .core import Column, TopcodeMatrix, label_sets, union_addition
from .errors import (
    BadPartition,
    Disconnected,
    DuplicateEdgeLabels,
    IndexOutOfRange,
    InstanceTooLarge,
    LabelNotSplittable,
    NotATree,
    NotSorted,
    UnknownLabel,
)

MAX_SPLIT_Q = 12
MAX_CONNECTIVITY_Q = 12
MAX_CLIQUE_P = 10
# Cap on the raw number of label-occurrence partitions tried when enumerating
# split realizations; Bell numbers grow fast.
MAX_SPLIT_COMBINATIONS = 500_000
# Above this many columns the matching search stops being exhaustive.
MAX_EXHAUSTIVE_MATCHING_Q = 24


@dataclass(frozen=True)
class Edge:
    column: int  # 1-based column of the source matrix
    a: int
    b: int
    label: int


@dataclass(frozen=True)
class RealizationGraph:
    vertices: tuple[tuple[int, int], ...]  # (vertex_id, label)
    edges: tuple[Edge, ...]

    def label_of(self, v: int) -> int:
        return dict(self.vertices)[v]

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for ed in self.edges:
            if ed.a == v:
                out.add(ed.b)
            elif ed.b == v:
                out.add(ed.a)
        return out

    def to_networkx(self) -> nx.MultiGraph:
        G = nx.MultiGraph()
        for v, lab in self.vertices:
            G.add_node(v, label=lab)
        for ed in self.edges:
            G.add_edge(ed.a, ed.b, column=ed.column, e=ed.label)
        return G

    def to_dict(self) -> dict:
        return {
            "vertices": [{"id": v, "label": lab} for v, lab in self.vertices],
            "edges": [
                {"column": ed.column, "a": ed.a, "b": ed.b, "label": ed.label}
                for ed in self.edges
            ],
        }

    def to_edge_list(self) -> str:
        labels = dict(self.vertices)
        return "".join(
            f"{ed.column} {ed.a}({labels[ed.a]}) {ed.b}({labels[ed.b]})\n" for ed in self.edges
        )


def graph_from_edges(
    labels: dict[int, int], edges: Iterable[tuple[int, int, int]]
) -> RealizationGraph:
    """Build a RealizationGraph from vertex labels and (a, b, edge_label) triples."""
    eds = tuple(Edge(i, a, b, lab) for i, (a, b, lab) in enumerate(edges, start=1))
    return RealizationGraph(tuple(sorted(labels.items())), eds)


# ---- merged realization and basic counts --------------------------------

def merged_realization(T: TopcodeMatrix) -> RealizationGraph:
    labels = sorted(label_sets(T).xy_star)
    vid = {lab: i for i, lab in enumerate(labels)}
    edges = tuple(
        Edge(i, vid[a], vid[b], e) for i, (a, e, b) in enumerate(T.columns(), start=1)
    )
    return RealizationGraph(tuple((vid[lab], lab) for lab in labels), edges)


def multiplicity(T: TopcodeMatrix) -> dict[int, int]:
    return dict(Counter(T.x) + Counter(T.y))


def is_graphicable_sum(T: TopcodeMatrix) -> bool:
    """2q equals the summed row occurrence counts of X* and Y*.

    Each column contributes one x and one y, so this holds for every matrix.
    """
    ax, ay = Counter(T.x), Counter(T.y)
    return 2 * T.q == sum(ax[v] for v in set(T.x)) + sum(ay[v] for v in set(T.y))


def erdos_gallai(degrees: Sequence[int]) -> bool:
    d = list(degrees)
    if any(v < 0 for v in d):
        raise ValueError("degrees must be non-negative")
    if any(d[i] < d[i + 1] for i in range(len(d) - 1)):
        raise NotSorted("degree sequence must be non-increasing")
    if sum(d) % 2:
        return False
    n = len(d)
    for k in range(1, n + 1):
        lhs = sum(d[:k])
        rhs = k * (k - 1) + sum(min(k, v) for v in d[k:])
        if lhs > rhs:
            return False
    return True


def _adjacency(T: TopcodeMatrix) -> dict[int, list[tuple[int, int]]]:
    """label -> sorted [(neighbour label, 1-based column)]."""
    adj: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for i, (a, _, b) in enumerate(T.columns(), start=1):
        adj[a].append((b, i))
        adj[b].append((a, i))
    for lst in adj.values():
        lst.sort()
    return adj


class _UnionFind:
    def __init__(self) -> None:
        self.parent: dict = {}

    def find(self, a):
        self.parent.setdefault(a, a)
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def _columns_connected(cols: Sequence[Column]) -> bool:
    if not cols:
        return True
    uf = _UnionFind()
    for a, _, b in cols:
        uf.union(a, b)
    return len({uf.find(a) for a, _, _ in cols}) == 1


def is_connected(T: TopcodeMatrix) -> bool:
    adj = _adjacency(T)
    if not adj:
        return True
    start = next(iter(adj))
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v, _ in adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == len(adj)


def has_cycle(T: TopcodeMatrix) -> bool:
    """True when some column closes a cycle; parallel columns form a 2-cycle."""
    uf = _UnionFind()
    return any(not uf.union(a, b) for a, _, b in T.columns())


@dataclass(frozen=True)
class Path:
    labels: tuple[int, ...]
    columns: tuple[int, ...]


def find_path(T: TopcodeMatrix, a: int, b: int) -> Path | None:
    """Shortest label-distinct path from a to b, or None."""
    adj = _adjacency(T)
    for lab in (a, b):
        if lab not in adj:
            raise UnknownLabel(f"label {lab} does not occur in the matrix")
    if a == b:
        return Path((a,), ())
    parent: dict[int, tuple[int, int]] = {}
    seen = {a}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        for v, col in adj[u]:
            if v in seen:
                continue
            seen.add(v)
            parent[v] = (u, col)
            if v == b:
                labels, cols = [b], []
                while labels[-1] != a:
                    prev, c = parent[labels[-1]]
                    cols.append(c)
                    labels.append(prev)
                return Path(tuple(reversed(labels)), tuple(reversed(cols)))
            queue.append(v)
    return None


# ---- trees ---------------------------------------------------------------

@dataclass(frozen=True)
class TreeReport:
    tree_1: bool  # the merged realization is a tree with q edges
    tree_2: bool  # connected and acyclic
    tree_3: bool  # a unique path joins every pair of labels
    tree_4: bool  # connected and p = q + 1
    tree_5: bool  # acyclic and p = q + 1
    tree_6: bool  # the leaf formula agrees with the direct leaf count
    leaf_count: int | None  # 2 + sum over mu >= 2 of (mu - 2); None unless a tree
    leaf_count_direct: int


def _count_paths(adj: dict[int, list[tuple[int, int]]], a: int, b: int, cap: int) -> int:
    """Number of label-distinct paths a -> b (parallel columns counted apart), up to cap."""
    count = 0
    stack = [(a, frozenset([a]))]
    while stack:
        u, used = stack.pop()
        for v, _ in adj[u]:
            if v == b:
                count += 1
                if count >= cap:
                    return count
            elif v not in used:
                stack.append((v, used | {v}))
    return count


def tree_report(T: TopcodeMatrix) -> TreeReport:
    if len(set(T.e)) != T.q:
        raise DuplicateEdgeLabels("tree assertions need pairwise distinct e-labels")
    p = label_sets(T).p
    connected = is_connected(T)
    acyclic = not has_cycle(T)
    t1 = nx.is_tree(merged_realization(T).to_networkx())
    adj = _adjacency(T)
    labels = sorted(adj)
    t3 = all(_count_paths(adj, a, b, 2) == 1 for a, b in itertools.combinations(labels, 2))
    t4 = connected and p == T.q + 1
    t5 = acyclic and p == T.q + 1
    mu = multiplicity(T)
    direct = sum(1 for m in mu.values() if m == 1)
    t2 = connected and acyclic
    formula = None
    if t1 or t2 or t3 or t4 or t5:
        formula = 2 + sum(m - 2 for m in mu.values() if m >= 2)
    return TreeReport(
        tree_1=t1,
        tree_2=t2,
        tree_3=t3,
        tree_4=t4,
        tree_5=t5,
        tree_6=formula is not None and formula == direct,
        leaf_count=formula,
        leaf_count_direct=direct,
    )


def is_tree(T: TopcodeMatrix) -> bool:
    return is_connected(T) and not has_cycle(T)


def spanning_tree_submatrix(T: TopcodeMatrix) -> TopcodeMatrix | None:
    """Greedy in column order; None when the merged realization is disconnected."""
    if not is_connected(T):
        return None
    uf = _UnionFind()
    keep = [c for c in T.columns() if uf.union(c[0], c[2])]
    return TopcodeMatrix.from_columns(keep)


@dataclass(frozen=True)
class EulerHamilton:
    euler: bool
    hamilton: bool


def euler_hamilton(T: TopcodeMatrix) -> EulerHamilton:
    mu = multiplicity(T).values()
    return EulerHamilton(
        euler=all(m % 2 == 0 for m in mu),
        hamilton=is_connected(T) and all(m == 2 for m in mu),
    )


# ---- matchings and cliques ----------------------------------------------

def _lex_desc(n: int, k: int, start: int = 0) -> Iterator[tuple[int, ...]]:
    """k-subsets of range(start, n) as ascending tuples, lexicographically
    greatest first."""
    if k == 0:
        yield ()
        return
    for first in range(n - k, start - 1, -1):
        for rest in _lex_desc(n, k - 1, first + 1):
            yield (first,) + rest


def perfect_matching(T: TopcodeMatrix, mode: str = "relaxed") -> TopcodeMatrix | None:
    """A column subset whose ends cover (XY)*.

    ``strict`` forbids two selected columns sharing an end.  ``relaxed`` allows
    it and returns a cover of minimum size.  Among equally small candidates the
    lexicographically greatest set of column indices wins (later columns are
    preferred), so the result is deterministic.
    """
    if mode not in ("strict", "relaxed"):
        raise ValueError(f"unknown matching mode {mode!r}")
    cols = T.columns()
    xy = label_sets(T).xy_star
    p, q = len(xy), T.q
    if q > MAX_EXHAUSTIVE_MATCHING_Q:
        return _matching_large(T, mode)
    if mode == "strict":
        if p % 2:
            return None
        sizes = [p // 2]
    else:
        sizes = range(math.ceil(p / 2), q + 1)
    for k in sizes:
        for combo in _lex_desc(q, k):
            ends = [v for i in combo for v in (cols[i][0], cols[i][2])]
            if mode == "strict":
                ok = len(set(ends)) == len(ends) == p
            else:
                ok = set(ends) == xy
            if ok:
                return TopcodeMatrix.from_columns(cols[i] for i in combo)
    return None


def _matching_large(T: TopcodeMatrix, mode: str) -> TopcodeMatrix | None:
    cols = T.columns()
    G = nx.Graph()
    first_col: dict[frozenset, int] = {}
    for i, (a, _, b) in enumerate(cols):
        first_col.setdefault(frozenset((a, b)), i)
        G.add_edge(a, b)
    if mode == "strict":
        M = nx.max_weight_matching(G, maxcardinality=True)
        if 2 * len(M) != G.number_of_nodes():
            return None
    else:
        M = nx.min_edge_cover(G)
    idx = sorted(first_col[frozenset(e)] for e in M)
    return TopcodeMatrix.from_columns(cols[i] for i in idx)


@dataclass(frozen=True)
class Completeness:
    complete: bool
    max_clique_submatrix: TopcodeMatrix


def completeness(T: TopcodeMatrix) -> Completeness:
    xy = sorted(label_sets(T).xy_star)
    p = len(xy)
    if p > MAX_CLIQUE_P:
        raise InstanceTooLarge(f"clique search limited to p <= {MAX_CLIQUE_P}, got {p}")
    first_col: dict[frozenset, int] = {}
    for i, (a, _, b) in enumerate(T.columns()):
        first_col.setdefault(frozenset((a, b)), i)
    complete = len(first_col) == p * (p - 1) // 2 and T.q == p * (p - 1) // 2
    cols = T.columns()
    for size in range(p, 1, -1):
        for subset in itertools.combinations(xy, size):
            pairs = [frozenset(pr) for pr in itertools.combinations(subset, 2)]
            if all(pr in first_col for pr in pairs):
                idx = sorted(first_col[pr] for pr in pairs)
                clique = TopcodeMatrix.from_columns(cols[i] for i in idx)
                return Completeness(complete, clique)
    raise AssertionError("unreachable: every column is a 2-clique")


# ---- split realizations --------------------------------------------------

def _set_partitions(items: Sequence) -> Iterator[list[list]]:
    """Set partitions of items; the single-block partition comes first."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def _bell(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def _realization_key(G: RealizationGraph) -> tuple:
    labels = dict(G.vertices)
    inc: dict[int, list] = defaultdict(list)
    for ed in G.edges:
        inc[ed.a].append((ed.label, labels[ed.b]))
        inc[ed.b].append((ed.label, labels[ed.a]))
    return tuple(sorted((labels[v], tuple(sorted(inc[v]))) for v, _ in G.vertices))


def _isomorphic(G: RealizationGraph, H: RealizationGraph) -> bool:
    def edge_match(d1: dict, d2: dict) -> bool:
        return sorted(d["e"] for d in d1.values()) == sorted(d["e"] for d in d2.values())

    return nx.is_isomorphic(
        G.to_networkx(),
        H.to_networkx(),
        node_match=lambda u, v: u["label"] == v["label"],
        edge_match=edge_match,
    )


def enumerate_split_realizations(
    T: TopcodeMatrix, max_vertices: int | None = None
) -> list[RealizationGraph]:
    """Non-isomorphic realizations obtained by spreading labels over vertices.

    Vertices and edges carry labels; two realizations are the same when a
    label-preserving isomorphism maps edges onto edges with equal e-labels.
    The merged realization is always first.
    """
    if T.q > MAX_SPLIT_Q:
        raise InstanceTooLarge(f"split enumeration limited to q <= {MAX_SPLIT_Q}")
    p = label_sets(T).p
    if max_vertices is None:
        max_vertices = 2 * T.q
    if max_vertices < p:
        raise ValueError(f"max_vertices must be at least p = {p}")
    occ: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for i, (a, _, b) in enumerate(T.columns()):
        occ[a].append((i, 0))
        occ[b].append((i, 1))
    labels = sorted(occ)
    total = math.prod(_bell(len(occ[w])) for w in labels)
    if total > MAX_SPLIT_COMBINATIONS:
        raise InstanceTooLarge(f"{total} occurrence partitions exceed the search budget")

    results: list[RealizationGraph] = []
    buckets: dict[tuple, list[RealizationGraph]] = defaultdict(list)
    choices = [list(_set_partitions(occ[w])) for w in labels]
    for combo in itertools.product(*choices):
        if sum(len(part) for part in combo) > max_vertices:
            continue
        vertices = []
        ends: dict[tuple[int, int], int] = {}
        for w, part in zip(labels, combo):
            for block in part:
                vid = len(vertices)
                vertices.append((vid, w))
                for o in block:
                    ends[o] = vid
        edges = tuple(
            Edge(i + 1, ends[(i, 0)], ends[(i, 1)], e) for i, e in enumerate(T.e)
        )
        G = RealizationGraph(tuple(vertices), edges)
        key = _realization_key(G)
        if any(_isomorphic(G, H) for H in buckets[key]):
            continue
        buckets[key].append(G)
        results.append(G)
    return results


# ---- splitting operations ------------------------------------------------

def _incident(T: TopcodeMatrix, w: int) -> list[int]:
    return [i for i, (a, _, b) in enumerate(T.columns(), start=1) if w in (a, b)]


def _sub(T: TopcodeMatrix, idx: Iterable[int]) -> TopcodeMatrix:
    cols = T.columns()
    return TopcodeMatrix.from_columns(cols[i - 1] for i in sorted(idx))


def v_split(
    T: TopcodeMatrix, w: int, partition: tuple[Iterable[int], Iterable[int]]
) -> tuple[TopcodeMatrix, TopcodeMatrix]:
    """Split label w into two copies, returning (T', T'') with T' + T'' = T.

    ``partition`` holds two disjoint sets of 1-based column indices.  Every
    column incident to w must be listed and each side needs at least one of
    them.  Columns not listed are routed by connectivity: a column goes to
    the side whose copy of w it can reach once w is split, and to the first
    side otherwise.
    """
    incident = _incident(T, w)
    if len(incident) < 2:
        raise LabelNotSplittable(f"label {w} ends {len(incident)} column(s); need at least 2")
    first, second = (set(part) for part in partition)
    if first & second:
        raise BadPartition("partition sides overlap")
    for i in first | second:
        if not 1 <= i <= T.q:
            raise BadPartition(f"column {i} outside [1, {T.q}]")
    inc = set(incident)
    if not (first & inc) or not (second & inc):
        raise BadPartition(f"each side needs a column incident to {w}")
    if not inc <= first | second:
        raise BadPartition(f"columns {sorted(inc - first - second)} incident to {w} are unassigned")

    rest = [i for i in range(1, T.q + 1) if i not in first | second]
    if rest:
        # Components of the graph with w removed decide where the rest goes.
        uf = _UnionFind()
        cols = T.columns()
        for i in range(1, T.q + 1):
            a, _, b = cols[i - 1]
            ends = [v for v in (a, b) if v != w]
            if len(ends) == 2:
                uf.union(("v", ends[0]), ("v", ends[1]))
            uf.union(("c", i), ("v", ends[0]))
        side_of = {}
        for i in sorted(first & inc):
            side_of.setdefault(uf.find(("c", i)), 0)
        for i in sorted(second & inc):
            side_of.setdefault(uf.find(("c", i)), 1)
        for i in rest:
            (second if side_of.get(uf.find(("c", i)), 0) else first).add(i)
    return _sub(T, first), _sub(T, second)


def half_e_split(T: TopcodeMatrix, i: int, e_prime: int | None = None) -> TopcodeMatrix:
    """T plus a parallel copy (x_i, e', y_i) of column i."""
    if not 1 <= i <= T.q:
        raise IndexOutOfRange(f"column index {i} outside [1, {T.q}]")
    a, e, b = T.column(i)
    return union_addition([T, TopcodeMatrix.from_columns([(a, e if e_prime is None else e_prime, b)])])


def e_split(
    T: TopcodeMatrix, i: int, first_part: Iterable[int], e_prime: int | None = None
) -> tuple[TopcodeMatrix, TopcodeMatrix]:
    """Split column i: returns (T1, T2 + (x_i, e', y_i)).

    ``first_part`` lists the 1-based columns of T1 and must contain i; every
    other column goes to T2.
    """
    if not 1 <= i <= T.q:
        raise BadPartition(f"column index {i} outside [1, {T.q}]")
    first = set(first_part)
    if i not in first:
        raise BadPartition(f"the first part must contain column {i}")
    if any(not 1 <= c <= T.q for c in first):
        raise BadPartition("partition names a column outside the matrix")
    second = [c for c in range(1, T.q + 1) if c not in first]
    a, e, b = T.column(i)
    extra = (a, e if e_prime is None else e_prime, b)
    cols = T.columns()
    return _sub(T, first), TopcodeMatrix.from_columns([cols[c - 1] for c in second] + [extra])


# ---- code connectivity ---------------------------------------------------

def _bipartitions(items: Sequence[int]) -> Iterator[tuple[list[int], list[int]]]:
    """Unordered splits of items into two non-empty sides (first item on side one)."""
    head, tail = items[0], items[1:]
    for mask in range(2 ** len(tail)):
        left, right = [head], []
        for bit, it in enumerate(tail):
            (right if mask >> bit & 1 else left).append(it)
        if right:
            yield left, right


def _v_moves(cols: dict, parts: tuple[frozenset, ...], used: frozenset):
    for pi, part in enumerate(parts):
        labels = sorted({v for c in part for v in (cols[c][0], cols[c][2])} - used)
        for w in labels:
            if sum(1 for c in part if w in (cols[c][0], cols[c][2])) < 2:
                continue
            for left, right in _bipartitions(sorted(part)):
                if any(w in (cols[c][0], cols[c][2]) for c in left) and any(
                    w in (cols[c][0], cols[c][2]) for c in right
                ):
                    new = parts[:pi] + (frozenset(left), frozenset(right)) + parts[pi + 1:]
                    yield w, new, cols


def _e_moves(cols: dict, parts: tuple[frozenset, ...], used: frozenset):
    for pi, part in enumerate(parts):
        for c in sorted(part - used):
            others = sorted(part - {c})
            for mask in range(2 ** len(others)):
                left = [c] + [o for b, o in enumerate(others) if mask >> b & 1]
                right = [o for b, o in enumerate(others) if not mask >> b & 1]
                dup = max(cols) + 1
                new_cols = dict(cols)
                new_cols[dup] = cols[c]
                new = parts[:pi] + (frozenset(left), frozenset(right + [dup])) + parts[pi + 1:]
                yield c, new, new_cols


def _code_connectivity(T: TopcodeMatrix, moves) -> int | None:
    if T.q > MAX_CONNECTIVITY_Q:
        raise InstanceTooLarge(f"connectivity search limited to q <= {MAX_CONNECTIVITY_Q}")
    if not is_connected(T):
        raise Disconnected("code connectivity is defined for connected matrices")
    start_cols = dict(enumerate(T.columns(), start=1))
    frontier = [(start_cols, (frozenset(start_cols),), frozenset())]
    for depth in range(1, 2 * T.q + 1):
        nxt = []
        for cols, parts, used in frontier:
            for token, new_parts, new_cols in moves(cols, parts, used):
                if all(_columns_connected([new_cols[c] for c in part]) for part in new_parts):
                    return depth
                nxt.append((new_cols, new_parts, used | {token}))
        if not nxt:
            return None
        frontier = nxt
    return None


def v_code_connectivity(T: TopcodeMatrix) -> int | None:
    """Fewest distinct labels split so that every resulting part is connected.

    None when no label ends two or more columns, i.e. nothing can be split.
    """
    return _code_connectivity(T, _v_moves)


def e_code_connectivity(T: TopcodeMatrix) -> int | None:
    """Fewest distinct columns e-split so that every resulting part is connected."""
    return _code_connectivity(T, _e_moves)


# ---- leaf peeling --------------------------------------------------------

@dataclass(frozen=True)
class PeelReport:
    caterpillar: bool
    lobster: bool
    peel_sequence: tuple[TopcodeMatrix, ...] = field(default=())


def peel_leaves(T: TopcodeMatrix) -> TopcodeMatrix:
    """Delete every column that has an end label occurring only once."""
    mu = multiplicity(T)
    return TopcodeMatrix.from_columns(c for c in T.columns() if mu[c[0]] > 1 and mu[c[2]] > 1)


def _is_path(T: TopcodeMatrix) -> bool:
    if T.q == 0:
        return True
    return is_tree(T) and max(multiplicity(T).values()) <= 2


def leaf_peel(T: TopcodeMatrix) -> PeelReport:
    if not is_tree(T):
        raise NotATree("leaf peeling needs a tree matrix")
    seq = []
    cur = T
    while cur.q:
        cur = peel_leaves(cur)
        seq.append(cur)
    once = seq[0]
    # A caterpillar is also a lobster: peeling a path leaves a path.
    caterpillar = _is_path(once)
    lobster = _is_path(peel_leaves(once))
    return PeelReport(caterpillar, lobster, tuple(seq))


# ---- adjacency ve-value matrix --------------------------------------------

def adjacency_ve_matrix(G: RealizationGraph) -> list[list[int]]:
    """(p+1) x (p+1) matrix: vertex labels on the border, edge labels inside.

    With parallel edges the lowest column's label is used.
    """
    order = [v for v, _ in G.vertices]
    labels = dict(G.vertices)
    pos = {v: i for i, v in enumerate(order, start=1)}
    n = len(order)
    M = [[0] * (n + 1) for _ in range(n + 1)]
    for v in order:
        M[0][pos[v]] = labels[v]
        M[pos[v]][0] = labels[v]
    for ed in sorted(G.edges, key=lambda ed: ed.column, reverse=True):
        i, j = pos[ed.a], pos[ed.b]
        if i != j:
            M[i][j] = M[j][i] = ed.label
    return M
