"""End-to-end acceptance checks.  Each test prints one PASS/FAIL line."""

import contextlib
import itertools
import math
import random

import networkx as nx
import numpy as np
import pytest
import sympy

from topcode.classify import check_class, classify
from topcode.core import TopcodeMatrix, label_sets, standard_form, union_addition
from topcode.errors import NotInvertibleMod10
from topcode.groups import (
    DigitString,
    evaluated_coloring,
    permit_protocol,
    shift_generate,
    string_family_from_matrices,
    string_group_construct,
    v_add,
    verify_group,
)
from topcode.hanzi import hanzi_decrypt, hanzi_encrypt
from topcode.realize import (
    e_code_connectivity,
    e_split,
    erdos_gallai,
    graph_from_edges,
    half_e_split,
    perfect_matching,
    tree_report,
    v_code_connectivity,
    v_split,
)
from topcode.strings import boustrophedon
from topcode.transform import (
    decompose,
    f1_inverse,
    f1_to_odd_graceful,
    f2_inverse,
    f2_to_edge_magic,
    f3_inverse,
    f3_to_six_c,
    generate_set_ordered_graceful_tree,
)

from _gen import (
    A,
    SHIFT_STRINGS,
    SHIFT_IDENTITIES,
    SAMPLE_KEY,
    T1,
    connected_matrix,
    graphic_sequences,
    matmul_mod10_loops,
    random_matrix,
    snake_oracle,
    tree_matrix,
)


@pytest.fixture
def criterion(capsys):
    @contextlib.contextmanager
    def run(n):
        try:
            yield
        except BaseException:
            with capsys.disabled():
                print(f"\n[criterion {n}] FAIL")
            raise
        with capsys.disabled():
            print(f"\n[criterion {n}] PASS")

    return run


def caterpillars(count, max_n, seed):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, max_n)
        yield generate_set_ordered_graceful_tree(n, rng.randrange(2**32))


def test_1_matrix_a(criterion):
    with criterion(1):
        ls = label_sets(A)
        assert ls.xy_star == {1, 5, 7, 8, 10, 12, 14, 18}
        assert ls.e_star == set(range(1, 18, 2))
        found = {m.name: m for m in classify(A)}
        assert list(found["odd_edge_magic_total"].constants.values()) == [26]


def test_2_perfect_matching(criterion):
    with criterion(2):
        P = perfect_matching(A, "relaxed")
        assert sorted(P.e) == [5, 7, 9, 15, 17]
        assert label_sets(P).xy_star == label_sets(A).xy_star
        assert perfect_matching(A, "strict") is None


def test_3_string_group(criterion):
    with criterion(3):
        F = shift_generate(T1, 6)
        assert tuple(str(S) for S in string_family_from_matrices(F).members) == SHIFT_STRINGS
        for a, b, r in SHIFT_IDENTITIES:
            assert v_add(F, a, b, 3) == r


def test_4_group_axioms(criterion):
    with criterion(4):
        rng = random.Random(4)
        for M in range(2, 13):
            bases = [generate_set_ordered_graceful_tree(M, rng.randrange(2**32))]
            if M >= 6:
                bases.append(T1)
            for base in bases:
                for recompute in (True, False):
                    F = shift_generate(base, M, recompute)
                    for k in range(1, M + 1):
                        assert verify_group(F, k, "additive").ok
                        assert verify_group(F, k, "subtractive").ok
        for M in range(2, 11):
            for _ in range(3):
                n = rng.randint(1, 8)
                S = DigitString(tuple(rng.randrange(M) for _ in range(n)))
                active = set(rng.sample(range(1, n + 1), rng.randint(1, n)))
                for op in ("additive", "subtractive"):
                    F = string_group_construct(S, active, M, op)
                    assert all(verify_group(F, k).ok for k in range(1, M + 1))


def test_5_transform_equivalences(criterion):
    with criterion(5):
        for T in caterpillars(220, 12, seed=5):
            p, q = label_sets(T).p, T.q
            S = standard_form(T)

            F1 = f1_to_odd_graceful(T)
            assert check_class(F1, "set_ordered_odd_graceful") is not None
            assert standard_form(f1_inverse(F1)) == S

            F2 = f2_to_edge_magic(T)
            m2 = check_class(F2, "edge_magic_total")
            s = len(decompose(T).x_labels)
            assert m2 is not None and list(m2.constants.values()) == [s + 2 * p + 1]
            assert standard_form(f2_inverse(F2)) == S

            F3 = f3_to_six_c(T)
            m3 = check_class(F3, "six_c")
            assert m3 is not None
            assert m3.constants["comp-10.k"] == p + q + 1
            assert m3.constants["comp-13.k_prime"] == -2 * p
            assert standard_form(f3_inverse(F3)) == S


def test_6_tree_equivalences(criterion):
    with criterion(6):
        rng = random.Random(6)
        trees = 0
        for _ in range(600):
            n = rng.randint(2, 10)
            T = tree_matrix(rng, n)
            rep = tree_report(T)
            flags = {rep.tree_1, rep.tree_2, rep.tree_3, rep.tree_4, rep.tree_5}
            assert flags == {True}
            assert rep.leaf_count == rep.leaf_count_direct
            trees += 1
        for _ in range(300):
            q = rng.randint(1, 9)
            T = random_matrix(rng, q, span=rng.randint(2, q + 2), distinct_e=True)
            rep = tree_report(T)
            is_tree = nx.is_tree(nx.MultiGraph([(a, b) for a, _, b in T.columns()]))
            assert {rep.tree_1, rep.tree_2, rep.tree_3, rep.tree_4, rep.tree_5} == {is_tree}
        assert trees >= 500


def test_7_erdos_gallai(criterion):
    with criterion(7):
        checked = 0
        for n in range(1, 8):
            graphic = graphic_sequences(n)
            for seq in itertools.combinations_with_replacement(range(6, -1, -1), n):
                assert erdos_gallai(seq) == (seq in graphic), seq
                checked += 1
        assert checked == sum(math.comb(7 + n - 1, n) for n in range(1, 8))


def test_8_boustrophedon(criterion):
    with criterion(8):
        rows = [list(A.x), list(A.e), list(A.y)]
        expected = "757151111" + "1715131197531" + "18181418121412108"
        assert snake_oracle(rows) == expected
        assert boustrophedon(A) == expected
        rng = random.Random(8)
        for _ in range(1000):
            m, n = rng.randint(1, 6), rng.randint(1, 9)
            M = [[rng.randrange(rng.choice((10, 100, 1000))) for _ in range(n)] for _ in range(m)]
            assert boustrophedon(M) == snake_oracle(M)


def test_9_hanzi_cipher(criterion):
    with criterion(9):
        rng = np.random.default_rng(9)
        for _ in range(10_000):
            K = rng.integers(0, 10, (4, 4))
            X = rng.integers(0, 10, (4, int(rng.integers(1, 6))))
            assert hanzi_encrypt(K, X).tolist() == matmul_mod10_loops(K.tolist(), X.tolist())
        invertible = 0
        for _ in range(500):
            K = rng.integers(0, 10, (4, 4))
            X = rng.integers(0, 10, (4, 5))
            det = int(sympy.Matrix(K.tolist()).det())
            if math.gcd(det, 10) == 1:
                assert (hanzi_decrypt(K, hanzi_encrypt(K, X)) == X).all()
                invertible += 1
            else:
                with pytest.raises(NotInvertibleMod10):
                    hanzi_decrypt(K, X)
        assert invertible > 50
        with pytest.raises(NotInvertibleMod10):
            hanzi_decrypt(SAMPLE_KEY, [[6], [2], [6], [0]])


def test_10_evaluated_colorings(criterion):
    with criterion(10):
        for T in caterpillars(120, 12, seed=10):
            p = label_sets(T).p
            F = shift_generate(T, p)
            for k in range(1, p + 1):
                col = evaluated_coloring(T, F, k)
                assert sorted(col.vertex_index.values()) == list(range(1, p + 1))
                assert sorted(col.edge_index.values()) == list(range(1, p))


# ---- criterion 11 ---------------------------------------------------------

def _nx_connected(cols):
    if not cols:
        return False
    return nx.is_connected(nx.MultiGraph([(a, b) for a, _, b in cols]))


def _oracle_connectivity(T, kind, max_depth=3):
    """Iterative deepening over column bitmasks.

    A state is a list of parts (bitmasks over a growing column list).  A
    v-move picks an unused label and a subset of one part that, together
    with its complement, both touch the label.  An e-move picks an unused
    column c of a part and any subset of the part's other columns to stay
    with c; the rest goes with a copy of c.
    """
    start = list(T.columns())

    def moves(cols, parts, used):
        for pi, mask in enumerate(parts):
            members = [c for c in range(len(cols)) if mask >> c & 1]
            if kind == "v":
                labels = {v for c in members for v in (cols[c][0], cols[c][2])} - used
                for w in labels:
                    for sub in range(1, 1 << len(members)):
                        left = [c for b, c in enumerate(members) if sub >> b & 1]
                        right = [c for c in members if c not in left]
                        if right and any(w in (cols[c][0], cols[c][2]) for c in left) and any(
                            w in (cols[c][0], cols[c][2]) for c in right
                        ):
                            yield cols, parts[:pi] + [sum(1 << c for c in left), sum(1 << c for c in right)] + parts[pi + 1:], used | {w}
            else:
                for c in members:
                    if c in used:
                        continue
                    others = [o for o in members if o != c]
                    dup = len(cols)
                    new_cols = cols + [cols[c]]
                    for sub in range(1 << len(others)):
                        left = [c] + [o for b, o in enumerate(others) if sub >> b & 1]
                        right = [o for o in others if o not in left] + [dup]
                        yield new_cols, parts[:pi] + [sum(1 << x for x in left), sum(1 << x for x in right)] + parts[pi + 1:], used | {c}

    frontier = [(start, [(1 << len(start)) - 1], frozenset())]
    for depth in range(1, max_depth + 1):
        nxt = []
        for cols, parts, used in frontier:
            for new_cols, new_parts, new_used in moves(cols, parts, used):
                if all(
                    _nx_connected([new_cols[c] for c in range(len(new_cols)) if m >> c & 1])
                    for m in new_parts
                ):
                    return depth
                nxt.append((new_cols, new_parts, new_used))
        if not nxt:
            return None
        frontier = nxt
    return None


def test_11_splitting(criterion):
    with criterion(11):
        rng = random.Random(11)
        for _ in range(40):
            q = rng.randint(1, 10)
            T = random_matrix(rng, q, span=rng.randint(2, 6))
            S = standard_form(T)
            cols = T.columns()
            for w in label_sets(T).xy_star:
                inc = [i for i, (a, _, b) in enumerate(cols, start=1) if w in (a, b)]
                if len(inc) < 2:
                    continue
                for r in range(1, len(inc)):
                    for left in itertools.combinations(inc, r):
                        right = [i for i in inc if i not in left]
                        P1, P2 = v_split(T, w, (left, right))
                        assert standard_form(union_addition([P1, P2])) == S
            for i in range(1, T.q + 1):
                a, e, b = T.column(i)
                doubled = standard_form(TopcodeMatrix.from_columns(cols + [(a, e + 1, b)]))
                assert standard_form(half_e_split(T, i, e + 1)) == doubled
                others = [c for c in range(1, T.q + 1) if c != i]
                for r in range(len(others) + 1):
                    for extra in itertools.combinations(others, r):
                        P1, P2 = e_split(T, i, (i,) + extra, e + 1)
                        assert standard_form(union_addition([P1, P2])) == doubled
        for _ in range(60):
            q = rng.randint(1, 8)
            T = connected_matrix(rng, q, span=rng.randint(2, 6))
            assert v_code_connectivity(T) == _oracle_connectivity(T, "v")
            assert e_code_connectivity(T) == _oracle_connectivity(T, "e")


def test_12_permit_protocol(criterion):
    with criterion(12):
        rng = random.Random(12)
        for _ in range(100):
            n = rng.randint(2, 12)
            G = nx.gnp_random_graph(n, rng.uniform(0.2, 0.7), seed=rng.randrange(2**32))
            net = graph_from_edges({v: v for v in G}, [(a, b, 1) for a, b in G.edges])
            permits = dict(zip(G, rng.sample(range(1000), n)))
            for target in G:
                needed = {permits[w] for w in G[target]}
                noise = set(rng.sample(range(1000, 1100), 3))
                assert permit_protocol(net, permits, needed, target)
                assert permit_protocol(net, permits, needed | noise, target)
                for missing in needed:
                    assert not permit_protocol(net, permits, (needed - {missing}) | noise, target)
