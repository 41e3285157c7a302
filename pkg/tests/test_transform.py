import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from topcode.classify import check_class, eval_condition
from topcode.core import TopcodeMatrix, construct, label_sets, standard_form
from topcode.errors import NotInClass, ParityViolation
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

from _gen import A, STAR

SINGLE = construct((0,), (1,), (1,))

trees = st.builds(
    generate_set_ordered_graceful_tree, st.integers(2, 12), st.integers(0, 2**32)
)


class TestF1:
    def test_star(self):
        assert f1_to_odd_graceful(STAR).columns() == [(0, 1, 1), (0, 3, 3)]

    def test_fixed_point(self):
        assert f1_to_odd_graceful(SINGLE) == SINGLE

    def test_inverse(self):
        assert f1_inverse(construct((0, 0), (1, 3), (1, 3))) == STAR
        assert f1_inverse(SINGLE) == SINGLE

    def test_parity(self):
        with pytest.raises(ParityViolation):
            f1_inverse(construct((0,), (2,), (2,)))

    def test_not_in_class(self):
        with pytest.raises(NotInClass):
            f1_to_odd_graceful(A)


class TestF2:
    def test_star(self):
        out = f2_to_edge_magic(STAR)
        assert out.columns() == [(1, 4, 3), (1, 5, 2)]
        assert {a + e + b for a, e, b in out.columns()} == {8}

    def test_single(self):
        assert f2_to_edge_magic(SINGLE).columns() == [(1, 3, 2)]

    def test_inverse(self):
        assert f2_inverse(construct((1, 1), (4, 5), (3, 2))) == STAR

    def test_gap_in_edges(self):
        with pytest.raises(NotInClass):
            f2_inverse(construct((1, 1), (4, 6), (4, 2)))


class TestF3:
    def test_star(self):
        out = f3_to_six_c(STAR)
        assert out.columns() == [(1, 5, 2), (1, 4, 3)]
        assert {e + abs(a - b) for a, e, b in out.columns()} == {6}

    def test_inverse(self):
        assert f3_inverse(construct((1, 1), (5, 4), (2, 3))) == STAR

    def test_not_six_c(self):
        with pytest.raises(NotInClass):
            f3_inverse(A)


class TestGenerator:
    def test_two_vertices(self):
        assert generate_set_ordered_graceful_tree(2, 0) == SINGLE

    def test_three_vertices(self):
        for seed in range(10):
            T = generate_set_ordered_graceful_tree(3, seed)
            assert check_class(T, "set_ordered_graceful") is not None

    def test_deterministic(self):
        assert generate_set_ordered_graceful_tree(9, 5) == generate_set_ordered_graceful_tree(9, 5)

    def test_too_small(self):
        with pytest.raises(ValueError):
            generate_set_ordered_graceful_tree(1)


@settings(max_examples=60, deadline=None)
@given(trees)
def test_f2_constant(T):
    dec = decompose(T)
    out = f2_to_edge_magic(T)
    assert {a + e + b for a, e, b in out.columns()} == {dec.s + 2 * dec.p + 1}
    assert max(out.x) < min(out.y)


@settings(max_examples=60, deadline=None)
@given(trees)
def test_f3_columnwise(T):
    out = f3_to_six_c(T)
    p, q = label_sets(T).p, T.q
    assert {e + abs(a - b) for a, e, b in out.columns()} == {p + q + 1}
    assert max(out.x + out.y) < min(out.e)
    assert eval_condition(out, "comp-10").constants["k"] == p + q + 1


@settings(max_examples=60, deadline=None)
@given(trees)
def test_roundtrips(T):
    S = standard_form(T)
    assert standard_form(f1_inverse(f1_to_odd_graceful(T))) == S
    assert standard_form(f2_inverse(f2_to_edge_magic(T))) == S
    assert standard_form(f3_inverse(f3_to_six_c(T))) == S
