import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from topcode.core import TopcodeMatrix, construct
from topcode.errors import (
    ClosureViolation,
    IndexOutOfRange,
    LayoutMismatch,
    NotInClass,
    SizeMismatch,
    UnknownVertex,
)
from topcode.groups import (
    DigitString,
    EveryZeroFamily,
    authenticate,
    evaluated_coloring,
    permit_protocol,
    shift_generate,
    shifted_grid_family,
    split_keys,
    string_exchange,
    string_family_from_matrices,
    string_group_construct,
    v_add,
    v_sub,
    verify_group,
)
from topcode.realize import graph_from_edges, merged_realization
from topcode.transform import generate_set_ordered_graceful_tree

from _gen import A, SHIFT_STRINGS, SHIFT_IDENTITIES, STAR, T1

F6 = shift_generate(T1, 6)


class TestShiftGenerate:
    def test_member_two(self):
        T2 = F6.member(2)
        assert T2.x == (4, 4, 4, 5, 1)
        assert T2.y == (5, 0, 1, 1, 0)
        assert T2.e == (1, 4, 3, 4, 1)

    def test_serialized_members(self):
        fam = string_family_from_matrices(F6)
        assert tuple(str(S) for S in fam.members) == SHIFT_STRINGS

    def test_shift_e(self):
        F = shift_generate(T1, 6, recompute_e=False)
        assert F.member(2).e == (2, 3, 4, 5, 0)

    def test_bad_modulus(self):
        with pytest.raises(ValueError):
            shift_generate(T1, 1)


class TestOperations:
    def test_identities_zero_three(self):
        for a, b, r in SHIFT_IDENTITIES:
            assert v_add(F6, a, b, 3) == r

    def test_values(self):
        assert v_add(F6, 1, 2, 3) == 6
        assert v_add(F6, 4, 6, 3) == 1

    def test_sub(self):
        for i in range(1, 7):
            assert v_sub(F6, i, i, 3) == 3
            assert v_sub(F6, i, 3, 3) == i

    def test_closure_violation(self):
        members = list(F6.members)
        T = members[1]
        members[1] = TopcodeMatrix((9,) + T.x[1:], T.e, T.y)
        bad = EveryZeroFamily(tuple(members), 6)
        with pytest.raises(ClosureViolation):
            v_add(bad, 1, 2, 3)
        assert not verify_group(bad, 3).closure

    def test_index(self):
        with pytest.raises(IndexOutOfRange):
            v_add(F6, 0, 1, 1)

    def test_size(self):
        with pytest.raises(SizeMismatch):
            EveryZeroFamily(F6.members[:5], 6)


class TestVerify:
    @pytest.mark.parametrize("k", range(1, 7))
    def test_shift_family_all_zeros(self, k):
        assert verify_group(F6, k).ok
        assert verify_group(F6, k, "subtractive").ok

    def test_single_member(self):
        F = EveryZeroFamily((DigitString.from_text("050", {1, 3}),), 1)
        assert verify_group(F, 1).ok

    def test_string_group(self):
        F = string_group_construct(DigitString.from_text("000"), {1, 3}, 2)
        assert [str(S) for S in F.members] == ["000", "101"]
        assert verify_group(F, 2).ok

    def test_string_group_bad_digit(self):
        with pytest.raises(ValueError):
            string_group_construct(DigitString.from_text("090"), {2}, 5)

    def test_grid(self):
        F = shifted_grid_family([[0, 1], [1, 0]], 4)
        assert all(verify_group(F, k).ok for k in range(1, 5))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(4, 10), st.integers(0, 2**32))
    def test_inverse_witness(self, M, seed):
        T = generate_set_ordered_graceful_tree(4, seed)
        F = shift_generate(T, M)
        for k in range(1, M + 1):
            for i in range(1, M + 1):
                j = F.index(2 * k - i)
                assert v_add(F, i, j, k) == k


class TestStringExchange:
    def test_column_swap(self):
        F = string_family_from_matrices(F6)
        G = string_exchange(F, [("c", 1, 4)])
        assert verify_group(G, 3).ok
        assert str(G.member(1))[0] == str(F.member(1))[3]

    def test_xy_keeps_e(self):
        F = string_family_from_matrices(F6)
        G = string_exchange(F, [("l", 2)])
        for S, R in zip(F.members, G.members):
            assert str(S)[5:10] == str(R)[5:10]

    def test_needs_strings(self):
        with pytest.raises(LayoutMismatch):
            string_exchange(F6, [("c", 1, 2)])

    def test_multi_digit_labels(self):
        with pytest.raises(LayoutMismatch):
            string_family_from_matrices(EveryZeroFamily((A,), 1))


def test_json_roundtrip():
    for F in (F6, string_family_from_matrices(F6), shifted_grid_family([[1, 2]], 3)):
        assert EveryZeroFamily.from_dict(json.loads(json.dumps(F.to_dict()))) == F


class TestColoring:
    def test_star(self):
        col = evaluated_coloring(STAR, shift_generate(STAR, 3), 1)
        assert col.vertex_index == {0: 1, 1: 3, 2: 2}
        assert col.edge_index == {1: 1, 2: 2}

    def test_single_edge(self):
        T = construct((0,), (1,), (1,))
        col = evaluated_coloring(T, shift_generate(T, 2), 2)
        assert sorted(col.vertex_index.values()) == [1, 2]
        assert col.edge_index == {1: 1}

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            evaluated_coloring(STAR, shift_generate(STAR, 4), 1)

    def test_not_graceful(self):
        with pytest.raises(NotInClass):
            evaluated_coloring(A, shift_generate(STAR, 3), 1)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(2, 12), st.integers(0, 2**32), st.data())
    def test_bijections(self, n, seed, data):
        T = generate_set_ordered_graceful_tree(n, seed)
        k = data.draw(st.integers(1, n))
        col = evaluated_coloring(T, shift_generate(T, n), k)
        assert sorted(col.vertex_index.values()) == list(range(1, n + 1))
        assert sorted(col.edge_index.values()) == list(range(1, n))


class TestPermit:
    G = graph_from_edges({0: 0, 1: 1, 2: 2}, [(0, 1, 1), (1, 2, 1)])
    ASSIGN = {0: 10, 1: 11, 2: 12}

    def test_admit(self):
        assert permit_protocol(self.G, self.ASSIGN, [10, 12], 1)
        assert permit_protocol(self.G, self.ASSIGN, [11], 0)

    def test_deny(self):
        assert not permit_protocol(self.G, self.ASSIGN, [10], 1)
        assert not permit_protocol(self.G, self.ASSIGN, [10, 11], 1)

    def test_unknown(self):
        with pytest.raises(UnknownVertex):
            permit_protocol(self.G, self.ASSIGN, [], 7)
        with pytest.raises(UnknownVertex):
            permit_protocol(self.G, {1: 11}, [], 1)

    def test_matrix_network(self):
        G = merged_realization(STAR)
        assert permit_protocol(G, {0: 5, 1: 6, 2: 7}, [6, 7], 0)


class TestKeys:
    def test_split_and_auth(self):
        kp = split_keys(A, [1, 2, 3])
        assert kp.public.q == 3 and kp.private.q == 6
        assert kp.boundary
        assert authenticate(kp.public, kp.private)

    def test_disjoint_keys_fail(self):
        assert not authenticate(construct((0,), (1,), (1,)), construct((5,), (1,), (6,)))

    def test_bad_index(self):
        with pytest.raises(IndexOutOfRange):
            split_keys(A, [10])
