from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kmchamber.braid import (
    BraidWord,
    braid_to_kmatrix,
    check_braid_relations,
    euler_form,
    preserves_form,
    simplify,
    twist_action,
    twist_matrix,
)
from kmchamber.errors import IndexOutOfRange, InputError
from kmchamber.exact import identity, matmul
from kmchamber.gcm import GCM
from kmchamber.roots import weyl_matrix
from conftest import A2, AFF_A1, CORPUS

A2_LIN = GCM(((2, -1, 0), (-1, 2, 0), (0, 0, 2)))


def braid_words(n, max_len):
    letter = st.tuples(st.integers(1, n), st.sampled_from((1, -1)))
    return st.builds(
        BraidWord,
        st.lists(letter, max_size=max_len).map(tuple),
        st.integers(-3, 3).map(lambda k: 2 * k),
    )


class TestBraidWord:
    def test_parse(self):
        assert BraidWord.parse("1,-2,3") == BraidWord(((1, 1), (2, -1), (3, 1)))
        assert BraidWord.parse("") == BraidWord()

    @pytest.mark.parametrize("bad", ["0", "1,x", "1,,0"])
    def test_parse_errors(self, bad):
        with pytest.raises(InputError):
            BraidWord.parse(bad)

    def test_validation(self):
        with pytest.raises(InputError):
            BraidWord(((1, 2),))
        with pytest.raises(InputError):
            BraidWord((), shift=1)
        with pytest.raises(IndexOutOfRange):
            BraidWord(((0, 1),))

    def test_inverse_and_product(self):
        b = BraidWord(((1, 1), (2, -1)), 2)
        assert b.inverse() == BraidWord(((2, 1), (1, -1)), -2)
        assert (b * b.inverse()).shift == 0

    def test_json_round_trip(self):
        b = BraidWord(((1, 1), (2, -1)), 4)
        assert b.to_json() == {"letters": [[1, 1], [2, -1]], "shift": 4}


class TestMatrices:
    def test_euler_form(self):
        for A in CORPUS.values():
            for i in range(A.n):
                for j in range(A.n):
                    ei = tuple(int(k == i) for k in range(A.n))
                    ej = tuple(int(k == j) for k in range(A.n))
                    assert euler_form(A, ei, ej) == A.a[i][j]
        assert euler_form(AFF_A1, (1, 1), (1, 1)) == 0

    def test_twist_matrix_examples(self):
        assert twist_matrix(AFF_A1, 1) == ((-1, 2), (0, 1))
        assert twist_matrix(A2, 2) == ((1, 0), (1, -1))

    def test_twist_is_reflection(self):
        for A in CORPUS.values():
            for i in range(1, A.n + 1):
                m = twist_matrix(A, i)
                assert matmul(m, m) == identity(A.n)
                assert m == weyl_matrix(A, (i,))

    def test_twist_action_matches_matrix(self):
        m = twist_matrix(AFF_A1, 2)
        v = (3, 5)
        assert twist_action(AFF_A1, 2, v) == tuple(sum(m[r][c] * v[c] for c in range(2)) for r in range(2))

    def test_kmatrix_examples(self):
        assert braid_to_kmatrix(AFF_A1, BraidWord()) == (identity(2), 0)
        assert braid_to_kmatrix(AFF_A1, BraidWord(((2, -1),))) == (((1, 0), (2, -1)), 0)
        lhs = braid_to_kmatrix(A2, BraidWord.parse("1,2,1"))
        rhs = braid_to_kmatrix(A2, BraidWord.parse("2,1,2"))
        assert lhs == rhs

    @settings(max_examples=150, deadline=None)
    @given(st.sampled_from(sorted(CORPUS)), st.data())
    def test_homomorphism(self, name, data):
        A = CORPUS[name]
        a = data.draw(braid_words(A.n, 15))
        b = data.draw(braid_words(A.n, 15))
        ma, sa = braid_to_kmatrix(A, a)
        mb, sb = braid_to_kmatrix(A, b)
        assert braid_to_kmatrix(A, a * b) == (matmul(ma, mb), sa + sb)

    @settings(max_examples=150, deadline=None)
    @given(st.sampled_from(sorted(CORPUS)), st.data())
    def test_form_preserved(self, name, data):
        A = CORPUS[name]
        m, _ = braid_to_kmatrix(A, data.draw(braid_words(A.n, 30)))
        assert preserves_form(A, m)


class TestRelations:
    def test_a2(self):
        (c,) = check_braid_relations(A2)
        assert (c.kind, c.holds) == ("braid", True)

    def test_commuting_pairs(self):
        checks = {(c.i, c.j): c for c in check_braid_relations(A2_LIN)}
        assert checks[(1, 3)].kind == "commute" and checks[(1, 3)].holds
        assert checks[(2, 3)].kind == "commute" and checks[(2, 3)].holds

    def test_free_pair_has_infinite_order(self):
        (c,) = check_braid_relations(AFF_A1)
        assert (c.kind, c.holds) == ("free", True)

    def test_whole_corpus(self):
        for A in CORPUS.values():
            assert all(c.holds for c in check_braid_relations(A))


class TestSimplify:
    def test_free_cancellation(self):
        assert simplify(AFF_A1, BraidWord.parse("-2,2")) == BraidWord()

    def test_no_rewrite(self):
        assert simplify(AFF_A1, BraidWord.parse("1,1")) == BraidWord.parse("1,1")

    def test_braid_move(self):
        b = BraidWord.parse("1,2,1,-2,-1")
        s = simplify(A2, b)
        assert len(s) <= 3
        assert braid_to_kmatrix(A2, s) == braid_to_kmatrix(A2, b)

    def test_commuting_cancellation(self):
        assert simplify(A2_LIN, BraidWord.parse("1,3,-1")) == BraidWord.parse("3")

    def test_keeps_shift(self):
        assert simplify(A2, BraidWord(((1, 1), (1, -1)), 4)) == BraidWord((), 4)

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            simplify(A2, BraidWord.parse("3"))

    @pytest.mark.parametrize("name", sorted(CORPUS))
    def test_random_words_keep_kmatrix(self, name):
        A = CORPUS[name]
        rng = random.Random(name)
        for _ in range(40):
            letters = tuple((rng.randint(1, A.n), rng.choice((1, -1))) for _ in range(rng.randint(0, 40)))
            b = BraidWord(letters)
            s = simplify(A, b)
            assert len(s) <= len(b)
            assert braid_to_kmatrix(A, s) == braid_to_kmatrix(A, b)

    @settings(max_examples=60, deadline=None)
    @given(braid_words(3, 12))
    def test_word_times_inverse_collapses(self, b):
        assert simplify(A2_LIN, b * b.inverse()) == BraidWord()
