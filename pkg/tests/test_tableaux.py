from math import comb

import pytest

from tlexact import tableaux as T


def test_two_column_partitions():
    assert T.two_column_partitions(3) == [(2, 1), (3, 0)]
    assert T.two_column_partitions(0) == [(0, 0)]
    assert len(T.two_column_partitions(4)) == 3


def test_standard_tableaux_order_and_extremes():
    tabs = T.standard_tableaux((2, 1))
    assert tabs == ((1, 1, 2), (1, 2, 1))
    assert tabs[0] == T.column_reading_tableau((2, 1))
    assert tabs[-1] == T.row_reading_tableau((2, 1))
    assert T.standard_tableaux((4, 0)) == ((1, 1, 1, 1),)


def test_tableau_counts():
    for n in range(11):
        assert len(T.all_standard_tableaux(n)) == comb(n, n // 2)


def test_contents():
    assert [T.content((1, 1, 2), i) for i in (1, 2, 3)] == [0, -1, 1]
    # one-column contents are 1 - i
    for n in (1, 4, 7):
        t = T.one_column_tableau(n)
        assert T.contents(t) == tuple(1 - i for i in range(1, n + 1))
    assert T.contents(T.row_reading_tableau((2, 2))) == (0, 1, -1, 0)
    with pytest.raises(IndexError):
        T.content((1, 2), 3)


def test_dominance():
    assert T.dominance_compare((1, 1, 2), (1, 2, 1)) == "less"
    assert T.dominance_compare((1, 2, 1), (1, 2, 1)) == "equal"
    assert T.dominance_compare((1, 2, 1), (1, 1, 2)) == "greater"
    assert T.dominance_compare((1, 1, 2, 1, 2), (1, 2, 1, 1, 2)) == "less"
    # incomparable pair: prefix counts cross over
    assert T.dominance_compare((1, 2, 1, 1, 2, 1), (1, 1, 2, 2, 1, 1)) \
        == "incomparable"
    with pytest.raises(ValueError):
        T.dominance_compare((1, 2), (1, 1, 2))


def test_lex_refines_dominance():
    for n in (4, 5, 6):
        tabs = T.all_standard_tableaux(n)
        for s in tabs:
            for t in tabs:
                if T.dominance_compare(s, t) == "less":
                    assert s < t


def test_residues_and_classes():
    assert T.residue_sequence((1, 1, 1), 3) == (0, 2, 1)
    assert T.residue_sequence((1, 1, 2), 3) == (0, 2, 1)
    for t in T.all_standard_tableaux(5):
        assert T.residue_sequence(t, 3)[0] == 0
    assert set(T.p_class((1, 1, 1), 3)) == {(1, 1, 1), (1, 1, 2)}
    assert len(T.class_of_one_column(12, 3)) == 6
    # p > n separates
    assert T.p_class((1, 1, 2), 7) == ((1, 1, 2),)


def test_block_decomposition_examples():
    bd = T.block_decomposition((1, 1, 2))
    assert bd.runs == ((2, 1),) and bd.n_values == (2,)
    bd = T.block_decomposition(T.one_column_tableau(6))
    assert bd.runs == ((6, 0),) and bd.k == 1
    bd = T.block_decomposition((1, 1, 2, 1, 1))
    assert bd.runs == ((2, 1), (2, 0)) and bd.n_values == (2, 3)


def test_block_round_trip():
    for n in range(11):
        for t in T.all_standard_tableaux(n):
            assert T.block_decomposition(t).to_tableau() == t


def test_index_set_examples():
    assert sorted(T.index_set(12, 3)) == [4, 6, 10, 12]
    assert sorted(T.index_set(3, 3)) == [1, 3]
    # single digit: n+1 < p
    assert sorted(T.index_set(4, 7)) == [4]


def test_tableau_from_index():
    assert T.tableau_from_index(3, 3, 3) == (1, 1, 1)
    assert T.tableau_from_index(1, 3, 3) == (1, 1, 2)
    assert T.tableau_from_index(12, 12, 3) == (1,) * 12
    assert T.tableau_from_index(6, 12, 3) == (1,) * 8 + (2, 2, 2, 1)
    with pytest.raises(ValueError):
        T.tableau_from_index(5, 12, 3)


def test_index_tableaux_lie_in_one_column_class():
    for (n, p) in [(3, 3), (8, 3), (12, 3), (5, 5), (9, 5), (14, 3)]:
        cls = set(T.class_of_one_column(n, p))
        for m in T.index_set(n, p):
            assert T.tableau_from_index(m, n, p) in cls


def test_collapse_examples():
    assert T.collapse((1,) * 12, 3) == ((1, 1, 1), 1)
    assert T.collapse((1, 1, 1), 3) == ((), 1)
    assert T.collapse((1,) * 8, 3) == ((1, 1), None)
    with pytest.raises(ValueError):
        T.collapse((1, 2, 1), 3)


def test_collapse_is_a_bijection():
    for p in (3, 5):
        for n in range(p, 13):
            cls = T.class_of_one_column(n, p)
            n1 = n - (p - 1)
            n2, r = divmod(n1, p)
            images = [T.collapse(t, p) for t in cls]
            assert len(set(images)) == len(images)
            small = T.all_standard_tableaux(n2)
            if r == 0:
                assert sorted(im for im, tag in images) == sorted(small)
                assert all(tag is None for _, tag in images)
            else:
                expected = {(s, tag) for s in small for tag in (1, 2)}
                assert set(images) == expected


def test_radix_chain():
    ch = T.radix_chain(12, 3)
    assert ch.digits == (1, 1, 1)
    assert [(l[2], l[3]) for l in ch.levels] == [(3, 1), (0, 1)]
    assert ch.sizes == (12, 3, 0)
    ch = T.radix_chain(14, 3)
    assert ch.digits == (1, 2, 0)
    assert [(l[2], l[3]) for l in ch.levels] == [(4, 0), (0, 2)]
    ch = T.radix_chain(3, 3)
    assert ch.digits == (1, 1) and [(l[2], l[3]) for l in ch.levels] == [(0, 1)]
    ch = T.radix_chain(2, 3)
    assert ch.levels == () and ch.digits == (1, 0)


def test_radix_chain_digit_identities():
    # r_i = a_i and n2_i + 1 = sum of truncated higher digits, at every level
    for p in (3, 5, 7):
        for n in range(p, 60):
            ch = T.radix_chain(n, p)
            digits = ch.digits
            k = len(digits) - 1
            for i, (ni, n1i, n2i, ri) in enumerate(ch.levels):
                assert ni == n1i + (p - 1)
                assert n1i == p * n2i + ri
                assert ri == digits[k - i]
                assert n2i + 1 == sum(
                    digits[j] * p ** (k - i - 1 - j) for j in range(k - i))
            if ch.levels:
                assert ch.levels[-1][2] == digits[0] - 1


def test_block_swap():
    t12 = T.one_column_tableau(12)
    assert T.apply_block_swap(t12, 1, 3) is None  # same column
    t6 = T.tableau_from_index(6, 12, 3)
    swapped = T.apply_block_swap(t6, 2, 3)
    assert swapped is not None
    assert T.collapse(swapped, 3)[0] == (1, 2, 1)
