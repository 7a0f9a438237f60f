"""Word statistics, rotation, necklaces."""

import itertools

from csieve.words import (as_word, cdes, cdt, comaj, compositions_equal,
                          content, cyclic_descent_set, des, descent_set,
                          enumerate_by_content, enumerate_by_content_cdt,
                          flex, freq, inv, lex, maj, necklace, pad_to, period,
                          rotate, strip_trailing_zeros, strong_compositions)

W = as_word([1, 5, 5, 3, 1, 5, 5, 3])


def test_running_example_statistics():
    # all values checked by hand
    assert descent_set(W) == {3, 4, 7}
    assert cyclic_descent_set(W) == {3, 4, 7, 8}
    assert des(W) == 3
    assert cdes(W) == 4
    assert maj(W) == 14
    assert comaj(W) == 28 - 14
    assert inv(W) == 9
    assert content(W) == (2, 0, 2, 0, 4)
    assert period(W) == 4
    assert freq(W) == 2


def test_cdt_worked_example():
    assert cdt(as_word([1, 4, 3, 1, 2, 4, 1, 1, 4, 2, 2, 3])) == (0, 2, 1, 2)


def test_cdt_of_running_example():
    # filtration 11 -> 1331 -> 15531553; new cyclic descents: 0, 2, 2
    assert cdt(W) == (0, 0, 2, 0, 2)


def test_cdt_constant_and_trivial():
    assert cdt((1, 1, 1)) == (0,)
    assert cdt((2, 2)) == (0, 0)
    assert cdt(()) == ()


def test_rotate():
    assert rotate((1, 2, 3), 1) == (3, 1, 2)
    assert rotate((1, 2, 3), 3) == (1, 2, 3)
    assert rotate((1, 2, 3), -1) == (2, 3, 1)
    assert rotate((), 5) == ()


def test_necklace_of_running_example():
    nk = necklace(W)
    assert nk.period == 4
    assert nk.frequency == 2
    assert len(nk.members) == 4
    assert nk.representative == min(nk.members)
    assert W in nk.members


def test_flex_table_of_running_example():
    # the four rotations in lex order carry flex = 0, 2, 4, 6
    nk = necklace(W)
    assert [flex(u) for u in nk.members] == [0, 2, 4, 6]
    assert lex(nk.members[2]) == 2
    assert flex(W) == freq(W) * lex(W)


def test_flex_on_primitive_word():
    w = (1, 2, 3)
    assert freq(w) == 1
    assert sorted(flex(u) for u in necklace(w).members) == [0, 1, 2]


def test_composition_helpers():
    assert strip_trailing_zeros((2, 0, 1, 0, 0)) == (2, 0, 1)
    assert compositions_equal((1, 0), (1, 0, 0))
    assert not compositions_equal((1, 0, 1), (1,))
    assert pad_to((1, 2), 4) == (1, 2, 0, 0)
    assert list(strong_compositions(3, 2)) == [(1, 2), (2, 1)]
    assert list(strong_compositions(2, 3)) == []


def test_enumerate_by_content():
    words = list(enumerate_by_content((2, 1)))
    assert words == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    # lex order and correct cardinality for a bigger content
    words = list(enumerate_by_content((2, 0, 2)))
    assert len(words) == 6
    assert words == sorted(words)
    assert all(content(w) == (2, 0, 2) for w in words)


def test_enumerate_by_content_cdt():
    words = list(enumerate_by_content_cdt((2, 2), (0, 2)))
    assert words == [(1, 2, 1, 2), (2, 1, 2, 1)]


def test_cdt_partitions_the_content_class():
    for alpha in [(2, 2), (3, 1, 1), (1, 2, 2)]:
        words = list(enumerate_by_content(alpha))
        grouped = itertools.groupby(sorted(words, key=cdt), key=cdt)
        regrouped = sum(len(list(g)) for _, g in grouped)
        assert regrouped == len(words)
        for w in words:
            assert cdt(w)[0] == 0
            assert sum(cdt(w)) == cdes(w)
