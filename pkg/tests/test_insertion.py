"""Falls, runs, insertion, and the bijection between words ending in 1 and
their insertion labels."""

import pytest

from csieve.insertion import (fall_segments, image_multiplicity_words,
                              insert_into_falls, insert_into_runs,
                              insert_triple, label_spaces, leaves, phi,
                              phi_inverse, power_image,
                              predicted_maj_increment, run_segments)
from csieve.words import as_word, cdt, content, maj


def letters_of(w, seg):
    return [w[p - 1] for p in seg]


def test_segments_worked_example():
    w = as_word([2, 6, 5, 3, 4, 6, 1, 1])
    falls = [letters_of(w, s) for s in fall_segments(w)]
    assert falls == [[2], [6, 5, 3], [4], [6, 1], [1]]
    runs = [letters_of(w, s) for s in run_segments(w)]
    assert runs == [[1, 1, 2, 6], [5], [3, 4, 6]]


def test_segments_constant_word():
    w = (3, 3, 3)
    assert len(fall_segments(w)) == 3
    assert run_segments(w) == []


def test_insertion_worked_example():
    w = as_word([2, 6, 5, 3, 4, 6, 1, 1])
    w1 = insert_into_falls(w, 7, [0, 3])
    assert w1 == as_word([7, 2, 6, 5, 3, 4, 7, 6, 1, 1])
    w2 = insert_into_runs(w1, 7, [0, 2, 3, 3])
    assert w2 == as_word([7, 7, 2, 6, 5, 7, 3, 4, 7, 7, 7, 6, 1, 1])


def test_insert_triple_guards():
    with pytest.raises(ValueError):
        insert_triple((1, 2), 3, [], [])          # must end in 1
    with pytest.raises(ValueError):
        insert_triple((2, 1), 2, [], [])          # letter not new maximum
    with pytest.raises(ValueError):
        insert_triple((1, 1), 2, [5], [])         # fall index out of range
    with pytest.raises(ValueError):
        insert_into_falls((2, 1), 3, [0, 0])      # repeated fall index


def test_insertion_path_example():
    w = insert_triple((1, 1, 1, 1), 2, [0, 2], [])
    assert w == (2, 1, 1, 2, 1, 1)
    w = insert_triple(w, 3, [2], [1, 2])
    assert w == (2, 1, 1, 3, 3, 2, 3, 1, 1)


def test_phi_golden_images():
    assert phi((2, 1, 1, 3, 3, 2, 3, 1, 1)) == (((0, 2), ()), ((2,), (1, 2)))
    assert phi((2, 2, 2, 1, 1, 2, 3, 3, 1, 1)) == (((0, 2), (0, 0)), ((), (1, 1)))


def test_phi_of_squared_word():
    u = (2, 1, 1, 3, 3, 2, 3, 1, 1)
    expected = (((0, 2, 4, 6), ()), ((2, 6), (1, 2, 4, 5)))
    assert phi(u + u) == expected
    assert power_image(u, 2) == expected


def test_phi_roundtrip_small():
    for alpha, delta in [((3, 1, 1), (0, 1, 0)), ((2, 2), (0, 2)),
                         ((4, 2, 3), (0, 2, 1)), ((2, 2, 2), (0, 0, 0))]:
        for w in leaves(alpha, delta):
            assert phi_inverse(phi(w), alpha, delta) == w
            assert content(w) == alpha
            assert w[-1] == 1


def test_phi_requires_terminal_one_and_strong_content():
    with pytest.raises(ValueError):
        phi((1, 2))
    with pytest.raises(ValueError):
        phi((3, 1))          # letter 2 missing


def test_leaves_figure_example():
    got = set(leaves((3, 1, 1), (0, 1, 0)))
    assert got == {(2, 3, 1, 1, 1), (1, 2, 3, 1, 1), (1, 1, 2, 3, 1)}


def test_leaf_count_larger_example():
    found = list(leaves((4, 2, 3), (0, 2, 1)))
    assert len(found) == 144
    assert len(set(found)) == 144


def test_predicted_maj_increment_matches_actual():
    base = (2, 1, 1, 2, 1, 1)
    for falls, runs in [((2,), (1, 2)), ((), ()), ((0, 1), (0,)), ((3,), (2, 2))]:
        inc = predicted_maj_increment(base, falls, runs)
        assert maj(insert_triple(base, 3, falls, runs)) - maj(base) == inc


def test_label_spaces_shape():
    spaces = label_spaces((4, 2, 3), (0, 2, 1))
    sizes = [len(fs) * len(rs) for fs, rs in spaces]
    assert sizes[0] * sizes[1] == 144


def test_multiplicity_word_encoding():
    image = phi((2, 1, 1, 3, 3, 2, 3, 1, 1))
    words = image_multiplicity_words(image, (4, 2, 3), (0, 2, 1))
    assert words[0] == ((1, 0, 1, 0), (0, 0))
    # decoding round-trips through the concatenation used for powers
    assert power_image((2, 1, 1, 3, 3, 2, 3, 1, 1), 1) == image


def test_phi_inverse_rejects_bad_labels():
    with pytest.raises(ValueError):
        phi_inverse((((9,), ()),), (2, 1), (0, 1))
    with pytest.raises(ValueError):
        phi_inverse((((0,), ()),), (2, 1), (0, 1, 0))
