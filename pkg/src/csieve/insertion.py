"""Falls and runs, letter insertion, and the tree bijection.

A word with c cyclic descents decomposes into c maximal weakly increasing
cyclic segments (runs) and |w| - c maximal strictly decreasing cyclic
segments (falls); the constant word has no runs by convention.  Inserting a
new largest letter into chosen falls and runs builds up every word of a
given content and cyclic descent type exactly once, which yields a
bijection (phi) between such words ending in 1 and a product of subset and
multisubset label spaces.
"""

from __future__ import annotations

import itertools
from math import comb
from typing import Iterable, Iterator, Sequence

from .words import Word, as_word, cdes, content, cdt, is_strong, maj

# A segment is a tuple of 1-based positions, cyclically consecutive in w.
Segment = tuple[int, ...]
# A phi image is a tuple of (fall_set, run_multiset) pairs for letters 2..m,
# each component a sorted tuple of integers.
PhiImage = tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]


def _segments(w: Word, boundaries: set[int]) -> list[Segment]:
    """Cyclic segments ending at the given 1-based boundary positions,
    indexed from the segment containing position 1, then left to right."""
    n = len(w)
    if not boundaries:
        return []
    starts = sorted((b % n) + 1 for b in boundaries)
    segs = []
    for s in starts:
        seg = [s]
        p = s
        while p not in boundaries:
            p = p % n + 1
            seg.append(p)
        segs.append(tuple(seg))
    # the segment containing position 1 starts at 1 or wraps (largest start)
    if starts[0] != 1:
        segs = segs[-1:] + segs[:-1]
    return segs


def fall_segments(w) -> list[Segment]:
    w = as_word(w)
    n = len(w)
    weak_ascents = {p for p in range(1, n + 1) if w[p - 1] <= w[p % n]}
    return _segments(w, weak_ascents)


def run_segments(w) -> list[Segment]:
    w = as_word(w)
    n = len(w)
    descents = {p for p in range(1, n + 1) if w[p - 1] > w[p % n]}
    return _segments(w, descents)   # constant word: no descents, no runs


def _insertion_index(w: Word, seg: Segment, slot: int) -> int:
    """Linear 0-based index for inserting into a segment after `slot`
    letters.  A slot between positions n and 1 goes to the beginning."""
    n = len(w)
    if slot == 0:
        return seg[0] - 1
    a = seg[slot - 1]
    return 0 if a == n else a


def _insert_one_fall(w: Word, letter: int, f: int) -> Word:
    segs = fall_segments(w)
    if not 0 <= f < len(segs):
        raise ValueError(f"no fall with index {f}")
    seg = segs[f]
    letters = [w[p - 1] for p in seg]
    if letter in letters:
        raise ValueError(f"letter {letter} already appears in fall {f}")
    slot = sum(1 for x in letters if x > letter)
    i = _insertion_index(w, seg, slot)
    return w[:i] + (letter,) + w[i:]


def _insert_one_run(w: Word, letter: int, r: int) -> Word:
    segs = run_segments(w)
    if not 0 <= r < len(segs):
        raise ValueError(f"no run with index {r}")
    seg = segs[r]
    letters = [w[p - 1] for p in seg]
    slot = sum(1 for x in letters if x < letter)
    i = _insertion_index(w, seg, slot)
    return w[:i] + (letter,) + w[i:]


def insert_into_falls(w, letter: int, falls: Iterable[int]) -> Word:
    """Insert `letter` into the listed falls (a set of fall indices)."""
    w = as_word(w)
    falls = sorted(falls)
    if len(set(falls)) != len(falls):
        raise ValueError("fall indices must be distinct")
    for f in falls:
        w = _insert_one_fall(w, letter, f)
    return w


def insert_into_runs(w, letter: int, runs: Iterable[int]) -> Word:
    """Insert `letter` into the listed runs (a multiset of run indices)."""
    w = as_word(w)
    for r in sorted(runs):
        w = _insert_one_run(w, letter, r)
    return w


def insert_triple(w, letter: int, falls: Iterable[int], runs: Iterable[int]) -> Word:
    """Insert (letter, F, R): letter into falls F of w, then into runs R of
    the intermediate word.  Requires w ending in 1 and letter larger than
    every letter of w; the result again ends in 1."""
    w = as_word(w)
    if not w or w[-1] != 1:
        raise ValueError("insertion base word must end in 1")
    if letter <= max(w):
        raise ValueError("inserted letter must exceed every letter present")
    falls = sorted(falls)
    runs = sorted(runs)
    c = cdes(w)
    if any(not 0 <= f < len(w) - c for f in falls):
        raise ValueError("fall index out of range")
    if any(not 0 <= r < c + len(falls) for r in runs):
        raise ValueError("run index out of range")
    return insert_into_runs(insert_into_falls(w, letter, falls), letter, runs)


def predicted_maj_increment(w, falls: Sequence[int], runs: Sequence[int]) -> int:
    """Major index change from inserting a triple, without inserting."""
    c = cdes(as_word(w))
    nf, nr = len(falls), len(runs)
    return comb(nf + 1, 2) + c * (nf + nr) + nf * nr + sum(falls) - sum(runs)


# ---------------------------------------------------------------------------
# the bijection phi and its inverse

def phi(w) -> PhiImage:
    """Edge labels (F_l, R_l) for l = 2..m of the unique insertion path
    building w; requires w ending in 1 with strong content."""
    w = as_word(w)
    if not w or w[-1] != 1:
        raise ValueError("phi requires a word ending in 1")
    if not is_strong(content(w)):
        raise ValueError("phi requires strong content; flatten first")
    out = []
    cur = list(w)
    for letter in range(max(w), 1, -1):
        prev = [x for x in cur if x != letter]
        falls, runs = _recover_triple(cur, prev, letter)
        out.append((falls, runs))
        cur = prev
    return tuple(reversed(out))


def _recover_triple(cur: list[int], prev: list[int], letter: int):
    """The unique (F, R) with insert_triple(prev, letter, F, R) == cur,
    where letter is the largest letter of cur and prev omits it."""
    n_cur = len(cur)
    blocks = []     # maximal blocks of `letter`: (start, size), never wrapping
    i = 0
    while i < n_cur:
        if cur[i] == letter:
            j = i
            while j < n_cur and cur[j] == letter:
                j += 1
            blocks.append((i, j - i))
            i = j
        else:
            i += 1

    # index in prev of each non-letter position of cur
    prev_index = {}
    seen = 0
    for i, x in enumerate(cur):
        if x != letter:
            prev_index[i] = seen
            seen += 1

    # A block sits in a cyclic gap between prev letters a (before) and b
    # (after).  A weak ascent a <= b means the block ends with the single
    # letter inserted into the fall of prev starting at b; a descent means
    # a pure run block.
    prev_falls = fall_segments(tuple(prev))
    fall_start = {seg[0]: idx for idx, seg in enumerate(prev_falls)}
    falls = []
    fall_blocks = set()
    for start, size in blocks:
        a = cur[start - 1] if start else cur[-1]
        b = cur[start + size]
        if a <= b:
            fall_blocks.add((start, size))
            falls.append(fall_start[prev_index[start + size] + 1])
    falls.sort()

    # intermediate word: drop the run-inserted letters, keep fall ones
    w_prime = []
    keep = set()    # cur indices surviving into w_prime
    for start, size in blocks:
        if (start, size) in fall_blocks:
            keep.add(start + size - 1)
    for i, x in enumerate(cur):
        if x != letter or i in keep:
            w_prime.append(x)
    w_prime = tuple(w_prime)
    if w_prime != insert_into_falls(tuple(prev), letter, falls):
        raise RuntimeError("fall recovery failed; invariant violated")

    wp_index = {}
    seen = 0
    for i, x in enumerate(cur):
        if x != letter or i in keep:
            wp_index[i] = seen
            seen += 1
    run_of_position = {}
    for idx, seg in enumerate(run_segments(w_prime)):
        for p in seg:
            run_of_position[p - 1] = idx

    runs = []
    for start, size in blocks:
        if (start, size) in fall_blocks:
            count = size - 1
            anchor = start + size - 1          # the fall-inserted letter
        else:
            count = size
            anchor = start - 1 if start else len(cur) - 1
        if count:
            runs.extend([run_of_position[wp_index[anchor]]] * count)
    runs.sort()
    if insert_into_runs(w_prime, letter, runs) != tuple(cur):
        raise RuntimeError("run recovery failed; invariant violated")
    return tuple(falls), tuple(runs)


def _prefix_sums(alpha, delta):
    n_l = list(itertools.accumulate(alpha))
    k_l = list(itertools.accumulate(delta))
    return n_l, k_l


def _validate_params(alpha, delta):
    alpha, delta = tuple(alpha), tuple(delta)
    if len(alpha) != len(delta):
        raise ValueError("alpha and delta need the same number of parts")
    if not alpha or not is_strong(alpha):
        raise ValueError("alpha must be a non-empty strong composition")
    if any(d < 0 for d in delta):
        raise ValueError("delta parts must be non-negative")
    return alpha, delta


def label_spaces(alpha, delta):
    """The per-letter label lists: for each l = 2..m, all fall sets
    (delta_l-subsets of the falls of the previous stage) and all run
    multisets ((alpha_l - delta_l)-multisubsets of [0, k_l - 1])."""
    alpha, delta = _validate_params(alpha, delta)
    n_l, k_l = _prefix_sums(alpha, delta)
    out = []
    for l in range(2, len(alpha) + 1):
        universe = n_l[l - 2] - k_l[l - 2]
        reps = alpha[l - 1] - delta[l - 1]
        if universe < 0 or reps < 0 or delta[0] != 0:
            return [([], []) for _ in range(2, len(alpha) + 1)]
        fall_sets = list(itertools.combinations(range(universe), delta[l - 1]))
        run_sets = list(itertools.combinations_with_replacement(range(k_l[l - 1]), reps))
        out.append((fall_sets, run_sets))
    return out


def phi_inverse(image: PhiImage, alpha, delta) -> Word:
    """Rebuild the word from its edge labels; validates each label."""
    alpha, delta = _validate_params(alpha, delta)
    if delta[0] != 0:
        raise ValueError("delta must start with 0")
    image = tuple((tuple(sorted(f)), tuple(sorted(r))) for f, r in image)
    if len(image) != len(alpha) - 1:
        raise ValueError("image needs one label pair per letter above 1")
    n_l, k_l = _prefix_sums(alpha, delta)
    w = (1,) * alpha[0]
    for l in range(2, len(alpha) + 1):
        falls, runs = image[l - 2]
        if len(falls) != delta[l - 1] or any(
                not 0 <= f < n_l[l - 2] - k_l[l - 2] for f in falls):
            raise ValueError(f"invalid fall set for letter {l}")
        if len(runs) != alpha[l - 1] - delta[l - 1] or any(
                not 0 <= r < k_l[l - 1] for r in runs):
            raise ValueError(f"invalid run multiset for letter {l}")
        w = insert_triple(w, l, falls, runs)
    return w


def leaves(alpha, delta) -> Iterator[Word]:
    """All words of content alpha and cyclic descent type delta ending in 1,
    each exactly once, via the label product."""
    alpha, delta = _validate_params(alpha, delta)
    if delta[0] != 0:
        return
    spaces = label_spaces(alpha, delta)
    per_letter = [list(itertools.product(fs, rs)) for fs, rs in spaces]
    for labels in itertools.product(*per_letter):
        w = (1,) * alpha[0]
        for l, (falls, runs) in enumerate(labels, start=2):
            w = insert_triple(w, l, falls, runs)
        yield w


# ---------------------------------------------------------------------------
# multiplicity-word encoding

def multiplicity_word(elements: Iterable[int], universe_size: int) -> tuple[int, ...]:
    out = [0] * universe_size
    for x in elements:
        out[x] += 1
    return tuple(out)


def image_multiplicity_words(image: PhiImage, alpha, delta):
    """Encode each label pair as a pair of multiplicity words over its
    universe ([0, n_{l-1} - k_{l-1} - 1] for falls, [0, k_l - 1] for runs)."""
    alpha, delta = _validate_params(alpha, delta)
    n_l, k_l = _prefix_sums(alpha, delta)
    out = []
    for l in range(2, len(alpha) + 1):
        falls, runs = image[l - 2]
        out.append((multiplicity_word(falls, n_l[l - 2] - k_l[l - 2]),
                    multiplicity_word(runs, k_l[l - 1])))
    return tuple(out)


def power_image(u, k: int) -> PhiImage:
    """Predicted phi(u^k): each multiplicity word of phi(u), concatenated
    with itself k times, decoded over the universes of u^k."""
    u = as_word(u)
    words = image_multiplicity_words(phi(u), content(u), cdt(u))
    out = []
    for fall_word, run_word in words:
        fall_counts = fall_word * k
        run_counts = run_word * k
        out.append((
            tuple(i for i, c in enumerate(fall_counts) for _ in range(c)),
            tuple(i for i, c in enumerate(run_counts) for _ in range(c)),
        ))
    return tuple(out)
