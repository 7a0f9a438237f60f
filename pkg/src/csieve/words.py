"""Words over the positive integers: statistics, rotation, necklaces.

A word is a tuple of letters >= 1.  All statistic outputs use 1-based
positions.  Compositions are plain tuples of non-negative integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

Word = tuple[int, ...]
Composition = tuple[int, ...]


def as_word(letters: Iterable[int]) -> Word:
    w = tuple(int(x) for x in letters)
    if any(x < 1 for x in w):
        raise ValueError("word letters must be >= 1")
    return w


# ---------------------------------------------------------------------------
# compositions

def is_strong(alpha: Iterable[int]) -> bool:
    alpha = tuple(alpha)
    return all(a > 0 for a in alpha)


def strip_trailing_zeros(alpha: Iterable[int]) -> Composition:
    alpha = tuple(alpha)
    while alpha and alpha[-1] == 0:
        alpha = alpha[:-1]
    return alpha


def compositions_equal(a: Iterable[int], b: Iterable[int]) -> bool:
    """Equality ignoring trailing zeros; interior zeros are significant."""
    return strip_trailing_zeros(a) == strip_trailing_zeros(b)


def pad_to(alpha: Iterable[int], length: int) -> Composition:
    alpha = tuple(alpha)
    if len(alpha) > length:
        raise ValueError(f"composition longer than {length}")
    return alpha + (0,) * (length - len(alpha))


def strong_compositions(n: int, parts: int) -> Iterator[Composition]:
    """All strong compositions of n into exactly `parts` positive parts."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    if parts == 1:
        if n >= 1:
            yield (n,)
        return
    for first in range(1, n - parts + 2):
        for rest in strong_compositions(n - first, parts - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# statistics

def content(w: Iterable[int]) -> Composition:
    """Composition whose j-th part counts occurrences of the letter j."""
    w = tuple(w)
    if not w:
        return ()
    parts = [0] * max(w)
    for x in w:
        parts[x - 1] += 1
    return tuple(parts)


def descent_set(w) -> set[int]:
    """Positions i (1-based, i < n) with w_i > w_{i+1}."""
    return {i for i in range(1, len(w)) if w[i - 1] > w[i]}


def cyclic_descent_set(w) -> set[int]:
    """Descent positions, plus n when w_n > w_1."""
    s = descent_set(w)
    if w and w[-1] > w[0]:
        s.add(len(w))
    return s


def des(w) -> int:
    return len(descent_set(w))


def cdes(w) -> int:
    return len(cyclic_descent_set(w))


def maj(w) -> int:
    """Major index: sum of descent positions."""
    return sum(descent_set(w))


def comaj(w) -> int:
    """Sum of weak-ascent positions i < n; equals n(n-1)/2 - maj(w)."""
    n = len(w)
    return n * (n - 1) // 2 - maj(w)


def inv(w) -> int:
    """Number of inverted pairs i < j with w_i > w_j."""
    w = tuple(w)
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def cdt(w) -> Composition:
    """Cyclic descent type: new cyclic descents at each step of the
    letter-by-letter filtration.  Length equals the maximum letter; the
    first entry is always 0."""
    w = tuple(w)
    if not w:
        return ()
    m = max(w)
    out = []
    prev = 0
    for level in range(1, m + 1):
        sub = [x for x in w if x <= level] if level < m else list(w)
        ln = len(sub)
        c = sum(1 for i in range(ln) if sub[i] > sub[(i + 1) % ln]) if ln else 0
        out.append(c - prev)
        prev = c
    return tuple(out)


# ---------------------------------------------------------------------------
# rotation and necklaces

def rotate(w: Iterable[int], steps: int) -> Word:
    """One positive step moves the last letter to the front."""
    w = tuple(w)
    n = len(w)
    if n == 0:
        return w
    s = steps % n
    return w[-s:] + w[:-s] if s else w


@dataclass(frozen=True)
class Necklace:
    representative: Word          # lexicographically least rotation
    members: tuple[Word, ...]     # distinct rotations, lex sorted
    period: int
    frequency: int


def necklace(w: Iterable[int]) -> Necklace:
    w = tuple(w)
    if not w:
        raise ValueError("necklace of the empty word is undefined")
    members = tuple(sorted({rotate(w, s) for s in range(len(w))}))
    p = len(members)
    return Necklace(members[0], members, p, len(w) // p)


def period(w) -> int:
    return necklace(w).period


def freq(w) -> int:
    return necklace(w).frequency


def lex(w) -> int:
    """0-based index of w among the lex-sorted members of its necklace."""
    w = tuple(w)
    return necklace(w).members.index(w)


def flex(w) -> int:
    """freq(w) * lex(w); a universal cyclic sieving statistic."""
    nk = necklace(tuple(w))
    return nk.frequency * nk.members.index(tuple(w))


# ---------------------------------------------------------------------------
# enumeration

def enumerate_by_content(alpha: Iterable[int]) -> Iterator[Word]:
    """All words with content alpha, in lexicographic order."""
    counts = [int(a) for a in alpha]
    if any(a < 0 for a in counts):
        raise ValueError("content parts must be non-negative")
    n = sum(counts)
    word: list[int] = []

    def rec() -> Iterator[Word]:
        if len(word) == n:
            yield tuple(word)
            return
        for j in range(len(counts)):
            if counts[j]:
                counts[j] -= 1
                word.append(j + 1)
                yield from rec()
                word.pop()
                counts[j] += 1

    yield from rec()


def enumerate_by_content_cdt(alpha, delta) -> Iterator[Word]:
    """Words with content alpha and cyclic descent type delta (comparison
    ignores trailing zeros), in lexicographic order."""
    delta = strip_trailing_zeros(delta)
    for w in enumerate_by_content(alpha):
        if strip_trailing_zeros(cdt(w)) == delta:
            yield w


def gcd_of_content_and_cdt(alpha, delta) -> int:
    parts = tuple(alpha) + tuple(delta)
    g = math.gcd(*parts) if parts else 0
    if g == 0:
        raise ValueError("gcd undefined for all-zero input")
    return g
