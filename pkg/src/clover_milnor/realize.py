"""Recover a group word from a truncated Magnus series that lies in the image of E.

Degree by degree, the lowest nonzero part of E(w)^-1 * s is a Lie
polynomial; it is written in the Lyndon basis of the free Lie ring (a
Z-basis) by solving an integer system, and the matching product of
basic commutators is appended to w.
"""

from __future__ import annotations

from functools import lru_cache

from .magnus import MagnusSeries, expand, inverse, mul
from .word import GroupWord, commutator
from .zlattice import IntMatrix, solve


def lyndon_words(n: int, length: int) -> list[tuple[int, ...]]:
    """Lyndon words of the given length over 1..n (Duval), in lexicographic order."""
    out = []
    w = [0]
    while w:
        if len(w) == length:
            out.append(tuple(x + 1 for x in w))
        m = len(w)
        while len(w) < length:
            w.append(w[len(w) - m])
        while w and w[-1] == n - 1:
            w.pop()
        if w:
            w[-1] += 1
    return out


def _is_lyndon(w: tuple[int, ...]) -> bool:
    return all(w < w[i:] for i in range(1, len(w)))


@lru_cache(maxsize=None)
def bracket_word(n: int, lyndon: tuple[int, ...]) -> GroupWord:
    """Group commutator following the standard bracketing of a Lyndon word."""
    if len(lyndon) == 1:
        return GroupWord.generator(n, lyndon[0])
    # split off the longest proper Lyndon suffix
    for cut in range(1, len(lyndon)):
        if _is_lyndon(lyndon[cut:]):
            break
    return commutator(bracket_word(n, lyndon[:cut]), bracket_word(n, lyndon[cut:]))


@lru_cache(maxsize=None)
def _lie_matrix(n: int, d: int) -> tuple[IntMatrix, tuple[tuple[int, ...], ...]]:
    words = tuple(lyndon_words(n, d))
    cols = [list(expand(bracket_word(n, w), d).part(d)) for w in words]
    return IntMatrix.from_columns(cols, n**d), words


def realize(s: MagnusSeries) -> GroupWord:
    """A word w with expand(w, s.q) == s; ValueError if s is not group-like."""
    n, q = s.n, s.q
    if s.constant != 1:
        raise ValueError("group-like series have constant term 1")
    w = GroupWord.identity(n)
    for d in range(1, q + 1):
        r = mul(inverse(expand(w, q)), s)
        low = r.min_degree(1)
        if low is None:
            break
        if low < d:
            raise ValueError(f"series is not group-like (degree {low} residue persists)")
        if low > d:
            continue
        A, words = _lie_matrix(n, d)
        sol = solve(A, [int(x) for x in r.part(d)])
        if not sol.solvable:
            raise ValueError(f"degree-{d} part is not in the free Lie ring; series is not group-like")
        for lw, c in zip(words, sol.x):
            if c:
                w = w * bracket_word(n, lw) ** c
    if expand(w, q) != s:
        raise ValueError("series is not group-like")
    return w
