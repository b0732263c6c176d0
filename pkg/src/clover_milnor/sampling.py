"""Seeded random presentations for property runs."""

from __future__ import annotations

import random

from .milnor import TanglePresentation
from .word import GroupWord, Letter, exponent_sum, iterated_commutator, reduce


def random_word(rng: random.Random, n: int, length: int) -> GroupWord:
    letters = tuple(Letter(rng.randint(1, n), rng.choice((1, -1))) for _ in range(length))
    return reduce(GroupWord(n, letters))


def zero_framed(w: GroupWord, i: int) -> GroupWord:
    """Append alpha_i^-e so that the exponent sum of alpha_i becomes 0."""
    return w * GroupWord.generator(w.n, i, -exponent_sum(w, i))


def random_commutator_product(rng: random.Random, n: int, weight: int, count: int) -> GroupWord:
    """Product of ``count`` random left-normed commutators of the given weight (an element of G_weight)."""
    w = GroupWord.identity(n)
    for _ in range(count):
        c = iterated_commutator([GroupWord.generator(n, rng.randint(1, n)) for _ in range(weight)])
        if rng.random() < 0.5:
            c = ~c
        if rng.random() < 0.3:
            g = random_word(rng, n, 2)
            c = g * c * ~g
        w = w * c
    return w


def random_gamma(rng: random.Random, n: int, k: int, size: int = 3) -> TanglePresentation:
    """Random zero-framed presentation whose Milnor numbers of length <= k all vanish."""
    if k <= 1:
        longs = [zero_framed(random_word(rng, n, 2 * size), i) for i in range(1, n + 1)]
    else:
        longs = [
            random_commutator_product(rng, n, k, size) * random_commutator_product(rng, n, k + 1, 1)
            for _ in range(n)
        ]
    return TanglePresentation(n, longs)


def random_string_link(rng: random.Random, n: int, link_range: int = 2, noise: int = 1) -> TanglePresentation:
    """Longitudes with symmetric random linking numbers in [-link_range, link_range] plus commutator noise."""
    lk = [[0] * n for _ in range(n)]
    for p in range(n):
        for q in range(p + 1, n):
            lk[p][q] = lk[q][p] = rng.randint(-link_range, link_range)
    longs = []
    for i in range(1, n + 1):
        w = GroupWord.identity(n)
        for l in rng.sample(range(1, n + 1), n):
            if l != i:
                w = w * GroupWord.generator(n, l, lk[l - 1][i - 1])
        if noise:
            w = w * random_commutator_product(rng, n, 2, noise)
        longs.append(zero_framed(w, i))
    return TanglePresentation(n, longs)
