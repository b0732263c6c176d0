"""SL-moves on bottom tangles, computed on longitudes in the truncated Magnus ring.

A string link u with longitudes u_1..u_n (words in its own meridians
z_1..z_n) is stacked under a bottom tangle gamma.  In the new tangle the
old meridians and longitudes become

    alpha_i  = u_i^-1 alpha'_i u_i,
    lambda'_j = u_j lambda_j u_j^-1,

where u_i is now read with z_l replaced by the commutator
beta_l = [lambda'_l, alpha'_l].  Because beta_l depends on the new
longitudes, the expansions E(lambda'_j) are the fixed point of that
system; each pass fixes at least one more degree, so the iteration stops
after at most q passes.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .magnus import MagnusSeries, commutator_series, evaluate_word, expand, inverse, mul, substitute
from .milnor import (
    SequenceKey,
    SeriesPresentation,
    TanglePresentation,
    check_vanishing,
    delta_k,
    iter_sequences,
    milnor_number,
)

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class LinkingMatrix:
    """Symmetric pairwise linking numbers m[p, q] (1-based); the diagonal is ignored."""

    n: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        ent = tuple(tuple(int(x) for x in row) for row in self.entries)
        if len(ent) != self.n or any(len(r) != self.n for r in ent):
            raise ValueError(f"linking matrix must be {self.n}x{self.n}")
        for p in range(self.n):
            for q in range(p + 1, self.n):
                if ent[p][q] != ent[q][p]:
                    raise ValueError(f"linking matrix not symmetric at ({p + 1}, {q + 1})")
        object.__setattr__(self, "entries", ent)

    @classmethod
    def from_pairs(cls, n: int, values: Mapping[tuple[int, int], int]) -> LinkingMatrix:
        rows = [[0] * n for _ in range(n)]
        for (p, q), v in values.items():
            if p == q:
                continue
            rows[p - 1][q - 1] = rows[q - 1][p - 1] = int(v)
        return cls(n, tuple(tuple(r) for r in rows))

    def __getitem__(self, pq: tuple[int, int]) -> int:
        p, q = pq
        if p == q:
            return 0
        return self.entries[p - 1][q - 1]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def linking_of(u: TanglePresentation) -> LinkingMatrix:
    """m[l, i] = coefficient of Z_l in E_Z(u_i); asymmetric data is rejected."""
    n = u.n
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        s = expand(u.longitudes[i - 1], 2)
        for l in range(1, n + 1):
            if l != i:
                rows[l - 1][i - 1] = s.coefficient((l,))
    for p in range(n):
        for q in range(p + 1, n):
            if rows[p][q] != rows[q][p]:
                raise ValueError(
                    f"string link longitudes give mu({p + 1}{q + 1}) = {rows[p][q]} but "
                    f"mu({q + 1}{p + 1}) = {rows[q][p]}; not realizable"
                )
    return LinkingMatrix(n, tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class SLMoveInput:
    gamma: TanglePresentation
    u: TanglePresentation
    q: int

    def __post_init__(self):
        if self.gamma.n != self.u.n:
            raise ValueError(f"gamma has {self.gamma.n} components but u has {self.u.n}")
        if self.q < 1:
            raise ValueError("truncation degree must be >= 1")


def transform(move: SLMoveInput) -> list[MagnusSeries]:
    """E(lambda'_j), j = 1..n, truncated at degree q, for the tangle after the SL-move."""
    gamma, u, q = move.gamma, move.u, move.q
    n = gamma.n
    gens = [MagnusSeries.variable(n, q, i) for i in range(1, n + 1)]
    one = MagnusSeries.one(n, q)
    meridian = [one + y for y in gens]
    meridian_inv = [inverse(a) for a in meridian]
    u_series = [expand(w, q) for w in u.longitudes]
    trivial_u = all(not w.letters for w in u.longitudes)

    current = [expand(w, q) for w in gamma.longitudes]
    if trivial_u:
        return current
    for _ in range(q + 1):
        beta = {
            l: commutator_series(current[l - 1], meridian[l - 1]) - one for l in range(1, n + 1)
        }
        U = [substitute(s, beta) for s in u_series]
        U_inv = [inverse(x) for x in U]
        old_meridian = [mul(mul(U_inv[i], meridian[i]), U[i]) for i in range(n)]
        old_meridian_inv = [mul(mul(U_inv[i], meridian_inv[i]), U[i]) for i in range(n)]
        nxt = [
            mul(mul(U[j], evaluate_word(gamma.longitudes[j], old_meridian, old_meridian_inv)), U_inv[j])
            for j in range(n)
        ]
        if nxt == current:
            return current
        current = nxt
    raise RuntimeError(f"SL-move fixed point did not stabilise within {q + 1} passes")


def sl_move(gamma: TanglePresentation, u: TanglePresentation, q: int) -> SeriesPresentation:
    """Convenience wrapper returning the moved tangle as a series presentation."""
    return SeriesPresentation(gamma.n, tuple(transform(SLMoveInput(gamma, u, q))))


def delta_terms(mu: Mapping[SequenceKey, int], k: int, j: int, n: int) -> Iterator[tuple[tuple[int, int], Monomial, int]]:
    """Yield (pair, monomial, coefficient) for the degree-(2k+1) correction.

    Each term contributes coefficient * m[pair] * Y_monomial, summed over
    |J| = |I| = k with JIl non-repeated and avoiding j.  Pairs are sorted.
    """
    others = [i for i in range(1, n + 1) if i != j]
    missing = set()
    for seq in itertools.permutations(others, 2 * k + 1):
        J, I, l = seq[:k], seq[k : 2 * k], seq[2 * k]
        try:
            c = mu[J + (j,)] * mu[I + (l,)]
        except KeyError as exc:
            missing.add(exc.args[0])
            continue
        if c == 0:
            continue
        for s, i_s in enumerate(J):
            pre, post = J[:s], J[s + 1 :]
            pair = (min(l, i_s), max(l, i_s))
            yield pair, pre + (i_s,) + I + (l,) + post, c
            yield pair, pre + (i_s, l) + I + post, -c
            yield pair, pre + I + (l, i_s) + post, -c
            yield pair, pre + (l,) + I + (i_s,) + post, c
        pair = (min(l, j), max(l, j))
        yield pair, I + (l,) + J, c
        yield pair, (l,) + I + J, -c
        yield pair, J + I + (l,), -c
        yield pair, J + (l,) + I, c
    if missing:
        raise ValueError(f"missing Milnor numbers for sequences {sorted(missing)}")


def prop_delta_formula(mu: Mapping[SequenceKey, int], m: LinkingMatrix, k: int, j: int, n: int) -> dict[Monomial, int]:
    """Predicted change of sum_S mu(Sj) Y_S over non-repeated j-free S with |S| = 2k+1."""
    out: dict[Monomial, int] = defaultdict(int)
    for (p, q), mono, c in delta_terms(mu, k, j, n):
        out[mono] += c * m[p, q]
    return {mono: c for mono, c in out.items() if c}


def verify_congruence(gamma: TanglePresentation, u: TanglePresentation, seq: Sequence[int], k: int) -> bool:
    """mu'(I) == mu(I) mod delta^k(I) for the tangle obtained by the SL-move."""
    if not check_vanishing(gamma, k):
        raise ValueError(f"Milnor numbers of length <= {k} do not all vanish")
    seq = tuple(seq)
    moved = sl_move(gamma, u, max(len(seq) - 1, 1))
    return _congruent(milnor_number(moved, seq), milnor_number(gamma, seq), delta_k(gamma, seq, k))


def _congruent(a: int, b: int, modulus: int) -> bool:
    return (a - b) % modulus == 0 if modulus else a == b


@dataclass(frozen=True)
class CongruenceRow:
    seq: SequenceKey
    before: int
    after: int
    modulus: int

    @property
    def ok(self) -> bool:
        return _congruent(self.after, self.before, self.modulus)


def congruence_report(gamma: TanglePresentation, u: TanglePresentation, k: int, max_len: int,
                      non_repeated_only: bool = False) -> list[CongruenceRow]:
    """Check the delta^k congruence for every sequence up to ``max_len`` with one transform."""
    if not check_vanishing(gamma, k):
        raise ValueError(f"Milnor numbers of length <= {k} do not all vanish")
    moved = sl_move(gamma, u, max(max_len - 1, 1))
    rows = []
    for length in range(1, max_len + 1):
        for seq in iter_sequences(gamma.n, length, non_repeated_only):
            rows.append(CongruenceRow(seq, milnor_number(gamma, seq), milnor_number(moved, seq),
                                      delta_k(gamma, seq, k)))
    return rows
