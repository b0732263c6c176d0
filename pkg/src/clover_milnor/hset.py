"""The affine lattice H(2k+2, j) of degree-(2k+1) Milnor coefficient vectors.

Over all SL-moves, the vector (mu(Sj))_S for non-repeated j-free S of
length 2k+1 sweeps out base + gens * m, where m ranges over integer
vectors indexed by unordered pairs {p, q} (the free linking numbers of
the string link) and gens is assembled from products mu(Jj) mu(Il).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

from .milnor import LongitudeSource, SequenceKey, check_vanishing, format_sequence, mu_table, seq_basis
from .slmove import delta_terms
from .zlattice import IntMatrix, affine_intersection, member, same_span

Pair = tuple[int, int]


def pair_labels(n: int) -> list[Pair]:
    return list(itertools.combinations(range(1, n + 1), 2))


@dataclass(frozen=True)
class AffineLattice:
    n: int
    k: int
    j: int
    basis: tuple[SequenceKey, ...]
    base: tuple[int, ...]
    gens: IntMatrix
    pairs: tuple[Pair, ...]

    def __post_init__(self):
        if len(self.base) != len(self.basis) or self.gens.rows != len(self.basis):
            raise ValueError("base, basis and generator rows must have the same length")
        if self.gens.cols != len(self.pairs):
            raise ValueError("one generator column per pair is required")

    def is_point(self) -> bool:
        return self.gens.is_zero()

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "j": self.j,
            "basis": [list(s) for s in self.basis],
            "base": list(self.base),
            "pairs": [list(p) for p in self.pairs],
            "gens": self.gens.tolist(),
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> AffineLattice:
        basis = tuple(tuple(s) for s in data["basis"])
        pairs = tuple(tuple(p) for p in data["pairs"])
        gens = IntMatrix(len(basis), len(pairs), tuple(tuple(r) for r in data["gens"]))
        return cls(int(data["n"]), int(data["k"]), int(data["j"]), basis, tuple(data["base"]), gens, pairs)

    def point(self, m: Mapping[Pair, int]) -> list[int]:
        """base + gens * m for a choice of linking numbers m[(p, q)], p < q."""
        vec = [m.get(p, 0) for p in self.pairs]
        return [b + x for b, x in zip(self.base, self.gens @ vec)]

    def format_table(self) -> str:
        """One line per monomial X_S: its coefficient as an affine form in the m_pq."""
        lines = [f"H({2 * self.k + 2}, {self.j}) for n={self.n}:"]
        width = max((len(format_sequence(s, self.n)) for s in self.basis), default=1)
        for S, b, row in zip(self.basis, self.base, self.gens.entries):
            terms = []
            for (p, q), c in zip(self.pairs, row):
                if c:
                    mpq = f"m{p}{q}" if self.n <= 9 else f"m{p},{q}"
                    terms.append(f"{c:+d}*{mpq}")
            affine = f"{b}" + ("" if not terms else " " + " ".join(terms))
            lines.append(f"  X_{format_sequence(S, self.n):<{width}} : {affine}")
        return "\n".join(lines)


def lattice_from_mu(mu: Mapping[SequenceKey, int], n: int, k: int, j: int) -> AffineLattice:
    """Build H(2k+2, j) from a table of Milnor numbers (no hypothesis check)."""
    basis = seq_basis(n, j, 2 * k + 1)
    if not basis:
        raise ValueError(f"no non-repeated sequences of length {2 * k + 1} avoid {j} when n={n}")
    pairs = pair_labels(n)
    row_of = {S: r for r, S in enumerate(basis)}
    col_of = {p: c for c, p in enumerate(pairs)}
    gens = [[0] * len(pairs) for _ in basis]
    for pair, mono, c in delta_terms(mu, k, j, n):
        gens[row_of[mono]][col_of[pair]] += c
    try:
        base = tuple(mu[S + (j,)] for S in basis)
    except KeyError as exc:
        raise ValueError(f"missing Milnor number for {exc.args[0]}") from None
    return AffineLattice(n, k, j, tuple(basis), base, IntMatrix.from_rows(gens, len(pairs)), tuple(pairs))


def hset_generators(t: LongitudeSource, k: int, j: int) -> AffineLattice:
    if k < 1:
        raise ValueError("k must be >= 1")
    if not 1 <= j <= t.n:
        raise ValueError(f"index {j} out of range 1..{t.n}")
    if 2 * k + 1 > t.n - 1:
        raise ValueError(f"k={k} is too large for n={t.n}: the coordinate basis is empty")
    # k = 1 needs no hypothesis: length-one Milnor numbers vanish by definition
    if k > 1 and not check_vanishing(t, k, non_repeated_only=True):
        raise ValueError(f"non-repeated Milnor numbers of length <= {k} do not all vanish")
    mu = mu_table(t, 2 * k + 2, non_repeated_only=True)
    return lattice_from_mu(mu, t.n, k, j)


def _check_vector(L: AffineLattice, v: Sequence[int]) -> list[int]:
    v = [int(x) for x in v]
    if len(v) != len(L.basis):
        raise ValueError(f"vector has length {len(v)}, lattice coordinates have {len(L.basis)}")
    return v


def hset_member(L: AffineLattice, v: Sequence[int]) -> bool:
    v = _check_vector(L, v)
    return member(L.gens, [a - b for a, b in zip(v, L.base)]) is not None


def _check_compatible(L1: AffineLattice, L2: AffineLattice) -> None:
    if L1.basis != L2.basis:
        raise ValueError("lattices use different coordinate bases")


def hset_intersection(L1: AffineLattice, L2: AffineLattice):
    """zlattice.Solution for base1 + gens1 m = base2 + gens2 m'."""
    _check_compatible(L1, L2)
    return affine_intersection(L1.base, L1.gens, L2.base, L2.gens)


def hset_intersects(L1: AffineLattice, L2: AffineLattice) -> bool:
    return hset_intersection(L1, L2).solvable


def lattices_equal(L1: AffineLattice, L2: AffineLattice) -> bool:
    """Same affine set: each base lies in the other lattice and the spans coincide."""
    _check_compatible(L1, L2)
    return hset_member(L1, L2.base) and hset_member(L2, L1.base) and same_span(L1.gens, L2.gens)
