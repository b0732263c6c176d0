"""Edge-homotopy classification of 4-clover links from bottom-tangle presentations.

Two presentations are equivalent iff their non-repeated Milnor numbers of
length 2 and 3 agree and their lattices H(4, 4) meet.  The presentations
are assumed to come from disk/band surfaces of the clover links.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .hset import AffineLattice, hset_generators, hset_intersection
from .milnor import LongitudeSource, SequenceKey, iter_sequences, mu_table
from .zlattice import Solution

N_LEAVES = 4
K = 1
J = 4


class Verdict(str, enum.Enum):
    EQUIVALENT = "equivalent"
    INEQUIVALENT = "inequivalent"

    def __str__(self) -> str:
        return self.value


def _require_four(t: LongitudeSource) -> None:
    if t.n != N_LEAVES:
        raise ValueError(f"4-clover classification needs n = 4, got n = {t.n}")


def fingerprint(t: LongitudeSource) -> dict[SequenceKey, int]:
    """mu(I) for every non-repeated I with |I| in {2, 3}."""
    _require_four(t)
    table = mu_table(t, 3, non_repeated_only=True)
    return {I: table[I] for length in (2, 3) for I in iter_sequences(N_LEAVES, length, True)}


@dataclass
class Comparison:
    verdict: Verdict
    differing: dict[SequenceKey, tuple[int, int]] = field(default_factory=dict)
    lattices: tuple[AffineLattice, AffineLattice] | None = None
    intersection: Solution | None = None

    def explain(self) -> str:
        if self.differing:
            lines = ["Milnor numbers differ:"]
            for I, (a, b) in self.differing.items():
                lines.append(f"  mu({''.join(map(str, I))}): {a} vs {b}")
            return "\n".join(lines)
        sol = self.intersection
        if sol is None:
            return ""
        if sol.solvable:
            L1 = self.lattices[0]
            half = len(L1.pairs)
            m1 = dict(zip(L1.pairs, sol.x[:half]))
            m2 = dict(zip(L1.pairs, sol.x[half:]))
            return (f"common point {L1.point(m1)} of H(4,4)\n"
                    f"  m  = {_fmt_pairs(m1)}\n  m' = {_fmt_pairs(m2)}")
        return ("H(4,4) lattices are disjoint: after Hermite reduction the system "
                f"base1 + G1 m = base2 + G2 m' leaves residual {list(sol.residual)} "
                f"(blocked at coordinate row {sol.blocking_row})")


def _fmt_pairs(m: dict) -> str:
    return ", ".join(f"m{p}{q}={v}" for (p, q), v in m.items())


def compare_4clover(t1: LongitudeSource, t2: LongitudeSource) -> Comparison:
    _require_four(t1)
    _require_four(t2)
    f1, f2 = fingerprint(t1), fingerprint(t2)
    diff = {I: (f1[I], f2[I]) for I in f1 if f1[I] != f2[I]}
    if diff:
        return Comparison(Verdict.INEQUIVALENT, diff)
    L1, L2 = hset_generators(t1, K, J), hset_generators(t2, K, J)
    sol = hset_intersection(L1, L2)
    verdict = Verdict.EQUIVALENT if sol.solvable else Verdict.INEQUIVALENT
    return Comparison(verdict, {}, (L1, L2), sol)


def classify_4clover(t1: LongitudeSource, t2: LongitudeSource) -> Verdict:
    return compare_4clover(t1, t2).verdict
