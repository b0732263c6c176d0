"""Milnor numbers of bottom tangles presented by their longitudes.

For a sequence I = i_1 ... i_{m-1} j the Milnor number mu(I) is the
coefficient of X_{i_1} ... X_{i_{m-1}} in the Magnus expansion of the j-th
longitude; length-one sequences have mu = 0 by definition.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Protocol, Sequence

from .magnus import MagnusSeries, expand
from .word import GroupWord, exponent_sum

SequenceKey = tuple[int, ...]


class LongitudeSource(Protocol):
    n: int

    def longitude_series(self, j: int, q: int) -> MagnusSeries:
        """Expansion of the j-th longitude, valid at least through degree q."""


@lru_cache(maxsize=4096)
def _expansion(word: GroupWord, q: int) -> MagnusSeries:
    return expand(word, q)


@dataclass(frozen=True)
class TanglePresentation:
    """n longitude words lambda_1..lambda_n, each in the meridians alpha_1..alpha_n.

    The framing convention exponent_sum(lambda_i, i) == 0 is enforced unless
    ``check_framing=False``.
    """

    n: int
    longitudes: tuple[GroupWord, ...]
    check_framing: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "longitudes", tuple(self.longitudes))
        if self.n < 1:
            raise ValueError("a tangle needs at least one component")
        if len(self.longitudes) != self.n:
            raise ValueError(f"expected {self.n} longitudes, got {len(self.longitudes)}")
        for i, w in enumerate(self.longitudes, start=1):
            if w.n != self.n:
                raise ValueError(f"longitude {i} is a word over {w.n} generators, expected {self.n}")
            if self.check_framing and exponent_sum(w, i) != 0:
                raise ValueError(
                    f"longitude {i} has exponent sum {exponent_sum(w, i)} in alpha_{i}; "
                    "longitudes must be zero-framed (pass check_framing=False to override)"
                )

    @classmethod
    def trivial(cls, n: int) -> TanglePresentation:
        return cls(n, tuple(GroupWord.identity(n) for _ in range(n)))

    @classmethod
    def from_dict(cls, data: Mapping, check_framing: bool = True) -> TanglePresentation:
        try:
            n = int(data["n"])
            words = data["longitudes"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"tangle document needs 'n' and 'longitudes': {exc}") from None
        if not isinstance(words, list):
            raise ValueError("'longitudes' must be a list of words")
        return cls(n, tuple(GroupWord.from_pairs(n, w) for w in words), check_framing=check_framing)

    def to_dict(self) -> dict:
        return {"n": self.n, "longitudes": [w.to_pairs() for w in self.longitudes]}

    def longitude_series(self, j: int, q: int) -> MagnusSeries:
        return _expansion(self.longitudes[j - 1], max(q, 1))

    def is_abelian_trivial(self) -> bool:
        """Literal reading of 'lambda_i trivial in G/G_2': every exponent sum vanishes."""
        return all(exponent_sum(w, i) == 0 for w in self.longitudes for i in range(1, self.n + 1))


@dataclass(frozen=True)
class SeriesPresentation:
    """Longitudes given directly as truncated Magnus series (e.g. the output of an SL-move)."""

    n: int
    series: tuple[MagnusSeries, ...]

    def __post_init__(self):
        object.__setattr__(self, "series", tuple(self.series))
        if len(self.series) != self.n:
            raise ValueError(f"expected {self.n} series, got {len(self.series)}")
        for s in self.series:
            if s.n != self.n:
                raise ValueError("series variable count does not match n")

    @property
    def q(self) -> int:
        return min(s.q for s in self.series)

    def longitude_series(self, j: int, q: int) -> MagnusSeries:
        s = self.series[j - 1]
        if q > s.q:
            raise ValueError(f"series only known up to degree {s.q}, degree {q} requested")
        return s


def _check_seq(n: int, seq: Sequence[int]) -> SequenceKey:
    seq = tuple(int(i) for i in seq)
    if not seq:
        raise ValueError("sequence must be nonempty")
    for i in seq:
        if not 1 <= i <= n:
            raise ValueError(f"index {i} out of range 1..{n}")
    return seq


def is_non_repeated(seq: Sequence[int]) -> bool:
    return len(set(seq)) == len(seq)


def parse_sequence(text: str, n: int | None = None) -> SequenceKey:
    """'1234' (digits, for n <= 9) or '10,2,3'."""
    text = text.strip()
    if "," in text:
        seq = tuple(int(x) for x in text.split(",") if x.strip())
    elif text.isdigit():
        if n is not None and n > 9:
            raise ValueError("use comma-separated indices when n > 9")
        seq = tuple(int(c) for c in text)
    else:
        raise ValueError(f"cannot parse sequence {text!r}")
    if n is not None:
        _check_seq(n, seq)
    return seq


def format_sequence(seq: Sequence[int], n: int | None = None) -> str:
    if (n is not None and n > 9) or any(i > 9 for i in seq):
        return ",".join(str(i) for i in seq)
    return "".join(str(i) for i in seq)


def iter_sequences(n: int, length: int, non_repeated: bool = False) -> Iterator[SequenceKey]:
    if non_repeated:
        yield from itertools.permutations(range(1, n + 1), length)
    else:
        yield from itertools.product(range(1, n + 1), repeat=length)


def milnor_number(t: LongitudeSource, seq: Sequence[int]) -> int:
    seq = _check_seq(t.n, seq)
    if len(seq) == 1:
        return 0
    return t.longitude_series(seq[-1], len(seq) - 1).coefficient(seq[:-1])


def mu_table(t: LongitudeSource, max_len: int, non_repeated_only: bool = False) -> dict[SequenceKey, int]:
    """Every mu(I) with |I| <= max_len, each longitude expanded once."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    series = {j: t.longitude_series(j, max_len - 1) for j in range(1, t.n + 1)} if max_len > 1 else {}
    table: dict[SequenceKey, int] = {}
    for length in range(1, max_len + 1):
        for seq in iter_sequences(t.n, length, non_repeated_only):
            table[seq] = 0 if length == 1 else series[seq[-1]].coefficient(seq[:-1])
    return table


def gcd_all(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = math.gcd(g, int(v))
    return g


def subsequences(seq: Sequence[int], min_len: int, max_len: int) -> list[SequenceKey]:
    """Distinct order-preserving subsequences with lengths in [min_len, max_len]."""
    seen: dict[SequenceKey, None] = {}
    for r in range(max(min_len, 0), min(max_len, len(seq)) + 1):
        for pos in itertools.combinations(range(len(seq)), r):
            seen[tuple(seq[p] for p in pos)] = None
    return list(seen)


def delta_k_subsequences(seq: Sequence[int], k: int) -> list[SequenceKey]:
    return subsequences(seq, 1, len(seq) - (k + 1))


def delta_k(t: LongitudeSource, seq: Sequence[int], k: int) -> int:
    """gcd of |mu(J)| over subsequences J of I with at least k+1 indices removed (no cyclic permutations)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    seq = _check_seq(t.n, seq)
    return gcd_all(milnor_number(t, J) for J in delta_k_subsequences(seq, k))


def delta_link(t: LongitudeSource, seq: Sequence[int]) -> int:
    """Classical indeterminacy: gcd of mu over cyclic permutations of proper subsequences."""
    seq = _check_seq(t.n, seq)
    if len(seq) < 2:
        raise ValueError("Delta(I) needs |I| >= 2")
    cyc: dict[SequenceKey, None] = {}
    for J in subsequences(seq, 1, len(seq) - 1):
        for r in range(len(J)):
            cyc[J[r:] + J[:r]] = None
    return gcd_all(milnor_number(t, J) for J in cyc)


def reduce_mod(value: int, modulus: int) -> int:
    return value % modulus if modulus else value


def mu_bar(t: LongitudeSource, seq: Sequence[int]) -> tuple[int, int]:
    """(residue, modulus) of mu(I) modulo Delta(I); modulus 0 means the exact integer."""
    modulus = delta_link(t, seq)
    return reduce_mod(milnor_number(t, seq), modulus), modulus


def check_vanishing(t: LongitudeSource, k: int, non_repeated_only: bool = False) -> bool:
    """True iff mu(J) = 0 for every J with |J| <= k (non-repeated J only when flagged)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return True
    table = mu_table(t, k, non_repeated_only)
    return not any(table.values())


def seq_basis(n: int, j: int, length: int) -> list[SequenceKey]:
    """Non-repeated sequences of the given length avoiding j, in lexicographic order."""
    if not 1 <= j <= n:
        raise ValueError(f"index {j} out of range 1..{n}")
    if length > n - 1:
        warnings.warn(f"no non-repeated sequences of length {length} avoid {j} when n={n}", stacklevel=2)
        return []
    others = [i for i in range(1, n + 1) if i != j]
    return list(itertools.permutations(others, length))
