"""Truncated non-commutative power series with integer coefficients and the Magnus expansion.

A series in variables X_1..X_n truncated above degree q is stored densely,
one flat array per degree.  The degree-d array has n**d entries and the
monomial X_{i_1}...X_{i_d} sits at index sum((i_k - 1) * n**(d - k)), so
that within a degree entries are in lexicographic order and a product of
homogeneous parts is a Kronecker (outer) product.

Arrays are int64 while every coefficient is known to fit, and are promoted
to Python-int object arrays whenever a bound on the result could overflow,
so all arithmetic is exact.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .word import GroupWord, Letter

Monomial = tuple[int, ...]

_LIMIT = 2**62


def _maxabs(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    return int(np.abs(arr).max())


def _cast(arr: np.ndarray, big: bool) -> np.ndarray:
    if big:
        return arr if arr.dtype == object else arr.astype(object)
    return arr if arr.dtype == np.int64 else arr.astype(np.int64)


def _settle(arr: np.ndarray) -> np.ndarray:
    """Drop back to int64 when an object array turns out to be small."""
    if arr.dtype == object and _maxabs(arr) < _LIMIT:
        return arr.astype(np.int64)
    return arr


class MagnusSeries:
    """Element of Z<<X_1..X_n>> modulo terms of degree > q."""

    __slots__ = ("n", "q", "_parts", "_maxes")

    def __init__(self, n: int, q: int, parts: Sequence[np.ndarray]):
        if n < 1:
            raise ValueError("need at least one variable")
        if q < 0:
            raise ValueError("truncation degree must be >= 0")
        if len(parts) != q + 1:
            raise ValueError(f"expected {q + 1} homogeneous parts, got {len(parts)}")
        fixed = []
        for d, p in enumerate(parts):
            p = np.asarray(p)
            if p.shape != (n**d,):
                raise ValueError(f"degree-{d} part must have shape ({n**d},), got {p.shape}")
            if p.dtype != object and p.dtype != np.int64:
                p = p.astype(np.int64)
            fixed.append(_settle(p))
        self.n = n
        self.q = q
        self._parts = tuple(fixed)
        self._maxes: tuple[int, ...] | None = None

    # -- construction -----------------------------------------------------

    @classmethod
    def zero(cls, n: int, q: int) -> MagnusSeries:
        return cls(n, q, [np.zeros(n**d, dtype=np.int64) for d in range(q + 1)])

    @classmethod
    def one(cls, n: int, q: int) -> MagnusSeries:
        s = cls.zero(n, q)
        s._parts[0][0] = 1
        return s

    @classmethod
    def variable(cls, n: int, q: int, i: int) -> MagnusSeries:
        return cls.from_terms(n, q, {(i,): 1})

    @classmethod
    def from_terms(cls, n: int, q: int, terms: Mapping[Sequence[int], int] | Iterable) -> MagnusSeries:
        """Build from ``{monomial: coeff}`` or an iterable of ``(monomial, coeff)``.

        Terms of degree above q are dropped.
        """
        items = terms.items() if isinstance(terms, Mapping) else terms
        parts: list[np.ndarray] = [np.zeros(n**d, dtype=object) for d in range(q + 1)]
        for mono, c in items:
            mono = tuple(int(i) for i in mono)
            if len(mono) > q:
                continue
            parts[len(mono)][_index(mono, n)] += int(c)
        return cls(n, q, parts)

    @classmethod
    def from_serializable(cls, n: int, q: int, data: Iterable) -> MagnusSeries:
        return cls.from_terms(n, q, [(tuple(m), c) for m, c in data])

    # -- access -----------------------------------------------------------

    def part(self, d: int) -> np.ndarray:
        """Degree-d coefficients as a flat array in lexicographic monomial order."""
        return self._parts[d]

    @property
    def maxes(self) -> tuple[int, ...]:
        if self._maxes is None:
            self._maxes = tuple(_maxabs(p) for p in self._parts)
        return self._maxes

    @property
    def constant(self) -> int:
        return int(self._parts[0][0])

    def coefficient(self, mono: Sequence[int]) -> int:
        mono = tuple(mono)
        if len(mono) > self.q:
            raise ValueError(f"monomial of degree {len(mono)} exceeds truncation degree {self.q}")
        return int(self._parts[len(mono)][_index(mono, self.n)])

    __getitem__ = coefficient

    def min_degree(self, start: int = 0) -> int | None:
        """Lowest degree >= start carrying a nonzero coefficient (None if none)."""
        for d in range(start, self.q + 1):
            if self.maxes[d]:
                return d
        return None

    def terms(self) -> Iterator[tuple[Monomial, int]]:
        """Nonzero terms, shorter monomials first, then lexicographic."""
        for d, p in enumerate(self._parts):
            for idx in np.flatnonzero(p):
                yield _decode(int(idx), d, self.n), int(p[idx])

    def to_dict(self) -> dict[Monomial, int]:
        return dict(self.terms())

    def to_serializable(self) -> list:
        return [[list(m), c] for m, c in self.terms()]

    def truncate(self, q: int) -> MagnusSeries:
        if q > self.q:
            extra = [np.zeros(self.n**d, dtype=np.int64) for d in range(self.q + 1, q + 1)]
            return MagnusSeries(self.n, q, list(self._parts) + extra)
        return MagnusSeries(self.n, q, self._parts[: q + 1])

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: MagnusSeries) -> None:
        if not isinstance(other, MagnusSeries):
            raise TypeError(f"expected MagnusSeries, got {type(other).__name__}")
        if (self.n, self.q) != (other.n, other.q):
            raise ValueError(
                f"series shapes differ: (n={self.n}, q={self.q}) vs (n={other.n}, q={other.q})"
            )

    def __add__(self, other: MagnusSeries) -> MagnusSeries:
        self._check(other)
        parts = []
        for a, b, ma, mb in zip(self._parts, other._parts, self.maxes, other.maxes):
            big = ma + mb >= _LIMIT
            parts.append(_cast(a, big) + _cast(b, big))
        return MagnusSeries(self.n, self.q, parts)

    def __neg__(self) -> MagnusSeries:
        return MagnusSeries(self.n, self.q, [-p for p in self._parts])

    def __sub__(self, other: MagnusSeries) -> MagnusSeries:
        return self + (-other)

    def scale(self, c: int) -> MagnusSeries:
        c = int(c)
        parts = [_cast(p, m * abs(c) >= _LIMIT) * c for p, m in zip(self._parts, self.maxes)]
        return MagnusSeries(self.n, self.q, parts)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return self.scale(int(other))
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, np.integer)):
            return self.scale(int(other))
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, MagnusSeries):
            return NotImplemented
        if (self.n, self.q) != (other.n, other.q):
            return False
        return all(np.array_equal(a, b) for a, b in zip(self._parts, other._parts))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"MagnusSeries(n={self.n}, q={self.q}, {self})"

    def __str__(self) -> str:
        out = []
        for mono, c in self.terms():
            name = "".join(f"X{i}" for i in mono) if mono else ""
            if not mono:
                out.append(str(c))
            elif c == 1:
                out.append(name)
            elif c == -1:
                out.append("-" + name)
            else:
                out.append(f"{c}*{name}")
        if not out:
            return "0"
        return " + ".join(out).replace("+ -", "- ")


def _index(mono: Sequence[int], n: int) -> int:
    idx = 0
    for i in mono:
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        idx = idx * n + (i - 1)
    return idx


def _decode(idx: int, d: int, n: int) -> Monomial:
    out = [0] * d
    for pos in range(d - 1, -1, -1):
        idx, r = divmod(idx, n)
        out[pos] = r + 1
    return tuple(out)


def mul(a: MagnusSeries, b: MagnusSeries) -> MagnusSeries:
    """Product truncated at degree q."""
    a._check(b)
    n, q = a.n, a.q
    ma, mb = a.maxes, b.maxes
    parts = []
    for d in range(q + 1):
        pairs = [(s, d - s) for s in range(d + 1) if ma[s] and mb[d - s]]
        bound = sum(ma[s] * mb[t] for s, t in pairs)
        big = bound >= _LIMIT
        acc = np.zeros(n**d, dtype=object if big else np.int64)
        for s, t in pairs:
            acc += np.multiply.outer(_cast(a._parts[s], big), _cast(b._parts[t], big)).ravel()
        parts.append(acc)
    return MagnusSeries(n, q, parts)


def product(factors: Iterable[MagnusSeries], n: int, q: int) -> MagnusSeries:
    acc = MagnusSeries.one(n, q)
    for f in factors:
        acc = mul(acc, f)
    return acc


def mul_letter(a: MagnusSeries, i: int, sign: int) -> MagnusSeries:
    """Right-multiply by E(alpha_i) = 1 + X_i (sign +1) or its inverse (sign -1).

    Linear time in the size of ``a``.
    """
    n, q = a.n, a.q
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range 1..{n}")
    src = a._parts
    ma = a.maxes
    parts = [src[0].copy()]
    run = ma[0]
    for d in range(1, q + 1):
        # sign=-1 solves C (1 + X_i) = A degree by degree: C_d = A_d - C_{d-1} X_i
        run = ma[d] + (run if sign < 0 else ma[d - 1])
        big = run >= _LIMIT
        cur = _cast(src[d], big).copy()
        prev = _cast(parts[d - 1] if sign < 0 else src[d - 1], big)
        if sign > 0:
            cur.reshape(-1, n)[:, i - 1] += prev
        else:
            cur.reshape(-1, n)[:, i - 1] -= prev
        parts.append(cur)
    return MagnusSeries(n, q, parts)


def expand(w: GroupWord, q: int) -> MagnusSeries:
    """Magnus expansion alpha_i -> 1 + X_i of ``w``, truncated at degree q."""
    if q < 1:
        raise ValueError("truncation degree must be >= 1")
    s = MagnusSeries.one(max(w.n, 1), q)
    for let in w.letters:
        s = mul_letter(s, let.index, let.sign)
    return s


def evaluate_word(w: GroupWord, images: Sequence[MagnusSeries], inverses: Sequence[MagnusSeries] | None = None) -> MagnusSeries:
    """Evaluate ``w`` under alpha_i -> images[i-1] (a ring homomorphism on the group ring)."""
    if len(images) < w.n:
        raise ValueError(f"need {w.n} images, got {len(images)}")
    if inverses is None:
        inverses = [inverse(x) for x in images]
    n, q = images[0].n, images[0].q
    acc = MagnusSeries.one(n, q)
    for let in w.letters:
        acc = mul(acc, images[let.index - 1] if let.sign > 0 else inverses[let.index - 1])
    return acc


def inverse(a: MagnusSeries) -> MagnusSeries:
    """Multiplicative inverse of a series with constant term 1."""
    if a.constant != 1:
        raise ValueError(f"only series with constant term 1 are invertible here (got {a.constant})")
    n, q = a.n, a.q
    ma = a.maxes
    parts: list[np.ndarray] = [np.ones(1, dtype=np.int64)]
    mb = [1]
    # b_d = -sum_{s>=1} a_s b_{d-s}
    for d in range(1, q + 1):
        pairs = [s for s in range(1, d + 1) if ma[s] and mb[d - s]]
        bound = sum(ma[s] * mb[d - s] for s in pairs)
        big = bound >= _LIMIT
        acc = np.zeros(n**d, dtype=object if big else np.int64)
        for s in pairs:
            acc -= np.multiply.outer(_cast(a._parts[s], big), _cast(parts[d - s], big)).ravel()
        parts.append(acc)
        mb.append(_maxabs(acc))
    return MagnusSeries(n, q, parts)


def commutator_series(a: MagnusSeries, b: MagnusSeries) -> MagnusSeries:
    """a^-1 b^-1 a b, matching the group commutator convention."""
    a._check(b)
    return mul(mul(inverse(a), inverse(b)), mul(a, b))


def substitute(f: MagnusSeries, g: Mapping[int, MagnusSeries]) -> MagnusSeries:
    """Replace each variable Z_l of ``f`` by the series ``g[l]`` (zero constant term).

    The shape (n, q) of the result is that of the ``g`` values.  Terms of f
    above its own truncation degree are, of course, unavailable; callers
    should expand f far enough (degree q is always enough).
    """
    if not g:
        raise ValueError("empty substitution")
    targets = list(g.values())
    n, q = targets[0].n, targets[0].q
    mindeg: dict[int, int | None] = {}
    for l, s in g.items():
        if (s.n, s.q) != (n, q):
            raise ValueError("substituted series must share n and q")
        if s.constant != 0:
            raise ValueError(f"substituted series for Z_{l} has nonzero constant term")
        mindeg[l] = s.min_degree(1)
    nf = f.n

    def rec(parts: list[np.ndarray], budget: int) -> MagnusSeries | None:
        # parts[r] holds the coefficients of suffixes of length r
        out = None
        if parts[0][0]:
            out = MagnusSeries.one(n, q).scale(int(parts[0][0]))
        if len(parts) == 1:
            return out
        for l in range(1, nf + 1):
            sub = [p.reshape(nf, -1)[l - 1] for p in parts[1:]]
            if not any(x.any() for x in sub):
                continue
            if l not in g:
                raise ValueError(f"no substitution given for Z_{l}")
            md = mindeg[l]
            if md is None or md > budget:
                continue
            rest = budget - md
            # suffixes longer than the remaining budget cannot survive truncation
            sub = sub[: rest + 1]
            inner = rec(sub, rest)
            if inner is None:
                continue
            term = mul(g[l], inner)
            out = term if out is None else out + term
        return out

    res = rec(list(f._parts), q)
    return MagnusSeries.zero(n, q) if res is None else res


def series_coefficients(series: MagnusSeries, monomials: Iterable[Sequence[int]]) -> list[int]:
    return [series.coefficient(m) for m in monomials]


def letter_series(n: int, q: int, let: Letter) -> MagnusSeries:
    return mul_letter(MagnusSeries.one(n, q), let.index, let.sign)
