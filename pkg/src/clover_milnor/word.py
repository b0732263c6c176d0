"""Words in the free group on the meridian generators alpha_1..alpha_n."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True, order=True)
class Letter:
    index: int
    sign: int = 1

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"generator index must be >= 1, got {self.index}")
        if self.sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {self.sign}")

    def __invert__(self) -> Letter:
        return Letter(self.index, -self.sign)

    def __str__(self) -> str:
        return f"a{self.index}" if self.sign == 1 else f"a{self.index}^-1"


@dataclass(frozen=True)
class GroupWord:
    """An element of the free group F(alpha_1, ..., alpha_n), stored letter by letter.

    Words are not reduced on construction; use :func:`reduce` (or the group
    operations below, which always reduce).
    """

    n: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("ambient generator count must be >= 0")
        object.__setattr__(self, "letters", tuple(self.letters))
        for let in self.letters:
            if not isinstance(let, Letter):
                raise TypeError(f"expected Letter, got {type(let).__name__}")
            if let.index > self.n:
                raise ValueError(f"letter index {let.index} exceeds n={self.n}")

    @classmethod
    def identity(cls, n: int) -> GroupWord:
        return cls(n, ())

    @classmethod
    def generator(cls, n: int, i: int, power: int = 1) -> GroupWord:
        sign = 1 if power >= 0 else -1
        return cls(n, (Letter(i, sign),) * abs(power))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Sequence[int]]) -> GroupWord:
        """Build a word from ``[[index, sign], ...]`` (the on-disk form)."""
        letters = []
        for pair in pairs:
            if len(pair) != 2:
                raise ValueError(f"word letters are [index, sign] pairs, got {pair!r}")
            letters.append(Letter(int(pair[0]), int(pair[1])))
        return cls(n, tuple(letters))

    @classmethod
    def parse(cls, n: int, text: str) -> GroupWord:
        """Parse a compact signed-integer notation, e.g. ``"1 -2 1"`` for a1 a2^-1 a1."""
        letters = []
        for tok in text.replace(",", " ").split():
            v = int(tok)
            if v == 0:
                raise ValueError("0 is not a generator")
            letters.append(Letter(abs(v), 1 if v > 0 else -1))
        return cls(n, tuple(letters))

    def to_pairs(self) -> list[list[int]]:
        return [[let.index, let.sign] for let in self.letters]

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: GroupWord) -> GroupWord:
        _check_same_n(self, other)
        return reduce(GroupWord(self.n, self.letters + other.letters))

    def __invert__(self) -> GroupWord:
        return invert(self)

    def __pow__(self, k: int) -> GroupWord:
        base = self if k >= 0 else invert(self)
        return reduce(GroupWord(self.n, base.letters * abs(k)))

    def is_identity(self) -> bool:
        return not reduce(self).letters

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return " ".join(str(let) for let in self.letters)


def _check_same_n(x: GroupWord, y: GroupWord) -> None:
    if x.n != y.n:
        raise ValueError(f"words live in different free groups (n={x.n} vs n={y.n})")


def reduce(w: GroupWord) -> GroupWord:
    """Freely reduce ``w`` with a single stack pass."""
    stack: list[Letter] = []
    for let in w.letters:
        if stack and stack[-1].index == let.index and stack[-1].sign == -let.sign:
            stack.pop()
        else:
            stack.append(let)
    return GroupWord(w.n, tuple(stack))


def invert(w: GroupWord) -> GroupWord:
    return GroupWord(w.n, tuple(~let for let in reversed(w.letters)))


def concat(*words: GroupWord) -> GroupWord:
    """Juxtapose words without reducing."""
    if not words:
        raise ValueError("concat needs at least one word")
    for w in words[1:]:
        _check_same_n(words[0], w)
    return GroupWord(words[0].n, tuple(let for w in words for let in w.letters))


def commutator(x: GroupWord, y: GroupWord) -> GroupWord:
    """[x, y] = x^-1 y^-1 x y, reduced."""
    _check_same_n(x, y)
    return reduce(concat(invert(x), invert(y), x, y))


def conjugate(w: GroupWord, g: GroupWord) -> GroupWord:
    """g w g^-1, reduced."""
    _check_same_n(w, g)
    return reduce(concat(g, w, invert(g)))


def exponent_sum(w: GroupWord, i: int) -> int:
    if not 1 <= i <= w.n:
        raise ValueError(f"generator index {i} out of range 1..{w.n}")
    return sum(let.sign for let in w.letters if let.index == i)


def iterated_commutator(words: Sequence[GroupWord]) -> GroupWord:
    """Left-normed commutator [[...[w1, w2], w3], ..., wm]."""
    if not words:
        raise ValueError("need at least one word")
    acc = words[0]
    for w in words[1:]:
        acc = commutator(acc, w)
    return acc
