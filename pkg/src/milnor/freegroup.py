"""Freely reduced words on meridian generators.

A letter is a nonzero signed integer: ``j`` stands for the j-th generator,
``-j`` for its inverse.  Words are kept freely reduced at all times.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple


def _reduce(letters: Iterable[int]) -> Tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class Word:
    rank: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        for x in self.letters:
            if x == 0 or abs(x) > self.rank:
                raise ValueError(f"letter {x} out of range for rank {self.rank}")
        reduced = _reduce(self.letters)
        if reduced != self.letters:
            object.__setattr__(self, "letters", reduced)

    def __mul__(self, other: "Word") -> "Word":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return Word(self.rank, self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(self.rank, tuple(-x for x in reversed(self.letters)))

    def conjugate(self, by: "Word") -> "Word":
        """by * self * by^-1."""
        return by * self * by.inverse()

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def exponent_sum(self, j: int) -> int:
        return sum(1 if x == j else -1 if x == -j else 0 for x in self.letters)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)


def identity(rank: int) -> Word:
    return Word(rank)


def generator(rank: int, j: int, sign: int = 1) -> Word:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return Word(rank, (sign * j,))


def commutator(a: Word, b: Word) -> Word:
    """a b a^-1 b^-1."""
    if a.rank != b.rank:
        raise ValueError("rank mismatch")
    return a * b * a.inverse() * b.inverse()


def nested_commutator(factors: list[Word]) -> Word:
    """Right-normed bracket [w_1, [w_2, [..., w_r]...]]; a single factor is
    returned as is."""
    if not factors:
        raise ValueError("need at least one factor")
    word = factors[-1]
    for w in reversed(factors[:-1]):
        word = commutator(w, word)
    return word


def parse_word(text: str, rank: int) -> Word:
    letters = tuple(int(t) for t in text.split())
    return Word(rank, letters)
