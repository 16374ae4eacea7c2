"""Truncated integer power series in non-commuting variables.

The Magnus expansion substitutes 1 + X_j for the j-th meridian generator and
the alternating geometric series for its inverse.  Series are truncated at a
total degree q and store one dense coefficient array per degree: the
degree-d coefficients live in a flat numpy array of length n**d, indexed by
the base-n digits of the monomial.  Exactness is preserved by an overflow
guard that retries the offending product with Python-integer (object) dtype.
"""

from __future__ import annotations

import itertools

import numpy as np

from .freegroup import Word

_GUARD = np.int64(1) << 60


def _monomial_offset(n: int, monomial) -> int:
    off = 0
    for v in monomial:
        if not 1 <= v <= n:
            raise ValueError(f"variable index {v} out of range 1..{n}")
        off = off * n + (v - 1)
    return off


class Series:
    """An integer power series in X_1..X_n truncated beyond degree q."""

    __slots__ = ("n", "q", "coeffs")

    def __init__(self, n: int, q: int, coeffs=None):
        if n < 1 or q < 0:
            raise ValueError("need n >= 1 and q >= 0")
        self.n = n
        self.q = q
        if coeffs is None:
            coeffs = [np.zeros(n**d, dtype=np.int64) for d in range(q + 1)]
        self.coeffs = coeffs

    def copy(self) -> "Series":
        return Series(self.n, self.q, [c.copy() for c in self.coeffs])

    @property
    def constant(self) -> int:
        return int(self.coeffs[0][0])

    def coefficient(self, monomial) -> int:
        monomial = tuple(monomial)
        if len(monomial) > self.q:
            raise ValueError(
                f"monomial degree {len(monomial)} exceeds truncation {self.q}"
            )
        return int(self.coeffs[len(monomial)][_monomial_offset(self.n, monomial)])

    def set_coefficient(self, monomial, value: int) -> None:
        monomial = tuple(monomial)
        if len(monomial) > self.q:
            raise ValueError(
                f"monomial degree {len(monomial)} exceeds truncation {self.q}"
            )
        self.coeffs[len(monomial)][_monomial_offset(self.n, monomial)] = value

    def _as_object(self) -> "Series":
        return Series(self.n, self.q, [c.astype(object) for c in self.coeffs])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return (
            self.n == other.n
            and self.q == other.q
            and all(np.array_equal(a, b) for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        if self.n != other.n or self.q != other.q:
            raise ValueError("series parameters differ")
        a, b = self, other
        exact = a.coeffs[0].dtype == object or b.coeffs[0].dtype == object
        if not exact:
            # |out| <= L1(a) * peak(b) termwise, so this bound rules out
            # int64 wraparound before it can happen
            l1a = sum(int(np.abs(c).sum()) for c in a.coeffs)
            pkb = max(int(np.abs(c).max(initial=0)) for c in b.coeffs)
            if l1a * pkb > int(_GUARD):
                exact = True
        if exact:
            if a.coeffs[0].dtype != object:
                a = a._as_object()
            if b.coeffs[0].dtype != object:
                b = b._as_object()
        out = Series(self.n, self.q)
        if exact:
            out.coeffs = [c.astype(object) for c in out.coeffs]
        for da in range(self.q + 1):
            ca = a.coeffs[da]
            if not ca.any():
                continue
            for db in range(self.q + 1 - da):
                cb = b.coeffs[db]
                if not cb.any():
                    continue
                out.coeffs[da + db] += np.outer(ca, cb).ravel()
        return out

    def __add__(self, other: "Series") -> "Series":
        if self.n != other.n or self.q != other.q:
            raise ValueError("series parameters differ")
        return Series(
            self.n, self.q, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other: "Series") -> "Series":
        if self.n != other.n or self.q != other.q:
            raise ValueError("series parameters differ")
        return Series(
            self.n, self.q, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def inverse(self) -> "Series":
        """Ring inverse; requires constant term +1 or -1."""
        c0 = self.constant
        if c0 not in (1, -1):
            raise ValueError("series with constant term != +-1 has no inverse")
        # (c0 + N)^-1 = c0 (1 + c0 N)^-1 = c0 sum (-c0 N)^j
        nilpotent = self.copy()
        nilpotent.coeffs[0] = nilpotent.coeffs[0] * 0
        out = one(self.n, self.q)
        term = one(self.n, self.q)
        for _ in range(self.q):
            term = term * nilpotent
            for d in range(self.q + 1):
                term.coeffs[d] = term.coeffs[d] * (-c0)
            out = out + term
        if c0 == -1:
            for d in range(self.q + 1):
                out.coeffs[d] = out.coeffs[d] * -1
        return out

    def monomials(self):
        """Yield (monomial, coefficient) with nonzero coefficient, ordered by
        (degree, lexicographic monomial)."""
        for d in range(self.q + 1):
            arr = self.coeffs[d]
            for flat in np.flatnonzero(arr):
                mono = []
                rem = int(flat)
                for _ in range(d):
                    mono.append(rem % self.n + 1)
                    rem //= self.n
                yield tuple(reversed(mono)), int(arr[flat])

    def __str__(self) -> str:
        parts = []
        for mono, c in self.monomials():
            body = "".join(f"X{v}" for v in mono)
            if mono and abs(c) == 1:
                term = body
            elif mono:
                term = f"{abs(c)}{body}"
            else:
                term = str(abs(c))
            parts.append(("- " if c < 0 else "+ ") + term)
        if not parts:
            return "0"
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text

    __repr__ = __str__


def zero(n: int, q: int) -> Series:
    return Series(n, q)


def one(n: int, q: int) -> Series:
    s = Series(n, q)
    s.coeffs[0][0] = 1
    return s


def generator_series(j: int, sign: int, n: int, q: int) -> Series:
    """1 + X_j for sign +1; 1 - X_j + X_j^2 - ... up to degree q for -1."""
    if not 1 <= j <= n:
        raise ValueError(f"variable index {j} out of range 1..{n}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    s = one(n, q)
    if sign == 1:
        if q >= 1:
            s.set_coefficient((j,), 1)
        return s
    for d in range(1, q + 1):
        s.set_coefficient((j,) * d, (-1) ** d)
    return s


def expand(word: Word, q: int, n: int | None = None) -> Series:
    """Magnus expansion of a word, truncated beyond degree q."""
    if n is None:
        n = word.rank
    elif n != word.rank:
        raise ValueError("rank mismatch")
    out = one(n, q)
    for x in word.letters:
        out = out * generator_series(abs(x), 1 if x > 0 else -1, n, q)
    return out


def all_monomials(n: int, degree: int):
    """All monomials of one degree in lexicographic order."""
    return itertools.product(range(1, n + 1), repeat=degree)
