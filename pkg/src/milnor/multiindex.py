"""Multi-indices and the generator index families.

A multi-index is a finite sequence of component indices (1-based).  The
classification machinery enumerates two kinds of index data:

* ordered injections pi: {1..k} -> {1..n} with pi(i) < pi(k-1) < pi(k) for
  i <= k-2, which label the iterated-commutator generators used for
  link-homotopy classification, and
* surjections tau: {1..m-2} -> {1..n}\\{k} with every value hit at most twice
  and values above k hit exactly once, which label the doubled generators
  used for self-delta classification.

Surjection families split under value-sequence reversal into a palindromic
part and reversal-asymmetric pairs; enumeration picks the ascending
representative of each pair.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

Index = Tuple[int, ...]


def as_index(entries: Iterable[int], n: int | None = None) -> Index:
    idx = tuple(int(e) for e in entries)
    for e in idx:
        if e < 1 or (n is not None and e > n):
            raise ValueError(f"index entry {e} out of range 1..{n}")
    return idx


def repeat_max(index: Sequence[int]) -> int:
    """Maximum multiplicity of any value in the index (0 for the empty index)."""
    if not index:
        return 0
    return max(index.count(v) for v in set(index))


def parse_index(text: str, n: int) -> Index:
    """Parse "12233" (only when n <= 9) or "1,2,2,3,3" into an index tuple."""
    text = text.strip()
    if "," in text:
        parts = [p for p in text.split(",") if p.strip()]
        return as_index((int(p) for p in parts), n)
    if n > 9:
        raise ValueError("digit-string indices are only unambiguous for n <= 9")
    return as_index((int(ch) for ch in text), n)


def format_index(index: Sequence[int], n: int) -> str:
    if n <= 9:
        return "".join(str(e) for e in index)
    return ",".join(str(e) for e in index)


@dataclass(frozen=True, order=True)
class Injection:
    """An injection pi with pi(i) < pi(k-1) < pi(k) for all i <= k-2."""

    n: int
    values: Index

    def __post_init__(self):
        k = len(self.values)
        if k < 2 or k > self.n:
            raise ValueError(f"arity {k} out of range 2..{self.n}")
        if len(set(self.values)) != k:
            raise ValueError(f"values {self.values} are not pairwise distinct")
        for v in self.values:
            if not 1 <= v <= self.n:
                raise ValueError(f"value {v} out of range 1..{self.n}")
        if self.values[k - 2] >= self.values[k - 1]:
            raise ValueError(f"{self.values}: last two values must increase")
        for v in self.values[: k - 2]:
            if v >= self.values[k - 2]:
                raise ValueError(
                    f"{self.values}: early values must lie below the top pair"
                )

    @property
    def k(self) -> int:
        return len(self.values)

    @property
    def target(self) -> int:
        """Component carrying the commutator, the largest value pi(k)."""
        return self.values[-1]


def injections(k: int, n: int) -> list[Injection]:
    """All ordered injections of arity k into 1..n, lexicographically."""
    if k < 2 or k > n:
        raise ValueError(f"arity must satisfy 2 <= k <= n, got k={k}, n={n}")
    out = []
    for image in itertools.combinations(range(1, n + 1), k):
        head, top = image[: k - 2], image[k - 2 :]
        for prefix in itertools.permutations(head):
            out.append(Injection(n, prefix + top))
    out.sort(key=lambda p: p.values)
    return out


def all_injections(n: int) -> list[Injection]:
    """The injection families for k = 2..n, each lexicographic, concatenated."""
    out: list[Injection] = []
    for k in range(2, n + 1):
        out.extend(injections(k, n))
    return out


@dataclass(frozen=True, order=True)
class Surjection:
    """A surjection tau onto {1..n}\\{k}, values hit at most twice.

    ``m`` is len(values) + 2: the associated invariant reads the index
    tau(1)...tau(m-2) k k of length m.
    """

    n: int
    k: int
    values: Index

    def __post_init__(self):
        m = self.m
        if not 1 <= self.k <= self.n:
            raise ValueError(f"excluded component {self.k} out of range")
        if not self.n < m <= 2 * self.n:
            raise ValueError(f"m={m} out of range ({self.n}, {2 * self.n}]")
        if set(self.values) != set(range(1, self.n + 1)) - {self.k}:
            raise ValueError(f"{self.values} is not onto the complement of {self.k}")
        for v in set(self.values):
            c = self.values.count(v)
            if c > 2:
                raise ValueError(f"value {v} hit {c} > 2 times")
            if v > self.k and c != 1:
                raise ValueError(f"value {v} > k={self.k} must be hit exactly once")

    @property
    def m(self) -> int:
        return len(self.values) + 2

    def index(self) -> Index:
        """The length-m invariant index tau(1)...tau(m-2) k k."""
        return self.values + (self.k, self.k)


def reversed_surjection(tau: Surjection) -> Surjection:
    """Precompose with i -> m-1-i, i.e. reverse the value sequence."""
    return Surjection(tau.n, tau.k, tau.values[::-1])


def surjections(m: int, k: int, n: int) -> list[Surjection]:
    """All qualifying surjections for (m, k, n), lexicographically.

    Empty when k < m - n: the excluded component forces too many doubled
    values otherwise.
    """
    if not n < m <= 2 * n:
        raise ValueError(f"m={m} out of range ({n}, {2 * n}]")
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range 1..{n}")
    pool = sorted(set(range(1, n + 1)) - {k})
    out = []
    for values in itertools.product(pool, repeat=m - 2):
        try:
            out.append(Surjection(n, k, values))
        except ValueError:
            continue
    return out


def palindromic_surjections(m: int, k: int, n: int) -> list[Surjection]:
    """The reversal-symmetric surjections; nonempty only for m in {2n-1, 2n}."""
    if m not in (2 * n - 1, 2 * n):
        if not n < m <= 2 * n:
            raise ValueError(f"m={m} out of range ({n}, {2 * n}]")
        return []
    return [t for t in surjections(m, k, n) if t.values == t.values[::-1]]


def ascending_surjections(m: int, k: int, n: int) -> list[Surjection]:
    """One representative per reversal-asymmetric pair: the value sequence is
    smaller than its reversal at the first position where they differ."""
    out = []
    for t in surjections(m, k, n):
        rev = t.values[::-1]
        for a, b in zip(t.values, rev):
            if a != b:
                if a < b:
                    out.append(t)
                break
    return out


def selfdelta_generator_indices(n: int, m: int) -> list[Surjection]:
    """Ascending plus palindromic surjections over all k, for one length m."""
    out: list[Surjection] = []
    for k in range(1, n + 1):
        out.extend(ascending_surjections(m, k, n))
        out.extend(palindromic_surjections(m, k, n))
    out.sort(key=lambda t: (t.k, t.values))
    return out


def palindromic_partner(phi: Surjection) -> Surjection:
    """The length-2n palindromic surjection matching a length-(2n-1) one on
    its first n-1 values.  This matching is a bijection between the two
    palindromic families at k = n."""
    n = phi.n
    if phi.m != 2 * n - 1 or phi.k != n:
        raise ValueError("defined for palindromic surjections with m = 2n-1, k = n")
    head = phi.values[: n - 1]
    return Surjection(n, n, head + head[::-1])
