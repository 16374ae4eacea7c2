"""Milnor invariants: exact values for string links, residue classes for links.

For a string link the invariant of an index I is the coefficient of
X_{i_1}...X_{i_{m-1}} in the expansion of the last index's longitude,
computed at recursion depth |I|.  For a closed link the same integer is
taken modulo the indeterminacy: the gcd of the invariants of all indices
obtained by deleting at least one entry (and, by default, cyclically
rotating the result).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from . import wirtinger
from .diagram import Diagram
from .multiindex import format_index, repeat_max


@dataclass(frozen=True, order=True)
class Residue:
    """An integer modulo a nonnegative modulus; modulus 0 means exact."""

    value: int
    modulus: int = 0

    def __post_init__(self):
        if self.modulus < 0:
            raise ValueError("modulus must be nonnegative")
        if self.modulus:
            object.__setattr__(self, "value", self.value % self.modulus)

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self) -> str:
        return f"{self.value} (mod {self.modulus})"


def _check_index(d: Diagram, index) -> tuple[int, ...]:
    index = tuple(int(i) for i in index)
    if len(index) < 2:
        raise ValueError("invariants need indices of length at least 2")
    for i in index:
        if not 1 <= i <= d.n:
            raise ValueError(f"index entry {i} out of range 1..{d.n}")
    return index


def _raw(d: Diagram, index) -> int:
    depth = len(index)
    series = wirtinger.longitude_series(d, index[-1], depth, depth - 1)
    return series.coefficient(index[:-1])


def mu(l: Diagram, index) -> int:
    """Exact string-link invariant of one index."""
    if l.closed:
        raise ValueError("exact invariants are defined for string links")
    return _raw(l, _check_index(l, index))


def _deletion_subindices(index):
    m = len(index)
    out = set()
    for mask in range(1, 2**m - 1):
        sub = tuple(index[i] for i in range(m) if mask >> i & 1)
        if len(sub) >= 2:
            out.add(sub)
    return out


def indeterminacy(l: Diagram, index, cyclic: bool = True) -> int:
    """gcd of the invariants of all proper deletion subindices, including
    their cyclic rotations unless ``cyclic`` is disabled."""
    if not l.closed:
        raise ValueError("indeterminacy applies to closed links")
    index = _check_index(l, index)
    subs = _deletion_subindices(index)
    if cyclic:
        closure_set = set()
        for sub in subs:
            for r in range(len(sub)):
                closure_set.add(sub[r:] + sub[:r])
        subs = closure_set
    g = 0
    for sub in sorted(subs, key=lambda s: (len(s), s)):
        g = math.gcd(g, _raw(l, sub))
        if g == 1:
            break
    return g


def mu_bar(l: Diagram, index, cyclic: bool = True) -> Residue:
    """Residue-class invariant of a closed link."""
    if not l.closed:
        raise ValueError("residue invariants are defined for closed links")
    index = _check_index(l, index)
    key = ("mubar", index, cyclic)
    if key not in l._cache:
        l._cache[key] = Residue(_raw(l, index), indeterminacy(l, index, cyclic))
    return l._cache[key]


def invariant(d: Diagram, index, cyclic: bool = True) -> Residue:
    """Uniform access: exact for string links, residue for links."""
    if d.closed:
        return mu_bar(d, index, cyclic)
    return Residue(mu(d, index), 0)


def indices_up_to(n: int, max_len: int, max_r: int):
    """All indices with 2 <= length <= max_len and repetition bound max_r,
    by length then lexicographically."""
    import itertools

    for ln in range(2, max_len + 1):
        for index in itertools.product(range(1, n + 1), repeat=ln):
            if repeat_max(index) <= max_r:
                yield index


@dataclass
class InvariantTable:
    subject: str
    n: int
    max_length: int
    max_r: int
    closed: bool
    entries: dict = field(default_factory=dict)  # index -> Residue

    def rows(self):
        for index in sorted(self.entries, key=lambda i: (len(i), i)):
            yield index, self.entries[index]

    def nonzero(self):
        return {i: r for i, r in self.entries.items() if not r.is_zero()}

    def to_json(self):
        return {
            "subject": self.subject,
            "components": self.n,
            "kind": "link" if self.closed else "stringlink",
            "max_length": self.max_length,
            "max_r": self.max_r,
            "invariants": [
                {
                    "index": format_index(i, self.n),
                    "value": r.value,
                    "modulus": r.modulus,
                }
                for i, r in self.rows()
            ],
        }

    def to_text(self):
        lines = []
        width = max((len(format_index(i, self.n)) for i in self.entries), default=5)
        for i, r in self.rows():
            lines.append(f"{format_index(i, self.n):>{width}}: {r}")
        return "\n".join(lines)

    def __eq__(self, other):
        return (
            isinstance(other, InvariantTable)
            and self.n == other.n
            and self.entries == other.entries
        )


def table(d: Diagram, max_len: int, max_r: int, cyclic: bool = True) -> InvariantTable:
    """Evaluate every index within the filters.

    The longitude expansions are computed once per component at the maximal
    depth; lower-degree coefficients are depth-stable, so all shorter
    indices read off the same series.
    """
    if max_len < 2:
        raise ValueError("max_len must be at least 2")
    if max_r < 1:
        raise ValueError("max_r must be at least 1")
    out = InvariantTable(
        subject=d.name or repr(d),
        n=d.n,
        max_length=max_len,
        max_r=max_r,
        closed=d.closed,
    )
    series = {
        comp: wirtinger.longitude_series(d, comp, max_len, max_len - 1)
        for comp in range(1, d.n + 1)
    }
    raw = {}
    import itertools

    for ln in range(2, max_len + 1):
        for index in itertools.product(range(1, d.n + 1), repeat=ln):
            raw[index] = series[index[-1]].coefficient(index[:-1])
    for index in indices_up_to(d.n, max_len, max_r):
        if d.closed:
            subs = _deletion_subindices(index)
            if cyclic:
                subs = {s[r:] + s[:r] for s in subs for r in range(len(s))}
            g = 0
            for sub in subs:
                g = math.gcd(g, raw[sub])
            out.entries[index] = Residue(raw[index], g)
        else:
            out.entries[index] = Residue(raw[index], 0)
    return out
