"""Classification procedures built on the invariant engine.

String links are classified up to link-homotopy by a normal form: a stacked
product of the commutator generators indexed by ordered injections, with
exponents measured level by level against partial products.  Links whose
repetition-bounded invariants vanish through length 2n-1 are classified up
to self-delta equivalence by their length-2n, repetition-2 invariants; a
Brunnian representative is assembled from the doubled generators, with the
palindromic families contributing a parity part and a halved integer part.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from . import invariants
from .diagram import Diagram, closure, power, stack, stack_all, tree_tangle, trivial_string_link
from .invariants import Residue
from .multiindex import (
    Injection,
    Surjection,
    all_injections,
    ascending_surjections,
    palindromic_partner,
    palindromic_surjections,
    repeat_max,
)


from functools import lru_cache


@lru_cache(maxsize=None)
def _injection_base(pi: Injection) -> Diagram:
    return tree_tangle(pi.n, pi.values)


def injection_generator(pi: Injection, exponent: int = 1) -> Diagram:
    """The commutator generator string link for an ordered injection: the
    tree tangle grasping pi(1), ..., pi(k).  Its own invariant equals the
    exponent, all other same-family invariants and everything shorter
    vanish."""
    return power(_injection_base(pi), exponent)


@lru_cache(maxsize=None)
def _surjection_base(tau: Surjection) -> Diagram:
    base = tree_tangle(tau.n, tau.values + (tau.k, tau.k))
    n = tau.n
    if tau.m == 2 * n - 1 and tau.k == n and tau.values == tau.values[::-1]:
        # normalize: the tree data pins invariants only through length m, so
        # stray values on the paired even-length family are cancelled by
        # measured correcting factors; the matched partner value stays odd
        parts = [base]
        for eta in ascending_surjections(2 * n, n, n):
            stray = invariants.mu(base, eta.index())
            if stray:
                parts.append(power(tree_tangle(n, eta.values + (n, n)), -stray))
        base = stack_all(parts, n)
    return base


def surjection_generator(tau: Surjection, exponent: int = 1) -> Diagram:
    """The doubled generator string link for a surjection: the tree tangle
    grasping tau(1), ..., tau(m-2), k, k, with the odd-length palindromic
    family normalized against the paired even-length one."""
    return power(_surjection_base(tau), exponent)


def milnor_link(n: int) -> Diagram:
    """The n-component chain link whose only nonvanishing invariant up to
    length n is the identity index, with value 1."""
    if n < 2:
        raise ValueError("need at least 2 components")
    return closure(tree_tangle(n, tuple(range(1, n + 1))))


def whitehead_link() -> Diagram:
    """Linking number zero, vanishing length-3 invariants, and
    invariant 1 on the index 1122."""
    return closure(tree_tangle(2, (1, 2, 2)))


def mu_of(l: Diagram, pi: Injection) -> int:
    return invariants.mu(l, pi.values)


@dataclass
class HomotopyNormalForm:
    n: int
    exponents: dict  # Injection -> int, over all injections for this n

    def ordered(self):
        return [(pi, self.exponents[pi]) for pi in all_injections(self.n)]

    def realize(self) -> Diagram:
        parts = [
            injection_generator(pi, e) for pi, e in self.ordered() if e != 0
        ]
        return stack_all(parts, self.n)

    def to_json(self):
        return [
            {"injection": list(pi.values), "exponent": e}
            for pi, e in self.ordered()
        ]


def homotopy_normal_form(l: Diagram) -> HomotopyNormalForm:
    """Exponents of the link-homotopy normal form of a string link.

    Level by level: the exponent of each arity-(i+1) injection is the
    string link's invariant minus the same invariant of the concretely
    rebuilt product of all lower levels.
    """
    if l.closed:
        raise ValueError("normal forms are defined for string links")
    n = l.n
    exponents: dict[Injection, int] = {}
    partial = trivial_string_link(n)
    for k in range(2, n + 1):
        level = [pi for pi in all_injections(n) if pi.k == k]
        for pi in level:
            exponents[pi] = mu_of(l, pi) - mu_of(partial, pi)
        for pi in level:
            if exponents[pi]:
                partial = stack(partial, injection_generator(pi, exponents[pi]))
    return HomotopyNormalForm(n, exponents)


def link_homotopic(a: Diagram, b: Diagram) -> bool:
    """String links are link-homotopic iff all repetition-free invariants
    agree."""
    if a.closed or b.closed:
        raise ValueError("this decision applies to string links")
    if a.n != b.n:
        raise ValueError("component counts differ")
    return homotopy_classes_agree(a, b, a.n)


def homotopy_classes_agree(a: Diagram, b: Diagram, k: int) -> bool:
    """Equality of all repetition-free invariants of length at most k; for
    k = n this decides link-homotopy, and in general it decides equivalence
    up to combined self-crossing changes and k-fold clasp moves."""
    if not 1 <= k <= a.n:
        raise ValueError(f"k={k} out of range 1..{a.n}")
    import itertools

    for ln in range(2, k + 1):
        for index in itertools.permutations(range(1, a.n + 1), ln):
            if invariants.mu(a, index) != invariants.mu(b, index):
                return False
    return True


class Verdict(enum.Enum):
    YES = "yes"
    NO = "no"
    UNDECIDED = "undecided"


@dataclass
class SelfDeltaVector:
    n: int
    hypothesis_ok: bool
    failures: dict = field(default_factory=dict)  # index -> Residue, low order
    entries: dict = field(default_factory=dict)  # index -> Residue, length 2n

    def to_json(self):
        from .multiindex import format_index

        data = {
            "components": self.n,
            "hypothesis_ok": self.hypothesis_ok,
            "entries": {
                format_index(i, self.n): {"value": r.value, "modulus": r.modulus}
                for i, r in sorted(self.entries.items())
            },
        }
        if self.failures:
            data["low_order_nonzero"] = {
                format_index(i, self.n): {"value": r.value, "modulus": r.modulus}
                for i, r in sorted(self.failures.items())
            }
        return data


def selfdelta_vector(l: Diagram) -> SelfDeltaVector:
    """Check the vanishing hypothesis (repetition at most 2, length at most
    2n-1) and, when it holds, collect the classifying length-2n values."""
    if not l.closed:
        raise ValueError("self-delta classification applies to closed links")
    n = l.n
    low = invariants.table(l, 2 * n - 1, 2)
    failures = {i: r for i, r in low.entries.items() if not r.is_zero()}
    if failures:
        return SelfDeltaVector(n, False, failures=failures)
    entries = {}
    full = invariants.table(l, 2 * n, 2)
    for index, r in full.entries.items():
        if len(index) == 2 * n and repeat_max(index) == 2:
            entries[index] = r
    return SelfDeltaVector(n, True, entries=entries)


def selfdelta_equivalent(a: Diagram, b: Diagram) -> Verdict:
    """Decide self-delta equivalence where the classification applies.

    Both hypotheses holding, the links are equivalent iff their classifying
    vectors agree.  Otherwise the verdict is no when some invariant with
    repetition at most 2 (length at most 2n) provably differs, and
    undecided when nothing separates them.
    """
    if not (a.closed and b.closed):
        raise ValueError("self-delta decisions apply to closed links")
    if a.n != b.n:
        raise ValueError("component counts differ")
    va, vb = selfdelta_vector(a), selfdelta_vector(b)
    if va.hypothesis_ok and vb.hypothesis_ok:
        return Verdict.YES if va.entries == vb.entries else Verdict.NO
    ta = invariants.table(a, 2 * a.n, 2)
    tb = invariants.table(b, 2 * b.n, 2)
    if ta.entries != tb.entries:
        return Verdict.NO
    return Verdict.UNDECIDED


def selfdelta_trivial(l: Diagram) -> bool:
    """Self-delta equivalent to a trivial link iff every invariant with
    repetition at most 2 vanishes (length 2n suffices)."""
    if not l.closed:
        raise ValueError("self-delta decisions apply to closed links")
    t = invariants.table(l, 2 * l.n, 2)
    return all(r.is_zero() for r in t.entries.values())


def link_homotopy_trivial(l: Diagram) -> bool:
    """Link-homotopic to a trivial link iff every repetition-free invariant
    vanishes.

    Scanning lengths upward, the first nonzero value is exact (its
    indeterminacy is a gcd of shorter repetition-free values, all zero), so
    raw coefficients from one maximal-depth expansion per component decide.
    """
    if not l.closed:
        raise ValueError("this decision applies to closed links")
    import itertools

    from . import wirtinger

    n = l.n
    series = {
        comp: wirtinger.longitude_series(l, comp, n, n - 1)
        for comp in range(1, n + 1)
    }
    for ln in range(2, n + 1):
        for index in itertools.permutations(range(1, n + 1), ln):
            if series[index[-1]].coefficient(index[:-1]) != 0:
                return False
    return True


@dataclass
class BrunnianForm:
    n: int
    parity: dict  # Surjection (palindromic, odd length family) -> 0 or 1
    doubled: dict  # Surjection (palindromic, length 2n) -> int
    single: dict  # Surjection (ascending, length 2n) -> int

    def realize(self) -> Diagram:
        parts = []
        for phi, e in sorted(self.parity.items(), key=lambda kv: kv[0].values):
            if e:
                parts.append(surjection_generator(phi, e))
        for tau, e in sorted(self.doubled.items(), key=lambda kv: kv[0].values):
            if e:
                parts.append(surjection_generator(tau, e))
        for eta, e in sorted(self.single.items(), key=lambda kv: kv[0].values):
            if e:
                parts.append(surjection_generator(eta, e))
        return stack_all(parts, self.n)

    def to_json(self):
        return {
            "parity": [
                {"surjection": list(p.values), "exponent": e}
                for p, e in sorted(self.parity.items(), key=lambda kv: kv[0].values)
            ],
            "palindromic": [
                {"surjection": list(t.values), "exponent": e}
                for t, e in sorted(self.doubled.items(), key=lambda kv: kv[0].values)
            ],
            "paired": [
                {"surjection": list(t.values), "exponent": e}
                for t, e in sorted(self.single.items(), key=lambda kv: kv[0].values)
            ],
        }


def brunnian_representative(l: Diagram) -> BrunnianForm:
    """Exponents of the self-delta representative of a Brunnian link whose
    repetitionent-2 invariants vanish through length 2n-1.

    The caller asserts Brunnian-ness; the vanishing hypothesis is checked.
    Parity exponents come from the length-2n palindromic values matched
    through the odd-length palindromic family; the remaining exponents
    measure the difference against the concretely rebuilt parity part.
    """
    if not l.closed:
        raise ValueError("expects a closed link")
    n = l.n
    vec = selfdelta_vector(l)
    if not vec.hypothesis_ok:
        raise ValueError(
            "low-order invariants do not vanish; the representative "
            "construction does not apply"
        )
    parity = {}
    parts = []
    for phi in palindromic_surjections(2 * n - 1, n, n):
        tau = palindromic_partner(phi)
        val = invariants.mu_bar(l, tau.index())
        if val.modulus != 0:
            raise ValueError("unexpected indeterminacy under the hypothesis")
        parity[phi] = val.value % 2
        if parity[phi]:
            parts.append(surjection_generator(phi, 1))
    base = stack_all(parts, n)
    doubled = {}
    for tau in palindromic_surjections(2 * n, n, n):
        diff = invariants.mu_bar(l, tau.index()).value - invariants.mu(
            base, tau.index()
        )
        if diff % 2:
            raise ValueError(
                f"parity obstruction at {tau.values}: difference {diff} is odd"
            )
        doubled[tau] = diff // 2
    single = {}
    for eta in ascending_surjections(2 * n, n, n):
        single[eta] = invariants.mu_bar(l, eta.index()).value
    return BrunnianForm(n, parity, doubled, single)


def cabling_cross_check(l: Diagram) -> bool:
    """Two routes to triviality must agree: every repetition-2 invariant of
    the link vanishes iff the doubled link is link-homotopically trivial."""
    from .diagram import cable

    if not l.closed:
        raise ValueError("expects a closed link")
    return selfdelta_trivial(l) == link_homotopy_trivial(
        cable(l, [2] * l.n)
    )
