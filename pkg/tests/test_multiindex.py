import itertools

import pytest

from milnor.multiindex import (
    Injection,
    Surjection,
    all_injections,
    ascending_surjections,
    as_index,
    format_index,
    injections,
    palindromic_partner,
    palindromic_surjections,
    parse_index,
    repeat_max,
    reversed_surjection,
    selfdelta_generator_indices,
    surjections,
)


def brute_injections(k, n):
    """Oracle: filter all injections by the ordering constraint."""
    out = []
    for vals in itertools.permutations(range(1, n + 1), k):
        if vals[k - 2] < vals[k - 1] and all(v < vals[k - 2] for v in vals[: k - 2]):
            out.append(vals)
    return sorted(out)


def brute_surjections(m, k, n):
    """Oracle: filter all tuples by the multiplicity and image conditions."""
    out = []
    pool = [v for v in range(1, n + 1) if v != k]
    for vals in itertools.product(range(1, n + 1), repeat=m - 2):
        if set(vals) != set(pool):
            continue
        if any(vals.count(v) > 2 for v in set(vals)):
            continue
        if any(vals.count(v) != 1 for v in set(vals) if v > k):
            continue
        out.append(vals)
    return sorted(out)


class TestRepeatMax:
    def test_examples(self):
        assert repeat_max((1, 1, 2, 3)) == 2
        assert repeat_max((1, 2, 3, 1, 2, 2, 3)) == 3
        assert repeat_max(()) == 0

    def test_single(self):
        assert repeat_max((5,)) == 1


class TestIndexText:
    def test_digits(self):
        assert parse_index("12233", 3) == (1, 2, 2, 3, 3)
        assert format_index((1, 2, 2, 3, 3), 3) == "12233"

    def test_commas(self):
        assert parse_index("1,2,2,3,3", 12) == (1, 2, 2, 3, 3)
        assert format_index((1, 10), 12) == "1,10"

    def test_digit_form_needs_small_n(self):
        with pytest.raises(ValueError):
            parse_index("12", 10)

    def test_range_check(self):
        with pytest.raises(ValueError):
            as_index((0, 1), 3)
        with pytest.raises(ValueError):
            as_index((1, 4), 3)


class TestInjections:
    def test_k2_n3(self):
        assert [p.values for p in injections(2, 3)] == [(1, 2), (1, 3), (2, 3)]

    def test_k3_n3(self):
        assert [p.values for p in injections(3, 3)] == [(1, 2, 3)]

    def test_against_brute_force(self):
        for n in range(2, 7):
            for k in range(2, n + 1):
                assert [p.values for p in injections(k, n)] == brute_injections(k, n)

    def test_top_arity_count(self):
        import math

        for n in range(2, 7):
            assert len(injections(n, n)) == math.factorial(n - 2)

    def test_bad_arity(self):
        with pytest.raises(ValueError):
            injections(1, 3)
        with pytest.raises(ValueError):
            injections(4, 3)

    def test_invalid_values(self):
        with pytest.raises(ValueError):
            Injection(3, (2, 1, 3))  # early value above the top pair
        with pytest.raises(ValueError):
            Injection(3, (3, 2))
        with pytest.raises(ValueError):
            Injection(3, (1, 1, 2))

    def test_all_injections_order(self):
        seq = all_injections(3)
        assert [p.values for p in seq] == [(1, 2), (1, 3), (2, 3), (1, 2, 3)]
        assert seq[0].target == 2 and seq[-1].target == 3


class TestSurjections:
    def test_m4_k2_n2(self):
        assert [t.values for t in surjections(4, 2, 2)] == [(1, 1)]

    def test_m4_k1_n2_empty(self):
        assert surjections(4, 1, 2) == []

    def test_contains_example(self):
        assert (1, 2, 2) in [t.values for t in surjections(5, 3, 3)]

    def test_against_brute_force(self):
        for n in range(2, 5):
            for m in range(n + 1, 2 * n + 1):
                for k in range(1, n + 1):
                    assert [
                        t.values for t in surjections(m, k, n)
                    ] == brute_surjections(m, k, n)

    def test_empty_below_threshold(self):
        for n in range(2, 5):
            for m in range(n + 1, 2 * n + 1):
                for k in range(1, n + 1):
                    if k < m - n:
                        assert surjections(m, k, n) == []

    def test_range_errors(self):
        with pytest.raises(ValueError):
            surjections(2, 1, 2)
        with pytest.raises(ValueError):
            surjections(5, 1, 2)
        with pytest.raises(ValueError):
            surjections(4, 3, 2)

    def test_index_of(self):
        t = Surjection(3, 3, (1, 2, 2))
        assert t.index() == (1, 2, 2, 3, 3)
        assert t.m == 5


class TestFamilies:
    def test_m4_k2_n2(self):
        assert [t.values for t in palindromic_surjections(4, 2, 2)] == [(1, 1)]
        assert ascending_surjections(4, 2, 2) == []

    def test_m5_k3_n3_membership(self):
        asc = [t.values for t in ascending_surjections(5, 3, 3)]
        assert (1, 2, 2) in asc
        assert [t.values for t in palindromic_surjections(5, 3, 3)] == [
            (1, 2, 1),
            (2, 1, 2),
        ]

    def test_palindromic_empty_at_low_m(self):
        assert palindromic_surjections(4, 1, 3) == []

    def test_reversal(self):
        t = Surjection(3, 3, (1, 2, 2))
        assert reversed_surjection(t).values == (2, 2, 1)
        assert reversed_surjection(reversed_surjection(t)) == t
        for r in palindromic_surjections(6, 3, 3):
            assert reversed_surjection(r) == r

    def test_partition(self):
        # every surjection is palindromic, ascending, or the reversal of an
        # ascending one, exclusively
        for n in range(2, 5):
            for m in range(n + 1, 2 * n + 1):
                for k in range(1, n + 1):
                    full = set(surjections(m, k, n))
                    pal = set(palindromic_surjections(m, k, n))
                    asc = set(ascending_surjections(m, k, n))
                    desc = {reversed_surjection(t) for t in asc}
                    assert pal | asc | desc == full
                    assert not pal & asc
                    assert not pal & desc
                    assert not asc & desc

    def test_ascending_reversal_leaves_family(self):
        for t in ascending_surjections(5, 3, 3) + ascending_surjections(6, 3, 3):
            assert reversed_surjection(t) not in ascending_surjections(t.m, t.k, t.n)

    def test_odd_palindromic_center(self):
        # the palindromic family at k = n-1 pins the center value to n
        for n in range(2, 6):
            for t in palindromic_surjections(2 * n - 1, n - 1, n):
                assert t.values[n - 2] == n

    def test_partner_bijection(self):
        for n in range(2, 6):
            odd = palindromic_surjections(2 * n - 1, n, n)
            even = palindromic_surjections(2 * n, n, n)
            partners = [palindromic_partner(t) for t in odd]
            assert sorted(p.values for p in partners) == sorted(
                t.values for t in even
            )
            assert len(set(partners)) == len(odd)

    def test_even_palindromic_count(self):
        import math

        for n in range(2, 6):
            assert len(palindromic_surjections(2 * n, n, n)) == math.factorial(n - 1)

    def test_generator_listing(self):
        gens = selfdelta_generator_indices(3, 6)
        assert [(g.k, g.values) for g in gens] == [
            (3, (1, 1, 2, 2)),
            (3, (1, 2, 1, 2)),
            (3, (1, 2, 2, 1)),
            (3, (2, 1, 1, 2)),
        ]
