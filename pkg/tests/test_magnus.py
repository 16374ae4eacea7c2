import pytest
from hypothesis import given, settings, strategies as st

from milnor.freegroup import Word, commutator, generator, nested_commutator
from milnor.magnus import Series, all_monomials, expand, generator_series, one, zero

# -- independent oracle: dict-based truncated polynomials ---------------------


def poly_mul(a, b, q):
    out = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            if len(ma) + len(mb) <= q:
                key = ma + mb
                out[key] = out.get(key, 0) + ca * cb
    return {m: c for m, c in out.items() if c}


def poly_expand(word, q):
    out = {(): 1}
    for x in word.letters:
        j = abs(x)
        if x > 0:
            g = {(): 1, (j,): 1}
        else:
            g = {(j,) * d: (-1) ** d for d in range(q + 1)}
        out = poly_mul(out, g, q)
    return out


def as_dict(series):
    return dict(series.monomials())


words3 = st.builds(
    lambda letters: Word(3, tuple(letters)),
    st.lists(st.sampled_from([1, 2, 3, -1, -2, -3]), max_size=10),
)


class TestGeneratorSeries:
    def test_positive(self):
        s = generator_series(1, 1, 2, 3)
        assert as_dict(s) == {(): 1, (1,): 1}

    def test_negative(self):
        s = generator_series(1, -1, 2, 3)
        assert as_dict(s) == {(): 1, (1,): -1, (1, 1): 1, (1, 1, 1): -1}

    def test_geometric_identity(self):
        s = generator_series(1, 1, 2, 3) * generator_series(1, -1, 2, 3)
        assert s == one(2, 3)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            generator_series(3, 1, 2, 3)
        with pytest.raises(ValueError):
            generator_series(1, 2, 2, 3)


class TestMultiply:
    def test_distributes(self):
        a = generator_series(1, 1, 2, 2)
        b = generator_series(2, 1, 2, 2)
        assert as_dict(a * b) == {(): 1, (1,): 1, (2,): 1, (1, 2): 1}

    def test_truncates(self):
        a = generator_series(1, 1, 2, 1)
        assert as_dict(a * a) == {(): 1, (1,): 2}

    def test_identity(self):
        a = expand(Word(2, (1, 2, -1)), 3)
        assert a * one(2, 3) == a

    def test_parameter_mismatch(self):
        with pytest.raises(ValueError):
            one(2, 3) * one(3, 3)
        with pytest.raises(ValueError):
            one(2, 3) * one(2, 2)


class TestExpand:
    def test_empty(self):
        assert expand(Word(3), 2) == one(3, 2)

    def test_commutator(self):
        w = commutator(generator(2, 1), generator(2, 2))
        assert as_dict(expand(w, 2)) == {(): 1, (1, 2): 1, (2, 1): -1}

    def test_nested_lowest_terms(self):
        # the right-normed bracket has coefficient +1 on its own ordered
        # monomial and nothing else ending in the last letter, in its degree
        for r in range(2, 5):
            w = nested_commutator([generator(4, j) for j in range(1, r + 1)])
            s = expand(w, r - 0)
            for mono in all_monomials(4, r):
                if mono[-1] != r:
                    continue
                expected = 1 if mono == tuple(range(1, r + 1)) else 0
                assert s.coefficient(mono) == expected
            # everything below the bracket degree vanishes
            for d in range(1, r):
                for mono in all_monomials(4, d):
                    assert s.coefficient(mono) == 0

    def test_against_oracle(self):
        w = Word(3, (1, 2, -1, 3, 3, -2, -3))
        assert as_dict(expand(w, 4)) == poly_expand(w, 4)


class TestCoefficient:
    def test_basic(self):
        w = commutator(generator(2, 1), generator(2, 2))
        s = expand(w, 2)
        assert s.coefficient((1, 2)) == 1
        assert s.coefficient((2, 1)) == -1
        assert s.coefficient(()) == 1

    def test_degree_guard(self):
        with pytest.raises(ValueError):
            one(2, 2).coefficient((1, 1, 1))


class TestSeriesOps:
    def test_inverse(self):
        s = expand(Word(3, (1, 2, 3, -1)), 3)
        assert s * s.inverse() == one(3, 3)
        assert s.inverse() * s == one(3, 3)

    def test_inverse_needs_unit(self):
        with pytest.raises(ValueError):
            zero(2, 2).inverse()

    def test_str(self):
        w = commutator(generator(2, 1), generator(2, 2))
        assert str(expand(w, 2)) == "1 + X1X2 - X2X1"
        assert str(zero(2, 2)) == "0"

    def test_str_coefficients(self):
        s = zero(2, 2)
        s.set_coefficient((), -3)
        s.set_coefficient((1, 2), 2)
        assert str(s) == "- 3 + 2X1X2"

    def test_object_fallback_exactness(self):
        # huge coefficients leave int64 range but stay exact
        s = one(1, 2)
        s.set_coefficient((1,), 2**40)
        p = s * s
        assert p.coefficient((1, 1)) == 2**80


@settings(max_examples=200)
@given(words3, words3)
def test_expand_is_multiplicative(a, b):
    q = 4
    assert expand(a * b, q) == expand(a, q) * expand(b, q)


@given(words3)
def test_group_like(w):
    s = expand(w, 3)
    assert s.constant == 1
    assert s * expand(w.inverse(), 3) == one(3, 3)


@given(words3, words3)
def test_commutator_expansion_no_linear_terms(a, b):
    s = expand(commutator(a, b), 3)
    for j in (1, 2, 3):
        assert s.coefficient((j,)) == 0
