import pytest
from hypothesis import given, settings, strategies as st

from quarticpairs.polys import (COEFF_VARS, COEFF_X_VARS, LaurentPoly,
                                SparsePoly, det)

UNI = ("x", "y", "z")
LUNI = ("c", "x1", "x2")          # x1, x2 may carry negative exponents


def poly_strategy(universe=UNI, laurent=False):
    cls = LaurentPoly if laurent else SparsePoly
    lo = -3 if laurent else 0

    def build(items):
        terms = {}
        for exps, coeff in items:
            # only the projective x-variables may go negative
            fixed = tuple(max(e, 0) if not universe[i].startswith("x") else e
                          for i, e in enumerate(exps))
            terms[fixed] = terms.get(fixed, 0) + coeff
        return cls(universe, terms)

    exps = st.tuples(*[st.integers(lo, 3)] * len(universe))
    return st.lists(st.tuples(exps, st.integers(-9, 9)), max_size=6).map(build)


@settings(max_examples=80, deadline=None)
@given(poly_strategy(), poly_strategy(), poly_strategy())
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == SparsePoly.zero(UNI)
    assert f * 1 == f and f * 0 == SparsePoly.zero(UNI)


@settings(max_examples=80, deadline=None)
@given(poly_strategy(), poly_strategy(),
       st.tuples(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5)))
def test_evaluate_is_a_homomorphism(f, g, point):
    values = dict(zip(UNI, point))
    assert (f + g).evaluate(values) == f.evaluate(values) + g.evaluate(values)
    assert (f * g).evaluate(values) == f.evaluate(values) * g.evaluate(values)


@settings(max_examples=60, deadline=None)
@given(poly_strategy())
def test_str_parse_roundtrip(f):
    assert SparsePoly.parse(str(f), UNI) == f


@settings(max_examples=60, deadline=None)
@given(poly_strategy(LUNI, laurent=True))
def test_laurent_str_parse_roundtrip(f):
    assert LaurentPoly.parse(str(f), LUNI) == f


def test_var_and_monomial():
    x = SparsePoly.var(UNI, "x")
    m = SparsePoly.monomial(UNI, 4, {"x": 2, "z": 1})
    assert m == 4 * x * x * SparsePoly.var(UNI, "z")
    assert SparsePoly.const(UNI, 0).is_zero()
    with pytest.raises(ValueError):
        SparsePoly.var(UNI, "w")


def test_negative_exponents_guarded():
    with pytest.raises(ValueError):
        SparsePoly(UNI, {(-1, 0, 0): 1})
    # Laurent status is per-variable: only the projective coordinates
    with pytest.raises(ValueError):
        LaurentPoly(LUNI, {(-1, 0, 0): 1})
    f = LaurentPoly(LUNI, {(0, -2, 1): 3})
    assert f.evaluate({"c": 1, "x1": 2.0, "x2": 5.0}) == pytest.approx(3.75)


def test_substitute_specializes_and_keeps_the_rest():
    uni = ("a", "b", "x")
    a, b, x = (SparsePoly.var(uni, n) for n in uni)
    f = a * x * x - 2 * b * x + a * b
    g = f.substitute({"a": 3, "b": -1})
    assert g == 3 * x * x + 2 * x - 3
    assert g.universe == uni


def test_substitute_rejects_negative_powers_of_target():
    f = LaurentPoly(("a", "x1"), {(1, -1): 1})
    with pytest.raises(ValueError):
        f.substitute({"x1": 2})


def test_evaluate_laurent_divides():
    f = LaurentPoly(("x1",), {(-2,): 1})
    assert f.evaluate({"x1": 2.0}) == pytest.approx(0.25)
    assert f.evaluate({"x1": 1j}) == pytest.approx(-1.0)


def test_homogeneity_helpers():
    x, y = SparsePoly.var(UNI, "x"), SparsePoly.var(UNI, "y")
    assert (x * x + 3 * x * y).is_homogeneous(2)
    assert not (x * x + y).is_homogeneous()
    assert (x * x * y).total_degree() == 3


def test_filter_terms_partitions():
    x, y = SparsePoly.var(UNI, "x"), SparsePoly.var(UNI, "y")
    f = x * x + x * y + y + 4
    with_x = f.filter_terms(lambda e: e[0] > 0)
    without = f.filter_terms(lambda e: e[0] == 0)
    assert with_x + without == f
    assert without == y + 4


def test_reindex_embeds():
    small = ("x",)
    f = SparsePoly.var(small, "x") + 1
    g = f.reindex(UNI)
    assert g.universe == UNI
    assert g == SparsePoly.var(UNI, "x") + 1
    with pytest.raises(ValueError):
        g.reindex(("y", "z"))


def test_det_matches_hand_values():
    assert det(((1, 2), (3, 4))) == -2
    assert det(((2, 0, 1), (0, 1, 0), (1, 0, 1))) == 1
    x = SparsePoly.var(("x",), "x")
    one = SparsePoly.const(("x",), 1)
    assert det([[x, one], [one, x]]) == x * x - 1
    with pytest.raises(ValueError):
        det(((1, 2, 3), (4, 5, 6)))


def test_universe_constants():
    assert len(COEFF_VARS) == 12
    assert set(COEFF_X_VARS) - set(COEFF_VARS) == {"x1", "x2", "x3"}
