"""Small builders shared by the test modules."""

import random

from quarticpairs.forms import DoubleTernaryForm, TernaryQuadraticForm


def form(**kw):
    """A ternary quadratic from keyword coefficients, zeros elsewhere."""
    values = {name: 0 for name in TernaryQuadraticForm.FIELD_ORDER}
    for key, value in kw.items():
        if key not in values:
            raise KeyError(key)
        values[key] = value
    return TernaryQuadraticForm(*(values[name]
                                  for name in TernaryQuadraticForm.FIELD_ORDER))


def pair_of(coeffs):
    """A pair from 12 integers, A first then B, in field order."""
    coeffs = list(coeffs)
    return DoubleTernaryForm(TernaryQuadraticForm(*coeffs[:6]),
                             TernaryQuadraticForm(*coeffs[6:]))


def random_pair(rng, bound):
    return pair_of(rng.randint(-bound, bound) for _ in range(12))


def split_pair():
    """x1^2 + x1x3 and x2^2 + x2x3: four rational points, discriminant 1."""
    return DoubleTernaryForm(form(a11=1, a13=1), form(a22=1, a23=1))


def random_unimodular(rng, n, bound=2):
    from quarticpairs.polys import det
    while True:
        m = tuple(tuple(rng.randint(-bound, bound) for _ in range(n))
                  for _ in range(n))
        if det(m) in (1, -1):
            return m


def random_gamma(rng, bound=2):
    from quarticpairs.forms import GammaElement
    from quarticpairs.polys import det
    g = random_unimodular(rng, 3, bound)
    while True:
        h = random_unimodular(rng, 2, bound)
        if det(h) == det(g):
            return GammaElement(g, h)
