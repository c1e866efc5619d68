import random

import numpy as np
import pytest

from quarticpairs import oracle
from quarticpairs.forms import (DoubleTernaryForm, disc_binary_cubic,
                                resolvent_cubic_form)
from quarticpairs.oracle import (Degenerate, IntersectionSet, char_poly,
                                 intersect_conics, verify_spectrum,
                                 _mult_matrix)
from quarticpairs.polys import SparsePoly
from quarticpairs.rings import quartic_ring_from_pair
from util import form, pair_of, random_pair, split_pair


def test_split_pair_intersection_points():
    iset = intersect_conics(split_pair())
    assert iset.residual <= 1e-8
    assert iset.matches([(0, 0, 1), (0, 1, -1), (1, 0, -1), (1, 1, -1)])
    for point in iset.points:
        assert max(abs(c) for c in point) == pytest.approx(1.0)


def test_four_corner_intersection():
    p = DoubleTernaryForm(form(a11=1, a33=-1), form(a22=1, a33=-1))
    iset = intersect_conics(p)
    assert iset.matches([(1, 1, 1), (1, -1, 1), (-1, 1, 1), (-1, -1, 1)])


def test_complex_points_are_found():
    # x1^2 + x3^2 meets x2^2 - x1x3 in strictly complex points
    p = DoubleTernaryForm(form(a11=1, a33=1), form(a22=1, a13=-1))
    assert disc_binary_cubic(resolvent_cubic_form(p)) != 0
    iset = intersect_conics(p)
    assert iset.residual <= 1e-8
    assert any(abs(c.imag) > 0.1 for point in iset.points for c in point)


def test_degenerate_pair_raises():
    with pytest.raises(Degenerate):
        intersect_conics(DoubleTernaryForm(form(a11=1), form(a22=1)))


def test_matches_is_projective_and_permutation_invariant():
    iset = IntersectionSet(
        ((1.0, 0.5, 0.25), (0.0, 1.0, -1.0), (1.0, 1.0, 1.0),
         (0.5, 1.0, 0.0)), 0.0)
    scaled = [(2.0, 2.0, 2.0), (0.0, -3.0, 3.0), (1.0, 2.0, 0.0),
              (4.0, 2.0, 1.0)]
    assert iset.matches(scaled)
    assert not iset.matches([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])


def test_mult_matrix_columns():
    table = quartic_ring_from_pair(split_pair())
    m1 = _mult_matrix(table, 1)
    # column 0 is q1 itself; column 1 holds q1*q1 = -q1
    assert [row[0] for row in m1] == [0, 1, 0, 0]
    assert [row[1] for row in m1] == [0, -1, 0, 0]


def test_split_pair_multiplication_spectrum():
    table = quartic_ring_from_pair(split_pair())
    eigs = np.linalg.eigvals(np.array(_mult_matrix(table, 1), dtype=float))
    assert sorted(e.real for e in eigs) == pytest.approx([-1, -1, 0, 0])
    assert max(abs(e.imag) for e in eigs) < 1e-12


def test_char_poly_is_exact():
    cp = char_poly([[0, -1], [1, 0]])
    t = SparsePoly.var(("t",), "t")
    assert cp == t * t + 1
    table = quartic_ring_from_pair(split_pair())
    # eigenvalues {-1, -1, 0, 0} exactly
    assert char_poly(_mult_matrix(table, 1)) == (t * t + t) ** 2


def test_verify_spectrum_split_pair():
    assert verify_spectrum(split_pair())


def test_verify_spectrum_random_batch():
    rng = random.Random(61)
    checked = 0
    while checked < 12:
        p = random_pair(rng, 4)
        if disc_binary_cubic(resolvent_cubic_form(p)) == 0:
            continue
        checked += 1
        assert verify_spectrum(p, tol=1e-8)


def test_spectrum_comparison_is_sensitive():
    # the doubled pair passes on its own, but its operator spectra must not
    # match the original pair's patch values (they differ by the factor 2)
    p = split_pair()
    doubled = pair_of([1, 0, 0, 0, 1, 0, 0, 2, 0, 0, 0, 2])
    assert verify_spectrum(doubled)

    iset = intersect_conics(p)
    values = oracle._generator_values(p, iset, 1e-8)
    table = quartic_ring_from_pair(doubled)
    matrix = oracle._mult_matrix(table, 2)
    eigs = list(np.linalg.eigvals(np.array(matrix, dtype=float)))
    assert not oracle._multisets_match(eigs, values[1], 1e-7)
