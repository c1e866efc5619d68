import random

import pytest

from quarticpairs.polys import COEFF_VARS, SparsePoly
from quarticpairs.rings import (check_associativity, check_resolvent_identity,
                                quartic_ring_from_pair)
from quarticpairs.universal import (VerificationFailure, universal_pair,
                                    universal_quartic_table,
                                    verify_universal_identities)
from util import random_pair


def test_universal_pair_has_fresh_variables():
    p = universal_pair()
    assert p.formA.a11 == SparsePoly.var(COEFF_VARS, "a11")
    assert p.formB.a23 == SparsePoly.var(COEFF_VARS, "b23")


def test_universal_table_entry_is_the_lambda_bracket():
    # q1q2 has q3-coefficient -lambda^{11}_{22} up to the sign convention
    table = universal_quartic_table()
    entry = table.m(1, 2, 3)
    a11 = SparsePoly.var(COEFF_VARS, "a11")
    b22 = SparsePoly.var(COEFF_VARS, "b22")
    a22 = SparsePoly.var(COEFF_VARS, "a22")
    b11 = SparsePoly.var(COEFF_VARS, "b11")
    assert entry in (a11 * b22 - b11 * a22, b11 * a22 - a11 * b22)


def test_universal_table_is_homogeneous():
    # q-coefficients are quadratic in the 12 form coefficients; the unit
    # coefficients come from products of two brackets, hence quartic
    table = universal_quartic_table()
    for row in table.entries.values():
        for k, entry in enumerate(row):
            if isinstance(entry, SparsePoly) and not entry.is_zero():
                assert entry.is_homogeneous(4 if k == 0 else 2)


def test_specialization_commutes_with_construction():
    rng = random.Random(51)
    universal = universal_quartic_table()
    for _ in range(25):
        p = random_pair(rng, 6)
        values = {}
        for prefix, f in (("a", p.formA), ("b", p.formB)):
            for name, c in zip(("11", "22", "33", "12", "13", "23"),
                               f.coefficients()):
                values[prefix + name] = c
        direct = quartic_ring_from_pair(p)
        for (i, j), row in universal.entries.items():
            specialized = tuple(
                e.evaluate(values) if isinstance(e, SparsePoly) else e
                for e in row)
            assert specialized == direct.entries[(i, j)]


def test_universal_table_identities_hold_symbolically():
    table = universal_quartic_table()
    assert not check_associativity(table)
    assert check_resolvent_identity(universal_pair(), table)


def test_verify_universal_identities_reports_modes():
    results = verify_universal_identities()
    assert results["associativity"] == "pass"
    assert results["resolvent_identity"] == "pass"
    assert results["disc_equality"] == "pass"
    mode = results["disc_equality_mode"]
    assert mode == "symbolic" or mode.startswith("specialized")


def test_verify_universal_identities_specialized_mode():
    results = verify_universal_identities(disc_mode="specialized",
                                          disc_points=40)
    assert results["disc_equality"] == "pass"
    assert results["disc_equality_mode"] == "specialized-40"


def test_verification_failure_names_the_identity():
    exc = VerificationFailure("associativity", "a11*b22")
    assert exc.identity == "associativity"
    assert "a11*b22" in str(exc)


def test_bad_disc_mode_rejected():
    with pytest.raises(ValueError):
        verify_universal_identities(disc_mode="nonsense")
