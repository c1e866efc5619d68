"""Universal-form verification: the quartic construction over the
12-variable coefficient ring, and the identities it must satisfy as exact
polynomial statements.
"""

from __future__ import annotations

import random
import time

from .forms import (DoubleTernaryForm, TernaryQuadraticForm,
                    disc_binary_cubic, resolvent_cubic_form)
from .polys import COEFF_VARS, SparsePoly
from .rings import (check_associativity, check_resolvent_identity,
                    quartic_ring_from_pair)


class VerificationFailure(Exception):
    """An identity that must hold exactly has a nonzero difference."""

    def __init__(self, identity, first_diff):
        self.identity = identity
        self.first_diff = first_diff
        super().__init__(f"{identity}: first differing monomial {first_diff}")


def universal_pair():
    """The pair whose coefficients are the 12 symbolic variables."""
    gens = [SparsePoly.var(COEFF_VARS, name) for name in COEFF_VARS]
    return DoubleTernaryForm(TernaryQuadraticForm(*gens[:6]),
                             TernaryQuadraticForm(*gens[6:]))


_cached_table = None


def universal_quartic_table():
    """quartic_ring_from_pair of the universal pair; every entry a
    polynomial in the 12 coefficients.  The construction is pure, so the
    result is computed once and shared."""
    global _cached_table
    if _cached_table is None:
        _cached_table = quartic_ring_from_pair(universal_pair())
    return _cached_table


def _first_diff(poly):
    lead = poly.leading_term()
    if lead is None:
        return "0"
    exponents, coeff = lead
    parts = [str(coeff)]
    for name, e in zip(poly.universe, exponents):
        if e:
            parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _universal_disc_symbolic(table, pair, budget):
    """Try the full polynomial discriminant equality within a soft time
    budget (seconds); returns True/False on a verdict, None on timeout."""
    from .rings import _mult, _trace  # shared element arithmetic

    deadline = time.monotonic() + budget
    products = table.products()
    basis = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    trace_matrix = []
    for i in range(4):
        row = []
        for j in range(4):
            prod = _mult(products, 4, basis[i], basis[j])
            row.append(_trace(products, 4, prod))
            if time.monotonic() > deadline:
                return None
        trace_matrix.append(row)

    # Expand along the first row (small entries: 4 and the linear traces);
    # check the clock between the four 3x3 minors.
    total = 0
    for c in range(4):
        minor = [[trace_matrix[r][cc] for cc in range(4) if cc != c]
                 for r in range(1, 4)]
        m00, m01, m02 = minor[0]
        m10, m11, m12 = minor[1]
        m20, m21, m22 = minor[2]
        minor_det = (m00 * (m11 * m22 - m12 * m21)
                     - m01 * (m10 * m22 - m12 * m20)
                     + m02 * (m10 * m21 - m11 * m20))
        term = trace_matrix[0][c] * minor_det
        total = total + (term if c % 2 == 0 else -term)
        if time.monotonic() > deadline:
            return None
    rhs = disc_binary_cubic(resolvent_cubic_form(pair))
    diff = total - rhs
    if diff != 0:
        raise VerificationFailure("disc_equality", _first_diff(diff))
    return True


def _universal_disc_specialized(points, bound, seed):
    """Exact integer agreement at `points` random specializations with
    coefficients in [-bound, bound]."""
    from .rings import ring_discriminant

    rng = random.Random(seed)
    for _ in range(points):
        coeffs = [rng.randint(-bound, bound) for _ in range(12)]
        pair = DoubleTernaryForm(TernaryQuadraticForm(*coeffs[:6]),
                                 TernaryQuadraticForm(*coeffs[6:]))
        lhs = ring_discriminant(quartic_ring_from_pair(pair))
        rhs = disc_binary_cubic(resolvent_cubic_form(pair))
        if lhs != rhs:
            raise VerificationFailure(
                "disc_equality", f"specialization {coeffs}: {lhs} != {rhs}")
    return True


def verify_universal_identities(disc_mode="auto", disc_budget=120.0,
                                disc_points=200, disc_bound=1000,
                                disc_seed=20240501):
    """Verify, as exact identities in the 12 variables:

    1. associativity of the universal quartic table;
    2. the resolvent identity, including generic symbolic x and y;
    3. discriminant equality with the resolvent cubic, fully symbolic when
       it fits in the time budget, otherwise by exact agreement at
       `disc_points` random integer specializations (mode reported).

    Returns {"associativity", "resolvent_identity", "disc_equality",
    "disc_equality_mode"}; raises VerificationFailure naming the first
    differing monomial otherwise.
    """
    if disc_mode not in ("auto", "symbolic", "specialized"):
        raise ValueError(f"unknown disc_mode {disc_mode!r}")

    pair = universal_pair()
    table = universal_quartic_table()

    violations = check_associativity(table)
    if violations:
        (i, j, k), diff = violations[0]
        first = next(d for d in diff if d != 0)
        raise VerificationFailure(
            f"associativity at (q{i}*q{j})*q{k}", _first_diff(first))

    if not check_resolvent_identity(pair, table):
        raise VerificationFailure("resolvent_identity",
                                  "difference is nonzero")

    mode = None
    if disc_mode in ("auto", "symbolic"):
        budget = disc_budget if disc_mode == "auto" else float("inf")
        verdict = _universal_disc_symbolic(table, pair, budget)
        if verdict:
            mode = "symbolic"
        elif disc_mode == "symbolic":
            raise VerificationFailure("disc_equality", "symbolic run aborted")
    if mode is None:
        _universal_disc_specialized(disc_points, disc_bound, disc_seed)
        mode = f"specialized-{disc_points}"

    return {"associativity": "pass",
            "resolvent_identity": "pass",
            "disc_equality": "pass",
            "disc_equality_mode": mode}
