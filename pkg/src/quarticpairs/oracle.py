"""Independent geometric cross-check of the ring construction.

The two conics of a pair cut out four points in the projective plane.  This
module finds them numerically (exact integer resultant of a sheared pair,
complex root extraction, Newton polishing) and compares the spectra of the
multiplication operators of the constructed table with the values of the
patch functions at those points: multiplication by q_i must have eigenvalue
multiset {-g_{i+1}(P)} over the four points P.

Everything here is double-precision and tolerance-based by design; the
symbolic modules carry the exact statements, this one guards against a
systematically wrong construction agreeing with itself.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import cech
from .forms import (_substitute_form, disc_binary_cubic, evaluate_ternary,
                    resolvent_cubic_form)
from .polys import SparsePoly, det
from .rings import quartic_ring_from_pair


class Degenerate(Exception):
    """The pencil has no four distinct points (disc zero), or no shear
    separated them."""


class ToleranceNotMet(Exception):
    """Newton polishing could not reach the requested residual."""


def _projective_distance(u, v):
    k = max(range(3), key=lambda t: abs(u[t]))
    if abs(v[k]) < 1e-12:
        return float("inf")
    return max(abs(u[t] / u[k] - v[t] / v[k]) for t in range(3))


@dataclass(frozen=True)
class IntersectionSet:
    """Four projective points, each scaled so its largest-magnitude
    coordinate is exactly 1, with the residual max |A(P)|, |B(P)| relative
    to the coefficient size."""
    points: tuple
    residual: float

    def matches(self, expected, tol=1e-6):
        """Multiset equality with another four-point set, up to projective
        rescaling of each point."""
        if len(expected) != 4:
            return False
        expected = [tuple(complex(c) for c in pt) for pt in expected]
        for perm in itertools.permutations(range(4)):
            if all(_projective_distance(self.points[k], expected[perm[k]])
                   <= tol for k in range(4)):
                return True
        return False


_SHEAR_SEED = 719


def _form_scale(q):
    return max(1.0, max(abs(c) for c in q.coefficients()))


def _x3_coefficients(q):
    """A ternary quadratic as a quadratic in x3 over SparsePoly in x1, x2."""
    uni = ("x1", "x2")
    x1 = SparsePoly.var(uni, "x1")
    x2 = SparsePoly.var(uni, "x2")
    c2 = SparsePoly.const(uni, q.a33)
    c1 = q.a13 * x1 + q.a23 * x2
    c0 = q.a11 * x1 * x1 + q.a12 * x1 * x2 + q.a22 * x2 * x2
    return c2, c1, c0


def _resultant_x3(qa, qb):
    """Exact Sylvester resultant eliminating x3; a binary quartic in x1, x2
    returned as its 5 integer coefficients [x1^4, x1^3 x2, ..., x2^4]."""
    p2, p1, p0 = _x3_coefficients(qa)
    q2, q1, q0 = _x3_coefficients(qb)
    zero = SparsePoly.zero(("x1", "x2"))
    res = det([[p2, p1, p0, zero],
               [zero, p2, p1, p0],
               [q2, q1, q0, zero],
               [zero, q2, q1, q0]])
    coeffs = []
    for k in range(5):
        exps = (4 - k, k)
        coeffs.append(res.terms.get(exps, 0))
    return coeffs


def _random_shear(rng):
    while True:
        g = tuple(tuple(rng.randint(-3, 3) for _ in range(3))
                  for _ in range(3))
        if det(g) in (1, -1):
            return g


def _solve_sheared(qa, qb, tol):
    """Candidate intersection points of a (sheared) pair, or None when the
    configuration is numerically unfavorable for this shear."""
    coeffs = _resultant_x3(qa, qb)
    scale = max(abs(c) for c in coeffs) if any(coeffs) else 0
    if scale == 0:
        return None
    if abs(coeffs[0]) < 1e-9 * scale:
        return None            # root at infinity in the (x1 : x2) line
    roots = np.roots([complex(c) for c in coeffs])
    if len(roots) != 4:
        return None
    for r, s in itertools.combinations(roots, 2):
        if abs(r - s) < 1e-6 * max(1.0, abs(r), abs(s)):
            return None        # projection collides or points nearly merge

    # b33*A - a33*B is linear in x3; recover x3 from it at each root.
    lin1 = (qb.a33 * qa.a13 - qa.a33 * qb.a13,
            qb.a33 * qa.a23 - qa.a33 * qb.a23)
    lin0 = (qb.a33 * qa.a11 - qa.a33 * qb.a11,
            qb.a33 * qa.a12 - qa.a33 * qb.a12,
            qb.a33 * qa.a22 - qa.a33 * qb.a22)
    lscale = max(1.0, *(abs(c) for c in lin1 + lin0))
    points = []
    for r in roots:
        denom = lin1[0] * r + lin1[1]
        numer = lin0[0] * r * r + lin0[1] * r + lin0[2]
        if abs(denom) < 1e-9 * lscale * max(1.0, abs(r)) ** 2:
            return None
        points.append((r, 1.0 + 0.0j, -numer / denom))
    return points


def _newton_polish(p, point, tol):
    """Refine a common zero of the pair in the chart fixing the largest
    coordinate; returns the improved point or None."""
    qa, qb = p.formA, p.formB
    sa, sb = _form_scale(qa), _form_scale(qb)
    v = list(point)
    fixed = max(range(3), key=lambda t: abs(v[t]))
    free = [t for t in range(3) if t != fixed]

    def residual(w):
        return max(abs(evaluate_ternary(qa, w)) / sa,
                   abs(evaluate_ternary(qb, w)) / sb)

    def gradient(q, w, t):
        return (2 * q.coeff(t + 1, t + 1) * w[t]
                + sum(q.coeff(t + 1, s + 1) * w[s]
                      for s in range(3) if s != t))

    # termination on the residual the caller will see after rescaling to
    # largest coordinate 1, hence the norm^2 factor; aim well below tol and
    # accept tol at the end so the caller's check has margin
    norm = max(abs(c) for c in v)
    for _ in range(60):
        if residual(v) <= 1e-3 * tol * norm ** 2:
            return tuple(v)
        j = np.array([[gradient(qa, v, free[0]), gradient(qa, v, free[1])],
                      [gradient(qb, v, free[0]), gradient(qb, v, free[1])]],
                     dtype=complex)
        f = np.array([evaluate_ternary(qa, v), evaluate_ternary(qb, v)],
                     dtype=complex)
        try:
            step = np.linalg.solve(j, f)
        except np.linalg.LinAlgError:
            return None
        v[free[0]] -= step[0]
        v[free[1]] -= step[1]
        norm = max(abs(c) for c in v)
    return tuple(v) if residual(v) <= tol * norm ** 2 else None


def intersect_conics(p, tol=1e-8):
    """The four common projective zeros of the pair, numerically.

    Eliminates x3 by an exact resultant after a unimodular shear (identity
    first, then random shears with entries in [-3, 3]), polishes with
    Newton steps, and normalizes each point by its largest coordinate.
    Raises Degenerate when the resolvent discriminant vanishes or no shear
    works, ToleranceNotMet when polishing cannot reach tol.
    """
    if disc_binary_cubic(resolvent_cubic_form(p)) == 0:
        raise Degenerate("resolvent discriminant is zero")
    rng = random.Random(_SHEAR_SEED)
    polish_failed = False
    for attempt in range(10):
        g = (((1, 0, 0), (0, 1, 0), (0, 0, 1)) if attempt == 0
             else _random_shear(rng))
        qa = _substitute_form(p.formA, g)
        qb = _substitute_form(p.formB, g)
        sheared = _solve_sheared(qa, qb, tol)
        if sheared is None:
            continue
        # A point v of the sheared pair pulls back through x -> x*g.
        points = []
        for v in sheared:
            w = tuple(sum(v[r] * g[r][c] for r in range(3)) for c in range(3))
            polished = _newton_polish(p, w, tol)
            if polished is None:
                points = None
                break
            big = max(polished, key=abs)
            points.append(tuple(c / big for c in polished))
        if points is None:
            polish_failed = True
            continue
        for r, s in itertools.combinations(points, 2):
            if max(abs(a - b) for a, b in zip(r, s)) < 1e-6:
                points = None
                break
        if points is None:
            continue
        sa, sb = _form_scale(p.formA), _form_scale(p.formB)
        residual = max(max(abs(evaluate_ternary(p.formA, pt)) / sa,
                           abs(evaluate_ternary(p.formB, pt)) / sb)
                       for pt in points)
        if residual > tol:
            polish_failed = True
            continue
        return IntersectionSet(tuple(points), residual)
    if polish_failed:
        raise ToleranceNotMet(f"no shear reached residual {tol}")
    raise Degenerate("no shear separated the intersection points")


@lru_cache(maxsize=1)
def _patch_generators():
    return cech.generators()


def _generator_values(p, iset, tol):
    """-g_{i+1} evaluated at each point, for i = 1, 2, 3; cross-checks all
    patches whose coordinate is not small."""
    coeff_values = {}
    for which, form in (("a", p.formA), ("b", p.formB)):
        for name, c in zip(("11", "22", "33", "12", "13", "23"),
                           form.coefficients()):
            coeff_values[f"{which}{name}"] = c
    gens = _patch_generators()
    values = []
    for gen in gens[1:]:
        per_point = []
        for pt in iset.points:
            evals = []
            for patch in (1, 2, 3):
                if abs(pt[patch - 1]) < 0.5:
                    continue
                comp = gen.component(patch).substitute(coeff_values)
                evals.append(comp.evaluate(
                    {"x1": pt[0], "x2": pt[1], "x3": pt[2]}))
            spread = max(abs(u - v) for u in evals for v in evals)
            scale = max(1.0, max(abs(u) for u in evals))
            if spread > tol * scale * 10:
                raise ToleranceNotMet(
                    f"patch representatives of {gen.name} disagree: {evals}")
            per_point.append(-sum(evals) / len(evals))
        values.append(per_point)
    return values


def _mult_matrix(table, i):
    """Integer matrix of multiplication by q_i on the basis (1, q1, q2, q3);
    column c holds the coordinates of q_i * e_c."""
    cols = []
    cols.append([0, 0, 0, 0])
    cols[0][i] = 1
    for c in (1, 2, 3):
        row = table.row(i, c)
        cols.append(list(row))
    return [[cols[c][r] for c in range(4)] for r in range(4)]


def _multisets_match(eigs, vals, tol):
    """Best assignment over the 24 pairings of two 4-element multisets."""
    scale = max(1.0, *(abs(x) for x in eigs), *(abs(x) for x in vals))
    best = None
    for perm in itertools.permutations(range(4)):
        worst = max(abs(eigs[k] - vals[perm[k]]) for k in range(4))
        best = worst if best is None else min(best, worst)
    return best <= tol * scale


def char_poly(matrix):
    """Exact characteristic polynomial det(tI - M) of an integer matrix,
    as a SparsePoly in t."""
    uni = ("t",)
    t = SparsePoly.var(uni, "t")
    n = len(matrix)
    entries = [[t - matrix[r][c] if r == c
                else SparsePoly.const(uni, -matrix[r][c])
                for c in range(n)] for r in range(n)]
    return det(entries)


def verify_spectrum(p, tol=1e-8):
    """Eigenvalues of multiplication by q_i versus -g_{i+1} at the four
    intersection points, as multisets within tol; also checks that the
    characteristic polynomial (exact, integer) matches the product of
    (t - value) over the points, coefficientwise within tol.
    """
    iset = intersect_conics(p, tol)
    table = quartic_ring_from_pair(p)
    values = _generator_values(p, iset, tol)
    for i in (1, 2, 3):
        matrix = _mult_matrix(table, i)
        eigs = list(np.linalg.eigvals(np.array(matrix, dtype=float)))
        vals = values[i - 1]
        if not _multisets_match(eigs, vals, max(tol, 1e-7)):
            return False
        cp = char_poly(matrix)
        exact = [cp.terms.get((k,), 0) for k in range(5)]
        prod = np.poly1d([1.0])
        for v in vals:
            prod = prod * np.poly1d([1.0, -v])
        approx = list(prod.coeffs)[::-1]         # ascending in t
        scale = max(1.0, *(abs(c) for c in exact))
        for k in range(5):
            if abs(exact[k] - approx[k]) > max(tol, 1e-7) * scale * 10:
                return False
    return True
