"""End-to-end acceptance checks.

Each test prints one summary line (visible under pytest -v -s or in the
captured output of a failure) and asserts the criterion it names.  The
random cases are seeded, so runs are reproducible.
"""

import io
import itertools
import random
from fractions import Fraction

import numpy as np
import sympy
from sympy.matrices.normalforms import smith_normal_form

from quarticpairs import cech, cli, oracle, universal
from quarticpairs.forms import (BinaryCubicForm, act_gamma,
                                disc_binary_cubic, resolvent_cubic_form)
from quarticpairs.rings import (QuarticRingTable, _mult, apply_basis_change,
                                binary_cubic_from_cubic_ring,
                                check_associativity, check_resolvent_identity,
                                cubic_ring_from_binary_cubic, dual_change,
                                find_basis_change, pair_from_based_quartic,
                                quartic_ring_from_pair, ring_discriminant)
from util import pair_of, random_gamma, random_pair, split_pair


def report(number, name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"acceptance {number:02d} {name}: {status}{suffix}", flush=True)
    assert ok, f"criterion {number} {name}{suffix}"


def test_01_delone_faddeev_roundtrip():
    box = range(-2, 3)
    failures = 0
    for coeffs in itertools.product(box, repeat=4):
        f = BinaryCubicForm(*coeffs)
        if binary_cubic_from_cubic_ring(cubic_ring_from_binary_cubic(f)) != f:
            failures += 1
    report(1, "cubic-ring-roundtrip", failures == 0, "625 forms")


def test_02_universal_associativity():
    table = universal.universal_quartic_table()
    violations = check_associativity(table)
    report(2, "universal-associativity", not violations,
           "exact in 12 variables")


def test_03_universal_resolvent_identity():
    ok = check_resolvent_identity(universal.universal_pair(),
                                  universal.universal_quartic_table())
    report(3, "universal-resolvent-identity", ok,
           "spanning set and generic x, y")


def test_04_discriminant_equality():
    rng = random.Random(20240607)
    failures = 0
    for _ in range(1000):
        p = random_pair(rng, 5)
        resolvent = resolvent_cubic_form(p)
        d = ring_discriminant(quartic_ring_from_pair(p))
        if d != disc_binary_cubic(resolvent):
            failures += 1
        elif d != ring_discriminant(cubic_ring_from_binary_cubic(resolvent)):
            failures += 1
    results = universal.verify_universal_identities()
    symbolic_ok = results["disc_equality"] == "pass"
    report(4, "discriminant-equality", failures == 0 and symbolic_ok,
           f"1000 pairs, identity mode {results['disc_equality_mode']}")


def _table_from_m(**entries):
    filled = {pair: (0, 0, 0, 0) for pair in QuarticRingTable.PAIRS}
    for key, row in entries.items():
        filled[(int(key[1]), int(key[2]))] = tuple(row)
    return QuarticRingTable(filled)


def _split_ring_homs(table):
    """All unital ring maps to the base, found by value enumeration."""
    homs = []
    for values in itertools.product((0, -1), repeat=3):
        phi = (1,) + values

        def image(vec):
            return sum(c * v for c, v in zip(vec, phi))

        if all(values[i - 1] * values[j - 1] == image(table.row(i, j))
               for i in (1, 2, 3) for j in (1, 2, 3)):
            homs.append(phi)
    return homs


def test_05_small_pair_fixtures():
    problems = []

    # zero pair: the complement of the unit multiplies to zero
    zero_table = quartic_ring_from_pair(pair_of([0] * 12))
    if any(row != (0, 0, 0, 0) for row in zero_table.entries.values()):
        problems.append("zero pair")

    # x1x2, x1x3: unit plus a square-zero plane
    t2 = quartic_ring_from_pair(pair_of([0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0]))
    canon2 = _table_from_m(m11=(0, 1, 0, 0))
    change2 = find_basis_change(t2, canon2, bound=1)
    if change2 is None or apply_basis_change(t2, change2) != canon2:
        problems.append("idempotent fixture")

    # x1x2, x1^2: one cube-zero generator against a square-zero one
    t3 = quartic_ring_from_pair(pair_of([0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0]))
    canon3 = _table_from_m(m11=(0, 0, 0, 1))
    change3 = find_basis_change(t3, canon3, bound=1)
    if change3 is None or apply_basis_change(t3, change3) != canon3:
        problems.append("nilpotent fixture")

    # split pair: discriminant 1 and four orthogonal rational idempotents
    split_table = quartic_ring_from_pair(split_pair())
    if ring_discriminant(split_table) != 1:
        problems.append("split disc")
    homs = _split_ring_homs(split_table)
    if len(homs) != 4:
        problems.append("split homs")
    else:
        m = sympy.Matrix(homs)
        inv = m.inv()
        products = split_table.products()
        idempotents = [
            [Fraction(sympy.Rational(inv[r, s]).p,
                      sympy.Rational(inv[r, s]).q) for r in range(4)]
            for s in range(4)]
        for s, e in enumerate(idempotents):
            for t, f in enumerate(idempotents):
                prod = _mult(products, 4, e, f)
                expected = e if s == t else [Fraction(0)] * 4
                if [Fraction(c) for c in prod] != expected:
                    problems.append(f"idempotent product {s}{t}")
        total = [sum(col) for col in zip(*idempotents)]
        if total != [1, 0, 0, 0]:
            problems.append("idempotent sum")

    # q-scaled split pair: discriminant q^12 and index q^6 inside the
    # product lattice cut out by the four points
    base_coeffs = [c for f in (split_pair().formA, split_pair().formB)
                   for c in f.coefficients()]
    for q in (2, 3, 5):
        scaled = pair_of([q * c for c in base_coeffs])
        table_q = quartic_ring_from_pair(scaled)
        if ring_discriminant(table_q) != q ** 12:
            problems.append(f"disc q={q}")
            continue
        # the scaled ring maps to Z^4 by scaling each split hom by q^2
        psi = [[1, 1, 1, 1]] + [
            [q * q * hom[i] for hom in homs] for i in (1, 2, 3)]
        products_q = table_q.products()
        for i in (1, 2, 3):
            for j in (1, 2, 3):
                basis_i = [0, 0, 0, 0]
                basis_i[i] = 1
                basis_j = [0, 0, 0, 0]
                basis_j[j] = 1
                prod = _mult(products_q, 4, basis_i, basis_j)
                for t in range(4):
                    lhs = psi[i][t] * psi[j][t]
                    rhs = sum(prod[r] * psi[r][t] for r in range(4))
                    if lhs != rhs:
                        problems.append(f"hom q={q} ({i}{j})")
        divisors = smith_normal_form(sympy.Matrix(psi))
        index = abs(int(divisors.det()))
        if index != q ** 6:
            problems.append(f"index q={q} got {index}")

    report(5, "small-pair-fixtures", not problems, "; ".join(problems))


def test_06_cech_suite():
    problems = []
    if not cech.verify_h_expansion():
        problems.append("H expansion")
    for m, n in ((1, 3), (2, 2), (3, 1), (1, 4), (2, 3), (3, 2), (4, 1)):
        if not cech.verify_lemma_identity(m, n):
            problems.append(f"lemma ({m},{n})")
    relations = cech.verify_h_f_relations()
    problems += [name for name, ok in relations.items() if not ok]
    cells = cech.verify_generator_table()
    problems += [c["row"] for c in cells if c["status"] != "pass"]
    chart = cech.verify_connecting_chart()
    if not cech.chart_report_ok(chart):
        problems += [r["row"] for r in chart
                     if r["status"] not in ("pass", "misprint")]
    mutations = cech.run_mutation_suite()
    problems += [f"mutation not caught: {name}"
                 for name, caught in mutations.items() if not caught]
    detail = f"{len(mutations)} mutations caught" if not problems else ""
    report(6, "cech-suite", not problems,
           detail or "; ".join(problems))


def test_07_gamma_equivariance():
    rng = random.Random(20240608)
    failures = 0
    for _ in range(100):
        p = random_pair(rng, 2)
        gamma = random_gamma(rng, bound=2)
        left = quartic_ring_from_pair(act_gamma(p, gamma))
        right = apply_basis_change(quartic_ring_from_pair(p),
                                   dual_change(gamma.g))
        if left != right:
            failures += 1
    report(7, "gamma-equivariance", failures == 0, "100 cases")


def test_08_based_roundtrip():
    rng = random.Random(20240609)
    failures = 0
    for _ in range(100):
        p = random_pair(rng, 5)
        table = quartic_ring_from_pair(p)
        cubic = cubic_ring_from_binary_cubic(resolvent_cubic_form(p))
        if pair_from_based_quartic(table, cubic, p) != p:
            failures += 1
    report(8, "based-roundtrip", failures == 0, "100 pairs")


def test_09_spectrum_oracle():
    rng = random.Random(20240610)
    checked = 0
    failures = 0
    while checked < 50:
        p = random_pair(rng, 4)
        if disc_binary_cubic(resolvent_cubic_form(p)) == 0:
            continue
        checked += 1
        if not oracle.verify_spectrum(p, tol=1e-8):
            failures += 1
    table = quartic_ring_from_pair(split_pair())
    eigs = np.linalg.eigvals(
        np.array(oracle._mult_matrix(table, 1), dtype=float))
    split_ok = sorted(e.real for e in eigs) == [-1, -1, 0, 0] or \
        max(abs(s - t) for s, t in zip(sorted(e.real for e in eigs),
                                       [-1, -1, 0, 0])) < 1e-8
    report(9, "spectrum-oracle", failures == 0 and split_ok,
           "50 pairs at 1e-8; split multiset {-1,-1,0,0}")


def test_10_scan_determinism():
    first, second = io.StringIO(), io.StringIO()
    cli.cmd_scan(1, 100, 42, stream=first)
    cli.cmd_scan(1, 100, 42, stream=second)
    identical = first.getvalue().encode() == second.getvalue().encode()
    report(10, "scan-determinism", identical, "bound 1, count 100, seed 42")
