"""Based cubic and quartic rings as explicit structure-constant tables.

A cubic ring is O*1 + O*w + O*th with the nine scalars of w*th, w^2, th^2;
a quartic ring is O*1 + O*q1 + O*q2 + O*q3 with scalars m[i][j][k].  Tables
are "normalized" when w*th is constant (cubic) resp. when q1q2 has no q1 or
q2 term and q1q3 has no q1 term (quartic); all constructors return normalized
tables.

Everything here is generic over the scalar ring: entries may be integers or
SparsePoly values, and only ring operations (+, -, *) are ever used.  The
quartic construction follows the recipe that the resolvent identity

    delta(1 ^ x ^ y ^ xy) = phi(x) ^ phi(y)

with the orientation delta(1 ^ q1 ^ q2 ^ q3) = c1 ^ c2 forces on the
coefficients, with the six constant terms recovered as the unique solution of
the linear system that associativity imposes once all other coefficients are
fixed.
"""

from __future__ import annotations

import itertools

from .forms import (BinaryCubicForm, DoubleTernaryForm, TernaryQuadraticForm,
                    decode_scalar, encode_scalar, evaluate_ternary,
                    resolvent_cubic_form)
from .polys import SparsePoly, det


class InternalConsistencyError(Exception):
    """A structural property that the construction guarantees has failed."""


# -- tables ----------------------------------------------------------------

class CubicRingTable:
    """Products of the based cubic ring: wt = w*th, ww = w^2, tt = th^2.

    Each product is a 3-tuple of coordinates over the basis (1, w, th).
    """

    __slots__ = ("wt", "ww", "tt")

    def __init__(self, wt, ww, tt):
        for name, value in (("wt", wt), ("ww", ww), ("tt", tt)):
            if len(tuple(value)) != 3:
                raise ValueError(f"{name} must have 3 coordinates")
        self.wt = tuple(wt)
        self.ww = tuple(ww)
        self.tt = tuple(tt)

    def __eq__(self, other):
        return (isinstance(other, CubicRingTable)
                and self.wt == other.wt and self.ww == other.ww
                and self.tt == other.tt)

    def __repr__(self):
        return f"CubicRingTable(wt={self.wt}, ww={self.ww}, tt={self.tt})"

    def is_normalized(self):
        return self.wt[1] == 0 and self.wt[2] == 0

    def products(self):
        return {(1, 1): self.ww, (1, 2): self.wt,
                (2, 1): self.wt, (2, 2): self.tt}


class QuarticRingTable:
    """Products q_i*q_j = m[i][j][0]*1 + sum_k m[i][j][k]*q_k for i <= j."""

    __slots__ = ("entries",)

    PAIRS = ((1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3))

    def __init__(self, entries):
        table = {}
        for pair in self.PAIRS:
            if pair not in entries:
                raise ValueError(f"missing product {pair}")
            row = tuple(entries[pair])
            if len(row) != 4:
                raise ValueError(f"product {pair} must have 4 coordinates")
            table[pair] = row
        self.entries = table

    def m(self, i, j, k):
        """m[i][j][k]; i, j in 1..3 in either order, k in 0..3."""
        i, j = min(i, j), max(i, j)
        return self.entries[(i, j)][k]

    def row(self, i, j):
        i, j = min(i, j), max(i, j)
        return self.entries[(i, j)]

    def __eq__(self, other):
        return (isinstance(other, QuarticRingTable)
                and self.entries == other.entries)

    def __repr__(self):
        rows = ", ".join(f"q{i}q{j}={self.entries[(i, j)]}"
                         for i, j in self.PAIRS)
        return f"QuarticRingTable({rows})"

    def is_normalized(self):
        return (self.m(1, 2, 1) == 0 and self.m(1, 2, 2) == 0
                and self.m(1, 3, 1) == 0)

    def products(self):
        out = {}
        for i in range(1, 4):
            for j in range(1, 4):
                out[(i, j)] = self.row(i, j)
        return out


class BasisChange:
    """A unimodular change u of the basis of the quotient module, plus
    integer constant shifts t of each basis element."""

    __slots__ = ("u", "t")

    def __init__(self, u, t=None):
        self.u = tuple(tuple(int(x) for x in row) for row in u)
        n = len(self.u)
        if n not in (2, 3) or any(len(row) != n for row in self.u):
            raise ValueError("u must be a square 2x2 or 3x3 integer matrix")
        if t is None:
            t = (0,) * n
        self.t = tuple(int(x) for x in t)
        if len(self.t) != n:
            raise ValueError("shift vector length must match u")
        if det(self.u) not in (1, -1):
            raise ValueError("u is not unimodular")

    @property
    def n(self):
        return len(self.u)

    def __repr__(self):
        return f"BasisChange(u={self.u}, t={self.t})"


def unimodular_inverse(u):
    """Exact inverse of a unimodular integer matrix, via the adjugate."""
    n = len(u)
    d = det(u)
    if d not in (1, -1):
        raise ValueError("matrix is not unimodular")
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[u[r][c] for c in range(n) if c != j]
                     for r in range(n) if r != i]
            cof = det(minor) if minor else 1
            adj[j][i] = d * cof if (i + j) % 2 == 0 else -d * cof
    return tuple(tuple(row) for row in adj)


def dual_change(g):
    """The dual basis change matching the action of (g, h) on forms:

        quartic_ring_from_pair(act_gamma(p, gamma))
            == apply_basis_change(quartic_ring_from_pair(p),
                                  dual_change(gamma.g))

    Rows of a BasisChange are the new basis elements, so taking them to be
    the rows of g makes element coordinates transform by the transpose
    inverse of g, the dual of the x -> x*g substitution in act_gamma.
    """
    return BasisChange(g)


# -- generic element arithmetic -------------------------------------------

def _mult(products, rank, u, v):
    """Product of two elements given as coordinate vectors over (1, e_1, ...)."""
    result = [0] * rank
    result[0] = u[0] * v[0]
    for s in range(1, rank):
        result[s] = u[0] * v[s] + v[0] * u[s]
    for i in range(1, rank):
        if u[i] == 0:
            continue
        for j in range(1, rank):
            if v[j] == 0:
                continue
            c = u[i] * v[j]
            prod = products[(i, j)]
            for s in range(rank):
                result[s] = result[s] + c * prod[s]
    return result


def _basis_vector(rank, i):
    vec = [0] * rank
    vec[i] = 1
    return vec


def _trace(products, rank, vec):
    """Trace of the multiplication-by-vec operator on the rank-n module."""
    total = 0
    for s in range(rank):
        total = total + _mult(products, rank, vec, _basis_vector(rank, s))[s]
    return total


def _rank_and_products(table):
    if isinstance(table, QuarticRingTable):
        return 4, table.products()
    if isinstance(table, CubicRingTable):
        return 3, table.products()
    raise TypeError(f"not a ring table: {table!r}")


def check_associativity(table):
    """All (e_i e_j) e_k - e_i (e_j e_k); empty list iff associative.

    Each violation is ((i, j, k), difference-vector) with 1-based indices of
    the non-unit basis elements.
    """
    rank, products = _rank_and_products(table)
    violations = []
    for i in range(1, rank):
        for j in range(1, rank):
            for k in range(1, rank):
                ei, ej, ek = (_basis_vector(rank, t) for t in (i, j, k))
                left = _mult(products, rank,
                             _mult(products, rank, ei, ej), ek)
                right = _mult(products, rank, ei,
                              _mult(products, rank, ej, ek))
                diff = [a - b for a, b in zip(left, right)]
                if any(d != 0 for d in diff):
                    violations.append(((i, j, k), diff))
    return violations


def ring_discriminant(table):
    """det Tr(e_i e_j) over the basis (1, e_1, ..., e_{n-1})."""
    rank, products = _rank_and_products(table)
    basis = [_basis_vector(rank, s) for s in range(rank)]
    matrix = []
    for i in range(rank):
        row = []
        for j in range(rank):
            prod = _mult(products, rank, basis[i], basis[j])
            row.append(_trace(products, rank, prod))
        matrix.append(row)
    return det(matrix)


# -- cubic rings and binary cubics ----------------------------------------

def cubic_ring_from_binary_cubic(f):
    """The normalized table of the cubic ring of a*y^3+b*y^2z+c*yz^2+d*z^3:

        w*th = -ad,  w^2 = -ac + b*w - a*th,  th^2 = -bd + d*w - c*th.
    """
    a, b, c, d = f.a, f.b, f.c, f.d
    return CubicRingTable(wt=(-(a * d), 0, 0),
                          ww=(-(a * c), b, -a),
                          tt=(-(b * d), d, -c))


def _shift_cubic(table, dw, dt):
    """The table over the shifted basis w' = w + dw, th' = th + dt."""
    products = table.products()

    def reexpress(vec):
        # 1, w', th' coords of an element given over (1, w, th):
        # w = w' - dw, th = th' - dt.
        return (vec[0] - vec[1] * dw - vec[2] * dt, vec[1], vec[2])

    def product(u, v):
        return reexpress(_mult(products, 3, u, v))

    w_new = (dw, 1, 0)
    t_new = (dt, 0, 1)
    return CubicRingTable(wt=product(w_new, t_new),
                          ww=product(w_new, w_new),
                          tt=product(t_new, t_new))


def binary_cubic_from_cubic_ring(table):
    """Normalize the table (shift w, th so w*th is constant) and read off
    the binary cubic; inverse of cubic_ring_from_binary_cubic.

    The representation has a unit by construction; associativity is checked
    and non-associative tables are rejected.
    """
    violations = check_associativity(table)
    if violations:
        (i, j, k), _ = violations[0]
        names = {1: "w", 2: "th"}
        raise ValueError(
            f"table is not associative: ({names[i]}*{names[j]})*{names[k]} "
            f"!= {names[i]}*({names[j]}*{names[k]})")
    e0, e1, e2 = table.wt
    normalized = _shift_cubic(table, -e2, -e1)
    if not normalized.is_normalized():
        raise InternalConsistencyError("normalization shift failed")
    a = -normalized.ww[2]
    b = normalized.ww[1]
    c = -normalized.tt[2]
    d = normalized.tt[1]
    expect = cubic_ring_from_binary_cubic(BinaryCubicForm(a, b, c, d))
    if normalized != expect:
        raise InternalConsistencyError(
            "normalized table constants disagree with the read-off form")
    return BinaryCubicForm(a, b, c, d)


# -- the quartic construction ---------------------------------------------

# Signs of the six permutations (i, j, k) of (1, 2, 3); the single source of
# truth for the +- in the coefficient recipe.
PERMUTATION_SIGN = {
    (1, 2, 3): 1, (2, 3, 1): 1, (3, 1, 2): 1,
    (1, 3, 2): -1, (3, 2, 1): -1, (2, 1, 3): -1,
}


def lam(p, sup, sub):
    """lambda^{sup}_{sub} = a_sup * b_sub - b_sup * a_sub."""
    qa, qb = p.formA, p.formB
    return (qa.coeff(*sup) * qb.coeff(*sub) - qb.coeff(*sup) * qa.coeff(*sub))


def _wedge_coefficient(x, y, z):
    """Coefficient of q1 ^ q2 ^ q3 in x ^ y ^ z (rows are q-coordinates)."""
    return det([list(x), list(y), list(z)])


def _resolvent_rhs(p, xbar, ybar):
    """phi(x) ^ phi(y) as a multiple of c1 ^ c2: B(x)A(y) - A(x)B(y)."""
    return (evaluate_ternary(p.formB, xbar) * evaluate_ternary(p.formA, ybar)
            - evaluate_ternary(p.formA, xbar)
            * evaluate_ternary(p.formB, ybar))


def quartic_ring_from_pair(p):
    """The unique normalized associative quartic table whose resolvent map
    is p.

    Steps: (1) the lambda formulas for the coefficients m[i][j][k] with
    k distinct from i, j and for m[i][i][k] with k != i; (2) the m[j][k][k]
    family against the normalization m[1][2][1] = m[1][2][2] = m[1][3][1] = 0;
    (3) m[i][i][i] from the resolvent identity with x = q_i + q_k,
    y = q_i + q_j; (4) the six constants from the associativity system.
    """
    m = {pair: [0, 0, 0, 0] for pair in QuarticRingTable.PAIRS}

    # Step 1: x = q_i, y = q_j gives m_ij^k; x = q_i + q_j, y = q_i gives
    # m_ii^k.
    for (i, j, k), sign in PERMUTATION_SIGN.items():
        if i < j:
            m[(i, j)][k] = sign * lam(p, (j, j), (i, i))
        m[(i, i)][k] = sign * lam(p, (i, j), (i, i))

    # Step 2: x = q_i + q_k, y = q_j gives m_jk^k - m_ij^i, an over-determined
    # system on the six (pair, index-in-pair) coefficients; normalization
    # pins three of them to 0 and propagation determines the rest.
    mixed = {(1, 2, 1): 0, (1, 2, 2): 0, (1, 3, 1): 0,
             (1, 3, 3): None, (2, 3, 2): None, (2, 3, 3): None}

    def mixed_key(a, b, c):
        return (min(a, b), max(a, b), c)

    relations = []
    for (i, j, k), sign in PERMUTATION_SIGN.items():
        # m_jk^k - m_ij^i = sign * lambda^{jj}_{ik}
        relations.append((mixed_key(j, k, k), mixed_key(i, j, i),
                          sign * lam(p, (j, j), (i, k))))
    for _ in range(len(relations)):
        for pos, neg, value in relations:
            if mixed[pos] is None and mixed[neg] is not None:
                mixed[pos] = value + mixed[neg]
            elif mixed[neg] is None and mixed[pos] is not None:
                mixed[neg] = mixed[pos] - value
    for pos, neg, value in relations:
        if mixed[pos] is None or mixed[neg] is None:
            raise InternalConsistencyError(
                "mixed-coefficient relations do not determine the table")
        if mixed[pos] - mixed[neg] != value:
            raise InternalConsistencyError(
                "mixed-coefficient relations are inconsistent")
    for (i, j, k), value in mixed.items():
        m[(i, j)][k] = value

    # Step 3: x = q_i + q_k, y = q_i + q_j determines m_ii^i.  The identity
    # is linear in the unknown with coefficient +-1, so solve directly.
    for i in range(1, 4):
        j, k = [t for t in (1, 2, 3) if t != i]
        if PERMUTATION_SIGN[(i, j, k)] < 0:
            j, k = k, j
        x = [0, 0, 0]
        y = [0, 0, 0]
        x[i - 1] = x[k - 1] = 1
        y[i - 1] = y[j - 1] = 1
        # q-coordinates of x*y with m_ii^i treated as 0.
        prod = [0, 0, 0]
        for a, b in ((i, i), (i, j), (i, k), (j, k)):
            for s in range(1, 4):
                prod[s - 1] = prod[s - 1] + m[(min(a, b), max(a, b))][s]
        unit = [0, 0, 0]
        unit[i - 1] = 1
        pivot = _wedge_coefficient(x, y, unit)
        if pivot not in (1, -1):
            raise InternalConsistencyError(
                "diagonal-coefficient equation is not unimodular")
        rhs = _resolvent_rhs(p, x, y)
        m[(i, i)][i] = pivot * (rhs - _wedge_coefficient(x, y, prod))

    # Step 4: the constants.  For every triple and every q_s component,
    # associativity gives a linear equation in the six constants with
    # coefficients in {-1, 0, 1}.
    unknown_index = {pair: idx
                     for idx, pair in enumerate(QuarticRingTable.PAIRS)}

    def mrow(a, b):
        return m[(min(a, b), max(a, b))]

    rows = []
    for i in range(1, 4):
        for j in range(1, 4):
            for k in range(1, 4):
                for s in range(1, 4):
                    coeffs = [0] * 6
                    if s == k:
                        coeffs[unknown_index[(min(i, j), max(i, j))]] += 1
                    if s == i:
                        coeffs[unknown_index[(min(j, k), max(j, k))]] -= 1
                    rhs = 0
                    for t in range(1, 4):
                        rhs = rhs + mrow(j, k)[t] * mrow(i, t)[s]
                        rhs = rhs - mrow(i, j)[t] * mrow(t, k)[s]
                    rows.append((coeffs, rhs))

    constants = _solve_unit_system(rows, 6)
    for pair, idx in unknown_index.items():
        m[pair][0] = constants[idx]

    table = QuarticRingTable({pair: tuple(vals) for pair, vals in m.items()})
    leftover = check_associativity(table)
    if leftover:
        raise InternalConsistencyError(
            f"constructed table is not associative at {leftover[0][0]}")
    return table


def _solve_unit_system(rows, n):
    """Solve a linear system whose matrix has entries in {-1, 0, 1} and a
    unique solution reachable by unit pivots; verify every equation.

    Division-free, so it works verbatim over polynomial scalars.
    """
    solution = [None] * n
    progress = True
    while progress:
        progress = False
        for coeffs, rhs in rows:
            open_idx = [idx for idx, cf in enumerate(coeffs)
                        if cf != 0 and solution[idx] is None]
            if len(open_idx) != 1:
                continue
            idx = open_idx[0]
            if coeffs[idx] not in (1, -1):
                continue
            value = rhs
            for other, cf in enumerate(coeffs):
                if cf != 0 and other != idx:
                    value = value - cf * solution[other]
            solution[idx] = coeffs[idx] * value
            progress = True
    if any(v is None for v in solution):
        raise InternalConsistencyError(
            "associativity system has no unit pivot; constants undetermined")
    for coeffs, rhs in rows:
        acc = 0
        for idx, cf in enumerate(coeffs):
            if cf != 0:
                acc = acc + cf * solution[idx]
        if acc - rhs != 0:
            raise InternalConsistencyError(
                "associativity system is inconsistent")
    return solution


def check_resolvent_identity(p, table):
    """Whether delta(1 ^ x ^ y ^ xy) = phi(x) ^ phi(y) for x, y in the
    spanning set {q_i, q_i + q_j, q1 + q2 + q3}.

    Over symbolic scalars, x and y additionally range over generic vectors
    with fresh indeterminate coordinates, which makes the check a polynomial
    identity in the original variables and the fresh ones.
    """
    spanning = [[1, 0, 0], [0, 1, 0], [0, 0, 1],
                [1, 1, 0], [1, 0, 1], [0, 1, 1], [1, 1, 1]]
    pairs = [(x, y) for x in spanning for y in spanning]

    symbolic = any(isinstance(c, SparsePoly)
                   for row in table.entries.values() for c in row)
    if symbolic:
        sample = next(c for row in table.entries.values()
                      for c in row if isinstance(c, SparsePoly))
        fresh = ("u1", "u2", "u3", "v1", "v2", "v3")
        universe = sample.universe + tuple(
            name for name in fresh if name not in sample.universe)

        def embed(value):
            if isinstance(value, SparsePoly):
                return value.reindex(universe)
            return value

        table = QuarticRingTable(
            {pair: tuple(embed(c) for c in row)
             for pair, row in table.entries.items()})
        p = DoubleTernaryForm(
            TernaryQuadraticForm(*[embed(c)
                                   for c in p.formA.coefficients()]),
            TernaryQuadraticForm(*[embed(c)
                                   for c in p.formB.coefficients()]))
        xgen = [SparsePoly.var(universe, f"u{t}") for t in (1, 2, 3)]
        ygen = [SparsePoly.var(universe, f"v{t}") for t in (1, 2, 3)]
        pairs = pairs + [(xgen, ygen)]

    products = table.products()
    for x, y in pairs:
        xfull = [0] + list(x)
        yfull = [0] + list(y)
        prod = _mult(products, 4, xfull, yfull)
        lhs = _wedge_coefficient(x, y, prod[1:])
        rhs = _resolvent_rhs(p, x, y)
        if lhs - rhs != 0:
            return False
    return True


# -- basis changes ---------------------------------------------------------

def _change_quartic_basis(table, columns):
    """Rewrite the table over new basis elements given as old-coordinate
    column vectors (the unit column is implicit)."""
    big = [[1] + [col[0] for col in columns]]
    for r in range(1, 4):
        big.append([0] + [col[r] for col in columns])
    inv = unimodular_inverse(big)
    products = table.products()

    def to_new(vec):
        return [sum(inv[r][c] * vec[c] for c in range(4)) for r in range(4)]

    entries = {}
    for i, j in QuarticRingTable.PAIRS:
        prod = _mult(products, 4, columns[i - 1], columns[j - 1])
        entries[(i, j)] = tuple(to_new(prod))
    return QuarticRingTable(entries)


def _shift_quartic(table, shifts):
    """The table over q_i' = q_i + s_i, for scalar (possibly symbolic) s_i."""
    products = table.products()

    def reexpress(vec):
        const = vec[0]
        for idx, s in enumerate(shifts):
            const = const - vec[idx + 1] * s
        return (const, vec[1], vec[2], vec[3])

    entries = {}
    for i, j in QuarticRingTable.PAIRS:
        u = [shifts[i - 1], 0, 0, 0]
        v = [shifts[j - 1], 0, 0, 0]
        u[i] = 1
        v[j] = 1
        entries[(i, j)] = reexpress(_mult(products, 4, u, v))
    return QuarticRingTable(entries)


def normalize_quartic_table(table):
    """Shift the lift so m[1][2][1] = m[1][2][2] = m[1][3][1] = 0; the shifts
    are uniquely determined by those three entries."""
    shifts = (-table.m(1, 2, 2), -table.m(1, 2, 1), -table.m(1, 3, 1))
    result = _shift_quartic(table, shifts)
    if not result.is_normalized():
        raise InternalConsistencyError("normalizing shifts failed")
    return result


def apply_basis_change(table, change):
    """Transform the basis of Q/O by change.u, apply the shifts change.t,
    then re-normalize the lift; returns a normalized table of the same ring.
    """
    if not isinstance(change, BasisChange):
        raise TypeError("change must be a BasisChange")
    if change.n != 3:
        raise ValueError("quartic tables need a 3x3 basis change")
    if det(change.u) not in (1, -1):
        raise ValueError("u is not unimodular")
    columns = [[change.t[i]] + list(change.u[i]) for i in range(3)]
    moved = _change_quartic_basis(table, columns)
    return normalize_quartic_table(moved)


def find_basis_change(source, target, bound=2):
    """Search for a BasisChange carrying `source` onto `target`, or None.

    Enumerates unimodular u with entries of growing magnitude up to `bound`;
    constant shifts need no enumeration because re-normalization pins them
    once u is fixed.  Desk-scale: meant for small fixture tables, not as a
    general isomorphism decision procedure.
    """
    for shell in range(bound + 1):
        values = list(range(-shell, shell + 1))
        for flat in _matrices_with_shell(values, shell):
            u = (tuple(flat[0:3]), tuple(flat[3:6]), tuple(flat[6:9]))
            if det(u) not in (1, -1):
                continue
            change = BasisChange(u)
            if apply_basis_change(source, change) == target:
                return change
    return None


def _matrices_with_shell(values, shell):
    """All 9-entry tuples over `values` whose maximum magnitude is `shell`."""
    for flat in itertools.product(values, repeat=9):
        if max(abs(v) for v in flat) == shell:
            yield flat


def pair_from_based_quartic(table, cubic, phi):
    """Read the double ternary form off a based pair: validate that `table`
    is associative, that `phi` satisfies the resolvent identity for it, and
    that `cubic` is the cubic ring of the resolvent cubic of `phi`; then the
    form is phi itself."""
    if isinstance(phi, DoubleTernaryForm):
        pair = phi
    else:
        pair = DoubleTernaryForm(*phi)
    violations = check_associativity(table)
    if violations:
        raise ValueError(
            f"precondition failed: table not associative at "
            f"{violations[0][0]}")
    if not check_resolvent_identity(pair, table):
        raise ValueError(
            "precondition failed: resolvent identity does not hold for phi")
    expected = cubic_ring_from_binary_cubic(resolvent_cubic_form(pair))
    if cubic != expected:
        raise ValueError(
            "precondition failed: cubic table is not the resolvent cubic "
            "ring of phi")
    return pair


# -- JSON interface --------------------------------------------------------

def quartic_table_to_json_dict(table):
    return {"m": {f"{i}{j}": [encode_scalar(c) for c in table.row(i, j)]
                  for i, j in QuarticRingTable.PAIRS}}


def quartic_table_from_json_dict(data):
    if not isinstance(data, dict) or "m" not in data:
        raise ValueError("quartic table document must have an 'm' field")
    entries = {}
    for i, j in QuarticRingTable.PAIRS:
        key = f"{i}{j}"
        row = data["m"].get(key)
        if not isinstance(row, list) or len(row) != 4:
            raise ValueError(f"m[{key!r}] must be a list of 4 integers")
        entries[(i, j)] = tuple(
            decode_scalar(v, f"m[{key!r}][{t}]") for t, v in enumerate(row))
    return QuarticRingTable(entries)


def cubic_table_to_json_dict(table):
    return {"ww": [encode_scalar(c) for c in table.ww],
            "wt": [encode_scalar(c) for c in table.wt],
            "tt": [encode_scalar(c) for c in table.tt]}


def cubic_table_from_json_dict(data):
    if not isinstance(data, dict):
        raise ValueError("cubic table document must be a JSON object")
    rows = {}
    for key in ("ww", "wt", "tt"):
        row = data.get(key)
        if not isinstance(row, list) or len(row) != 3:
            raise ValueError(f"{key!r} must be a list of 3 integers")
        rows[key] = tuple(decode_scalar(v, f"{key}[{t}]")
                          for t, v in enumerate(row))
    return CubicRingTable(wt=rows["wt"], ww=rows["ww"], tt=rows["tt"])
