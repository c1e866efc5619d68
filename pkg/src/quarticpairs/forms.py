"""Ternary quadratic forms, pairs, binary cubics, and the group action.

A pair (A, B) of integral ternary quadratic forms is the based coordinate
description of a two-dimensional pencil of conics; its resolvent binary cubic
is g(y,z) = 4*Det(M_A*y + M_B*z) where M_A, M_B are the half-integral
symmetric matrices.  The factor 4 is folded into the expansion so every
computation below stays in the coefficient ring (no division anywhere).

All form types are generic over the scalar ring: coefficients may be Python
integers or SparsePoly values, and every operation uses only ring arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polys import det

JSON_INT_LIMIT = 2 ** 53  # larger integers are serialized as decimal strings


@dataclass(frozen=True)
class TernaryQuadraticForm:
    """a11*x1^2 + a22*x2^2 + a33*x3^2 + a12*x1x2 + a13*x1x3 + a23*x2x3."""

    a11: object
    a22: object
    a33: object
    a12: object
    a13: object
    a23: object

    FIELD_ORDER = ("a11", "a22", "a33", "a12", "a13", "a23")

    def coefficients(self):
        return (self.a11, self.a22, self.a33, self.a12, self.a13, self.a23)

    def coeff(self, i, j):
        """Coefficient of x_i*x_j (1-based, order-insensitive)."""
        if i == j:
            return getattr(self, f"a{i}{i}")
        i, j = min(i, j), max(i, j)
        return getattr(self, f"a{i}{j}")

    def __call__(self, v):
        return evaluate_ternary(self, v)


@dataclass(frozen=True)
class DoubleTernaryForm:
    """An ordered pair (A, B) of ternary quadratic forms with the fixed
    orientation convention that (x1,x2,x3) and (c1,c2) are oriented bases."""

    formA: TernaryQuadraticForm
    formB: TernaryQuadraticForm


@dataclass(frozen=True)
class BinaryCubicForm:
    """a*y^3 + b*y^2 z + c*y z^2 + d*z^3."""

    a: object
    b: object
    c: object
    d: object

    def coefficients(self):
        return (self.a, self.b, self.c, self.d)

    def __call__(self, y, z):
        return (self.a * y * y * y + self.b * y * y * z
                + self.c * y * z * z + self.d * z * z * z)


class GammaElement:
    """An element (g, h) of GL3(Z) x GL2(Z) with det(g)*det(h) = 1."""

    __slots__ = ("g", "h")

    def __init__(self, g, h):
        self.g = tuple(tuple(int(x) for x in row) for row in g)
        self.h = tuple(tuple(int(x) for x in row) for row in h)
        if len(self.g) != 3 or any(len(r) != 3 for r in self.g):
            raise ValueError("g must be a 3x3 integer matrix")
        if len(self.h) != 2 or any(len(r) != 2 for r in self.h):
            raise ValueError("h must be a 2x2 integer matrix")
        self.validate()

    def validate(self):
        dg, dh = det(self.g), det(self.h)
        if dg not in (1, -1) or dh not in (1, -1) or dg * dh != 1:
            raise ValueError(
                f"(det g, det h) = ({dg}, {dh}) violates det(g)det(h) = 1")

    def __eq__(self, other):
        return (isinstance(other, GammaElement)
                and self.g == other.g and self.h == other.h)

    def __repr__(self):
        return f"GammaElement(g={self.g}, h={self.h})"

    @classmethod
    def identity(cls):
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)), ((1, 0), (0, 1)))


def compose_gamma(gamma2, gamma1):
    """The element acting like gamma1 followed by gamma2."""
    return GammaElement(_matmul(gamma2.g, gamma1.g),
                        _matmul(gamma2.h, gamma1.h))


def _matmul(m1, m2):
    n = len(m1)
    return tuple(tuple(sum(m1[i][k] * m2[k][j] for k in range(n))
                       for j in range(n)) for i in range(n))


def evaluate_ternary(q, v):
    """q(v1, v2, v3), exactly, for any scalar ring."""
    v1, v2, v3 = v
    return (q.a11 * v1 * v1 + q.a22 * v2 * v2 + q.a33 * v3 * v3
            + q.a12 * v1 * v2 + q.a13 * v1 * v3 + q.a23 * v2 * v3)


def four_det(q):
    """4 * Det of the half-integral symmetric matrix of q, expanded integrally."""
    return (4 * q.a11 * q.a22 * q.a33 + q.a12 * q.a13 * q.a23
            - q.a11 * q.a23 * q.a23
            - q.a22 * q.a13 * q.a13
            - q.a33 * q.a12 * q.a12)


def _four_det_polar(qa, qb):
    """Coefficient of y^2 z in 4*Det(M_A*y + M_B*z): the first polarization."""
    return (4 * (qa.a11 * qa.a22 * qb.a33 + qa.a11 * qb.a22 * qa.a33
                 + qb.a11 * qa.a22 * qa.a33)
            + (qa.a12 * qa.a13 * qb.a23 + qa.a12 * qb.a13 * qa.a23
               + qb.a12 * qa.a13 * qa.a23)
            - (qb.a11 * qa.a23 * qa.a23 + 2 * qa.a11 * qa.a23 * qb.a23)
            - (qb.a22 * qa.a13 * qa.a13 + 2 * qa.a22 * qa.a13 * qb.a13)
            - (qb.a33 * qa.a12 * qa.a12 + 2 * qa.a33 * qa.a12 * qb.a12))


def resolvent_cubic_form(p):
    """The binary cubic g(y,z) = 4*Det(M_A*y + M_B*z) of the pair p."""
    qa, qb = p.formA, p.formB
    return BinaryCubicForm(four_det(qa), _four_det_polar(qa, qb),
                           _four_det_polar(qb, qa), four_det(qb))


def disc_binary_cubic(f):
    """Discriminant 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2."""
    a, b, c, d = f.a, f.b, f.c, f.d
    return (18 * a * b * c * d - 4 * b ** 3 * d + b ** 2 * c ** 2
            - 4 * a * c ** 3 - 27 * a ** 2 * d ** 2)


def _substitute_form(q, g):
    """The form q composed with the substitution x -> x * g (row convention)."""
    rows = g
    diag = [evaluate_ternary(q, rows[i]) for i in range(3)]
    coeffs = {}
    for i in range(3):
        coeffs[f"a{i + 1}{i + 1}"] = diag[i]
    for i in range(3):
        for j in range(i + 1, 3):
            s = tuple(rows[i][t] + rows[j][t] for t in range(3))
            coeffs[f"a{i + 1}{j + 1}"] = (evaluate_ternary(q, s)
                                          - diag[i] - diag[j])
    return TernaryQuadraticForm(**coeffs)


def act_gamma(p, gamma):
    """Substitute both forms through gamma.g, then mix them through gamma.h.

    h acts on the column vector (A, B) from the left, so
    A' = h11*(A o g) + h12*(B o g) and B' = h21*(A o g) + h22*(B o g).
    """
    if not isinstance(gamma, GammaElement):
        gamma = GammaElement(gamma[0], gamma[1])
    gamma.validate()
    qa = _substitute_form(p.formA, gamma.g)
    qb = _substitute_form(p.formB, gamma.g)
    (h11, h12), (h21, h22) = gamma.h
    mixed_a = {}
    mixed_b = {}
    for name in TernaryQuadraticForm.FIELD_ORDER:
        ca, cb = getattr(qa, name), getattr(qb, name)
        mixed_a[name] = h11 * ca + h12 * cb
        mixed_b[name] = h21 * ca + h22 * cb
    return DoubleTernaryForm(TernaryQuadraticForm(**mixed_a),
                             TernaryQuadraticForm(**mixed_b))


def evaluate_resolvent_map(p, v):
    """Coordinates (B(v), A(v)) of phi(v) in the basis (c1, c2) of C/O.

    phi = A*c2 + B*c1, so the c1-coordinate is B(v) and the c2-coordinate
    is A(v).
    """
    return (evaluate_ternary(p.formB, v), evaluate_ternary(p.formA, v))


# -- JSON interface --------------------------------------------------------

def encode_scalar(v):
    v = int(v)
    return v if -JSON_INT_LIMIT < v < JSON_INT_LIMIT else str(v)


def decode_scalar(v, where):
    if isinstance(v, bool):
        raise ValueError(f"{where}: expected an integer, got a boolean")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        try:
            return int(v)
        except ValueError:
            raise ValueError(f"{where}: {v!r} is not a decimal integer")
    raise ValueError(f"{where}: expected an integer or decimal string")


def pair_to_json_dict(p):
    return {"A": [encode_scalar(c) for c in p.formA.coefficients()],
            "B": [encode_scalar(c) for c in p.formB.coefficients()]}


def _form_from_list(values, where):
    if not isinstance(values, list) or len(values) != 6:
        raise ValueError(
            f"{where}: expected a list of 6 coefficients "
            "[a11, a22, a33, a12, a13, a23]")
    coeffs = [decode_scalar(v, f"{where}[{i}]") for i, v in enumerate(values)]
    return TernaryQuadraticForm(*coeffs)


def pair_from_json_dict(data):
    if not isinstance(data, dict):
        raise ValueError("pair document must be a JSON object")
    for key in ("A", "B"):
        if key not in data:
            raise ValueError(f"missing field {key!r}")
    return DoubleTernaryForm(_form_from_list(data["A"], "A"),
                             _form_from_list(data["B"], "B"))


def gamma_from_json_dict(data):
    if not isinstance(data, dict):
        raise ValueError("gamma document must be a JSON object")
    for key, size in (("g", 3), ("h", 2)):
        rows = data.get(key)
        if (not isinstance(rows, list) or len(rows) != size
                or any(not isinstance(r, list) or len(r) != size
                       for r in rows)):
            raise ValueError(f"{key!r} must be a {size}x{size} matrix")
    g = [[decode_scalar(v, f"g[{i}][{j}]") for j, v in enumerate(row)]
         for i, row in enumerate(data["g"])]
    h = [[decode_scalar(v, f"h[{i}][{j}]") for j, v in enumerate(row)]
         for i, row in enumerate(data["h"])]
    return GammaElement(g, h)
