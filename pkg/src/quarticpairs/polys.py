"""Exact sparse multivariate polynomial arithmetic over the integers.

Polynomials live over a fixed, ordered tuple of named variables (the
"universe").  Terms are stored sparsely as a dict mapping exponent tuples to
nonzero integer coefficients, so equality is structural and all arithmetic is
division-free.  ``SparsePoly`` requires nonnegative exponents; ``LaurentPoly``
additionally allows negative exponents of the projective coordinates
x1, x2, x3 (and only those), which is what the patch computations need.

The canonical term order is graded lexicographic in the universe's variable
order; serialization (``str``/``parse``) follows it so reports and golden
files are reproducible.
"""

from __future__ import annotations

import re

# Variables allowed to carry negative exponents in LaurentPoly.
LAURENT_VARS = ("x1", "x2", "x3")

# The twelve universal coefficients, in the fixed serialization order.
COEFF_VARS = ("a11", "a22", "a33", "a12", "a13", "a23",
              "b11", "b22", "b33", "b12", "b13", "b23")

# Universe for the patch computations: coefficients plus coordinates.
COEFF_X_VARS = COEFF_VARS + LAURENT_VARS

_TERM_RE = re.compile(r"^([+-]?\d+)?((?:\*?[A-Za-z]\w*(?:\^-?\d+)?)*)$")
_FACTOR_RE = re.compile(r"([A-Za-z]\w*)(?:\^(-?\d+))?")


class SparsePoly:
    """A sparse polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("universe", "terms")

    def __init__(self, universe, terms=None):
        self.universe = tuple(universe)
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                if coeff == 0:
                    continue
                exps = tuple(exps)
                if len(exps) != len(self.universe):
                    raise ValueError("exponent tuple does not match universe")
                clean[exps] = clean.get(exps, 0) + coeff
                if clean[exps] == 0:
                    del clean[exps]
        for exps in clean:
            self._check_exponents(exps)
        self.terms = clean

    def _check_exponents(self, exps):
        for name, e in zip(self.universe, exps):
            if e < 0:
                raise ValueError(f"negative exponent of {name} in SparsePoly")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, universe):
        return cls(universe, {})

    @classmethod
    def const(cls, universe, c):
        universe = tuple(universe)
        if c == 0:
            return cls(universe, {})
        return cls(universe, {(0,) * len(universe): int(c)})

    @classmethod
    def var(cls, universe, name, power=1):
        universe = tuple(universe)
        exps = [0] * len(universe)
        exps[universe.index(name)] = power
        return cls(universe, {tuple(exps): 1})

    @classmethod
    def monomial(cls, universe, coeff, powers):
        """Build coeff * prod(var^e) from a {name: exponent} dict."""
        universe = tuple(universe)
        exps = [0] * len(universe)
        for name, e in powers.items():
            exps[universe.index(name)] += e
        return cls(universe, {tuple(exps): int(coeff)})

    # -- ring structure ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, SparsePoly):
            if other.universe != self.universe:
                raise ValueError("operands have different variable universes")
            return other
        if isinstance(other, int):
            return type(self).const(self.universe, other)
        return None

    def _result_type(self, other):
        # Laurent absorbs: Laurent op Sparse -> Laurent.
        if isinstance(self, LaurentPoly) or isinstance(other, LaurentPoly):
            return LaurentPoly
        return SparsePoly

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = terms.get(exps, 0) + coeff
        return self._result_type(other)(self.universe, terms)

    __radd__ = __add__

    def __neg__(self):
        return type(self)(self.universe,
                          {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return self._result_type(other)(self.universe, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = type(self).const(self.universe, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            if other == 0:
                return not self.terms
            other = SparsePoly.const(self.universe, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.universe == other.universe and self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    # -- queries -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        """Max total degree over terms, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, degree=None):
        degrees = {sum(e) for e in self.terms}
        if not degrees:
            return True
        if len(degrees) > 1:
            return False
        return degree is None or degrees == {degree}

    def sorted_terms(self):
        """Terms in descending graded-lex order (the canonical order)."""
        return sorted(self.terms.items(),
                      key=lambda item: (sum(item[0]), item[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            return None
        return self.sorted_terms()[0]

    def filter_terms(self, predicate):
        """Sub-polynomial of the terms whose exponent tuple satisfies predicate."""
        return type(self)(self.universe,
                          {e: c for e, c in self.terms.items() if predicate(e)})

    def coefficient(self, name):
        """Integer coefficient of the bare variable `name` (degree-1 term)."""
        exps = [0] * len(self.universe)
        exps[self.universe.index(name)] = 1
        return self.terms.get(tuple(exps), 0)

    # -- evaluation and substitution --------------------------------------

    def evaluate(self, values):
        """Fully evaluate; `values` must cover every variable that occurs.

        Values may be ints, floats or complex numbers; negative exponents
        divide (the value must then be nonzero).
        """
        total = 0
        for exps, coeff in self.terms.items():
            term = coeff
            for name, e in zip(self.universe, exps):
                if e == 0:
                    continue
                v = values[name]
                if e > 0:
                    term = term * v ** e
                else:
                    term = term / v ** (-e)
            total += term
        return total

    def substitute(self, values):
        """Substitute integers for a subset of variables; returns a polynomial.

        Variables being substituted must occur with nonnegative exponents.
        """
        terms = {}
        indices = {self.universe.index(name): int(v)
                   for name, v in values.items()}
        for exps, coeff in self.terms.items():
            c = coeff
            new = list(exps)
            for idx, v in indices.items():
                e = exps[idx]
                if e < 0:
                    raise ValueError(
                        f"cannot substitute {self.universe[idx]} with a "
                        "negative exponent")
                c *= v ** e
                new[idx] = 0
            if c == 0:
                continue
            key = tuple(new)
            terms[key] = terms.get(key, 0) + c
        return type(self)(self.universe, terms)

    def reindex(self, universe):
        """Re-embed into another universe containing all occurring variables."""
        universe = tuple(universe)
        positions = []
        for idx, name in enumerate(self.universe):
            try:
                positions.append(universe.index(name))
            except ValueError:
                if any(e[idx] != 0 for e in self.terms):
                    raise ValueError(f"variable {name} missing from universe")
                positions.append(None)
        terms = {}
        for exps, coeff in self.terms.items():
            new = [0] * len(universe)
            for idx, e in enumerate(exps):
                if e != 0:
                    new[positions[idx]] = e
            terms[tuple(new)] = coeff
        return type(self)(universe, terms)

    # -- serialization -----------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for name, e in zip(self.universe, exps):
                if e == 0:
                    continue
                factors.append(name if e == 1 else f"{name}^{e}")
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            elif coeff == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{coeff}*" + "*".join(factors))
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def __repr__(self):
        return f"{type(self).__name__}({self!s})"

    @classmethod
    def parse(cls, text, universe):
        """Parse the textual form produced by ``str`` (and hand-written input)."""
        universe = tuple(universe)
        text = text.strip()
        if text in ("0", ""):
            return cls.zero(universe)
        # Normalize to a list of signed terms.
        text = text.replace("- ", "+ -").replace(" -", " + -")
        chunks = [t.strip() for t in text.split("+") if t.strip()]
        result = cls.zero(universe)
        for chunk in chunks:
            sign = 1
            while chunk.startswith("-"):
                sign = -sign
                chunk = chunk[1:].strip()
            m = _TERM_RE.match(chunk.replace(" ", ""))
            if not m:
                raise ValueError(f"cannot parse term {chunk!r}")
            coeff = int(m.group(1)) if m.group(1) else 1
            powers = {}
            for name, exp in _FACTOR_RE.findall(m.group(2) or ""):
                powers[name] = powers.get(name, 0) + (int(exp) if exp else 1)
            result = result + cls.monomial(universe, sign * coeff, powers)
        return result


class LaurentPoly(SparsePoly):
    """A sparse polynomial whose x1, x2, x3 exponents may be negative."""

    __slots__ = ()

    def _check_exponents(self, exps):
        for name, e in zip(self.universe, exps):
            if e < 0 and name not in LAURENT_VARS:
                raise ValueError(
                    f"negative exponent of non-Laurent variable {name}")


def det(matrix):
    """Determinant by cofactor expansion; exact for any commutative scalars.

    Intended for the small (n <= 4) matrices that occur here; no division.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    total = 0
    for col in range(n):
        entry = matrix[0][col]
        if entry == 0:
            continue
        minor = [[row[c] for c in range(n) if c != col]
                 for row in matrix[1:]]
        cofactor = entry * det(minor)
        total = total + cofactor if col % 2 == 0 else total - cofactor
    return total
