"""Exact coefficient arithmetic: q-polynomials, class vectors, affine forms.

Everything is over the rationals (`fractions.Fraction`); there is no floating
point anywhere.  Coefficients of `QPolynomial` and `ClassVector` may also be
`AffineExpression` values, which is how symbolic computations with unknown
deformation coefficients are carried out.  Multiplying two expressions that
both contain unknowns raises `QuadraticTermError`: nothing in this package is
allowed to leave the affine world.
"""
from __future__ import annotations

from fractions import Fraction

from .basis import Index, degree, index_sort_key, is_valid


class QuadraticTermError(ArithmeticError):
    """Product of two expressions that both contain unknowns."""


def as_coeff(x):
    """Coerce to an exact coefficient (Fraction or AffineExpression)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, AffineExpression):
        return x
    raise TypeError(f"not an exact coefficient: {x!r}")


def _coeff_mul(a, b):
    if isinstance(a, AffineExpression) or isinstance(b, AffineExpression):
        if isinstance(a, AffineExpression):
            return a * b
        return b * a
    return a * b


class AffineExpression:
    """constant + sum of rational multiples of named unknowns."""

    __slots__ = ("constant", "linear")

    def __init__(self, constant=0, linear=None):
        self.constant = Fraction(constant)
        lin = {}
        for key, val in (linear or {}).items():
            val = Fraction(val)
            if val:
                lin[key] = val
        self.linear = lin

    @classmethod
    def unknown(cls, key) -> "AffineExpression":
        return cls(0, {key: Fraction(1)})

    def is_constant(self) -> bool:
        return not self.linear

    def __bool__(self) -> bool:
        return bool(self.constant) or bool(self.linear)

    def __eq__(self, other) -> bool:
        if isinstance(other, AffineExpression):
            return self.constant == other.constant and self.linear == other.linear
        if isinstance(other, (int, Fraction)):
            return not self.linear and self.constant == other
        return NotImplemented

    def __hash__(self):
        return hash((self.constant, frozenset(self.linear.items())))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return AffineExpression(self.constant + other, self.linear)
        if isinstance(other, AffineExpression):
            lin = dict(self.linear)
            for k, v in other.linear.items():
                lin[k] = lin.get(k, Fraction(0)) + v
            return AffineExpression(self.constant + other.constant, lin)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return AffineExpression(-self.constant, {k: -v for k, v in self.linear.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, AffineExpression) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return AffineExpression(self.constant * other,
                                    {k: v * other for k, v in self.linear.items()})
        if isinstance(other, AffineExpression):
            if self.linear and other.linear:
                raise QuadraticTermError(
                    f"product of two non-constant affine expressions: "
                    f"({self}) * ({other})")
            if other.linear:
                return other * self.constant
            return self * other.constant
        return NotImplemented

    __rmul__ = __mul__

    def evaluate(self, assignment) -> Fraction:
        total = self.constant
        for k, v in self.linear.items():
            total += v * Fraction(assignment.get(k, 0))
        return total

    def terms(self):
        """(key, coefficient) pairs in a deterministic order."""
        return sorted(self.linear.items(), key=lambda kv: repr(kv[0]))

    def __repr__(self):
        parts = [str(self.constant)] if self.constant or not self.linear else []
        for k, v in self.terms():
            parts.append(f"{v}*a{k}")
        return " + ".join(parts)


class QPolynomial:
    """Finitely supported polynomial in the quantum parameter q."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        for d, v in (coeffs or {}).items():
            if not isinstance(d, int) or d < 0:
                raise ValueError(f"q-exponent must be a nonnegative integer, got {d!r}")
            v = as_coeff(v)
            if v:
                c[d] = v
        self._c = c

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls()

    @classmethod
    def constant(cls, v) -> "QPolynomial":
        return cls({0: v})

    @classmethod
    def q(cls, d: int = 1, coeff=1) -> "QPolynomial":
        return cls({d: coeff})

    def items(self):
        return sorted(self._c.items())

    def coefficient(self, d: int):
        return self._c.get(d, Fraction(0))

    def max_exponent(self) -> int:
        """Largest exponent with a nonzero coefficient (-1 for the zero polynomial)."""
        return max(self._c) if self._c else -1

    def shifted(self, k: int) -> "QPolynomial":
        return QPolynomial({d + k: v for d, v in self._c.items()})

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, QPolynomial):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self == QPolynomial.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        if not isinstance(other, QPolynomial):
            return NotImplemented
        c = dict(self._c)
        for d, v in other._c.items():
            c[d] = c.get(d, Fraction(0)) + v
        return QPolynomial(c)

    def __neg__(self):
        return QPolynomial({d: -v for d, v in self._c.items()})

    def __sub__(self, other):
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, QPolynomial):
            c = {}
            for d1, v1 in self._c.items():
                for d2, v2 in other._c.items():
                    d = d1 + d2
                    c[d] = c.get(d, Fraction(0)) + _coeff_mul(v1, v2)
            return QPolynomial(c)
        other = as_coeff(other)
        return QPolynomial({d: _coeff_mul(v, other) for d, v in self._c.items()})

    def __rmul__(self, other):
        return self * other

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for d, v in self.items():
            qs = "" if d == 0 else ("q" if d == 1 else f"q^{d}")
            parts.append(f"({v}){qs}" if qs else f"({v})")
        return " + ".join(parts)


class ClassVector:
    """Finitely supported combination of basis classes with QPolynomial coefficients."""

    __slots__ = ("n", "_t")

    def __init__(self, n: int, terms=None):
        t = {}
        for lam, poly in (terms or {}).items():
            lam = (int(lam[0]), int(lam[1]))
            if not is_valid(n, lam):
                raise ValueError(f"index {lam} is not valid for rank {n}")
            if not isinstance(poly, QPolynomial):
                poly = QPolynomial(poly)
            if poly:
                t[lam] = poly
        self.n = n
        self._t = t

    @classmethod
    def zero(cls, n: int) -> "ClassVector":
        return cls(n)

    @classmethod
    def basis(cls, n: int, lam: Index, d: int = 0, coeff=1) -> "ClassVector":
        return cls(n, {tuple(lam): QPolynomial({d: coeff})})

    @classmethod
    def from_terms(cls, n: int, terms) -> "ClassVector":
        """Build from (index, coefficient, q-exponent) triples.

        Index pairs outside the valid set contribute nothing; the expansion
        formulas rely on this zero convention.
        """
        acc: dict[Index, dict[int, object]] = {}
        for lam, coeff, d in terms:
            lam = (int(lam[0]), int(lam[1]))
            if not is_valid(n, lam):
                continue
            poly = acc.setdefault(lam, {})
            poly[d] = poly.get(d, Fraction(0)) + as_coeff(coeff)
        return cls(n, {lam: QPolynomial(p) for lam, p in acc.items()})

    def items(self):
        return sorted(self._t.items(), key=lambda kv: index_sort_key(kv[0]))

    def flat_items(self):
        """(index, q-exponent, coefficient) triples in canonical order."""
        for lam, poly in self.items():
            for d, c in poly.items():
                yield lam, d, c

    def coefficient(self, lam, d: int):
        poly = self._t.get(tuple(lam))
        return poly.coefficient(d) if poly is not None else Fraction(0)

    def support(self):
        return set(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __eq__(self, other):
        if not isinstance(other, ClassVector):
            return NotImplemented
        return self.n == other.n and self._t == other._t

    def __hash__(self):
        return hash((self.n, frozenset((k, v) for k, v in self._t.items())))

    def _check_rank(self, other: "ClassVector"):
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, ClassVector):
            return NotImplemented
        self._check_rank(other)
        t = dict(self._t)
        for lam, poly in other._t.items():
            t[lam] = t[lam] + poly if lam in t else poly
        return ClassVector(self.n, t)

    def __neg__(self):
        return ClassVector(self.n, {lam: -p for lam, p in self._t.items()})

    def __sub__(self, other):
        if not isinstance(other, ClassVector):
            return NotImplemented
        return self + (-other)

    def scale(self, coeff) -> "ClassVector":
        coeff = as_coeff(coeff)
        return ClassVector(self.n, {lam: p * coeff for lam, p in self._t.items()})

    def scale_poly(self, poly: QPolynomial) -> "ClassVector":
        return ClassVector(self.n, {lam: p * poly for lam, p in self._t.items()})

    def homogeneous_degree(self):
        """Common value of degree(index) + 2n*q_exponent, or None if mixed or zero."""
        deg = None
        for lam, d, _ in self.flat_items():
            total = degree(lam) + 2 * self.n * d
            if deg is None:
                deg = total
            elif deg != total:
                return None
        return deg

    def max_q_exponent(self) -> int:
        return max((p.max_exponent() for p in self._t.values()), default=-1)

    def __repr__(self):
        if not self._t:
            return "0"
        parts = []
        for lam, d, c in self.flat_items():
            qs = "" if d == 0 else ("q*" if d == 1 else f"q^{d}*")
            parts.append(f"({c})*{qs}tau[{lam[0]},{lam[1]}]")
        return " + ".join(parts)
