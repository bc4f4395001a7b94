"""The full multiplication table of the quantum cohomology ring.

The two special classes tau[1,0] and tau[1,1] generate the ring.  Building
the table therefore reduces to linear algebra: for each basis class lam we
find rational coefficients r_ij with

    tau[lam] = sum_ij r_ij * tau[1,0]^i * tau[1,1]^j      (i + 2j = |lam|),

by exact Gaussian elimination inside the homogeneous graded slice of degree
|lam| (q-powers counted with weight 2n).  Products are then assembled as

    tau[lam] * tau[mu] = sum_ij r_ij * M1^i(M11^j(tau[mu]))

where M1, M11 are the linear operators given by the expansion rules.  The
monomial columns are processed with higher tau[1,1]-powers first, which keeps
the chosen representations canonical (e.g. a diagonal class (t,t) is always
represented as the pure power tau[1,1]^t).

Every structure constant is checked to be an integer and every stored product
to be homogeneous; violations abort the build.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import ClassVector, QPolynomial
from .basis import (Index, check_rank, degree, enumerate_basis, enumerate_degree,
                    is_valid, max_degree, top_class, MIN_RING_RANK)
from .pieri import _tau1_raw, _tau11_raw


class GenerationFailure(RuntimeError):
    """A basis class is not in the span of generator monomials."""


def _apply(n: int, raw_rule, vec_terms: dict) -> dict:
    """Apply a Pieri operator to a {(index, d): coeff} mapping."""
    out: dict = {}
    for (lam, d), c in vec_terms.items():
        for nu, k, dd in raw_rule(n, lam)[1]:
            if not is_valid(n, nu):
                continue
            key = (nu, d + dd)
            out[key] = out.get(key, Fraction(0)) + c * k
    return {k: v for k, v in out.items() if v}


def _slice_coords(n: int, total: int) -> list[tuple[Index, int]]:
    coords = []
    d = 0
    while total - 2 * n * d >= 0:
        coords.extend((nu, d) for nu in enumerate_degree(n, total - 2 * n * d))
        d += 1
    return coords


class MultiplicationTable:
    """All structure constants for a given rank in the tau basis.

    Immutable after construction; products are stored once per unordered
    pair, keyed by basis position.
    """

    def __init__(self, n: int, basis: list[Index], products: dict,
                 generator_expressions=None):
        self.n = n
        self.basis = tuple(basis)
        self.pos = {lam: i for i, lam in enumerate(self.basis)}
        self._products = products
        self.generator_expressions = generator_expressions

    def _pair(self, lam, mu) -> tuple[Index, Index]:
        lam, mu = tuple(lam), tuple(mu)
        if lam not in self.pos:
            raise ValueError(f"index {lam} is not valid for rank {self.n}")
        if mu not in self.pos:
            raise ValueError(f"index {mu} is not valid for rank {self.n}")
        return (lam, mu) if self.pos[lam] <= self.pos[mu] else (mu, lam)

    def product(self, lam, mu) -> ClassVector:
        return self._products[self._pair(lam, mu)]

    def pairs(self):
        """Stored (lam, mu) pairs in canonical order."""
        for i, lam in enumerate(self.basis):
            for mu in self.basis[i:]:
                yield lam, mu

    def stored_products(self) -> int:
        return len(self._products)


def _monomial_expansions(n: int, start: dict, up_to: int) -> dict:
    """{(i, j): expansion of M1^i(M11^j(start))} for all i + 2j <= up_to."""
    h = {(0, 0): start}
    for j in range(1, up_to // 2 + 1):
        h[(0, j)] = _apply(n, _tau11_raw, h[(0, j - 1)])
    for j in range(0, up_to // 2 + 1):
        for i in range(1, up_to - 2 * j + 1):
            h[(i, j)] = _apply(n, _tau1_raw, h[(i - 1, j)])
    return h


def _solve_slice(n: int, total: int, g: dict, targets: list[Index]) -> dict:
    """Express each target class of degree `total` in the generator monomials."""
    coords = _slice_coords(n, total)
    coord_pos = {c: i for i, c in enumerate(coords)}
    monomials = [(total - 2 * j, j) for j in range(total // 2, -1, -1)]

    pivots = []  # (pivot row, reduced column, expression in original monomials)
    for mon in monomials:
        vec = {coord_pos[key]: val for key, val in g[mon].items()}
        expr = {mon: Fraction(1)}
        for prow, pvec, pexpr in pivots:
            f = vec.get(prow)
            if f:
                for r, v in pvec.items():
                    vec[r] = vec.get(r, Fraction(0)) - f * v
                    if not vec[r]:
                        del vec[r]
                for m, v in pexpr.items():
                    expr[m] = expr.get(m, Fraction(0)) - f * v
        vec = {r: v for r, v in vec.items() if v}
        if not vec:
            continue
        prow = min(vec)
        scale = Fraction(1) / vec[prow]
        pivots.append((prow,
                       {r: v * scale for r, v in vec.items()},
                       {m: v * scale for m, v in expr.items() if v * scale}))

    out = {}
    for lam in targets:
        t = {coord_pos[(lam, 0)]: Fraction(1)}
        r: dict = {}
        for prow, pvec, pexpr in pivots:
            f = t.get(prow)
            if not f:
                continue
            for row, v in pvec.items():
                t[row] = t.get(row, Fraction(0)) - f * v
                if not t[row]:
                    del t[row]
            for m, v in pexpr.items():
                r[m] = r.get(m, Fraction(0)) + f * v
        if any(t.values()):
            raise GenerationFailure(
                f"class {lam} (rank {n}) is not generated by the special classes")
        out[lam] = {m: v for m, v in r.items() if v}
    return out


def _audit_product(n: int, lam: Index, mu: Index, terms: dict):
    want = degree(lam) + degree(mu)
    for (nu, d), c in terms.items():
        if degree(nu) + 2 * n * d != want:
            raise RuntimeError(
                f"product {lam}*{mu} has an inhomogeneous term {nu}, q^{d}")
        if c.denominator != 1:
            raise RuntimeError(
                f"product {lam}*{mu} has a non-integer constant {c} at {nu}, q^{d}")


def build_table(n: int) -> MultiplicationTable:
    """Build the complete multiplication table for rank n (n >= 3)."""
    check_rank(n, MIN_RING_RANK)
    basis = enumerate_basis(n)
    unit: dict = {((0, 0), 0): Fraction(1)}
    g = _monomial_expansions(n, unit, max_degree(n))

    gen_expr: dict = {}
    for total in range(0, max_degree(n) + 1):
        targets = enumerate_degree(n, total)
        gen_expr.update(_solve_slice(n, total, g, targets))

    pos = {lam: i for i, lam in enumerate(basis)}
    products = {}
    for mu in basis:
        h = _monomial_expansions(n, {(tuple(mu), 0): Fraction(1)}, degree(mu))
        for lam in basis:
            if pos[lam] > pos[mu]:
                continue
            acc: dict = {}
            for mon, r in gen_expr[lam].items():
                for key, c in h[mon].items():
                    acc[key] = acc.get(key, Fraction(0)) + r * c
            acc = {k: v for k, v in acc.items() if v}
            _audit_product(n, lam, mu, acc)
            vec: dict = {}
            for (nu, d), c in acc.items():
                vec.setdefault(nu, {})[d] = c
            products[(lam, mu)] = ClassVector(
                n, {nu: QPolynomial(p) for nu, p in vec.items()})
    return MultiplicationTable(n, basis, products, gen_expr)


def multiply(table: MultiplicationTable, x: ClassVector, y: ClassVector) -> ClassVector:
    """Bilinear extension of the table; q-coefficients multiply through."""
    if x.n != table.n or y.n != table.n:
        raise ValueError("rank mismatch between table and operands")
    out = ClassVector.zero(table.n)
    for nu1, p1 in x.items():
        for nu2, p2 in y.items():
            out = out + table.product(nu1, nu2).scale_poly(p1 * p2)
    return out


def gw_constant(table: MultiplicationTable, lam, mu, nu, d: int) -> Fraction:
    """The coefficient of q^d tau[nu] in tau[lam] * tau[mu]; may be negative."""
    if d < 0:
        raise ValueError("q-exponent must be nonnegative")
    prod = table.product(lam, mu)
    if tuple(nu) not in table.pos:
        raise ValueError(f"index {tuple(nu)} is not valid for rank {table.n}")
    return prod.coefficient(nu, d)


def poincare_pairing(table: MultiplicationTable, lam, mu) -> Fraction:
    """Coefficient of the top class in the classical part of tau[lam] * tau[mu]."""
    return table.product(lam, mu).coefficient(top_class(table.n), 0)


def has_negative_constant(table: MultiplicationTable):
    """(True, witness) for the first negative structure constant in scan order."""
    for lam, mu in table.pairs():
        for nu, d, c in table.product(lam, mu).flat_items():
            if c < 0:
                return True, {"lambda": lam, "mu": mu, "nu": nu, "d": d, "coeff": c}
    return False, None


def diagonal_power(table: MultiplicationTable, t: int) -> ClassVector:
    """The t-fold product of tau[1,1] with itself (t >= 0)."""
    out = ClassVector.basis(table.n, (0, 0))
    e11 = ClassVector.basis(table.n, (1, 1))
    for _ in range(t):
        out = multiply(table, out, e11)
    return out


IDENTITY_PARTS = ("diagonal-power", "collapse", "collapse-boundary",
                  "top-power", "shift", "shift-boundary")


@dataclass
class IdentityCheck:
    part: str
    holds: bool
    checked: int
    counterexamples: list = field(default_factory=list)


def _expected(n, terms) -> ClassVector:
    return ClassVector.from_terms(n, terms)


def verify_identities(table: MultiplicationTable, part: str) -> IdentityCheck:
    """Exhaustively check one family of product identities for powers of tau[1,1].

    Parts:
      diagonal-power    tau[1,1]^t = tau[t,t]                          (t <= n-2)
      collapse          tau[1,1]^t * tau[lam] = q tau[lam2+t, 0]       (|lam| >= 2n,
                        t = 2n - lam1, lam2 + t != 2n-2)
      collapse-boundary same but lam2 + t = 2n-2: q tau[2n-1,-1] + q tau[2n-2, 0]
      top-power         tau[1,1]^(n-1) = tau[n, n-2]
      shift             tau[1,1]^t * tau[mu] = tau[mu1+t, mu2+t]
                        (2t + |mu| <= 2n-3, t <= n-2)
      shift-boundary    2t + |mu| in {2n-2, 2n-1}, t <= n-2:
                        tau[mu1+t+1, mu2+t-1] + tau[mu1+t, mu2+t]
    """
    n = table.n
    if part not in IDENTITY_PARTS:
        raise ValueError(f"unknown identity part {part!r}; expected one of {IDENTITY_PARTS}")
    checked = 0
    bad = []
    powers = {t: diagonal_power(table, t) for t in range(0, n)}

    def record(params, got, want):
        nonlocal checked
        checked += 1
        if got != want:
            bad.append({"params": params, "got": repr(got), "expected": repr(want)})

    if part == "diagonal-power":
        for t in range(1, n - 1):
            record({"t": t}, powers[t], _expected(n, [((t, t), 1, 0)]))
    elif part == "top-power":
        record({"t": n - 1}, powers[n - 1], _expected(n, [((n, n - 2), 1, 0)]))
    elif part in ("collapse", "collapse-boundary"):
        boundary = part == "collapse-boundary"
        for lam in enumerate_basis(n):
            if degree(lam) < 2 * n:
                continue
            t = 2 * n - lam[0]
            if ((lam[1] + t) == 2 * n - 2) != boundary:
                continue
            got = multiply(table, powers[t], ClassVector.basis(n, lam))
            if boundary:
                want = _expected(n, [((2 * n - 1, -1), 1, 1), ((2 * n - 2, 0), 1, 1)])
            else:
                want = _expected(n, [((lam[1] + t, 0), 1, 1)])
            record({"lambda": lam, "t": t}, got, want)
    else:
        boundary = part == "shift-boundary"
        for t in range(1, n - 1):
            for mu in enumerate_basis(n):
                s = 2 * t + degree(mu)
                in_range = s in (2 * n - 2, 2 * n - 1) if boundary else s <= 2 * n - 3
                if not in_range:
                    continue
                got = multiply(table, powers[t], ClassVector.basis(n, mu))
                terms = [((mu[0] + t, mu[1] + t), 1, 0)]
                if boundary:
                    terms.append(((mu[0] + t + 1, mu[1] + t - 1), 1, 0))
                record({"mu": mu, "t": t}, got, _expected(n, terms))
    return IdentityCheck(part, not bad, checked, bad)


def check_commutativity(table: MultiplicationTable) -> list:
    """Recompute every stored product in the opposite factor order.

    Returns the list of pairs where the two orders disagree (empty when the
    table is commutative).  This re-runs the generator expansion with the
    roles of the factors swapped, so it is an independent recomputation, not
    a lookup of the same entry twice.
    """
    if table.generator_expressions is None:
        raise ValueError("commutativity recheck needs a freshly built table "
                         "(loaded caches carry no generator expressions)")
    n = table.n
    bad = []
    for lam in table.basis:
        h = _monomial_expansions(n, {(tuple(lam), 0): Fraction(1)}, max_degree(n))
        for mu in table.basis:
            if table.pos[lam] > table.pos[mu]:
                continue
            acc: dict = {}
            for mon, r in table.generator_expressions[mu].items():
                for key, c in h[mon].items():
                    acc[key] = acc.get(key, Fraction(0)) + r * c
            swapped: dict = {}
            for (nu, d), c in acc.items():
                if c:
                    swapped.setdefault(nu, {})[d] = c
            vec = ClassVector(n, {nu: QPolynomial(p) for nu, p in swapped.items()})
            if vec != table.product(lam, mu):
                bad.append((lam, mu))
    return bad
