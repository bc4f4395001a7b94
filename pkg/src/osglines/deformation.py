"""Candidate deformations of the basis and the positivity check on them.

A deformation replaces each basis class tau[lam] by

    tau[lam] = sigma[lam] + sum over mu with |mu| + 2n = |lam| of  a * q * sigma[mu],

so classes of degree below 2n are untouched and the correction classes mu are
themselves undeformed (their degree is at most 2n-3).  The grading admits no
deeper corrections: the top degree 4n-3 is below twice the q-weight 4n, so a
q^2 correction would need a correction class of negative degree.

Two indexing modes for the coefficients are supported:

  per-pair  one coefficient per (lam, mu) pair -- the general reading;
  per-mu    one coefficient per correction class mu, shared by every lam of
            the matching degree -- the restricted reading.

Coefficient values may be rationals or affine expressions in named unknowns;
the latter drive the symbolic constraint generation in `certify`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import AffineExpression, ClassVector, as_coeff
from .basis import (Index, check_rank, degree, enumerate_basis, enumerate_degree,
                    index_sort_key, is_valid, MIN_RING_RANK)
from .ring import MultiplicationTable, multiply

MODE_PER_PAIR = "per-pair"
MODE_PER_MU = "per-mu"
MODES = (MODE_PER_PAIR, MODE_PER_MU)


def pair_keys(n: int) -> list[tuple[Index, Index]]:
    """All legal (lam, mu) coefficient keys in canonical order."""
    keys = []
    for lam in enumerate_basis(n):
        if degree(lam) >= 2 * n:
            keys.extend((lam, mu) for mu in enumerate_degree(n, degree(lam) - 2 * n))
    return keys


def mu_keys(n: int) -> list[Index]:
    """All legal per-mu coefficient keys (classes that correct something)."""
    return [mu for mu in enumerate_basis(n) if degree(mu) <= 2 * n - 3]


class DeformationSpec:
    """Assignment of coefficients to deformation keys for one rank."""

    def __init__(self, n: int, mode: str = MODE_PER_PAIR, entries=None):
        check_rank(n, MIN_RING_RANK)
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
        self.n = n
        self.mode = mode
        clean = {}
        for key, val in (entries or {}).items():
            key = self._check_key(key)
            val = as_coeff(val)
            if val:
                clean[key] = val
        self.entries = clean

    def _check_key(self, key):
        n = self.n
        if self.mode == MODE_PER_PAIR:
            lam, mu = key
            lam, mu = (int(lam[0]), int(lam[1])), (int(mu[0]), int(mu[1]))
            if not (is_valid(n, lam) and is_valid(n, mu)):
                raise ValueError(f"malformed key {key!r}: invalid index for rank {n}")
            if degree(mu) + 2 * n != degree(lam):
                raise ValueError(
                    f"malformed key {key!r}: needs |mu| + 2n = |lambda| "
                    f"({degree(mu)} + {2*n} != {degree(lam)})")
            return (lam, mu)
        mu = (int(key[0]), int(key[1]))
        if not is_valid(n, mu):
            raise ValueError(f"malformed key {key!r}: invalid index for rank {n}")
        if degree(mu) > 2 * n - 3:
            raise ValueError(
                f"malformed key {key!r}: no class of degree {degree(mu) + 2*n} exists")
        return mu

    @classmethod
    def zero(cls, n: int, mode: str = MODE_PER_PAIR) -> "DeformationSpec":
        return cls(n, mode)

    @classmethod
    def symbolic(cls, n: int, mode: str = MODE_PER_PAIR) -> "DeformationSpec":
        """Every legal key mapped to its own unknown."""
        if mode == MODE_PER_PAIR:
            entries = {k: AffineExpression.unknown(k) for k in pair_keys(n)}
        else:
            entries = {k: AffineExpression.unknown(k) for k in mu_keys(n)}
        return cls(n, mode, entries)

    def is_numeric(self) -> bool:
        return all(isinstance(v, Fraction) for v in self.entries.values())

    def coefficient(self, lam, mu):
        lam, mu = tuple(lam), tuple(mu)
        key = (lam, mu) if self.mode == MODE_PER_PAIR else mu
        return self.entries.get(key, Fraction(0))

    def corrections(self, lam) -> list:
        """Nonzero (mu, coefficient) pairs correcting tau[lam]."""
        lam = tuple(lam)
        d = degree(lam) - 2 * self.n
        if d < 0:
            return []
        out = []
        for mu in enumerate_degree(self.n, d):
            c = self.coefficient(lam, mu)
            if c:
                out.append((mu, c))
        return out

    def items(self):
        if self.mode == MODE_PER_PAIR:
            order = lambda k: (index_sort_key(k[0]), index_sort_key(k[1]))
        else:
            order = index_sort_key
        return sorted(self.entries.items(), key=lambda kv: order(kv[0]))

    def __eq__(self, other):
        if not isinstance(other, DeformationSpec):
            return NotImplemented
        return (self.n, self.mode, self.entries) == (other.n, other.mode, other.entries)

    def __repr__(self):
        return f"DeformationSpec(n={self.n}, mode={self.mode!r}, entries={len(self.entries)})"


def sigma_from_tau(spec: DeformationSpec) -> dict:
    """The deformed basis, each class expressed in tau coordinates."""
    n = spec.n
    out = {}
    for lam in enumerate_basis(n):
        vec = ClassVector.basis(n, lam)
        for mu, a in spec.corrections(lam):
            vec = vec - ClassVector.basis(n, mu, d=1, coeff=a)
        out[lam] = vec
    return out


def to_tau(spec: DeformationSpec, v: ClassVector) -> ClassVector:
    """Rewrite a vector given in sigma coordinates in tau coordinates."""
    acc = []
    for lam, d, c in v.flat_items():
        acc.append((lam, c, d))
        for mu, a in spec.corrections(lam):
            acc.append((mu, -(c * a), d + 1))
    return ClassVector.from_terms(v.n, acc)


def to_sigma(spec: DeformationSpec, v: ClassVector) -> ClassVector:
    """Rewrite a vector given in tau coordinates in sigma coordinates."""
    acc = []
    for lam, d, c in v.flat_items():
        acc.append((lam, c, d))
        for mu, a in spec.corrections(lam):
            acc.append((mu, c * a, d + 1))
    return ClassVector.from_terms(v.n, acc)


def deformed_product(spec: DeformationSpec, table: MultiplicationTable,
                     mu1, mu2) -> ClassVector:
    """sigma[mu1] * sigma[mu2], expanded in the sigma basis."""
    if table.n != spec.n:
        raise ValueError(f"rank mismatch: spec n={spec.n}, table n={table.n}")
    x = to_tau(spec, ClassVector.basis(spec.n, tuple(mu1)))
    y = to_tau(spec, ClassVector.basis(spec.n, tuple(mu2)))
    return to_sigma(spec, multiply(table, x, y))


@dataclass
class PositivityReport:
    passes: bool
    violations: list = field(default_factory=list)  # (mu, nu, d, value)


def check_positivity(spec: DeformationSpec, table: MultiplicationTable) -> PositivityReport:
    """Do all products of sigma[1,1] with basis sigma classes have nonnegative
    coefficients in the sigma basis?"""
    if not spec.is_numeric():
        raise ValueError("positivity check needs a numeric deformation")
    violations = []
    for mu in table.basis:
        prod = deformed_product(spec, table, (1, 1), mu)
        for nu, d, c in prod.flat_items():
            if c < 0:
                violations.append((mu, nu, d, c))
    return PositivityReport(not violations, violations)
