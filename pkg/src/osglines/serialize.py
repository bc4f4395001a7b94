"""Deterministic JSON serialization of tables, deformations, and certificates.

Numbers are never floats: integers are JSON integers in the table format and
decimal strings elsewhere; rationals are "p/q" strings.  Construction order
of every document is canonical, so serializing the same mathematical object
always yields identical bytes.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from importlib import resources

from .algebra import ClassVector, QPolynomial
from .basis import enumerate_basis
from .algebra import AffineExpression
from .certify import Certificate, BoundProof, ConstraintSystem
from .deformation import DeformationSpec, MODE_PER_PAIR, MODES
from .pieri import pieri_tau1, pieri_tau11
from .ring import MultiplicationTable

TABLE_FORMAT_VERSION = 1

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    if not isinstance(s, str) or not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational string: {s!r}")
    return Fraction(s)


def _index(lam) -> list[int]:
    return [int(lam[0]), int(lam[1])]


def _as_index(obj) -> tuple[int, int]:
    if not isinstance(obj, (list, tuple)) or len(obj) != 2:
        raise ValueError(f"not an index pair: {obj!r}")
    return (int(obj[0]), int(obj[1]))


def canonical_dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def class_vector_terms(v: ClassVector, *, integer: bool = False) -> list[dict]:
    out = []
    for nu, d, c in v.flat_items():
        c = Fraction(c)
        if integer:
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c} in table serialization")
            coeff = c.numerator
        else:
            coeff = format_rational(c)
        out.append({"nu": _index(nu), "d": d, "coeff": coeff})
    return out


def class_vector_from_terms(n: int, terms, *, parse=parse_rational) -> ClassVector:
    acc: dict = {}
    for t in terms:
        nu = _as_index(t["nu"])
        d = int(t["d"])
        c = t["coeff"]
        c = Fraction(c) if isinstance(c, int) else parse(c)
        slot = acc.setdefault(nu, {})
        slot[d] = slot.get(d, Fraction(0)) + c
    return ClassVector(n, {nu: QPolynomial(p) for nu, p in acc.items()})


# ---------------------------------------------------------------------------
# multiplication table cache


def table_to_dict(table: MultiplicationTable) -> dict:
    products = []
    for lam, mu in table.pairs():
        products.append({
            "lambda": _index(lam),
            "mu": _index(mu),
            "terms": class_vector_terms(table.product(lam, mu), integer=True),
        })
    return {
        "version": TABLE_FORMAT_VERSION,
        "n": table.n,
        "basis": [_index(lam) for lam in table.basis],
        "products": products,
    }


def table_from_dict(data: dict, *, revalidate: bool = False) -> MultiplicationTable:
    if data.get("version") != TABLE_FORMAT_VERSION:
        raise ValueError(f"unsupported table format version {data.get('version')!r}")
    n = int(data["n"])
    basis = [_as_index(b) for b in data["basis"]]
    expected = enumerate_basis(n)
    if basis != expected:
        raise ValueError("table basis does not match the canonical basis order")
    pos = {lam: i for i, lam in enumerate(basis)}
    products = {}
    for entry in data["products"]:
        lam, mu = _as_index(entry["lambda"]), _as_index(entry["mu"])
        if pos[lam] > pos[mu]:
            raise ValueError(f"product pair {lam}, {mu} out of canonical order")
        products[(lam, mu)] = class_vector_from_terms(n, entry["terms"])
    missing = sum(1 for i, lam in enumerate(basis) for mu in basis[i:]
                  if (lam, mu) not in products)
    if missing:
        raise ValueError(f"table is missing {missing} products")
    table = MultiplicationTable(n, basis, products, None)
    if revalidate:
        revalidate_table(table)
    return table


def revalidate_table(table: MultiplicationTable):
    """Full invariant audit of a loaded table; raises ValueError on defects.

    Checks grading, integrality, the unit law, and the two special-class
    columns directly, then rebuilds the table from scratch and compares every
    product, which catches arbitrary tampering.
    """
    n = table.n
    from .basis import degree
    from .ring import build_table
    unit = (0, 0)
    for lam, mu in table.pairs():
        prod = table.product(lam, mu)
        want = degree(lam) + degree(mu)
        for nu, d, c in prod.flat_items():
            if degree(nu) + 2 * n * d != want:
                raise ValueError(f"inhomogeneous product {lam}*{mu}")
            if Fraction(c).denominator != 1:
                raise ValueError(f"non-integer constant in {lam}*{mu}")
    for lam in table.basis:
        if table.product(unit, lam) != ClassVector.basis(n, lam):
            raise ValueError(f"unit law fails at {lam}")
        if table.product((1, 0), lam) != pieri_tau1(n, lam):
            raise ValueError(f"tau[1,0] column disagrees with the rule at {lam}")
        if table.product((1, 1), lam) != pieri_tau11(n, lam):
            raise ValueError(f"tau[1,1] column disagrees with the rule at {lam}")
    rebuilt = build_table(n)
    for lam, mu in table.pairs():
        if table.product(lam, mu) != rebuilt.product(lam, mu):
            raise ValueError(f"cached product {lam}*{mu} disagrees with a "
                             f"fresh rebuild")


def save_table(table: MultiplicationTable, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(canonical_dumps(table_to_dict(table)))


def load_table(path, *, revalidate: bool = False) -> MultiplicationTable:
    with open(path, "r", encoding="utf-8") as fh:
        return table_from_dict(json.load(fh), revalidate=revalidate)


# ---------------------------------------------------------------------------
# deformation specs


def spec_to_dict(spec: DeformationSpec) -> dict:
    entries = []
    for key, val in spec.items():
        if spec.mode == MODE_PER_PAIR:
            entries.append({"lambda": _index(key[0]), "mu": _index(key[1]),
                            "a": format_rational(val)})
        else:
            entries.append({"mu": _index(key), "a": format_rational(val)})
    return {"n": spec.n, "mode": spec.mode, "entries": entries}


def spec_from_dict(data: dict) -> DeformationSpec:
    n = int(data["n"])
    mode = data.get("mode", MODE_PER_PAIR)
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    entries = {}
    for e in data.get("entries", []):
        a = parse_rational(e["a"])
        if mode == MODE_PER_PAIR:
            key = (_as_index(e["lambda"]), _as_index(e["mu"]))
        else:
            key = _as_index(e["mu"])
        entries[key] = entries.get(key, Fraction(0)) + a
    return DeformationSpec(n, mode, entries)


def save_spec(spec: DeformationSpec, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(canonical_dumps(spec_to_dict(spec)))


def load_spec(path) -> DeformationSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return spec_from_dict(json.load(fh))


# ---------------------------------------------------------------------------
# certificates (self-contained: the constraint system is embedded)


def _unknown_to_json(mode: str, key) -> dict:
    if mode == MODE_PER_PAIR:
        return {"lambda": _index(key[0]), "mu": _index(key[1])}
    return {"mu": _index(key)}


def _unknown_from_json(mode: str, obj):
    if mode == MODE_PER_PAIR:
        return (_as_index(obj["lambda"]), _as_index(obj["mu"]))
    return _as_index(obj["mu"])


def certificate_to_dict(cert: Certificate, system: ConstraintSystem) -> dict:
    unknown_pos = {k: i for i, k in enumerate(system.unknowns)}
    constraint_dump = []
    for expr, (mu, nu, d) in zip(system.constraints, system.provenance):
        terms = sorted(((unknown_pos[k], v) for k, v in expr.linear.items()))
        constraint_dump.append({
            "provenance": {"mu": _index(mu), "nu": _index(nu), "d": d},
            "constant": format_rational(expr.constant),
            "terms": [{"unknown": i, "coeff": format_rational(v)} for i, v in terms],
        })
    bounds = [{
        "unknown": unknown_pos[b.unknown],
        "direction": b.direction,
        "weights": [{"constraint": i, "weight": format_rational(w)}
                    for i, w in b.weights],
    } for b in cert.bounds]
    witness = None
    if cert.witness is not None:
        witness = [{"unknown": unknown_pos[k], "value": format_rational(v)}
                   for k, v in sorted(cert.witness.items(),
                                      key=lambda kv: unknown_pos[kv[0]])]
    return {
        "n": cert.n,
        "mode": cert.mode,
        "conclusion": cert.conclusion,
        "unknowns": [_unknown_to_json(cert.mode, k) for k in cert.unknowns],
        "bounds": bounds,
        "witness": witness,
        "stats": cert.stats,
        "constraint_dump": constraint_dump,
    }


def certificate_from_dict(data: dict):
    """Rebuild (certificate, constraint system) from a self-contained dump."""
    n = int(data["n"])
    mode = data["mode"]
    unknowns = tuple(_unknown_from_json(mode, u) for u in data["unknowns"])
    constraints = []
    provenance = []
    for c in data["constraint_dump"]:
        linear = {unknowns[t["unknown"]]: parse_rational(t["coeff"])
                  for t in c["terms"]}
        constraints.append(AffineExpression(parse_rational(c["constant"]), linear))
        p = c["provenance"]
        provenance.append((_as_index(p["mu"]), _as_index(p["nu"]), int(p["d"])))
    system = ConstraintSystem(n, mode, unknowns, tuple(constraints), tuple(provenance))
    bounds = tuple(
        BoundProof(unknowns[b["unknown"]], b["direction"],
                   tuple((w["constraint"], parse_rational(w["weight"]))
                         for w in b["weights"]))
        for b in data["bounds"])
    witness = None
    if data.get("witness") is not None:
        witness = {unknowns[w["unknown"]]: parse_rational(w["value"])
                   for w in data["witness"]}
    cert = Certificate(n, mode, data["conclusion"], unknowns, bounds, witness,
                       dict(data.get("stats", {})))
    return cert, system


def save_certificate(cert: Certificate, system: ConstraintSystem, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(canonical_dumps(certificate_to_dict(cert, system)))


def load_certificate(path):
    with open(path, "r", encoding="utf-8") as fh:
        return certificate_from_dict(json.load(fh))


def load_schema(name: str) -> dict:
    """Load one of the shipped JSON schemas by file name."""
    text = resources.files("osglines").joinpath("schemas").joinpath(name) \
                    .read_text("utf-8")
    return json.loads(text)
