"""Certified rigidity of the basis under the positivity condition.

Two independent routes establish, for one rank at a time, that the positivity
condition on products with sigma[1,1] forces every deformation coefficient to
zero.

Route A (`build_constraints` + `certify_uniqueness`) is generic: expand every
product sigma[1,1] * sigma[mu] symbolically, collect one affine inequality
">= 0" per coefficient, and run exact Fourier-Motzkin elimination to compute
the feasible interval of every unknown.  The elimination history yields, for
each unknown, nonnegative-weight combinations of the original constraints
that literally sum to "a >= 0" and "-a >= 0"; these are stored in the
certificate and can be re-checked by plain weighted summation
(`verify_certificate`), independently of the search.

Route B (`replay_proof`) follows the structure of the uniqueness argument:
multiply sigma[lam] by the matching power of sigma[1,1] so that everything
collapses into the quantum range, compare the engine's symbolic expansion
with the closed-form display it is supposed to equal, and read off the sign
deductions.  Degree 2n classes are settled first, higher degrees by
induction.  Every displayed identity is checked termwise; a discrepancy
raises `MismatchError` naming the step.

All symbolic work happens in affine expressions; a quadratic term anywhere
would raise `QuadraticTermError` and is treated as a bug, never ignored.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import AffineExpression, ClassVector
from .basis import degree, enumerate_degree, max_degree
from .deformation import (DeformationSpec, MODE_PER_PAIR, MODES, mu_keys,
                          pair_keys, deformed_product, to_sigma)
from .ring import MultiplicationTable, diagonal_power, multiply

CONCLUSION_UNIQUE_ZERO = "UniqueZero"
CONCLUSION_NOT_UNIQUE = "NotUnique"

DEFAULT_ROW_LIMIT = 200_000


class ResourceLimitError(RuntimeError):
    """Elimination exceeded the configured intermediate-constraint ceiling."""


class MismatchError(RuntimeError):
    """An engine expansion differs from the closed-form display it replays."""

    def __init__(self, step: str, detail: str):
        super().__init__(f"{step}: {detail}")
        self.step = step


@dataclass(frozen=True)
class ConstraintSystem:
    """Affine inequalities `expression >= 0` over the deformation unknowns."""
    n: int
    mode: str
    unknowns: tuple
    constraints: tuple          # AffineExpression, each asserted >= 0
    provenance: tuple           # (mu, nu, d) identifying the source coefficient


def build_constraints(table: MultiplicationTable, mode: str = MODE_PER_PAIR) -> ConstraintSystem:
    """Symbolic positivity constraints from every product sigma[1,1] * sigma[mu].

    Constant coefficients are nonnegative by the expansion rules and are
    dropped; everything kept is genuinely affine in the unknowns.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    n = table.n
    spec = DeformationSpec.symbolic(n, mode)
    unknowns = tuple(pair_keys(n) if mode == MODE_PER_PAIR else mu_keys(n))
    constraints = []
    provenance = []
    for mu in table.basis:
        prod = deformed_product(spec, table, (1, 1), mu)
        for nu, d, coeff in prod.flat_items():
            if not isinstance(coeff, AffineExpression):
                coeff = AffineExpression(coeff)
            if coeff.is_constant():
                if coeff.constant < 0:
                    raise RuntimeError(
                        f"negative constant coefficient in sigma[1,1]*sigma[{mu}]: "
                        f"{coeff.constant} at {nu}, q^{d}")
                continue
            constraints.append(coeff)
            provenance.append((mu, nu, d))
    return ConstraintSystem(n, mode, unknowns, tuple(constraints), tuple(provenance))


# ---------------------------------------------------------------------------
# Fourier-Motzkin elimination with combination tracking


class _Row:
    """lin . a + const >= 0, plus its expression as a combination of originals."""

    __slots__ = ("lin", "const", "combo")

    def __init__(self, lin, const, combo):
        self.lin = lin          # {unknown position: Fraction}, no zeros
        self.const = const
        self.combo = combo      # {original constraint index: positive Fraction}


def _rows_from_system(system: ConstraintSystem):
    pos = {k: i for i, k in enumerate(system.unknowns)}
    rows = []
    for idx, expr in enumerate(system.constraints):
        lin = {pos[k]: v for k, v in expr.linear.items()}
        rows.append(_Row(lin, expr.constant, {idx: Fraction(1)}))
    return rows


def _combine(pr: _Row, nr: _Row, var: int) -> _Row:
    w_pos = -nr.lin[var]        # > 0
    w_neg = pr.lin[var]         # > 0
    lin = {}
    for p, v in pr.lin.items():
        lin[p] = w_pos * v
    for p, v in nr.lin.items():
        lin[p] = lin.get(p, Fraction(0)) + w_neg * v
    lin = {p: v for p, v in lin.items() if p != var and v}
    const = w_pos * pr.const + w_neg * nr.const
    combo = {i: w_pos * w for i, w in pr.combo.items()}
    for i, w in nr.combo.items():
        combo[i] = combo.get(i, Fraction(0)) + w_neg * w
    return _Row(lin, const, combo)


def _prune(rows):
    """Drop satisfied constants, positive multiples, and dominated duplicates."""
    best = {}
    for r in rows:
        if not r.lin:
            if r.const < 0:
                raise ValueError("constraint system is infeasible")
            continue
        lead = min(r.lin)
        s = abs(r.lin[lead])
        key = tuple(sorted((p, v / s) for p, v in r.lin.items()))
        c = r.const / s
        kept = best.get(key)
        if kept is None or c < kept[0]:
            best[key] = (c, r)
    return [r for _, r in best.values()]


def _eliminate(rows, var: int, limit: int):
    pos, neg, rest = [], [], []
    for r in rows:
        c = r.lin.get(var)
        if c is None or not c:
            rest.append(r)
        elif c > 0:
            pos.append(r)
        else:
            neg.append(r)
    if len(rest) + len(pos) * len(neg) > limit:
        raise ResourceLimitError(
            f"elimination would exceed {limit} intermediate constraints "
            f"({len(pos)}x{len(neg)} products); raise the ceiling to proceed")
    out = rest + [_combine(p, n, var) for p in pos for n in neg]
    return _prune(out)


def _project_onto(rows, keep: int, limit: int, peak=None):
    """Eliminate every variable except `keep`, cheapest-looking first.

    `peak`, when given, is a one-element list recording the largest working
    set seen across eliminations.
    """
    rows = _prune(rows)
    remaining = set()
    for r in rows:
        remaining.update(r.lin)
    remaining.discard(keep)
    while remaining:
        counts = {v: [0, 0] for v in remaining}
        for r in rows:
            for v in r.lin:
                if v in counts:
                    counts[v][r.lin[v] < 0] += 1
        var = min(remaining, key=lambda v: (counts[v][0] * counts[v][1], v))
        rows = _eliminate(rows, var, limit)
        if peak is not None:
            peak[0] = max(peak[0], len(rows))
        remaining = set()
        for r in rows:
            remaining.update(r.lin)
        remaining.discard(keep)
    return rows


def _interval(rows, var: int):
    """Exact feasible interval of one variable from its projected rows.

    Returns (lo, hi, lo_row, hi_row); None stands for an unbounded side.
    """
    lo = hi = None
    lo_row = hi_row = None
    for r in rows:
        c = r.lin.get(var)
        if not c:
            continue
        if c > 0:
            bound = -r.const / c
            if lo is None or bound > lo:
                lo, lo_row = bound, r
        else:
            bound = r.const / (-c)
            if hi is None or bound < hi:
                hi, hi_row = bound, r
    return lo, hi, lo_row, hi_row


@dataclass(frozen=True)
class BoundProof:
    unknown: object
    direction: str                      # "lower" proves a >= 0, "upper" proves a <= 0
    weights: tuple                      # ((constraint index, weight), ...)


@dataclass(frozen=True)
class Certificate:
    n: int
    mode: str
    conclusion: str
    unknowns: tuple
    bounds: tuple                       # BoundProof entries, empty for NotUnique
    witness: dict | None                # nonzero feasible assignment, if any
    stats: dict


def _scaled_weights(row: _Row, scale: Fraction):
    return tuple(sorted((i, w * scale) for i, w in row.combo.items() if w * scale))


def certify_uniqueness(system: ConstraintSystem,
                       max_rows: int = DEFAULT_ROW_LIMIT) -> Certificate:
    """Decide whether the feasible set of the system is exactly the origin.

    For each unknown the exact feasible interval is computed by eliminating
    all other unknowns.  The conclusion is UniqueZero iff every interval is
    [0, 0]; the eliminations' combination history then provides the two
    Farkas-style weight lists per unknown.
    """
    base = _rows_from_system(system)
    nvars = len(system.unknowns)
    intervals = {}
    bounds = []
    peak = [len(base)]
    for k, key in enumerate(system.unknowns):
        rows = _project_onto(list(base), k, max_rows, peak)
        lo, hi, lo_row, hi_row = _interval(rows, k)
        intervals[key] = (lo, hi)
        if lo == 0 and hi == 0:
            bounds.append(BoundProof(key, "lower",
                                     _scaled_weights(lo_row, Fraction(1) / lo_row.lin[k])))
            bounds.append(BoundProof(key, "upper",
                                     _scaled_weights(hi_row, Fraction(1) / -hi_row.lin[k])))
    stats = {"unknowns": nvars, "constraints": len(system.constraints),
             "peak_working_rows": peak[0]}
    if all(iv == (Fraction(0), Fraction(0)) for iv in intervals.values()):
        return Certificate(system.n, system.mode, CONCLUSION_UNIQUE_ZERO,
                           system.unknowns, tuple(bounds), None, stats)
    witness = _find_witness(system, intervals, max_rows)
    return Certificate(system.n, system.mode, CONCLUSION_NOT_UNIQUE,
                       system.unknowns, (), witness, stats)


def _substitute(rows, var: int, value: Fraction):
    out = []
    for r in rows:
        c = r.lin.get(var)
        if c is None or not c:
            out.append(r)
            continue
        lin = {p: v for p, v in r.lin.items() if p != var}
        out.append(_Row(lin, r.const + c * value, r.combo))
    return out


def _find_witness(system: ConstraintSystem, intervals, max_rows: int) -> dict:
    """A feasible assignment that is nonzero somewhere, by back-substitution."""
    free = next(k for k, iv in intervals.items()
                if iv != (Fraction(0), Fraction(0)))
    order = [free] + [k for k in system.unknowns if k != free]
    pos = {k: i for i, k in enumerate(system.unknowns)}
    rows = _rows_from_system(system)
    assignment = {}
    for key in order:
        p = pos[key]
        projected = _project_onto(list(rows), p, max_rows)
        lo, hi, _, _ = _interval(projected, p)
        if hi is not None and hi != 0:
            value = hi
        elif lo is not None and lo != 0:
            value = lo
        elif hi is None:
            value = max(lo if lo is not None else Fraction(0), Fraction(0)) + 1
        elif lo is None:
            value = min(hi, Fraction(0)) - 1
        else:
            value = Fraction(0)
        assignment[key] = value
        rows = _prune(_substitute(rows, p, value))
    return assignment


def verify_certificate(system: ConstraintSystem, cert: Certificate) -> bool:
    """Re-derive every claimed inequality by exact weighted summation.

    Independent of the elimination: only the stored constraints and the
    certificate's weight lists are used.  Returns False on any defect
    (negative weight, bad index, sum not literally equal to the claimed
    inequality, missing bound, bad witness).
    """
    try:
        if cert.unknowns != system.unknowns or cert.n != system.n \
                or cert.mode != system.mode:
            return False
        if cert.conclusion == CONCLUSION_UNIQUE_ZERO:
            seen = set()
            for bound in cert.bounds:
                if bound.direction not in ("lower", "upper"):
                    return False
                sign = 1 if bound.direction == "lower" else -1
                target = AffineExpression(0, {bound.unknown: sign})
                acc = AffineExpression(0)
                for idx, w in bound.weights:
                    w = Fraction(w)
                    if w < 0 or not (0 <= idx < len(system.constraints)):
                        return False
                    acc = acc + system.constraints[idx] * w
                if acc != target:
                    return False
                seen.add((bound.unknown, bound.direction))
            return all((k, d) in seen for k in system.unknowns
                       for d in ("lower", "upper"))
        if cert.conclusion == CONCLUSION_NOT_UNIQUE:
            if not cert.witness or not any(cert.witness.values()):
                return False
            return all(expr.evaluate(cert.witness) >= 0
                       for expr in system.constraints)
        return False
    except Exception:
        return False


# ---------------------------------------------------------------------------
# Route B: structured replay of the uniqueness argument


@dataclass
class ReplayStep:
    tag: str
    subject: object
    verified: bool
    deductions: list = field(default_factory=list)


@dataclass
class ReplayReport:
    n: int
    steps: list
    unknowns: tuple
    all_zero: bool
    conclusion: str
    resolutions: dict


def _symbolic_sigma(spec, lam, zeroed) -> ClassVector:
    """sigma[lam] in tau coordinates, with already-settled unknowns set to zero."""
    n = spec.n
    vec = ClassVector.basis(n, lam)
    for mu, a in spec.corrections(lam):
        if (lam, mu) in zeroed:
            continue
        vec = vec - ClassVector.basis(n, mu, d=1, coeff=a)
    return vec


def _expect(n, terms) -> ClassVector:
    return ClassVector.from_terms(n, terms)


def _unknown(key) -> AffineExpression:
    return AffineExpression.unknown(key)


def replay_proof(table: MultiplicationTable) -> ReplayReport:
    """Replay the per-rank uniqueness argument, checking each display termwise.

    Works with one unknown per (lam, mu) pair, which subsumes the shared-
    coefficient mode.  Steps:

      diagonal-power      the multiplier powers tau[1,1]^t themselves
      collapse-upper      degree-2n classes with lam1 >= n+2: the t-fold
                          product collapses to q-terms and exposes -a
      near-diagonal-upper the remaining degree-2n class (n+1, n-1)
      pieri-lower         sigma[1,1] * sigma[lam1-1, lam2-1] = sigma[lam]
                          + corrections, exposing +a for every correction
      pair-upper          degrees above 2n: the collapsed product exposes
                          -a per correction class, or adjacent sums -(a+a')

    The sign deductions are combined exactly as the argument combines them
    (a >= 0 together with a <= 0, or with a + a' <= 0 and a' >= 0) and the
    conclusion records whether every unknown is forced to zero.
    """
    n = table.n
    spec = DeformationSpec.symbolic(n, MODE_PER_PAIR)
    unknowns = tuple(pair_keys(n))
    steps: list[ReplayStep] = []
    nonneg: set = set()
    nonpos: set = set()
    pair_sums: list = []
    zeroed: set = set()
    resolutions: dict = {}

    def check(tag, subject, engine, expected, deductions):
        if engine != expected:
            raise MismatchError(tag, f"subject {subject}: engine expansion "
                                     f"{engine!r} != display {expected!r}")
        steps.append(ReplayStep(tag, subject, True, deductions))

    # multiplier powers of tau[1,1]
    powers = {t: diagonal_power(table, t) for t in range(0, n)}
    for t in range(1, n - 1):
        check("diagonal-power", t, powers[t], _expect(n, [((t, t), 1, 0)]),
              [])
    check("diagonal-power", n - 1, powers[n - 1],
          _expect(n, [((n, n - 2), 1, 0)]), [])

    def settle_degree(d_lam):
        """Combine the recorded sign facts for all unknowns of one degree."""
        keys = [k for k in unknowns if degree(k[0]) == d_lam]
        changed = True
        while changed:
            changed = False
            for k in keys:
                if k in zeroed:
                    continue
                if k in nonneg and k in nonpos:
                    zeroed.add(k)
                    resolutions[k] = "lower and upper bounds meet at zero"
                    changed = True
            for k1, k2 in pair_sums:
                if k1 in nonneg and k2 in nonneg:
                    for k, other in ((k1, k2), (k2, k1)):
                        if k not in zeroed:
                            zeroed.add(k)
                            resolutions[k] = (f"nonnegative, and the sum with "
                                              f"nonnegative {other} is nonpositive")
                            changed = True
        return all(k in zeroed for k in keys)

    # degree 2n: upper bounds via collapsed products, lower bounds via the rule
    for lam in enumerate_degree(n, 2 * n):
        t = 2 * n - lam[0]
        a_key = (lam, (0, 0))
        sig = _symbolic_sigma(spec, lam, zeroed)
        engine = to_sigma(spec, multiply(table, powers[t], sig))
        if lam[0] >= n + 2:
            expected = _expect(n, [((lam[1] + t, 0), 1, 1),
                                   ((t, t), -_unknown(a_key), 1)])
            check("collapse-upper", lam, engine, expected, [("nonpos", a_key)])
        else:
            expected = _expect(n, [((2 * n - 1, -1), 1, 1), ((2 * n - 2, 0), 1, 1),
                                   ((n, n - 2), -_unknown(a_key), 1)])
            check("near-diagonal-upper", lam, engine, expected, [("nonpos", a_key)])
        nonpos.add(a_key)

    for j in range(0, n - 1):
        pred = (n + j, n - 2 - j)
        lam = (n + 1 + j, n - 1 - j)
        a_key = (lam, (0, 0))
        engine = to_sigma(spec, multiply(table, ClassVector.basis(n, (1, 1)),
                                         _symbolic_sigma(spec, pred, zeroed)))
        expected = _expect(n, [(lam, 1, 0), ((0, 0), _unknown(a_key), 1)])
        check("pieri-lower", lam, engine, expected, [("nonneg", a_key)])
        nonneg.add(a_key)

    if not settle_degree(2 * n):
        raise MismatchError("conclusion", f"degree {2*n} unknowns not all settled")

    # degrees above 2n, by induction
    for d_lam in range(2 * n + 1, max_degree(n) + 1):
        for lam in enumerate_degree(n, d_lam):
            pred = (lam[0] - 1, lam[1] - 1)
            kappas = enumerate_degree(n, d_lam - 2 * n)
            engine = to_sigma(spec, multiply(table, ClassVector.basis(n, (1, 1)),
                                             _symbolic_sigma(spec, pred, zeroed)))
            expected = _expect(n, [(lam, 1, 0)] +
                               [(kap, _unknown((lam, kap)), 1) for kap in kappas])
            check("pieri-lower", lam, engine, expected,
                  [("nonneg", (lam, kap)) for kap in kappas])
            nonneg.update((lam, kap) for kap in kappas)

            t = 2 * n - lam[0]
            sig = _symbolic_sigma(spec, lam, zeroed)
            engine = to_sigma(spec, multiply(table, powers[t], sig))
            gap = lam[0] - lam[1]
            if lam[1] + t != 2 * n - 2:
                terms = [((lam[1] + t, 0), 1, 1)]
            else:
                terms = [((2 * n - 1, -1), 1, 1), ((2 * n - 2, 0), 1, 1)]
            deductions = []
            if gap >= 3:
                for mu in kappas:
                    terms.append(((mu[0] + t, mu[1] + t), -_unknown((lam, mu)), 1))
                    deductions.append(("nonpos", (lam, mu)))
                    nonpos.add((lam, mu))
            elif gap == 1:
                a = [(lam, (2 * n - 1 - 2 * t - i, i)) for i in range(n - t)]
                terms.append(((2 * n - t, t - 1), -_unknown(a[0]), 1))
                for i in range(0, n - 1 - t):
                    terms.append(((2 * n - 1 - t - i, t + i),
                                  -(_unknown(a[i]) + _unknown(a[i + 1])), 1))
                    deductions.append(("pair-nonpos", a[i], a[i + 1]))
                    pair_sums.append((a[i], a[i + 1]))
                terms.append(((n, n - 1), -_unknown(a[n - 1 - t]), 1))
                deductions.append(("nonpos", a[n - 1 - t]))
                nonpos.add(a[n - 1 - t])
            else:
                b = [(lam, (2 * n - 2 - 2 * t - i, i)) for i in range(n - t)]
                terms.append(((2 * n - 1 - t, t - 1), -_unknown(b[0]), 1))
                for i in range(0, n - 1 - t):
                    terms.append(((2 * n - 2 - t - i, t + i),
                                  -(_unknown(b[i]) + _unknown(b[i + 1])), 1))
                    deductions.append(("pair-nonpos", b[i], b[i + 1]))
                    pair_sums.append((b[i], b[i + 1]))
            check("pair-upper", lam, engine, _expect(n, terms), deductions)
        if not settle_degree(d_lam):
            raise MismatchError("conclusion", f"degree {d_lam} unknowns not all settled")

    all_zero = all(k in zeroed for k in unknowns)
    conclusion = CONCLUSION_UNIQUE_ZERO if all_zero else CONCLUSION_NOT_UNIQUE
    return ReplayReport(n, steps, unknowns, all_zero, conclusion, resolutions)
