from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from osglines.algebra import (AffineExpression, ClassVector, QPolynomial,
                              QuadraticTermError)
from osglines.basis import enumerate_basis

fractions = st.fractions(min_value=-10, max_value=10, max_denominator=12)
exponents = st.integers(min_value=0, max_value=4)


def qpolys():
    return st.dictionaries(exponents, fractions, max_size=4).map(QPolynomial)


def affines():
    keys = st.sampled_from(["a", "b", "c"])
    return st.tuples(fractions,
                     st.dictionaries(keys, fractions, max_size=3)) \
             .map(lambda t: AffineExpression(t[0], t[1]))


def class_vectors(n=3):
    idx = st.sampled_from(enumerate_basis(n))
    return st.dictionaries(idx, qpolys(), max_size=4) \
             .map(lambda d: ClassVector(n, d))


@settings(max_examples=80, deadline=None)
@given(qpolys(), qpolys(), qpolys())
def test_qpolynomial_ring_laws(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + QPolynomial.zero() == p
    assert p * QPolynomial.constant(1) == p


@settings(max_examples=80, deadline=None)
@given(affines(), affines(), fractions)
def test_affine_laws(e, f, c):
    assert e + f == f + e
    assert (e + f) * c == e * c + f * c
    assert e - e == AffineExpression(0)
    assert -(-e) == e


@settings(max_examples=60, deadline=None)
@given(class_vectors(), class_vectors(), fractions)
def test_class_vector_module_laws(v, w, c):
    assert v + w == w + v
    assert (v + w).scale(c) == v.scale(c) + w.scale(c)
    assert v - v == ClassVector.zero(3)
    assert v + ClassVector.zero(3) == v


@settings(max_examples=60, deadline=None)
@given(qpolys())
def test_canonical_form_idempotent(p):
    rebuilt = QPolynomial(dict(p.items()))
    assert rebuilt == p
    assert QPolynomial(dict(rebuilt.items())) == rebuilt
    assert all(c for _, c in p.items())


def test_polynomial_example():
    q = QPolynomial.q()
    assert (q + QPolynomial.constant(1)) * q == QPolynomial({2: 1, 1: 1})


def test_cancellation_example():
    v = ClassVector(3, {(1, 0): QPolynomial.constant(1)})
    w = ClassVector(3, {(1, 0): QPolynomial.constant(-1)})
    assert (v + w).is_zero()


def test_affine_scaling_example():
    e = AffineExpression(2, {"a": 3})
    scaled = e * Fraction(1, 3)
    assert scaled == AffineExpression(Fraction(2, 3), {"a": 1})


def test_coefficient_extraction():
    v = ClassVector(3, {(1, 0): QPolynomial({1: 5, 0: 2})})
    assert v.coefficient((1, 0), 0) == 2
    assert v.coefficient((1, 0), 1) == 5
    assert ClassVector.zero(3).coefficient((1, 0), 0) == 0
    assert v.coefficient((2, 0), 0) == 0


def test_quadratic_product_raises():
    a = AffineExpression.unknown("a")
    b = AffineExpression.unknown("b")
    with pytest.raises(QuadraticTermError):
        a * b
    # constant * unknown stays affine
    assert AffineExpression(2) * a == AffineExpression(0, {"a": 2})


def test_affine_evaluation():
    e = AffineExpression(1, {"a": 2, "b": -1})
    assert e.evaluate({"a": Fraction(1, 2), "b": 3}) == -1


def test_rank_mismatch():
    v = ClassVector(3, {(1, 0): QPolynomial.constant(1)})
    w = ClassVector(4, {(1, 0): QPolynomial.constant(1)})
    with pytest.raises(ValueError, match="rank mismatch"):
        v + w


def test_invalid_index_rejected():
    with pytest.raises(ValueError, match="not valid"):
        ClassVector(3, {(2, 2): QPolynomial.constant(1)})


def test_from_terms_drops_invalid_indices():
    v = ClassVector.from_terms(3, [((2, 2), 1, 0), ((3, 1), 2, 0)])
    assert v == ClassVector(3, {(3, 1): QPolynomial.constant(2)})


def test_homogeneous_degree():
    v = ClassVector.from_terms(3, [((3, 1), 1, 0), ((0, 0), 2, 1)])  # 4 = 0 + 6? no
    assert v.homogeneous_degree() is None
    w = ClassVector.from_terms(3, [((5, 3), 1, 0), ((1, 1), 2, 1)])  # 8 = 2 + 6
    assert w.homogeneous_degree() == 8
