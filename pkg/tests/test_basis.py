import pytest

from osglines.basis import (betti_numbers, degree, enumerate_basis,
                            enumerate_degree, is_valid, max_degree, top_class)


def oracle_valid(n, lam):
    # the three membership conditions, written out independently
    l1, l2 = lam
    if not (2 * n - 1 >= l1 and l1 >= l2 and l2 >= -1):
        return False
    if l1 > n - 2 and not l1 > l2:
        return False
    if l2 == -1 and not l1 == 2 * n - 1:
        return False
    return True


def oracle_basis(n):
    grid = [(a, b) for a in range(-1, 2 * n) for b in range(-1, 2 * n)]
    found = [lam for lam in grid if oracle_valid(n, lam)]
    found.sort(key=lambda lam: (lam[0] + lam[1], -lam[0]))
    return found


@pytest.mark.parametrize("n", range(2, 9))
def test_enumeration_matches_grid_oracle(n):
    assert enumerate_basis(n) == oracle_basis(n)


@pytest.mark.parametrize("n", range(2, 9))
def test_validity_matches_oracle_on_grid(n):
    for a in range(-2, 2 * n + 2):
        for b in range(-2, 2 * n + 2):
            assert is_valid(n, (a, b)) == oracle_valid(n, (a, b))


def test_validity_examples():
    assert is_valid(3, (5, -1)) is True
    assert is_valid(3, (2, 2)) is False
    assert is_valid(3, (0, 0)) is True
    assert is_valid(2, (1, 1)) is False


def test_degree_examples():
    assert degree((5, 4)) == 9
    assert degree((5, -1)) == 4
    assert degree((0, 0)) == 0


def test_basis_sizes():
    assert len(enumerate_basis(3)) == 18
    assert len(enumerate_basis(2)) == 8


def test_degree_profile_n3():
    assert betti_numbers(3) == [1, 1, 2, 2, 3, 3, 2, 2, 1, 1]


def test_degree_slices_n3():
    assert set(enumerate_degree(3, 4)) == {(4, 0), (3, 1), (5, -1)}
    assert enumerate_degree(3, 10) == []
    assert enumerate_degree(3, -1) == []
    assert enumerate_degree(3, 0) == [(0, 0)]


@pytest.mark.parametrize("n", range(3, 9))
def test_betti_symmetry(n):
    b = betti_numbers(n)
    top = max_degree(n)
    for d in range(top + 1):
        assert b[d] == b[top - d]


@pytest.mark.parametrize("n", range(2, 9))
def test_top_class_unique(n):
    assert enumerate_degree(n, max_degree(n)) == [top_class(n)]
    assert max(degree(lam) for lam in enumerate_basis(n)) == max_degree(n)


def test_slices_are_restrictions_of_the_basis():
    for n in range(2, 7):
        basis = enumerate_basis(n)
        for d in range(0, max_degree(n) + 1):
            assert enumerate_degree(n, d) == [l for l in basis if degree(l) == d]


def test_rejects_small_rank():
    with pytest.raises(ValueError):
        enumerate_basis(1)
    with pytest.raises(TypeError):
        enumerate_basis("3")
