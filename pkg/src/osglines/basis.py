"""Index set of Schubert classes for the odd symplectic Grassmannian of lines.

Classes of IG(2, 2n+1) are indexed by pairs (l1, l2) of integers subject to

    2n-1 >= l1 >= l2 >= -1,
    l1 > n-2  implies  l1 > l2,
    l2 = -1   implies  l1 = 2n-1.

The cohomological degree of an index is l1 + l2; the top degree is 4n-3.
"""
from __future__ import annotations

from functools import lru_cache

Index = tuple[int, int]

MIN_RANK = 2
MIN_RING_RANK = 3  # products of the two special classes need (1,1) in the index set


def check_rank(n: int, minimum: int = MIN_RANK) -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"rank must be an integer, got {n!r}")
    if n < minimum:
        raise ValueError(f"rank must be >= {minimum}, got {n}")
    return n


def is_valid(n: int, lam) -> bool:
    """Total membership predicate on integer pairs."""
    l1, l2 = lam
    if not (2 * n - 1 >= l1 >= l2 >= -1):
        return False
    if l1 > n - 2 and l1 == l2:
        return False
    if l2 == -1 and l1 != 2 * n - 1:
        return False
    return True


def degree(lam) -> int:
    return lam[0] + lam[1]


def index_sort_key(lam) -> tuple[int, int]:
    # degree-major order, larger first component first within a degree
    return (lam[0] + lam[1], -lam[0])


def max_degree(n: int) -> int:
    return 4 * n - 3


def top_class(n: int) -> Index:
    return (2 * n - 1, 2 * n - 2)


@lru_cache(maxsize=None)
def _basis(n: int) -> tuple[Index, ...]:
    out: list[Index] = []
    for l1 in range(0, 2 * n):
        if l1 <= n - 2:
            lo, hi = 0, l1
        elif l1 < 2 * n - 1:
            lo, hi = 0, l1 - 1
        else:
            out.append((2 * n - 1, -1))
            lo, hi = 0, 2 * n - 2
        out.extend((l1, l2) for l2 in range(lo, hi + 1))
    out.sort(key=index_sort_key)
    return tuple(out)


@lru_cache(maxsize=None)
def _degree_slice(n: int, d: int) -> tuple[Index, ...]:
    return tuple(lam for lam in _basis(n) if degree(lam) == d)


def enumerate_basis(n: int) -> list[Index]:
    """All valid indices, sorted by (degree, first component descending)."""
    check_rank(n)
    return list(_basis(n))


def enumerate_degree(n: int, d: int) -> list[Index]:
    """The degree-d slice of the basis; empty outside 0..4n-3."""
    check_rank(n)
    if d < 0 or d > max_degree(n):
        return []
    return list(_degree_slice(n, d))


def betti_numbers(n: int) -> list[int]:
    """Sizes of the degree slices, degrees 0..4n-3."""
    check_rank(n)
    counts = [0] * (max_degree(n) + 1)
    for lam in _basis(n):
        counts[degree(lam)] += 1
    return counts
