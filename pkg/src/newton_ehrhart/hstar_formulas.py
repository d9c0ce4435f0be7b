"""Closed-form h*-vectors for three reflexive Schur families.

Family (m = n throughout):

* single row   lambda = (n, 0, ..., 0)
* near hook    lambda = (2, 1, ..., 1)
* two row      lambda = (2, ..., 2) or (2, ..., 2, 1)

The fifth reflexive family (m, ..., m, 0) has no closed form here; use the
generic engine in :mod:`newton_ehrhart.ehrhart`.
"""
from __future__ import annotations

from math import comb

from .ehrhart import HStarVector
from .errors import ValidationError


def binom(x: int, r: int) -> int:
    """C(x, r) with the convention C(x, r) = 0 whenever x < r (negative x included)."""
    if r < 0 or x < r:
        return 0
    return comb(x, r)


def _check_n(n: int, least: int) -> None:
    if n < least:
        raise ValidationError(f"n must be at least {least}, got {n}")


def hstar_single_row(n: int) -> HStarVector:
    _check_n(n, 1)
    coeffs = [
        sum((-1) ** i * binom(n, i) * binom((j - i + 1) * n - 1, n - 1) for i in range(j + 1))
        for j in range(n)
    ]
    return HStarVector(tuple(coeffs), n - 1)


def hstar_near_hook(n: int) -> HStarVector:
    _check_n(n, 3)
    return HStarVector(tuple(binom(n - 1, j) ** 2 for j in range(n)), n - 1)


def bounded_compositions(n: int, k: int) -> int:
    """Weak compositions of n*k into n parts, each part at most 2k."""
    _check_n(n, 1)
    if k < 0:
        raise ValidationError(f"k must be nonnegative, got {k}")
    return sum(
        (-1) ** i * binom(n, i) * binom(n * k + n - 1 - i * (2 * k + 1), n - 1)
        for i in range(n + 1)
    )


def hstar_two_row_family(n: int) -> HStarVector:
    _check_n(n, 2)
    a = [bounded_compositions(n, k) for k in range(n)]
    coeffs = [
        sum((-1) ** (j - k) * binom(n, j - k) * a[k] for k in range(j + 1)) for j in range(n)
    ]
    return HStarVector(tuple(coeffs), n - 1)


def single_row_partition(n: int) -> tuple[int, ...]:
    return (n,) + (0,) * (n - 1)


def near_hook_partition(n: int) -> tuple[int, ...]:
    return (2,) + (1,) * (n - 2) + (0,)


def two_row_partition(n: int) -> tuple[int, ...]:
    twos = n // 2
    return (2,) * twos + (1,) * (n % 2) + (0,) * (n - twos - n % 2)


FAMILIES = {
    "single-row": (hstar_single_row, single_row_partition, 1),
    "near-hook": (hstar_near_hook, near_hook_partition, 3),
    "two-row": (hstar_two_row_family, two_row_partition, 2),
}
