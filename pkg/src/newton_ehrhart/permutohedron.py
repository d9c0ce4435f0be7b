"""The lambda-permutohedron: Newton polytope of a Schur polynomial."""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterator, Sequence

from sympy.utilities.iterables import multiset_permutations

from .errors import DegeneratePolytopeError, EnumerationLimitError, ValidationError
from .partitions import Partition, dominates

Point = tuple[int, ...]

DEFAULT_MAX_POINTS = 5_000_000


def max_points() -> int:
    return int(os.environ.get("NEWTON_EHRHART_MAX_POINTS", DEFAULT_MAX_POINTS))


def check_point_budget(count: int) -> None:
    cap = max_points()
    if count > cap:
        raise EnumerationLimitError(
            f"enumeration of {count} lattice points exceeds NEWTON_EHRHART_MAX_POINTS={cap}"
        )


@dataclass(frozen=True)
class FacetInequality:
    """``<coeffs, x> (sense) bound`` with sense one of ``<=``, ``>=``, ``=``."""

    coeffs: tuple[int, ...]
    bound: int
    sense: str
    tag: str = ""

    def __post_init__(self) -> None:
        if self.sense not in ("<=", ">=", "="):
            raise ValidationError(f"unknown sense {self.sense!r}")
        if not any(self.coeffs):
            raise ValidationError("facet functional must be nonzero")

    def value(self, p: Sequence[int]) -> int:
        return sum(a * x for a, x in zip(self.coeffs, p))

    def normalized(self) -> "FacetInequality":
        """Same half-space written in ``<=`` form."""
        if self.sense == ">=":
            return FacetInequality(tuple(-a for a in self.coeffs), -self.bound, "<=", self.tag)
        return self

    def slack(self, p: Sequence[int]) -> int:
        """Nonnegative iff p satisfies the inequality; zero on the hyperplane."""
        n = self.normalized()
        return n.bound - n.value(p)

    def satisfied(self, p: Sequence[int]) -> bool:
        if self.sense == "=":
            return self.value(p) == self.bound
        return self.slack(p) >= 0

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs), "bound": self.bound, "sense": self.sense}


def vertices(lam: Partition) -> list[Point]:
    return [tuple(p) for p in multiset_permutations(list(lam.parts))]


def contains(lam: Partition, p: Sequence[int]) -> bool:
    if len(p) != lam.m or any(x < 0 for x in p) or sum(p) != lam.size:
        return False
    return dominates(lam, Partition(tuple(sorted(p, reverse=True))))


def dominated_partitions(lam: Partition) -> Iterator[Partition]:
    """Partitions mu of |lam| with at most m parts and ``mu ⊴ lam``."""
    m, n = lam.m, lam.size
    bounds = lam.prefix_sums()
    cur: list[int] = []

    def rec(i: int, s: int, prev: int) -> Iterator[Partition]:
        if i == m:
            if s == n:
                yield Partition(tuple(cur))
            return
        rem_parts = m - i
        for v in range(min(prev, bounds[i] - s), -1, -1):
            if v * rem_parts < n - s:
                break
            cur.append(v)
            yield from rec(i + 1, s + v, v)
            cur.pop()

    yield from rec(0, 0, lam.parts[0])


@lru_cache(maxsize=4096)
def _count_dominated_orbits(parts: tuple[int, ...]) -> int:
    m = len(parts)
    n = sum(parts)
    bounds = []
    s = 0
    for p in parts:
        s += p
        bounds.append(s)

    @lru_cache(maxsize=None)
    def f(i: int, s: int, below: int) -> int:
        # positions 0..i-1 filled with prefix sum s; next run takes a value < below
        if i == m:
            return 1 if s == n else 0
        left = m - i
        total = 0
        for v in range(min(below - 1, bounds[i] - s), -1, -1):
            if v * left < n - s:
                break
            acc = s
            for c in range(1, left + 1):
                acc += v
                if acc > bounds[i + c - 1]:
                    break
                total += comb(left, c) * f(i + c, acc, v)
        return total

    result = f(0, 0, parts[0] + 1)
    f.cache_clear()
    return result


def count_lattice_points(lam: Partition) -> int:
    """Lattice points of the permutohedron, counted as orbit sizes of dominated partitions."""
    return _count_dominated_orbits(lam.parts)


def lattice_points(lam: Partition) -> list[Point]:
    check_point_budget(count_lattice_points(lam))
    out: list[Point] = []
    for mu in dominated_partitions(lam):
        out.extend(tuple(p) for p in multiset_permutations(list(mu.parts)))
    return out


def rado_bound(lam: Partition, size: int) -> int:
    return sum(lam.parts[:size])


def _block_dim(block: Sequence[int]) -> int:
    return 0 if len(set(block)) <= 1 else len(block) - 1


def facet_subset_sizes(lam: Partition) -> list[int]:
    """Subset sizes s for which the Rado inequalities are facet-defining.

    The tight vertices of ``sum_{i in I} x_i <= lam_1 + ... + lam_s`` form a
    product of the permutohedra of the first s and the last m-s parts, so the
    face dimension is the sum of the two block dimensions.
    """
    if lam.is_trivial_orbit():
        return []
    m = lam.m
    return [
        s
        for s in range(1, m)
        if _block_dim(lam.parts[:s]) + _block_dim(lam.parts[s:]) == m - 2
    ]


def facets(lam: Partition) -> list[FacetInequality]:
    """Facet inequalities, one per qualifying subset I in lexicographic order."""
    if lam.is_trivial_orbit():
        raise DegeneratePolytopeError(f"permutohedron of {lam} is a single point")
    return layer_facets(lam)


def layer_facets(lam: Partition) -> list[FacetInequality]:
    """Like :func:`facets` but returns ``[]`` for a point polytope."""
    m = lam.m
    out = []
    for s in facet_subset_sizes(lam):
        bound = rado_bound(lam, s)
        for subset in combinations(range(m), s):
            coeffs = tuple(1 if i in subset else 0 for i in range(m))
            tag = "I={" + ",".join(str(i + 1) for i in subset) + "}"
            out.append(FacetInequality(coeffs, bound, "<=", tag))
    return out


def span_equation(lam: Partition) -> FacetInequality:
    return FacetInequality((1,) * lam.m, lam.size, "=", "span")


def dilate(lam: Partition, t: int) -> Partition:
    if t < 1:
        raise ValidationError(f"dilation factor must be positive, got {t}")
    return lam.scaled(t)
