"""Newton polytope of the inflated symmetric Grothendieck polynomial G_{h,lambda}.

The polytope is sliced by the hyperplanes ``sum(x) = |lambda| + k``; slice k is
the permutohedron of the k-th dominating partition.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Sequence

from . import permutohedron as perm
from .errors import ValidationError
from .partitions import DominatingSequence, Partition, dominates, dominating_sequence
from .permutohedron import FacetInequality, Point


@lru_cache(maxsize=1024)
def _sequence(h: int, parts: tuple[int, ...]) -> DominatingSequence:
    return dominating_sequence(h, Partition(parts))


def sequence(h: int, lam: Partition) -> DominatingSequence:
    return _sequence(h, lam.parts)


def layer(h: int, lam: Partition, k: int) -> Partition:
    seq = sequence(h, lam)
    if not 0 <= k <= seq.N:
        raise ValidationError(f"layer {k} out of range 0..{seq.N}")
    return seq.seq[k]


def contains(h: int, lam: Partition, p: Sequence[int]) -> bool:
    if len(p) != lam.m or any(x < 0 for x in p):
        return False
    seq = sequence(h, lam)
    k = sum(p) - lam.size
    if not 0 <= k <= seq.N:
        return False
    return dominates(seq.seq[k], Partition(tuple(sorted(p, reverse=True))))


def vertex_partitions(h: int, lam: Partition) -> list[Partition]:
    seq = sequence(h, lam)
    return [seq.seq[k] for k in seq.vertex_layers()]


def vertices(h: int, lam: Partition) -> list[Point]:
    out: list[Point] = []
    for mu in vertex_partitions(h, lam):
        out.extend(sorted(perm.vertices(mu)))
    return out


def count_lattice_points(h: int, lam: Partition) -> int:
    return sum(perm.count_lattice_points(mu) for mu in sequence(h, lam).seq)


def lattice_points(h: int, lam: Partition) -> list[Point]:
    perm.check_point_budget(count_lattice_points(h, lam))
    out: list[Point] = []
    for mu in sequence(h, lam).seq:
        out.extend(perm.lattice_points(mu))
    return out


def dilate(h: int, lam: Partition, t: int) -> tuple[int, Partition]:
    if t < 1:
        raise ValidationError(f"dilation factor must be positive, got {t}")
    return t * h, lam.scaled(t)


def _indicator(subset: Sequence[int], m: int) -> tuple[int, ...]:
    s = set(subset)
    return tuple(1 if i in s else 0 for i in range(m))


def _tag(k: int, subset: Sequence[int]) -> str:
    return f"k={k} I={{" + ",".join(str(i + 1) for i in subset) + "}"


def facets(h: int, lam: Partition) -> list[FacetInequality]:
    """Irredundant facet inequalities of the full-dimensional polytope.

    Requires ``lam`` reduced by translation (last part zero) and nonzero.
    """
    m = lam.m
    if lam.parts[-1] != 0:
        raise ValidationError(f"{lam} is not reduced by translation; subtract {lam[-1]} first")
    if lam.is_trivial_orbit():
        raise ValidationError(f"{lam} has a trivial orbit; the polytope is degenerate")
    seq = sequence(h, lam)
    ones = (1,) * m
    out: list[FacetInequality] = [FacetInequality(ones, lam.size, ">=", "front")]
    if not seq.top.is_trivial_orbit():
        out.append(FacetInequality(ones, lam.size + seq.N, "<=", "back"))

    seen = {(f.coeffs, f.sense, f.bound) for f in out}
    excluded_bound = lam.size - lam[0]
    for k in range(1, m + 1):
        mu = seq.seq[seq.b[k - 1]]
        for s in perm.facet_subset_sizes(mu):
            L = perm.rado_bound(mu, s)
            for subset in combinations(range(m), s):
                cands = []
                if s <= k:
                    cands.append(FacetInequality(_indicator(subset, m), L, "<=", _tag(k, subset)))
                if s >= k:
                    comp = [i for i in range(m) if i not in subset]
                    if not (len(comp) == m - 1 and mu.size - L == excluded_bound):
                        cands.append(
                            FacetInequality(
                                _indicator(comp, m), mu.size - L, ">=", _tag(k, comp)
                            )
                        )
                for f in cands:
                    key = (f.coeffs, f.sense, f.bound)
                    if key not in seen:
                        seen.add(key)
                        out.append(f)
    return out
