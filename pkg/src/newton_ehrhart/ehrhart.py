"""Ehrhart polynomials and h*-vectors from exact dilate counts."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

import sympy

from .errors import ConsistencyError, ValidationError
from .grothendieck_polytope import sequence
from .handles import PolytopeHandle


@dataclass(frozen=True)
class HStarVector:
    coeffs: tuple[int, ...]
    dim: int

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) != self.dim + 1:
            raise ValidationError(f"h*-vector of a {self.dim}-polytope needs {self.dim + 1} entries")
        if coeffs[0] != 1:
            raise ValidationError(f"h*_0 must be 1, got {coeffs[0]}")
        if any(c < 0 for c in coeffs):
            raise ValidationError(f"h*-vector has a negative entry: {coeffs}")

    @classmethod
    def of(cls, coeffs: Sequence[int], dim: int | None = None) -> "HStarVector":
        coeffs = tuple(coeffs)
        return cls(coeffs, len(coeffs) - 1 if dim is None else dim)

    @property
    def degree(self) -> int:
        return max(i for i, c in enumerate(self.coeffs) if c)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.coeffs))

    def normalized_volume(self) -> int:
        return sum(self.coeffs)


@dataclass(frozen=True)
class EhrhartPolynomial:
    """Coefficients in increasing degree."""

    coeffs: tuple[Fraction, ...]

    def __call__(self, t: int) -> Fraction:
        return sum((c * t**i for i, c in enumerate(self.coeffs)), Fraction(0))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        terms = []
        for i, c in reversed(list(enumerate(self.coeffs))):
            if c:
                terms.append(f"({c})*t^{i}" if i else f"({c})")
        return " + ".join(terms) or "0"


def count_dilate(handle: PolytopeHandle, t: int) -> int:
    if t < 0:
        raise ValidationError(f"dilation factor must be nonnegative, got {t}")
    if t == 0:
        return 1
    return handle.dilate(t).count_lattice_points()


def ehrhart_counts(handle: PolytopeHandle, upto: int) -> list[int]:
    return [count_dilate(handle, t) for t in range(upto + 1)]


def _check_dimension(handle: PolytopeHandle, d: int) -> None:
    expected = 0 if handle.lam.is_trivial_orbit() else handle.m - 1
    if not handle.is_schur and sequence(handle.h, handle.lam).N >= 1:
        expected = handle.m
    if d != expected:
        raise ConsistencyError(f"{handle.describe()}: vertex rank {d}, expected {expected}")


def hstar_from_counts(counts: Sequence[int], d: int) -> HStarVector:
    if len(counts) < d + 1:
        raise ValidationError(f"need {d + 1} counts, got {len(counts)}")
    coeffs = []
    for j in range(d + 1):
        coeffs.append(sum((-1) ** i * comb(d + 1, i) * counts[j - i] for i in range(j + 1)))
    if coeffs[0] != 1 or any(c < 0 for c in coeffs):
        raise ConsistencyError(f"h*-transform produced {coeffs}; dilate counts are inconsistent")
    return HStarVector(tuple(coeffs), d)


def hstar(handle: PolytopeHandle) -> HStarVector:
    d = handle.dim
    _check_dimension(handle, d)
    return hstar_from_counts(ehrhart_counts(handle, d), d)


def ehrhart_polynomial(handle: PolytopeHandle) -> EhrhartPolynomial:
    d = handle.dim
    counts = ehrhart_counts(handle, d)
    return interpolate_counts(counts)


def interpolate_counts(counts: Sequence[int]) -> EhrhartPolynomial:
    t = sympy.Symbol("t")
    if len(counts) == 1:
        return EhrhartPolynomial((Fraction(counts[0]),))
    expr = sympy.interpolate(list(enumerate(counts)), t)
    poly = sympy.Poly(expr, t)
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
    coeffs += [Fraction(0)] * (len(counts) - len(coeffs))
    return EhrhartPolynomial(tuple(coeffs))


def is_palindromic(v: HStarVector) -> bool:
    c = v.coeffs
    return all(c[i] == c[v.dim - i] for i in range(v.dim + 1))


def gorenstein_index(v: HStarVector) -> int | None:
    s = v.degree
    c = v.coeffs
    if all(c[i] == c[s - i] for i in range(s + 1)):
        return v.dim - s + 1
    return None


def is_unimodal(v: Sequence[int] | HStarVector) -> bool:
    c = list(v)
    i = 0
    while i + 1 < len(c) and c[i] <= c[i + 1]:
        i += 1
    while i + 1 < len(c) and c[i] >= c[i + 1]:
        i += 1
    return i == len(c) - 1
