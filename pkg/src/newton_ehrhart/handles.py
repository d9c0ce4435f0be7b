"""Tagged polytope descriptors dispatching to the two polytope families."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from . import grothendieck_polytope as groth
from . import permutohedron as perm
from .errors import ValidationError
from .partitions import Partition, make_partition
from .permutohedron import FacetInequality, Point

SCHUR = "schur"
GROTHENDIECK = "grothendieck"


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    """Dimension of the affine hull of a finite point set."""
    if len(points) <= 1:
        return 0
    arr = np.asarray(points, dtype=np.int64)
    return int(np.linalg.matrix_rank((arr[1:] - arr[0]).astype(float)))


@dataclass(frozen=True)
class PolytopeHandle:
    kind: str
    lam: Partition
    h: int | None = None

    def __post_init__(self) -> None:
        if self.kind == SCHUR:
            if self.h is not None:
                raise ValidationError("Schur handles take no h")
        elif self.kind == GROTHENDIECK:
            if self.h is None or self.h < 1:
                raise ValidationError(f"Grothendieck handles need h >= 1, got {self.h}")
        else:
            raise ValidationError(f"unknown polytope kind {self.kind!r}")

    @classmethod
    def schur(cls, lam: Sequence[int] | Partition, m: int | None = None) -> "PolytopeHandle":
        return cls(SCHUR, _as_partition(lam, m))

    @classmethod
    def grothendieck(
        cls, h: int, lam: Sequence[int] | Partition, m: int | None = None
    ) -> "PolytopeHandle":
        return cls(GROTHENDIECK, _as_partition(lam, m), h)

    @property
    def m(self) -> int:
        return self.lam.m

    @property
    def is_schur(self) -> bool:
        return self.kind == SCHUR

    def dilate(self, t: int) -> "PolytopeHandle":
        if self.is_schur:
            return PolytopeHandle(SCHUR, perm.dilate(self.lam, t))
        h, lam = groth.dilate(self.h, self.lam, t)
        return PolytopeHandle(GROTHENDIECK, lam, h)

    def count_lattice_points(self) -> int:
        if self.is_schur:
            return perm.count_lattice_points(self.lam)
        return groth.count_lattice_points(self.h, self.lam)

    def lattice_points(self) -> list[Point]:
        if self.is_schur:
            return perm.lattice_points(self.lam)
        return groth.lattice_points(self.h, self.lam)

    def vertices(self) -> list[Point]:
        if self.is_schur:
            return perm.vertices(self.lam)
        return groth.vertices(self.h, self.lam)

    def contains(self, p: Sequence[int]) -> bool:
        if self.is_schur:
            return perm.contains(self.lam, p)
        return groth.contains(self.h, self.lam, p)

    def facets(self) -> list[FacetInequality]:
        if self.is_schur:
            return perm.facets(self.lam)
        return groth.facets(self.h, self.lam)

    def equations(self) -> list[FacetInequality]:
        """Equalities cutting out the affine span (empty when full-dimensional)."""
        return [perm.span_equation(self.lam)] if self.is_schur else []

    @cached_property
    def dim(self) -> int:
        return affine_rank(self.vertices())

    def is_degenerate(self) -> bool:
        return self.dim == 0

    def describe(self) -> str:
        if self.is_schur:
            return f"Newt(s_{self.lam.parts}) in R^{self.m}"
        return f"Newt(G_{{h={self.h}}},{self.lam.parts}) in R^{self.m}"

    def to_json(self) -> dict:
        out = {"kind": self.kind, "lambda": self.lam.to_json(), "m": self.m}
        if self.h is not None:
            out["h"] = self.h
        return out

    @classmethod
    def from_json(cls, data: dict) -> "PolytopeHandle":
        lam = make_partition(data["lambda"], data.get("m", len(data["lambda"])))
        return cls(data["kind"], lam, data.get("h"))


def _as_partition(lam, m):
    if isinstance(lam, Partition):
        if m is not None and m != lam.m:
            raise ValidationError(f"partition has length {lam.m}, expected m={m}")
        return lam
    lam = list(lam)
    return make_partition(lam, len(lam) if m is None else m)
