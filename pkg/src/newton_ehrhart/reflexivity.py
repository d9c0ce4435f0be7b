"""Reflexivity and Gorenstein checks: lattice-distance geometry and closed-form classifiers."""
from __future__ import annotations

from dataclasses import dataclass, field

from .ehrhart import gorenstein_index, hstar
from .errors import ConsistencyError, DegeneratePolytopeError, ValidationError
from .handles import GROTHENDIECK, PolytopeHandle
from .partitions import Partition, reduce_by_translation
from .permutohedron import FacetInequality, Point


@dataclass
class ReflexivityReport:
    reflexive: bool
    degenerate: bool = False
    interior_count: int = 0
    interior_point: Point | None = None
    distances: list[tuple[str, int]] = field(default_factory=list)
    form: str | None = None

    def __bool__(self) -> bool:
        return self.reflexive

    @property
    def verdict(self) -> str:
        if self.degenerate:
            return "degenerate"
        return "reflexive" if self.reflexive else "not reflexive"

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "reflexive": None if self.degenerate else self.reflexive,
            "interior_count": self.interior_count,
            "interior_point": list(self.interior_point) if self.interior_point else None,
            "facet_distances": [{"facet": tag, "distance": d} for tag, d in self.distances],
            "form": self.form,
        }


def _reduced_handle(handle: PolytopeHandle) -> PolytopeHandle:
    # Newt(G_{h, lam + c}) is Newt(G_{h, lam}) shifted by (c, ..., c)
    if handle.kind == GROTHENDIECK and handle.lam[-1]:
        lam, _ = reduce_by_translation(handle.lam)
        return PolytopeHandle(GROTHENDIECK, lam, handle.h)
    return handle


def _is_degenerate(handle: PolytopeHandle) -> bool:
    return handle.lam.is_trivial_orbit()


def interior_lattice_points(handle: PolytopeHandle) -> list[Point]:
    """Lattice points strictly inside every facet (relative interior)."""
    handle = _reduced_handle(handle) if not handle.is_schur else handle
    if _is_degenerate(handle):
        return []
    facets = [f.normalized() for f in handle.facets()]
    out = []
    for p in handle.lattice_points():
        if all(f.bound - f.value(p) > 0 for f in facets):
            out.append(p)
    return out


def _check_primitive(f: FacetInequality, u: Point, full_dim: bool) -> None:
    """Exhibit two lattice points of the affine lattice whose functional values differ by 1."""
    a = f.coeffs
    m = len(a)
    if full_dim:
        for i in range(m):
            if abs(a[i]) == 1:
                v = list(u)
                v[i] += 1
                if abs(f.value(v) - f.value(u)) == 1:
                    return
    else:
        for i in range(m):
            for j in range(m):
                if abs(a[i] - a[j]) == 1:
                    v = list(u)
                    v[i] += 1
                    v[j] -= 1
                    if abs(f.value(v) - f.value(u)) == 1:
                        return
    raise ConsistencyError(f"functional {a} is not primitive on the affine lattice")


def is_reflexive_geometric(handle: PolytopeHandle) -> ReflexivityReport:
    work = _reduced_handle(handle)
    if _is_degenerate(work):
        return ReflexivityReport(reflexive=False, degenerate=True)
    interior = interior_lattice_points(work)
    report = ReflexivityReport(reflexive=False, interior_count=len(interior))
    if len(interior) != 1:
        return report
    u = interior[0]
    shift = handle.lam[-1] if not handle.is_schur else 0
    report.interior_point = tuple(x + shift for x in u)
    ok = True
    for f in work.facets():
        n = f.normalized()
        _check_primitive(n, u, full_dim=not work.is_schur)
        d = n.bound - n.value(u)
        report.distances.append((f.tag or str(f.to_json()), d))
        ok = ok and d == 1
    report.reflexive = ok
    if ok and handle.is_schur and handle.lam.size % handle.m:
        raise ConsistencyError(
            f"{handle.describe()} passed the distance test but m does not divide |lambda|"
        )
    return report


def _schur_forms(m: int) -> dict[str, tuple[int, ...]]:
    forms = {
        "(m,0,...,0)": (m,) + (0,) * (m - 1),
        "(2,1,...,1,0)": (2,) + (1,) * (m - 2) + (0,),
    }
    if m % 2 == 0:
        forms["(2,...,2,0,...,0)"] = (2,) * (m // 2) + (0,) * (m // 2)
    else:
        forms["(2,...,2,1,0,...,0)"] = (2,) * (m // 2) + (1,) + (0,) * (m // 2)
    forms["(m,...,m,0)"] = (m,) * (m - 1) + (0,)
    return forms


def _reduce_nontrivial(lam: Partition) -> Partition:
    if lam.m < 2:
        raise ValidationError("classification needs m >= 2")
    reduced, _ = reduce_by_translation(lam)
    if reduced.is_trivial_orbit():
        raise DegeneratePolytopeError(f"{lam} reduces to the zero partition")
    return reduced


def schur_reflexive_form(lam: Partition) -> str | None:
    reduced = _reduce_nontrivial(lam)
    for tag, form in _schur_forms(lam.m).items():
        if reduced.parts == form:
            return tag
    return None


def schur_reflexive_classifier(lam: Partition) -> bool:
    return schur_reflexive_form(lam) is not None


def schur_gorenstein_form(lam: Partition) -> str | None:
    tag = schur_reflexive_form(lam)
    if tag is not None:
        return "reflexive " + tag
    reduced = _reduce_nontrivial(lam).parts
    m = lam.m
    k = reduced[0]
    if reduced == (k,) + (0,) * (m - 1) and m % k == 0:
        return "(k,0,...,0), k|m"
    if m % 2 == 0 and reduced == (1,) * (m // 2) + (0,) * (m // 2):
        return "(1^(m/2),0^(m/2))"
    if reduced == (k,) * (m - 1) + (0,) and m % k == 0:
        return "(k,...,k,0), k|m"
    return None


def schur_gorenstein_classifier(lam: Partition) -> bool:
    return schur_gorenstein_form(lam) is not None


def grothendieck_reflexive_form(h: int, lam: Partition) -> str | None:
    if h < 1:
        raise ValidationError(f"h must be positive, got {h}")
    if lam[-1] != 0:
        raise ValidationError(f"{lam} is not reduced by translation")
    if lam.is_trivial_orbit():
        raise DegeneratePolytopeError("the zero partition gives a point polytope")
    m = lam.m
    p = lam.parts
    if m >= 3 and m % 2 == 1 and p == (2,) * (m // 2) + (0,) * (m // 2 + 1):
        return "h>=1, (2,...,2,0,...,0), m odd"
    if m >= 4 and m % 2 == 0 and p == (2,) * (m // 2 - 1) + (1,) + (0,) * (m // 2):
        return "h>=1, (2,...,2,1,0,...,0), m even"
    if h >= 2 and m >= 2 and p == (m + 1,) * (m - 1) + (0,):
        return "h>=2, ((m+1)^(m-1),0)"
    if h == 1 and p == (4, 4, 0):
        return "h=1, (4,4,0)"
    return None


def grothendieck_reflexive_classifier(h: int, lam: Partition) -> bool:
    return grothendieck_reflexive_form(h, lam) is not None


def classifier_form(handle: PolytopeHandle) -> str | None:
    if handle.is_schur:
        return schur_reflexive_form(handle.lam)
    return grothendieck_reflexive_form(handle.h, _reduced_handle(handle).lam)


def gorenstein_via_hstar(handle: PolytopeHandle) -> int | None:
    """Gorenstein index read off the h*-vector, or None."""
    return gorenstein_index(hstar(handle))
