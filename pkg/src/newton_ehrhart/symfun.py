"""Monomial expansions of Schur and inflated Grothendieck polynomials."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .errors import ValidationError
from .partitions import Partition, dominating_sequence, partitions_between

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class Tableau:
    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.shape.m or any(len(r) != s for r, s in zip(rows, self.shape)):
            raise ValidationError(f"rows {rows} do not match shape {self.shape}")

    def is_semistandard(self) -> bool:
        for r, row in enumerate(self.rows):
            if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                return False
            if r and any(row[j] <= self.rows[r - 1][j] for j in range(len(row))):
                return False
        return all(x >= 1 for row in self.rows for x in row)

    def content(self, m: int | None = None) -> Exponent:
        m = self.shape.m if m is None else m
        out = [0] * m
        for row in self.rows:
            for x in row:
                out[x - 1] += 1
        return tuple(out)

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def columns(self) -> list[tuple[int, ...]]:
        width = self.shape[0]
        return [tuple(row[j] for row in self.rows if len(row) > j) for j in range(width)]


class MonomialMap:
    """Sparse polynomial in m variables with integer coefficients."""

    def __init__(self, m: int, terms: Mapping[Exponent, int] | None = None):
        self.m = m
        self.terms: dict[Exponent, int] = {}
        for exp, c in (terms or {}).items():
            self.add(exp, c)

    def add(self, exp: Sequence[int], coeff: int) -> None:
        exp = tuple(exp)
        if len(exp) != self.m or any(e < 0 for e in exp):
            raise ValidationError(f"bad exponent {exp} for m={self.m}")
        c = self.terms.get(exp, 0) + coeff
        if c:
            self.terms[exp] = c
        else:
            self.terms.pop(exp, None)

    def add_scaled(self, other: "MonomialMap", scale: int) -> None:
        for exp, c in other.terms.items():
            self.add(exp, scale * c)

    def support(self) -> set[Exponent]:
        return set(self.terms)

    def __getitem__(self, exp: Sequence[int]) -> int:
        return self.terms.get(tuple(exp), 0)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialMap) and self.m == other.m and self.terms == other.terms

    def to_json(self) -> list[dict]:
        return [{"exponent": list(e), "coeff": str(c)} for e, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, m: int, records: Iterable[Mapping]) -> "MonomialMap":
        return cls(m, {tuple(r["exponent"]): int(r["coeff"]) for r in records})

    def __repr__(self) -> str:
        return f"MonomialMap(m={self.m}, terms={len(self.terms)})"


def enumerate_ssyt(shape: Partition, max_entry: int) -> list[Tableau]:
    """All SSYT of ``shape`` with entries in 1..max_entry, sorted by reading word."""
    m = shape.m
    rows: list[tuple[int, ...]] = []
    out: list[Tableau] = []

    def fill_row(r: int, j: int, acc: list[int]):
        if j == shape[r]:
            rows.append(tuple(acc))
            yield
            rows.pop()
            return
        lo = acc[-1] if acc else 1
        if r:
            lo = max(lo, rows[r - 1][j] + 1)
        for v in range(lo, max_entry + 1):
            acc.append(v)
            yield from fill_row(r, j + 1, acc)
            acc.pop()

    def rec(r: int):
        if r == m:
            out.append(Tableau(shape, tuple(rows)))
            return
        for _ in fill_row(r, 0, []):
            rec(r + 1)

    rec(0)
    out.sort(key=Tableau.reading_word)
    return out


def schur_expansion(lam: Partition, m: int | None = None) -> MonomialMap:
    """Monomial expansion of the Schur polynomial; coefficients are Kostka numbers."""
    m = lam.m if m is None else m
    if m != lam.m:
        raise ValidationError(f"partition has length {lam.m}, expected m={m}")
    counts = Counter(t.content(m) for t in enumerate_ssyt(lam, m))
    return MonomialMap(m, counts)


def skew_strict_fillings_count(h: int, lam: Partition, mu: Partition) -> int:
    """Fillings of mu/lam strictly increasing along rows and columns, row r from 1..h(r-1)."""
    if not mu.contains(lam):
        raise ValidationError(f"{lam} is not contained in {mu}")
    cells = [(r, c) for r in range(mu.m) for c in range(lam[r], mu[r])]
    if not cells:
        return 1
    filling: dict[tuple[int, int], int] = {}

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        lo = 1
        if (r, c - 1) in filling:
            lo = filling[(r, c - 1)] + 1
        if (r - 1, c) in filling:
            lo = max(lo, filling[(r - 1, c)] + 1)
        total = 0
        for v in range(lo, h * r + 1):
            filling[(r, c)] = v
            total += rec(idx + 1)
        filling.pop((r, c), None)
        return total

    return rec(0)


def grothendieck_schur_coefficients(h: int, lam: Partition) -> dict[Partition, int]:
    """Signed Schur coefficients ``(-1)^{|mu/lam|} b_{h,lam,mu}`` over ``lam ⊆ mu ⊆ lam^(N)``."""
    top = dominating_sequence(h, lam).top
    out = {}
    for mu in partitions_between(lam, top):
        b = skew_strict_fillings_count(h, lam, mu)
        if b:
            out[mu] = (-1) ** (mu.size - lam.size) * b
    return out


def grothendieck_expansion(h: int, lam: Partition, m: int | None = None) -> MonomialMap:
    m = lam.m if m is None else m
    if m != lam.m:
        raise ValidationError(f"partition has length {lam.m}, expected m={m}")
    poly = MonomialMap(m)
    for mu, coeff in grothendieck_schur_coefficients(h, lam).items():
        poly.add_scaled(schur_expansion(mu, m), coeff)
    return poly


def snp_check(
    poly: MonomialMap,
    member: Callable[[Exponent], bool] | None,
    points: Iterable[Sequence[int]],
) -> bool:
    """True iff the support of ``poly`` is exactly the given lattice-point set.

    ``member`` is optional; when given, every support point must also satisfy it.
    """
    pts = {tuple(p) for p in points}
    supp = poly.support()
    if member is not None and not all(member(e) for e in supp):
        return False
    return supp == pts
