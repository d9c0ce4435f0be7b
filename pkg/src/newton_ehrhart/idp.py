"""Integer decomposition property: Minkowski-sumset brute force and tableau column splitting."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import grothendieck_polytope as groth
from . import permutohedron as perm
from .errors import ConsistencyError, ValidationError
from .handles import PolytopeHandle
from .partitions import Partition, dominates, in_A
from .permutohedron import Point, check_point_budget
from .symfun import Tableau


@dataclass(frozen=True)
class IDPResult:
    holds: bool
    t_max: int
    failed_at: int | None = None
    counterexample: Point | None = None

    def __bool__(self) -> bool:
        return self.holds


def _encode(arr: np.ndarray, radix: int) -> np.ndarray:
    weights = radix ** np.arange(arr.shape[1] - 1, -1, -1, dtype=np.int64)
    return arr @ weights


def _unique_rows(arr: np.ndarray, radix: int) -> np.ndarray:
    if radix ** arr.shape[1] < 2**62:
        _, idx = np.unique(_encode(arr, radix), return_index=True)
        return arr[np.sort(idx)]
    return np.unique(arr, axis=0)


def idp_brute(handle: PolytopeHandle, t_max: int) -> IDPResult:
    """Compare lattice points of tP with the t-fold sumset of P's points, t = 2..t_max."""
    if t_max < 1:
        raise ValidationError(f"t_max must be positive, got {t_max}")
    base = np.asarray(handle.lattice_points(), dtype=np.int64)
    radix = int(base.max(initial=0)) * t_max + 1
    current = base
    for t in range(2, t_max + 1):
        check_point_budget(len(current) * len(base))
        sums = (current[:, None, :] + base[None, :, :]).reshape(-1, base.shape[1])
        current = _unique_rows(sums, radix)
        target = np.asarray(handle.dilate(t).lattice_points(), dtype=np.int64)
        have = set(_encode(current, radix).tolist())
        # every sum lies in tP, so only the reverse inclusion can fail
        if len(have) != len(target):
            for p, code in zip(target, _encode(target, radix).tolist()):
                if code not in have:
                    return IDPResult(False, t_max, t, tuple(int(x) for x in p))
            raise ConsistencyError(f"sumset at t={t} has points outside the dilate")
    return IDPResult(True, t_max)


def ssyt_with_content(shape: Partition, content: Sequence[int]) -> Tableau | None:
    """Some SSYT of the given shape and content, or None if none exists.

    Letters go in increasing order; each letter fills the topmost rows first,
    leftmost free cells first, and the search backtracks when a letter cannot
    be placed.
    """
    content = tuple(content)
    if any(c < 0 for c in content):
        raise ValidationError(f"content must be nonnegative: {content}")
    if sum(content) != shape.size:
        return None
    m_shape = shape.m
    sorted_content = sorted(content, reverse=True)
    padded = sorted_content + [0] * max(0, m_shape - len(sorted_content))
    if len(padded) > m_shape and any(padded[m_shape:]):
        return None
    if not dominates(shape, Partition(tuple(padded[:m_shape]))):
        return None

    rows: list[list[int]] = [[] for _ in range(m_shape)]

    def distributions(letter_count: int, caps: list[int], r: int):
        if letter_count == 0:
            yield [0] * (len(caps) - r)
            return
        if r == len(caps):
            return
        for take in range(min(letter_count, caps[r]), -1, -1):
            for rest in distributions(letter_count - take, caps, r + 1):
                yield [take] + rest

    def place(letter: int) -> bool:
        if letter == len(content):
            return True
        lengths = [len(row) for row in rows]
        caps = [
            min(shape[r], lengths[r - 1] if r else shape[0]) - lengths[r] for r in range(m_shape)
        ]
        for dist in distributions(content[letter], caps, 0):
            for r, k in enumerate(dist):
                rows[r].extend([letter + 1] * k)
            if place(letter + 1):
                return True
            for r, k in enumerate(dist):
                if k:
                    del rows[r][-k:]
        return False

    if not place(0):
        raise ConsistencyError(f"no SSYT of shape {shape} and content {content} found")
    return Tableau(shape, tuple(tuple(r) for r in rows))


def split_columns(tableau: Tableau, t: int) -> list[Tableau]:
    """Tableau i (1-based) takes columns j with j = i mod t."""
    out = []
    for i in range(1, t + 1):
        rows = tuple(tuple(row[j - 1] for j in range(i, len(row) + 1, t)) for row in tableau.rows)
        shape = Partition(tuple(len(r) for r in rows))
        out.append(Tableau(shape, rows))
    return out


@dataclass(frozen=True)
class Decomposition:
    point: Point
    tableau: Tableau
    pieces: tuple[Tableau, ...]

    @property
    def points(self) -> list[Point]:
        m = len(self.point)
        return [piece.content(m) for piece in self.pieces]

    def to_json(self) -> dict:
        return {
            "point": list(self.point),
            "tableau": [list(r) for r in self.tableau.rows],
            "parts": [list(p) for p in self.points],
        }


def _validate(dec: Decomposition, member) -> None:
    m = len(dec.point)
    if not dec.tableau.is_semistandard():
        raise ConsistencyError(f"built tableau {dec.tableau.rows} is not semistandard")
    total = [0] * m
    for piece in dec.pieces:
        if not piece.is_semistandard():
            raise ConsistencyError(f"column split produced a non-SSYT {piece.rows}")
        q = piece.content(m)
        if not member(q, piece.shape):
            raise ConsistencyError(f"piece {q} of shape {piece.shape} is outside the base polytope")
        total = [a + b for a, b in zip(total, q)]
    if tuple(total) != tuple(dec.point):
        raise ConsistencyError(f"pieces sum to {total}, not {dec.point}")


def schur_certificate(lam: Partition, t: int, p: Sequence[int]) -> Decomposition:
    if t < 1:
        raise ValidationError(f"t must be positive, got {t}")
    p = tuple(p)
    big = perm.dilate(lam, t)
    if not perm.contains(big, p):
        raise ValidationError(f"{p} is not a lattice point of {t} * P_{lam}")
    tableau = ssyt_with_content(big, p)
    dec = Decomposition(p, tableau, tuple(split_columns(tableau, t)))
    _validate(dec, lambda q, shape: shape == lam and perm.contains(lam, q))
    return dec


def decompose_schur(lam: Partition, t: int, p: Sequence[int]) -> list[Point]:
    return schur_certificate(lam, t, p).points


def grothendieck_certificate(h: int, lam: Partition, t: int, p: Sequence[int]) -> Decomposition:
    if t < 1:
        raise ValidationError(f"t must be positive, got {t}")
    p = tuple(p)
    big_h, big_lam = groth.dilate(h, lam, t)
    if not groth.contains(big_h, big_lam, p):
        raise ValidationError(f"{p} is not a lattice point of {t} * Newt(G_{h},{lam})")
    shape = groth.layer(big_h, big_lam, sum(p) - big_lam.size)
    tableau = ssyt_with_content(shape, p)
    dec = Decomposition(p, tableau, tuple(split_columns(tableau, t)))
    _validate(dec, lambda q, theta: in_A(h, lam, theta) and groth.contains(h, lam, q))
    return dec


def decompose_grothendieck(h: int, lam: Partition, t: int, p: Sequence[int]) -> list[Point]:
    return grothendieck_certificate(h, lam, t, p).points


def certificate(handle: PolytopeHandle, t: int, p: Sequence[int]) -> Decomposition:
    if handle.is_schur:
        return schur_certificate(handle.lam, t, p)
    return grothendieck_certificate(handle.h, handle.lam, t, p)
