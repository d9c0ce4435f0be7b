"""Partitions of fixed length m, dominance, and dominating-partition sequences.

A partition here always carries its ambient variable count ``m``: ``(2, 1, 0)``
and ``(2, 1)`` are different objects.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ValidationError


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing nonnegative integer vector of length m."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValidationError("a partition needs m >= 1 entries")
        for i, p in enumerate(parts):
            if p < 0:
                raise ValidationError(f"negative part {p} at index {i}")
            if i and p > parts[i - 1]:
                raise ValidationError(
                    f"parts not weakly decreasing at index {i}: {parts[i - 1]} < {p}"
                )

    @property
    def m(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of positive parts."""
        return sum(1 for p in self.parts if p)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def is_trivial_orbit(self) -> bool:
        return self.parts[0] == self.parts[-1]

    def scaled(self, t: int) -> "Partition":
        return Partition(tuple(t * p for p in self.parts))

    def contains(self, other: "Partition") -> bool:
        """Young-diagram containment ``other ⊆ self``."""
        _check_same_m(self, other)
        return all(a >= b for a, b in zip(self.parts, other.parts))

    def prefix_sums(self) -> tuple[int, ...]:
        out, s = [], 0
        for p in self.parts:
            s += p
            out.append(s)
        return tuple(out)

    def to_json(self) -> list[int]:
        return list(self.parts)


def make_partition(values: Iterable[int], m: int) -> Partition:
    """Zero-pad ``values`` to a length-``m`` partition.

    >>> make_partition([2, 1], 3)
    Partition(parts=(2, 1, 0))
    """
    vals = [int(v) for v in values]
    if m < 1:
        raise ValidationError(f"m must be positive, got {m}")
    if len(vals) > m:
        # trailing zeros beyond m are harmless
        if any(vals[m:]):
            raise ValidationError(f"{len(vals)} nonzero parts do not fit in m={m}")
        vals = vals[:m]
    return Partition(tuple(vals) + (0,) * (m - len(vals)))


def parse_partition(text: str, m: int | None = None) -> Partition:
    """Parse the comma-separated wire form, e.g. ``"2,1,0"``."""
    text = text.strip()
    try:
        vals = [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise ValidationError(f"cannot parse partition {text!r}") from exc
    return make_partition(vals, len(vals) if m is None else m)


def _check_same_m(a: Partition, b: Partition) -> None:
    if a.m != b.m:
        raise ValidationError(f"partitions have different lengths: m={a.m} vs m={b.m}")


def dominates(mu: Partition, lam: Partition) -> bool:
    """Prefix-sum test ``mu ⊵ lam``; equal weight is not required."""
    _check_same_m(mu, lam)
    s_mu = s_lam = 0
    for a, b in zip(mu.parts, lam.parts):
        s_mu += a
        s_lam += b
        if s_mu < s_lam:
            return False
    return True


def reduce_by_translation(lam: Partition) -> tuple[Partition, int]:
    shift = lam.parts[-1]
    return Partition(tuple(p - shift for p in lam.parts)), shift


@dataclass(frozen=True)
class DominatingSequence:
    """Greedy one-box growth of a partition under the inflation parameter h.

    ``a[r]`` is the number of boxes row r (0-based) receives overall and
    ``b[k] = a[0] + ... + a[k]``; the layer ``seq[b[k]]`` has rows 0..k at
    their maxima and the remaining rows untouched.
    """

    h: int
    base: Partition
    seq: tuple[Partition, ...]
    a: tuple[int, ...]
    b: tuple[int, ...]

    @property
    def N(self) -> int:
        return len(self.seq) - 1

    @property
    def top(self) -> Partition:
        return self.seq[-1]

    def vertex_layers(self) -> tuple[int, ...]:
        """Distinct layer indices ``b_1, ..., b_m`` in increasing order."""
        return tuple(sorted(set(self.b)))


def _next_row(cur: Sequence[int], base: Sequence[int], h: int) -> int | None:
    for r in range(len(cur)):
        if cur[r] - base[r] >= h * r:  # row r (0-based) holds at most h*r extra boxes
            continue
        if r and cur[r - 1] <= cur[r]:
            continue
        return r
    return None


def dominating_sequence(h: int, lam: Partition) -> DominatingSequence:
    if h < 1:
        raise ValidationError(f"h must be a positive integer, got {h}")
    cur = list(lam.parts)
    seq = [lam]
    while (r := _next_row(cur, lam.parts, h)) is not None:
        cur[r] += 1
        seq.append(Partition(tuple(cur)))
    a = tuple(x - y for x, y in zip(cur, lam.parts))
    b, s = [], 0
    for x in a:
        s += x
        b.append(s)
    return DominatingSequence(h=h, base=lam, seq=tuple(seq), a=a, b=tuple(b))


def top_partition(h: int, lam: Partition) -> Partition:
    """``lam^(N)`` computed row by row without materializing the sequence."""
    if h < 1:
        raise ValidationError(f"h must be a positive integer, got {h}")
    out = [lam.parts[0]]
    for r in range(1, lam.m):
        out.append(min(lam.parts[r] + h * r, max(out[r - 1], lam.parts[r])))
    return Partition(tuple(out))


def in_A(h: int, lam: Partition, mu: Partition) -> bool:
    """Membership of ``mu`` in the index set of the inflated Grothendieck expansion."""
    _check_same_m(lam, mu)
    top = top_partition(h, lam)
    return all(l <= x <= t for l, x, t in zip(lam.parts, mu.parts, top.parts))


def partitions_between(lower: Partition, upper: Partition) -> Iterator[Partition]:
    """All partitions mu with ``lower ⊆ mu ⊆ upper``, in lexicographic order."""
    _check_same_m(lower, upper)
    m = lower.m
    cur = [0] * m

    def rec(i: int) -> Iterator[Partition]:
        if i == m:
            yield Partition(tuple(cur))
            return
        hi = upper.parts[i] if i == 0 else min(upper.parts[i], cur[i - 1])
        for v in range(lower.parts[i], hi + 1):
            cur[i] = v
            yield from rec(i + 1)

    yield from rec(0)


def partitions_of(n: int, m: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n with at most m parts (zero-padded to m), reverse-lex order."""
    cap = n if max_part is None else max_part
    cur: list[int] = []

    def rec(rem: int, parts_left: int, mx: int) -> Iterator[Partition]:
        if parts_left == 0:
            if rem == 0:
                yield Partition(tuple(cur))
            return
        for v in range(min(rem, mx), -1, -1):
            if v * parts_left < rem:
                break
            cur.append(v)
            yield from rec(rem - v, parts_left - 1, v)
            cur.pop()

    yield from rec(n, m, cap)
