from fractions import Fraction
from math import comb

import pytest

from newton_ehrhart.ehrhart import (
    HStarVector,
    count_dilate,
    ehrhart_polynomial,
    gorenstein_index,
    hstar,
    hstar_from_counts,
    interpolate_counts,
    is_palindromic,
    is_unimodal,
)
from newton_ehrhart.errors import ConsistencyError, ValidationError
from newton_ehrhart.handles import PolytopeHandle
from newton_ehrhart.partitions import partitions_of

from oracles import sumset


def S(*parts):
    return PolytopeHandle.schur(parts)


def G(h, *parts):
    return PolytopeHandle.grothendieck(h, parts)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_single_row_dilates(n):
    handle = S(n, *([0] * (n - 1)))
    for k in range(5):
        assert count_dilate(handle, k) == comb(k * n + n - 1, n - 1)


def test_count_examples():
    assert count_dilate(S(2, 1, 0), 1) == 7
    assert count_dilate(G(3, 2, 1, 0), 0) == 1
    with pytest.raises(ValidationError):
        count_dilate(S(2, 1, 0), -1)


@pytest.mark.parametrize(
    "handle, expected",
    [
        (S(2, 1, 0), (1, 4, 1)),
        (S(2, 2, 0, 0), (1, 15, 15, 1)),
        (S(3, 1, 0, 0), (1, 27, 31, 1)),
        (G(1, 2, 0, 0), (1, 12, 12, 1)),
        (G(2, 2, 0, 0), (1, 19, 19, 1)),
        (G(2, 4, 4, 0), (1, 31, 31, 1)),
        (G(1, 4, 4, 0), (1, 27, 27, 1)),
    ],
)
def test_hstar_examples(handle, expected):
    assert tuple(hstar(handle)) == expected


def test_ehrhart_polynomial_examples():
    assert ehrhart_polynomial(S(3, 0, 0)).coeffs == (Fraction(1), Fraction(9, 2), Fraction(9, 2))
    assert ehrhart_polynomial(S(1, 0)).coeffs == (1, 1)
    assert ehrhart_polynomial(G(1, 2, 1, 0))(1) == 17


@pytest.mark.parametrize(
    "handle", [S(2, 1, 0), S(3, 1, 0, 0), S(2, 2, 1, 0, 0), G(1, 2, 1, 0), G(2, 3, 1, 0, 0)]
)
def test_interpolation_out_of_sample(handle):
    poly = ehrhart_polynomial(handle)
    assert poly.degree == handle.dim
    assert poly.coeffs[-1] > 0
    for t in range(handle.dim + 1, handle.dim + 3):
        assert poly(t) == count_dilate(handle, t)


def test_dimension_is_asserted():
    assert S(2, 1, 0).dim == 2
    assert G(1, 2, 1, 0).dim == 3
    assert S(1, 1, 1).dim == 0


def test_hstar_nonnegative_on_sweep():
    for m in range(2, 5):
        for n in range(1, 7):
            for lam in partitions_of(n, m):
                if lam.is_trivial_orbit():
                    continue
                handles = [PolytopeHandle.schur(lam)]
                handles += [PolytopeHandle.grothendieck(h, lam) for h in (1, 2)]
                for handle in handles:
                    v = hstar(handle)
                    assert all(c >= 0 for c in v)
                    assert v.normalized_volume() >= 1


@pytest.mark.parametrize("t", [2, 3])
def test_grothendieck_dilates_match_sumsets(t):
    for n in range(0, 5):
        for lam in partitions_of(n, 3):
            handle = PolytopeHandle.grothendieck(1, lam)
            base = handle.lattice_points()
            acc = set(base)
            for _ in range(t - 1):
                acc = sumset(acc, base)
            assert count_dilate(handle, t) == len(acc)


def test_hstar_transform_rejects_bad_counts():
    with pytest.raises(ConsistencyError):
        hstar_from_counts([1, 2, 10], 2)
    with pytest.raises(ValidationError):
        hstar_from_counts([1, 3], 2)


def test_hstar_vector_validation():
    with pytest.raises(ValidationError):
        HStarVector((1, 2), 2)
    with pytest.raises(ValidationError):
        HStarVector((2, 1), 1)
    with pytest.raises(ValidationError):
        HStarVector((1, -1), 1)
    assert HStarVector.of([1, 4, 1]).dim == 2


def test_palindromic_and_gorenstein():
    v = HStarVector.of([1, 4, 1])
    assert is_palindromic(v) and gorenstein_index(v) == 1
    w = HStarVector.of([1, 27, 31, 1])
    assert not is_palindromic(w) and gorenstein_index(w) is None
    u = HStarVector.of([1, 1, 0])
    assert not is_palindromic(u)
    assert gorenstein_index(u) == 2


def test_unimodal():
    assert is_unimodal([1, 46, 136, 46, 1])
    assert not is_unimodal([1, 2, 1, 2, 1])
    assert is_unimodal([1])
    assert is_unimodal(HStarVector.of([1, 13, 10, 0]))


def test_interpolate_constant():
    assert interpolate_counts([1]).coeffs == (1,)
