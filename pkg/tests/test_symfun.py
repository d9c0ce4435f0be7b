import itertools
from math import comb

import pytest
from hypothesis import given

from newton_ehrhart import grothendieck_polytope as groth
from newton_ehrhart import permutohedron as perm
from newton_ehrhart.errors import ValidationError
from newton_ehrhart.partitions import Partition, dominating_sequence, partitions_between, partitions_of
from newton_ehrhart.symfun import (
    MonomialMap,
    Tableau,
    enumerate_ssyt,
    grothendieck_expansion,
    grothendieck_schur_coefficients,
    schur_expansion,
    skew_strict_fillings_count,
    snp_check,
)

from strategies import partitions


def P(*parts):
    return Partition(parts)


def test_ssyt_counts():
    assert len(enumerate_ssyt(P(3, 0, 0), 3)) == 10
    assert len(enumerate_ssyt(P(2, 1, 0), 3)) == 8
    assert enumerate_ssyt(P(1, 1), 1) == []


def test_ssyt_output_is_sorted_and_valid():
    tabs = enumerate_ssyt(P(2, 2, 1), 4)
    words = [t.reading_word() for t in tabs]
    assert words == sorted(words)
    assert len(set(words)) == len(words)
    assert all(t.is_semistandard() for t in tabs)


def _ssyt_brute(shape, max_entry):
    cells = [(r, c) for r in range(shape.m) for c in range(shape[r])]
    count = 0
    for vals in itertools.product(range(1, max_entry + 1), repeat=len(cells)):
        rows = [[] for _ in range(shape.m)]
        for (r, _), v in zip(cells, vals):
            rows[r].append(v)
        if Tableau(shape, tuple(map(tuple, rows))).is_semistandard():
            count += 1
    return count


@pytest.mark.parametrize("parts", [(2, 1, 0), (2, 2, 0), (3, 1, 0), (1, 1, 1), (2, 1, 1)])
def test_ssyt_count_against_product_scan(parts):
    shape = P(*parts)
    assert len(enumerate_ssyt(shape, 3)) == _ssyt_brute(shape, 3)


def test_schur_expansion_examples():
    s21 = schur_expansion(P(2, 1, 0), 3)
    assert s21[(1, 1, 1)] == 2
    assert len(s21.support()) == 7
    assert schur_expansion(P(3, 0, 0), 3)[(3, 0, 0)] == 1


@pytest.mark.parametrize("k", range(0, 6))
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_single_row_ssyt_total(k, m):
    s = schur_expansion(Partition((k,) + (0,) * (m - 1)))
    assert sum(s.terms.values()) == comb(k + m - 1, m - 1)


@given(partitions(max_m=4, max_part=3))
def test_schur_expansion_symmetric(lam):
    s = schur_expansion(lam)
    for sigma in itertools.permutations(range(lam.m)):
        for exp, c in s.terms.items():
            assert s[tuple(exp[i] for i in sigma)] == c


def test_skew_fillings_examples():
    assert skew_strict_fillings_count(1, P(2, 1, 0), P(2, 1, 1)) == 2
    assert skew_strict_fillings_count(2, P(2, 1, 0), P(2, 2, 2)) == 11
    assert skew_strict_fillings_count(3, P(2, 1, 0), P(2, 1, 0)) == 1
    with pytest.raises(ValidationError):
        skew_strict_fillings_count(1, P(2, 1, 0), P(1, 1, 1))


def test_grothendieck_coefficients_21():
    order = [P(2, 1, 0), P(2, 2, 0), P(2, 1, 1), P(2, 2, 1), P(2, 2, 2)]
    h1 = grothendieck_schur_coefficients(1, P(2, 1, 0))
    assert [h1[mu] for mu in order] == [1, -1, -2, 2, -1]
    h2 = grothendieck_schur_coefficients(2, P(2, 1, 0))
    assert [h2.get(mu, 0) for mu in order] == [1, -2, -4, 8, -11]


def test_grothendieck_of_empty_is_one():
    for h in (1, 2):
        g = grothendieck_expansion(h, P(0, 0, 0))
        assert g.terms == {(0, 0, 0): 1}


@pytest.mark.parametrize("h", [1, 2, 3])
def test_every_interval_member_has_fillings(h):
    for m in range(1, 5):
        for n in range(0, 6):
            for lam in partitions_of(n, m):
                top = dominating_sequence(h, lam).top
                for mu in partitions_between(lam, top):
                    assert skew_strict_fillings_count(h, lam, mu) > 0


def test_snp_small_examples():
    lam = P(2, 1, 0)
    s = schur_expansion(lam)
    assert snp_check(s, lambda p: perm.contains(lam, p), perm.lattice_points(lam))
    g = grothendieck_expansion(1, lam)
    assert snp_check(g, lambda p: groth.contains(1, lam, p), groth.lattice_points(1, lam))
    clipped = MonomialMap(3, s.terms)
    clipped.add((1, 1, 1), -2)
    assert not snp_check(clipped, None, perm.lattice_points(lam))


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_snp_schur_exhaustive(m):
    for n in range(7):
        for lam in partitions_of(n, m):
            assert snp_check(schur_expansion(lam), None, perm.lattice_points(lam)), lam


@pytest.mark.parametrize("h", [1, 2])
def test_snp_grothendieck_exhaustive(h):
    for m in range(1, 4):
        for n in range(5):
            for lam in partitions_of(n, m):
                poly = grothendieck_expansion(h, lam)
                assert snp_check(poly, None, groth.lattice_points(h, lam)), (h, lam)


def test_monomial_map_json_round_trip():
    g = grothendieck_expansion(2, P(2, 1, 0))
    data = g.to_json()
    assert all(isinstance(r["coeff"], str) for r in data)
    assert MonomialMap.from_json(3, data) == g
    assert all(c != 0 for c in g.terms.values())
