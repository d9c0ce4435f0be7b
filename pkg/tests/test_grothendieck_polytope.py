import itertools

import pytest

from newton_ehrhart import grothendieck_polytope as groth
from newton_ehrhart import permutohedron as perm
from newton_ehrhart.errors import ValidationError
from newton_ehrhart.partitions import Partition, partitions_of

from oracles import affine_rank, hull_facets, in_hull, lp_is_extreme, sumset


def P(*parts):
    return Partition(parts)


def all_partitions(max_n, max_m, min_m=1):
    for m in range(min_m, max_m + 1):
        for n in range(max_n + 1):
            yield from partitions_of(n, m)


def test_layers():
    assert groth.layer(1, P(2, 1, 0), 0) == P(2, 1, 0)
    assert groth.layer(1, P(2, 1, 0), 1) == P(2, 2, 0)
    assert groth.layer(1, P(2, 1, 0), 3) == P(2, 2, 2)
    with pytest.raises(ValidationError):
        groth.layer(1, P(2, 1, 0), 4)


def test_contains_examples():
    lam = P(2, 1, 0)
    assert groth.contains(1, lam, (2, 2, 0))
    assert groth.contains(1, lam, (1, 1, 1))
    assert not groth.contains(1, lam, (3, 3, 3))


def test_vertex_examples():
    verts = set(groth.vertices(1, P(2, 1, 0)))
    expected = set()
    for mu in [(2, 1, 0), (2, 2, 0), (2, 2, 2)]:
        expected |= set(itertools.permutations(mu))
    assert verts == expected
    assert (2, 2, 1) not in verts
    assert set(groth.vertices(2, P(3, 0))) == {(3, 0), (3, 2), (2, 3), (0, 3)}
    assert groth.vertices(2, P(0, 0, 0)) == [(0, 0, 0)]


def test_lattice_point_examples():
    lam = P(2, 1, 0)
    seq = groth.sequence(1, lam)
    assert [perm.count_lattice_points(mu) for mu in seq.seq] == [7, 6, 3, 1]
    assert groth.count_lattice_points(1, lam) == 17
    pts = groth.lattice_points(1, P(1, 0))
    assert sorted(pts) == [(0, 1), (1, 0), (1, 1)]
    assert groth.lattice_points(3, P(0, 0)) == [(0, 0)]


@pytest.mark.parametrize("h", [1, 2])
def test_layer_consistency(h):
    for lam in all_partitions(5, 4):
        pts = groth.lattice_points(h, lam)
        assert len(pts) == len(set(pts)) == groth.count_lattice_points(h, lam)
        seq = groth.sequence(h, lam)
        for k, mu in enumerate(seq.seq):
            layer = {p for p in pts if sum(p) == lam.size + k}
            assert layer == set(perm.lattice_points(mu))


@pytest.mark.parametrize("h", [1, 2])
def test_points_match_hull_oracle(h):
    for lam in all_partitions(5, 3, min_m=2):
        verts = groth.vertices(h, lam)
        if affine_rank(verts) < lam.m:
            continue
        hi = max(max(v) for v in verts)
        box = list(itertools.product(range(hi + 1), repeat=lam.m))
        inside = {p for p, ok in zip(box, in_hull(verts, box)) if ok}
        assert inside == set(groth.lattice_points(h, lam)), (h, lam)


@pytest.mark.parametrize("h", [1, 2])
def test_vertices_are_exactly_the_extreme_points(h):
    for lam in all_partitions(4, 3, min_m=2):
        pts = groth.lattice_points(h, lam)
        verts = set(groth.vertices(h, lam))
        for p in pts:
            assert lp_is_extreme(p, pts) == (p in verts), (h, lam, p)


def test_dilate():
    assert groth.dilate(1, P(2, 1, 0), 2) == (2, P(4, 2, 0))
    assert groth.dilate(3, P(2, 1, 0), 1) == (3, P(2, 1, 0))


def test_dilate_count_matches_sumset():
    base = groth.lattice_points(1, P(2, 1, 0))
    doubled = sumset(base, base)
    assert len(doubled) == groth.count_lattice_points(2, P(4, 2, 0))


@pytest.mark.parametrize("t", [2, 3])
def test_dilate_matches_minkowski_sums(t):
    for h in (1, 2):
        for lam in all_partitions(4, 3):
            base = groth.lattice_points(h, lam)
            acc = set(base)
            for _ in range(t - 1):
                acc = sumset(acc, base)
            big_h, big_lam = groth.dilate(h, lam, t)
            assert acc == set(groth.lattice_points(big_h, big_lam)), (h, lam, t)


def _as_le(f):
    n = f.normalized()
    return n.coeffs, n.bound


def test_facets_of_200():
    got = {_as_le(f) for f in groth.facets(1, P(2, 0, 0))}
    expected = set()
    for i in range(3):
        e = tuple(int(j == i) for j in range(3))
        expected.add((tuple(-x for x in e), 0))
        expected.add((e, 2))
    for i, j in itertools.combinations(range(3), 2):
        expected.add((tuple(int(k in (i, j)) for k in range(3)), 3))
    expected.add(((-1, -1, -1), -2))
    expected.add(((1, 1, 1), 4))
    assert got == expected


def test_facets_of_210_skip_isolating_planes():
    got = {_as_le(f) for f in groth.facets(1, P(2, 1, 0))}
    # front face plus the coordinate bounds 0 <= x_i <= 2; no x_i + x_j planes
    assert ((-1, -1, -1), -3) in got
    rest = got - {((-1, -1, -1), -3)}
    assert all(sum(abs(c) for c in coeffs) == 1 for coeffs, _ in rest)
    assert len(rest) == 6


def test_facets_of_simplex_family():
    # at m = 2 the polytope is a quadrilateral, not a simplex
    for m in range(3, 6):
        lam = Partition((m + 1,) * (m - 1) + (0,))
        facets = groth.facets(2, lam)
        assert len(facets) == m + 1
        front = [f for f in facets if f.coeffs == (1,) * m]
        assert len(front) == 1 and front[0].bound == m * m - 1


def test_facets_require_reduced():
    with pytest.raises(ValidationError, match="reduced"):
        groth.facets(1, P(3, 2, 1))
    with pytest.raises(ValidationError):
        groth.facets(1, P(0, 0, 0))


@pytest.mark.parametrize("h", [1, 2, 3])
def test_facets_match_hull(h):
    for lam in all_partitions(8, 4, min_m=2):
        if lam[-1] != 0 or lam.is_trivial_orbit():
            continue
        verts = groth.vertices(h, lam)
        assert affine_rank(verts) == lam.m
        got = {_as_le(f) for f in groth.facets(h, lam)}
        assert got == hull_facets(verts), (h, lam)


@pytest.mark.parametrize("h", [1, 2])
def test_facet_tight_sets_and_exclusions(h):
    for lam in all_partitions(6, 4, min_m=2):
        if lam[-1] != 0 or lam.is_trivial_orbit():
            continue
        m = lam.m
        pts = groth.lattice_points(h, lam)
        verts = groth.vertices(h, lam)
        for f in groth.facets(h, lam):
            assert all(f.satisfied(v) for v in verts)
            tight = [p for p in pts if f.slack(p) == 0]
            assert affine_rank(tight) == m - 1
        # the excluded J_j inequalities: sum over all but one coordinate >= |lam| - lam_1
        bound = lam.size - lam[0]
        for j in range(m):
            coeffs = tuple(int(i != j) for i in range(m))
            tight = [p for p in pts if sum(a * x for a, x in zip(coeffs, p)) == bound]
            assert all(sum(a * x for a, x in zip(coeffs, p)) >= bound for p in pts)
            assert affine_rank(tight) < m - 1
