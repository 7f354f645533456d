import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from gmsplit.edges import PatternKind, edge_patterns, identify_pattern
from gmsplit.errors import GMSplitError
from gmsplit.model import IDENTITY, SWAP, EdgeKind, EdgeManifold, GluingMap
from gmsplit.slopes import FIBER, SECTION, Curves, Slope, intersection_number, primitive, transport_slope


def torus_edge(g0=IDENTITY, g1=IDENTITY):
    return EdgeManifold(EdgeKind.TORUS, (("a", 0), ("b", 0)), (g0, g1))


def annulus_edge(g0=IDENTITY, g1=IDENTITY):
    return EdgeManifold(EdgeKind.ANNULUS, (("a", 0), ("b", 0)), (g0, g1))


# slopes


@pytest.mark.parametrize(
    "gl, s, expected",
    [
        (IDENTITY, FIBER, FIBER),
        (SWAP, FIBER, SECTION),
    ],
)
def test_transport(gl, s, expected):
    assert transport_slope(gl, s) == expected


def test_transport_shear_follows_row_major_product():
    shear = ((1, 0), (1, 1))
    expected = Slope(*oracles.normalize(*oracles.matvec(shear, (0, 1))))
    assert transport_slope(GluingMap(shear), SECTION) == expected == SECTION
    assert transport_slope(GluingMap(shear), FIBER) == Slope(1, 1)


@pytest.mark.parametrize("s, t, n", [((1, 0), (0, 1), 1), ((1, 0), (1, 0), 0), ((2, 1), (1, 1), 1)])
def test_intersection(s, t, n):
    assert intersection_number(Slope(*s), Slope(*t)) == n == oracles.det2(s, t)


def test_slope_normal_form():
    assert primitive(-4, -6) == (Slope(2, 3), 2)
    assert primitive(-3, 0) == (FIBER, 3)
    with pytest.raises(GMSplitError):
        Slope(2, 4)
    with pytest.raises(GMSplitError):
        Slope(1, -1)
    with pytest.raises(GMSplitError):
        primitive(0, 0)


# patterns


def kinds(pats):
    return [(p.kind, p.spanning_count, p.parallel_count) for p in pats]


def test_two_fibers_each_side_identity():
    pats = edge_patterns(torus_edge(), Curves(FIBER, 2), Curves(FIBER, 2))
    got = kinds(pats)
    assert (PatternKind.ANNULI, 2, (0, 0)) in got
    assert (PatternKind.ANNULI, 0, (1, 1)) in got
    assert any(k is PatternKind.ANNULI_WITH_TUBE for k, _, _ in got)
    assert not any(k is PatternKind.CROSS for k, _, _ in got)
    # oracle: spanning counts are those s <= 2 with both remainders even
    spans = sorted({s for k, s, _ in got if k is PatternKind.ANNULI})
    assert spans == [s for s in range(0, 3) if (2 - s) % 2 == 0]


def test_fiber_to_section_offers_cross_but_no_spanning():
    e = torus_edge(IDENTITY, SWAP)
    single = edge_patterns(e, Curves(FIBER, 1), Curves(FIBER, 1))
    assert all(p.spanning_count == 0 for p in single)
    double = edge_patterns(e, Curves(FIBER, 2), Curves(FIBER, 2))
    cross = [p for p in double if p.kind is PatternKind.CROSS]
    assert len(cross) == 1
    assert cross[0].chi == -2
    assert intersection_number(*cross[0].slopes) == 1
    assert not any(p.kind is PatternKind.ANNULI and p.spanning_count for p in double)


def test_annulus_edge_spanning_and_tube():
    pats = edge_patterns(annulus_edge(), Curves(FIBER, 1), Curves(FIBER, 1))
    got = kinds(pats)
    assert got[0] == (PatternKind.ANNULI, 1, (0, 0))
    assert any(k is PatternKind.ANNULI_WITH_TUBE for k, _, _ in got)
    without = edge_patterns(annulus_edge(), Curves(FIBER, 1), Curves(FIBER, 1), allow_tube=False)
    assert kinds(without) == [(PatternKind.ANNULI, 1, (0, 0))]


def test_cross_never_on_annulus_edges():
    pats = edge_patterns(annulus_edge(IDENTITY, SWAP), Curves(FIBER, 2), Curves(FIBER, 2))
    assert not any(p.kind is PatternKind.CROSS for p in pats)


def test_pattern_locals_are_consistent():
    for e in (torus_edge(), annulus_edge()):
        for left in (None, Curves(FIBER, 2), Curves(FIBER, 4)):
            for right in (None, Curves(FIBER, 2)):
                for p in edge_patterns(e, left, right):
                    p.local.check()
                    assert sum(p.local.comp_chi) == p.chi
                    assert p.demand(0) == (left.count if left else 0)


def test_bad_owner():
    with pytest.raises(GMSplitError):
        edge_patterns(torus_edge(), None, None, owner="X")


def test_identify_pattern_is_empty():
    p = identify_pattern()
    assert p.identify and p.chi == 0 and not p.active


unimodular = st.tuples(st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6)).flatmap(
    lambda t: st.sampled_from([1, -1]).map(lambda d: t + (d,))
)


def _matrix(a, b, c, sign):
    # build [[a, b], [c, d]] with det = sign when possible, else a shear
    if a != 0 and (sign + b * c) % a == 0:
        return ((a, b), (c, (sign + b * c) // a))
    return ((1, b), (0, sign))


slopes = st.tuples(st.integers(-30, 30), st.integers(-30, 30)).filter(lambda t: t != (0, 0))


@settings(max_examples=10_000, deadline=None)
@given(unimodular, slopes, slopes)
def test_transport_preserves_intersection(m, s, t):
    mat = _matrix(*m)
    gl = GluingMap(mat)
    assert abs(gl.det) == 1
    s, t = Slope.of(*s), Slope.of(*t)
    before = intersection_number(s, t)
    after = intersection_number(transport_slope(gl, s), transport_slope(gl, t))
    assert before == after
    moved = oracles.normalize(*oracles.matvec(mat, (s.a, s.b)))
    assert transport_slope(gl, s) == Slope(*moved)
