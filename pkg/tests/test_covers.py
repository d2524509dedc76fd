import pytest
from hypothesis import given, settings, strategies as st

from canon.covers import (
    P2,
    BidoubleClass,
    ParityError,
    SurfaceInvariants,
    TripleCoverData,
    bidouble_invariants,
    blown_up_cusp_data,
    canonical_degree_candidates,
    contract_minus_one_curves,
    cusp_cover_via_blowup,
    cusp_local_preimage,
    cusp_triple_cover,
    double_cover_invariants,
    eliminate_involution_degrees,
    pencil_test,
    triple_cover_invariants,
)


def plane_curve_euler(d):
    # smooth plane curve of degree d: e = 2 - 2g, g = (d-1)(d-2)/2
    return 2 - (d - 1) * (d - 2)


# -- Euler number oracles for covers of the plane ----------------------------

@pytest.mark.parametrize("k", range(1, 7))
def test_double_plane_noether(k):
    # branch curve of degree 2k; e(Y) = 2 e(P2) - e(B)
    y = double_cover_invariants(P2, L2=k * k, KL=-3 * k)
    assert 12 * y.chi - y.k2 == 2 * 3 - plane_curve_euler(2 * k)


@pytest.mark.parametrize("b", range(1, 6))
def test_triple_plane_noether(b):
    # L = O(2b), M = O(b): branch B in |3b|, C empty; e(Y) = 3 e(P2) - 2 e(B)
    y = triple_cover_invariants(P2, TripleCoverData.plane(2 * b, b))
    assert 12 * y.chi - y.k2 == 3 * 3 - 2 * plane_curve_euler(3 * b)


def test_triple_sextic():
    y = triple_cover_invariants(P2, TripleCoverData.plane(4, 2))
    assert (y.chi, y.k2) == (4, 3)
    assert 12 * y.chi - y.k2 == 45


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))
def test_bidouble_plane_noether(d1, d2, d3):
    # smooth transversal branch curves D_i of degree d_i; stratifying the
    # plane by the number of preimages gives e = 12 - 2 sum e(D_i) + #nodes
    if (d1 + d2) % 2 or (d2 + d3) % 2:
        return
    degs = (d1, d2, d3)
    js = [(degs[(i + 1) % 3] + degs[(i + 2) % 3]) // 2 for i in range(3)]
    total = sum(degs)
    v = bidouble_invariants(P2, [BidoubleClass.plane(j) for j in js], (total ** 2, -3 * total))
    nodes = d1 * d2 + d2 * d3 + d1 * d3
    e = 12 - 2 * sum(plane_curve_euler(d) if d else 0 for d in degs) + nodes
    assert 12 * v.chi - v.k2 == e


def test_bidouble_quartics():
    v = bidouble_invariants(P2, [BidoubleClass.plane(2), BidoubleClass.plane(2),
                                 BidoubleClass.plane(4)], (64, -24))
    assert (v.pg, v.chi, v.k2) == (3, 4, 4)
    assert v.q == 0


def test_bidouble_other_examples():
    v = bidouble_invariants(P2, [BidoubleClass(0, 0, 0)] * 3)
    assert (v.chi, v.pg) == (4, 0)
    v = bidouble_invariants(P2, [BidoubleClass.plane(3)] * 3)
    assert (v.chi, v.pg) == (4, 3)
    # cross-check by the three intermediate double covers, each branched on a
    # sextic (L = O(3)): chi(V) = sum chi(W_i) - 2 chi(P2)
    w = double_cover_invariants(P2, 9, -9, h0_KL=1)
    assert 3 * w.chi - 2 * P2.chi == v.chi
    assert 3 * w.pg - 2 * P2.pg == v.pg


def test_double_cover_examples():
    x = double_cover_invariants(P2, 4, -6, h0_KL=0)
    assert (x.chi, x.k2, x.pg) == (1, 2, 0)
    y = double_cover_invariants(P2, 16, -12, h0_KL=3)
    assert (y.chi, y.k2, y.pg, y.q) == (4, 2, 3, 0)
    assert 12 * y.chi - y.k2 == 6 - plane_curve_euler(8)


def test_parity_errors():
    with pytest.raises(ParityError):
        double_cover_invariants(P2, 3, -2)
    with pytest.raises(ParityError):
        triple_cover_invariants(P2, TripleCoverData(L2=1, KL=0, M2=0, KM=0, LM=0))
    with pytest.raises(ParityError):
        bidouble_invariants(P2, [BidoubleClass(1, 0), BidoubleClass(0, 0), BidoubleClass(0, 0)])


def test_surface_invariants_consistency():
    s = SurfaceInvariants(chi=4, pg=3)
    assert s.q == 0
    with pytest.raises(ValueError):
        SurfaceInvariants(chi=4, q=1, pg=1)


@settings(max_examples=50, deadline=None)
@given(st.integers(-5, 30), st.integers(-20, 60))
def test_etale_scaling(chi, k2):
    base = SurfaceInvariants(chi=chi, k2=k2, q=0)
    zero = TripleCoverData(0, 0, 0, 0, 0)
    y = triple_cover_invariants(base, zero)
    assert (y.chi, y.k2) == (3 * chi, 3 * k2)
    y = double_cover_invariants(base, 0, 0)
    assert (y.chi, y.k2) == (2 * chi, 2 * k2)
    y = bidouble_invariants(base, [BidoubleClass(0, 0)] * 3, (0, 0))
    assert (y.chi, y.k2) == (4 * chi, 4 * k2)


# -- covers branched on cusps -------------------------------------------------

@pytest.mark.parametrize("chi, k2, n, out", [
    (4, 4, 12, (4, 12)),
    (1, 3, 3, (1, 9)),
    (13, 39, 39, (13, 117)),
])
def test_cusp_triple_cover(chi, k2, n, out):
    y = cusp_triple_cover(chi, k2, n)
    assert (y.chi, y.k2) == out


@given(st.integers(1, 200), st.integers(-50, 200))
def test_cusp_cover_preserves_chi(chi, k2):
    assert cusp_triple_cover(chi, k2, 3 * chi).chi == chi


def test_cusp_cover_requires_multiple_of_three():
    with pytest.raises(ValueError):
        cusp_triple_cover(4, 4, 10)


def test_contraction_oracle():
    # two disjoint (-1)-curves each meeting a (-3)-curve once: blow down both,
    # the (-3)-curve becomes (-1) and goes too
    assert cusp_local_preimage() == [[-1, 0, 1], [0, -1, 1], [1, 1, -3]]
    assert contract_minus_one_curves(cusp_local_preimage()) == 3
    assert contract_minus_one_curves([[-2]]) == 0
    assert contract_minus_one_curves([[-1, 1], [1, -2]]) == 2


def test_blown_up_data_and_long_route():
    d = blown_up_cusp_data(12)
    assert (d.L2, d.KL, d.M2, d.KM, d.LM) == (-20, 12, -20, 12, -16)
    blown = triple_cover_invariants(SurfaceInvariants(chi=4, k2=-8, q=0), d)
    assert (blown.chi, blown.k2) == (4, -24)
    cover, minimal = cusp_cover_via_blowup(4, 4, 12)
    assert (cover.chi, cover.k2) == (4, -24)
    assert (minimal.chi, minimal.k2) == (4, 12)


@given(st.integers(1, 40), st.integers(0, 30))
def test_long_route_agrees(chi, m):
    n = 3 * m
    if 3 * chi - 2 * m < 1:
        return
    _, minimal = cusp_cover_via_blowup(chi, 9, n)
    short = cusp_triple_cover(chi, 9, n)
    assert (minimal.chi, minimal.k2) == (short.chi, short.k2)


# -- degree of the canonical map ----------------------------------------------

def test_degree_candidates_main_example():
    b = canonical_degree_candidates(13, 0, 117, 3)
    assert b.non_ruled == (3,)
    assert b.ruled == (3, 6, 9)
    assert eliminate_involution_degrees(b, True) == {3: "any", 9: "rational"}
    assert eliminate_involution_degrees(b, False) == {3: "any", 6: "rational", 9: "rational"}


def test_degree_candidates_other():
    b = canonical_degree_candidates(4, 0, 12, 4)
    assert 4 in b.ruled
    with pytest.raises(ValueError):
        canonical_degree_candidates(3, 0, 9, 1)  # p_g = 2
    with pytest.raises(ValueError):
        canonical_degree_candidates(4, 0, 40, 1)  # above 9 chi


@settings(max_examples=100, deadline=None)
@given(st.integers(3, 30), st.integers(0, 3), st.integers(1, 4), st.data())
def test_degree_candidates_monotone(chi, q, divides, data):
    if chi - 1 + q < 3:
        return
    k2 = data.draw(st.integers(1, 9 * chi - 1))
    small = canonical_degree_candidates(chi, q, k2, divides)
    big = canonical_degree_candidates(chi, q, k2 + 1, divides)
    assert set(small.non_ruled) <= set(big.non_ruled)
    assert set(small.ruled) <= set(big.ruled)
    assert all(d % divides == 0 for d in big.degrees)


@pytest.mark.parametrize("chi, k2, not_composed", [(13, 39, True), (1, 9, False), (10, 29, True)])
def test_pencil(chi, k2, not_composed):
    assert pencil_test(chi, k2).not_composed is not_composed


def test_pencil_text():
    assert str(pencil_test(13, 39)) == "K^2 = 39 < 4 chi - 10 = 42"
