import json
import time
from itertools import product

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from canon.cli import fixture_path
from canon.weighted import (
    P11122,
    PlaneQuartic,
    Poly,
    QuadExt,
    configuration_check,
    cusps_of_bidouble,
    double_point_system,
    is_ordinary_cusp,
    monomials,
    multiplicity_system_dimension,
    standard_tricuspidal,
    tricuspidal_quartic,
)
from canon.weighted.linsys import condition_rows, split_rational
from canon.weighted.scalars import squarefree_decomposition

X, Y, Z = sympy.symbols("x y z")
FIXTURE_T = [[2, 1, 0], [1, -1, 1], [0, 1, 3]]


def count_monomials(weights, d):
    # brute force over a box
    return sum(1 for e in product(range(d + 1), repeat=len(weights))
               if sum(w * k for w, k in zip(weights, e)) == d)


def load_pair():
    obj = json.loads(fixture_path("quartic_pair.json").read_text(encoding="utf-8"))
    return PlaneQuartic.from_dict(obj["q1"]), PlaneQuartic.from_dict(obj["q2"])


# -- scalars -----------------------------------------------------------------

def test_squarefree_decomposition():
    assert squarefree_decomposition(12) == (2, 3)
    assert squarefree_decomposition(-18) == (3, -2)
    assert squarefree_decomposition(49) == (7, 1)


@settings(max_examples=100, deadline=None)
@given(st.fractions(max_denominator=20).filter(lambda x: abs(x) < 200),
       st.fractions(max_denominator=20), st.fractions(max_denominator=20),
       st.fractions(max_denominator=20), st.fractions(max_denominator=20))
def test_quadext_matches_sympy(r, a, b, c, d):
    if r == 0:
        return
    s = QuadExt.sqrt(r)
    assert s * s == QuadExt(r)
    x, y = QuadExt(a) + QuadExt(b) * s, QuadExt(c) + QuadExt(d) * s
    root = sympy.sqrt(sympy.Rational(r.numerator, r.denominator))
    sx = sympy.Rational(a.numerator, a.denominator) + sympy.Rational(b.numerator, b.denominator) * root
    sy = sympy.Rational(c.numerator, c.denominator) + sympy.Rational(d.numerator, d.denominator) * root

    def as_sympy(q):
        return sympy.Rational(q.u.numerator, q.u.denominator) + \
            sympy.Rational(q.v.numerator, q.v.denominator) * sympy.sqrt(q.m)

    assert sympy.simplify(as_sympy(x * y) - sx * sy) == 0
    assert sympy.simplify(as_sympy(x - y) - (sx - sy)) == 0
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()


def test_quadext_mixed_fields():
    with pytest.raises(ValueError):
        QuadExt.sqrt(2) + QuadExt.sqrt(3)
    assert str(QuadExt.sqrt(5)) == "sqrt(5)"
    assert str(-QuadExt.sqrt(12)) == "-2*sqrt(3)"


# -- polynomials -------------------------------------------------------------

def test_poly_roundtrip():
    f = standard_tricuspidal()
    assert Poly.from_dict(f.to_dict(("x", "y", "z"))) == f
    assert Poly.from_sympy(f.to_sympy((X, Y, Z)), (X, Y, Z)) == f
    assert sympy.expand(f.to_sympy((X, Y, Z)) - (
        X**2 * Y**2 + Y**2 * Z**2 + Z**2 * X**2 - 2 * X * Y * Z * (X + Y + Z))) == 0


@settings(max_examples=30, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3))
def test_linear_transform_matches_sympy(m):
    f = standard_tricuspidal()
    g = f.linear_transform(m)
    v = sympy.Matrix(m) * sympy.Matrix([X, Y, Z])
    expect = f.to_sympy((X, Y, Z)).subs({X: v[0], Y: v[1], Z: v[2]}, simultaneous=True)
    assert sympy.expand(g.to_sympy((X, Y, Z)) - expect) == 0


def test_poly_json_errors():
    with pytest.raises(ValueError):
        Poly.from_json('{"vars": ["x"], "terms": [{"coeff": "1", "exps": [1, 2]}]}')


# -- monomials ---------------------------------------------------------------

@pytest.mark.parametrize("weights, d, n", [(P11122, 3, 16), ((1, 1, 1), 3, 10), ((1, 2), 3, 2),
                                            (P11122, 0, 1), (P11122, 1, 3), (P11122, 2, 8)])
def test_monomial_counts(weights, d, n):
    monos = monomials(weights, d)
    assert len(monos) == n == count_monomials(weights, d)
    assert len(set(monos)) == n
    assert monos == sorted(monos, reverse=True)


@given(st.lists(st.integers(1, 3), min_size=1, max_size=4), st.integers(0, 6))
def test_monomial_counts_property(weights, d):
    assert len(monomials(weights, d)) == count_monomials(weights, d)


# -- linear systems ----------------------------------------------------------

def test_empty_and_single_point():
    assert multiplicity_system_dimension(3, [])[0] == 16
    dim, kernel, _ = multiplicity_system_dimension(3, [(2, 3, 5)], (1, 1, 1))
    assert dim == 7
    for f in kernel:
        assert f(2, 3, 5) == 0
        assert all(f.diff(i)(2, 3, 5) == 0 for i in range(3))


@st.composite
def weighted_form(draw, weights=P11122, degree=3):
    monos = monomials(weights, degree)
    coeffs = draw(st.lists(st.integers(-5, 5), min_size=len(monos), max_size=len(monos)))
    return Poly(len(weights), dict(zip(monos, coeffs)))


points = st.lists(st.integers(-4, 4), min_size=5, max_size=5)


@settings(max_examples=60, deadline=None)
@given(weighted_form(), points, st.integers(-9, 9).filter(bool))
def test_euler_relation(f, p, r):
    # with one coordinate irrational, the identity must hold in Q(sqrt r)
    pt = [QuadExt(x) for x in p]
    pt[3] = pt[3] + QuadExt.sqrt(r)
    lhs = QuadExt(0)
    for i, w in enumerate(P11122):
        lhs = lhs + QuadExt(w) * pt[i] * f.diff(i)(*pt)
    assert lhs == QuadExt(3) * f(*pt)
    rows = condition_rows(monomials(P11122, 3), pt)
    mat = sympy.Matrix([[sympy.Rational(x.u.numerator, x.u.denominator) +
                         sympy.Rational(x.v.numerator, x.v.denominator) * sympy.sqrt(x.m)
                         for x in row] for row in rows])
    assert mat.rank(simplify=True) <= 5


@settings(max_examples=30, deadline=None)
@given(st.lists(points, min_size=1, max_size=3), st.integers(1, 4))
def test_scale_invariance(pts, lam):
    scaled = [[lam ** w * x for w, x in zip(P11122, p)] for p in pts]
    assert multiplicity_system_dimension(3, pts)[0] == multiplicity_system_dimension(3, scaled)[0]


def test_conjugate_symmetry():
    q1, q2 = load_pair()
    pts = cusps_of_bidouble(q1, q2)
    conj = [[c.conjugate() if isinstance(c, QuadExt) else c for c in p.coordinates()]
            for p in pts]
    a = multiplicity_system_dimension(3, [p.coordinates() for p in pts[::2]])[0]
    b = multiplicity_system_dimension(3, conj[::2])[0]
    assert a == b


@settings(max_examples=20, deadline=None)
@given(st.lists(points, min_size=1, max_size=2), points)
def test_kernel_vanishes_to_order_two(pts, direction):
    eps = sympy.Symbol("eps")
    syms = sympy.symbols("x0:5")
    _, kernel, _ = multiplicity_system_dimension(3, pts)
    for f in kernel:
        expr = f.to_sympy(syms)
        for p in pts:
            sub = {s: x + eps * v for s, x, v in zip(syms, p, direction)}
            series = sympy.Poly(sympy.expand(expr.subs(sub, simultaneous=True)), eps)
            low = [series.coeff_monomial(eps ** k) for k in (0, 1)]
            assert low == [0, 0]


def test_split_rational_drops_zero_rows():
    rows = [[QuadExt(1), QuadExt(0)], [QuadExt.sqrt(2), QuadExt(0)]]
    assert split_rational(rows) == [[1, 0], [1, 0]]


def test_wrong_point_length():
    with pytest.raises(ValueError):
        double_point_system(3, [(1, 2, 3)])


# -- quartics ----------------------------------------------------------------

def test_standard_quartic_cusps():
    q = tricuspidal_quartic()
    assert q.cusps == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    f = q.poly.to_sympy((X, Y, Z))
    for p in q.cusps:
        at = dict(zip((X, Y, Z), p))
        grad = [sympy.diff(f, v).subs(at) for v in (X, Y, Z)]
        hess = sympy.hessian(f, (X, Y, Z)).subs(at)
        assert grad == [0, 0, 0] and hess.rank() == 1


def test_cusp_detection():
    cusp = Poly.from_sympy(Y**2 * Z - X**3, (X, Y, Z))
    node = Poly.from_sympy(Y**2 * Z - X**3 - X**2 * Z, (X, Y, Z))
    tacnode = Poly.from_sympy(Y**2 * Z**2 - X**4, (X, Y, Z))
    assert is_ordinary_cusp(cusp, (0, 0, 1))
    assert not is_ordinary_cusp(node, (0, 0, 1))
    assert not is_ordinary_cusp(tacnode, (0, 0, 1))


def test_scaling_transform_keeps_coordinate_cusps():
    q = tricuspidal_quartic([[1, 0, 0], [0, 1, 0], [0, 0, 2]])
    assert set(q.cusps) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}


def test_singular_transform():
    with pytest.raises(ValueError):
        tricuspidal_quartic([[1, 0, 0], [0, 1, 0], [1, 1, 0]])


def test_fixture_pair():
    q1, q2 = load_pair()
    assert q2 == tricuspidal_quartic(FIXTURE_T)
    v = configuration_check(q1, q2)
    assert v.passed and v.failure == ""
    # q2 is nonzero at every cusp of q1
    assert all(q2.poly(*c) != 0 for c in q1.cusps)


def test_fixture_terms_must_match_transform():
    obj = json.loads(fixture_path("quartic_pair.json").read_text(encoding="utf-8"))
    obj["q2"]["terms"][0]["coeff"] = "5"
    with pytest.raises(ValueError):
        PlaneQuartic.from_dict(obj["q2"])


def test_resultant_oracle():
    # independent recomputation: resultant in z, degree 16, squarefree after
    # the recorded shear
    q1, q2 = load_pair()
    v = configuration_check(q1, q2)
    a, b = v.projection
    sub = {X: X + a * Z, Y: Y + b * Z}
    f = q1.poly.to_sympy((X, Y, Z)).subs(sub, simultaneous=True)
    g = q2.poly.to_sympy((X, Y, Z)).subs(sub, simultaneous=True)
    r = sympy.Poly(sympy.resultant(f, g, Z), X, Y)
    assert r.total_degree() == 16
    u = sympy.Poly(r.as_expr().subs(Y, 1), X)
    assert sympy.discriminant(u) != 0


@pytest.mark.parametrize("t, reason", [
    (None, "common component"),
    ([[0, 1, 0], [1, 0, 1], [0, 1, 1]], "lies on"),
    ([[1, 1, 0], [0, 1, 1], [1, 0, 1]], "16 distinct"),
])
def test_configuration_failures(t, reason):
    v = configuration_check(tricuspidal_quartic(), tricuspidal_quartic(t))
    assert not v and reason in v.failure


def test_reducible_rejected():
    conic2 = Poly.from_sympy((X**2 + Y**2 - Z**2) * (X * Y - Z**2), (X, Y, Z))
    v = configuration_check(PlaneQuartic(conic2, ()), tricuspidal_quartic())
    assert not v


def test_bidouble_cusps():
    q1, q2 = load_pair()
    pts = cusps_of_bidouble(q1, q2)
    assert len(pts) == 12
    f1, f2 = q1.poly.to_sympy((X, Y, Z)), q2.poly.to_sympy((X, Y, Z))
    for p in pts:
        at = dict(zip((X, Y, Z), p.base))
        for coord, f in ((p.w, f1), (p.t, f2)):
            val = sympy.Rational(coord.u.numerator, coord.u.denominator) + \
                sympy.Rational(coord.v.numerator, coord.v.denominator) * sympy.sqrt(coord.m)
            assert sympy.simplify(val ** 2 - f.subs(at)) == 0


def test_fixture_system_is_empty():
    q1, q2 = load_pair()
    start = time.perf_counter()
    dim, kernel, system = multiplicity_system_dimension(3, cusps_of_bidouble(q1, q2))
    assert time.perf_counter() - start < 10
    assert dim == 0 and kernel == []
    assert system.rank == 16
