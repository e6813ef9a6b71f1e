from fractions import Fraction

import pytest

from oracles import weyl_dimension_bruteforce
from tiltval.polynomial import MultiPoly
from tiltval.engine import NotFound, delta_two_var, p_valuation, weyl_dimension, weyl_polynomial
from tiltval.rootsys import FiniteWeylElement


def test_weyl_polynomial_normalization(engine_for):
    for label in ["A1", "A2", "B2", "G2"]:
        R = engine_for(label).R
        D = weyl_polynomial(R)
        assert D.evaluate(R.rho) == 1
        assert D.total_degree() == R.N
        assert D.is_homogeneous_in(range(R.rank))
    A2 = engine_for("A2").R
    assert weyl_polynomial(A2).evaluate((2, 2)) == 8


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_weyl_polynomial_skew_symmetric(engine_for, label):
    eng = engine_for(label)
    D = weyl_polynomial(eng.R)
    for x in eng.finite_weyl_group():
        images = [MultiPoly.linear(row) for row in x.matrix]
        assert D.compose_linear(images) == D * x.sign()


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_delta_two_var_restricts_to_weyl_polynomial(engine_for, label):
    eng = engine_for(label)
    r = eng.rank
    ident = FiniteWeylElement.identity(r).matrix
    zero = tuple((0,) * r for _ in range(r))
    D = weyl_polynomial(eng.R)
    mu_only = [MultiPoly.linear(list(row) + [0] * r) for row in ident]
    assert delta_two_var(eng.R, ident, zero) == D.compose_linear(mu_only)
    both = [MultiPoly.linear(list(row) + list(row)) for row in ident]
    assert delta_two_var(eng.R, ident, ident) == D.compose_linear(both)


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_weyl_dimension_against_bruteforce(engine_for, label):
    R = engine_for(label).R
    for lam in [(0, 0), (1, 0), (0, 1), (2, 3)]:
        assert weyl_dimension(R, lam) == weyl_dimension_bruteforce(R, lam)
    assert weyl_dimension(engine_for("A2").R, (1, 1)) == 8


def test_delta_sum_examples(engine_for):
    eng = engine_for("A1")
    W = eng.W
    e = FiniteWeylElement.identity(1)
    assert eng.delta_sum(e, 1, W.identity).format(["m1", "l1"]) == "m1 + l1"
    poly = eng.delta_sum(e, 1, W.s(0))
    assert poly.format(["m1", "l1"]) == "2*m1"
    assert eng.delta_sum(e, 1, W.s(0)).lowest_degree_in([0]) == 1


def test_s3_lemma_and_star(engine_for):
    eng = engine_for("A2")
    P = eng.parabolic(0)
    w0 = P.longest_element
    assert eng.check_lemma_lowdeg(0, w0)
    assert eng.delta_sum(FiniteWeylElement.identity(2), 0, w0).lowest_degree_in([0, 1]) >= 3
    for w in P.elements:
        assert eng.star_identity_check(0, w)


@pytest.mark.parametrize("label", ["A2", "B2"])
def test_reduction_to_y_identity(engine_for, label):
    eng = engine_for(label)
    for s in eng.W.S:
        for w in eng.parabolic(s).elements[::3]:
            for y in eng.finite_weyl_group()[::2]:
                assert eng.reduction_to_identity_check(y, s, w)


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "G2"])
def test_degree_bookkeeping(engine_for, label):
    eng = engine_for(label)
    e = FiniteWeylElement.identity(eng.rank)
    for s in eng.W.S:
        P = eng.parabolic(s)
        for w in P.elements:
            a = P.a_function(w)
            poly = eng.delta_sum(e, s, w)
            comp = poly.component(eng.lam_vars, eng.N - a)
            assert comp.is_homogeneous_in(eng.mu_vars)
            for d in range(eng.N - a + 1, eng.N + 1):
                assert poly.component(eng.lam_vars, d).is_zero()


def test_find_minimal_y_examples(engine_for):
    eng = engine_for("A1")
    W = eng.W
    y, w, cands = eng.find_minimal_y(1, [W.s(0)])
    assert y == W.identity and w == W.s(0)
    y, w, _ = eng.find_minimal_y(0, [W.identity])
    assert y == W.identity and w == W.identity
    for label in ["A2", "G2"]:
        e2 = engine_for(label)
        for s in e2.W.S:
            y, w, _ = e2.find_minimal_y(s, [e2.W.identity])
            assert y == e2.W.identity
    with pytest.raises(NotFound):
        eng.find_minimal_y(0, [W.s(1)], max_length=0)


def test_tilting_dimension_a1(engine_for):
    eng = engine_for("A1")
    W = eng.W
    for m in range(4):
        assert eng.tilting_dimension({W.identity: 1}, (m,), 5) == m + 1
        assert eng.tilting_dimension({W.identity: 1, W.s(0): 1}, (m,), 5) == 10
    with pytest.raises(ValueError):
        eng.tilting_dimension({}, (0,), 5)
    with pytest.raises(ValueError):
        eng.tilting_dimension({W.identity: 1}, (4,), 5)


@pytest.mark.parametrize("label,p", [("A2", 7), ("B2", 7)])
def test_weyl_modules_in_lowest_alcove(engine_for, label, p):
    eng = engine_for(label)
    for lam in eng.lowest_alcove_weights(p):
        assert eng.tilting_dimension({eng.W.identity: 1}, lam, p) == weyl_dimension(eng.R, lam)


def test_p_valuation():
    assert p_valuation(10, 5) == 1
    assert p_valuation(4, 5) == 0
    assert p_valuation(343, 7) == 3
    with pytest.raises(ValueError):
        p_valuation(0, 5)
    with pytest.raises(ValueError):
        p_valuation(9, 9)


def test_lowest_alcove_weights(engine_for):
    eng = engine_for("A2")
    pts = eng.lowest_alcove_weights(7)
    assert len(pts) == 15
    assert all(eng.R.in_lowest_alcove(l, 7) for l in pts)
    assert pts == sorted(pts)


def test_steinberg_cross_check(engine_for):
    """The w0 cell of W_f in A2: dimension divisible by exactly p^3 = Delta(p rho)."""
    eng = engine_for("A2")
    rep = next(r for r in eng.verify_main_theorem(7) if r.s == 0 and r.a == 3)
    assert weyl_dimension(eng.R, tuple(6 for _ in range(2))) == 343
    assert rep.valuation == 3 and rep.dim % 343 == 0


def test_p_must_exceed_coxeter_number(engine_for):
    with pytest.raises(ValueError):
        engine_for("A2").verify_main_theorem(3)
    with pytest.raises(ValueError):
        engine_for("A2").verify_main_theorem(9)


def test_exact_route_agrees_with_kernel(engine_for):
    eng = engine_for("B2")
    rep = eng.verify_main_theorem(7)[-1]
    y, w = eng.W.parse_word(rep.y), eng.W.parse_word(rep.w)
    from tiltval.antispherical import tilting_character

    ch = tilting_character(eng.pkl, eng.kl, y, w)
    for entry in rep.scan:
        exact = eng.tilting_dimension_exact(ch.standard_at_one, entry["lambda1"], 7)
        assert exact == Fraction(entry["dim"])
