from fractions import Fraction

from hypothesis import given, strategies as st

from tiltval.polynomial import MultiPoly

exps = st.tuples(*[st.integers(0, 2)] * 3)
polys = st.dictionaries(exps, st.integers(-3, 3), max_size=4).map(lambda t: MultiPoly(3, t))
points = st.tuples(*[st.fractions(max_denominator=5).filter(lambda f: abs(f) < 5)] * 3)


@given(polys, polys, points)
def test_evaluation_is_ring_homomorphism(f, g, pt):
    assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt)
    assert (f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt)


@given(polys)
def test_components_sum_back(f):
    total = MultiPoly(3)
    for d in range(0, 7):
        total = total + f.component([0, 1], d)
    assert total == f


@given(polys, points)
def test_substitute_then_evaluate(f, pt):
    partial = f.substitute({0: pt[0]})
    assert partial.evaluate((0, pt[1], pt[2])) == f.evaluate(pt)


def test_linear_and_degrees():
    f = MultiPoly.linear([1, 0, 2]) * MultiPoly.linear([0, 1, 0])
    assert f.total_degree() == 2
    assert f.degree_in([2]) == 1
    assert f.lowest_degree_in([2]) == 0
    assert f.format(["a", "b", "c"]) == "a*b + 2*b*c"


def test_compose_linear():
    f = MultiPoly(2, {(2, 0): 1})  # x^2
    g = f.compose_linear([MultiPoly.linear([1, 1]), MultiPoly.linear([0, 1])])
    assert g == MultiPoly(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})


def test_zero_has_no_lowest_degree():
    assert MultiPoly(2).lowest_degree_in([0]) is None
    assert MultiPoly.constant(2, Fraction(1, 2)).evaluate((9, 9)) == Fraction(1, 2)
