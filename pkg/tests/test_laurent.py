from hypothesis import given, strategies as st

from tiltval.laurent import ONE, V, V_INV, ZERO, LaurentPoly

polys = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=5).map(LaurentPoly)


def test_normalization_drops_zeros():
    assert LaurentPoly({0: 0, 3: 0}) == ZERO
    assert LaurentPoly({2: 1}).terms() == {2: 1}


def test_formatting():
    assert str((V + V_INV) ** 2) == "v^2 + 2 + v^-2"
    assert str(V - 1) == "v - 1"
    assert str(ZERO) == "0"


def test_quadratic_relation_in_scalars():
    # (v^-1 - v)(-v) + 1 == v^2: the sign character respects H_s^2 = 1 + (v^-1 - v) H_s
    assert (V_INV - V) * (-V) + 1 == V * V


def test_nonpositive_part_is_self_dual():
    c = LaurentPoly({-1: 2, 0: 3, 1: 5, 2: 1})
    q = c.nonpositive_part()
    assert q.is_self_dual()
    assert (c - q).valuation() >= 1


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(polys, polys)
def test_bar_is_ring_involution(a, b):
    assert (a * b).bar() == a.bar() * b.bar()
    assert a.bar().bar() == a


@given(polys, polys)
def test_evaluate_is_homomorphism(a, b):
    assert (a * b).evaluate(1) == a.evaluate(1) * b.evaluate(1)
    assert (a + b).evaluate(2) == a.evaluate(2) + b.evaluate(2)


def test_pairs_round_trip():
    c = LaurentPoly({-2: 1, 1: -3})
    assert LaurentPoly.from_pairs(c.to_pairs()) == c
