"""Hecke algebra of the affine Weyl group with generic parameter v.

Normalization: (H_s - v^-1)(H_s + v) = 0, H̲_s = H_s + v, and
H̲_w = H_w + sum_{x<w} h_{x,w} H_x with h_{x,w} in vZ[v]. The classical
Kazhdan-Lusztig polynomial is recovered as h_{x,w} = v^{l(w)-l(x)} P_{x,w}(v^-2).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping

import networkx as nx

from .affine import AffineElement, AffineWeylGroup
from .laurent import ONE, V, V_INV, ZERO, LaurentPoly
from .polynomial import MultiPoly
from .rootsys import EnumerationCapExceeded


class HeckeElement:
    """Finitely supported combination of standard basis elements H_x."""

    __slots__ = ("W", "coeffs")

    def __init__(self, W: AffineWeylGroup, coeffs: Mapping[AffineElement, LaurentPoly] | None = None):
        self.W = W
        self.coeffs = {x: c for x, c in (coeffs or {}).items() if c}

    @classmethod
    def standard(cls, W, x) -> HeckeElement:
        return cls(W, {x: ONE})

    def __add__(self, other: HeckeElement) -> HeckeElement:
        out = dict(self.coeffs)
        for x, c in other.coeffs.items():
            out[x] = out.get(x, ZERO) + c
        return HeckeElement(self.W, out)

    def __sub__(self, other: HeckeElement) -> HeckeElement:
        return self + other.scale(LaurentPoly.const(-1))

    def scale(self, c: LaurentPoly) -> HeckeElement:
        return HeckeElement(self.W, {x: c * a for x, a in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, HeckeElement) and self.coeffs == other.coeffs

    def left_mul_simple(self, i: int) -> HeckeElement:
        """H_s * self."""
        W = self.W
        s = W.s(i)
        out: dict[AffineElement, LaurentPoly] = {}
        for x, c in self.coeffs.items():
            sx = s * x
            out[sx] = out.get(sx, ZERO) + c
            if W.is_left_descent(x, i):
                out[x] = out.get(x, ZERO) + c * (V_INV - V)
        return HeckeElement(W, out)

    def right_mul_simple(self, i: int) -> HeckeElement:
        """self * H_s."""
        W = self.W
        s = W.s(i)
        out: dict[AffineElement, LaurentPoly] = {}
        for x, c in self.coeffs.items():
            xs = x * s
            out[xs] = out.get(xs, ZERO) + c
            if W.length(xs) < W.length(x):
                out[x] = out.get(x, ZERO) + c * (V_INV - V)
        return HeckeElement(W, out)

    def left_mul_kl_simple(self, i: int) -> HeckeElement:
        """(H_s + v) * self."""
        return self.left_mul_simple(i) + self.scale(V)

    def __mul__(self, other: HeckeElement) -> HeckeElement:
        out = HeckeElement(self.W)
        for x, c in self.coeffs.items():
            term = other
            for i in reversed(self.W.reduced_word(x)):
                term = term.left_mul_simple(i)
            out = out + term.scale(c)
        return out

    def specialize(self) -> dict[AffineElement, int]:
        """Coefficients at v = 1 (the group algebra)."""
        out = {x: c.evaluate(1) for x, c in self.coeffs.items()}
        return {x: c for x, c in out.items() if c}

    def support(self) -> list[AffineElement]:
        return sorted(self.coeffs, key=lambda x: (self.W.length(x), self.W.reduced_word(x)))


class KLTable:
    """Memoized Kazhdan-Lusztig basis of the affine Hecke algebra.

    ``max_length`` caps the length of any w whose basis element is requested.
    """

    def __init__(self, W: AffineWeylGroup, max_length: int = 40):
        self.W = W
        self.max_length = max_length
        self._basis: dict[AffineElement, dict[AffineElement, LaurentPoly]] = {W.identity: {W.identity: ONE}}
        self.frozen = False

    def __contains__(self, w) -> bool:
        return w in self._basis

    def basis_coeffs(self, w: AffineElement) -> dict[AffineElement, LaurentPoly]:
        """{x: h_{x,w}} for all x <= w."""
        if w in self._basis:
            return self._basis[w]
        W = self.W
        if W.length(w) > self.max_length:
            raise EnumerationCapExceeded(f"length {W.length(w)} exceeds KL cap {self.max_length}")
        if self.frozen:
            raise RuntimeError("KL table is frozen")
        i = min(W.left_descents(w))
        sw = W.s(i) * w
        E = HeckeElement(W, self.basis_coeffs(sw)).left_mul_kl_simple(i)
        for x in sorted(E.coeffs, key=W.length, reverse=True):
            if x == w:
                continue
            c = E.coeffs.get(x)
            if c is None or c.is_zero() or c.valuation() > 0:
                continue
            q = c.nonpositive_part()
            E = E - HeckeElement(W, self.basis_coeffs(x)).scale(q)
        coeffs = dict(E.coeffs)
        self._check_entry(w, coeffs)
        self._basis[w] = coeffs
        return coeffs

    def _check_entry(self, w, coeffs):
        lw = self.W.length(w)
        if coeffs.get(w) != ONE:
            raise ArithmeticError("KL basis element is not unitriangular")
        for x, c in coeffs.items():
            if x == w:
                continue
            if c.valuation() < 1:
                raise ArithmeticError(f"h_{{x,w}} not in vZ[v] for w of length {lw}")
            if not c.is_nonnegative():
                raise ArithmeticError("negative Kazhdan-Lusztig coefficient")

    def h(self, x: AffineElement, w: AffineElement) -> LaurentPoly:
        return self.basis_coeffs(w).get(x, ZERO)

    def kl_polynomial(self, x: AffineElement, w: AffineElement) -> LaurentPoly:
        """Classical P_{x,w}(q), returned as a polynomial in q."""
        coeffs = self.basis_coeffs(w)
        if x not in coeffs:
            if not self.W.bruhat_leq(x, w):
                raise ValueError("kl_polynomial requires x <= w")
            return ZERO
        d = self.W.length(w) - self.W.length(x)
        return LaurentPoly({(d - e) // 2: c for e, c in coeffs[x].terms().items()})

    def p(self, x, w) -> int:
        """p_{x,w} = P_{x,w}(1)."""
        return self.basis_coeffs(w).get(x, ZERO).evaluate(1)

    def mu(self, x: AffineElement, w: AffineElement) -> int:
        """Coefficient of q^((l(w)-l(x)-1)/2) in P_{x,w}; equivalently of v in h_{x,w}."""
        if x == w:
            return 0
        return self.h(x, w).coefficient(1) if x in self.basis_coeffs(w) else 0

    def kl_basis(self, w) -> HeckeElement:
        return HeckeElement(self.W, self.basis_coeffs(w))

    def kl_basis_at_one(self, w) -> dict[AffineElement, int]:
        """H̲_w at v=1: sum p_{x,w} x."""
        return {x: c.evaluate(1) for x, c in self.basis_coeffs(w).items()}

    def tilde_basis_at_one(self, w) -> dict[AffineElement, int]:
        """H̃_w at v=1: sum p_{x,w} (-1)^{l(x)+l(w)} x."""
        lw = self.W.length(w)
        return {
            x: c.evaluate(1) * (-1) ** (self.W.length(x) + lw) for x, c in self.basis_coeffs(w).items()
        }

    def tilde_basis(self, w) -> HeckeElement:
        """H̃_w at v=1 wrapped as a HeckeElement with constant coefficients."""
        return HeckeElement(self.W, {x: LaurentPoly.const(c) for x, c in self.tilde_basis_at_one(w).items()})

    def expand_in_kl_basis(self, elem: HeckeElement) -> dict[AffineElement, LaurentPoly]:
        """Coefficients of ``elem`` in the basis {H̲_z} (peeling by length)."""
        W = self.W
        rest = HeckeElement(W, elem.coeffs)
        out: dict[AffineElement, LaurentPoly] = {}
        while rest.coeffs:
            z = max(rest.coeffs, key=lambda x: (W.length(x), W.reduced_word(x)))
            c = rest.coeffs[z]
            out[z] = c
            rest = rest - self.kl_basis(z).scale(c)
        return out

    def freeze(self):
        self.frozen = True

    # -- persistence --------------------------------------------------------
    def records(self) -> list[dict]:
        W = self.W
        out = []
        for w in sorted(self._basis, key=lambda y: (W.length(y), W.reduced_word(y))):
            for x in sorted(self._basis[w], key=lambda y: (W.length(y), W.reduced_word(y))):
                out.append({
                    "kind": "kl",
                    "x": list(W.reduced_word(x)),
                    "w": list(W.reduced_word(w)),
                    "coeffs": self._basis[w][x].to_pairs(),
                })
        return out

    def load_records(self, records: Iterable[dict]):
        W = self.W
        staged: dict[AffineElement, dict[AffineElement, LaurentPoly]] = {}
        for rec in records:
            w = W.parse_word(rec["w"])
            x = W.parse_word(rec["x"])
            staged.setdefault(w, {})[x] = LaurentPoly.from_pairs(rec["coeffs"])
        for w, coeffs in staged.items():
            self._check_entry(w, coeffs)
            self._basis[w] = coeffs


class Parabolic:
    """A finite standard parabolic subgroup W_s with its KL combinatorics."""

    def __init__(self, table: KLTable, s: int):
        self.table = table
        self.W = table.W
        self.s = s
        self.elements = self.W.parabolic_subgroup(s)
        self._members = set(self.elements)
        self.generators = tuple(i for i in self.W.S if i != s)
        self._products: dict[tuple, dict[AffineElement, LaurentPoly]] = {}
        self._left: dict[AffineElement, set[int]] | None = None
        self._mu_below: dict[AffineElement, list] | None = None
        self._a: dict[AffineElement, int] | None = None
        self._cells: list[list[AffineElement]] | None = None

    def __contains__(self, x) -> bool:
        return x in self._members

    @property
    def longest_element(self) -> AffineElement:
        return max(self.elements, key=self.W.length)

    def _kl_setup(self):
        if self._left is None:
            W, T = self.W, self.table
            gens = set(self.generators)
            self._left = {y: W.left_descents(y) & gens for y in self.elements}
            self._mu_below = {
                y: [(z, T.mu(z, y)) for z in T.basis_coeffs(y) if z != y and T.mu(z, y)]
                for y in self.elements
            }

    def _left_mul_kl(self, i: int, vec: dict) -> dict:
        """H̲_s * (sum c_u H̲_u), computed in the KL basis."""
        s = self.W.s(i)
        out: dict[AffineElement, LaurentPoly] = {}
        for u, c in vec.items():
            if i in self._left[u]:
                out[u] = out.get(u, ZERO) + c * (V + V_INV)
                continue
            su = s * u
            out[su] = out.get(su, ZERO) + c
            for z, m in self._mu_below[u]:
                if i in self._left[z]:
                    out[z] = out.get(z, ZERO) + c * m
        return {u: c for u, c in out.items() if c}

    def _kl_product(self, x, y) -> dict:
        key = (x, y)
        if key in self._products:
            return self._products[key]
        if x == self.W.identity:
            result = {y: ONE}
        else:
            # H̲_x = H̲_s H̲_{sx} - sum_{z < sx, sz < z} mu(z, sx) H̲_z
            i = min(self._left[x])
            sx = self.W.s(i) * x
            result = self._left_mul_kl(i, self._kl_product(sx, y))
            for z, m in self._mu_below[sx]:
                if i in self._left[z]:
                    for u, c in self._kl_product(z, y).items():
                        result[u] = result.get(u, ZERO) - c * m
            result = {u: c for u, c in result.items() if c}
        self._products[key] = result
        return result

    def structure_constants(self, x, y) -> dict[AffineElement, LaurentPoly]:
        """{z: h_{x,y,z}} with H̲_x H̲_y = sum_z h_{x,y,z} H̲_z."""
        if x not in self or y not in self:
            raise ValueError("structure constants need both elements in W_s")
        self._kl_setup()
        consts = self._kl_product(x, y)
        for z, c in consts.items():
            if z not in self or not c.is_nonnegative():
                raise ArithmeticError("structure constant positivity violated")
        return consts

    def a_values(self) -> dict[AffineElement, int]:
        if self._a is None:
            a = {z: 0 for z in self.elements}
            for x in self.elements:
                for y in self.elements:
                    for z, c in self.structure_constants(x, y).items():
                        a[z] = max(a[z], c.degree())
            self._a = a
        return self._a

    def a_function(self, z) -> int:
        if z not in self:
            raise ValueError("a-function is only computed inside a finite parabolic")
        return self.a_values()[z]

    def preorder_graph(self) -> nx.DiGraph:
        """Edges y -> x meaning x <=_L y or x <=_R y, from mu-values and descents."""
        W, T = self.W, self.table
        G = nx.DiGraph()
        G.add_nodes_from(self.elements)
        left = {y: W.left_descents(y) & set(self.generators) for y in self.elements}
        right = {y: W.right_descents(y) & set(self.generators) for y in self.elements}
        for y in self.elements:
            for i in self.generators:
                s = W.s(i)
                if i not in left[y]:
                    G.add_edge(y, s * y)
                if i not in right[y]:
                    G.add_edge(y, y * s)
            for z in T.basis_coeffs(y):
                if z != y and T.mu(z, y):
                    if not left[z] <= left[y]:
                        G.add_edge(y, z)
                    if not right[z] <= right[y]:
                        G.add_edge(y, z)
        return G

    def two_sided_cells(self) -> list[list[AffineElement]]:
        """Cells ordered by a-value, then by their shortest reduced word."""
        if self._cells is None:
            W = self.W
            key = lambda x: (W.length(x), W.reduced_word(x))
            comps = [sorted(c, key=key) for c in nx.strongly_connected_components(self.preorder_graph())]
            a = self.a_values()
            for c in comps:
                if len({a[z] for z in c}) != 1:
                    raise ArithmeticError("a-function is not constant on a computed cell")
            self._cells = sorted(comps, key=lambda c: (a[c[0]], key(c[0])))
        return self._cells

    def cell_of(self, x) -> list[AffineElement]:
        return next(c for c in self.two_sided_cells() if x in c)


def symmetric_power_basis(rank: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors of the degree-``degree`` monomials in ``rank`` variables."""
    out = []
    for combo in itertools.combinations_with_replacement(range(rank), degree):
        e = [0] * rank
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return sorted(out, reverse=True)


def act_on_symmetric_power(
    W: AffineWeylGroup, h: Mapping[AffineElement, int], degree: int, max_degree: int = 12
) -> list[list[Fraction]]:
    """Matrix of the group-algebra element ``h`` on degree-``degree`` polynomials.

    x acts on a polynomial f on V by (x f)(mu) = f(x̄^{-1} mu). Columns are
    the images of the monomial basis.
    """
    if degree > max_degree:
        raise EnumerationCapExceeded(f"symmetric power degree {degree} exceeds cap {max_degree}")
    r = W.rank
    basis = symmetric_power_basis(r, degree)
    index = {e: k for k, e in enumerate(basis)}
    mat = [[Fraction(0)] * len(basis) for _ in basis]
    for x, c in h.items():
        if not c:
            continue
        inv = x.finite_part.inverse().matrix
        images = [MultiPoly.linear(row) for row in inv]
        for col, e in enumerate(basis):
            f = MultiPoly(r, {e: 1}).compose_linear(images)
            for e2, val in f.terms().items():
                mat[index[e2]][col] += c * val
    return mat
