"""The antispherical right module over the affine Hecke algebra.

Standard basis N_x for x in W^f (minimal representatives of W_f \\ W), with

    N_x H_s = N_xs                     if xs in W^f, xs > x
            = N_xs + (v^-1 - v) N_x    if xs in W^f, xs < x
            = -v N_x                   if xs not in W^f.

Canonical basis N̲_y = N_y + sum_{x<y} n_{x,y} N_x with n_{x,y} in vZ[v].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .affine import AffineElement, AffineWeylGroup
from .hecke import HeckeElement, KLTable
from .laurent import ONE, V, V_INV, ZERO, LaurentPoly
from .rootsys import EnumerationCapExceeded


class PositivityError(ArithmeticError):
    pass


class AntisphericalElement:
    __slots__ = ("W", "coeffs")

    def __init__(self, W: AffineWeylGroup, coeffs: Mapping[AffineElement, LaurentPoly] | None = None):
        self.W = W
        self.coeffs = {x: c for x, c in (coeffs or {}).items() if c}

    def __add__(self, other):
        out = dict(self.coeffs)
        for x, c in other.coeffs.items():
            out[x] = out.get(x, ZERO) + c
        return AntisphericalElement(self.W, out)

    def __sub__(self, other):
        return self + other.scale(LaurentPoly.const(-1))

    def scale(self, c: LaurentPoly):
        return AntisphericalElement(self.W, {x: c * a for x, a in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, AntisphericalElement) and self.coeffs == other.coeffs

    def is_zero(self) -> bool:
        return not self.coeffs

    def act_simple(self, i: int) -> AntisphericalElement:
        """self * H_s."""
        W = self.W
        s = W.s(i)
        out: dict[AffineElement, LaurentPoly] = {}
        for x, c in self.coeffs.items():
            xs = x * s
            if W.is_min_coset_rep(xs):
                out[xs] = out.get(xs, ZERO) + c
                if W.length(xs) < W.length(x):
                    out[x] = out.get(x, ZERO) + c * (V_INV - V)
            else:
                out[x] = out.get(x, ZERO) - c * V
        return AntisphericalElement(W, out)

    def act_kl_simple(self, i: int) -> AntisphericalElement:
        """self * (H_s + v)."""
        return self.act_simple(i) + self.scale(V)

    def act(self, h: HeckeElement) -> AntisphericalElement:
        out = AntisphericalElement(self.W)
        for x, c in h.coeffs.items():
            term = self
            for i in self.W.reduced_word(x):
                term = term.act_simple(i)
            out = out + term.scale(c)
        return out

    def specialize(self) -> dict[AffineElement, int]:
        out = {x: c.evaluate(1) for x, c in self.coeffs.items()}
        return {x: c for x, c in out.items() if c}

    def support(self) -> list[AffineElement]:
        return sorted(self.coeffs, key=lambda x: (self.W.length(x), self.W.reduced_word(x)))


def standard_action(W: AffineWeylGroup, x: AffineElement, i: int) -> AntisphericalElement:
    if not W.is_min_coset_rep(x):
        raise ValueError("standard basis is indexed by W^f")
    return AntisphericalElement(W, {x: ONE}).act_simple(i)


class ParabolicKLTable:
    """Memoized canonical basis of the antispherical module."""

    def __init__(self, W: AffineWeylGroup, max_length: int = 40):
        self.W = W
        self.max_length = max_length
        self._basis: dict[AffineElement, dict[AffineElement, LaurentPoly]] = {W.identity: {W.identity: ONE}}
        self.frozen = False

    def basis_coeffs(self, y: AffineElement) -> dict[AffineElement, LaurentPoly]:
        if y in self._basis:
            return self._basis[y]
        W = self.W
        if not W.is_min_coset_rep(y):
            raise ValueError("canonical basis is indexed by W^f")
        if W.length(y) > self.max_length:
            raise EnumerationCapExceeded(f"length {W.length(y)} exceeds antispherical cap {self.max_length}")
        if self.frozen:
            raise RuntimeError("antispherical table is frozen")
        # any right descent s of y has ys in W^f
        i = min(W.right_descents(y))
        ys = y * W.s(i)
        E = AntisphericalElement(W, self.basis_coeffs(ys)).act_kl_simple(i)
        for x in sorted(E.coeffs, key=W.length, reverse=True):
            if x == y:
                continue
            c = E.coeffs.get(x)
            if c is None or c.valuation() > 0:
                continue
            E = E - self.canonical(x).scale(c.nonpositive_part())
        coeffs = dict(E.coeffs)
        self._check_entry(y, coeffs)
        self._basis[y] = coeffs
        return coeffs

    def _check_entry(self, y, coeffs):
        if coeffs.get(y) != ONE:
            raise ArithmeticError("antispherical canonical element is not unitriangular")
        for x, c in coeffs.items():
            if x != y and c.valuation() < 1:
                raise ArithmeticError("n_{x,y} not in vZ[v]")

    def canonical(self, y) -> AntisphericalElement:
        return AntisphericalElement(self.W, self.basis_coeffs(y))

    def n(self, x, y) -> LaurentPoly:
        return self.basis_coeffs(y).get(x, ZERO)

    def n_at_one(self, x, y) -> int:
        return self.n(x, y).evaluate(1)

    def expand_in_canonical_basis(self, elem: AntisphericalElement) -> dict[AffineElement, LaurentPoly]:
        W = self.W
        rest = AntisphericalElement(W, elem.coeffs)
        out: dict[AffineElement, LaurentPoly] = {}
        while rest.coeffs:
            z = max(rest.coeffs, key=lambda x: (W.length(x), W.reduced_word(x)))
            c = rest.coeffs[z]
            out[z] = c
            rest = rest - self.canonical(z).scale(c)
        return out

    def freeze(self):
        self.frozen = True

    def records(self) -> list[dict]:
        W = self.W
        key = lambda u: (W.length(u), W.reduced_word(u))
        return [
            {
                "kind": "pkl",
                "x": list(W.reduced_word(x)),
                "w": list(W.reduced_word(y)),
                "coeffs": self._basis[y][x].to_pairs(),
            }
            for y in sorted(self._basis, key=key)
            for x in sorted(self._basis[y], key=key)
        ]

    def load_records(self, records: Iterable[dict]):
        staged: dict[AffineElement, dict[AffineElement, LaurentPoly]] = {}
        for rec in records:
            y = self.W.parse_word(rec["w"])
            x = self.W.parse_word(rec["x"])
            staged.setdefault(y, {})[x] = LaurentPoly.from_pairs(rec["coeffs"])
        for y, coeffs in staged.items():
            self._check_entry(y, coeffs)
            self._basis[y] = coeffs


@dataclass
class TiltingCharacter:
    """N̲_y H̲_w with its two expansions."""

    y: AffineElement
    w: AffineElement
    element: AntisphericalElement
    canonical: dict[AffineElement, LaurentPoly]
    standard_at_one: dict[AffineElement, int] = field(default_factory=dict)

    @property
    def is_positive(self) -> bool:
        return all(c.is_nonnegative() for c in self.canonical.values())


def tilting_character(
    ptable: ParabolicKLTable, table: KLTable, y: AffineElement, w: AffineElement, check: bool = True
) -> TiltingCharacter:
    W = ptable.W
    if not W.is_min_coset_rep(y):
        raise ValueError("y must lie in W^f")
    elem = ptable.canonical(y).act(table.kl_basis(w))
    canon = ptable.expand_in_canonical_basis(elem)
    char = TiltingCharacter(y, w, elem, canon, elem.specialize())
    if check and not char.is_positive:
        raise PositivityError("canonical expansion of N̲_y H̲_w has a negative coefficient")
    return char


def verify_prop34(ptable: ParabolicKLTable, table: KLTable, x: AffineElement) -> bool:
    """N̲_1 H̲_x is N̲_x for x in W^f and zero otherwise."""
    W = ptable.W
    res = AntisphericalElement(W, {W.identity: ONE}).act(table.kl_basis(x))
    if W.is_min_coset_rep(x):
        return res == ptable.canonical(x)
    return res.is_zero()
