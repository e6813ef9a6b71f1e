"""Exact sparse multivariate polynomials over Q.

Used for the Weyl polynomial and its two-variable sums: a ``MultiPoly`` in
``2 * rank`` variables where the first ``rank`` are the mu-coordinates and the
last ``rank`` the lambda-coordinates (both in the fundamental-weight basis).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


class MultiPoly:
    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Fraction | int] | None = None):
        self.nvars = nvars
        self._terms: dict[Exponent, Fraction] = {}
        for e, c in (terms or {}).items():
            if c:
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
                self._terms[tuple(e)] = Fraction(c)

    @classmethod
    def _from_clean(cls, nvars: int, terms: dict) -> MultiPoly:
        """Wrap ``terms`` whose values are already Fractions; zeros are dropped."""
        out = cls.__new__(cls)
        out.nvars = nvars
        out._terms = {e: c for e, c in terms.items() if c}
        return out

    @classmethod
    def constant(cls, nvars: int, c) -> MultiPoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def linear(cls, coeffs: Sequence, const=0) -> MultiPoly:
        """The affine-linear form ``const + sum(coeffs[i] * x_i)``."""
        n = len(coeffs)
        terms: dict[Exponent, Fraction] = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = Fraction(c)
        if const:
            terms[(0,) * n] = Fraction(const)
        return cls(n, terms)

    @classmethod
    def product(cls, factors: Iterable[MultiPoly], nvars: int) -> MultiPoly:
        out = cls.constant(nvars, 1)
        for f in factors:
            out = out * f
        return out

    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def __add__(self, other: MultiPoly) -> MultiPoly:
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return MultiPoly._from_clean(self.nvars, terms)

    def __neg__(self) -> MultiPoly:
        return MultiPoly._from_clean(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: MultiPoly) -> MultiPoly:
        return self + (-other)

    def __mul__(self, other) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            c = Fraction(other)
            if c == 1:
                return self
            return MultiPoly._from_clean(self.nvars, {e: v * c for e, v in self._terms.items()})
        terms: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiPoly._from_clean(self.nvars, terms)

    __rmul__ = __mul__

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def degree_in(self, variables: Sequence[int]) -> int:
        """Highest degree in the given variable group (-1 for zero)."""
        if not self._terms:
            return -1
        return max(sum(e[i] for i in variables) for e in self._terms)

    def lowest_degree_in(self, variables: Sequence[int]) -> int | None:
        """Lowest degree in the given variable group; None for zero."""
        if not self._terms:
            return None
        return min(sum(e[i] for i in variables) for e in self._terms)

    def component(self, variables: Sequence[int], degree: int) -> MultiPoly:
        """Sum of the terms whose degree in ``variables`` equals ``degree``."""
        return MultiPoly(
            self.nvars,
            {e: c for e, c in self._terms.items() if sum(e[i] for i in variables) == degree},
        )

    def is_homogeneous_in(self, variables: Sequence[int]) -> bool:
        return len({sum(e[i] for i in variables) for e in self._terms}) <= 1

    def substitute(self, values: Mapping[int, Fraction | int]) -> MultiPoly:
        """Plug numbers into some variables, keeping the variable count."""
        terms: dict[Exponent, Fraction] = {}
        for e, c in self._terms.items():
            c = Fraction(c)
            e2 = list(e)
            for i, val in values.items():
                if e[i]:
                    c *= Fraction(val) ** e[i]
                    e2[i] = 0
            if c:
                key = tuple(e2)
                terms[key] = terms.get(key, 0) + c
        return MultiPoly(self.nvars, terms)

    def compose_linear(self, images: Sequence[MultiPoly]) -> MultiPoly:
        """Substitute ``x_i -> images[i]`` (each image a MultiPoly in any nvars)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        target = images[0].nvars if images else 0
        out = MultiPoly(target)
        powers: dict[tuple[int, int], MultiPoly] = {}
        for e, c in self._terms.items():
            term = MultiPoly.constant(target, c)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in powers:
                        p = MultiPoly.constant(target, 1)
                        for _ in range(k):
                            p = p * images[i]
                        powers[key] = p
                    term = term * powers[key]
            out = out + term
        return out

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for e, c in self._terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t *= Fraction(x) ** k
            total += t
        return total

    def format(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        if not self._terms:
            return "0"
        pieces = []
        for e in sorted(self._terms, key=lambda e: (-sum(e), [-k for k in e])):
            c = self._terms[e]
            monos = []
            for name, k in zip(names, e):
                if k == 1:
                    monos.append(name)
                elif k > 1:
                    monos.append(f"{name}**{k}")
            mag = abs(c)
            if not monos:
                body = str(mag)
            elif mag == 1:
                body = "*".join(monos)
            else:
                body = "*".join([str(mag)] + monos)
            pieces.append(("-" if c < 0 else "+", body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, '{self.format()}')"
