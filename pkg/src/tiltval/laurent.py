"""Laurent polynomials in one variable ``v`` with integer coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """An element of Z[v, v^-1], stored sparsely as ``{exponent: coefficient}``.

    >>> v = LaurentPoly.v()
    >>> (v + v**-1) ** 2
    LaurentPoly('v^2 + 2 + v^-2')
    >>> (v + 1).evaluate(1)
    2
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms = {e: c for e, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def v(cls, exponent: int = 1) -> LaurentPoly:
        return cls({exponent: 1})

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> LaurentPoly:
        terms: dict[int, int] = {}
        for e, c in pairs:
            terms[int(e)] = terms.get(int(e), 0) + int(c)
        return cls(terms)

    def to_pairs(self) -> list[list[int]]:
        return [[e, self._terms[e]] for e in sorted(self._terms)]

    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def degree(self) -> int:
        """Highest exponent; raises on the zero polynomial."""
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return max(self._terms)

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("valuation of the zero polynomial")
        return min(self._terms)

    def bar(self) -> LaurentPoly:
        """The ring involution v -> v^-1."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def evaluate(self, x=1):
        if x == 1:
            return sum(self._terms.values())
        return sum(c * x**e for e, c in self._terms.items())

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    def is_self_dual(self) -> bool:
        return self == self.bar()

    def nonpositive_part(self) -> LaurentPoly:
        """The self-dual polynomial ``q`` with ``self - q`` in vZ[v].

        Only meaningful when the caller knows the result of the subtraction
        should land in vZ[v]; used for canonical-basis corrections.
        """
        terms = {e: c for e, c in self._terms.items() if e <= 0}
        for e, c in self._terms.items():
            if e < 0:
                terms[-e] = terms.get(-e, 0) + c
        return LaurentPoly(terms)

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(terms)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        terms: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                terms[e1 + e2] = terms.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if len(self._terms) == 1:
            (e, c), = self._terms.items()
            if n < 0 and c not in (1, -1):
                raise ValueError("only monomials with unit coefficient are invertible")
            return LaurentPoly({e * n: c ** abs(n)})
        if n < 0:
            raise ValueError("only monomials are invertible")
        out = LaurentPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by v^k."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def format(self, var: str = "v") -> str:
        if not self._terms:
            return "0"
        out = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            if e == 0:
                mono = str(abs(c))
            else:
                mono = var if e == 1 else f"{var}^{e}"
                if abs(c) != 1:
                    mono = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            out.append((sign, mono))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, mono in out[1:]:
            text += f" {sign} {mono}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly('{self.format()}')"

    def __str__(self) -> str:
        return self.format()


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
V = LaurentPoly.v()
V_INV = LaurentPoly.v(-1)
