"""The affine Weyl group W = W_f x| ZR acting on weights.

An element is a pair (finite matrix, translation) acting at level ``c`` by
``lam -> A lam + c t``; the translation lives in the root lattice (weight
coordinates). Simple reflections are indexed ``0..rank`` with 0 the affine one.

Geometry is done at level 1 with the interior point ``rho / h`` of the
fundamental alcove: all descent and length questions reduce to the integer
vector ``A rho + h t`` paired with positive coroots.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import sympy

from .rootsys import (
    EnumerationCapExceeded,
    FiniteWeylElement,
    Matrix,
    RootSystem,
    build_root_system,
    mat_inverse_unimodular,
    mat_mul,
    mat_vec,
)

AFFINE = 0


@dataclass(frozen=True)
class AffineElement:
    matrix: Matrix
    translation: tuple[int, ...]

    def __mul__(self, other: AffineElement) -> AffineElement:
        return AffineElement(
            mat_mul(self.matrix, other.matrix),
            tuple(a + b for a, b in zip(mat_vec(self.matrix, other.translation), self.translation)),
        )

    def inverse(self) -> AffineElement:
        inv = mat_inverse_unimodular(self.matrix)
        return AffineElement(inv, tuple(-a for a in mat_vec(inv, self.translation)))

    @property
    def finite_part(self) -> FiniteWeylElement:
        return FiniteWeylElement(self.matrix)

    def act(self, lam: Sequence, level=1) -> tuple:
        """Image of ``lam`` under the level-``level`` affine action."""
        return tuple(a + level * t for a, t in zip(mat_vec(self.matrix, lam), self.translation))

    def dot(self, lam: Sequence, p, rho: Sequence) -> tuple:
        """x . lam = x(lam + rho) - rho at level p."""
        shifted = [Fraction(a) + r for a, r in zip(lam, rho)]
        return tuple(a - r for a, r in zip(self.act(shifted, p), rho))

    def is_identity(self) -> bool:
        n = len(self.matrix)
        return not any(self.translation) and all(
            self.matrix[i][j] == int(i == j) for i in range(n) for j in range(n)
        )


class AffineWeylGroup:
    """Combinatorics of the affine Weyl group attached to a root system."""

    def __init__(self, root_system: RootSystem | str, max_group_size: int = 100_000):
        if isinstance(root_system, str):
            root_system = build_root_system(root_system)
        self.R = root_system
        self.rank = root_system.rank
        self.max_group_size = max_group_size
        self._invariant: dict[int, tuple[Fraction, ...]] = {}
        n = self.rank
        self.identity = AffineElement(
            tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), (0,) * n
        )
        alpha0 = root_system.highest_short_root
        self._alpha0_coroot = root_system.coroot_of(alpha0)
        s_aff = AffineElement(root_system.reflection_matrix(alpha0), root_system.root_to_weight(alpha0))
        finite = [AffineElement(m, (0,) * n) for m in root_system.simple_reflection_matrices]
        self.generators: tuple[AffineElement, ...] = (s_aff, *finite)
        self._h = root_system.coxeter_number
        self._rho_int = (1,) * n
        self._length: dict[AffineElement, int] = {}
        self._word: dict[AffineElement, tuple[int, ...]] = {}
        self._interval: dict[AffineElement, frozenset] = {}
        self._bruhat: dict[tuple[AffineElement, AffineElement], bool] = {}

    # -- basics -----------------------------------------------------------
    @property
    def S(self) -> tuple[int, ...]:
        return tuple(range(self.rank + 1))

    def simple_reflections(self) -> list[AffineElement]:
        return list(self.generators)

    def s(self, i: int) -> AffineElement:
        return self.generators[i]

    def from_word(self, word: Iterable[int]) -> AffineElement:
        x = self.identity
        for i in word:
            if not 0 <= i <= self.rank:
                raise ValueError(f"simple reflection index {i} out of range 0..{self.rank}")
            x = x * self.generators[i]
        return x

    def _alcove_point(self, x: AffineElement) -> tuple[int, ...]:
        """h * x(rho/h) = A rho + h t, an integer vector."""
        return tuple(a + self._h * t for a, t in zip(mat_vec(x.matrix, self._rho_int), x.translation))

    def _coroot_pairings(self, x: AffineElement) -> list[int]:
        pt = self._alcove_point(x)
        return [sum(a * c for a, c in zip(pt, cor)) for cor in self.R.positive_coroots]

    # -- length and descents ----------------------------------------------
    def length(self, x: AffineElement) -> int:
        """Number of hyperplanes separating the fundamental alcove from x(A_0)."""
        if x not in self._length:
            h = self._h
            self._length[x] = sum(abs(b // h) for b in self._coroot_pairings(x))
        return self._length[x]

    def is_left_descent(self, x: AffineElement, i: int) -> bool:
        pt = self._alcove_point(x)
        if i == AFFINE:
            return sum(a * c for a, c in zip(pt, self._alpha0_coroot)) > self._h
        return pt[i - 1] < 0

    def left_descents(self, x: AffineElement) -> frozenset[int]:
        return frozenset(i for i in self.S if self.is_left_descent(x, i))

    def is_right_descent(self, x: AffineElement, i: int) -> bool:
        return self.length(x * self.generators[i]) < self.length(x)

    def right_descents(self, x: AffineElement) -> frozenset[int]:
        return frozenset(i for i in self.S if self.is_right_descent(x, i))

    def reduced_word(self, x: AffineElement) -> tuple[int, ...]:
        """Lexicographically smallest reduced word (index 0 is s_a)."""
        if x in self._word:
            return self._word[x]
        word = []
        y = x
        while not y.is_identity():
            i = min(self.left_descents(y))
            word.append(i)
            y = self.generators[i] * y
        self._word[x] = tuple(word)
        return self._word[x]

    def is_reduced(self, word: Sequence[int]) -> bool:
        return self.length(self.from_word(word)) == len(word)

    def parse_word(self, word: Sequence[int]) -> AffineElement:
        """Element of a word that must be reduced."""
        x = self.from_word(word)
        if self.length(x) != len(word):
            raise ValueError(f"word {list(word)} is not reduced")
        return x

    # -- Bruhat order -------------------------------------------------------
    def bruhat_leq(self, x: AffineElement, w: AffineElement) -> bool:
        """x <= w via the lifting property on a left descent of w."""
        key = (x, w)
        if key in self._bruhat:
            return self._bruhat[key]
        lx, lw = self.length(x), self.length(w)
        if lx > lw:
            res = False
        elif lw == 0:
            res = x.is_identity()
        elif lx == lw:
            res = x == w
        else:
            i = min(self.left_descents(w))
            s = self.generators[i]
            sw = s * w
            if self.is_left_descent(x, i):
                res = self.bruhat_leq(s * x, sw)
            else:
                res = self.bruhat_leq(x, sw) or self.bruhat_leq(s * x, sw)
        self._bruhat[key] = res
        return res

    def lower_interval(self, w: AffineElement) -> frozenset[AffineElement]:
        """{x : x <= w}, built as [e, sw] union s[e, sw]."""
        if w in self._interval:
            return self._interval[w]
        if w.is_identity():
            res = frozenset([w])
        else:
            s = self.generators[min(self.left_descents(w))]
            below = self.lower_interval(s * w)
            res = below | frozenset(s * x for x in below)
        self._interval[w] = res
        return res

    # -- enumeration --------------------------------------------------------
    def elements_up_to(self, max_length: int, generators: Sequence[int] | None = None) -> list[AffineElement]:
        """Elements of the subgroup generated by ``generators`` of length <= max_length, BFS order."""
        gens = self.S if generators is None else tuple(generators)
        seen = {self.identity}
        out = [self.identity]
        layer = [self.identity]
        for _ in range(max_length):
            nxt = set()
            for x in layer:
                for i in gens:
                    y = x * self.generators[i]
                    if y not in seen and self.length(y) == self.length(x) + 1:
                        nxt.add(y)
            layer = sorted(nxt, key=self.reduced_word)
            seen.update(layer)
            out.extend(layer)
            if len(out) > self.max_group_size:
                raise EnumerationCapExceeded(f"more than {self.max_group_size} elements")
            if not layer:
                break
        return out

    def parabolic_subgroup(self, s: int) -> list[AffineElement]:
        """W_s, generated by S - {s}; finite, enumerated completely."""
        if s not in self.S:
            raise ValueError(f"{s} is not a simple reflection index")
        gens = [i for i in self.S if i != s]
        out = self.elements_up_to(self.max_group_size, gens)
        return out

    def project_to_finite(self, x: AffineElement) -> FiniteWeylElement:
        return x.finite_part

    def finite_weyl_group(self) -> list[AffineElement]:
        return self.parabolic_subgroup(AFFINE)

    def invariant_point(self, s: int) -> tuple[Fraction, ...]:
        """mu_s, where p * mu_s is the unique fixed point of W_s at level p.

        The level-p fixed-point equations (A - I) x = -p t are linear in p,
        so x = p * mu_s with (A - I) mu_s = -t.
        """
        if s not in self._invariant:
            self._invariant[s] = self._solve_invariant_point(s)
        return self._invariant[s]

    def _solve_invariant_point(self, s: int) -> tuple[Fraction, ...]:
        rows, rhs = [], []
        for i in self.S:
            if i == s:
                continue
            g = self.generators[i]
            for r in range(self.rank):
                rows.append([g.matrix[r][c] - int(r == c) for c in range(self.rank)])
                rhs.append(-g.translation[r])
        A = sympy.Matrix(rows)
        b = sympy.Matrix(rhs)
        if A.rank() != self.rank:
            raise ArithmeticError("fixed-point system is not uniquely solvable")
        sol, params = A.gauss_jordan_solve(b)
        if params.shape[0]:
            raise ArithmeticError("fixed-point system has free parameters")
        return tuple(Fraction(int(sympy.fraction(v)[0]), int(sympy.fraction(v)[1])) for v in sol)

    def is_min_coset_rep(self, x: AffineElement) -> bool:
        """x in W^f: no finite simple reflection is a left descent."""
        return all(not self.is_left_descent(x, i) for i in range(1, self.rank + 1))

    def enumerate_Wf_quotient(self, max_length: int) -> list[AffineElement]:
        """W^f up to ``max_length``, by length, each layer sorted by reduced word."""
        out = [self.identity]
        layer = [self.identity]
        for _ in range(max_length):
            nxt = set()
            for x in layer:
                for i in self.S:
                    y = x * self.generators[i]
                    if self.length(y) == self.length(x) + 1 and self.is_min_coset_rep(y):
                        nxt.add(y)
            layer = sorted(nxt, key=self.reduced_word)
            out.extend(layer)
            if len(out) > self.max_group_size:
                raise EnumerationCapExceeded(f"more than {self.max_group_size} elements of W^f")
        return out

    def dot_action(self, x: AffineElement, lam: Sequence, p) -> tuple:
        return x.dot(lam, p, self.R.rho)

    def coset_decomposition(self, x: AffineElement) -> tuple[AffineElement, AffineElement]:
        """x = u * z with u in W_f and z in W^f."""
        u = self.identity
        z = x
        while True:
            fin = [i for i in range(1, self.rank + 1) if self.is_left_descent(z, i)]
            if not fin:
                return u, z
            g = self.generators[fin[0]]
            z = g * z
            u = u * g

    def word_to_json(self, x: AffineElement) -> list[int]:
        return list(self.reduced_word(x))

    def format_word(self, x: AffineElement) -> str:
        w = self.reduced_word(x)
        if not w:
            return "e"
        return "*".join("s_a" if i == 0 else f"s_{i}" for i in w)

    @cached_property
    def finite_simple_indices(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))
