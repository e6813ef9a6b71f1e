"""Finite irreducible root systems in fundamental-weight coordinates.

Weights are tuples of ``Fraction`` whose i-th entry is the pairing with the
i-th simple coroot. Roots are stored twice: in simple-root coordinates
(``positive_roots``) and in weight coordinates (``positive_roots_w``). Coroots
are stored in simple-coroot coordinates, so ``<lam, alpha^vee>`` is a plain dot
product with the weight coordinates of ``lam``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

Weight = tuple[Fraction, ...]
Matrix = tuple[tuple[int, ...], ...]


class UnsupportedType(ValueError):
    pass


class EnumerationCapExceeded(RuntimeError):
    pass


def _dynkin_data(series: str, n: int) -> tuple[list[int], list[tuple[int, int]]]:
    """Half squared lengths ``d_i`` (short roots have d=1) and the edges."""
    path = [(i, i + 1) for i in range(n - 1)]
    if series == "A" and n >= 1:
        return [1] * n, path
    if series == "B" and n >= 2:
        return [2] * (n - 1) + [1], path
    if series == "C" and n >= 2:
        return [1] * (n - 1) + [2], path
    if series == "D" and n >= 4:
        return [1] * n, [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if series == "E" and n in (6, 7, 8):
        # Bourbaki: 1-3-4-5-6(-7-8), 2-4
        edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)]
        return [1] * n, edges
    if series == "F" and n == 4:
        return [2, 2, 1, 1], path
    if series == "G" and n == 2:
        return [1, 3], path
    raise UnsupportedType(f"unsupported root system type {series}{n}")


def parse_type(label: str) -> tuple[str, int]:
    m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", label or "")
    if not m:
        raise UnsupportedType(f"cannot parse type label {label!r}")
    series, n = m.group(1).upper(), int(m.group(2))
    _dynkin_data(series, n)
    return series, n


@dataclass(frozen=True, eq=False)
class RootSystem:
    type_label: str
    rank: int
    cartan_matrix: Matrix  # cartan_matrix[i][j] = <alpha_i, alpha_j^vee>
    half_lengths: tuple[int, ...]
    positive_roots: tuple[tuple[int, ...], ...]
    positive_roots_w: tuple[tuple[int, ...], ...] = field(repr=False)
    positive_coroots: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def N(self) -> int:
        return len(self.positive_roots)

    @property
    def coxeter_number(self) -> int:
        return 2 * self.N // self.rank

    @property
    def rho(self) -> Weight:
        return tuple(Fraction(1) for _ in range(self.rank))

    @property
    def simple_roots(self) -> tuple[tuple[int, ...], ...]:
        """Simple roots in fundamental-weight coordinates."""
        return tuple(self.root_to_weight(e) for e in _unit_vectors(self.rank))

    @property
    def simple_coroots(self) -> tuple[tuple[int, ...], ...]:
        """Simple coroots in simple-coroot coordinates (unit vectors)."""
        return tuple(_unit_vectors(self.rank))

    def root_to_weight(self, k: Sequence[int]) -> tuple[int, ...]:
        return tuple(
            sum(k[i] * self.cartan_matrix[i][j] for i in range(self.rank)) for j in range(self.rank)
        )

    def _root_index(self, k) -> int:
        return self.positive_roots.index(tuple(k))

    @cached_property
    def highest_root(self) -> tuple[int, ...]:
        """Highest root, in simple-root coordinates."""
        return max(self.positive_roots, key=sum)

    @cached_property
    def highest_short_root(self) -> tuple[int, ...]:
        """Highest short root; its coroot is the highest coroot."""
        short = [k for k in self.positive_roots if self.root_half_length(k) == min(self.half_lengths)]
        return max(short, key=sum)

    def root_half_length(self, k: Sequence[int]) -> Fraction:
        """(alpha, alpha)/2 for the root with simple-root coordinates ``k``."""
        total = 0
        for i in range(self.rank):
            for j in range(self.rank):
                # (alpha_i, alpha_j) = d_j * <alpha_i, alpha_j^vee>
                total += k[i] * k[j] * self.half_lengths[j] * self.cartan_matrix[i][j]
        return Fraction(total, 2)

    def coroot_of(self, k: Sequence[int]) -> tuple[int, ...]:
        return self.positive_coroots[self._root_index(k)]

    def pairing(self, lam: Sequence, coroot: Sequence[int]) -> Fraction:
        """Exact value of <lam, coroot> (coroot in simple-coroot coordinates)."""
        return sum((Fraction(a) * c for a, c in zip(lam, coroot)), Fraction(0))

    def is_regular(self, lam: Sequence) -> bool:
        return all(self.pairing(lam, c) != 0 for c in self.positive_coroots)

    def is_dominant(self, lam: Sequence) -> bool:
        return all(Fraction(a) >= 0 for a in lam)

    def in_lowest_alcove(self, lam: Sequence, p: int) -> bool:
        """0 < <lam + rho, alpha^vee> < p for every positive root."""
        shifted = [Fraction(a) + 1 for a in lam]
        return all(0 < self.pairing(shifted, c) < p for c in self.positive_coroots)

    def weight(self, coords: Sequence) -> Weight:
        if len(coords) != self.rank:
            raise ValueError(f"weight needs {self.rank} coordinates")
        return tuple(Fraction(c) for c in coords)

    @cached_property
    def simple_reflection_matrices(self) -> tuple[Matrix, ...]:
        return tuple(self.reflection_matrix(e) for e in _unit_vectors(self.rank))

    def reflection_matrix(self, k: Sequence[int]) -> Matrix:
        """Matrix of s_alpha on weight coordinates: lam - <lam, alpha^vee> alpha."""
        alpha = self.root_to_weight(k)
        cor = self.coroot_of(k) if tuple(k) in self.positive_roots else None
        if cor is None:
            raise ValueError(f"{k} is not a positive root")
        return tuple(
            tuple(int(i == j) - alpha[i] * cor[j] for j in range(self.rank)) for i in range(self.rank)
        )

    def weyl_group(self, cap: int = 10_000) -> list[FiniteWeylElement]:
        """All elements of W_f, enumerated breadth-first from the identity."""
        ident = FiniteWeylElement.identity(self.rank)
        seen = {ident.matrix: ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for x in frontier:
                for s in self.simple_reflection_matrices:
                    m = mat_mul(x.matrix, s)
                    if m not in seen:
                        if len(seen) >= cap:
                            raise EnumerationCapExceeded(f"W_f has more than {cap} elements")
                        seen[m] = FiniteWeylElement(m)
                        nxt.append(seen[m])
            frontier = nxt
        return list(seen.values())

    def weyl_length(self, x: FiniteWeylElement) -> int:
        """Number of positive coroots on which x(rho) pairs negatively."""
        img = mat_vec(x.matrix, self.rho)
        return sum(1 for c in self.positive_coroots if self.pairing(img, c) < 0)

    def to_json(self) -> dict:
        return {
            "type": self.type_label,
            "rank": self.rank,
            "cartan_matrix": [list(r) for r in self.cartan_matrix],
            "positive_roots": [list(r) for r in self.positive_roots],
            "positive_coroots": [list(r) for r in self.positive_coroots],
            "N": self.N,
            "coxeter_number": self.coxeter_number,
            "highest_root": list(self.highest_root),
            "highest_short_root": list(self.highest_short_root),
        }


@dataclass(frozen=True)
class FiniteWeylElement:
    """Element of W_f as an integer matrix acting on weight coordinates."""

    matrix: Matrix

    @classmethod
    def identity(cls, rank: int) -> FiniteWeylElement:
        return cls(tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank)))

    def __mul__(self, other: FiniteWeylElement) -> FiniteWeylElement:
        return FiniteWeylElement(mat_mul(self.matrix, other.matrix))

    def act(self, lam: Sequence) -> tuple:
        return mat_vec(self.matrix, lam)

    def inverse(self) -> FiniteWeylElement:
        return FiniteWeylElement(mat_inverse_unimodular(self.matrix))

    def sign(self) -> int:
        return mat_det(self.matrix)

    def is_identity(self) -> bool:
        return all(self.matrix[i][j] == int(i == j) for i in range(len(self.matrix)) for j in range(len(self.matrix)))


def _unit_vectors(n: int):
    return [tuple(int(i == j) for j in range(n)) for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def mat_vec(a: Matrix, x: Sequence) -> tuple:
    return tuple(sum(row[k] * x[k] for k in range(len(x))) for row in a)


def mat_det(a: Matrix) -> int:
    m = [[Fraction(x) for x in row] for row in a]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for k in range(c, n):
                m[r][k] -= f * m[c][k]
    return int(det)


def mat_inverse_unimodular(a: Matrix) -> Matrix:
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        piv = next(r for r in range(c, n) if m[r][c] != 0)
        m[c], m[piv] = m[piv], m[c]
        pv = m[c][c]
        m[c] = [x / pv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    out = []
    for row in m:
        vals = row[n:]
        if any(x.denominator != 1 for x in vals):
            raise ValueError("matrix is not unimodular")
        out.append(tuple(int(x) for x in vals))
    return tuple(out)


def _closure_positive_roots(cartan: Matrix) -> list[tuple[int, ...]]:
    """Positive roots (simple-root coordinates) by reflecting simple roots."""
    n = len(cartan)
    roots = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(roots)
    frontier = list(roots)
    while frontier:
        nxt = []
        for k in frontier:
            for i in range(n):
                pair = sum(k[j] * cartan[j][i] for j in range(n))  # <beta, alpha_i^vee>
                new = tuple(k[j] - (pair if j == i else 0) for j in range(n))
                if all(c >= 0 for c in new) and any(new) and new not in seen:
                    seen.add(new)
                    roots.append(new)
                    nxt.append(new)
        frontier = nxt
    return sorted(roots, key=lambda k: (sum(k), tuple(-c for c in k)))


def build_root_system(type_label: str) -> RootSystem:
    series, n = parse_type(type_label)
    d, edges = _dynkin_data(series, n)
    gram = [[0] * n for _ in range(n)]  # (alpha_i, alpha_j)
    for i in range(n):
        gram[i][i] = 2 * d[i]
    for i, j in edges:
        gram[i][j] = gram[j][i] = -max(d[i], d[j])
    cartan = tuple(
        tuple(Fraction(2 * gram[i][j], gram[j][j]) for j in range(n)) for i in range(n)
    )
    assert all(c.denominator == 1 for row in cartan for c in row)
    cartan = tuple(tuple(int(c) for c in row) for row in cartan)
    roots = _closure_positive_roots(cartan)
    label = f"{series}{n}"
    proto = RootSystem(label, n, cartan, tuple(d), tuple(roots), (), ())
    coroots = []
    for k in roots:
        hl = proto.root_half_length(k)
        cor = [Fraction(k[i] * d[i]) / hl for i in range(n)]
        assert all(c.denominator == 1 for c in cor)
        coroots.append(tuple(int(c) for c in cor))
    return RootSystem(
        label,
        n,
        cartan,
        tuple(d),
        tuple(roots),
        tuple(proto.root_to_weight(k) for k in roots),
        tuple(coroots),
    )
