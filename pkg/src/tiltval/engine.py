"""Weyl polynomials, the two-variable sums Delta(y, W_s, w, mu, lam), and the
cell-by-cell search for tilting characters whose dimension has p-adic
valuation equal to the a-value of the cell.

Variables of every two-variable ``MultiPoly`` are ordered
``(m1..mr, l1..lr)``: mu-coordinates first, then lambda-coordinates.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Sequence

import sympy

from . import kernels
from .affine import AFFINE, AffineElement, AffineWeylGroup
from .antispherical import ParabolicKLTable, TiltingCharacter, tilting_character
from .hecke import KLTable, Parabolic
from .polynomial import MultiPoly
from .rootsys import EnumerationCapExceeded, FiniteWeylElement, RootSystem, mat_mul

log = logging.getLogger(__name__)


class NotFound(LookupError):
    pass


def weyl_polynomial(R: RootSystem) -> MultiPoly:
    """Delta(lam) = prod_{alpha>0} <lam, alpha^vee> / <rho, alpha^vee>."""
    factors = [MultiPoly.linear([Fraction(c, sum(cor)) for c in cor]) for cor in R.positive_coroots]
    return MultiPoly.product(factors, R.rank)


def weyl_dimension(R: RootSystem, lam: Sequence) -> Fraction:
    """Delta(lam + rho) evaluated directly."""
    shifted = [Fraction(a) + 1 for a in lam]
    return reduce(
        lambda acc, cor: acc * Fraction(R.pairing(shifted, cor), sum(cor)), R.positive_coroots, Fraction(1)
    )


def delta_numerator(R: RootSystem, mu_map, lam_map) -> dict[tuple[int, ...], int]:
    """prod_{alpha>0} <M mu + L lam, alpha^vee> as integer terms; divide by weyl_denominator for Delta."""
    r = R.rank
    terms = {(0,) * (2 * r): 1}
    for cor in R.positive_coroots:
        form = [sum(cor[i] * mu_map[i][j] for i in range(r)) for j in range(r)]
        form += [sum(cor[i] * lam_map[i][j] for i in range(r)) for j in range(r)]
        nxt: dict[tuple[int, ...], int] = {}
        for e, c in terms.items():
            for k, f in enumerate(form):
                if f:
                    e2 = e[:k] + (e[k] + 1,) + e[k + 1 :]
                    nxt[e2] = nxt.get(e2, 0) + c * f
        terms = {e: c for e, c in nxt.items() if c}
    return terms


def weyl_denominator(R: RootSystem) -> int:
    """prod_{alpha>0} <rho, alpha^vee>."""
    return reduce(lambda acc, cor: acc * sum(cor), R.positive_coroots, 1)


def delta_two_var(R: RootSystem, mu_map, lam_map) -> MultiPoly:
    """Delta(M mu + L lam) as a polynomial in (mu, lam) for integer matrices M, L."""
    d = weyl_denominator(R)
    return MultiPoly(2 * R.rank, {e: Fraction(c, d) for e, c in delta_numerator(R, mu_map, lam_map).items()})


def p_valuation(n: int, p: int) -> int:
    """Largest k with p**k dividing n."""
    if n == 0:
        raise ValueError("valuation of zero is infinite")
    if p < 2 or not sympy.isprime(p):
        raise ValueError(f"{p} is not prime")
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def lowest_mu_degree(P: MultiPoly, rank: int) -> int | None:
    return P.lowest_degree_in(range(rank))


@dataclass
class CellReport:
    type: str
    p: int
    s: int
    cell: list[list[int]]
    a: int
    y: list[int] | None = None
    w: list[int] | None = None
    y_length: int | None = None
    y_candidates: list[list[int]] = field(default_factory=list)
    lambda1: list[int] | None = None
    dim: int | None = None
    valuation: int | None = None
    scan: list[dict] = field(default_factory=list)
    positivity: bool | None = None
    two_form_consistent: bool | None = None
    lr_support: str = "unverified"
    status: str = "pending"
    error: str | None = None

    def to_json(self) -> dict:
        return asdict(self)


class Engine:
    """All tables for one root system, shared by the checks and the verifier."""

    def __init__(self, type_label: str, max_kl_length: int = 40, max_y_length: int = 20):
        self.W = AffineWeylGroup(type_label)
        self.R = self.W.R
        self.rank = self.R.rank
        self.N = self.R.N
        self.max_y_length = max_y_length
        self.kl = KLTable(self.W, max_length=max_kl_length)
        self.pkl = ParabolicKLTable(self.W, max_length=max_kl_length)
        self._parabolics: dict[int, Parabolic] = {}
        self._delta_sums: dict[tuple, MultiPoly] = {}
        self._delta_terms: dict[tuple, dict] = {}
        self._star: dict[tuple, MultiPoly] = {}
        self._finite = None
        self.mu_vars = tuple(range(self.rank))
        self.lam_vars = tuple(range(self.rank, 2 * self.rank))

    @property
    def type_label(self) -> str:
        return self.R.type_label

    def parabolic(self, s: int) -> Parabolic:
        if s not in self._parabolics:
            self._parabolics[s] = Parabolic(self.kl, s)
        return self._parabolics[s]

    def finite_weyl_group(self) -> list[FiniteWeylElement]:
        if self._finite is None:
            self._finite = [x.finite_part for x in self.parabolic(AFFINE).elements]
        return self._finite

    def invariant_point(self, s: int) -> tuple[Fraction, ...]:
        return self.W.invariant_point(s)

    # -- two-variable Weyl sums ---------------------------------------------
    def _delta(self, mu_map, lam_map) -> dict[tuple[int, ...], int]:
        key = (mu_map, lam_map)
        if key not in self._delta_terms:
            self._delta_terms[key] = delta_numerator(self.R, mu_map, lam_map)
        return self._delta_terms[key]

    def _combine(self, pieces) -> MultiPoly:
        """sum c * Delta(...) over (c, numerator) pairs, divided out once."""
        acc: dict[tuple[int, ...], int] = {}
        for c, num in pieces:
            for e, v in num.items():
                acc[e] = acc.get(e, 0) + c * v
        d = weyl_denominator(self.R)
        return MultiPoly(2 * self.rank, {e: Fraction(v, d) for e, v in acc.items() if v})

    def delta_sum(self, y: FiniteWeylElement, s: int, w: AffineElement) -> MultiPoly:
        """sum_{x<=w} p_{x,w} Delta(mu + ȳ x̄ ȳ^-1 lam)."""
        P = self.parabolic(s)
        if w not in P:
            raise ValueError("w must lie in W_s")
        key = (y.matrix, s, w)
        if key not in self._delta_sums:
            ident = FiniteWeylElement.identity(self.rank).matrix
            yinv = y.inverse().matrix
            self._delta_sums[key] = self._combine(
                (c, self._delta(ident, mat_mul(mat_mul(y.matrix, x.matrix), yinv)))
                for x, c in self.kl.kl_basis_at_one(w).items()
            )
        return self._delta_sums[key]

    def star_sum(self, s: int, w: AffineElement) -> MultiPoly:
        """sum_{x<=w} p_{x,w} (-1)^x Delta(x̄^-1 mu + lam)."""
        key = (s, w)
        if key not in self._star:
            ident = FiniteWeylElement.identity(self.rank).matrix
            self._star[key] = self._combine(
                (c * (-1) ** self.W.length(x), self._delta(x.finite_part.inverse().matrix, ident))
                for x, c in self.kl.kl_basis_at_one(w).items()
            )
        return self._star[key]

    def star_identity_check(self, s: int, w: AffineElement) -> bool:
        ident = FiniteWeylElement.identity(self.rank)
        return self.delta_sum(ident, s, w) == self.star_sum(s, w)

    def reduction_to_identity_check(self, y: FiniteWeylElement, s: int, w: AffineElement) -> bool:
        """Delta(y, ..., mu, lam) == (-1)^y Delta(1, ..., y^-1 mu, y^-1 lam).

        Skew-symmetry of Delta produces the sign; degrees in mu are unaffected.
        """
        yinv = y.inverse().matrix
        r = self.rank
        images = [MultiPoly.linear(list(row) + [0] * r) for row in yinv]
        images += [MultiPoly.linear([0] * r + list(row)) for row in yinv]
        base = self.delta_sum(FiniteWeylElement.identity(r), s, w)
        return self.delta_sum(y, s, w) == base.compose_linear(images) * y.sign()

    def check_lemma_lowdeg(self, s: int, w: AffineElement) -> bool:
        """Lowest mu-degree of Delta(y, W_s, w, mu, lam) is >= a(w) for every y in W_f."""
        a = self.parabolic(s).a_function(w)
        for y in self.finite_weyl_group():
            low = lowest_mu_degree(self.delta_sum(y, s, w), self.rank)
            if low is not None and low < a:
                return False
        return True

    def top_component(self, y: FiniteWeylElement, s: int, w: AffineElement, a: int) -> MultiPoly:
        """The lam-degree (N - a) part of delta_sum."""
        return self.delta_sum(y, s, w).component(self.lam_vars, self.N - a)

    # -- the minimal-y search ----------------------------------------------------
    def level_one_image(self, y: AffineElement, s: int) -> tuple[Fraction, ...]:
        """m_y = ȳ(mu_s) + t(y); the level-p image of p mu_s is p m_y."""
        return tuple(Fraction(v) for v in y.act(self.invariant_point(s), 1))

    def satisfies_star_star(self, y: AffineElement, s: int, w: AffineElement, a: int) -> bool:
        comp = self.top_component(y.finite_part, s, w, a)
        m = self.level_one_image(y, s)
        return not comp.substitute(dict(zip(self.mu_vars, m))).is_zero()

    def find_minimal_y(
        self, s: int, cell: Sequence[AffineElement], max_length: int | None = None
    ) -> tuple[AffineElement, AffineElement, list[AffineElement]]:
        """Shortest y in W^f (ties by reduced word) and w in the cell with (**).

        Also returns every y of that same length satisfying the property.
        """
        max_length = self.max_y_length if max_length is None else max_length
        P = self.parabolic(s)
        a = P.a_function(cell[0])
        quotient = self.W.enumerate_Wf_quotient(max_length)
        for length, layer in itertools.groupby(quotient, key=self.W.length):
            hits = []
            for y in layer:
                for w in cell:
                    if self.satisfies_star_star(y, s, w, a):
                        hits.append((y, w))
                        break
            if hits:
                y, w = hits[0]
                return y, w, [h[0] for h in hits]
        raise NotFound(f"no y of length <= {max_length} satisfies the nonvanishing property")

    # -- dimensions -------------------------------------------------------------
    def lowest_alcove_weights(self, p: int) -> list[tuple[int, ...]]:
        """Integral lam_1 with 0 < <lam_1 + rho, alpha^vee> < p, lexicographic."""
        top = self.R.coroot_of(self.R.highest_short_root)
        out = []
        for shifted in itertools.product(range(1, p), repeat=self.rank):
            if sum(a * c for a, c in zip(shifted, top)) < p:
                out.append(tuple(a - 1 for a in shifted))
        return out

    def _kernel_inputs(self, std: dict[AffineElement, int]):
        items = sorted(std.items(), key=lambda kv: (self.W.length(kv[0]), self.W.reduced_word(kv[0])))
        mats = [x.matrix for x, _ in items]
        trans = [x.translation for x, _ in items]
        coeffs = [c for _, c in items]
        return mats, trans, coeffs

    def dimensions(self, std: dict[AffineElement, int], weights: Sequence[Sequence[int]], p: int, backend=None) -> list[int]:
        """sum_z c_z Delta(z . lam_1 + rho) for each lam_1 in ``weights``."""
        if not std:
            raise ValueError("empty character")
        mats, trans, coeffs = self._kernel_inputs(std)
        points = [[int(a) + 1 for a in lam] for lam in weights]
        nums = kernels.weyl_numerators(points, mats, trans, coeffs, self.R.positive_coroots, p, backend=backend)
        denom = 1
        for cor in self.R.positive_coroots:
            denom *= sum(cor)
        out = []
        for num in nums:
            if num % denom:
                raise ArithmeticError("non-integral tilting dimension")
            if num <= 0:
                raise ArithmeticError("non-positive tilting dimension")
            out.append(num // denom)
        return out

    def tilting_dimension(self, std: dict[AffineElement, int], lam1: Sequence[int], p: int) -> int:
        if not self.R.in_lowest_alcove(lam1, p):
            raise ValueError(f"{list(lam1)} is not in the lowest alcove for p={p}")
        return self.dimensions(std, [lam1], p)[0]

    def tilting_dimension_exact(self, std: dict[AffineElement, int], lam1: Sequence, p: int) -> Fraction:
        """Same sum with Fractions and the dot action; an independent route."""
        total = Fraction(0)
        for z, c in std.items():
            total += c * weyl_dimension(self.R, self.W.dot_action(z, lam1, p))
        return total

    def split_form_dimension(self, char: TiltingCharacter, s: int, lam1: Sequence, p: int) -> Fraction:
        """sum_{y1} n_{y1,y}(1) Delta(ȳ1, W_s, w, y1 p mu_s, ȳ1 lam), lam = lam1 + rho - p mu_s."""
        mu_s = self.invariant_point(s)
        lam = [Fraction(a) + 1 - p * m for a, m in zip(lam1, mu_s)]
        total = Fraction(0)
        for y1, n in self.pkl.basis_coeffs(char.y).items():
            n1 = n.evaluate(1)
            if not n1:
                continue
            yb = y1.finite_part
            mu = [p * m for m in self.level_one_image(y1, s)]
            poly = self.delta_sum(yb, s, char.w)
            total += n1 * poly.evaluate(list(mu) + list(yb.act(lam)))
        return total

    # -- the verifier -------------------------------------------------------------
    def verify_cell(self, s: int, cell: Sequence[AffineElement], p: int) -> CellReport:
        W = self.W
        P = self.parabolic(s)
        a = P.a_function(cell[0])
        rep = CellReport(self.type_label, p, s, [list(W.reduced_word(x)) for x in cell], a)
        try:
            y, w, cands = self.find_minimal_y(s, cell)
        except (NotFound, EnumerationCapExceeded) as exc:
            rep.status = "not-found"
            rep.error = str(exc)
            return rep
        rep.y, rep.w = list(W.reduced_word(y)), list(W.reduced_word(w))
        rep.y_length = W.length(y)
        rep.y_candidates = [list(W.reduced_word(c)) for c in cands]
        try:
            char = tilting_character(self.pkl, self.kl, y, w, check=False)
        except EnumerationCapExceeded as exc:
            rep.status = "not-found"
            rep.error = str(exc)
            return rep
        rep.positivity = char.is_positive
        weights = self.lowest_alcove_weights(p)
        dims = self.dimensions(char.standard_at_one, weights, p)
        vals = [p_valuation(d, p) for d in dims]
        rep.scan = [{"lambda1": list(l), "dim": d, "valuation": v} for l, d, v in zip(weights, dims, vals)]
        best = min(range(len(vals)), key=lambda k: vals[k])
        rep.lambda1 = list(weights[best])
        rep.dim = dims[best]
        rep.valuation = vals[best]
        rep.two_form_consistent = self.split_form_dimension(char, s, weights[best], p) == dims[best]
        if rep.valuation == a:
            rep.status = "verified"
        elif rep.valuation < a:
            rep.status = "weak"
        else:
            rep.status = "failed-p-too-small"
        if not rep.positivity:
            rep.status = "error"
            rep.error = "canonical expansion has negative coefficients"
        return rep

    def verify_main_theorem(self, p: int) -> list[CellReport]:
        """One report per (s, two-sided cell of W_s), in s order then cell order."""
        if p <= self.R.coxeter_number or not sympy.isprime(p):
            raise ValueError(f"p must be a prime larger than h={self.R.coxeter_number}")
        reports = []
        for s in self.W.S:
            for cell in self.parabolic(s).two_sided_cells():
                rep = self.verify_cell(s, cell, p)
                log.info("%s s=%d a=%d: %s", self.type_label, s, rep.a, rep.status)
                reports.append(rep)
        return reports


def verify_main_theorem(type_label: str, p: int, max_y_length: int = 20, max_kl_length: int = 40) -> list[CellReport]:
    """Build an engine for ``type_label`` and report on every parabolic cell at p."""
    return Engine(type_label, max_kl_length=max_kl_length, max_y_length=max_y_length).verify_main_theorem(p)
