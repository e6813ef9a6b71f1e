"""Independent brute-force routes used to check the library.

Nothing here calls the library's Bruhat order, KL table or length formula;
only group multiplication and generators are shared.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def cayley_lengths(W, generators, max_length):
    """Word length by breadth-first search in the Cayley graph."""
    dist = {W.identity: 0}
    frontier = [W.identity]
    for d in range(1, max_length + 1):
        nxt = []
        for x in frontier:
            for i in generators:
                y = x * W.s(i)
                if y not in dist:
                    dist[y] = d
                    nxt.append(y)
        frontier = nxt
    return dist


def cayley_word(W, generators, target, max_length):
    """A shortest word for ``target`` from BFS parent pointers."""
    parent = {W.identity: None}
    frontier = [W.identity]
    for _ in range(max_length):
        nxt = []
        for x in frontier:
            for i in generators:
                y = x * W.s(i)
                if y not in parent:
                    parent[y] = (x, i)
                    nxt.append(y)
        frontier = nxt
        if target in parent:
            break
    word = []
    x = target
    while parent[x] is not None:
        x, i = parent[x]
        word.append(i)
    return tuple(reversed(word))


def subword_elements(W, word):
    """All products of subwords of ``word``."""
    out = set()
    for mask in itertools.product((0, 1), repeat=len(word)):
        x = W.identity
        for keep, i in zip(mask, word):
            if keep:
                x = x * W.s(i)
        out.add(x)
    return out


class NaiveKL:
    """Classical P_{x,w}(q) as coefficient lists, by the textbook recursion.

    For sw < w (v = sw), with c = 1 if sx < x else 0:
        P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v}
                  - sum_{z <= v, sz < z} mu(z,v) q^{(l(w)-l(z))/2} P_{x,z}
    Lengths come from Cayley BFS and Bruhat order from subwords.
    """

    def __init__(self, W, generators, max_length):
        self.W = W
        self.gens = tuple(generators)
        self.len = cayley_lengths(W, self.gens, max_length + 1)
        self.words = {}
        self.below = {}
        self.memo = {}

    def word(self, w):
        if w not in self.words:
            self.words[w] = cayley_word(self.W, self.gens, w, self.len[w])
        return self.words[w]

    def lower(self, w):
        if w not in self.below:
            self.below[w] = subword_elements(self.W, self.word(w))
        return self.below[w]

    def leq(self, x, w):
        return x in self.lower(w)

    def P(self, x, w):
        key = (x, w)
        if key in self.memo:
            return self.memo[key]
        if not self.leq(x, w):
            res = []
        elif x == w:
            res = [1]
        else:
            W, L = self.W, self.len
            i = next(i for i in self.gens if L[W.s(i) * w] < L[w])
            s = W.s(i)
            v = s * w
            sx = s * x
            c = 1 if L[sx] < L[x] else 0
            res = _add(_shift(self.P(sx, v), 1 - c), _shift(self.P(x, v), c))
            for z in self.lower(v):
                if L[s * z] < L[z] and z != v:
                    m = self.mu(z, v)
                    if m:
                        d = L[w] - L[z]
                        res = _add(res, _shift([-m * a for a in self.P(x, z)], d // 2))
        while res and res[-1] == 0:
            res.pop()
        self.memo[key] = res
        return res

    def mu(self, z, v):
        d = self.len[v] - self.len[z]
        if d % 2 == 0:
            return 0
        P = self.P(z, v)
        k = (d - 1) // 2
        return P[k] if k < len(P) else 0


def _shift(p, k):
    return [0] * k + list(p) if p else []


def _add(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def weyl_dimension_bruteforce(R, lam):
    """prod <lam+rho, a^vee>/<rho, a^vee> with coroots rebuilt from roots."""
    num = Fraction(1)
    for k in R.positive_roots:
        cor = R.coroot_of(k)
        num *= Fraction(sum((Fraction(a) + 1) * c for a, c in zip(lam, cor)), sum(cor))
    return num
