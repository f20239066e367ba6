"""Constructors for the named hypergraph families used throughout the suite.

Complete graphs, matchings, stars, split graphs, pattern extensions, the
fifteen 4-uniform case families on [n] that drive the verification tables,
and the 3-uniform K5 minus two edges sharing a pair.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .core import Hypergraph, uncovered_pairs

__all__ = [
    "complete",
    "matching",
    "star",
    "split",
    "split_part_size",
    "extension",
    "case_family",
    "k53minus2",
    "star_lambda",
    "complete_lambda",
    "FamilySpec",
]


def complete(t: int, r: int) -> Hypergraph:
    """K_t^r: all r-subsets of {1..t}."""
    if t < r:
        raise ValueError(f"complete graph needs t >= r, got t={t}, r={r}")
    return Hypergraph(r, t, frozenset(itertools.combinations(range(1, t + 1), r)))


def matching(t: int, r: int) -> Hypergraph:
    """M_t^r: t pairwise disjoint r-edges on rt vertices."""
    if t < 1:
        raise ValueError("matching needs t >= 1")
    edges = frozenset(
        tuple(range((k - 1) * r + 1, k * r + 1)) for k in range(1, t + 1)
    )
    return Hypergraph(r, r * t, edges)


def star(n: int, r: int) -> Hypergraph:
    """All r-edges through vertex 1."""
    if n < r:
        raise ValueError(f"star needs n >= r, got n={n}, r={r}")
    edges = frozenset(
        (1,) + f for f in itertools.combinations(range(2, n + 1), r - 1)
    )
    return Hypergraph(r, n, edges)


def split_part_size(n: int, r: int) -> int:
    """The |A| maximizing a * C(n-a, r-1), smallest on ties."""
    best_a, best = 1, -1
    for a in range(1, n - r + 2):
        cnt = a * math.comb(n - a, r - 1)
        if cnt > best:
            best_a, best = a, cnt
    return best_a


def split(n: int, r: int, a: int | None = None) -> Hypergraph:
    """S^r(n): edges with one vertex in A = {1..a} and r-1 in B = {a+1..n}.

    When ``a`` is omitted it is chosen to maximize the edge count.
    """
    if n < r:
        raise ValueError(f"split needs n >= r, got n={n}, r={r}")
    if a is None:
        a = split_part_size(n, r)
    if not 1 <= a <= n - r + 1:
        raise ValueError(f"part size a={a} outside 1..{n - r + 1}")
    edges = set()
    for v in range(1, a + 1):
        for f in itertools.combinations(range(a + 1, n + 1), r - 1):
            edges.add(tuple(sorted((v,) + f)))
    return Hypergraph(r, n, frozenset(edges))


def extension(F: Hypergraph, p: int) -> Hypergraph:
    """Extend F to p core vertices and cover every uncovered core pair.

    Core vertices are 1..p (vertices |V(F)|+1..p start isolated).  For each
    uncovered core pair {i,j}, taken in lexicographic order, a block of r-2
    fresh vertices is appended and the edge {i,j} + block is added.  Blocks
    are pairwise disjoint, so the output is deterministic.
    """
    if p < F.n:
        raise ValueError(f"extension needs p >= |V(F)| = {F.n}, got {p}")
    if F.r < 3:
        raise ValueError("extension needs uniformity >= 3")
    core = Hypergraph(F.r, p, F.edges)
    missing = uncovered_pairs(core)
    edges = set(F.edges)
    nxt = p + 1
    for (i, j) in missing:
        block = tuple(range(nxt, nxt + F.r - 2))
        nxt += F.r - 2
        edges.add(tuple(sorted((i, j) + block)))
    return Hypergraph(F.r, nxt - 1, frozenset(edges))


def k53minus2() -> Hypergraph:
    """K_5^3 without the two edges {2,4,5} and {3,4,5}."""
    edges = set(itertools.combinations(range(1, 6), 3)) - {(2, 4, 5), (3, 4, 5)}
    return Hypergraph(3, 5, frozenset(edges))


def star_lambda(n: int) -> Fraction:
    """Exact Lagrangian of the 4-uniform star on n vertices."""
    if n < 4:
        raise ValueError("needs n >= 4")
    return Fraction(9 * (n - 2) * (n - 3), 512 * (n - 1) ** 2)


def complete_lambda(t: int, r: int) -> Fraction:
    """Exact Lagrangian of K_t^r (uniform weighting)."""
    return Fraction(math.comb(t, r), t**r)


def _pairs(lo, hi):
    return itertools.combinations(range(lo, hi + 1), 2)


def case_family(k: int, n: int) -> Hypergraph:
    """The k-th 4-uniform case family on [n] (k in 1..15, n >= 8).

    Families 1..14 share the base layer {1,2,i,j} for 3 <= i < j <= n and
    add their own edge groups; family 15 is the star.
    """
    if not 1 <= k <= 15:
        raise ValueError(f"k must be in 1..15, got {k}")
    if n < 8:
        raise ValueError(f"case families need n >= 8, got {n}")
    if k == 15:
        return star(n, 4)

    edges = {(1, 2, i, j) for i, j in _pairs(3, n)}

    def add(*vs):
        edges.add(tuple(sorted(vs)))

    if k == 1:
        for i in (1, 2):
            for j, kk, l in itertools.combinations(range(3, 8), 3):
                add(i, j, kk, l)
    elif k == 2:
        for m in range(5, n + 1):
            add(1, 3, 4, m)
            add(2, 3, 4, m)
        for l, m in _pairs(5, 7):
            add(1, 3, l, m)
            add(1, 4, l, m)
            add(2, 3, l, m)
            add(2, 4, l, m)
        add(1, 5, 6, 7)
    elif k == 3:
        for i, j in _pairs(4, n):
            add(1, 3, i, j)
            add(2, 3, i, j)
        add(1, 4, 5, 6)
        add(2, 4, 5, 6)
    elif k == 4:
        for m in range(5, n + 1):
            add(1, 3, 4, m)
            add(2, 3, 4, m)
        for l in range(6, n + 1):
            add(1, 3, 5, l)
            add(1, 4, 5, l)
            add(2, 3, 5, l)
            add(2, 4, 5, l)
    elif k == 5:
        for i, j in _pairs(4, n):
            add(1, 3, i, j)
        add(1, 4, 5, 6)
        add(1, 4, 5, 7)
        add(1, 5, 6, 7)
        add(2, 3, 4, 5)
        for m in range(6, n + 1):
            add(2, 3, 4, m)
            add(2, 3, 5, m)
        add(2, 3, 6, 7)
        add(2, 4, 5, 6)
        add(2, 4, 5, 7)
    elif k == 6:
        for m in range(5, n + 1):
            add(1, 3, 4, m)
            add(2, 3, 4, m)
        for l in range(6, n + 1):
            add(1, 3, 5, l)
            add(1, 4, 5, l)
            add(2, 3, 5, l)
        add(1, 3, 6, 7)
        add(1, 4, 6, 7)
        add(1, 5, 6, 7)
        add(2, 4, 5, 6)
        add(2, 4, 5, 7)
    elif k == 7:
        for i, j in _pairs(4, n):
            add(1, 3, i, j)
        for m in range(6, n + 1):
            add(1, 4, 5, m)
            add(2, 3, 4, m)
            add(2, 3, 5, m)
        add(2, 3, 4, 5)
        add(2, 4, 5, 6)
    elif k == 8:
        for i, j in _pairs(4, n):
            add(1, 3, i, j)
        for m in range(6, n + 1):
            add(1, 4, 5, m)
            add(2, 3, 4, m)
        add(1, 4, 6, 7)
        add(2, 3, 4, 5)
        add(2, 3, 5, 6)
        add(2, 3, 5, 7)
        add(2, 4, 5, 6)
    elif k == 9:
        for i, j in _pairs(4, n):
            add(1, 3, i, j)
        for s, t in _pairs(5, n):
            add(1, 4, s, t)
        for p in range(5, n + 1):
            add(2, 3, 4, p)
        add(2, 3, 5, 6)
        add(2, 4, 5, 6)
    elif k == 10:
        for m in range(5, n + 1):
            add(1, 3, 4, m)
        for l in range(6, n + 1):
            add(1, 3, 5, l)
            add(1, 4, 5, l)
        for m in range(7, n + 1):
            add(1, 3, 6, m)
            add(1, 4, 6, m)
            add(1, 5, 6, m)
        add(2, 3, 4, 5)
        add(2, 3, 4, 6)
        add(2, 3, 4, 7)
        add(2, 3, 5, 6)
        add(2, 4, 5, 6)
    elif k == 11:
        for i, j in _pairs(4, n):
            add(1, 3, i, j)
        for m in range(6, n + 1):
            add(1, 4, 5, m)
        for l in range(7, n + 1):
            add(1, 4, 6, l)
            add(1, 5, 6, l)
        add(2, 3, 4, 5)
        add(2, 3, 4, 6)
        add(2, 3, 4, 7)
        add(2, 3, 5, 6)
    elif k == 12:
        for i, j in _pairs(4, n):
            add(1, 3, i, j)
        for i, j in _pairs(5, n):
            add(1, 4, i, j)
        add(1, 5, 6, 7)
        add(2, 3, 4, 5)
        add(2, 3, 4, 6)
        add(2, 3, 4, 7)
    elif k == 13:
        for i, j in _pairs(4, n):
            add(1, 3, i, j)
        for i, j in _pairs(5, n):
            add(1, 4, i, j)
        for m in range(7, n + 1):
            add(1, 5, 6, m)
        add(2, 3, 4, 5)
        add(2, 3, 4, 6)
    elif k == 14:
        for i, j in _pairs(4, n):
            add(1, 3, i, j)
        for i, j in _pairs(5, n):
            add(1, 4, i, j)
        for i, j in _pairs(6, n):
            add(1, 5, i, j)
        add(2, 3, 4, 5)

    return Hypergraph(4, n, frozenset(edges))


@dataclass(frozen=True)
class FamilySpec:
    """A named family plus its parameters, as accepted on the command line."""

    name: str
    n: int = 0
    r: int = 4
    t: int = 2
    p: int = 0
    a: int | None = None

    def build(self) -> Hypergraph:
        name = self.name
        if name == "complete":
            return complete(self.n, self.r)
        if name == "matching":
            return matching(self.t, self.r)
        if name == "star":
            return star(self.n, self.r)
        if name == "split":
            return split(self.n, self.r, self.a)
        if name == "extension":
            p = self.p or 2 * self.r
            return extension(matching(self.t, self.r), p)
        if name == "k53minus2":
            return k53minus2()
        if name.startswith("case"):
            try:
                k = int(name[4:])
            except ValueError:
                raise ValueError(f"unknown family {name!r}") from None
            return case_family(k, self.n)
        raise ValueError(f"unknown family {name!r}")
