"""Uniform hypergraphs on vertex set {1..n} and the basic structural maps.

Everything downstream (solvers, compression, symmetrization) works with the
immutable :class:`Hypergraph` defined here.  Edges are canonically sorted
tuples; equality of graphs is equality of (r, n, edge set).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

__all__ = [
    "Hypergraph",
    "link",
    "link_diff",
    "induced",
    "covers_pairs",
    "uncovered_pairs",
    "blowup",
    "equivalent",
    "same_links",
    "degree",
    "min_degree",
]


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph with vertices 1..n.

    ``edges`` is a frozenset of strictly increasing r-tuples.  Instances are
    immutable and hashable; all operations below are pure functions.
    """

    r: int
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"uniformity must be >= 1, got {self.r}")
        if self.n < 0:
            raise ValueError(f"vertex count must be >= 0, got {self.n}")
        object.__setattr__(self, "edges", frozenset(self.edges))
        for e in self.edges:
            if not isinstance(e, tuple) or len(e) != self.r:
                raise ValueError(f"edge {e!r} does not have arity {self.r}")
            if any(e[i] >= e[i + 1] for i in range(len(e) - 1)):
                raise ValueError(f"edge {e!r} is not strictly increasing")
            if e[0] < 1 or e[-1] > self.n:
                raise ValueError(f"edge {e!r} out of range 1..{self.n}")

    @classmethod
    def from_edges(cls, r, n, edges):
        """Build a graph from any iterable of vertex iterables.

        Each edge is sorted into canonical form; repeated edges collapse.
        Edges with repeated vertices are rejected.
        """
        canon = set()
        for e in edges:
            t = tuple(sorted(e))
            if len(set(t)) != len(t):
                raise ValueError(f"edge {e!r} has repeated vertices")
            canon.add(t)
        return cls(r, n, frozenset(canon))

    @property
    def vertices(self):
        return range(1, self.n + 1)

    def edge_list(self):
        """Edges in sorted (lexicographic) order, for deterministic iteration."""
        return sorted(self.edges)

    def __len__(self):
        return len(self.edges)

    def __contains__(self, e):
        return tuple(sorted(e)) in self.edges

    def __repr__(self):
        return f"Hypergraph(r={self.r}, n={self.n}, m={len(self.edges)})"


def degree(G: Hypergraph, v: int) -> int:
    """Number of edges containing v."""
    return sum(1 for e in G.edges if v in e)


def min_degree(G: Hypergraph) -> int:
    """Minimum vertex degree; 0 for the graph on no vertices."""
    if G.n == 0:
        return 0
    deg = dict.fromkeys(G.vertices, 0)
    for e in G.edges:
        for v in e:
            deg[v] += 1
    return min(deg.values())


def link(G: Hypergraph, T) -> Hypergraph:
    """The (r-|T|)-graph {e : e disjoint from T, e + T an edge of G}.

    Vertex labels are preserved (the result lives on 1..n as well).
    """
    T = frozenset(T)
    if not T <= set(G.vertices):
        raise ValueError(f"link set {sorted(T)} not within 1..{G.n}")
    if len(T) >= G.r:
        raise ValueError(f"link set size {len(T)} must be < uniformity {G.r}")
    out = set()
    for e in G.edges:
        se = set(e)
        if T <= se:
            out.add(tuple(sorted(se - T)))
    return Hypergraph(G.r - len(T), G.n, frozenset(out))


def link_diff(G: Hypergraph, i: int, j: int) -> frozenset:
    """L(i \\ j): the (r-1)-sets F with j not in F, F+{i} an edge, F+{j} not.

    Returned as a frozenset of sorted tuples (not a Hypergraph: it is a set
    family used for comparisons and compression).
    """
    if i == j:
        raise ValueError("link_diff requires distinct vertices")
    out = set()
    for e in G.edges:
        if i in e and j not in e:
            rest = tuple(sorted(set(e) - {i}))
            if tuple(sorted(rest + (j,))) not in G.edges:
                out.add(rest)
    return frozenset(out)


def induced(G: Hypergraph, vs):
    """Induced subgraph on ``vs``, relabeled to 1..|vs| preserving order.

    Returns ``(H, relabel)`` where ``relabel`` maps old labels to new.
    """
    vs = sorted(set(vs))
    if vs and (vs[0] < 1 or vs[-1] > G.n):
        raise ValueError(f"vertex set {vs} not within 1..{G.n}")
    relabel = {v: k for k, v in enumerate(vs, start=1)}
    keep = set(vs)
    out = frozenset(
        tuple(relabel[v] for v in e) for e in G.edges if keep.issuperset(e)
    )
    return Hypergraph(G.r, len(vs), out), relabel


def uncovered_pairs(G: Hypergraph):
    """All pairs {i,j} that appear together in no edge, as sorted tuples."""
    covered = set()
    for e in G.edges:
        covered.update(itertools.combinations(e, 2))
    return [
        p for p in itertools.combinations(G.vertices, 2) if p not in covered
    ]


def covers_pairs(G: Hypergraph) -> bool:
    """True iff every vertex pair lies in some edge."""
    need = G.n * (G.n - 1) // 2
    covered = set()
    for e in G.edges:
        covered.update(itertools.combinations(e, 2))
        if len(covered) == need:
            return True
    return len(covered) == need


def blowup(G: Hypergraph, sizes) -> Hypergraph:
    """Replace vertex v by a class of ``sizes[v-1]`` vertices; edges become
    all transversals of the original edges.

    Classes are consecutive blocks: vertex v maps to labels
    offset(v)+1 .. offset(v)+sizes[v-1].
    """
    sizes = list(sizes)
    if len(sizes) != G.n:
        raise ValueError(f"need {G.n} sizes, got {len(sizes)}")
    if any(s < 1 for s in sizes):
        raise ValueError("all blowup sizes must be >= 1")
    offset = [0]
    for s in sizes:
        offset.append(offset[-1] + s)
    classes = {
        v: range(offset[v - 1] + 1, offset[v] + 1) for v in G.vertices
    }
    out = set()
    for e in G.edges:
        for combo in itertools.product(*(classes[v] for v in e)):
            out.add(tuple(sorted(combo)))
    return Hypergraph(G.r, offset[-1], frozenset(out))


def same_links(G: Hypergraph, i: int, j: int) -> bool:
    """True iff swapping i and j is an automorphism of G.

    Equivalent to L(i\\j) and L(j\\i) both empty: every edge through exactly
    one of i, j has its mirror present.
    """
    for e in G.edges:
        has_i, has_j = i in e, j in e
        if has_i == has_j:
            continue
        a, b = (i, j) if has_i else (j, i)
        mirror = tuple(sorted((set(e) - {a}) | {b}))
        if mirror not in G.edges:
            return False
    return True


def equivalent(G: Hypergraph, i: int, j: int) -> bool:
    """Vertex equivalence: mirrored links and {i,j} covered by no edge."""
    if i == j:
        raise ValueError("equivalent requires distinct vertices")
    for e in G.edges:
        if i in e and j in e:
            return False
    return same_links(G, i, j)
