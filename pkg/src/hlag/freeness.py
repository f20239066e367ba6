"""Matching numbers, core- and hom-freeness, and the exhaustive
left-compressed extremal search at small n."""

from __future__ import annotations

import itertools
import multiprocessing
from dataclasses import dataclass

import numpy as np

from .core import Hypergraph
from .errors import UnsupportedSizeError
from .families import extension
from .solver import SolverConfig, maximize

__all__ = [
    "FreenessReport",
    "matching_number",
    "is_matching_free",
    "is_core_free",
    "is_hom_free",
    "hom_search",
    "enumerate_left_compressed_free",
    "extremal_lambda_search",
    "SearchResult",
]

ENUM_GUARD_N = 9
HOM_GUARD_N = 10


@dataclass(frozen=True)
class FreenessReport:
    pattern: str
    free: bool
    witness: tuple | None = None


def _edge_masks(G: Hypergraph):
    return [sum(1 << (v - 1) for v in e) for e in G.edge_list()]


def _max_matching(masks, n, r, stop_at=None):
    """Largest set of pairwise disjoint edges, by branch and bound.

    Returns (size, indices of one maximum matching).  With ``stop_at`` the
    search exits as soon as that many disjoint edges are found.
    """
    m = len(masks)
    best, best_pick = 0, []

    def rec(idx, used, pick):
        nonlocal best, best_pick
        if len(pick) > best:
            best, best_pick = len(pick), list(pick)
        if stop_at is not None and best >= stop_at:
            return True
        free_slots = (n - bin(used).count("1")) // r
        for k in range(idx, m):
            if len(pick) + free_slots <= best or len(pick) + (m - k) <= best:
                break
            if masks[k] & used:
                continue
            pick.append(k)
            done = rec(k + 1, used | masks[k], pick)
            pick.pop()
            if done:
                return True
        return False

    rec(0, 0, [])
    return best, best_pick


def matching_number(G: Hypergraph) -> int:
    """Maximum number of pairwise disjoint edges."""
    if not G.edges:
        return 0
    size, _ = _max_matching(_edge_masks(G), G.n, G.r)
    return size


def is_matching_free(G: Hypergraph, t: int) -> FreenessReport:
    """Free iff G has no t pairwise disjoint edges."""
    pattern = f"matching(t={t},r={G.r})"
    if t < 1:
        return FreenessReport(pattern, False, witness=())
    edge_list = G.edge_list()
    size, pick = _max_matching(_edge_masks(G), G.n, G.r, stop_at=t)
    if size >= t:
        return FreenessReport(pattern, False, tuple(edge_list[k] for k in pick))
    return FreenessReport(pattern, True)


def _covered_matrix(G: Hypergraph):
    """Row v (1-based) = bitmask of vertices sharing an edge with v."""
    rows = [0] * (G.n + 1)
    for e in G.edges:
        for v in e:
            for w in e:
                if w != v:
                    rows[v] |= 1 << (w - 1)
    return rows


def _is_perfect_matching(F: Hypergraph) -> bool:
    seen = set()
    for e in F.edges:
        if seen & set(e):
            return False
        seen.update(e)
    return len(seen) == F.n


def is_core_free(G: Hypergraph, p: int, F: Hypergraph) -> FreenessReport:
    """Search for p fully-covered vertices whose induced subgraph contains F.

    Free iff no such core exists; the witness is (core, embedded F edges).
    For F a perfect matching the embedding test reduces to finding disjoint
    edges inside the candidate core, which is what the fast path below does.
    """
    pattern = f"core(p={p})"
    if F.r != G.r:
        raise ValueError("pattern uniformity must match the host")
    if p < F.n:
        raise ValueError(f"core size p={p} must be >= |V(F)| = {F.n}")
    if G.n < p:
        return FreenessReport(pattern, True)
    covered = _covered_matrix(G)
    edge_list = G.edge_list()
    masks = _edge_masks(G)

    if _is_perfect_matching(F) and len(F.edges) == 2 and p == 2 * G.r:
        # core = union of two disjoint edges; every cross pair must be
        # covered, i.e. the second edge must lie in the common allowed set
        if G.n <= 63:
            marr = np.array(masks, dtype=np.uint64)
            for k, e in enumerate(edge_list):
                allowed = np.uint64(0)
                for v in e:
                    allowed |= np.uint64(((1 << G.n) - 1) ^ covered[v])
                hits = np.nonzero(
                    ((marr & np.uint64(masks[k])) == 0) & ((marr & allowed) == 0)
                )[0]
                if hits.size:
                    f = edge_list[int(hits[0])]
                    core = tuple(sorted(e + f))
                    return FreenessReport(pattern, False, (core, (e, f)))
        else:
            for k, e in enumerate(edge_list):
                allowed = (1 << G.n) - 1
                for v in e:
                    allowed &= covered[v]
                for j, mj in enumerate(masks):
                    if mj & masks[k] == 0 and mj & ~allowed == 0:
                        f = edge_list[j]
                        core = tuple(sorted(e + f))
                        return FreenessReport(pattern, False, (core, (e, f)))
        return FreenessReport(pattern, True)

    # general path: grow cores around an embedded copy of F
    full = (1 << G.n) - 1
    for image in _candidate_images(G, F, edge_list):
        base = set(image)
        allowed = full
        for v in base:
            allowed &= covered[v] | (1 << (v - 1))
        pool = [
            u
            for u in range(1, G.n + 1)
            if u not in base and allowed >> (u - 1) & 1
        ]
        for extra in itertools.combinations(pool, p - len(base)):
            core = sorted(base | set(extra))
            ok = all(
                covered[a] >> (b - 1) & 1
                for a, b in itertools.combinations(core, 2)
            )
            if ok:
                emb = tuple(
                    tuple(sorted(image[w - 1] for w in e)) for e in sorted(F.edges)
                )
                return FreenessReport(pattern, False, (tuple(core), emb))
    return FreenessReport(pattern, True)


def _candidate_images(G: Hypergraph, F: Hypergraph, edge_list):
    """All injective embeddings of F into G (images as assignment tuples)."""
    host_edges = G.edges

    def rec(assign):
        v = len(assign) + 1
        if v > F.n:
            yield tuple(assign)
            return
        for img in range(1, G.n + 1):
            if img in assign:
                continue
            assign.append(img)
            ok = True
            for e in sorted(F.edges):
                if e[-1] <= v and tuple(sorted(assign[w - 1] for w in e)) not in host_edges:
                    ok = False
                    break
            if ok:
                yield from rec(assign)
            assign.pop()

    yield from rec([])


def is_hom_free(G: Hypergraph, F: Hypergraph, p: int) -> FreenessReport:
    """Freeness from edge-preserving maps of the extension of F to p cores.

    A host admits such a homomorphism exactly when it has a covered p-core
    containing F, so this delegates to the core search; ``hom_search`` is
    the direct (slower) route kept for cross-validation.
    """
    report = is_core_free(G, p, F)
    return FreenessReport(f"hom(p={p})", report.free, report.witness)


def hom_search(G: Hypergraph, F: Hypergraph, p: int, guard: int | None = None):
    """Direct backtracking search for a homomorphism extension(F, p) -> G.

    Returns the vertex map as a tuple (image of vertex v at index v-1), or
    None.  Guarded: meant for cross-validation on small hosts.
    """
    guard = HOM_GUARD_N if guard is None else guard
    if G.n > guard:
        raise UnsupportedSizeError(
            f"hom search needs n <= {guard}, got n={G.n}"
        )
    H = extension(F, p)
    hedges = sorted(H.edges)
    # partial images must stay inside some edge of G
    partial_ok = set()
    for e in G.edges:
        for k in range(1, G.r + 1):
            partial_ok.update(itertools.combinations(e, k))

    def rec(assign):
        v = len(assign) + 1
        if v > H.n:
            return tuple(assign)
        for img in range(1, G.n + 1):
            # the p core vertices must land on distinct images
            if v <= p and img in assign[:p]:
                continue
            assign.append(img)
            ok = True
            for e in hedges:
                assigned = [assign[w - 1] for w in e if w <= v]
                if not assigned:
                    continue
                image = tuple(sorted(set(assigned)))
                if len(image) < len(assigned):
                    ok = False  # an edge may not collapse
                    break
                if len(assigned) == len(e):
                    if image not in G.edges:
                        ok = False
                        break
                elif image not in partial_ok:
                    ok = False
                    break
            if ok:
                out = rec(assign)
                if out is not None:
                    return out
            assign.pop()
        return None

    return rec([])


def _colex_edges(n, r):
    return sorted(
        itertools.combinations(range(1, n + 1), r), key=lambda e: e[::-1]
    )


def _predecessors(e):
    """Single-replacement predecessors: swap one vertex for the next label
    down when that label is outside the edge."""
    se = set(e)
    out = []
    for v in e:
        if v - 1 >= 1 and v - 1 not in se:
            out.append(tuple(sorted(se - {v} | {v - 1})))
    return out


def enumerate_left_compressed_free(n, r, t, guard: int | None = None):
    """Yield every left-compressed r-graph on [n] with no t disjoint edges.

    Graphs are produced as edge frozensets exactly once, by branching over
    edges in colex order; an edge may enter only when all its
    single-replacement predecessors are present and no t-matching appears.
    """
    guard = ENUM_GUARD_N if guard is None else guard
    if n > guard:
        raise UnsupportedSizeError(
            f"enumeration needs n <= {guard}, got n={n} "
            "(raise via the guard argument)"
        )
    all_edges = _colex_edges(n, r)
    preds = [_predecessors(e) for e in all_edges]
    masks = [sum(1 << (v - 1) for v in e) for e in all_edges]

    def creates_matching(chosen_masks, new_mask):
        # would adding new_mask complete t pairwise disjoint edges?
        avail = [mk for mk in chosen_masks if mk & new_mask == 0]
        if t <= 1:
            return True
        size, _ = _max_matching(avail, n, r, stop_at=t - 1)
        return size >= t - 1

    def rec(start, chosen, chosen_set, chosen_masks):
        progressed = False
        for k in range(start, len(all_edges)):
            if not all(pe in chosen_set for pe in preds[k]):
                continue
            if creates_matching(chosen_masks, masks[k]):
                continue
            progressed = True
            # exclude branch first: the edge stays out for good
            yield from rec(k + 1, chosen, chosen_set, chosen_masks)
            chosen.append(all_edges[k])
            chosen_set.add(all_edges[k])
            chosen_masks.append(masks[k])
            yield from rec(k + 1, chosen, chosen_set, chosen_masks)
            chosen.pop()
            chosen_set.discard(all_edges[k])
            chosen_masks.pop()
            return
        if not progressed:
            yield frozenset(chosen)

    yield from rec(0, [], set(), [])


def _is_maximal(edges: frozenset, n, r, t) -> bool:
    all_edges = _colex_edges(n, r)
    masks_by_edge = {
        e: sum(1 << (v - 1) for v in e) for e in all_edges
    }
    chosen_masks = [masks_by_edge[e] for e in sorted(edges)]
    for e in all_edges:
        if e in edges:
            continue
        if not all(pe in edges for pe in _predecessors(e)):
            continue
        avail = [mk for mk in chosen_masks if mk & masks_by_edge[e] == 0]
        size, _ = _max_matching(avail, n, r, stop_at=t - 1)
        if size < t - 1:
            return False
    return True


def _is_star_subgraph(edges) -> bool:
    it = iter(edges)
    try:
        common = set(next(it))
    except StopIteration:
        return True
    for e in it:
        common &= set(e)
        if not common:
            return False
    return True


@dataclass(frozen=True)
class SearchResult:
    n: int
    r: int
    t: int
    families: int
    evaluated: int
    max_value: float
    witness: Hypergraph
    witness_is_star_subgraph: bool
    max_nonstar_value: float
    nonstar_witness: Hypergraph | None


def _eval_family(args):
    edges, n, r, seed = args
    G = Hypergraph(r, n, frozenset(edges))
    res = maximize(G, SolverConfig(seed=seed))
    return edges, res.value


def extremal_lambda_search(
    n,
    r,
    t,
    jobs: int = 1,
    maximal_only: bool = True,
    seed: int = 0,
    guard: int | None = None,
) -> SearchResult:
    """Maximize lambda over all left-compressed free graphs on [n].

    By default only maximal families are evaluated (lambda is monotone
    under subgraphs, so the maximum is attained on a maximal family).
    """
    families = 0
    to_eval = []
    for edges in enumerate_left_compressed_free(n, r, t, guard=guard):
        families += 1
        if not edges:
            continue
        if maximal_only and not _is_maximal(edges, n, r, t):
            continue
        to_eval.append(tuple(sorted(edges)))
    to_eval.sort()

    args = [(edges, n, r, seed) for edges in to_eval]
    if jobs > 1 and len(args) > 1:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(processes=jobs) as pool:
            results = pool.map(_eval_family, args, chunksize=4)
    else:
        results = [_eval_family(a) for a in args]

    best = (-1.0, None)
    best_nonstar = (-1.0, None)
    for edges, value in results:
        key = (value, edges)
        if value > best[0] + 1e-12 or (
            abs(value - best[0]) <= 1e-12 and best[1] is not None and edges < best[1]
        ):
            best = (value, edges)
        if not _is_star_subgraph(edges):
            if value > best_nonstar[0] + 1e-12 or (
                abs(value - best_nonstar[0]) <= 1e-12
                and best_nonstar[1] is not None
                and edges < best_nonstar[1]
            ):
                best_nonstar = (value, edges)

    if best[1] is None:
        best = (0.0, ())
        witness = Hypergraph(r, n, frozenset())
    else:
        witness = Hypergraph(r, n, frozenset(best[1]))
    nonstar_witness = (
        Hypergraph(r, n, frozenset(best_nonstar[1]))
        if best_nonstar[1] is not None
        else None
    )
    return SearchResult(
        n=n,
        r=r,
        t=t,
        families=families,
        evaluated=len(to_eval),
        max_value=best[0],
        witness=witness,
        witness_is_star_subgraph=_is_star_subgraph(witness.edges),
        max_nonstar_value=best_nonstar[0],
        nonstar_witness=nonstar_witness,
    )
