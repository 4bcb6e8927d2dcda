"""Lower-bound engine for the number of distinct eigenvalues.

For a symmetric matrix supported on G with exactly j+1 distinct
eigenvalues, every power up to j has fixed support behaviour; in
particular, for each pair of vertices at distance j the sum over shortest
paths of the products of the corresponding off-diagonal entries must be
nonzero.  Collecting one polynomial per distance-j pair (monomials =
shortest paths, variables = edge ids) gives a system whose unsolvability
over nonzero reals forces q(G) >= j+1.  This module extracts the systems
and runs four unsolvability rules: unique shortest paths, the GF(2)
parity criterion, exhaustive sign assignment, and the odd-order
triangle-free trace rule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Set, Tuple

import numpy as np

from .exact import PrimeFieldMatrix, gf2_kernel_with_odd_support
from .graphs import (Graph, distance_data, intersection_array, is_bipartite,
                     is_connected, is_triangle_free)

MONOMIAL_CAP = 10 ** 7
SIGN_VAR_CAP = 32


class MonomialCapError(ValueError):
    pass


@dataclass
class PathPolynomial:
    pair: Tuple[int, int]
    monomials: List[Tuple[int, ...]]  # each a sorted tuple of edge ids

    def variable_multiplicity(self, var: int) -> int:
        return sum(1 for m in self.monomials if var in m)

    def coprime_pair(self) -> bool:
        """Exactly two monomials with disjoint supports."""
        if len(self.monomials) != 2:
            return False
        return not (set(self.monomials[0]) & set(self.monomials[1]))


@dataclass
class PathPolynomialSystem:
    graph: Graph
    j: int
    polynomials: List[PathPolynomial]

    @property
    def variables(self) -> List[int]:
        seen: Set[int] = set()
        for p in self.polynomials:
            for m in p.monomials:
                seen.update(m)
        return sorted(seen)

    def multiplicity(self, var: int) -> int:
        return sum(p.variable_multiplicity(var) for p in self.polynomials)


@dataclass
class ObstructionCertificate:
    kind: str  # unique-path | parity | sign-exhaust | parity-trace
    bound: int  # certified q >= bound
    witness: Optional[dict] = None
    stats: dict = field(default_factory=dict)


def phi(G: Graph, j: int) -> PathPolynomialSystem:
    """One polynomial per distance-j pair; monomials are the edge sets of
    the shortest paths, pairs and paths in lexicographic order."""
    dd = distance_data(G)
    if j < 1 or j > dd.diameter:
        raise ValueError("j must lie between 1 and the diameter")
    polys = []
    count = 0
    for u in range(G.n):
        dist_u = dd.dist[u]
        for v in range(u + 1, G.n):
            if dist_u[v] != j:
                continue
            monomials = []

            def walk(cur: int, edges: List[int]):
                if cur == v:
                    monomials.append(tuple(sorted(edges)))
                    return
                for w in G.neighbors(cur):
                    if dist_u[w] == dist_u[cur] + 1 and dd.dist[w][v] == j - dist_u[w]:
                        edges.append(G.edge_id(cur, w))
                        walk(w, edges)
                        edges.pop()

            walk(u, [])
            count += len(monomials)
            if count > MONOMIAL_CAP:
                raise MonomialCapError("shortest-path monomial cap exceeded")
            polys.append(PathPolynomial((u, v), monomials))
    return PathPolynomialSystem(G, j, polys)


def unique_path_rule(G: Graph) -> Optional[ObstructionCertificate]:
    """q >= j+1 for the largest j at which some distance-j pair has a
    unique shortest path (the one-monomial polynomial cannot vanish)."""
    dd = distance_data(G)
    # count shortest paths by dynamic programming from each source
    best = None
    for u in range(G.n):
        dist_u = dd.dist[u]
        order = sorted(range(G.n), key=lambda v: dist_u[v])
        npaths = [0] * G.n
        npaths[u] = 1
        for v in order:
            if v == u:
                continue
            npaths[v] = sum(npaths[w] for w in G.neighbors(v)
                            if dist_u[w] == dist_u[v] - 1)
        for v in range(u + 1, G.n):
            if npaths[v] == 1 and dist_u[v] >= 1:
                jv = int(dist_u[v])
                if best is None or jv > best[0]:
                    best = (jv, (u, v))
    if best is None or best[0] < 2:
        return None
    j, pair = best
    return ObstructionCertificate(
        kind="unique-path", bound=j + 1,
        witness={"pair": list(pair), "j": j})


def parity_certificate(sys: PathPolynomialSystem) -> Optional[ObstructionCertificate]:
    """GF(2) criterion: an odd-sized family F of two-coprime-monomial
    polynomials in which every variable has even multiplicity is
    unsatisfiable over nonzero reals, giving q >= j+1."""
    eligible = [(idx, p) for idx, p in enumerate(sys.polynomials)
                if p.coprime_pair()]
    if not eligible:
        return None
    variables = sorted({v for _, p in eligible for m in p.monomials for v in m})
    vidx = {v: i for i, v in enumerate(variables)}
    a = np.zeros((len(variables), len(eligible)), dtype=np.int64)
    for col, (_, p) in enumerate(eligible):
        for m in p.monomials:
            for v in m:
                a[vidx[v], col] ^= 1
    x = gf2_kernel_with_odd_support(PrimeFieldMatrix(a, 2))
    if x is None:
        return None
    chosen = [eligible[i][0] for i, b in enumerate(x) if b]
    _verify_parity_family(sys, chosen)
    return ObstructionCertificate(
        kind="parity", bound=sys.j + 1,
        witness={"polynomial_indices": chosen, "family_size": len(chosen)})


def _verify_parity_family(sys: PathPolynomialSystem, chosen: Sequence[int]) -> None:
    if len(chosen) % 2 == 0:
        raise AssertionError("parity family has even size")
    mult: Dict[int, int] = {}
    for i in chosen:
        p = sys.polynomials[i]
        if not p.coprime_pair():
            raise AssertionError("family member is not a coprime two-monomial poly")
        for m in p.monomials:
            for v in m:
                mult[v] = mult.get(v, 0) + 1
    if any(c % 2 for c in mult.values()):
        raise AssertionError("parity family has an odd-multiplicity variable")


def verify_parity_family(sys: PathPolynomialSystem,
                         chosen: Sequence[int]) -> ObstructionCertificate:
    """Validate an externally supplied parity family and wrap it."""
    _verify_parity_family(sys, chosen)
    return ObstructionCertificate(
        kind="parity", bound=sys.j + 1,
        witness={"polynomial_indices": sorted(chosen),
                 "family_size": len(chosen)})


def sign_exhaust(sys: PathPolynomialSystem,
                 parallel_width: int = 4) -> ObstructionCertificate:
    """Enumerate all +-1 edge sign assignments.

    An assignment survives a polynomial only when its monomial signs are
    not all equal (a necessary condition for the polynomial to vanish at a
    nonzero real point).  If nothing survives every polynomial the system
    is unsolvable and q >= j+1; otherwise the smallest surviving bit
    pattern is reported as an inconclusive witness.

    The assignment space is split into parallel_width contiguous ranges by
    high bits and the per-range results merged by minimum, so the outcome
    is identical for any width.
    """
    variables = sys.variables
    k = len(variables)
    if k > SIGN_VAR_CAP:
        raise ValueError(f"{k} sign variables exceed cap {SIGN_VAR_CAP}")
    vidx = {v: i for i, v in enumerate(variables)}
    poly_masks = []
    for p in sys.polynomials:
        masks = [sum(1 << vidx[v] for v in m) for m in p.monomials]
        poly_masks.append(masks)
        if len(masks) == 0:
            raise AssertionError("empty polynomial")
    total = 1 << k
    if parallel_width < 1:
        raise ValueError("parallel_width must be positive")
    width = min(parallel_width, total)
    bounds = [total * i // width for i in range(width + 1)]

    dtype = np.uint64
    best: Optional[int] = None
    tried = 0
    chunk = 1 << 18
    for r in range(width):
        lo, hi = bounds[r], bounds[r + 1]
        found: Optional[int] = None
        start = lo
        while start < hi and found is None:
            stop = min(start + chunk, hi)
            assign = np.arange(start, stop, dtype=dtype)
            alive = np.ones(assign.shape, dtype=bool)
            for masks in poly_masks:
                if not alive.any():
                    break
                par0 = np.bitwise_count(assign & dtype(masks[0])) & 1
                distinct = np.zeros(assign.shape, dtype=bool)
                for m in masks[1:]:
                    distinct |= (np.bitwise_count(assign & dtype(m)) & 1) != par0
                alive &= distinct
            tried += stop - start
            idx = np.nonzero(alive)[0]
            if idx.size:
                found = int(assign[idx[0]])
            start = stop
        if found is not None and (best is None or found < best):
            best = found
    if best is None:
        return ObstructionCertificate(
            kind="sign-exhaust", bound=sys.j + 1,
            witness=None, stats={"assignments_tried": tried, "unsat": True})
    return ObstructionCertificate(
        kind="sign-exhaust", bound=2,
        witness={"assignment_bits": best,
                 "variables": variables,
                 "conclusive": False},
        stats={"assignments_tried": tried, "unsat": False})


def parity_trace_rule(G: Graph) -> Optional[ObstructionCertificate]:
    """q >= 3 for a connected triangle-free non-bipartite graph of odd
    order: any two-eigenvalue matrix would have zero diagonal, trace forces
    eigenvalue multiplicities to balance, impossible at odd order."""
    if G.n % 2 == 0:
        return None
    if not is_connected(G):
        return None
    if not is_triangle_free(G):
        return None
    if is_bipartite(G):
        return None
    return ObstructionCertificate(
        kind="parity-trace", bound=3,
        witness={"order": G.n})


# ---------------------------------------------------------------------------
# Hamming embedding
# ---------------------------------------------------------------------------


def hamming_embedding_system(d: int, e: int, n: int) -> PathPolynomialSystem:
    """Image of the distance-d system of H(d,3) inside H(e,n).

    The embedding keeps the first d coordinates (values 0..2) and pads with
    zeros.  Every polynomial of the small system is verified to reappear,
    monomial for monomial, among the shortest-path polynomials of the big
    graph; the translated system is returned.
    """
    from .hamming import hamming_graph
    if not (2 <= d <= e) or n < 3:
        raise ValueError("need 2 <= d <= e and n >= 3")
    small = hamming_graph(d, 3, 1)
    sys_small = phi(small, d)
    big = hamming_graph(e, n, 1)

    def embed_vertex(idx: int) -> int:
        # decode base-3 label of the small graph, pad, re-encode base-n
        digits = []
        x = idx
        for _ in range(d):
            digits.append(x % 3)
            x //= 3
        digits.reverse()
        digits += [0] * (e - d)
        out = 0
        for g in digits:
            out = out * n + g
        return out

    dd_big = distance_data(big)
    translated = []
    for p in sys_small.polynomials:
        u, v = (embed_vertex(p.pair[0]), embed_vertex(p.pair[1]))
        if u > v:
            u, v = v, u
        if dd_big.dist[u, v] != d:
            raise AssertionError("embedding does not preserve the distance")
        # shortest paths of the big graph between the embedded pair
        monos_big = _pair_monomials(big, dd_big, u, v, d)
        # translate the small monomials through the edge map
        trans = set()
        for m in p.monomials:
            edges = []
            for eid in m:
                a, b = small.edges[eid]
                ea, eb = embed_vertex(a), embed_vertex(b)
                edges.append(big.edge_id(ea, eb))
            trans.add(tuple(sorted(edges)))
        if not trans <= set(monos_big):
            raise AssertionError("embedded monomials missing from the big system")
        translated.append(PathPolynomial((u, v), sorted(trans)))
    return PathPolynomialSystem(big, d, translated)


def _pair_monomials(G: Graph, dd, u: int, v: int, j: int) -> List[Tuple[int, ...]]:
    dist_u = dd.dist[u]
    out = []

    def walk(cur: int, edges: List[int]):
        if cur == v:
            out.append(tuple(sorted(edges)))
            return
        for w in G.neighbors(cur):
            if dist_u[w] == dist_u[cur] + 1 and dd.dist[w][v] == j - dist_u[w]:
                edges.append(G.edge_id(cur, w))
                walk(w, edges)
                edges.pop()

    walk(u, [])
    return out


def drg_monomial_count(G: Graph, j: int) -> Optional[int]:
    """Expected monomials per polynomial for a distance-regular graph."""
    ia = intersection_array(G)
    if ia is None or j > ia.d:
        return None
    return math.prod(ia.c[:j])
