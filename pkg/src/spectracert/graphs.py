"""Simple graphs with canonical edge ids, distance structure, folds, and
graph6 I/O.

Vertices are 0..n-1.  The edge list is sorted lexicographically and an
edge's id is its position in that list; every module that attaches
variables or signs to edges relies on this ordering being stable.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np

from .exact import ExactMatrix, minimal_polynomial_degree


class GraphError(ValueError):
    pass


class Graph:
    """Undirected simple graph with deterministic edge ids."""

    __slots__ = ("n", "edges", "labels", "_adj")

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]],
                 labels: Optional[Sequence[str]] = None):
        if n < 0:
            raise GraphError("negative vertex count")
        seen = set()
        norm = []
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
            norm.append(e)
        norm.sort()
        self.n = n
        self.edges = norm
        if labels is not None and len(labels) != n:
            raise GraphError("label count mismatch")
        self.labels = list(labels) if labels is not None else None
        adj: List[List[int]] = [[] for _ in range(n)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        for lst in adj:
            lst.sort()
        self._adj = adj

    # -- basics ------------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> List[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> List[int]:
        return [len(a) for a in self._adj]

    def is_regular(self) -> Optional[int]:
        degs = set(self.degrees())
        if len(degs) == 1:
            return degs.pop()
        return None

    def edge_id(self, u: int, v: int) -> int:
        e = (u, v) if u < v else (v, u)
        from bisect import bisect_left
        i = bisect_left(self.edges, e)
        if i == len(self.edges) or self.edges[i] != e:
            raise GraphError(f"no edge {e}")
        return i

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._adj[u]

    def adjacency(self) -> ExactMatrix:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = 1
            a[v, u] = 1
        return ExactMatrix(a)

    def adjacency_int(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = 1
            a[v, u] = 1
        return a

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, tuple(self.edges)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "edges": [list(e) for e in self.edges]})

    @staticmethod
    def from_json(text: str) -> "Graph":
        obj = json.loads(text)
        return Graph(int(obj["n"]), [tuple(e) for e in obj["edges"]])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """New graph where old vertex v becomes perm[v]."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])


@dataclass
class SignedGraph:
    """Graph with a +-1 sign on each edge, keyed by edge id."""

    base: Graph
    sign: Dict[int, int]

    def __post_init__(self):
        if set(self.sign) != set(range(self.base.m)):
            raise GraphError("signature must cover exactly the edge set")
        if any(s not in (1, -1) for s in self.sign.values()):
            raise GraphError("signs must be +1 or -1")

    def signed_adjacency(self) -> ExactMatrix:
        a = np.zeros((self.base.n, self.base.n), dtype=np.int64)
        for eid, (u, v) in enumerate(self.base.edges):
            a[u, v] = self.sign[eid]
            a[v, u] = self.sign[eid]
        return ExactMatrix(a)


@dataclass
class IntersectionArray:
    d: int
    b: List[int]
    c: List[int]
    a: List[int] = field(default_factory=list)

    def __post_init__(self):
        if len(self.b) != self.d or len(self.c) != self.d:
            raise GraphError("intersection array length mismatch")
        if not self.a:
            b0 = self.b[0]
            self.a = [b0 - self.b[i] - ([0] + self.c)[i] for i in range(self.d)]
            self.a.append(b0 - self.c[-1])
        if self.c[0] != 1:
            raise GraphError("c_1 must be 1")
        for i in range(self.d - 1):
            if self.b[i] < self.b[i + 1]:
                raise GraphError("b sequence not non-increasing")
            if self.c[i] > self.c[i + 1]:
                raise GraphError("c sequence not non-decreasing")

    def as_tuple(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return (tuple(self.b), tuple(self.c))


@dataclass
class DistanceData:
    diameter: int
    dist: np.ndarray  # n x n int array
    distance_edge_counts: List[int]  # m_j for j = 0..diameter (m_0 = 0)

    def distance_matrix(self, j: int) -> ExactMatrix:
        return ExactMatrix((self.dist == j).astype(np.int64))

    def distance_graph(self, j: int) -> Graph:
        n = self.dist.shape[0]
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if self.dist[u, v] == j]
        return Graph(n, edges)

    def pairs_at_distance(self, j: int) -> List[Tuple[int, int]]:
        n = self.dist.shape[0]
        return [(u, v) for u in range(n) for v in range(u + 1, n)
                if self.dist[u, v] == j]


def _bfs_dist(G: Graph, src: int) -> List[int]:
    dist = [-1] * G.n
    dist[src] = 0
    q = deque([src])
    while q:
        u = q.popleft()
        for w in G.neighbors(u):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return True
    return min(_bfs_dist(G, 0)) >= 0


def distance_data(G: Graph) -> DistanceData:
    """All pairwise distances by BFS from every vertex."""
    n = G.n
    dist = np.empty((n, n), dtype=np.int64)
    for v in range(n):
        row = _bfs_dist(G, v)
        if min(row) < 0:
            raise GraphError("not-connected")
        dist[v] = row
    diam = int(dist.max())
    counts = [0] * (diam + 1)
    for u in range(n):
        for v in range(u + 1, n):
            counts[dist[u, v]] += 1
    return DistanceData(diam, dist, counts)


def intersection_array(G: Graph) -> Optional[IntersectionArray]:
    """The intersection array when G is distance-regular, else None."""
    dd = distance_data(G)
    d = dd.diameter
    if d == 0:
        return None
    b = [None] * d
    c = [None] * (d + 1)
    for u in range(G.n):
        for v in range(G.n):
            if u == v:
                continue
            i = int(dd.dist[u, v])
            ci = sum(1 for w in G.neighbors(v) if dd.dist[u, w] == i - 1)
            bi = sum(1 for w in G.neighbors(v) if dd.dist[u, w] == i + 1)
            if c[i] is None:
                c[i] = ci
            elif c[i] != ci:
                return None
            if i < d:
                if b[i] is None:
                    b[i] = bi
                elif b[i] != bi:
                    return None
            elif bi != 0:
                return None
    k = G.is_regular()
    if k is None:
        return None
    try:
        return IntersectionArray(d, [k] + [b[i] for i in range(1, d)],
                                 [c[i] for i in range(1, d + 1)])
    except GraphError:
        return None


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def complement(G: Graph) -> Graph:
    edges = [(u, v) for u in range(G.n) for v in range(u + 1, G.n)
             if v not in G._adj[u]]
    return Graph(G.n, edges)


def union(G: Graph, H: Graph) -> Graph:
    """Edge union on an identified vertex set."""
    if G.n != H.n:
        raise GraphError("union requires equal vertex counts")
    return Graph(G.n, sorted(set(G.edges) | set(H.edges)))


def cartesian_product(G: Graph, H: Graph) -> Graph:
    """Vertex (g, h) maps to index g * H.n + h (lexicographic pairs)."""
    nh = H.n
    edges = []
    for g in range(G.n):
        for u, v in H.edges:
            edges.append((g * nh + u, g * nh + v))
    for u, v in G.edges:
        for h in range(nh):
            edges.append((u * nh + h, v * nh + h))
    return Graph(G.n * nh, edges)


def tensor_product(G: Graph, H: Graph) -> Graph:
    nh = H.n
    edges = []
    for gu, gv in G.edges:
        for hu, hv in H.edges:
            edges.append((gu * nh + hu, gv * nh + hv))
            edges.append((gu * nh + hv, gv * nh + hu))
    return Graph(G.n * nh, edges)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    bounds = []
    start = 0
    for s in sizes:
        bounds.append((start, start + s))
        start += s
    edges = []
    for i, (a0, a1) in enumerate(bounds):
        for b0, b1 in bounds[i + 1:]:
            for u in range(a0, a1):
                for v in range(b0, b1):
                    edges.append((u, v))
    return Graph(start, edges)


# ---------------------------------------------------------------------------
# folds
# ---------------------------------------------------------------------------


def antipodal_fold(G: Graph) -> Optional[Tuple[Graph, SignedGraph]]:
    """Fold an antipodal 2-cover along its distance-d perfect matching.

    When the distance-d graph of G is a perfect matching, each fiber
    {v, mate(v)} becomes one folded vertex, represented by the smaller id.
    The folded graph joins two fibers when any cover edge joins them; the
    signature is +1 when the cover edges between the fibers are parallel
    (representative to representative) and -1 when they cross.
    """
    dd = distance_data(G)
    d = dd.diameter
    mate = [-1] * G.n
    for v in range(G.n):
        far = [w for w in range(G.n) if dd.dist[v, w] == d]
        if len(far) != 1:
            return None
        mate[v] = far[0]
    for v in range(G.n):
        if mate[mate[v]] != v or mate[v] == v:
            return None
    reps = sorted(v for v in range(G.n) if v < mate[v])
    index = {v: i for i, v in enumerate(reps)}

    def fiber_of(v: int) -> int:
        return index[v] if v in index else index[mate[v]]

    folded_edges: Set[Tuple[int, int]] = set()
    sign_by_pair: Dict[Tuple[int, int], int] = {}
    for u, v in G.edges:
        fu, fv = fiber_of(u), fiber_of(v)
        if fu == fv:
            return None
        pair = (fu, fv) if fu < fv else (fv, fu)
        # Parallel means the edge connects same-parity ends of the fibers:
        # rep-rep or mate-mate.
        parallel = (u in index) == (v in index)
        s = 1 if parallel else -1
        if pair in sign_by_pair:
            if sign_by_pair[pair] != s:
                # Both a parallel and a cross edge between the fibers: the
                # quotient is not a well-defined 2-lift signature.
                return None
        else:
            sign_by_pair[pair] = s
        folded_edges.add(pair)
    folded = Graph(len(reps), sorted(folded_edges))
    sign = {folded.edge_id(u, v): sign_by_pair[(u, v)] for u, v in folded.edges}
    return folded, SignedGraph(folded, sign)


# ---------------------------------------------------------------------------
# structural predicates
# ---------------------------------------------------------------------------


def is_triangle_free(G: Graph) -> bool:
    a = G.adjacency_int()
    a3 = a @ a @ a
    return int(np.trace(a3)) == 0


def is_bipartite(G: Graph) -> bool:
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in G.neighbors(u):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    q.append(w)
                elif color[w] == color[u]:
                    return False
    return True


# ---------------------------------------------------------------------------
# zero forcing
# ---------------------------------------------------------------------------


def zero_forcing_closure(G: Graph, S: Iterable[int]) -> Set[int]:
    """Fixed point of the color change rule starting from blue set S."""
    blue = set(S)
    changed = True
    while changed:
        changed = False
        for v in list(blue):
            white = [w for w in G.neighbors(v) if w not in blue]
            if len(white) == 1:
                blue.add(white[0])
                changed = True
    return blue


def is_forcing_set(G: Graph, S: Iterable[int]) -> bool:
    return len(zero_forcing_closure(G, S)) == G.n


def zero_forcing_number_exhaustive(G: Graph, cap: int = 16) -> Optional[int]:
    """Exact zero forcing number by subset search, smallest sizes first."""
    if G.n > cap:
        return None
    for k in range(G.n + 1):
        for S in combinations(range(G.n), k):
            if is_forcing_set(G, S):
                return k
    raise AssertionError("unreachable: full vertex set always forces")


def induced_max_degree_floor(G: Graph, r: int, mode: str = "exhaustive",
                             sample_subsets: Optional[Iterable[Sequence[int]]] = None
                             ) -> Tuple[int, str]:
    """Minimum over r-subsets of the max degree of the induced subgraph.

    Exhaustive mode requires C(n, r) <= 10^6; otherwise the mode is forced
    to "sample" and the bound is the minimum over the provided subsets
    only (an upper bound witness for the true minimum).
    """
    if r < 0 or r > G.n:
        raise GraphError("subset size out of range")
    if r <= 1:
        return 0, "exhaustive"
    import math
    n_choose_r = math.comb(G.n, r)
    if mode == "exhaustive" and n_choose_r > 10**6:
        mode = "sample"
    if mode == "exhaustive":
        best = r
        for sub in combinations(range(G.n), r):
            subset = set(sub)
            md = max(sum(1 for w in G.neighbors(v) if w in subset) for v in sub)
            if md < best:
                best = md
                if best == 0:
                    break
        return best, "exhaustive"
    if sample_subsets is None:
        raise GraphError("sample mode requires explicit subsets")
    best = r
    for sub in sample_subsets:
        subset = set(sub)
        if len(subset) != r:
            raise GraphError("sample subset has wrong size")
        md = max(sum(1 for w in G.neighbors(v) if w in subset) for v in subset)
        best = min(best, md)
    return best, "sample"


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


class Graph6Error(ValueError):
    def __init__(self, msg: str, offset: int):
        super().__init__(f"{msg} (byte offset {offset})")
        self.offset = offset


def save_graph6(G: Graph) -> bytes:
    n = G.n
    if n > 258047:
        raise GraphError("graph too large for this graph6 writer")
    if n <= 62:
        head = bytes([n + 63])
    else:
        head = bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63,
                      (n & 63) + 63])
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if v in G._adj[u] else 0)
    while len(bits) % 6:
        bits.append(0)
    body = bytearray()
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        body.append(val + 63)
    return head + bytes(body)


def load_graph6(data: bytes) -> Graph:
    data = data.strip()
    if not data:
        raise Graph6Error("empty input", 0)
    pos = 0
    if data[0] == 126:
        if len(data) < 4:
            raise Graph6Error("truncated extended header", len(data))
        if data[1] == 126:
            raise Graph6Error("graph too large for this reader", 1)
        n = 0
        for i in range(1, 4):
            c = data[i] - 63
            if not 0 <= c < 64:
                raise Graph6Error("invalid header byte", i)
            n = (n << 6) | c
        pos = 4
    else:
        c = data[0] - 63
        if not 0 <= c <= 62:
            raise Graph6Error("invalid header byte", 0)
        n = c
        pos = 1
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise Graph6Error("truncated edge data", len(data))
    if len(data) - pos > nbytes:
        raise Graph6Error("trailing bytes after edge data", pos + nbytes)
    bits = []
    for i in range(pos, pos + nbytes):
        c = data[i] - 63
        if not 0 <= c < 64:
            raise Graph6Error("invalid data byte", i)
        for k in range(5, -1, -1):
            bits.append((c >> k) & 1)
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return Graph(n, edges)


def distinct_adjacency_eigenvalue_count(G: Graph) -> int:
    """Number of distinct adjacency eigenvalues, via the minimal polynomial."""
    return minimal_polynomial_degree(G.adjacency())
