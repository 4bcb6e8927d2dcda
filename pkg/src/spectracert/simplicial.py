"""Abstract simplicial complexes, signed boundary matrices, up and down
Laplacians, and the derived graphs on the dimension-d faces.

A dimension-d face has d+1 vertices.  Faces are stored sorted, grouped by
dimension, in lexicographic order; orientation signs come from sorted
vertex position, and the empty face appears only implicitly (the
dimension-0 boundary matrix is the all-ones row).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .exact import ExactMatrix
from .graphs import Graph

FACE_CAP = 10 ** 6

Face = Tuple[int, ...]


class FaceCapError(ValueError):
    pass


@dataclass
class SimplicialComplex:
    n: int
    faces: List[List[Face]]  # faces[d] = dimension-d faces, lexicographic

    @property
    def dim(self) -> int:
        return len(self.faces) - 1

    def face_index(self, d: int) -> Dict[Face, int]:
        return {f: i for i, f in enumerate(self.faces[d])}

    def face_count(self) -> int:
        return sum(len(level) for level in self.faces)

    def has_face(self, f: Sequence[int]) -> bool:
        f = tuple(sorted(f))
        d = len(f) - 1
        return 0 <= d <= self.dim and f in set(self.faces[d])

    @staticmethod
    def from_facets(n: int, facets: Sequence[Sequence[int]]) -> "SimplicialComplex":
        """Downward closure of the given facets."""
        levels: List[set] = []
        total = 0
        for facet in facets:
            fv = tuple(sorted(set(facet)))
            if fv and not all(0 <= v < n for v in fv):
                raise ValueError("facet vertex out of range")
            if 2 ** len(fv) - 1 > FACE_CAP:
                raise FaceCapError(
                    f"facet of size {len(fv)} exceeds the face cap")
            for k in range(1, len(fv) + 1):
                while len(levels) < k:
                    levels.append(set())
                for sub in combinations(fv, k):
                    levels[k - 1].add(sub)
            total = sum(len(s) for s in levels)
            if total > FACE_CAP:
                raise FaceCapError(f"{total} faces exceed cap {FACE_CAP}")
        faces = [sorted(s) for s in levels]
        return SimplicialComplex(n, faces)

    @staticmethod
    def from_json(text: str) -> "SimplicialComplex":
        obj = json.loads(text)
        return SimplicialComplex.from_facets(int(obj["n"]), obj["facets"])

    def to_json(self) -> str:
        # facets = faces not contained in a larger face
        facets = []
        all_faces = {f for level in self.faces for f in level}
        for level in reversed(self.faces):
            for f in level:
                if not any(set(f) < set(g) for g in facets):
                    facets.append(f)
        return json.dumps({"n": self.n, "facets": [list(f) for f in facets]})


def power_set_complex(n: int) -> SimplicialComplex:
    return SimplicialComplex.from_facets(n, [tuple(range(n))])


def _grow_cliques(G: Graph, level: List[Face]) -> List[Face]:
    out = set()
    for f in level:
        last = f[-1]
        for v in range(last + 1, G.n):
            if all(G.has_edge(u, v) for u in f):
                out.add(f + (v,))
    return sorted(out)


def clique_complex(G: Graph) -> SimplicialComplex:
    faces: List[List[Face]] = [[(v,) for v in range(G.n)]]
    total = G.n
    while True:
        nxt = _grow_cliques(G, faces[-1])
        if not nxt:
            break
        total += len(nxt)
        if total > FACE_CAP:
            raise FaceCapError("clique complex exceeds the face cap")
        faces.append(nxt)
    return SimplicialComplex(G.n, faces)


def independence_complex(G: Graph) -> SimplicialComplex:
    from .graphs import complement
    comp = complement(G)
    c = clique_complex(comp)
    return SimplicialComplex(G.n, c.faces)


def matching_complex(G: Graph) -> SimplicialComplex:
    """Complex on the edge ids of G whose faces are matchings."""
    def disjoint(e1, e2):
        a, b = G.edges[e1], G.edges[e2]
        return not (set(a) & set(b))

    faces: List[List[Face]] = [[(e,) for e in range(G.m)]]
    total = G.m
    while True:
        out = set()
        for f in faces[-1]:
            for e in range(f[-1] + 1, G.m):
                if all(disjoint(x, e) for x in f):
                    out.add(f + (e,))
        if not out:
            break
        total += len(out)
        if total > FACE_CAP:
            raise FaceCapError("matching complex exceeds the face cap")
        faces.append(sorted(out))
    return SimplicialComplex(G.m, faces)


# ---------------------------------------------------------------------------
# boundaries and Laplacians
# ---------------------------------------------------------------------------


def boundary(delta: SimplicialComplex, d: int) -> ExactMatrix:
    """Signed boundary matrix W_d with rows the (d-1)-faces and columns the
    d-faces; entry (-1)^(i-1) when the row face is the column face minus
    its i-th smallest vertex."""
    if not (0 <= d <= delta.dim):
        raise ValueError("dimension out of range")
    cols = delta.faces[d]
    if d == 0:
        return ExactMatrix.ones(1, len(cols))
    ridx = delta.face_index(d - 1)
    a = np.zeros((len(delta.faces[d - 1]), len(cols)), dtype=np.int64)
    for cj, face in enumerate(cols):
        for i in range(len(face)):
            sub = face[:i] + face[i + 1:]
            a[ridx[sub], cj] = (-1) ** i
    return ExactMatrix(a)


def down_laplacian(delta: SimplicialComplex, d: int) -> ExactMatrix:
    W = boundary(delta, d)
    return W.T @ W


def up_laplacian(delta: SimplicialComplex, d: int) -> ExactMatrix:
    if not (0 <= d <= delta.dim - 1):
        raise ValueError("dimension out of range for the up-Laplacian")
    W = boundary(delta, d + 1)
    return W @ W.T


def derived_graph_down(delta: SimplicialComplex, d: int) -> Graph:
    """Graph on the d-faces, adjacent when the intersection is a
    (d-1)-face."""
    if not (0 <= d <= delta.dim):
        raise ValueError("dimension out of range")
    faces = delta.faces[d]
    m = len(faces)
    sets = [set(f) for f in faces]
    edges = [(a, b) for a in range(m) for b in range(a + 1, m)
             if len(sets[a] & sets[b]) == d]
    return Graph(m, edges, labels=[",".join(map(str, f)) for f in faces])


def derived_graph_up(delta: SimplicialComplex, d: int) -> Graph:
    """Graph on the d-faces, adjacent when the union is a (d+1)-face."""
    if not (0 <= d <= delta.dim - 1):
        raise ValueError("dimension out of range")
    faces = delta.faces[d]
    upper = set(delta.faces[d + 1])
    m = len(faces)
    edges = []
    for a in range(m):
        for b in range(a + 1, m):
            u = tuple(sorted(set(faces[a]) | set(faces[b])))
            if len(u) == d + 2 and u in upper:
                edges.append((a, b))
    return Graph(m, edges, labels=[",".join(map(str, f)) for f in faces])


def signed_variant(L: ExactMatrix) -> ExactMatrix:
    """Copy of L with the diagonal zeroed."""
    num = np.array(L.num, copy=True)
    np.fill_diagonal(num, 0)
    return ExactMatrix(num, L.den)
