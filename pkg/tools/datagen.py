#!/usr/bin/env python3
"""Regenerate the bundled data files under src/spectracert/data.

Every artifact is constructed from first principles and verified before
being written: graphs get their intersection arrays or strongly regular
parameters checked, signings are squared, parity families are re-run
through the verifier, and character tables pass orthogonality.  The
manifest records a sha256 per file.
"""

from __future__ import annotations

import hashlib
import json
import random
import sys
from fractions import Fraction
from itertools import combinations, permutations, product
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from spectracert.exact import ExactMatrix, _gf2_solve_affine, gf2_kernel_basis
from spectracert.graphs import (Graph, SignedGraph, antipodal_fold,
                                distance_data, intersection_array,
                                is_connected, save_graph6)
from spectracert.hamming import hamming_graph
from spectracert.johnson import johnson_graph
from spectracert.obstruction import phi, verify_parity_family

DATA = Path(__file__).resolve().parent.parent / "src" / "spectracert" / "data"


def check(cond, msg):
    if not cond:
        raise AssertionError(msg)


def srg_params(G: Graph):
    """(n, k, lambda, mu) when G is strongly regular, else assertion."""
    A = G.adjacency_int()
    k = int(A[0].sum())
    check((A.sum(axis=1) == k).all(), "not regular")
    A2 = A @ A
    lam = mu = None
    n = G.n
    for u in range(n):
        for v in range(u + 1, n):
            c = int(A2[u, v])
            if A[u, v]:
                if lam is None:
                    lam = c
                check(c == lam, "lambda not constant")
            else:
                if mu is None:
                    mu = c
                check(c == mu, "mu not constant")
    return n, k, lam, mu


# ---------------------------------------------------------------------------
# individual graphs
# ---------------------------------------------------------------------------

FANO_LINES = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5),
              (1, 4, 6), (2, 3, 6), (2, 4, 5)]


def build_heawood() -> Graph:
    edges = [(p, 7 + li) for li, line in enumerate(FANO_LINES) for p in line]
    G = Graph(14, sorted(edges))
    ia = intersection_array(G)
    check(ia and ia.as_tuple() == ((3, 2, 2), (1, 1, 3)), "heawood array")
    return G


def build_shrikhande() -> Graph:
    conn = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    edges = []
    for a, b in product(range(4), repeat=2):
        for c, d in product(range(4), repeat=2):
            u, v = 4 * a + b, 4 * c + d
            if u < v and ((c - a) % 4, (d - b) % 4) in conn:
                edges.append((u, v))
    G = Graph(16, sorted(edges))
    check(srg_params(G) == (16, 6, 2, 2), "shrikhande srg")
    # neighborhoods are 6-cycles (the rook graph has disconnected ones)
    nbrs = G.neighbors(0)
    sub = [(i, j) for i in range(6) for j in range(i + 1, 6)
           if G.has_edge(nbrs[i], nbrs[j])]
    local = Graph(6, sub)
    check(is_connected(local) and all(local.degree(v) == 2 for v in range(6)),
          "shrikhande local hexagon")
    return G


def build_icosahedron() -> Graph:
    # standard gyroelongated bipyramid labelling: poles 0 and 11,
    # upper ring 1..5, lower ring 6..10
    edges = [(0, i) for i in range(1, 6)] + [(11, i) for i in range(6, 11)]
    for i in range(5):
        edges.append((1 + i, 1 + (i + 1) % 5))
        edges.append((6 + i, 6 + (i + 1) % 5))
        edges.append((1 + i, 6 + i))
        edges.append((1 + i, 6 + (i + 1) % 5))
    G = Graph(12, sorted(set(tuple(sorted(e)) for e in edges)))
    ia = intersection_array(G)
    check(ia and ia.as_tuple() == ((5, 2, 1), (1, 2, 5)), "icosahedron array")
    return G


def build_clebsch() -> Graph:
    conn = [1, 2, 4, 8, 15]
    edges = [(u, v) for u in range(16) for v in range(u + 1, 16)
             if (u ^ v) in conn]
    G = Graph(16, edges)
    check(srg_params(G) == (16, 5, 0, 2), "clebsch srg")
    return G


def build_coxeter() -> Graph:
    lines = set(FANO_LINES)
    triples = [t for t in combinations(range(7), 3) if t not in lines]
    check(len(triples) == 28, "coxeter vertex count")
    edges = [(a, b) for a in range(28) for b in range(a + 1, 28)
             if not set(triples[a]) & set(triples[b])]
    G = Graph(28, edges, labels=["".join(map(str, t)) for t in triples])
    ia = intersection_array(G)
    check(ia and ia.as_tuple() == ((3, 2, 2, 1), (1, 1, 1, 2)), "coxeter array")
    return G


def build_halved8cube() -> Graph:
    words = [w for w in range(256) if bin(w).count("1") % 2 == 0]
    idx = {w: i for i, w in enumerate(words)}
    edges = [(idx[u], idx[v]) for u in words for v in words
             if u < v and bin(u ^ v).count("1") == 2]
    G = Graph(128, sorted(edges), labels=[format(w, "08b") for w in words])
    ia = intersection_array(G)
    check(ia and ia.d == 4 and ia.b[0] == 28, "halved 8-cube array")
    check(antipodal_fold(G) is not None, "halved 8-cube not antipodal")
    return G


# ---------------------------------------------------------------------------
# PG(2,4) and the 77-block Steiner system
# ---------------------------------------------------------------------------


def gf4_mul(a, b):
    # field of order 4 as 2-bit polynomials mod x^2+x+1
    r = 0
    for i in range(2):
        if (b >> i) & 1:
            r ^= a << i
    for i in (3, 2):
        if (r >> i) & 1:
            r ^= 0b111 << (i - 2)
    return r & 3


def build_m22() -> Graph:
    pts = []
    for x, y, z in product(range(4), repeat=3):
        if (x, y, z) == (0, 0, 0):
            continue
        # normalize: first nonzero coordinate equal to 1
        first = x if x else (y if y else z)
        inv = [0, 1, 3, 2][first]  # inverses in GF(4)
        p = tuple(gf4_mul(inv, c) for c in (x, y, z))
        if p not in pts:
            pts.append(p)
    check(len(pts) == 21, "pg(2,4) point count")
    pidx = {p: i for i, p in enumerate(pts)}

    def on_line(line, p):
        a, b, c = line
        x, y, z = p
        return gf4_mul(a, x) ^ gf4_mul(b, y) ^ gf4_mul(c, z) == 0

    lines = []
    for coeffs in pts:
        line = frozenset(pidx[p] for p in pts if on_line(coeffs, p))
        check(len(line) == 5, "line size")
        lines.append(line)
    collinear = set()
    for line in lines:
        for t in combinations(sorted(line), 3):
            collinear.add(t)
    hyperovals = [frozenset(s) for s in combinations(range(21), 6)
                  if not any(t in collinear for t in combinations(s, 3))]
    check(len(hyperovals) == 168, "hyperoval count")
    # two hyperovals lie in the same class iff they meet evenly
    classes = []
    for h in hyperovals:
        for cl in classes:
            if len(h & next(iter(cl))) % 2 == 0:
                cl.add(h)
                break
        else:
            classes.append({h})
    check(sorted(len(c) for c in classes) == [56, 56, 56], "hyperoval classes")
    for cl in classes:
        hl = sorted(cl, key=sorted)
        check(all(len(a & b) % 2 == 0 for a in hl for b in hl),
              "class intersections")
    blocks = [frozenset(line | {21}) for line in lines]
    blocks += sorted(classes[0], key=sorted)
    check(len(blocks) == 77, "block count")
    hits = {}
    for bi, blk in enumerate(blocks):
        for t in combinations(sorted(blk), 3):
            check(t not in hits, "triple covered twice")
            hits[t] = bi
    check(len(hits) == 1540, "steiner triple coverage")
    edges = [(a, b) for a in range(77) for b in range(a + 1, 77)
             if not blocks[a] & blocks[b]]
    G = Graph(77, edges)
    check(srg_params(G) == (77, 16, 0, 4), "m22 srg")
    return G


# ---------------------------------------------------------------------------
# PSL(2,19) and the Perkel graph
# ---------------------------------------------------------------------------


def build_perkel() -> Graph:
    p = 19
    INF = p
    pts = list(range(p)) + [INF]

    def moebius(a, b, c, d):
        out = []
        for x in pts:
            if x == INF:
                out.append((a * pow(c, -1, p)) % p if c % p else INF)
            else:
                den = (c * x + d) % p
                out.append(((a * x + b) * pow(den, -1, p)) % p if den else INF)
        return tuple(out)

    gens = [moebius(1, 1, 0, 1), moebius(0, -1, 1, 0), moebius(4, 0, 0, 5)]
    elems = {tuple(range(p + 1))}
    frontier = list(elems)
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                e = tuple(g[h[i]] for i in range(p + 1))
                if e not in elems:
                    elems.add(e)
                    nxt.append(e)
        frontier = nxt
    elems = sorted(elems)
    check(len(elems) == 3420, "psl(2,19) order")
    eidx = {g: i for i, g in enumerate(elems)}
    ident = tuple(range(p + 1))

    def mul(i, j):
        a, b = elems[i], elems[j]
        return eidx[tuple(a[b[k]] for k in range(p + 1))]

    def order_of(i):
        k, cur = 1, i
        while elems[cur] != ident:
            cur = mul(cur, i)
            k += 1
        return k

    orders = [order_of(i) for i in range(3420)]
    twos = [i for i in range(3420) if orders[i] == 2]
    threes = [i for i in range(3420) if orders[i] == 3]

    def gen_subgroup(a, b, cap=61):
        sub = {eidx[ident]}
        frontier = [eidx[ident]]
        while frontier:
            nxt = []
            for g in frontier:
                for h in (a, b):
                    e = mul(g, h)
                    if e not in sub:
                        sub.add(e)
                        nxt.append(e)
                        if len(sub) > cap:
                            return None
            frontier = nxt
        return sub

    H = None
    for s in twos:
        for t in threes:
            if orders[mul(s, t)] == 5:
                sub = gen_subgroup(s, t)
                if sub is not None and len(sub) == 60:
                    H = sorted(sub)
                    break
        if H:
            break
    check(H is not None, "no A5 subgroup found")

    # left cosets gH, named by their minimum element
    coset_of = [None] * 3420
    reps = []
    for g in range(3420):
        if coset_of[g] is None:
            members = sorted(mul(g, h) for h in H)
            cid = len(reps)
            reps.append(members[0])
            for m in members:
                coset_of[m] = cid
    check(len(reps) == 57, "coset count")

    # suborbits of H acting on cosets from the left
    suborbit = [None] * 57
    orbits = []
    for c in range(57):
        if suborbit[c] is None:
            oid = len(orbits)
            stack, members = [c], []
            suborbit[c] = oid
            while stack:
                x = stack.pop()
                members.append(x)
                for h in H:
                    y = coset_of[mul(h, reps[x])]
                    if suborbit[y] is None:
                        suborbit[y] = oid
                        stack.append(y)
            orbits.append(sorted(members))

    inv = [0] * 3420
    for i in range(3420):
        for j in range(3420):
            if mul(i, j) == eidx[ident]:
                inv[i] = j
                break

    for orb in orbits:
        if len(orb) != 6:
            continue
        rep = reps[orb[0]]
        if suborbit[coset_of[inv[rep]]] != suborbit[orb[0]]:
            continue  # not self-paired
        target = set(orb)
        edges = [(a, b) for a in range(57) for b in range(a + 1, 57)
                 if coset_of[mul(inv[reps[a]], reps[b])] in target]
        G = Graph(57, edges)
        ia = intersection_array(G)
        if ia and ia.as_tuple() == ((6, 5, 2), (1, 1, 3)):
            return G
    raise AssertionError("no degree-6 orbital matches the Perkel array")


# ---------------------------------------------------------------------------
# signings with prescribed squares
# ---------------------------------------------------------------------------


def _two_common_signing(G: Graph, square: int) -> SignedGraph:
    """Signing with S^2 = square*I for a graph in which every vertex pair
    has 0 or 2 common neighbours (pairs with 2 give one GF(2) equation)."""
    A = G.adjacency_int()
    A2 = A @ A
    rows = []
    for u in range(G.n):
        for v in range(u + 1, G.n):
            c = int(A2[u, v])
            if c == 0:
                continue
            check(c == 2, "pair with other than 0 or 2 common neighbours")
            common = [w for w in range(G.n) if A[u, w] and A[w, v]]
            mask = 0
            for w in common:
                mask ^= 1 << G.edge_id(u, w)
                mask ^= 1 << G.edge_id(w, v)
            rows.append((mask, 1))
    x = _gf2_solve_affine(rows, G.m)
    check(x is not None, "signing system unsolvable")
    sg = SignedGraph(G, {e: -1 if (x >> e) & 1 else 1 for e in range(G.m)})
    S = sg.signed_adjacency()
    check((S @ S) == ExactMatrix.identity(G.n).scale(square), "S^2 check")
    return sg


def build_wells(clebsch: Graph):
    sg = _two_common_signing(clebsch, 5)
    n = clebsch.n
    edges = []
    for eid, (u, v) in enumerate(clebsch.edges):
        if sg.sign[eid] == 1:
            edges += [(u, v), (u + n, v + n)]
        else:
            edges += [(u, v + n), (min(u + n, v), max(u + n, v))]
    edges = sorted(tuple(sorted(e)) for e in edges)
    G = Graph(2 * n, edges)
    ia = intersection_array(G)
    check(ia and ia.as_tuple() == ((5, 4, 1, 1), (1, 1, 4, 5)), "wells array")
    fold = antipodal_fold(G)
    check(fold is not None and srg_params(fold[0]) == (16, 5, 0, 2),
          "wells fold")
    return G, sg


def build_heawood_d3_signing(heawood: Graph) -> SignedGraph:
    H3 = distance_data(heawood).distance_graph(3)
    return _two_common_signing(H3, 4)


# ---------------------------------------------------------------------------
# parity-family fixtures
# ---------------------------------------------------------------------------


def parity_fixture(G: Graph, j: int, size: int, source: str) -> dict:
    sys_ = phi(G, j)
    eligible = [(idx, p) for idx, p in enumerate(sys_.polynomials)
                if p.coprime_pair()]
    variables = sorted({v for _, p in eligible
                        for m in p.monomials for v in m})
    vidx = {v: i for i, v in enumerate(variables)}
    # rows of the GF(2) system: one per variable, bit e per eligible poly
    rows = [0] * len(variables)
    for col, (_, p) in enumerate(eligible):
        for mono in p.monomials:
            for v in mono:
                rows[vidx[v]] ^= 1 << col
    basis = gf2_kernel_basis(rows, len(eligible))
    dim = len(basis)
    found = None
    if dim <= 16:
        for mask in range(1, 1 << dim):
            x = 0
            mm = mask
            while mm:
                b = (mm & -mm).bit_length() - 1
                x ^= basis[b]
                mm &= mm - 1
            if bin(x).count("1") == size:
                found = x
                break
    else:
        # randomized descent: start from a random kernel vector, greedily
        # lower the weight, and keep any odd vector hitting the target
        rng = random.Random(20240817)
        for _ in range(50_000):
            x = 0
            for b in basis:
                if rng.random() < 0.5:
                    x ^= b
            improved = True
            while improved:
                improved = False
                for b in rng.sample(basis, dim):
                    w2 = bin(x ^ b).count("1")
                    if 0 < w2 < bin(x).count("1"):
                        x ^= b
                        improved = True
            if bin(x).count("1") == size:
                found = x
                break
    check(found is not None, f"no parity family of size {size} for {source}")
    family = sorted(eligible[i][0] for i in range(len(eligible))
                    if (found >> i) & 1)
    cert = verify_parity_family(sys_, family)
    check(cert.witness["family_size"] == size, "fixture size mismatch")
    return {"source": source, "j": j, "size": size, "family": family}


def kneser_fixture() -> dict:
    """Size-9 family for the Kneser graph K(7, 3) at j = 3, found as a
    union of orbits of a double 3-cycle acting on the ground set."""
    from functools import reduce
    from itertools import combinations

    from spectracert.johnson import ones_positions, word_list

    G = johnson_graph(7, 3, 3)
    sys_ = phi(G, 3)
    words = word_list(7, 3)
    vsets = [frozenset(ones_positions(w)) for w in words]
    setidx = {fs: i for i, fs in enumerate(vsets)}
    pairidx = {p.pair: i for i, p in enumerate(sys_.polynomials)}

    def mask(p):
        m_ = 0
        for mono in p.monomials:
            for v in mono:
                m_ ^= 1 << v
        return m_

    masks = [mask(p) for p in sys_.polynomials]
    perm = {1: 2, 2: 3, 3: 1, 4: 5, 5: 6, 6: 4, 7: 7}
    vmap = [setidx[frozenset(perm[x] for x in fs)] for fs in vsets]
    seen, orbs = set(), []
    for i, p in enumerate(sys_.polynomials):
        if i in seen:
            continue
        orb, (a, b) = [i], p.pair
        while True:
            a2, b2 = vmap[a], vmap[b]
            nxt = pairidx[(min(a2, b2), max(a2, b2))]
            if nxt == orb[0]:
                break
            orb.append(nxt)
            a, b = a2, b2
        seen.update(orb)
        orbs.append(orb)
    items = [(len(o), o, reduce(lambda x, y: x ^ y, (masks[i] for i in o)))
             for o in orbs]
    for k in range(2, 5):
        for combo in combinations(range(len(items)), k):
            if sum(items[i][0] for i in combo) != 9:
                continue
            x = 0
            for i in combo:
                x ^= items[i][2]
            if x == 0:
                family = sorted(sum((items[i][1] for i in combo), []))
                cert = verify_parity_family(sys_, family)
                check(cert.witness["family_size"] == 9, "kneser fixture size")
                return {"source": "johnson:7:3:3", "j": 3, "size": 9,
                        "family": family}
    raise AssertionError("no size-9 family for the Kneser graph")


# ---------------------------------------------------------------------------
# character tables
# ---------------------------------------------------------------------------


def perm_group_table(gens, degree):
    ident = tuple(range(degree))
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                e = tuple(g[h[i]] for i in range(degree))
                if e not in elems:
                    elems.add(e)
                    nxt.append(e)
        frontier = nxt
    elems = sorted(elems)
    idx = {g: i for i, g in enumerate(elems)}
    table = [[idx[tuple(a[b[k]] for k in range(degree))] for b in elems]
             for a in elems]
    return elems, table


def element_order(table, e, i):
    k, cur = 1, i
    while cur != e:
        cur = table[cur][i]
        k += 1
    return k


def conj_classes(table):
    n = len(table)
    e = next(i for i in range(n)
             if all(table[i][x] == x for x in range(n)))
    inv = [next(b for b in range(n) if table[a][b] == e) for a in range(n)]
    seen = [False] * n
    out = []
    for x in range(n):
        if not seen[x]:
            cls = sorted({table[table[g][x]][inv[g]] for g in range(n)})
            for y in cls:
                seen[y] = True
            out.append(cls)
    return e, out


def chartable_record(name, table, class_key, char_rows, exact=True):
    """class_key(table, cls) -> sortable key aligning classes to char_rows
    columns; char_rows values are strings."""
    e, classes = conj_classes(table)
    classes.sort(key=lambda cls: class_key(table, cls))
    rec = {
        "name": name,
        "order": len(table),
        "exact": exact,
        "classes": [{"size": len(c), "rep": c[0],
                     "name": f"c{k}"} for k, c in enumerate(classes)],
        "table": char_rows,
        "group_table": table,
    }
    if exact:
        # orthogonality sanity before writing
        h = len(table)
        rows = [[Fraction(x) for x in r] for r in char_rows]
        sizes = [len(c) for c in classes]
        for a in range(len(rows)):
            for b in range(len(rows)):
                s = sum(sizes[j] * rows[a][j] * rows[b][j]
                        for j in range(len(sizes)))
                check(s == (h if a == b else 0), f"{name} orthogonality")
    return rec


def key_by_order_size(table, cls):
    e, _ = conj_classes(table)
    return (element_order(table, e, cls[0]), len(cls), cls[0])


def build_character_tables():
    out = {}
    # S3 on 3 points: classes by element order 1, 2, 3
    _, s3 = perm_group_table([(1, 0, 2), (1, 2, 0)], 3)
    out["s3"] = chartable_record(
        "s3", s3, key_by_order_size,
        [["1", "1", "1"], ["1", "-1", "1"], ["2", "0", "-1"]])
    # S4 on 4 points: classes ordered 1a, 2a(transpositions), 2b(double),
    # 3a, 4a -- order then size puts double transpositions (size 3) before
    # transpositions (size 6)
    _, s4 = perm_group_table([(1, 0, 2, 3), (1, 2, 3, 0)], 4)
    out["s4"] = chartable_record(
        "s4", s4, key_by_order_size,
        [["1", "1", "1", "1", "1"],
         ["1", "1", "-1", "1", "-1"],
         ["2", "2", "0", "-1", "0"],
         ["3", "-1", "1", "0", "-1"],
         ["3", "-1", "-1", "0", "1"]])
    # D4 as symmetries of a square: classes 1a, 2a(r^2), 2b, 2c, 4a
    _, d4 = perm_group_table([(1, 2, 3, 0), (3, 2, 1, 0)], 4)
    out["d4"] = chartable_record(
        "d4", d4, key_by_order_size,
        [["1", "1", "1", "1", "1"],
         ["1", "1", "-1", "1", "-1"],
         ["1", "1", "1", "-1", "-1"],
         ["1", "1", "-1", "-1", "1"],
         ["2", "-2", "0", "0", "0"]])
    # Q8 as permutations (regular-ish rep on 8 points): i, j generators
    _, q8 = perm_group_table([(1, 2, 3, 0, 5, 6, 7, 4),
                              (4, 7, 6, 5, 2, 1, 0, 3)], 8)
    check(len(q8) == 8, "q8 order")
    out["q8"] = chartable_record(
        "q8", q8, key_by_order_size,
        [["1", "1", "1", "1", "1"],
         ["1", "1", "-1", "1", "-1"],
         ["1", "1", "1", "-1", "-1"],
         ["1", "1", "-1", "-1", "1"],
         ["2", "-2", "0", "0", "0"]])
    # D5: the two 2-dimensional characters take irrational values
    # 2cos(2pi/5) and 2cos(4pi/5); stored as decimal approximations and
    # flagged inexact so scheme construction refuses the table
    _, d5 = perm_group_table([(1, 2, 3, 4, 0), (4, 3, 2, 1, 0)], 5)
    check(len(d5) == 10, "d5 order")
    out["d5"] = chartable_record(
        "d5", d5, key_by_order_size,
        [["1", "1", "1", "1"],
         ["1", "-1", "1", "1"],
         ["2", "0", "0.6180339887", "-1.6180339887"],
         ["2", "0", "-1.6180339887", "0.6180339887"]],
        exact=False)
    return out


# ---------------------------------------------------------------------------
# driver
# ---------------------------------------------------------------------------


def main():
    DATA.mkdir(exist_ok=True)
    files = {}

    def put(name, payload: bytes):
        (DATA / name).write_bytes(payload)
        files[name] = hashlib.sha256(payload).hexdigest()
        print(f"wrote {name} ({len(payload)} bytes)")

    heawood = build_heawood()
    put("heawood.g6", save_graph6(heawood))
    shrikhande = build_shrikhande()
    put("shrikhande.g6", save_graph6(shrikhande))
    icosa = build_icosahedron()
    put("icosahedron.g6", save_graph6(icosa))
    clebsch = build_clebsch()
    put("clebsch.g6", save_graph6(clebsch))
    coxeter = build_coxeter()
    put("coxeter.g6", save_graph6(coxeter))
    put("halved8cube.g6", save_graph6(build_halved8cube()))
    put("m22.g6", save_graph6(build_m22()))
    put("perkel.g6", save_graph6(build_perkel()))

    wells, _ = build_wells(clebsch)
    put("wells.g6", save_graph6(wells))

    sg = build_heawood_d3_signing(heawood)
    payload = json.dumps({
        "graph": {"n": sg.base.n, "edges": [list(e) for e in sg.base.edges]},
        "signs": [sg.sign[e] for e in range(sg.base.m)],
    }).encode()
    put("heawood_distance3_signing.json", payload)

    fixtures = [
        ("parity_h23_j2.json", hamming_graph(2, 3), 2, 9, "hamming:2:3"),
        ("parity_shrikhande_j2.json", shrikhande, 2, 11, "bundled:shrikhande"),
        ("parity_icosahedron_j2.json", icosa, 2, 15, "bundled:icosahedron"),
        ("parity_coxeter_j4.json", coxeter, 4, 21, "bundled:coxeter"),
    ]
    for fname, G, j, size, source in fixtures:
        rec = parity_fixture(G, j, size, source)
        put(fname, json.dumps(rec).encode())
    put("parity_kneser73_j3.json", json.dumps(kneser_fixture()).encode())

    for name, rec in build_character_tables().items():
        put(f"chartable_{name}.json", json.dumps(rec).encode())

    manifest = json.dumps(dict(sorted(files.items())), indent=1)
    (DATA / "manifest.json").write_text(manifest)
    print(f"manifest: {len(files)} files")


if __name__ == "__main__":
    main()
