"""Hamming-family constructions: distance-j graphs, hypercube signings,
clique boundary recursions, conference-matrix signings of complete graphs,
and the mod-3 binomial sums behind the two-eigenvalue idempotents.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .exact import ENTRY_CAP, DimensionCapError, ExactMatrix
from .graphs import Graph


class OmzdNonexistent(ValueError):
    """No orthogonal matrix with zero diagonal exists for this order."""


class OmzdUnavailable(LookupError):
    """The order is admissible but no construction or data file is known."""


class LemmaViolation(AssertionError):
    """Direct summation disagreed with a closed form that should be exact."""


def hamming_graph(d: int, n: int, j: int = 1) -> Graph:
    """Distance-j graph of H(d, n): vertices Y_n^d in lexicographic order,
    adjacent when they differ in exactly j coordinates."""
    if d < 1 or n < 2:
        raise ValueError("need d >= 1 and n >= 2")
    if not (1 <= j <= d):
        raise ValueError("need 1 <= j <= d")
    verts = list(product(range(n), repeat=d))
    m = len(verts)
    if m * m > ENTRY_CAP:
        raise DimensionCapError(f"{m} vertices exceed dense cap")
    edges = []
    for a in range(m):
        va = verts[a]
        for b in range(a + 1, m):
            vb = verts[b]
            if sum(1 for x, y in zip(va, vb) if x != y) == j:
                edges.append((a, b))
    labels = ["".join(map(str, v)) for v in verts]
    return Graph(m, edges, labels=labels)


def hypercube_signing(d: int) -> ExactMatrix:
    """The recursive +-1 signing of H(d, 2) with square d I.

    M_1 is the adjacency of K_2 and M_d = [[M, I], [I, -M]], matching the
    lexicographic vertex order of the d-cube split on the first coordinate.
    """
    if d < 1:
        raise ValueError("d >= 1 required")
    if 4 ** d > ENTRY_CAP:
        raise DimensionCapError("2^d too large for the dense cap")
    m = np.array([[0, 1], [1, 0]], dtype=np.int64)
    for _ in range(2, d + 1):
        k = m.shape[0]
        eye = np.eye(k, dtype=np.int64)
        m = np.block([[m, eye], [eye, -m]])
    return ExactMatrix(m)


# ---------------------------------------------------------------------------
# clique boundary recursion
# ---------------------------------------------------------------------------


def star_words(d: int) -> List[str]:
    """Words of length d over {0, 1, *} with exactly one *, lexicographic
    with 0 < 1 < *."""
    out = []
    for w in product("01*", repeat=d):
        if w.count("*") == 1:
            out.append("".join(w))
    return out


def clique_boundary_pair(d: int) -> Tuple[ExactMatrix, ExactMatrix]:
    """(E_d, F_d): signed inclusion matrices between the (d-1)-cliques and
    d-cliques of the complete multipartite graph K_{d x 2}.

    Rows are indexed by the one-star words in lexicographic order with
    0 < 1 < *, columns by binary words in lexicographic order.  They
    satisfy E^T E - dI = M_d = -(F^T F - dI).
    """
    if d < 1:
        raise ValueError("d >= 1 required")
    if d * 2 ** (d - 1) * 2 ** d > ENTRY_CAP:
        raise DimensionCapError("clique boundary too large for the dense cap")
    E = np.array([[1, 1]], dtype=np.int64)
    F = np.array([[-1, 1]], dtype=np.int64)
    for _ in range(2, d + 1):
        k = E.shape[1]
        eye = np.eye(k, dtype=np.int64)
        zero = np.zeros_like(E)
        E2 = np.block([[E, zero], [zero, F], [eye, eye]])
        F2 = np.block([[F, zero], [zero, E], [-eye, eye]])
        E, F = E2, F2
    return ExactMatrix(E), ExactMatrix(F)


# ---------------------------------------------------------------------------
# orthogonal matrices with zero diagonal
# ---------------------------------------------------------------------------


@dataclass
class OmzdEntry:
    order: int
    matrix: ExactMatrix
    weight: int  # M M^T = weight * I
    provenance: str  # "constructed" or "ingested"


def _prime_power(q: int) -> Optional[Tuple[int, int]]:
    if q < 2:
        return None
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            return (p, k) if m == 1 else None
    return None


def _gf_squares(p: int, k: int) -> Tuple[List[Tuple[int, ...]], set]:
    """Elements of GF(p^k) as coefficient tuples, plus its nonzero squares."""
    if k == 1:
        elems = [(i,) for i in range(p)]
        sq = {((i * i) % p,) for i in range(1, p)}
        return elems, sq

    def polmulmod(a, b, mod):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
        # reduce by the monic modulus
        while len(out) >= len(mod):
            lead = out[-1]
            if lead:
                shift = len(out) - len(mod)
                for i in range(len(mod)):
                    out[shift + i] = (out[shift + i] - lead * mod[i]) % p
            out.pop()
        return out

    def is_irreducible(mod):
        # no roots and no factor of degree <= k//2, by trial division
        polys = [list(c) for c in product(range(p), repeat=k)]
        for deg in range(1, k // 2 + 1):
            for c in product(range(p), repeat=deg):
                cand = list(c) + [1]
                # long division of mod by cand
                rem = list(mod)
                while len(rem) >= len(cand):
                    lead = rem[-1]
                    if lead:
                        inv = pow(cand[-1], -1, p)
                        f = (lead * inv) % p
                        shift = len(rem) - len(cand)
                        for i in range(len(cand)):
                            rem[shift + i] = (rem[shift + i] - f * cand[i]) % p
                    rem.pop()
                if all(x == 0 for x in rem):
                    return False
        return True

    mod = None
    for c in product(range(p), repeat=k):
        cand = list(c) + [1]
        if is_irreducible(cand):
            mod = cand
            break
    if mod is None:
        raise AssertionError("no irreducible polynomial found")
    elems = [tuple(c) for c in product(range(p), repeat=k)]
    sq = set()
    for e in elems:
        if any(e):
            s = polmulmod(list(e), list(e), mod)
            s = s + [0] * (k - len(s))
            sq.add(tuple(s[:k]))
    return elems, sq


def paley_conference(q: int) -> ExactMatrix:
    """Symmetric conference matrix of order q+1 for a prime power
    q congruent to 1 mod 4, via quadratic residues."""
    pp = _prime_power(q)
    if pp is None or q % 4 != 1:
        raise ValueError("q must be a prime power congruent to 1 mod 4")
    p, k = pp
    elems, squares = _gf_squares(p, k)
    idx = {e: i for i, e in enumerate(elems)}
    n = q + 1
    c = np.zeros((n, n), dtype=np.int64)
    c[0, 1:] = 1
    c[1:, 0] = 1
    for a in elems:
        for b in elems:
            if a == b:
                continue
            diff = tuple((x - y) % p for x, y in zip(a, b))
            c[1 + idx[a], 1 + idx[b]] = 1 if diff in squares else -1
    return ExactMatrix(c)


def verify_omzd(M: ExactMatrix) -> int:
    """Check the OMZD axioms; returns the weight c with M M^T = c I."""
    if not M.is_square() or not M.is_symmetric():
        raise ValueError("OMZD must be square symmetric")
    n = M.rows
    for i in range(n):
        if M.num[i, i] != 0:
            raise ValueError("nonzero diagonal entry")
        for j in range(n):
            if i != j and M.num[i, j] == 0:
                raise ValueError("zero off-diagonal entry")
    prod = M @ M.T
    # weight from the (0,0) entry, then full verification
    c = prod[0, 0]
    if c <= 0 or not prod.equals_scaled_identity(c):
        raise ValueError("M M^T is not a positive multiple of I")
    if c.denominator != 1:
        raise ValueError("non-integer weight")
    return int(c)


def omzd(n: int, data_dir: Optional[str] = None) -> OmzdEntry:
    """Orthogonal matrix with zero diagonal of order n.

    Exists exactly when n is even and n != 4.  Constructed directly for
    n = 2 and, via Paley conference matrices, for n = 2 mod 4 with n-1 an
    odd prime power; other even orders are served from ingested data.
    """
    if n % 2 == 1 or n == 4:
        raise OmzdNonexistent(f"no orthogonal matrix with zero diagonal of order {n}")
    if n == 2:
        M = ExactMatrix(np.array([[0, 1], [1, 0]], dtype=np.int64))
        return OmzdEntry(2, M, verify_omzd(M), "constructed")
    if n % 4 == 2 and _prime_power(n - 1) is not None:
        M = paley_conference(n - 1)
        return OmzdEntry(n, M, verify_omzd(M), "constructed")
    from .data import load_omzd_file
    M = load_omzd_file(n, data_dir)
    if M is None:
        raise OmzdUnavailable(f"no construction or data file for order {n}")
    return OmzdEntry(n, M, verify_omzd(M), "ingested")


@dataclass
class TensorSigningCertificate:
    matrix: ExactMatrix
    weight: int  # square equals weight * I
    orders: Tuple[int, ...]


def tensor_signing(orders: Sequence[int],
                   data_dir: Optional[str] = None) -> TensorSigningCertificate:
    """Kronecker product of zero-diagonal orthogonal signings.

    The result B satisfies B^2 = (prod of weights) I and is supported on
    the tensor product of the corresponding complete graphs.
    """
    if not orders:
        raise ValueError("need at least one order")
    entries = [omzd(n, data_dir) for n in orders]
    B = entries[0].matrix
    w = entries[0].weight
    for e in entries[1:]:
        from .exact import kronecker
        B = kronecker(B, e.matrix)
        w *= e.weight
    if not (B @ B).equals_scaled_identity(w):
        raise AssertionError("tensor signing square identity failed")
    return TensorSigningCertificate(B, w, tuple(orders))


# ---------------------------------------------------------------------------
# mod-3 binomial sums
# ---------------------------------------------------------------------------


@dataclass
class ZetaTable:
    d: int
    j: int
    t: int
    value: int
    kappa: int


def _zeta_direct(d: int, j: int, t: int) -> int:
    total = 0
    for i in range(t % 3, d + 1, 3):
        inner = sum((-1) ** h * math.comb(i, h) * math.comb(d - i, j - h)
                    for h in range(0, j + 1))
        total += math.comb(d, i) * inner
    return total


def _zeta_closed(d: int, j: int, t: int) -> int:
    s = {0: 0, 1: -2, 2: 2}[d % 3]
    r = (d - s) // 3
    assert s in (-2, 0, 2) and r >= 1
    kappa = (-3) ** ((j + 1) // 2 - 1) * math.comb(d, j) if j >= 1 else 0
    cls1 = {(-2, 1), (2, 0), (0, 2)}
    cls2 = {(-2, 0), (2, 2), (0, 1)}
    cls3 = {(-2, 2), (2, 1), (0, 0)}
    key = (s, t)
    if key in cls1:
        if j == 0:
            return (2 ** d - (-1) ** d) // 3
        return (-1) ** r * kappa
    if key in cls2:
        if j == 0:
            return (2 ** d - (-1) ** d) // 3
        return (-1) ** (r + j) * kappa
    assert key in cls3
    if j % 2 == 1:
        return 0
    if j == 0:
        return (2 ** d + (-1) ** d * 2) // 3
    return (-1) ** (r + 1) * 2 * kappa


def zeta(d: int, j: int, t: int) -> ZetaTable:
    """The mod-3 filtered binomial double sum, computed two ways.

    The direct summation and the case-split closed form must agree; a
    mismatch raises LemmaViolation.
    """
    if d < 3:
        raise ValueError("d >= 3 required")
    if not (0 <= j <= d) or t not in (0, 1, 2):
        raise ValueError("need 0 <= j <= d and t in {0,1,2}")
    direct = _zeta_direct(d, j, t)
    closed = _zeta_closed(d, j, t)
    if direct != closed:
        raise LemmaViolation(
            f"zeta({d},{j},{t}): direct {direct} != closed form {closed}")
    kappa = (-3) ** ((j + 1) // 2 - 1) * math.comb(d, j) if j >= 1 else 0
    return ZetaTable(d, j, t, direct, kappa)
