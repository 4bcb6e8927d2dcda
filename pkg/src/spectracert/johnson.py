"""Signed matrices attached to set-inclusion structure on binary words.

Vertices of J(n, d) are the weight-d binary words of length n.  The word
order used everywhere is the one compatible with the block recursions:
words ending in 1 come before words ending in 0, recursively.  Written as
1-position sets this is colexicographic order read in reverse; it is fixed
once here and every edge id, row index and certificate refers to it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .exact import DimensionCapError, ENTRY_CAP, ExactMatrix, annihilator_check, \
    rank_rational, rank_via_scaled_idempotent
from .graphs import Graph

Word = Tuple[int, ...]


@lru_cache(maxsize=None)
def word_list(n: int, d: int) -> Tuple[Word, ...]:
    """All weight-d words of length n, block-recursion order."""
    if d < 0 or d > n:
        return ()
    if n == 0:
        return ((),)
    ending_one = [w + (1,) for w in word_list(n - 1, d - 1)]
    ending_zero = [w + (0,) for w in word_list(n - 1, d)]
    return tuple(ending_one + ending_zero)


@lru_cache(maxsize=None)
def word_index(n: int, d: int) -> Dict[Word, int]:
    return {w: i for i, w in enumerate(word_list(n, d))}


def ones_positions(w: Word) -> List[int]:
    """1-based indices of the 1s, increasing."""
    return [i + 1 for i, b in enumerate(w) if b]


def gap_sizes(w: Word) -> List[int]:
    """z_0..z_d: zero-run lengths before, between and after the 1s."""
    z = [0]
    for b in w:
        if b:
            z.append(0)
        else:
            z[-1] += 1
    return z


def r_value(w: Word) -> int:
    z = gap_sizes(w)
    return sum(z[i] for i in range(1, len(z), 2))


def s_value(w: Word) -> int:
    z = gap_sizes(w)
    return sum(z[i] for i in range(0, len(z), 2))


def h_between(a: Word, b: Word) -> int:
    """Shared 1s strictly between the two differing positions.

    Requires Hamming distance exactly 2.
    """
    diff = [i for i in range(len(a)) if a[i] != b[i]]
    if len(diff) != 2:
        raise ValueError("words not at Hamming distance 2")
    i, j = diff
    return sum(1 for k in range(i + 1, j) if a[k] == 1 and b[k] == 1)


def _check_size(rows: int, cols: int) -> None:
    if rows * cols > ENTRY_CAP:
        raise DimensionCapError(
            f"{rows}x{cols} exceeds dense cap {ENTRY_CAP}")


# ---------------------------------------------------------------------------
# matrix builders
# ---------------------------------------------------------------------------


def boundary_W(n: int, d: int) -> ExactMatrix:
    """Signed inclusion matrix between weight-d and weight-(d+1) words.

    Entry (alpha, beta) is (-1)^(i-1) when alpha is beta with its i-th 1
    removed (1s numbered left to right), 0 otherwise.
    """
    if not (0 <= d <= n - 1):
        raise ValueError("need 0 <= d <= n-1")
    rows = word_list(n, d)
    cols = word_list(n, d + 1)
    _check_size(len(rows), len(cols))
    ridx = word_index(n, d)
    a = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for cj, beta in enumerate(cols):
        xs = ones_positions(beta)
        for i, x in enumerate(xs, start=1):
            alpha = list(beta)
            alpha[x - 1] = 0
            a[ridx[tuple(alpha)], cj] = (-1) ** (i - 1)
    return ExactMatrix(a)


def signed_adjacency_A(n: int, d: int) -> ExactMatrix:
    """Signed adjacency matrix: (-1)^h at Hamming-distance-2 word pairs."""
    if not (1 <= d <= n - 1):
        raise ValueError("need 1 <= d <= n-1")
    words = word_list(n, d)
    m = len(words)
    _check_size(m, m)
    a = np.zeros((m, m), dtype=np.int64)
    masks = [sum(b << k for k, b in enumerate(w)) for w in words]
    for i in range(m):
        wi = masks[i]
        for j in range(i + 1, m):
            diff = wi ^ masks[j]
            if diff.bit_count() == 2:
                lo = diff & -diff
                between = ((diff ^ lo) - 1) & ~((lo << 1) - 1)
                s = -1 if (wi & masks[j] & between).bit_count() & 1 else 1
                a[i, j] = s
                a[j, i] = s
    return ExactMatrix(a)


def signed_adjacency_entrywise(n: int, d: int) -> ExactMatrix:
    return signed_adjacency_A(n, d)


def laplacian_pair(n: int, d: int, verify: bool = True
                   ) -> Tuple[ExactMatrix, ExactMatrix]:
    """(Q, P) = (W(n,d-1)^T W(n,d-1), W(n,d) W(n,d)^T).

    With verify=True the entrywise descriptions are also checked: Q has
    diagonal d and off-diagonal (-1)^h on adjacent word pairs, P has
    diagonal n-d and off-diagonal (-1)^(h+1).
    """
    if not (1 <= d <= n - 1):
        raise ValueError("need 1 <= d <= n-1")
    Wlow = boundary_W(n, d - 1)
    Whigh = boundary_W(n, d)
    Q = Wlow.T @ Wlow
    P = Whigh @ Whigh.T
    if verify:
        A = signed_adjacency_A(n, d)
        I = ExactMatrix.identity(Q.rows)
        if Q != A + I.scale(d):
            raise AssertionError("Q does not match its entrywise form")
        if P != I.scale(n - d) - A:
            raise AssertionError("P does not match its entrywise form")
    return Q, P


def combination_matrix_M(n: int, d: int) -> ExactMatrix:
    """M(n,d) = [ P(n-1,d-1) | W(n-1,d-1) ], the frame synthesis matrix."""
    if d < 2 or n < d + 1:
        raise ValueError("need d >= 2 and n >= d+1")
    W = boundary_W(n - 1, d - 1)
    P = W @ W.T
    return P.hstack(W)


@dataclass
class PsdWitness:
    R: ExactMatrix
    rank: int
    annihilator_roots: Tuple[int, int]


def psd_witness_R(n: int, d: int) -> PsdWitness:
    """R = M^T M: a PSD matrix with the adjacency support of J(n, d).

    Verifies rank = C(n-2, d-1) and the annihilator R(R - n(n-1)I) = 0,
    which pins the spectrum to {0, n(n-1)}.
    """
    M = combination_matrix_M(n, d)
    R = M.T @ M
    c = n * (n - 1)
    if not annihilator_check(R, [0, c]):
        raise AssertionError("R annihilator failed")
    rank = rank_via_scaled_idempotent(R, c)
    expected = math.comb(n - 2, d - 1)
    if rank != expected:
        raise AssertionError(f"rank(R) = {rank}, expected {expected}")
    return PsdWitness(R, rank, (0, c))


@dataclass
class DegreeProfile:
    k_plus: int
    k_minus: int
    r_value: int
    s_value: int


def degree_profile(n: int, d: int, word: Word) -> DegreeProfile:
    """Positive/negative degree of a word in the signed adjacency matrix.

    Computed from the closed form (constant for odd d, r-dependent for
    even d) and cross-checked against a direct sign count in the word's
    row of the signed adjacency matrix.
    """
    word = tuple(word)
    if len(word) != n or sum(word) != d:
        raise ValueError("word not in B(n, d)")
    r = r_value(word)
    s = s_value(word)
    if d % 2 == 1:
        kp = (d + 1) * (n - d) // 2
        km = (d - 1) * (n - d) // 2
    else:
        kp = d * (n - d) // 2 + r
        km = d * (n - d) // 2 - r
    # Independent route: count signs in the row of A.
    A = signed_adjacency_A(n, d)
    i = word_index(n, d)[word]
    row = A.num[i]
    kp2 = int((row > 0).sum())
    km2 = int((row < 0).sum())
    if (kp, km) != (kp2, km2):
        raise AssertionError(
            f"degree profile mismatch: closed form ({kp},{km}) vs row ({kp2},{km2})")
    return DegreeProfile(kp, km, r, s)


@dataclass
class WeighingCertificate:
    order: int
    weight: int
    verified: bool


def weighing_check(d: int) -> WeighingCertificate:
    """Verify A(2d, d) A(2d, d)^T = d^2 I, a weighing matrix identity."""
    if d < 1:
        raise ValueError("d >= 1 required")
    order = math.comb(2 * d, d)
    _check_size(order, order)
    A = signed_adjacency_A(2 * d, d)
    ok = (A @ A.T).equals_scaled_identity(d * d)
    if not ok:
        raise AssertionError("weighing identity failed")
    return WeighingCertificate(order, d * d, True)


@dataclass
class FrameCertificate:
    vectors: ExactMatrix  # columns are the frame vectors
    ambient_dim: int
    frame_rank: int
    tight: bool


def frame_vectors(n: int, d: int) -> FrameCertificate:
    """Columns of M(n, d) as a tight frame for their span.

    Verifies M M^T = n P(n-1, d-1), that the Gram matrix equals the PSD
    witness R (hence has the adjacency support of J(n, d)), and that the
    rank is C(n-2, d-1).
    """
    if d < 2 or n < 2 * d:
        raise ValueError("need d >= 2 and n >= 2d")
    M = combination_matrix_M(n, d)
    W = boundary_W(n - 1, d - 1)
    P = W @ W.T
    if M @ M.T != P.scale(n):
        raise AssertionError("frame operator identity failed")
    wit = psd_witness_R(n, d)
    if M.T @ M != wit.R:
        raise AssertionError("Gram matrix does not match the PSD witness")
    return FrameCertificate(M, M.rows, wit.rank, True)


def forcing_candidate(n: int, d: int) -> List[int]:
    """Candidate zero forcing set for J(n, d): all words except the
    C(n-2, d-1) words beginning 1, 0.  Returned as word indices."""
    words = word_list(n, d)
    return [i for i, w in enumerate(words) if w[:2] != (1, 0)]


def johnson_graph(n: int, d: int, j: int = 1) -> Graph:
    """Distance-j graph of J(n, d): adjacency iff |X meet Y| = d - j."""
    if not (1 <= j <= min(d, n - d)):
        raise ValueError("need 1 <= j <= min(d, n-d)")
    words = word_list(n, d)
    xsets = [frozenset(ones_positions(w)) for w in words]
    m = len(words)
    edges = [(a, b) for a in range(m) for b in range(a + 1, m)
             if len(xsets[a] & xsets[b]) == d - j]
    labels = ["".join(map(str, w)) for w in words]
    return Graph(m, edges, labels=labels)


# ---------------------------------------------------------------------------
# block recursions (used as invariants in tests)
# ---------------------------------------------------------------------------


def boundary_W_block(n: int, d: int) -> ExactMatrix:
    """W(n, d) assembled from the (n-1)-sized blocks."""
    if d == 0:
        return ExactMatrix.ones(1, n)
    if d == n - 1:
        col = np.array([[(-1) ** i] for i in range(n)], dtype=np.int64)
        return ExactMatrix(col)
    Wa = boundary_W(n - 1, d - 1)
    Wb = boundary_W(n - 1, d)
    top = np.hstack([np.asarray(Wa.num, dtype=np.int64),
                     np.zeros((Wa.rows, math.comb(n - 1, d + 1)), dtype=np.int64)])
    bot = np.hstack([((-1) ** d) * np.eye(math.comb(n - 1, d), dtype=np.int64),
                     np.asarray(Wb.num, dtype=np.int64)])
    return ExactMatrix(np.vstack([top, bot]))


def signed_adjacency_block(n: int, d: int) -> ExactMatrix:
    """A(n, d) assembled from the (n-1)-sized blocks."""
    if d == 1 and n == 2:
        return ExactMatrix(np.array([[0, 1], [1, 0]], dtype=np.int64))
    if d == n - 1:
        m = np.eye(n, dtype=np.int64) - np.array(
            [[(-1) ** (i + j) for j in range(1, n + 1)] for i in range(1, n + 1)],
            dtype=np.int64)
        return ExactMatrix(m)
    if d == 1:
        m = math.comb(n, 1)
        return ExactMatrix(np.ones((m, m), dtype=np.int64)
                           - np.eye(m, dtype=np.int64))
    Aa = signed_adjacency_A(n - 1, d - 1)
    Ab = signed_adjacency_A(n - 1, d)
    W = boundary_W(n - 1, d - 1)
    sgn = (-1) ** (d - 1)
    top = np.hstack([np.asarray(Aa.num, dtype=np.int64),
                     sgn * np.asarray(W.num, dtype=np.int64)])
    bot = np.hstack([sgn * np.asarray(W.num, dtype=np.int64).T,
                     np.asarray(Ab.num, dtype=np.int64)])
    return ExactMatrix(np.vstack([top, bot]))


def projector_P_block(n: int, d: int) -> ExactMatrix:
    """P(n, d) assembled from the (n-1)-sized blocks."""
    Wa = boundary_W(n - 1, d - 1)
    Pa = Wa @ Wa.T
    Wb = boundary_W(n - 1, d)
    Pb = Wb @ Wb.T
    sgn = (-1) ** d
    ident = np.eye(Pb.rows, dtype=np.int64)
    top = np.hstack([np.asarray(Pa.num, dtype=np.int64),
                     sgn * np.asarray(Wa.num, dtype=np.int64)])
    bot = np.hstack([sgn * np.asarray(Wa.num, dtype=np.int64).T,
                     ident + np.asarray(Pb.num, dtype=np.int64)])
    return ExactMatrix(np.vstack([top, bot]))
