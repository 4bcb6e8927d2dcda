"""Linear ternary codes generated by signed Johnson matrices.

The row spaces over F_3 of A, A - I and A + I fall into nine regimes
according to the residues of n and d mod 3, because the two eigenvalues
n - d and -d of A control the mod-3 ranks.  Every asserted relation is
re-verified from the generator matrices."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Tuple

import numpy as np

from .exact import ExactMatrix, PrimeFieldMatrix, rank_mod_p
from .johnson import signed_adjacency_A


class EmptyCodeError(ValueError):
    pass


@dataclass
class TernaryCode:
    length: int
    generator: PrimeFieldMatrix
    dimension: int
    min_distance: Optional[int] = None

    @staticmethod
    def from_generator(g: PrimeFieldMatrix) -> "TernaryCode":
        if g.modulus != 3:
            raise ValueError("ternary codes live over F_3")
        return TernaryCode(g.cols, g, rank_mod_p(g))

    def rref(self) -> np.ndarray:
        return _rref_mod3(self.generator.a)

    def same_code(self, other: "TernaryCode") -> bool:
        if self.length != other.length:
            return False
        return (self.rref() == other.rref()).all() if \
            self.rref().shape == other.rref().shape else False

    def is_full_space(self) -> bool:
        return self.dimension == self.length


def _rref_mod3(a: np.ndarray) -> np.ndarray:
    """Reduced row echelon form mod 3 with zero rows dropped."""
    A = np.mod(a, 3).astype(np.int64)
    m, n = A.shape
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if A[i, c] % 3:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, 3)
        A[r] = (A[r] * inv) % 3
        for i in range(m):
            if i != r and A[i, c] % 3:
                A[i] = (A[i] - A[i, c] * A[r]) % 3
        r += 1
        if r == m:
            break
    return A[:r]


def code_from_matrix(M: ExactMatrix) -> TernaryCode:
    """Row space of an integer matrix reduced mod 3."""
    if M.den != 1:
        raise ValueError("integer matrix required")
    return TernaryCode.from_generator(PrimeFieldMatrix(np.asarray(M.num), 3))


def dual_relation(C1: TernaryCode, C2: TernaryCode) -> str:
    """Classify the pair: equal-dual, self-orthogonal (same code inside its
    own dual), or unrelated."""
    if C1.length != C2.length:
        raise ValueError("length mismatch")
    prod = C1.generator @ C2.generator.transpose()
    orthogonal = prod.is_zero()
    if orthogonal and C1.dimension + C2.dimension == C1.length:
        return "equal-dual"
    if orthogonal and C1.same_code(C2) and 2 * C1.dimension <= C1.length:
        return "self-orthogonal"
    return "unrelated"


def min_distance_bruteforce(C: TernaryCode) -> int:
    """Minimum weight over all nonzero codewords, by full enumeration of
    the row-space basis (dimension capped at 15)."""
    if C.dimension == 0:
        raise EmptyCodeError("empty-code")
    if C.dimension > 15:
        raise ValueError("dimension exceeds the enumeration cap (15)")
    basis = _rref_mod3(C.generator.a)
    best = C.length
    for coeffs in product(range(3), repeat=basis.shape[0]):
        if not any(coeffs):
            continue
        word = np.zeros(C.length, dtype=np.int64)
        for c, row in zip(coeffs, basis):
            if c:
                word = (word + c * row) % 3
        w = int((word != 0).sum())
        if w < best:
            best = w
    return best


# ---------------------------------------------------------------------------
# Table of Johnson-code relations by residues
# ---------------------------------------------------------------------------


@dataclass
class CodePairReport:
    n: int
    d: int
    n_mod3: int
    d_mod3: int
    codes: Dict[str, TernaryCode]
    relations: List[str]
    observations: List[str]
    verified: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n, "d": self.d,
            "n_mod3": self.n_mod3, "d_mod3": self.d_mod3,
            "codes": {k: {"dim": c.dimension, "length": c.length}
                      for k, c in self.codes.items()},
            "relations": self.relations,
            "observations": self.observations,
            "verified": self.verified,
        }


# cell -> (self_orth_code or None, (dim_code, dual_pair) or None, full codes)
# keyed by (d mod 3, n mod 3); names: "A", "AmI", "ApI"
_CELLS = {
    (0, 0): ("A", None, ["AmI", "ApI"]),
    (0, 1): (None, ("A", "AmI"), ["ApI"]),
    (0, 2): (None, ("A", "ApI"), ["AmI"]),
    (1, 0): ("ApI", None, ["A", "AmI"]),
    (1, 1): (None, ("ApI", "A"), ["AmI"]),
    (1, 2): (None, ("ApI", "AmI"), ["A"]),
    (2, 0): ("AmI", None, ["A", "ApI"]),
    (2, 1): (None, ("AmI", "ApI"), ["A"]),
    (2, 2): (None, ("AmI", "A"), ["ApI"]),
}


def table2_report(n: int, d: int) -> CodePairReport:
    """Build the three codes of A(n, d) and verify every relation asserted
    for the (n mod 3, d mod 3) residue cell."""
    A = signed_adjacency_A(n, d)
    N = A.rows
    ident = ExactMatrix.identity(N)
    codes = {
        "A": code_from_matrix(A),
        "AmI": code_from_matrix(A - ident),
        "ApI": code_from_matrix(A + ident),
    }
    nbar, dbar = n % 3, d % 3
    self_orth, dual_pair, full = _CELLS[(dbar, nbar)]
    relations = []
    observations = []
    ok = True
    bound = math.comb(n - 1, d - 1)
    if self_orth is not None:
        C = codes[self_orth]
        rel = dual_relation(C, C)
        if rel != "self-orthogonal" or C.dimension > bound:
            ok = False
        relations.append(f"{self_orth} self-orthogonal: {rel}")
        expect = bound - (math.comb(n - 2, d - 2) if d >= 2 else 0)
        flag = "matches" if C.dimension == expect else "differs"
        observations.append(
            f"dim {self_orth} = {C.dimension}, observed pattern {expect} ({flag})")
        # necessary condition: generator rows of weight divisible by 3
        rows = _rref_mod3(C.generator.a)
        if any(int((row != 0).sum()) % 3 for row in rows):
            ok = False
            relations.append(f"{self_orth} has a generator row of bad weight")
    if dual_pair is not None:
        small, other = dual_pair
        C = codes[small]
        if C.dimension != bound:
            ok = False
        relations.append(f"dim {small} = {C.dimension} (expected {bound})")
        rel = dual_relation(C, codes[other])
        if rel != "equal-dual":
            ok = False
        relations.append(f"{other} dual of {small}: {rel}")
    for name in full:
        if not codes[name].is_full_space():
            ok = False
        relations.append(f"{name} full space: {codes[name].is_full_space()}")
    return CodePairReport(n, d, nbar, dbar, codes, relations, observations, ok)


def smallest_cell_instances(cap: int = 56) -> Dict[Tuple[int, int], Tuple[int, int]]:
    """Smallest (n, d) hitting each residue cell, ordered by binom(n, d)."""
    out: Dict[Tuple[int, int], Tuple[int, int]] = {}
    candidates = []
    for d in range(1, 10):
        for n in range(d + 1, 60):
            c = math.comb(n, d)
            if c <= cap:
                candidates.append((c, n, d))
    candidates.sort()
    for c, n, d in candidates:
        key = (d % 3, n % 3)
        if key not in out:
            out[key] = (n, d)
    return out
