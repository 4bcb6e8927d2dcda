"""Association-scheme algebra: axioms, first eigenmatrices, idempotents
built from eigenspace index sets, and conjugacy-class schemes from group
data.

The central construction: for a symmetric scheme with eigenmatrix P and
multiplicities m_i, the projector onto the span of the eigenspaces in an
index set I is E_I = (1/N) sum_j [ sum_{i in I} m_i P_j(i) / P_j(0) ] A_j.
When E_I is supported on classes J, the graph G_J carries a matrix with
two distinct eigenvalues (the projector shifted and scaled).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Set, Tuple

import numpy as np

from .exact import ExactMatrix, is_idempotent_scaled, rank_via_scaled_idempotent
from .graphs import Graph, is_connected


class SchemeAxiomError(ValueError):
    pass


@dataclass
class SchemeData:
    d: int
    matrices: List[ExactMatrix]  # A_0 .. A_d
    p: List[List[List[int]]]  # p[i][j][k]
    symmetric: bool

    @property
    def order(self) -> int:
        return self.matrices[0].rows


def verify_scheme(matrices: Sequence[ExactMatrix]) -> SchemeData:
    """Check the association-scheme axioms and compute the intersection
    numbers by exact multiplication."""
    if not matrices:
        raise SchemeAxiomError("empty matrix list")
    n = matrices[0].rows
    for idx, A in enumerate(matrices):
        if A.shape != (n, n):
            raise SchemeAxiomError(f"A_{idx} has wrong shape")
        if A.den != 1 or not np.isin(np.asarray(A.num, dtype=object), (0, 1)).all():
            raise SchemeAxiomError(f"A_{idx} is not a 0/1 matrix")
    if matrices[0] != ExactMatrix.identity(n):
        raise SchemeAxiomError("A_0 is not the identity")
    total = np.zeros((n, n), dtype=np.int64)
    for A in matrices:
        total = total + np.asarray(A.num, dtype=np.int64)
    if not (total == 1).all():
        raise SchemeAxiomError("sum of class matrices is not the all-ones matrix")
    symmetric = all(A.is_symmetric() for A in matrices)
    if not symmetric:
        # closure under transpose is still required
        for idx, A in enumerate(matrices):
            if not any(A.transpose() == B for B in matrices):
                raise SchemeAxiomError(f"transpose of A_{idx} is not a class matrix")
    d = len(matrices) - 1
    supports = [np.asarray(A.num, dtype=np.int64) for A in matrices]
    p = [[[0] * (d + 1) for _ in range(d + 1)] for _ in range(d + 1)]
    for i in range(d + 1):
        for j in range(d + 1):
            prod = (matrices[i] @ matrices[j]).num
            prod = np.asarray(prod, dtype=np.int64)
            recon = np.zeros((n, n), dtype=np.int64)
            for k in range(d + 1):
                mask = supports[k]
                vals = prod[mask == 1]
                v = int(vals[0]) if vals.size else 0
                if vals.size and not (vals == v).all():
                    raise SchemeAxiomError(
                        f"A_{i} A_{j} is not constant on class {k}")
                p[i][j][k] = v
                recon += v * mask
            if not (recon == prod).all():
                raise SchemeAxiomError(f"A_{i} A_{j} not in the span of the classes")
    return SchemeData(d, list(matrices), p, symmetric)


def scheme_from_graph(G: Graph) -> SchemeData:
    """Scheme of distance matrices of a distance-regular graph."""
    from .graphs import distance_data
    dd = distance_data(G)
    mats = [dd.distance_matrix(j) for j in range(dd.diameter + 1)]
    return verify_scheme(mats)


# ---------------------------------------------------------------------------
# eigenmatrices
# ---------------------------------------------------------------------------


@dataclass
class EigenMatrixData:
    P: List[List[int]]  # P[i][j] = P_j(i)
    multiplicities: List[int]

    @property
    def d(self) -> int:
        return len(self.multiplicities) - 1

    @property
    def order(self) -> int:
        return sum(self.multiplicities)

    def valency(self, j: int) -> int:
        return self.P[0][j]

    def column(self, j: int) -> List[int]:
        return [self.P[i][j] for i in range(self.d + 1)]


def johnson_eigenmatrix(n: int, d: int) -> EigenMatrixData:
    """First eigenmatrix of the Johnson scheme on d-subsets of an n-set."""
    if n < d + 1 or d < 1:
        raise ValueError("need d >= 1 and n >= d+1")
    P = [[sum((-1) ** (j - h) * math.comb(d - i, h) * math.comb(d - h, j - h)
              * math.comb(n - d - i + h, h) for h in range(0, j + 1))
          for j in range(d + 1)]
         for i in range(d + 1)]
    m = [math.comb(n, i) - (math.comb(n, i - 1) if i else 0)
         for i in range(d + 1)]
    return EigenMatrixData(P, m)


def hamming_eigenmatrix(d: int, n: int) -> EigenMatrixData:
    """First eigenmatrix of the Hamming scheme on Y_n^d."""
    if d < 1 or n < 2:
        raise ValueError("need d >= 1 and n >= 2")
    P = [[sum((-1) ** h * (n - 1) ** (j - h) * math.comb(i, h)
              * math.comb(d - i, j - h) for h in range(0, j + 1))
          for j in range(d + 1)]
         for i in range(d + 1)]
    m = [(n - 1) ** i * math.comb(d, i) for i in range(d + 1)]
    return EigenMatrixData(P, m)


def eigenmatrix_annihilates(scheme: SchemeData, eig: EigenMatrixData) -> bool:
    """Each A_j is annihilated by the distinct values in column j of P."""
    from .exact import annihilator_check
    for j in range(scheme.d + 1):
        roots = sorted(set(eig.column(j)))
        if not annihilator_check(scheme.matrices[j], roots):
            return False
    return True


# ---------------------------------------------------------------------------
# idempotents
# ---------------------------------------------------------------------------


@dataclass
class IdempotentWitness:
    I: Tuple[int, ...]
    J: Tuple[int, ...]
    E: ExactMatrix
    coefficients: List[Fraction]
    rank: int
    connected: Optional[bool] = None


def idempotent_EI(scheme: SchemeData, eig: EigenMatrixData,
                  I: Sequence[int]) -> IdempotentWitness:
    """Projector onto the eigenspaces indexed by I, expanded in the class
    basis, with idempotency and support verified exactly."""
    if not scheme.symmetric:
        raise SchemeAxiomError("requires-symmetric")
    d = scheme.d
    Iset = sorted(set(I))
    if not Iset or any(i < 0 or i > d for i in Iset) or len(Iset) == d + 1:
        raise ValueError("I must be a nonempty proper subset of the classes")
    N = scheme.order
    coeffs = []
    for j in range(d + 1):
        c = sum(Fraction(eig.multiplicities[i] * eig.P[i][j], eig.P[0][j])
                for i in Iset)
        coeffs.append(c / N)
    E = scheme.matrices[0].scale(coeffs[0])
    for j in range(1, d + 1):
        E = E + scheme.matrices[j].scale(coeffs[j])
    if not is_idempotent_scaled(E, 1):
        raise AssertionError("E_I is not idempotent")
    J = tuple(j for j in range(1, d + 1) if coeffs[j] != 0)
    # off-diagonal support must be exactly the union of the J classes
    supp = E.offdiag_support()
    expect = np.zeros_like(supp)
    for j in J:
        expect = expect | scheme.matrices[j].offdiag_support().astype(supp.dtype)
    if not (supp == expect).all():
        raise AssertionError("E_I support does not match its class pattern")
    rank = rank_via_scaled_idempotent(E, 1)
    return IdempotentWitness(tuple(Iset), J, E, coeffs, rank)


def class_union_graph(scheme: SchemeData, J: Sequence[int]) -> Graph:
    n = scheme.order
    mask = np.zeros((n, n), dtype=np.int64)
    for j in J:
        mask |= np.asarray(scheme.matrices[j].num, dtype=np.int64)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if mask[u, v]]
    return Graph(n, edges)


def two_eig_search(scheme: SchemeData, eig: EigenMatrixData,
                   I_size_cap: Optional[int] = None) -> List[IdempotentWitness]:
    """All projector witnesses from proper subsets I, in lexicographic
    I order; each records whether its support graph is connected."""
    if not scheme.symmetric:
        raise SchemeAxiomError("requires-symmetric")
    d = scheme.d
    cap = I_size_cap if I_size_cap is not None else d + 1
    out = []
    for size in range(1, min(cap, d) + 1):
        for I in combinations(range(d + 1), size):
            if len(I) == d + 1:
                continue
            w = idempotent_EI(scheme, eig, I)
            if w.J:
                g = class_union_graph(scheme, w.J)
                w.connected = is_connected(g)
            out.append(w)
    out.sort(key=lambda w: (len(w.I), w.I))
    return out


def hypercube_two_eig_witnesses(d: int) -> Dict[str, Tuple[Tuple[int, ...],
                                                           Tuple[int, ...]]]:
    """Eigenspace sets I and class sets J giving two-eigenvalue matrices in
    the d-cube scheme, keyed by target graph.

    Writing d = 3r + s with r >= 1: an even-r representation with
    s in {0,1,2} certifies the complement of H(d,2) (classes J = {2..d});
    odd r with s in {0,1,2} the complement of H(d,2,2) (J = [d] minus {2});
    odd r with s in {-2,-1,0} the complement of the union H(d,2) with
    H(d,2,2) (J = {3..d}).  A given d can admit more than one case.
    """
    if d < 3:
        return {}

    def residue_set(t: int, with_zero: bool) -> Tuple[int, ...]:
        base = {i for i in range(d + 1) if i % 3 == t % 3}
        if with_zero:
            base |= {0}
        else:
            base -= {0}
        return tuple(sorted(base))

    # I sets per shift s: which residue class of eigenspace indices is used
    pos_map = {0: (1, True), 1: (0, False), 2: (2, True)}
    neg_map = {-2: (1, True), -1: (0, False), 0: (2, True)}
    out: Dict[str, Tuple[Tuple[int, ...], Tuple[int, ...]]] = {}
    reps = []
    s0 = d % 3
    reps.append(((d - s0) // 3, s0))
    if s0 != 0:
        reps.append(((d - (s0 - 3)) // 3, s0 - 3))
    for r, s in reps:
        if r < 1:
            continue
        if r % 2 == 0 and s in pos_map:
            t, z = pos_map[s]
            out["complement"] = (residue_set(t, z),
                                 tuple(range(2, d + 1)))
        if r % 2 == 1 and s in pos_map:
            t, z = pos_map[s]
            out["complement-distance-2"] = (
                residue_set(t, z),
                tuple(j for j in range(1, d + 1) if j != 2))
        if r % 2 == 1 and s in neg_map:
            t, z = neg_map[s]
            out["complement-union"] = (residue_set(t, z),
                                       tuple(range(3, d + 1)))
    return out


# ---------------------------------------------------------------------------
# conjugacy-class schemes
# ---------------------------------------------------------------------------


@dataclass
class CharacterTableData:
    order: int
    class_sizes: List[int]
    class_names: List[str]
    class_reps: List[int]  # element index of a representative, per class
    table: List[List[Fraction]]
    exact: bool = True

    def verify_orthogonality(self) -> None:
        h = self.order
        k = len(self.class_sizes)
        for a in range(len(self.table)):
            for b in range(a, len(self.table)):
                s = sum(self.class_sizes[j] * self.table[a][j] * self.table[b][j]
                        for j in range(k))
                want = h if a == b else 0
                if s != want:
                    raise ValueError(
                        f"row orthogonality fails for characters {a}, {b}")

    @staticmethod
    def from_record(obj: dict) -> "CharacterTableData":
        classes = obj["classes"]
        table = [[Fraction(str(x)) for x in row] for row in obj["table"]]
        data = CharacterTableData(
            order=int(obj["order"]),
            class_sizes=[int(c["size"]) for c in classes],
            class_names=[str(c.get("name", i)) for i, c in enumerate(classes)],
            class_reps=[int(c["rep"]) for c in classes],
            table=table,
            exact=bool(obj.get("exact", True)),
        )
        if sum(data.class_sizes) != data.order:
            raise ValueError("class sizes do not sum to the group order")
        if data.exact:
            data.verify_orthogonality()
        return data


class AmbivalentOnlyError(ValueError):
    def __init__(self, index: int):
        super().__init__(
            f"character {index} is not realized by rational values; "
            "only ambivalent groups with rational tables are supported")
        self.index = index


def _validate_group_table(t: List[List[int]]) -> int:
    n = len(t)
    for row in t:
        if len(row) != n or sorted(row) != list(range(n)):
            raise ValueError("group table rows must be permutations of 0..n-1")
    for j in range(n):
        if sorted(t[i][j] for i in range(n)) != list(range(n)):
            raise ValueError("group table columns must be permutations")
    # identity: element e with e*x = x*e = x
    e = None
    for cand in range(n):
        if all(t[cand][x] == x and t[x][cand] == x for x in range(n)):
            e = cand
            break
    if e is None:
        raise ValueError("no identity element")
    # inverses are total by the Latin-square property; associativity check
    if n <= 30:
        rng = range(n)
    else:
        rng = range(0, n, max(1, n // 12))
    for a in rng:
        for b in rng:
            for c in rng:
                if t[t[a][b]][c] != t[a][t[b][c]]:
                    raise ValueError("group table is not associative")
    return e


def conjugacy_classes(t: List[List[int]], e: int) -> List[List[int]]:
    n = len(t)
    inv = [0] * n
    for a in range(n):
        for b in range(n):
            if t[a][b] == e:
                inv[a] = b
                break
    seen = [False] * n
    classes = []
    for x in range(n):
        if seen[x]:
            continue
        cls = sorted({t[t[g][x]][inv[g]] for g in range(n)})
        for y in cls:
            seen[y] = True
        classes.append(cls)
    return classes


def conjugacy_scheme(group_table: List[List[int]],
                     chars: CharacterTableData
                     ) -> Tuple[SchemeData, List[IdempotentWitness]]:
    """Scheme of conjugacy-class matrices plus one idempotent witness per
    non-linear character; supports normal Cayley graphs on nonvanishing
    classes."""
    if not chars.exact:
        raise AmbivalentOnlyError(-1)
    n = len(group_table)
    if n != chars.order:
        raise ValueError("group table order does not match the character table")
    e = _validate_group_table(group_table)
    classes = conjugacy_classes(group_table, e)
    # align computed classes with the table's declared representatives
    rep_to_class = {}
    for cls in classes:
        for x in cls:
            rep_to_class[x] = tuple(cls)
    ordered = []
    for k, rep in enumerate(chars.class_reps):
        cls = rep_to_class.get(rep)
        if cls is None:
            raise ValueError(f"class representative {rep} out of range")
        if len(cls) != chars.class_sizes[k]:
            raise ValueError(f"class {k} size mismatch")
        ordered.append(cls)
    if len({c for c in ordered}) != len(classes):
        raise ValueError("character table classes do not partition the group")
    inv = [0] * n
    for a in range(n):
        for b in range(n):
            if group_table[a][b] == e:
                inv[a] = b
                break
    mats = []
    member: Dict[int, int] = {}
    for k, cls in enumerate(ordered):
        for x in cls:
            member[x] = k
    # A_k(x, y) = 1 iff x * y^{-1} lies in class k; reorder so A_0 = I
    order_idx = sorted(range(len(ordered)), key=lambda k: (e not in ordered[k], k))
    for k in order_idx:
        a = np.zeros((n, n), dtype=np.int64)
        cls_set = set(ordered[k])
        for x in range(n):
            for y in range(n):
                if group_table[x][inv[y]] in cls_set:
                    a[x, y] = 1
        mats.append(ExactMatrix(a))
    scheme = verify_scheme(mats)
    witnesses = []
    identity_class = next(k for k, c in enumerate(ordered) if e in c)
    for ci, row in enumerate(chars.table):
        deg = row[identity_class]
        if deg == 1:
            continue
        if any(v.denominator != 1 for v in row):
            raise AmbivalentOnlyError(ci)
        E = None
        for k, cls in enumerate(ordered):
            coeff = Fraction(deg, n) * row[k]
            term = _class_matrix(group_table, inv, cls, n).scale(coeff)
            E = term if E is None else E + term
        if not is_idempotent_scaled(E, 1):
            raise AssertionError(f"character {ci} idempotent failed")
        nonvanishing = [k for k, cls in enumerate(ordered)
                        if row[k] != 0 and e not in cls]
        supp = E.offdiag_support()
        expect = np.zeros_like(supp)
        for k in nonvanishing:
            cm = _class_matrix(group_table, inv, ordered[k], n)
            expect |= cm.offdiag_support().astype(supp.dtype)
        if not (supp == expect).all():
            raise AssertionError(f"character {ci} support mismatch")
        rank = rank_via_scaled_idempotent(E, 1)
        if rank != int(deg) ** 2:
            raise AssertionError(f"character {ci} rank != degree^2")
        witnesses.append(IdempotentWitness(
            I=(ci,), J=tuple(nonvanishing), E=E,
            coefficients=[Fraction(deg, n) * row[k] for k in range(len(ordered))],
            rank=rank))
    return scheme, witnesses


def _class_matrix(t: List[List[int]], inv: List[int], cls: Sequence[int],
                  n: int) -> ExactMatrix:
    a = np.zeros((n, n), dtype=np.int64)
    cls_set = set(cls)
    for x in range(n):
        for y in range(n):
            if t[x][inv[y]] in cls_set:
                a[x, y] = 1
    return ExactMatrix(a)


def normal_cayley_graph(group_table: List[List[int]],
                        connection_classes: Sequence[Sequence[int]]) -> Graph:
    n = len(group_table)
    e = _validate_group_table(group_table)
    inv = [0] * n
    for a in range(n):
        for b in range(n):
            if group_table[a][b] == e:
                inv[a] = b
                break
    conn = set()
    for cls in connection_classes:
        conn |= set(cls)
    if e in conn:
        raise ValueError("connection set contains the identity")
    edges = set()
    for x in range(n):
        for y in range(x + 1, n):
            if group_table[x][inv[y]] in conn:
                edges.add((x, y))
    return Graph(n, sorted(edges))
