"""Dense exact linear algebra over the rationals and small prime fields.

Matrices are stored as an integer numpy array together with a single
positive denominator, so that entry (i, j) equals num[i, j] / den.  Integer
arrays use int64 when products provably fit, and fall back to Python big
ints (object dtype) otherwise.  Nothing in here ever touches floating
point.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

ENTRY_CAP = 2_000_000

Rational = Union[int, Fraction]


class DimensionCapError(ValueError):
    """Raised when a construction would exceed the dense entry cap."""


class CapExceeded(ValueError):
    """Raised when an iterative search hits its explicit ceiling."""


def _check_cap(rows: int, cols: int) -> None:
    if rows * cols > ENTRY_CAP:
        raise DimensionCapError(
            f"matrix of {rows}x{cols} = {rows * cols} entries exceeds cap {ENTRY_CAP}"
        )


def _max_abs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype == object:
        return max(abs(int(x)) for x in a.flat)
    return int(np.abs(a).max())


def _as_object(a: np.ndarray) -> np.ndarray:
    if a.dtype == object:
        return a
    out = a.astype(object)
    return out


def _int_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact integer matrix product, promoting to big ints when int64 could
    overflow."""
    if a.dtype != object and b.dtype != object:
        inner = a.shape[1]
        bound = _max_abs(a) * _max_abs(b) * max(inner, 1)
        if bound < 2**62:
            return a @ b
    return _as_object(a) @ _as_object(b)


def _normalize(num: np.ndarray, den: int) -> Tuple[np.ndarray, int]:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        num = -num
        den = -den
    if den == 1:
        return num, 1
    g = den
    for x in num.flat:
        g = math.gcd(g, int(x))
        if g == 1:
            return num, den
    if g > 1:
        if num.dtype == object:
            num = np.array([[int(x) // g for x in row] for row in num], dtype=object)
            num = num.reshape(num.shape if num.ndim == 2 else (-1,))
        else:
            num = num // g
        den //= g
    return num, den


def _demote(a: np.ndarray) -> np.ndarray:
    """Store in int64 when all entries fit, for speed."""
    if a.dtype != object:
        return a
    if a.size and _max_abs(a) < 2**62:
        return a.astype(np.int64)
    if a.size == 0:
        return a.astype(np.int64)
    return a


class ExactMatrix:
    """Dense matrix over arbitrary-precision rationals."""

    __slots__ = ("num", "den", "rows", "cols")

    def __init__(self, num: np.ndarray, den: int = 1, _normalized: bool = False):
        if num.ndim != 2:
            raise ValueError("expected a 2-D array")
        _check_cap(num.shape[0], num.shape[1])
        if not _normalized:
            num, den = _normalize(num, int(den))
            num = _demote(num)
        self.num = num
        self.den = int(den)
        self.rows = num.shape[0]
        self.cols = num.shape[1]

    # -- construction ------------------------------------------------------

    @staticmethod
    def from_rows(rows: Sequence[Sequence[Rational]]) -> "ExactMatrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        den = 1
        for row in rows:
            if len(row) != nc:
                raise ValueError("ragged rows")
            for x in row:
                if isinstance(x, Fraction):
                    den = den * x.denominator // math.gcd(den, x.denominator)
        num = np.empty((nr, nc), dtype=object)
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                f = Fraction(x)
                num[i, j] = int(f.numerator * (den // f.denominator))
        return ExactMatrix(num, den)

    @staticmethod
    def from_int_array(a: np.ndarray, den: int = 1) -> "ExactMatrix":
        return ExactMatrix(np.array(a, copy=True), den)

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix(np.eye(n, dtype=np.int64))

    @staticmethod
    def zeros(rows: int, cols: int) -> "ExactMatrix":
        return ExactMatrix(np.zeros((rows, cols), dtype=np.int64))

    @staticmethod
    def ones(rows: int, cols: int) -> "ExactMatrix":
        return ExactMatrix(np.ones((rows, cols), dtype=np.int64))

    # -- basic accessors ---------------------------------------------------

    def __getitem__(self, key) -> Fraction:
        i, j = key
        return Fraction(int(self.num[i, j]), self.den)

    def entry(self, i: int, j: int) -> Fraction:
        return self[i, j]

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and bool((self.num == self.num.T).all())

    def is_integer(self) -> bool:
        return self.den == 1

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.num.T.copy(), self.den, _normalized=True)

    @property
    def T(self) -> "ExactMatrix":
        return self.transpose()

    def trace(self) -> Fraction:
        t = sum(int(self.num[i, i]) for i in range(min(self.rows, self.cols)))
        return Fraction(t, self.den)

    def is_zero(self) -> bool:
        return not bool((self.num != 0).any())

    def max_abs(self) -> Fraction:
        return Fraction(_max_abs(self.num), self.den)

    def support(self) -> np.ndarray:
        """0/1 int array marking nonzero entries."""
        return (self.num != 0).astype(np.int8)

    def offdiag_support(self) -> np.ndarray:
        s = self.support()
        np.fill_diagonal(s, 0)
        return s

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "ExactMatrix":
        if isinstance(other, ExactMatrix):
            return other
        raise TypeError(f"cannot combine ExactMatrix with {type(other)!r}")

    def __add__(self, other) -> "ExactMatrix":
        other = self._coerce(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        den = self.den * other.den // math.gcd(self.den, other.den)
        a = _int_scale(self.num, den // self.den)
        b = _int_scale(other.num, den // other.den)
        return ExactMatrix(_int_add(a, b), den)

    def __sub__(self, other) -> "ExactMatrix":
        return self + (-self._coerce(other))

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(-self.num, self.den, _normalized=True)

    def scale(self, c: Rational) -> "ExactMatrix":
        f = Fraction(c)
        num = _int_scale(self.num, int(f.numerator))
        return ExactMatrix(num, self.den * f.denominator)

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __matmul__(self, other) -> "ExactMatrix":
        other = self._coerce(other)
        if self.cols != other.rows:
            raise ValueError("inner dimension mismatch")
        _check_cap(self.rows, other.cols)
        num = _int_matmul(self.num, other.num)
        return ExactMatrix(num, self.den * other.den)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.shape == other.shape
            and self.den == other.den
            and bool((self.num == other.num).all())
        )

    def __hash__(self):
        raise TypeError("ExactMatrix is not hashable")

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols}, den={self.den})"

    def equals_scaled_identity(self, c: Rational) -> bool:
        if not self.is_square():
            return False
        f = Fraction(c)
        target = ExactMatrix.identity(self.rows).scale(f)
        return self == target

    def hstack(self, other: "ExactMatrix") -> "ExactMatrix":
        other = self._coerce(other)
        if self.rows != other.rows:
            raise ValueError("row mismatch")
        den = self.den * other.den // math.gcd(self.den, other.den)
        a = _as_object(_int_scale(self.num, den // self.den))
        b = _as_object(_int_scale(other.num, den // other.den))
        return ExactMatrix(np.hstack([a, b]), den)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "ExactMatrix":
        sub = self.num[np.ix_(list(row_idx), list(col_idx))].copy()
        return ExactMatrix(sub, self.den)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> str:
        entries = []
        for i in range(self.rows):
            for j in range(self.cols):
                f = self[i, j]
                entries.append([int(f.numerator), int(f.denominator)])
        return json.dumps({"rows": self.rows, "cols": self.cols, "entries": entries})

    @staticmethod
    def from_json(text: str) -> "ExactMatrix":
        obj = json.loads(text)
        rows, cols = int(obj["rows"]), int(obj["cols"])
        entries = obj["entries"]
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match rows*cols")
        data = [
            [Fraction(int(entries[i * cols + j][0]), int(entries[i * cols + j][1]))
             for j in range(cols)]
            for i in range(rows)
        ]
        if rows == 0 or cols == 0:
            return ExactMatrix.zeros(rows, cols)
        return ExactMatrix.from_rows(data)

    def to_csv(self) -> str:
        if self.den != 1:
            raise ValueError("CSV exchange is for integer matrices only")
        buf = io.StringIO()
        w = csv.writer(buf)
        for i in range(self.rows):
            w.writerow(int(x) for x in self.num[i])
        return buf.getvalue()

    @staticmethod
    def from_csv(text: str) -> "ExactMatrix":
        rows = [[int(x) for x in row] for row in csv.reader(io.StringIO(text)) if row]
        return ExactMatrix.from_rows(rows)


def _int_scale(a: np.ndarray, c: int) -> np.ndarray:
    if c == 1:
        return a
    if a.dtype != object and abs(c) * max(_max_abs(a), 1) < 2**62:
        return a * np.int64(c)
    return _as_object(a) * c


def _int_add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.dtype != object and b.dtype != object:
        if _max_abs(a) + _max_abs(b) < 2**62:
            return a + b
    return _as_object(a) + _as_object(b)


@dataclass
class SpectralSummary:
    """Distinct-eigenvalue count plus whatever exact spectrum data is known."""

    distinct_eigenvalue_count: int
    rank: int
    known_eigenvalues: List[Tuple[Fraction, int]] = field(default_factory=list)

    def __post_init__(self):
        if self.known_eigenvalues:
            if len(self.known_eigenvalues) != self.distinct_eigenvalue_count:
                raise ValueError("eigenvalue list disagrees with distinct count")


# ---------------------------------------------------------------------------
# rank and minimal polynomial
# ---------------------------------------------------------------------------


def rank_rational(M: ExactMatrix) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination.

    Pivots are chosen deterministically: columns are scanned left to right
    and within a column the first nonzero row in top-down order is used.
    """
    A = _as_object(M.num).copy()
    m, n = A.shape
    prev = 1
    r = 0
    for c in range(n):
        if r >= m:
            break
        pivot_row = None
        for i in range(r, m):
            if A[i, c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            A[[r, pivot_row]] = A[[pivot_row, r]]
        piv = A[r, c]
        sub = A[r + 1:, c + 1:]
        if sub.size:
            A[r + 1:, c + 1:] = (piv * sub - np.outer(A[r + 1:, c], A[r, c + 1:])) // prev
        A[r + 1:, c] = 0
        prev = piv
        r += 1
    return r


def rank_via_scaled_idempotent(M: ExactMatrix, c: Rational) -> int:
    """Rank of a symmetric matrix satisfying M^2 = c M with c != 0.

    Both hypotheses are verified exactly first.  A real symmetric matrix
    with M^2 = cM is diagonalizable with eigenvalues in {0, c}, so its rank
    equals trace(M)/c.
    """
    c = Fraction(c)
    if c == 0:
        raise ValueError("c must be nonzero")
    if not M.is_symmetric():
        raise ValueError("matrix is not symmetric")
    if not is_idempotent_scaled(M, c):
        raise ValueError("matrix does not satisfy M^2 = cM")
    r = M.trace() / c
    if r.denominator != 1:
        raise ValueError("trace/c is not an integer; inconsistent input")
    return int(r)


def minimal_polynomial_degree(M: ExactMatrix, cap: Optional[int] = None) -> int:
    """Smallest k with I, M, ..., M^k linearly dependent over Q.

    For a symmetric matrix this is the number of distinct eigenvalues.
    Raises CapExceeded when no dependence is found up to the ceiling.
    """
    if not M.is_square():
        raise ValueError("square matrix required")
    n = M.rows
    if cap is None:
        cap = n
    if cap < 1:
        raise ValueError("cap must be >= 1")
    # Echelon basis of flattened powers, reduced with exact fractions.
    basis: List[Tuple[int, np.ndarray]] = []  # (pivot index, reduced row)

    def try_insert(vec: np.ndarray) -> bool:
        """Reduce against basis; return True if independent (and insert)."""
        v = vec.astype(object).copy()
        v = np.array([Fraction(int(x)) for x in v], dtype=object)
        for piv, row in basis:
            if v[piv] != 0:
                v = v - v[piv] * row
        nz = np.nonzero(v != 0)[0]
        if len(nz) == 0:
            return False
        p = int(nz[0])
        basis.append((p, v / v[p]))
        return True

    power = ExactMatrix.identity(n)
    if not try_insert(power.num.reshape(-1)):
        raise AssertionError("identity reduced to zero")
    for k in range(1, cap + 1):
        power = power @ M
        # Flatten with the denominator cleared: scale does not change
        # linear dependence over Q.
        if not try_insert(power.num.reshape(-1)):
            return k
    raise CapExceeded(f"no linear dependence among powers up to M^{cap}")


def annihilator_check(M: ExactMatrix, roots: Iterable[Rational]) -> bool:
    """True iff the product of (M - r I) over the given roots is zero."""
    if not M.is_square():
        raise ValueError("square matrix required")
    prod = ExactMatrix.identity(M.rows)
    ident = ExactMatrix.identity(M.rows)
    for r in roots:
        prod = prod @ (M - ident.scale(r))
    return prod.is_zero()


def is_idempotent_scaled(M: ExactMatrix, c: Rational) -> bool:
    """True iff M^2 = c M exactly."""
    if not M.is_square():
        raise ValueError("square matrix required")
    return (M @ M) == M.scale(c)


def kronecker(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    _check_cap(A.rows * B.rows, A.cols * B.cols)
    num = np.kron(_as_object(A.num), _as_object(B.num))
    return ExactMatrix(num, A.den * B.den)


def charpoly_int(M: ExactMatrix) -> List[int]:
    """Characteristic polynomial of an integer matrix.

    Returns coefficients [1, a_{n-1}, ..., a_0] of
    x^n + a_{n-1} x^{n-1} + ... + a_0, computed by the Faddeev-LeVerrier
    recurrence in exact integer arithmetic.
    """
    if not M.is_square():
        raise ValueError("square matrix required")
    if M.den != 1:
        raise ValueError("integer matrix required")
    n = M.rows
    A = _as_object(M.num)
    coeffs = [1]
    Bk = np.eye(n, dtype=object)
    for k in range(1, n + 1):
        if k > 1:
            Bk = _int_matmul(A, Bk) + coeffs[-1] * np.eye(n, dtype=object)
        else:
            Bk = np.eye(n, dtype=object)
        AB = _int_matmul(A, Bk)
        tr = int(np.trace(AB))
        if tr % k != 0:
            raise AssertionError("Faddeev-LeVerrier divisibility failed")
        coeffs.append(-tr // k)
    return coeffs


def poly_mul(p: Sequence[int], q: Sequence[int]) -> List[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


# ---------------------------------------------------------------------------
# prime fields
# ---------------------------------------------------------------------------


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in range(2, int(math.isqrt(p)) + 1):
        if p % q == 0:
            return False
    return True


class PrimeFieldMatrix:
    """Dense matrix over F_p with entries stored as residues in [0, p)."""

    __slots__ = ("modulus", "a", "rows", "cols")

    def __init__(self, a: np.ndarray, modulus: int):
        if not _is_prime(modulus):
            raise ValueError(f"{modulus} is not prime")
        if a.ndim != 2:
            raise ValueError("expected a 2-D array")
        _check_cap(a.shape[0], a.shape[1])
        if a.dtype == object:
            a = np.array([[int(x) % modulus for x in row] for row in a], dtype=np.int64)
        else:
            a = np.mod(a, modulus).astype(np.int64)
        self.a = a
        self.modulus = modulus
        self.rows, self.cols = a.shape

    @staticmethod
    def from_exact(M: ExactMatrix, modulus: int) -> "PrimeFieldMatrix":
        if M.den % modulus == 0:
            raise ValueError("denominator not invertible modulo p")
        inv = pow(M.den % modulus, -1, modulus)
        if M.num.dtype == object:
            a = np.array(
                [[(int(x) * inv) % modulus for x in row] for row in M.num],
                dtype=np.int64,
            ).reshape(M.shape)
        else:
            a = (np.mod(M.num, modulus) * inv) % modulus
        return PrimeFieldMatrix(a, modulus)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PrimeFieldMatrix):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self.a.shape == other.a.shape
            and bool((self.a == other.a).all())
        )

    def __matmul__(self, other: "PrimeFieldMatrix") -> "PrimeFieldMatrix":
        if self.modulus != other.modulus:
            raise ValueError("modulus mismatch")
        prod = _int_matmul(self.a, other.a)
        return PrimeFieldMatrix(prod, self.modulus)

    def transpose(self) -> "PrimeFieldMatrix":
        return PrimeFieldMatrix(self.a.T.copy(), self.modulus)

    def is_zero(self) -> bool:
        return not bool((self.a != 0).any())

    def __repr__(self) -> str:
        return f"PrimeFieldMatrix({self.rows}x{self.cols} mod {self.modulus})"


def rank_mod_p(M: PrimeFieldMatrix) -> int:
    """Rank over F_p, Gaussian elimination with deterministic pivots."""
    p = M.modulus
    A = M.a.copy()
    m, n = A.shape
    r = 0
    for c in range(n):
        if r >= m:
            break
        pivot_row = None
        for i in range(r, m):
            if A[i, c] % p != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            A[[r, pivot_row]] = A[[pivot_row, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = (A[r] * inv) % p
        col = A[r + 1:, c].copy()
        if col.size:
            A[r + 1:] = (A[r + 1:] - np.outer(col, A[r])) % p
        r += 1
    return r


# ---------------------------------------------------------------------------
# GF(2) bitmask kernels
# ---------------------------------------------------------------------------


def _rows_to_bitmasks(M: PrimeFieldMatrix) -> List[int]:
    masks = []
    for i in range(M.rows):
        mask = 0
        row = M.a[i]
        for j in range(M.cols):
            if row[j] & 1:
                mask |= 1 << j
        masks.append(mask)
    return masks


def gf2_kernel_basis(rows: List[int], ncols: int) -> List[int]:
    """Kernel basis of the GF(2) matrix given as row bitmasks.

    Returned vectors are bitmasks over the columns, one per free column, in
    increasing free-column order (the standard echelon construction).
    """
    work = [r for r in rows if r]
    pivots = {}  # column -> reduced row mask
    for r in work:
        cur = r
        while cur:
            lead = (cur & -cur).bit_length() - 1
            if lead in pivots:
                cur ^= pivots[lead]
            else:
                pivots[lead] = cur
                break
    pivot_cols = sorted(pivots)
    free_cols = [c for c in range(ncols) if c not in pivots]
    # Back-substitute to full reduced form.
    reduced = dict(pivots)
    for c in sorted(pivot_cols, reverse=True):
        row = reduced[c]
        for c2 in pivot_cols:
            if c2 != c and (reduced[c2] >> c) & 1:
                reduced[c2] ^= row
    basis = []
    for f in free_cols:
        vec = 1 << f
        for c in pivot_cols:
            if (reduced[c] >> f) & 1:
                vec |= 1 << c
        basis.append(vec)
    return basis


def gf2_matvec_is_zero(rows: List[int], x: int) -> bool:
    return all(bin(r & x).count("1") % 2 == 0 for r in rows)


def _lex_key(x: int, ncols: int) -> Tuple[int, ...]:
    return tuple((x >> j) & 1 for j in range(ncols))


def gf2_kernel_with_odd_support(M: PrimeFieldMatrix) -> Optional[List[int]]:
    """Nonzero x with Mx = 0 over GF(2) and odd popcount, if one exists.

    Strategy: scan the kernel basis for an odd-support vector (return the
    lexicographically least); then sums of up to three basis vectors; then
    solve the inhomogeneous system [M; all-ones] x = (0,...,0,1).  Columns
    of M index the candidate vector entries.
    """
    if M.modulus != 2:
        raise ValueError("modulus must be 2")
    rows = _rows_to_bitmasks(M)
    ncols = M.cols
    basis = gf2_kernel_basis(rows, ncols)

    def finish(x: int) -> List[int]:
        if x == 0 or not gf2_matvec_is_zero(rows, x):
            raise AssertionError("gf2 kernel solver produced a non-solution")
        if bin(x).count("1") % 2 == 0:
            raise AssertionError("gf2 kernel solver produced even support")
        return [(x >> j) & 1 for j in range(ncols)]

    odd = [b for b in basis if bin(b).count("1") % 2 == 1]
    if odd:
        return finish(min(odd, key=lambda b: _lex_key(b, ncols)))
    found = []
    nb = len(basis)
    for i in range(nb):
        for j in range(i + 1, nb):
            v = basis[i] ^ basis[j]
            if v and bin(v).count("1") % 2 == 1:
                found.append(v)
    if not found:
        for i in range(nb):
            for j in range(i + 1, nb):
                vij = basis[i] ^ basis[j]
                for k in range(j + 1, nb):
                    v = vij ^ basis[k]
                    if v and bin(v).count("1") % 2 == 1:
                        found.append(v)
    if found:
        return finish(min(found, key=lambda v: _lex_key(v, ncols)))
    # Complete fallback: x with Mx = 0 and 1^T x = 1.
    aug = [(r, 0) for r in rows] + [((1 << ncols) - 1, 1)]
    sol = _gf2_solve_affine(aug, ncols)
    if sol is None:
        return None
    return finish(sol)


def _gf2_solve_affine(rows: List[Tuple[int, int]], ncols: int) -> Optional[int]:
    """Solve the affine system given as (mask, rhs-bit) pairs over GF(2).

    Returns one solution bitmask (free variables set to zero), or None.
    """
    pivots = {}  # column -> (mask, rhs)
    for mask, rhs in rows:
        cur, b = mask, rhs
        while cur:
            lead = (cur & -cur).bit_length() - 1
            if lead in pivots:
                pm, pb = pivots[lead]
                cur ^= pm
                b ^= pb
            else:
                pivots[lead] = (cur, b)
                break
        else:
            if b:
                return None
    x = 0
    for c in sorted(pivots, reverse=True):
        mask, b = pivots[c]
        acc = b
        rest = mask & ~(1 << c)
        acc ^= bin(rest & x).count("1") % 2
        if acc:
            x |= 1 << c
    return x
