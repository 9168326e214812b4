"""Hermitian matrices over Q(i) and their exact principal-minor machinery.

Matrices are immutable after construction.  The heavy operation is
enumerating all 2**n - 1 principal minors; that runs over plain machine
integers after clearing denominators once (fraction-free elimination stays
exact over the Gaussian integers), with results cached per matrix.

Index sets follow the mathematical convention: 1-based, strictly
increasing.
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Sequence

from .exact import (
    GaussianRational,
    Sqrt5Rational,
    format_gaussian,
    parse_gaussian,
    real_sign,
    ScalarParseError,
)

IndexSet = tuple  # 1-based, strictly increasing indices


class MatrixFormatError(ValueError):
    """A matrix document or entry grid is malformed (position-specific)."""


class IndexSetError(ValueError):
    """An index set is not a strictly increasing subset of 1..n."""


class SingularMatrixError(ValueError):
    """Inverse requested for a matrix with zero determinant."""


def as_index_set(alpha: Iterable[int], n: int) -> IndexSet:
    """Validate and normalize an index set against order ``n``."""
    idx = tuple(alpha)
    if not idx:
        raise IndexSetError("index set is empty")
    for i, v in enumerate(idx):
        if not isinstance(v, int):
            raise IndexSetError(f"index {v!r} is not an integer")
        if v < 1 or v > n:
            raise IndexSetError(f"index {v} out of range 1..{n}")
        if i > 0 and idx[i - 1] >= v:
            raise IndexSetError(f"indices not strictly increasing at position {i + 1}")
    return idx


# ---------------------------------------------------------------------------
# determinant kernels
#
# _det_ints / _det_pairs implement fraction-free elimination (multiply,
# subtract, then exact division by the previous pivot).  The division is
# exact because every intermediate entry is itself a minor of the input.
# _det_field is ordinary elimination over any exact field scalar, and
# _det_laplace is the independent cofactor-expansion oracle.
# ---------------------------------------------------------------------------


def _det_ints(rows) -> int:
    """Determinant of a square integer matrix; mutates ``rows``."""
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k]:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        base = rows[k]
        for i in range(k + 1, n):
            row = rows[i]
            lead = row[k]
            for j in range(k + 1, n):
                row[j] = (pivot * row[j] - lead * base[j]) // prev
            row[k] = 0
        prev = pivot
    return sign * rows[-1][-1]


def _det_pairs(rows):
    """Determinant of a square Gaussian-integer matrix given as (re, im)
    int pairs; mutates ``rows``.  Returns an (re, im) pair."""
    n = len(rows)
    sign = 1
    pa, pb = 1, 0  # previous pivot
    for k in range(n - 1):
        if rows[k][k] == (0, 0):
            for r in range(k + 1, n):
                if rows[r][k] != (0, 0):
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return (0, 0)
        va, vb = rows[k][k]
        base = rows[k]
        nrm = pa * pa + pb * pb
        for i in range(k + 1, n):
            row = rows[i]
            la, lb = row[k]
            for j in range(k + 1, n):
                ta, tb = row[j]
                ba, bb = base[j]
                na = va * ta - vb * tb - la * ba + lb * bb
                nb = va * tb + vb * ta - la * bb - lb * ba
                if nrm == 1 and pa == 1:
                    row[j] = (na, nb)
                else:
                    row[j] = ((na * pa + nb * pb) // nrm, (nb * pa - na * pb) // nrm)
            row[k] = (0, 0)
        pa, pb = va, vb
    da, db = rows[-1][-1]
    return (sign * da, sign * db)


def _det_field(rows):
    """Determinant by ordinary elimination over an exact field scalar;
    mutates ``rows``."""
    n = len(rows)
    zero = rows[0][0] - rows[0][0]
    sign = 1
    for k in range(n - 1):
        if rows[k][k] == zero:
            for r in range(k + 1, n):
                if rows[r][k] != zero:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return zero
        base = rows[k]
        pivot = base[k]
        for i in range(k + 1, n):
            row = rows[i]
            if row[k] == zero:
                continue
            factor = row[k] / pivot
            for j in range(k + 1, n):
                row[j] = row[j] - factor * base[j]
            row[k] = zero
    det = rows[0][0]
    for k in range(1, n):
        det = det * rows[k][k]
    return det if sign == 1 else -det


def _det_laplace(rows):
    """Recursive cofactor expansion along the first row."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = None
    for j in range(n):
        a = rows[0][j]
        if not a:
            continue
        sub = [[row[c] for c in range(n) if c != j] for row in rows[1:]]
        term = a * _det_laplace(sub)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return rows[0][0] - rows[0][0]
    return total


def _rank_int_grid(rows) -> int:
    """Rank of an integer grid by division-free elimination with per-row
    gcd reduction; mutates ``rows``."""
    if not rows:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    piv = 0
    for c in range(n_cols):
        for r in range(piv, n_rows):
            if rows[r][c]:
                break
        else:
            continue
        rows[piv], rows[r] = rows[r], rows[piv]
        base = rows[piv]
        p = base[c]
        for r in range(piv + 1, n_rows):
            row = rows[r]
            a = row[c]
            if not a:
                continue
            for j in range(c, n_cols):
                row[j] = p * row[j] - a * base[j]
            g = 0
            for v in row:
                g = gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                for j in range(n_cols):
                    row[j] //= g
        piv += 1
        if piv == n_rows:
            break
    return piv


def _rank_pair_grid(rows) -> int:
    """Rank of a Gaussian-integer grid of (re, im) pairs; mutates ``rows``."""
    if not rows:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    piv = 0
    for c in range(n_cols):
        for r in range(piv, n_rows):
            if rows[r][c] != (0, 0):
                break
        else:
            continue
        rows[piv], rows[r] = rows[r], rows[piv]
        base = rows[piv]
        pa, pb = base[c]
        for r in range(piv + 1, n_rows):
            row = rows[r]
            la, lb = row[c]
            if la == 0 and lb == 0:
                continue
            g = 0
            for j in range(c, n_cols):
                ta, tb = row[j]
                ba, bb = base[j]
                na = pa * ta - pb * tb - la * ba + lb * bb
                nb = pa * tb + pb * ta - la * bb - lb * ba
                row[j] = (na, nb)
                g = gcd(g, na, nb)
            if g > 1:
                for j in range(n_cols):
                    ta, tb = row[j]
                    row[j] = (ta // g, tb // g)
        piv += 1
        if piv == n_rows:
            break
    return piv


def grid_rank(rows: Sequence[Sequence]) -> int:
    """Rank of an arbitrary (not necessarily Hermitian) grid of scalars."""
    grid = [list(r) for r in rows]
    if not grid:
        return 0
    if all(isinstance(v, int) for row in grid for v in row):
        return _rank_int_grid(grid)
    if all(isinstance(v, tuple) for row in grid for v in row):
        return _rank_pair_grid(grid)
    # generic field path
    n_rows, n_cols = len(grid), len(grid[0])
    zero = grid[0][0] - grid[0][0]
    piv = 0
    for c in range(n_cols):
        for r in range(piv, n_rows):
            if grid[r][c] != zero:
                break
        else:
            continue
        grid[piv], grid[r] = grid[r], grid[piv]
        base = grid[piv]
        pivot = base[c]
        for r in range(piv + 1, n_rows):
            row = grid[r]
            if row[c] == zero:
                continue
            factor = row[c] / pivot
            for j in range(c, n_cols):
                row[j] = row[j] - factor * base[j]
        piv += 1
        if piv == n_rows:
            break
    return piv


# ---------------------------------------------------------------------------
# the matrix type
# ---------------------------------------------------------------------------


def _coerce_rows(rows):
    """Normalize an entry grid to all-GaussianRational or all-Sqrt5Rational."""
    grid = [list(r) for r in rows]
    has_sqrt5 = any(isinstance(v, Sqrt5Rational) for row in grid for v in row)
    out = []
    for i, row in enumerate(grid):
        new = []
        for j, v in enumerate(row):
            if has_sqrt5:
                c = Sqrt5Rational._coerce(v)
            else:
                c = GaussianRational._coerce(v)
            if c is None:
                raise MatrixFormatError(
                    f"entry ({i + 1},{j + 1}): cannot interpret {v!r} as a matrix scalar"
                )
            new.append(c)
        out.append(tuple(new))
    return tuple(out)


class HermitianMatrix:
    """An n-by-n Hermitian matrix with exact entries.

    Entries are GaussianRationals (or, for the single quadratic-extension
    witness, Sqrt5Rationals).  The conjugate-symmetry invariant is checked
    at construction.
    """

    __slots__ = ("n", "entries", "_grid_cache", "_minor_cache")

    def __init__(self, rows, *, validate: bool = True):
        entries = _coerce_rows(rows)
        n = len(entries)
        if n < 1:
            raise MatrixFormatError("order must be at least 1")
        for i, row in enumerate(entries):
            if len(row) != n:
                raise MatrixFormatError(f"row {i + 1} has {len(row)} entries, expected {n}")
        if validate:
            for i in range(n):
                for j in range(i, n):
                    if entries[i][j] != entries[j][i].conjugate():
                        raise MatrixFormatError(
                            f"entry ({i + 1},{j + 1}) is not the conjugate of entry "
                            f"({j + 1},{i + 1}): Hermitian invariant violated"
                        )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_grid_cache", None)
        object.__setattr__(self, "_minor_cache", None)

    def __setattr__(self, name, value):
        raise AttributeError("HermitianMatrix is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "HermitianMatrix":
        z = GaussianRational(0)
        return cls([[z] * n for _ in range(n)], validate=False)

    @classmethod
    def identity(cls, n: int) -> "HermitianMatrix":
        return cls.diagonal([1] * n)

    @classmethod
    def diagonal(cls, values) -> "HermitianMatrix":
        vals = list(values)
        n = len(vals)
        z = GaussianRational(0)
        rows = [[vals[i] if i == j else z for j in range(n)] for i in range(n)]
        return cls(rows, validate=True)

    # -- basics -----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, HermitianMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        rows = "; ".join(" ".join(str(v) for v in row) for row in self.entries)
        return f"HermitianMatrix({self.n}x{self.n}: {rows})"

    @property
    def is_real(self) -> bool:
        for row in self.entries:
            for v in row:
                if isinstance(v, GaussianRational) and v.im != 0:
                    return False
        return True

    # -- scaled integer grid (internal fast path) --------------------------

    def _scaled_grid(self):
        """Return (kind, scale, grid): an integer-valued copy of the matrix.

        kind 'real'  -> grid of ints,
        kind 'gauss' -> grid of (re, im) int pairs,
        kind 'field' -> grid of scalar objects (quadratic-extension path),
        where grid equals scale * entries.
        """
        cached = self._grid_cache
        if cached is not None:
            return cached
        first = self.entries[0][0]
        if isinstance(first, Sqrt5Rational):
            result = ("field", 1, self.entries)
        else:
            dens = set()
            for row in self.entries:
                for v in row:
                    dens.add(v.re.denominator)
                    dens.add(v.im.denominator)
            scale = lcm(*dens) if dens else 1
            if self.is_real:
                grid = tuple(
                    tuple(int(v.re * scale) for v in row) for row in self.entries
                )
                result = ("real", scale, grid)
            else:
                grid = tuple(
                    tuple((int(v.re * scale), int(v.im * scale)) for v in row)
                    for row in self.entries
                )
                result = ("gauss", scale, grid)
        object.__setattr__(self, "_grid_cache", result)
        return result

    def _minor_of_subset(self, subset) -> Fraction | Sqrt5Rational:
        """Exact principal minor for a 0-based index tuple."""
        kind, scale, grid = self._scaled_grid()
        k = len(subset)
        if kind == "real":
            d = _int_subset_det(grid, subset)
            return Fraction(d, scale**k)
        if kind == "gauss":
            da, db = _pair_subset_det(grid, subset)
            if db != 0:
                raise RuntimeError(
                    "principal minor of a Hermitian matrix came out non-real; "
                    "internal invariant violated"
                )
            return Fraction(da, scale**k)
        rows = [[grid[i][j] for j in subset] for i in subset]
        return _det_field(rows)

    # -- principal minors ---------------------------------------------------

    def principal_submatrix(self, alpha: Iterable[int]) -> "HermitianMatrix":
        idx = as_index_set(alpha, self.n)
        rows = [[self.entries[i - 1][j - 1] for j in idx] for i in idx]
        return HermitianMatrix(rows, validate=False)

    def determinant(self) -> Fraction | Sqrt5Rational:
        """Exact determinant.  Hermitian determinants are real; the zero
        imaginary part is asserted and discarded."""
        kind, scale, grid = self._scaled_grid()
        n = self.n
        if kind == "field":
            return _det_field([list(r) for r in grid])
        if n <= 3:
            # cofactor expansion doubles as the independent small-order path
            value = _det_laplace([list(r) for r in self.entries])
            if isinstance(value, GaussianRational):
                if value.im != 0:
                    raise RuntimeError(
                        "determinant of a Hermitian matrix came out non-real"
                    )
                return value.re
            return value
        return self._minor_of_subset(tuple(range(n)))

    def all_principal_minors(self, k: int):
        """All order-``k`` principal minors, in lexicographic subset order.

        Returns a list of ``(index_set, value)`` pairs, one per k-subset.
        """
        if not isinstance(k, int) or k < 1 or k > self.n:
            raise ValueError(f"minor order {k!r} out of range 1..{self.n}")
        out = []
        for subset in combinations(range(self.n), k):
            idx = tuple(i + 1 for i in subset)
            out.append((idx, self._minor_of_subset(subset)))
        return out

    def principal_minor_table(self):
        """Every principal minor, keyed by 1-based index set."""
        table = {}
        for mask, value in self._mask_minors().items():
            idx = tuple(i + 1 for i in range(self.n) if mask >> i & 1)
            table[idx] = value
        return table

    def _mask_minors(self):
        """All 2**n - 1 principal minors keyed by index bitmask (cached)."""
        cached = self._minor_cache
        if cached is not None:
            return cached
        n = self.n
        table = {}
        for k in range(1, n + 1):
            for subset in combinations(range(n), k):
                mask = 0
                for i in subset:
                    mask |= 1 << i
                table[mask] = self._minor_of_subset(subset)
        object.__setattr__(self, "_minor_cache", table)
        return table

    def minor_signs_by_order(self):
        """List indexed by k-1: signs of all order-k principal minors in
        lexicographic subset order."""
        table = self._mask_minors()
        n = self.n
        out = []
        for k in range(1, n + 1):
            signs = []
            for subset in combinations(range(n), k):
                mask = 0
                for i in subset:
                    mask |= 1 << i
                signs.append(real_sign(table[mask]))
            out.append(signs)
        return out

    # -- rank and inverse ---------------------------------------------------

    def rank(self) -> int:
        kind, _, grid = self._scaled_grid()
        if kind == "real":
            return _rank_int_grid([list(r) for r in grid])
        if kind == "gauss":
            return _rank_pair_grid([list(r) for r in grid])
        return grid_rank(grid)

    def inverse(self) -> "HermitianMatrix":
        """Exact inverse via Gauss-Jordan elimination."""
        n = self.n
        work = [list(row) for row in self.entries]
        zero = work[0][0] - work[0][0]
        one = zero + 1
        aug = [[one if i == j else zero for j in range(n)] for i in range(n)]
        for c in range(n):
            for r in range(c, n):
                if work[r][c] != zero:
                    break
            else:
                raise SingularMatrixError("matrix is singular; no exact inverse")
            work[c], work[r] = work[r], work[c]
            aug[c], aug[r] = aug[r], aug[c]
            pivot = work[c][c]
            work[c] = [v / pivot for v in work[c]]
            aug[c] = [v / pivot for v in aug[c]]
            for r in range(n):
                if r == c or work[r][c] == zero:
                    continue
                f = work[r][c]
                work[r] = [v - f * w for v, w in zip(work[r], work[c])]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[c])]
        return HermitianMatrix(aug, validate=True)

    # -- structural transforms ---------------------------------------------

    def negate(self) -> "HermitianMatrix":
        return HermitianMatrix(
            [[-v for v in row] for row in self.entries], validate=False
        )

    __neg__ = negate

    def direct_sum(self, other: "HermitianMatrix") -> "HermitianMatrix":
        n, m = self.n, other.n
        z = GaussianRational(0)
        rows = []
        for i in range(n):
            rows.append(list(self.entries[i]) + [z] * m)
        for i in range(m):
            rows.append([z] * n + list(other.entries[i]))
        return HermitianMatrix(rows, validate=False)

    def permute(self, perm: Sequence[int]) -> "HermitianMatrix":
        """Simultaneous row/column permutation: entry (i, j) of the result
        is entry (perm[i], perm[j]) of self (1-based)."""
        p = tuple(perm)
        if sorted(p) != list(range(1, self.n + 1)):
            raise ValueError(f"invalid permutation of 1..{self.n}: {perm!r}")
        rows = [
            [self.entries[p[i] - 1][p[j] - 1] for j in range(self.n)]
            for i in range(self.n)
        ]
        return HermitianMatrix(rows, validate=False)

    def duplicate_last(self) -> "HermitianMatrix":
        """Border the matrix with a copy of its last column (and the
        matching conjugated row), repeating the corner diagonal entry.

        The appended row equals the original last row: those entries are
        already the conjugates of the appended column.
        """
        n = self.n
        rows = [list(row) + [row[n - 1]] for row in self.entries]
        rows.append(list(self.entries[n - 1]) + [self.entries[n - 1][n - 1]])
        return HermitianMatrix(rows, validate=True)

    def submatrix_grid(self, drop_row: int, drop_col: int):
        """The (n-1)x(n-1) grid after deleting one row and one column
        (1-based); generally not Hermitian."""
        return [
            [v for j, v in enumerate(row) if j != drop_col - 1]
            for i, row in enumerate(self.entries)
            if i != drop_row - 1
        ]


def _int_subset_det(grid, subset) -> int:
    k = len(subset)
    if k == 1:
        return grid[subset[0]][subset[0]]
    if k == 2:
        a, b = subset
        return grid[a][a] * grid[b][b] - grid[a][b] * grid[b][a]
    if k == 3:
        a, b, c = subset
        r0, r1, r2 = grid[a], grid[b], grid[c]
        return (
            r0[a] * (r1[b] * r2[c] - r1[c] * r2[b])
            - r0[b] * (r1[a] * r2[c] - r1[c] * r2[a])
            + r0[c] * (r1[a] * r2[b] - r1[b] * r2[a])
        )
    rows = [[grid[i][j] for j in subset] for i in subset]
    return _det_ints(rows)


def _pair_subset_det(grid, subset):
    k = len(subset)
    if k == 1:
        return grid[subset[0]][subset[0]]
    if k == 2:
        a, b = subset
        (xa, xb), (ya, yb) = grid[a][a], grid[b][b]
        (ua, ub), (va, vb) = grid[a][b], grid[b][a]
        return (
            xa * ya - xb * yb - ua * va + ub * vb,
            xa * yb + xb * ya - ua * vb - ub * va,
        )
    rows = [[grid[i][j] for j in subset] for i in subset]
    return _det_pairs(rows)


# ---------------------------------------------------------------------------
# JSON document format
# ---------------------------------------------------------------------------


def matrix_to_json_dict(matrix: HermitianMatrix) -> dict:
    return {
        "n": matrix.n,
        "entries": [[format_gaussian(v) for v in row] for row in matrix.entries],
    }


def matrix_to_json(matrix: HermitianMatrix) -> str:
    return json.dumps(matrix_to_json_dict(matrix))


def matrix_from_json_dict(doc) -> HermitianMatrix:
    """Build a matrix from the `{"n": ..., "entries": [[[re, im], ...]]}`
    document, rejecting malformed input with a position-specific error."""
    if not isinstance(doc, dict):
        raise MatrixFormatError("matrix document must be a JSON object")
    if "n" not in doc or "entries" not in doc:
        raise MatrixFormatError('matrix document needs "n" and "entries" fields')
    n = doc["n"]
    if not isinstance(n, int) or n < 1:
        raise MatrixFormatError(f'"n" must be a positive integer, got {n!r}')
    entries = doc["entries"]
    if not isinstance(entries, list) or len(entries) != n:
        raise MatrixFormatError(f'"entries" must be a list of {n} rows')
    rows = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != n:
            raise MatrixFormatError(f"row {i + 1} must be a list of {n} entries")
        parsed = []
        for j, cell in enumerate(row):
            try:
                parsed.append(parse_gaussian(cell))
            except ScalarParseError as exc:
                raise MatrixFormatError(f"entry ({i + 1},{j + 1}): {exc}") from exc
        rows.append(parsed)
    return HermitianMatrix(rows, validate=True)


def matrix_from_json(text: str) -> HermitianMatrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"invalid JSON: {exc}") from exc
    return matrix_from_json_dict(doc)


def load_matrix(path) -> HermitianMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        return matrix_from_json(fh.read())
