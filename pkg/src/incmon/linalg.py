"""Sparse exact linear algebra over the rationals.

Matrices here are small but very sparse (module actions move basis vectors
to single basis vectors, Koszul differentials have a handful of terms per
column), so everything is dict-based.  Rank is computed by fraction-free
elimination on gcd-reduced integer rows; reductions that must be linear in
their input (quotient-space projections) use exact Fraction arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Sequence

Vec = dict[int, object]  # sparse vector: index -> int | Fraction


def vec_add(u: Vec, v: Vec, cu=1, cv=1) -> Vec:
    out = {}
    for i, x in u.items():
        val = cu * x
        if val:
            out[i] = val
    for i, x in v.items():
        val = out.get(i, 0) + cv * x
        if val:
            out[i] = val
        elif i in out:
            del out[i]
    return out


def vec_int_normalize(v: Vec) -> dict[int, int]:
    """Scale a rational vector to coprime integers (sign of leading kept)."""
    if not v:
        return {}
    denom = 1
    for x in v.values():
        if isinstance(x, Fraction):
            denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = {i: int(x * denom) for i, x in v.items()}
    g = 0
    for x in ints.values():
        g = gcd(g, abs(x))
    if g > 1:
        ints = {i: x // g for i, x in ints.items()}
    return ints


class Echelon:
    """Incremental row echelon with leading-column pivoting.

    Rows are stored as gcd-reduced integer vectors.  ``col_key`` fixes the
    column elimination order (default: natural index order).
    """

    def __init__(self, col_key: Callable[[int], object] | None = None):
        self._key = col_key or (lambda c: c)
        self.pivots: dict[int, dict[int, int]] = {}

    def _lead(self, row: Vec) -> int:
        return min(row, key=self._key)

    def add(self, row: Vec) -> bool:
        """Insert a row; returns True if it increased the rank."""
        row = vec_int_normalize(row)
        while row:
            c = self._lead(row)
            piv = self.pivots.get(c)
            if piv is None:
                self.pivots[c] = row
                return True
            a, p = row[c], piv[c]
            g = gcd(abs(a), abs(p))
            row = vec_add(row, piv, p // g, -(a // g))
            row = vec_int_normalize(row)
        return False

    def reduce_linear(self, row: Vec) -> dict[int, Fraction]:
        """Residual of ``row`` modulo the row space; linear in ``row``."""
        out: dict[int, Fraction] = {i: Fraction(x) for i, x in row.items() if x}
        while out:
            c = self._lead(out)
            piv = self.pivots.get(c)
            if piv is None:
                break
            coef = out[c] / piv[c]
            for i, x in piv.items():
                val = out.get(i, Fraction(0)) - coef * x
                if val:
                    out[i] = val
                elif i in out:
                    del out[i]
        return out

    def contains(self, row: Vec) -> bool:
        return not self.reduce_linear(row)

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank_of_rows(rows: Iterable[Vec]) -> int:
    ech = Echelon()
    for row in rows:
        ech.add(row)
    return ech.rank


def kernel_basis(rows: Iterable[Vec], ncols: int) -> list[dict[int, Fraction]]:
    """Basis of the solution space of the homogeneous system ``rows . x = 0``.

    Unknowns are indexed 0..ncols-1; rows are sparse coefficient vectors.
    """
    # reduced row echelon over Fractions
    pivots: dict[int, dict[int, Fraction]] = {}
    for raw in rows:
        row = {i: Fraction(x) for i, x in raw.items() if x}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                lead = row[c]
                pivots[c] = {i: x / lead for i, x in row.items()}
                break
            coef = row[c]
            for i, x in piv.items():
                val = row.get(i, Fraction(0)) - coef * x
                if val:
                    row[i] = val
                elif i in row:
                    del row[i]
    # back-substitution: express pivot coordinates via free ones
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        sol: dict[int, Fraction] = {f: Fraction(1)}
        for c in sorted(pivots, reverse=True):
            row = pivots[c]
            acc = Fraction(0)
            for i, x in row.items():
                if i != c and i in sol:
                    acc -= x * sol[i]
            if acc:
                sol[c] = acc
        basis.append(sol)
    return basis


class Matrix:
    """Sparse matrix with exact entries (int or Fraction)."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows: int, ncols: int, entries: dict | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.entries = {}
        if entries:
            for (r, c), v in entries.items():
                if v:
                    if not (0 <= r < nrows and 0 <= c < ncols):
                        raise ValueError("entry out of range")
                    self.entries[(r, c)] = v

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "Matrix":
        return cls(nrows, ncols)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        ent = {}
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if v:
                    ent[(r, c)] = v
        return cls(nrows, ncols, ent)

    def to_rows(self) -> list[list]:
        rows = [[0] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def row_dicts(self) -> list[Vec]:
        rows: list[Vec] = [dict() for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def col(self, j: int) -> Vec:
        return {r: v for (r, c), v in self.entries.items() if c == j}

    def cols(self) -> list[Vec]:
        out: list[Vec] = [dict() for _ in range(self.ncols)]
        for (r, c), v in self.entries.items():
            out[c][r] = v
        return out

    def apply(self, vec: Vec) -> Vec:
        """Matrix times sparse column vector."""
        out: Vec = {}
        by_col = self._by_col()
        for c, x in vec.items():
            col = by_col.get(c)
            if not col or not x:
                continue
            for r, v in col.items():
                val = out.get(r, 0) + v * x
                if val:
                    out[r] = val
                elif r in out:
                    del out[r]
        return out

    def _by_col(self) -> dict[int, Vec]:
        by_col: dict[int, Vec] = {}
        for (r, c), v in self.entries.items():
            by_col.setdefault(c, {})[r] = v
        return by_col

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.nrows}x{self.ncols} * "
                             f"{other.nrows}x{other.ncols}")
        by_col = self._by_col()
        ent: dict[tuple[int, int], object] = {}
        for (rk, c2), v2 in other.entries.items():
            col = by_col.get(rk)
            if not col:
                continue
            for r, v1 in col.items():
                key = (r, c2)
                val = ent.get(key, 0) + v1 * v2
                if val:
                    ent[key] = val
                elif key in ent:
                    del ent[key]
        return Matrix(self.nrows, other.ncols, ent)

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        ent = dict(self.entries)
        for k, v in other.entries.items():
            val = ent.get(k, 0) + v
            if val:
                ent[k] = val
            elif k in ent:
                del ent[k]
        return Matrix(self.nrows, self.ncols, ent)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def scale(self, n) -> "Matrix":
        if not n:
            return Matrix.zero(self.nrows, self.ncols)
        return Matrix(self.nrows, self.ncols,
                      {k: n * v for k, v in self.entries.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            return False
        keys = set(self.entries) | set(other.entries)
        return all(self.entries.get(k, 0) == other.entries.get(k, 0) for k in keys)

    def __hash__(self):
        raise TypeError("matrices are unhashable")

    def is_zero(self) -> bool:
        return not self.entries

    def rank(self) -> int:
        return rank_of_rows(self.row_dicts())

    def kernel(self) -> list[dict[int, Fraction]]:
        return kernel_basis(self.row_dicts(), self.ncols)

    def inverse(self) -> "Matrix":
        """Gauss-Jordan inverse of a square matrix."""
        if self.nrows != self.ncols:
            raise ValueError("inverse of non-square matrix")
        n = self.nrows
        rows = [[Fraction(x) for x in row] for row in self.to_rows()]
        aug = [row + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
               for i, row in enumerate(rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col]), None)
            if piv is None:
                raise ValueError("singular matrix")
            aug[col], aug[piv] = aug[piv], aug[col]
            lead = aug[col][col]
            aug[col] = [x / lead for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    coef = aug[r][col]
                    aug[r] = [x - coef * y for x, y in zip(aug[r], aug[col])]
        ent = {}
        for r in range(n):
            for c in range(n):
                v = aug[r][n + c]
                if v:
                    ent[(r, c)] = v
        return Matrix(n, n, ent)

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols}, {len(self.entries)} entries)"


def hstack(mats: Sequence[Matrix]) -> Matrix:
    """Concatenate matrices with equal row counts side by side."""
    if not mats:
        return Matrix.zero(0, 0)
    nrows = mats[0].nrows
    ent = {}
    off = 0
    for m in mats:
        if m.nrows != nrows:
            raise ValueError("row count mismatch")
        for (r, c), v in m.entries.items():
            ent[(r, off + c)] = v
        off += m.ncols
    return Matrix(nrows, off, ent)
