"""Hankel matrices of reverse Bessel polynomials and exact linear algebra.

Determinants are computed over Z[R] with fraction-free (Bareiss) elimination:
each step cross-multiplies rows (division-free) and then divides by the
previous pivot, a division that is provably remainder-free.  Any remainder
would mean broken arithmetic, so it raises InexactDivision instead of being
silently discarded.  A memoized cofactor expansion serves as an independent
oracle on small matrices.

Linear solves use Cramer's rule against the unit right-hand side (1, 0, ...,
0).  Each solution component is a ratio of determinants, reduced to canonical
form, and the residual of the whole system is re-checked symbolically before
anything is returned.

Hankel determinants are cached by (size, offset) since the downstream
magnitude formulas keep asking for the same handful.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bessel import BesselTable, reverse_bessel
from .errors import DimensionTooLarge, SingularMatrix, TableTooSmall
from .poly import IntPoly, RatFunc

_MINOR_EXPANSION_LIMIT = 13


@dataclass(frozen=True)
class HankelSpec:
    """size x size matrix with entry (i, j) = B_{i+j+offset}."""

    size: int
    offset: int = 0

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("size must be >= 1")
        if self.offset < 0:
            raise ValueError("offset must be >= 0")

    @property
    def top_index(self) -> int:
        return 2 * (self.size - 1) + self.offset


class PolyMatrix:
    """Immutable square matrix of integer polynomials."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square and nonempty")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    @property
    def dim(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> IntPoly:
        return self.rows[i][j]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(zip(*self.rows))

    def minor(self, drop_row: int, drop_col: int) -> "PolyMatrix":
        return PolyMatrix(
            tuple(e for j, e in enumerate(row) if j != drop_col)
            for i, row in enumerate(self.rows)
            if i != drop_row
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)


def build_hankel(spec: HankelSpec, table: BesselTable) -> PolyMatrix:
    """Assemble the matrix and double-check the constant anti-diagonals."""
    if table.max_index < spec.top_index:
        raise TableTooSmall(
            f"need polynomials up to index {spec.top_index}, table stops at {table.max_index}"
        )
    rows = [
        [table.polys[i + j + spec.offset] for j in range(spec.size)]
        for i in range(spec.size)
    ]
    m = PolyMatrix(rows)
    for i in range(spec.size):
        for j in range(spec.size):
            if i + 1 < spec.size and j > 0:
                assert m.rows[i][j] == m.rows[i + 1][j - 1], "anti-diagonal broken"
    return m


# ---------------------------------------------------------------------------
# determinants
# ---------------------------------------------------------------------------

def det_bareiss(m: PolyMatrix) -> IntPoly:
    """Exact determinant by fraction-free elimination.

    Every intermediate entry is itself a minor of the input, so coefficient
    growth stays polynomial and each division by the previous pivot is exact
    (checked; failure raises InexactDivision).
    """
    n = m.dim
    a = [[m.rows[i][j] for j in range(n)] for i in range(n)]
    sign = 1
    prev = IntPoly.one()
    for k in range(n - 1):
        if a[k][k].is_zero:
            for i in range(k + 1, n):
                if not a[i][k].is_zero:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return IntPoly.zero()
        pivot = a[k][k]
        for i in range(k + 1, n):
            fac = a[i][k]
            row = a[i]
            base = a[k]
            for j in range(k + 1, n):
                row[j] = (pivot * row[j] - fac * base[j]).divexact(prev)
        prev = pivot
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def det_minor_expansion(m: PolyMatrix) -> IntPoly:
    """Cofactor expansion with column-mask memoization; oracle for Bareiss.

    Cost grows as 2^dim, hence the hard dimension guard.
    """
    n = m.dim
    if n > _MINOR_EXPANSION_LIMIT:
        raise DimensionTooLarge(f"cofactor expansion capped at {_MINOR_EXPANSION_LIMIT}, got {n}")
    rows = m.rows
    memo = {0: IntPoly.one()}

    # minors are built over the leading rows so that the heavily shared
    # small minors carry the lowest-degree entries
    def minor_det(mask: int) -> IntPoly:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        k = mask.bit_count()
        row = rows[k - 1]
        acc = IntPoly.zero()
        sign = 1 if k % 2 == 1 else -1  # cofactor sign at (k-1, first column)
        rest = mask
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            term = row[j] * minor_det(mask ^ low)
            acc = acc + term if sign > 0 else acc - term
            sign = -sign
            rest ^= low
        memo[mask] = acc
        return acc

    return minor_det((1 << n) - 1)


@lru_cache(maxsize=None)
def hankel_det(size: int, offset: int) -> IntPoly:
    """det [B_{i+j+offset}] over i, j = 0..size-1; size 0 means the empty
    determinant, which is 1 by convention."""
    if size == 0:
        return IntPoly.one()
    spec = HankelSpec(size, offset)
    return det_bareiss(build_hankel(spec, reverse_bessel(spec.top_index)))


# ---------------------------------------------------------------------------
# linear solves
# ---------------------------------------------------------------------------

def solve_unit_rhs(m: PolyMatrix) -> tuple:
    """Solve m x = (1, 0, ..., 0)^T exactly by Cramer's rule.

    Component i is the cofactor of entry (0, i) over det(m); the residual of
    the full system is recomputed symbolically and asserted before returning.
    """
    n = m.dim
    d = det_bareiss(m)
    if d.is_zero:
        raise SingularMatrix("unit-RHS solve on a singular matrix")
    if n == 1:
        nums = [IntPoly.one()]
    else:
        nums = []
        for i in range(n):
            sub = det_bareiss(m.minor(0, i))
            nums.append(sub if i % 2 == 0 else -sub)
    for r in range(n):
        acc = IntPoly.zero()
        for j in range(n):
            acc = acc + m.rows[r][j] * nums[j]
        expect = d if r == 0 else IntPoly.zero()
        assert acc == expect, f"residual check failed in row {r}"
    return tuple(RatFunc(num, d) for num in nums)


@lru_cache(maxsize=None)
def unit_solution(p: int) -> tuple:
    """Cached coefficients for the size p+1, offset 0 Hankel system."""
    spec = HankelSpec(p + 1, 0)
    return solve_unit_rhs(build_hankel(spec, reverse_bessel(spec.top_index)))


def first_coeff_formula(p: int, table: BesselTable) -> RatFunc:
    """Closed form for component 0 of the unit-RHS solve:
    det of the offset-2 Hankel block over the full offset-0 determinant."""
    if p == 0:
        return RatFunc(IntPoly.one(), table.poly(0))
    num = det_bareiss(build_hankel(HankelSpec(p, 2), table))
    den = det_bareiss(build_hankel(HankelSpec(p + 1, 0), table))
    return RatFunc(num, den)


def last_coeff_formula(p: int, table: BesselTable) -> RatFunc:
    """Closed form for component p of the unit-RHS solve:
    (-1)^p times the offset-1 block determinant over the full one."""
    if p == 0:
        return RatFunc(IntPoly.one(), table.poly(0))
    num = det_bareiss(build_hankel(HankelSpec(p, 1), table))
    den = det_bareiss(build_hankel(HankelSpec(p + 1, 0), table))
    return RatFunc(num if p % 2 == 0 else -num, den)
