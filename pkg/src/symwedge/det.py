"""Polynomial matrices, coefficient-extraction column builders and exact
determinants, including determinants whose last row holds wedge factors.

Column builders share one window convention: with window ``D`` a column has
``D + 1`` entries and row ``j`` (0-based) holds the coefficient of ``y^(D-j)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence, Union

from .errors import ArityError, DegreeExceeded, NonSquare
from .ring import Poly, Y, coeff_of, exact_divide, per_var_degree, substitute, svar
from .sym import chi_from_positions, sgn_chi

ONE = Poly.const(1)
ZERO = Poly()


@dataclass(frozen=True)
class PolyMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major, length rows * cols

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match the matrix shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "PolyMatrix":
        rows = [[_as_poly(e) for e in row] for row in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(row) != ncols for row in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(e for row in rows for e in row))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "PolyMatrix":
        nrows = len(columns[0]) if columns else 0
        return cls.from_rows([[col[i] for col in columns] for i in range(nrows)])

    def __getitem__(self, ij: tuple[int, int]) -> Poly:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[Poly]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> list[Poly]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self) -> list[list[Poly]]:
        return [self.row(i) for i in range(self.rows)]

    def select_columns(self, cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix.from_rows([[row[j] for j in cols] for row in self.to_rows()])

    def select_rows(self, rows: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix.from_rows([self.row(i) for i in rows])

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix(self.rows, self.cols, tuple(fn(e) for e in self.entries))

    def __str__(self) -> str:
        return "\n".join(" | ".join(str(e) for e in row) for row in self.to_rows())


def _as_poly(e) -> Poly:
    return e if isinstance(e, Poly) else Poly.const(e)


# column builders


@dataclass(frozen=True)
class SigmaShift:
    """Coefficients of ``y^a * sigma(y)``."""

    a: int


@dataclass(frozen=True)
class MonomialUnit:
    """Coefficients of ``y^mu``: a unit column."""

    mu: int


@dataclass(frozen=True)
class HCoeffs:
    """Coefficients of an explicit polynomial in ``var`` (``y`` by default)."""

    h: Poly
    var: int = Y


ColumnSpec = Union[SigmaShift, MonomialUnit, HCoeffs]


def formal_sigma(r: int) -> Poly:
    """``sum_{p=0..r} s_p * y^(r-p)``: sigma(y) with formal coefficients."""
    if r < 1:
        raise ArityError(f"arity must be >= 1, got {r}")
    out = Poly()
    for p in range(r + 1):
        out = out + Poly.s(p) * Poly.y() ** (r - p)
    return out


def _window_column(poly: Poly, var: int, D: int, what: str) -> list[Poly]:
    deg = per_var_degree(poly, var)
    if deg > D:
        raise DegreeExceeded(f"{what} has degree {deg} beyond the window {D}")
    return [coeff_of(poly, var, D - j) for j in range(D + 1)]


def build_column(D: int, spec: ColumnSpec, sigma: Poly | None = None) -> list[Poly]:
    if isinstance(spec, SigmaShift):
        if sigma is None:
            raise ValueError("a sigma polynomial is needed for SigmaShift columns")
        return _window_column(Poly.y() ** spec.a * sigma, Y, D, f"y^{spec.a}*sigma(y)")
    if isinstance(spec, MonomialUnit):
        if not 0 <= spec.mu <= D:
            raise DegreeExceeded(f"monomial y^{spec.mu} lies outside the window {D}")
        return [ONE if D - j == spec.mu else ZERO for j in range(D + 1)]
    if isinstance(spec, HCoeffs):
        return _window_column(spec.h, spec.var, D, "polynomial column")
    raise TypeError(f"unknown column spec {spec!r}")


def build_matrix(D: int, specs: Sequence[ColumnSpec], sigma: Poly | None = None) -> PolyMatrix:
    """``(D+1) x len(specs)`` matrix of window coefficients, one column per spec."""
    if D < 0:
        raise DegreeExceeded(f"window must be >= 0, got {D}")
    cols = [build_column(D, spec, sigma) for spec in specs]
    rows = [[col[j] for col in cols] for j in range(D + 1)]
    return PolyMatrix(D + 1, len(specs), tuple(e for row in rows for e in row))


# determinants


def det(m: PolyMatrix) -> Poly:
    """Exact determinant.

    Lines with at most one nonzero entry are expanded directly; otherwise
    fraction-free (Bareiss) elimination is used, swapping rows on a zero pivot.
    """
    if m.rows != m.cols:
        raise NonSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    return _det(m.to_rows())


def _det(a: list[list[Poly]]) -> Poly:
    n = len(a)
    if n == 0:
        return ONE
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]

    # sparse column: expand along it
    best_j, best_nz = -1, n + 1
    for j in range(n):
        nz = sum(1 for i in range(n) if a[i][j])
        if nz < best_nz:
            best_j, best_nz = j, nz
    if best_nz == 0:
        return ZERO
    if best_nz == 1:
        j = best_j
        i = next(i for i in range(n) if a[i][j])
        minor = [row[:j] + row[j + 1:] for k, row in enumerate(a) if k != i]
        sign = -1 if (i + j) % 2 else 1
        return a[i][j] * _det(minor) * sign
    best_i, best_nz_row = -1, n + 1
    for i in range(n):
        nz = sum(1 for e in a[i] if e)
        if nz < best_nz_row:
            best_i, best_nz_row = i, nz
    if best_nz_row == 0:
        return ZERO
    if best_nz_row == 1:
        i = best_i
        j = next(j for j in range(n) if a[i][j])
        minor = [row[:j] + row[j + 1:] for k, row in enumerate(a) if k != i]
        sign = -1 if (i + j) % 2 else 1
        return a[i][j] * _det(minor) * sign
    return _bareiss([list(row) for row in a])


def _bareiss(a: list[list[Poly]]) -> Poly:
    n = len(a)
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = pivot * a[i][j] - aik * a[k][j]
                a[i][j] = num if prev == ONE else exact_divide(num, prev)
            a[i][k] = ZERO
        prev = pivot
    return a[n - 1][n - 1] * sign


def wedge_row_det(a: PolyMatrix | None, h: Sequence, r: int | None = None) -> dict[tuple, Poly]:
    """Determinant of ``a`` (q x p) stacked over a final row of wedge factors.

    Returns ``{positions: coefficient}`` standing for
    ``sum(sgn(chi) * det(a without the chi columns) * wedge(h at chi))`` where
    ``positions`` lists the selected indices of ``h`` in increasing order.
    Terms whose wedge contains a zero factor, and terms with zero
    coefficient, are dropped.
    """
    p = len(h)
    q = 0 if a is None else a.rows
    if a is not None and a.rows and a.cols != p:
        raise ArityError(f"matrix has {a.cols} columns but {p} wedge entries were given")
    if r is not None and r != p - q:
        raise ArityError(f"arity {r} does not equal {p} - {q}")
    if q > p:
        return {}
    if q == 0:
        if any(_is_zero(e) for e in h):
            return {}
        return {tuple(range(p)): ONE}
    r = p - q
    rows = a.to_rows()
    out = {}
    for chosen in combinations(range(p), r):
        if any(_is_zero(h[k]) for k in chosen):
            continue
        keep = [j for j in range(p) if j not in chosen]
        minor = [[row[j] for j in keep] for row in rows]
        c = _det(minor)
        if c:
            out[chosen] = c * sgn_chi(chi_from_positions(chosen, p))
    return out


def _is_zero(e) -> bool:
    if isinstance(e, Poly):
        return e.is_zero()
    return e == 0


def s0_to_one(p: Poly) -> Poly:
    """Eliminate the formal ``s0`` by setting it to 1."""
    return substitute(p, {svar(0): ONE})
