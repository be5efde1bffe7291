"""Divided differences of a univariate polynomial over symbolic or numeric nodes.

Three constructions are provided and agree exactly: the recursive two-point
definition, a determinant in sigma, and an alternant quotient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .det import HCoeffs, MonomialUnit, PolyMatrix, SigmaShift, build_matrix, det, formal_sigma, s0_to_one
from .errors import ArityError, DegreeExceeded
from .ring import Poly, X, Y, exact_divide, per_var_degree, rename, xvar
from .sym import SigmaExpr, vandermonde


@dataclass(frozen=True)
class DividedDifference:
    r: int
    value: Poly  # polynomial in x1..xr
    expr: SigmaExpr | None = None


def _check_nodes(r: int) -> None:
    if not isinstance(r, int) or r < 1:
        raise ArityError(f"node count must be a positive integer, got {r!r}")


def two_point(F: Poly, a: int, b: int) -> Poly:
    """``(F(x_a) - F(x_b)) / (x_a - x_b)`` with ``x_a``, ``x_b`` variable codes."""
    num = rename(F, {X: a}) - rename(F, {X: b})
    return exact_divide(num, Poly.var(a) - Poly.var(b))


def _recursive(F: Poly, nodes: list[int]) -> Poly:
    if len(nodes) == 1:
        return rename(F, {X: nodes[0]})
    last = nodes[-1]
    # the inner operator acts on x, leaving x_last as a parameter
    G = exact_divide(F - rename(F, {X: last}), Poly.x() - Poly.var(last))
    return _recursive(G, nodes[:-1])


def divdiff_recursive(F: Poly, r: int) -> DividedDifference:
    """Divided difference of ``F`` over x1..xr by the two-point recursion."""
    _check_nodes(r)
    return DividedDifference(r, _recursive(F, [xvar(i) for i in range(1, r + 1)]))


def _default_bound(F: Poly, r: int, d: int | None) -> int:
    deg = per_var_degree(F, X)
    if d is None:
        return max(deg, r - 1)
    if d < r - 1:
        raise DegreeExceeded(f"bound d={d} is below r-1={r - 1}")
    if deg > d:
        raise DegreeExceeded(f"F has degree {deg} > d={d}")
    return d


def divdiff_matrix(F: Poly, r: int, d: int, sigma: Poly) -> PolyMatrix:
    """Columns ``y^k * sigma(y)`` for ``k = d-r .. 0``, then F, then ``y^(r-2) .. y^0``."""
    specs = [SigmaShift(k) for k in range(d - r, -1, -1)]
    specs.append(HCoeffs(rename(F, {X: Y})))
    specs += [MonomialUnit(k) for k in range(r - 2, -1, -1)]
    return build_matrix(d, specs, sigma)


def divdiff_determinant(F: Poly, r: int, d: int | None = None) -> DividedDifference:
    """Divided difference as a polynomial in sigma of degree at most ``d - r + 1``.

    ``d`` defaults to ``max(deg F, r - 1)``.
    """
    _check_nodes(r)
    d = _default_bound(F, r, d)
    poly = s0_to_one(det(divdiff_matrix(F, r, d, formal_sigma(r))))
    expr = SigmaExpr(poly, r, d - r + 1)
    return DividedDifference(r, expr.substitute(), expr)


def divdiff_alternant(F: Poly, r: int) -> DividedDifference:
    """``det |F(x_i), x_i^(r-2), ..., x_i^0|`` divided by the Vandermonde determinant."""
    _check_nodes(r)
    rows = []
    for i in range(1, r + 1):
        xi = Poly.x(i)
        rows.append([rename(F, {X: xvar(i)})] + [xi ** k for k in range(r - 2, -1, -1)])
    alt = det(PolyMatrix.from_rows(rows))
    return DividedDifference(r, exact_divide(alt, vandermonde(r)))


def divdiff_at_nodes(F: Poly, nodes: Sequence, d: int | None = None) -> Fraction:
    """Divided difference of ``F`` at rational nodes, repeated nodes allowed.

    The determinant is built with ``prod(y - lambda_i)`` in place of sigma, so
    coinciding nodes give the confluent (derivative) value.
    """
    r = len(nodes)
    _check_nodes(r)
    d = _default_bound(F, r, d)
    f = Poly.const(1)
    for lam in nodes:
        f = f * (Poly.y() - Fraction(lam))
    value = det(divdiff_matrix(F, r, d, f))
    if not value.is_constant():
        raise ValueError("F must have rational coefficients to evaluate at nodes")
    return value.constant_value()
