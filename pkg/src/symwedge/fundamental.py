"""Bialternants as determinants in sigma, and the expression of symmetric
polynomials through elementary symmetric polynomials."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .det import HCoeffs, MonomialUnit, SigmaShift, build_matrix, det, formal_sigma, s0_to_one
from .errors import ArityError, DegreeExceeded, NotMonic, NotSymmetric
from .ring import (
    Poly,
    X,
    Y,
    is_xi,
    per_var_degree,
    rename,
    substitute,
    svar,
    univariate_coeffs,
    var_name,
    xvar,
)
from .sym import SigmaExpr, alternant_expand, atr, is_symmetric, vandermonde


def _check_arity(r: int) -> None:
    if not isinstance(r, int) or r < 1:
        raise ArityError(f"arity must be a positive integer, got {r!r}")


def bialternant_to_sigma(h: Sequence[Poly], r: int, delta: int) -> SigmaExpr:
    """Return S with ``det |h_j(x_i)| == S(sigma) * vandermonde(r)``.

    ``h`` holds ``r`` polynomials in the bare variable ``x`` of degree at most
    ``r - 1 + delta``. S is the determinant of the ``(r+delta)``-square matrix
    whose columns are ``y^k * sigma(y)`` for ``k = delta-1 .. 0`` followed by
    the ``h_j(y)``, all read off in the window ``y^(r-1+delta) .. y^0``.
    """
    _check_arity(r)
    if len(h) != r:
        raise ArityError(f"expected {r} polynomials, got {len(h)}")
    if delta < 0:
        raise DegreeExceeded(f"delta must be >= 0, got {delta}")
    D = r - 1 + delta
    for j, hj in enumerate(h, start=1):
        if per_var_degree(hj, X) > D:
            raise DegreeExceeded(f"h{j} has degree {per_var_degree(hj, X)} > {D}")
    specs = [SigmaShift(k) for k in range(delta - 1, -1, -1)]
    specs += [HCoeffs(rename(hj, {X: Y})) for hj in h]
    m = build_matrix(D, specs, formal_sigma(r))
    return SigmaExpr(s0_to_one(det(m)), r, delta)


@lru_cache(maxsize=4096)
def _unit_determinant(r: int, delta: int, mu: tuple) -> Poly:
    D = r - 1 + delta
    specs = [SigmaShift(k) for k in range(delta - 1, -1, -1)]
    specs += [MonomialUnit(e) for e in mu]
    return s0_to_one(det(build_matrix(D, specs, formal_sigma(r))))


def symmetric_degree(S: Poly, r: int) -> int:
    """Maximal per-variable degree of ``S`` over x1..xr (0 for constants)."""
    return max(0, max(per_var_degree(S, xvar(i)) for i in range(1, r + 1)))


def express_in_elementary(S: Poly, r: int, delta: int | None = None) -> SigmaExpr:
    """Write a symmetric polynomial in x1..xr as a polynomial in ``s_p = sigma_p``.

    ``delta`` defaults to the largest per-variable degree of ``S``; a larger
    value is accepted and gives an equal expression.
    """
    _check_arity(r)
    for v in S.variables():
        if not is_xi(v) or v > r:
            raise ArityError(f"variable {var_name(v)} is outside x1..x{r}")
    if not is_symmetric(S, r):
        raise NotSymmetric(f"polynomial is not symmetric in x1..x{r}")
    least = symmetric_degree(S, r)
    if delta is None:
        delta = least
    elif delta < least:
        raise DegreeExceeded(f"delta {delta} is below the degree {least} of the input")
    expansion = alternant_expand(S * vandermonde(r), r, r - 1 + delta)
    out = Poly()
    for mu in sorted(expansion, reverse=True):
        out = out + _unit_determinant(r, delta, mu) * expansion[mu]
    return SigmaExpr(out, r, delta)


def verify_bialternant(h: Sequence[Poly], S: SigmaExpr) -> bool:
    """Check ``det |h_j(x_i)| == S(sigma(x)) * vandermonde(r)`` exactly."""
    if len(h) != S.r or S.r < 1:
        return False
    try:
        lhs = atr(list(h), S.r)
    except ArityError:
        return False
    return lhs == S.substitute() * vandermonde(S.r)


def product_of_values(F: Poly, r: int) -> Poly:
    """``F(x1) * ... * F(xr)`` for ``F`` in the bare variable ``x``."""
    out = Poly.const(1)
    for i in range(1, r + 1):
        out = out * rename(F, {X: xvar(i)})
    return out


def norm_resultant(f: Poly, F: Poly) -> Fraction:
    """``prod F(lambda_i)`` over the roots of the monic ``f``, computed by
    expressing ``prod F(x_i)`` in sigma and substituting the coefficients of ``f``.
    """
    fc = univariate_coeffs(f, X)
    r = len(fc) - 1
    if r < 1:
        raise ArityError("f must have degree >= 1")
    if fc[-1] != 1:
        raise NotMonic(f"leading coefficient of f is {fc[-1]}, not 1")
    univariate_coeffs(F, X)
    expr = express_in_elementary(product_of_values(F, r), r)
    value = substitute(expr.poly, {svar(p): fc[r - p] for p in range(r + 1)})
    return value.constant_value()
