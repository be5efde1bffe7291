"""Permutations acting on x1..xr, symmetry tests, elementary symmetric
polynomials, alternants and their expansion in the monomial-alternant basis.

Sign convention: ``prod(y - x_i) = sum(sigma_p * y^(r-p))``, so ``sigma_p`` is
``(-1)^p`` times the usual elementary symmetric polynomial ``e_p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Mapping, Sequence

from .errors import ArityError, DegreeExceeded, NotAntisymmetric
from .ring import (
    Poly,
    X,
    coeff_of_y,
    coefficients,
    format_poly,
    is_s,
    is_xi,
    per_var_degree,
    s_index,
    substitute,
    svar,
    var_name,
    xvar,
)

DecreasingExponents = tuple
AlternantExpansion = dict


def _check_arity(r: int) -> None:
    if not isinstance(r, int) or r < 1:
        raise ArityError(f"arity must be a positive integer, got {r!r}")


class Permutation:
    """Bijection of ``1..r`` given by its images ``(tau(1), ..., tau(r))``."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        self.images = images

    @classmethod
    def identity(cls, r: int) -> "Permutation":
        return cls(range(1, r + 1))

    @classmethod
    def transposition(cls, r: int, i: int, j: int) -> "Permutation":
        img = list(range(1, r + 1))
        img[i - 1], img[j - 1] = img[j - 1], img[i - 1]
        return cls(img)

    @property
    def r(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: ``(self * other)(i) == self(other(i))``."""
        if self.r != other.r:
            raise ArityError("cannot compose permutations of different sizes")
        return Permutation(self.images[j - 1] for j in other.images)

    def inverse(self) -> "Permutation":
        inv = [0] * self.r
        for i, t in enumerate(self.images, start=1):
            inv[t - 1] = i
        return Permutation(inv)

    def sign(self) -> int:
        seen = [False] * self.r
        s = 1
        for start in range(self.r):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = self.images[j] - 1
                length += 1
            if length % 2 == 0:
                s = -s
        return s

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({self.images})"


def act(tau: Permutation, p: Poly) -> Poly:
    """Relabel ``x_i -> x_tau(i)``.

    This is a left action: ``act(a, act(b, p)) == act(a * b, p)``. Variables
    other than the x_i (bare x, y, s_p) are treated as constants.
    """
    r = tau.r
    out = {}
    for m, c in p.terms.items():
        exps = []
        for v, e in m:
            if is_xi(v):
                if v > r:
                    raise ArityError(f"variable {var_name(v)} is outside x1..x{r}")
                v = tau(v)
            exps.append((v, e))
        out[tuple(sorted(exps))] = c
    return Poly(out)


def _check_vars(p: Poly, r: int) -> None:
    for v in p.variables():
        if is_xi(v) and v > r:
            raise ArityError(f"variable {var_name(v)} is outside x1..x{r}")


def is_symmetric(p: Poly, r: int) -> bool:
    """True iff ``p`` is fixed by every adjacent transposition of x1..xr."""
    _check_arity(r)
    _check_vars(p, r)
    return all(act(Permutation.transposition(r, i, i + 1), p) == p for i in range(1, r))


def is_antisymmetric(p: Poly, r: int) -> bool:
    """True iff every adjacent transposition of x1..xr negates ``p``."""
    _check_arity(r)
    _check_vars(p, r)
    neg = -p
    return all(act(Permutation.transposition(r, i, i + 1), p) == neg for i in range(1, r))


@lru_cache(maxsize=None)
def sigma_poly(r: int) -> Poly:
    """``prod_{i=1..r} (y - x_i)``."""
    _check_arity(r)
    out = Poly.const(1)
    for i in range(1, r + 1):
        out = out * (Poly.y() - Poly.x(i))
    return out


def sigma_p(r: int, p: int) -> Poly:
    _check_arity(r)
    if not 0 <= p <= r:
        raise ArityError(f"sigma index must lie in [0, {r}], got {p}")
    return coeff_of_y(sigma_poly(r), r - p)


def sigma_values(r: int) -> dict:
    """Bindings ``s_p -> sigma_p(x1..xr)`` for ``p = 0..r``."""
    return {svar(p): sigma_p(r, p) for p in range(r + 1)}


@lru_cache(maxsize=None)
def vandermonde(r: int) -> Poly:
    """``prod_{i<k} (x_i - x_k)``, the determinant of ``|x_i^(r-1) ... x_i^0|``."""
    _check_arity(r)
    out = Poly.const(1)
    for k in range(2, r + 1):
        for i in range(1, k):
            out = out * (Poly.x(i) - Poly.x(k))
    return out


def _sort_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq`` (distinct entries) into decreasing order."""
    inv = 0
    n = len(seq)
    for i in range(n):
        for j in range(i + 1, n):
            if seq[i] < seq[j]:
                inv += 1
    return -1 if inv % 2 else 1


@lru_cache(maxsize=4096)
def monomial_alternant(mu: tuple) -> Poly:
    """``det |x_i^mu_j|`` for a tuple of exponents ``mu``."""
    r = len(mu)
    terms = {}
    for perm in permutations(range(r)):
        # term prod_i x_i^{mu[perm[i]]} with sign of perm
        m = tuple((xvar(i + 1), mu[perm[i]]) for i in range(r) if mu[perm[i]])
        sign = Permutation(k + 1 for k in perm).sign()
        terms[m] = terms.get(m, 0) + sign
    return Poly(terms)


def alternant_coords(hs: Sequence[Poly]) -> dict:
    """Coordinates of ``h_1 ^ ... ^ h_r`` in the basis of strictly decreasing
    monomial wedges, expanding each univariate ``h_j`` (in bare ``x``) by linearity.

    Coefficients of the ``h_j`` may involve variables other than ``x``; the
    returned values are then polynomials, otherwise plain rationals wrapped
    as constant polynomials.
    """
    cols = [sorted(coefficients(h, X).items()) for h in hs]
    acc: dict = {}
    for choice in product(*cols):
        exps = [k for k, _ in choice]
        if len(set(exps)) < len(exps):
            continue
        c = Poly.const(_sort_sign(exps))
        for _, ck in choice:
            c = c * ck
        key = tuple(sorted(exps, reverse=True))
        acc[key] = acc[key] + c if key in acc else c
    return {k: v for k, v in acc.items() if v}


def atr(hs: Sequence[Poly], r: int) -> Poly:
    """The alternant ``det |h_j(x_i)|`` of univariate polynomials in ``x``."""
    _check_arity(r)
    if len(hs) != r:
        raise ArityError(f"expected {r} polynomials, got {len(hs)}")
    out = Poly()
    for mu, c in alternant_coords(hs).items():
        out = out + c * monomial_alternant(mu)
    return out


def _x_exponents(m, r: int):
    exps = [0] * r
    for v, e in m:
        if not is_xi(v) or v > r:
            return None
        exps[v - 1] = e
    return exps


def alternant_expand(a: Poly, r: int, bound: int) -> AlternantExpansion:
    """Write an antisymmetric ``a`` as ``sum(c_mu * monomial_alternant(mu))``.

    Returns ``{mu: c_mu}`` with ``mu`` strictly decreasing and ``mu[0] <= bound``.
    Raises NotAntisymmetric when ``a`` is not in the span, DegreeExceeded when
    some variable has degree above ``bound``.
    """
    _check_arity(r)
    for v in a.variables():
        if not is_xi(v) or v > r:
            raise ArityError(f"variable {var_name(v)} is outside x1..x{r}")
    for i in range(1, r + 1):
        if per_var_degree(a, xvar(i)) > bound:
            raise DegreeExceeded(f"degree in x{i} exceeds {bound}")
    coeffs = {}
    for m, c in a.terms.items():
        exps = _x_exponents(m, r)
        if all(exps[i] > exps[i + 1] for i in range(r - 1)):
            coeffs[tuple(exps)] = c
    rest = a
    for mu, c in coeffs.items():
        rest = rest - monomial_alternant(mu) * c
    if rest:
        raise NotAntisymmetric(f"polynomial is not antisymmetric in x1..x{r}")
    return coeffs


def sgn_chi(chi: Sequence[int]) -> int:
    """Sign of the permutation listing the zero positions of ``chi``, then its one positions."""
    inversions = 0
    ones = 0
    for b in chi:
        if b not in (0, 1):
            raise ValueError(f"bit vector entries must be 0 or 1, got {b!r}")
        if b:
            ones += 1
        else:
            inversions += ones
    return -1 if inversions % 2 else 1


def chi_from_positions(positions: Iterable[int], p: int) -> tuple:
    bits = [0] * p
    for k in positions:
        bits[k] = 1
    return tuple(bits)


def e_name(v) -> str:
    """Variable printer that shows ``s_p`` as ``e_p``."""
    if is_s(v):
        return f"e{s_index(v)}"
    return var_name(v)


@dataclass(frozen=True)
class SigmaExpr:
    """A polynomial in ``s1..sr`` standing for ``sigma_1..sigma_r`` (or ``e_1..e_r``).

    ``basis`` is ``"sigma"`` for the signed convention and ``"e"`` for the
    conventional elementary symmetric polynomials.
    """

    poly: Poly
    r: int
    delta: int
    basis: str = "sigma"

    def degree(self) -> int:
        """Total degree in the s-variables; -1 for zero."""
        return self.poly.total_degree()

    def substitute(self) -> Poly:
        """Expand into x1..xr."""
        if self.basis == "sigma":
            return substitute(self.poly, sigma_values(self.r))
        vals = {svar(p): sigma_p(self.r, p) * (-1) ** p for p in range(self.r + 1)}
        return substitute(self.poly, vals)

    def evaluate(self, values: Mapping[int, object]) -> Poly:
        """Substitute ``s_p -> values[p]`` (``s_0 -> 1`` unless given)."""
        bindings = {svar(0): Poly.const(1)}
        bindings.update({svar(p): v for p, v in values.items()})
        return substitute(self.poly, bindings)

    def __str__(self) -> str:
        return format_poly(self.poly, e_name if self.basis == "e" else var_name)


def _flip_signs(poly: Poly, r: int) -> Poly:
    return substitute(poly, {svar(p): Poly.s(p) * (-1) ** p for p in range(1, r + 1)})


def to_conventional_e(expr: SigmaExpr) -> SigmaExpr:
    """Rewrite via ``s_p -> (-1)^p e_p``."""
    if expr.basis == "e":
        return expr
    return SigmaExpr(_flip_signs(expr.poly, expr.r), expr.r, expr.delta, "e")


def to_sigma(expr: SigmaExpr) -> SigmaExpr:
    """Inverse of ``to_conventional_e``."""
    if expr.basis == "sigma":
        return expr
    return SigmaExpr(_flip_signs(expr.poly, expr.r), expr.r, expr.delta, "sigma")


def max_x_index(p: Poly) -> int:
    """Largest i with x_i occurring in ``p`` (0 if none)."""
    return max((v for v in p.variables() if is_xi(v)), default=0)


__all__ = [
    "AlternantExpansion",
    "DecreasingExponents",
    "Permutation",
    "SigmaExpr",
    "act",
    "alternant_coords",
    "alternant_expand",
    "atr",
    "chi_from_positions",
    "is_antisymmetric",
    "is_symmetric",
    "max_x_index",
    "monomial_alternant",
    "sgn_chi",
    "sigma_p",
    "sigma_poly",
    "sigma_values",
    "to_conventional_e",
    "to_sigma",
    "vandermonde",
]
