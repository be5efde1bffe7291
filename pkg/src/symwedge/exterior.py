"""The r-th exterior power of Q[x] truncated at degree d, stored in the basis
of wedges ``x^mu_1 ^ ... ^ x^mu_r`` with ``d >= mu_1 > ... > mu_r >= 0``.

Antisymmetrization identifies a wedge element with an antisymmetric
polynomial in x1..xr; symmetric polynomials act on wedges through it, and
every wedge is a unique symmetric multiple of ``x^(r-1) ^ ... ^ x^0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .det import HCoeffs, MonomialUnit, SigmaShift, build_matrix, formal_sigma, s0_to_one, wedge_row_det
from .errors import ArityError, DegreeExceeded, NotSymmetric
from .fundamental import express_in_elementary, symmetric_degree
from .ring import Poly, X, Y, exact_divide, per_var_degree, rename
from .sym import (
    SigmaExpr,
    alternant_coords,
    alternant_expand,
    is_symmetric,
    monomial_alternant,
    vandermonde,
)


def _check_key(key: tuple, r: int, d: int) -> None:
    if len(key) != r:
        raise ArityError(f"basis label {key} does not have {r} entries")
    if any(key[i] <= key[i + 1] for i in range(r - 1)) or (key and key[-1] < 0):
        raise ValueError(f"basis label {key} is not strictly decreasing")
    if key and key[0] > d:
        raise DegreeExceeded(f"basis label {key} exceeds the bound {d}")


@dataclass(frozen=True)
class WedgeElement:
    r: int
    d: int
    coords: Mapping[tuple, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.r < 1:
            raise ArityError(f"arity must be >= 1, got {self.r}")
        clean = {}
        for key, c in self.coords.items():
            key = tuple(key)
            _check_key(key, self.r, self.d)
            c = Fraction(c)
            if c:
                clean[key] = c
        object.__setattr__(self, "coords", clean)

    @classmethod
    def basis(cls, r: int, d: int | None = None, key: tuple | None = None) -> "WedgeElement":
        """A single basis wedge, by default ``x^(r-1) ^ ... ^ x^0``."""
        key = tuple(range(r - 1, -1, -1)) if key is None else tuple(key)
        return cls(r, r - 1 if d is None else d, {key: 1})

    def is_zero(self) -> bool:
        return not self.coords

    def widen(self, d: int) -> "WedgeElement":
        return WedgeElement(self.r, d, self.coords)

    def __add__(self, other: "WedgeElement") -> "WedgeElement":
        if self.r != other.r:
            raise ArityError("cannot add wedges of different arity")
        out = dict(self.coords)
        for k, c in other.coords.items():
            out[k] = out.get(k, 0) + c
        return WedgeElement(self.r, max(self.d, other.d), out)

    def scale(self, c) -> "WedgeElement":
        return WedgeElement(self.r, self.d, {k: v * c for k, v in self.coords.items()})

    def __neg__(self) -> "WedgeElement":
        return self.scale(-1)

    def __sub__(self, other: "WedgeElement") -> "WedgeElement":
        return self + (-other)

    def __str__(self) -> str:
        if not self.coords:
            return "0"
        parts = []
        for key in sorted(self.coords, reverse=True):
            wedge = "^".join(f"x^{e}" for e in key)
            parts.append(f"{self.coords[key]}*({wedge})")
        return " + ".join(parts)


def wedge_of(h: Sequence[Poly], d: int) -> WedgeElement:
    """``h_1 ^ ... ^ h_r`` for polynomials in ``x`` of degree at most ``d``."""
    r = len(h)
    for j, hj in enumerate(h, start=1):
        if per_var_degree(hj, X) > d:
            raise DegreeExceeded(f"h{j} has degree {per_var_degree(hj, X)} > {d}")
    coords = {}
    for key, c in alternant_coords(h).items():
        if not c.is_constant():
            raise ValueError("wedge coordinates must be rational; h has non-constant coefficients")
        coords[key] = c.constant_value()
    return WedgeElement(r, d, coords)


def atr_embed(w: WedgeElement) -> Poly:
    """The antisymmetric polynomial ``sum(c_mu * det|x_i^mu_j|)``."""
    out = Poly()
    for key, c in w.coords.items():
        out = out + monomial_alternant(key) * c
    return out


def from_antisym(a: Poly, r: int, d: int) -> WedgeElement:
    """Inverse of ``atr_embed`` on antisymmetric polynomials of per-variable degree <= d."""
    return WedgeElement(r, d, alternant_expand(a, r, d))


def ts_action(S: Poly, w: WedgeElement, delta: int | None = None) -> WedgeElement:
    """Multiply a wedge by a symmetric polynomial; the bound grows by ``delta``."""
    if not is_symmetric(S, w.r):
        raise NotSymmetric(f"polynomial is not symmetric in x1..x{w.r}")
    least = symmetric_degree(S, w.r)
    if delta is None:
        delta = least
    elif delta < least:
        raise DegreeExceeded(f"delta {delta} is below the degree {least} of the multiplier")
    return from_antisym(S * atr_embed(w), w.r, w.d + delta)


def decompose_rank1(w: WedgeElement) -> tuple[Poly, SigmaExpr]:
    """The unique symmetric S with ``w == S . (x^(r-1) ^ ... ^ x^0)``, and S in sigma."""
    S = exact_divide(atr_embed(w), vandermonde(w.r))
    delta = max(w.d - (w.r - 1), 0)
    return S, express_in_elementary(S, w.r, delta)


@dataclass(frozen=True)
class WedgeExpansion:
    """``sum(coeffs[mu] * x^mu_1 ^ ... ^ x^mu_r)`` with sigma-expression coefficients."""

    r: int
    d: int
    delta: int
    coeffs: Mapping[tuple, SigmaExpr]

    def resum(self) -> WedgeElement:
        """Substitute sigma values and collect, landing in bound ``d + delta``."""
        total = WedgeElement(self.r, self.d + self.delta)
        for key, expr in self.coeffs.items():
            total = total + ts_action(expr.substitute(), WedgeElement.basis(self.r, self.d, key), self.delta)
        return total


def expansion_layout(h: Sequence[Poly], d: int, delta_low: int, delta_high: int) -> tuple:
    """Columns and wedge row of the expansion matrix.

    Returns ``(specs, wedge_exponents)`` where ``wedge_exponents[j]`` is the
    exponent of ``x`` under column ``j`` or None for an empty slot.
    """
    r = len(h)
    specs = [SigmaShift(d - r + 1 + delta_low + k) for k in range(delta_high - 1, -1, -1)]
    wedge = [None] * delta_high
    for k in range(d + 1):
        specs.append(MonomialUnit(delta_low + d - k))
        wedge.append(d - k)
    specs += [SigmaShift(k) for k in range(delta_low - 1, -1, -1)]
    wedge += [None] * delta_low
    specs += [HCoeffs(rename(hj, {X: Y})) for hj in h]
    wedge += [None] * r
    return specs, wedge


def expand_wedge(h: Sequence[Poly], d: int, delta_low: int, delta_high: int) -> WedgeExpansion:
    """Expand ``h_1 ^ ... ^ h_r`` (degrees <= d + delta) over the bound-d basis.

    ``delta = delta_low + delta_high``. The matrix has ``delta_high``
    sigma-columns of high shift, ``d+1`` unit columns carrying the wedge row
    ``x^d .. x^0``, ``delta_low`` sigma-columns of low shift and the ``h``
    columns. Each coefficient is a determinant with ``delta`` sigma-columns,
    so it has degree at most ``delta`` in the s-variables.
    """
    r = len(h)
    if r < 1:
        raise ArityError("need at least one polynomial")
    if d < r - 1:
        raise DegreeExceeded(f"bound d={d} is below r-1={r - 1}")
    if delta_low < 0 or delta_high < 0:
        raise DegreeExceeded("delta parts must be >= 0")
    delta = delta_low + delta_high
    D = d + delta
    for j, hj in enumerate(h, start=1):
        if per_var_degree(hj, X) > D:
            raise DegreeExceeded(f"h{j} has degree {per_var_degree(hj, X)} > {D}")
    specs, wedge = expansion_layout(h, d, delta_low, delta_high)
    m = build_matrix(D, specs, formal_sigma(r))
    entries = [Poly() if e is None else Poly.x() ** e for e in wedge]
    prefactor = (-1) ** (r * delta_low + r)
    coeffs = {}
    for chosen, c in wedge_row_det(m, entries, r).items():
        key = tuple(wedge[j] for j in chosen)
        poly = s0_to_one(c) * prefactor
        if poly:
            coeffs[key] = SigmaExpr(poly, r, delta)
    return WedgeExpansion(r, d, delta, coeffs)
