"""Generators and independent reference implementations used only by the tests."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations

from hypothesis import strategies as st

from symwedge.ring import Poly, svar, xvar


def poly_from_terms(terms, variables) -> Poly:
    out = {}
    for exps, c in terms.items():
        m = tuple((v, e) for v, e in zip(variables, exps) if e)
        out[m] = out.get(m, 0) + c
    return Poly(out)


def polys(r: int = 4, max_deg: int = 6, max_terms: int = 6, extra_vars=()):
    """Hypothesis strategy for polynomials in x1..xr (plus optional extra variables)."""
    variables = [xvar(i) for i in range(1, r + 1)] + list(extra_vars)
    exps = st.tuples(*[st.integers(0, max_deg) for _ in variables])
    return st.dictionaries(exps, st.integers(-9, 9), max_size=max_terms).map(
        lambda t: poly_from_terms(t, variables)
    )


def univariate(rng: random.Random, deg: int, lo: int = -5, hi: int = 5) -> Poly:
    out = Poly()
    for k in range(deg + 1):
        out = out + Poly.x() ** k * rng.randint(lo, hi)
    return out


def random_poly(rng: random.Random, variables, max_deg: int, nterms: int, lo: int = -5, hi: int = 5) -> Poly:
    terms = {}
    for _ in range(nterms):
        exps = tuple(rng.randint(0, max_deg) for _ in variables)
        terms[exps] = rng.randint(lo, hi)
    return poly_from_terms(terms, variables)


def random_sigma_poly(rng: random.Random, r: int, delta: int, nterms: int = 5) -> Poly:
    """Random polynomial in s1..sr of total degree <= delta."""
    out = Poly()
    for _ in range(nterms):
        deg = rng.randint(0, delta)
        m = Poly.const(rng.randint(-5, 5))
        for _ in range(deg):
            m = m * Poly.s(rng.randint(1, r))
        out = out + m
    return out


def elementary(r: int, p: int) -> Poly:
    """Conventional e_p(x1..xr) as a sum over p-subsets."""
    out = Poly()
    for subset in combinations(range(1, r + 1), p):
        m = Poly.const(1)
        for i in subset:
            m = m * Poly.x(i)
        out = out + m
    return out


def classical_fundamental(S: Poly, r: int) -> Poly:
    """Leading-term subtraction in lex order x1 > ... > xr.

    Returns a polynomial in s1..sr where s_p stands for the conventional e_p.
    """
    e = [None] + [elementary(r, p) for p in range(1, r + 1)]
    rest = S
    out = Poly()
    guard = 0
    while rest:
        guard += 1
        assert guard < 10_000
        def vec(m):
            d = dict(m)
            return tuple(d.get(xvar(i), 0) for i in range(1, r + 1))
        m = max(rest.terms, key=vec)
        a = vec(m) + (0,)
        c = rest.terms[m]
        assert all(a[i] >= a[i + 1] for i in range(r)), "leading exponent not partition-shaped"
        term_e = Poly.const(c)
        term_s = Poly.const(c)
        for p in range(1, r + 1):
            k = a[p - 1] - a[p]
            term_e = term_e * e[p] ** k
            term_s = term_s * Poly.s(p) ** k
        rest = rest - term_e
        out = out + term_s
    return out


def leibniz_det(rows) -> Poly:
    n = len(rows)
    out = Poly()
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Poly.const(-1 if inv % 2 else 1)
        for i in range(n):
            term = term * rows[i][perm[i]]
        out = out + term
    return out


def numeric_divided_difference(F, nodes):
    """Classical divided-difference table over rationals."""
    coeffs = F
    def val(t):
        return sum(c * Fraction(t) ** k for k, c in enumerate(coeffs))
    table = [val(t) for t in nodes]
    n = len(nodes)
    for level in range(1, n):
        table = [
            (table[i + 1] - table[i]) / (Fraction(nodes[i + level]) - Fraction(nodes[i]))
            for i in range(n - level)
        ]
    return table[0]


def sigma_bindings_e(r: int) -> dict:
    return {svar(p): elementary(r, p) for p in range(1, r + 1)}
