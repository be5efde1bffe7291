"""Acceptance criteria 1-9. Every comparison is exact.

Run with ``pytest tests/test_acceptance.py -s`` or directly as a script; each
criterion prints one ``[PASS]`` or ``[FAIL]`` line with its runtime.
"""

import random
import sys
import time
from itertools import combinations
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import classical_fundamental, random_sigma_poly, univariate  # noqa: E402

from symwedge.det import (  # noqa: E402
    MonomialUnit,
    PolyMatrix,
    SigmaShift,
    build_matrix,
    det,
    formal_sigma,
    s0_to_one,
    wedge_row_det,
)
from symwedge.divdiff import divdiff_alternant, divdiff_determinant, divdiff_recursive, two_point  # noqa: E402
from symwedge.exterior import (  # noqa: E402
    WedgeElement,
    decompose_rank1,
    expand_wedge,
    ts_action,
    wedge_of,
)
from symwedge.fundamental import bialternant_to_sigma, express_in_elementary, norm_resultant, verify_bialternant  # noqa: E402
from symwedge.ring import X, Poly, rename, substitute, xvar  # noqa: E402
from symwedge.sym import sigma_values, to_conventional_e, vandermonde  # noqa: E402

x = Poly.x()
s = [Poly.s(p) for p in range(5)]
Z = Poly()


def _report(number, title, check, limit):
    start = time.perf_counter()
    try:
        detail = check()
        ok, note = True, detail or ""
    except AssertionError as exc:
        ok, note = False, str(exc) or "assertion failed"
    elapsed = time.perf_counter() - start
    if ok and elapsed >= limit:
        ok, note = False, f"over the {limit}s budget"
    line = f"[{'PASS' if ok else 'FAIL'}] {number}. {title} ({elapsed:.2f}s{', ' + note if note else ''})"
    return ok, line


@pytest.fixture
def report(capsys):
    def _run(number, title, check, limit):
        ok, line = _report(number, title, check, limit)
        with capsys.disabled():
            print("\n" + line)
        assert ok, line
    return _run


def _sigma_corpus(seed, n):
    rng = random.Random(seed)
    corpus = []
    for _ in range(n):
        r, delta = rng.randint(1, 4), rng.randint(0, 3)
        P = random_sigma_poly(rng, r, delta, rng.randint(1, 6))
        corpus.append((r, delta, substitute(P, sigma_values(r))))
    return corpus


def vandermonde_identity():
    for r in range(1, 6):
        rows = [[Poly.x(i) ** (r - 1 - j) for j in range(r)] for i in range(1, r + 1)]
        product = Poly.const(1)
        for i, k in combinations(range(1, r + 1), 2):
            product = product * (Poly.x(i) - Poly.x(k))
        assert det(PolyMatrix.from_rows(rows)) == product, f"r={r}"
        assert vandermonde(r) == product, f"r={r}"
    return "r=1..5"


def bialternant_identity():
    rng = random.Random(2)
    for n in range(200):
        r, delta = rng.randint(1, 4), rng.randint(0, 3)
        h = [univariate(rng, r - 1 + delta) for _ in range(r)]
        assert verify_bialternant(h, bialternant_to_sigma(h, r, delta)), f"case {n}"
    return "200 tuples"


def express_round_trip():
    for n, (r, delta, S) in enumerate(_sigma_corpus(3, 200)):
        expr = express_in_elementary(S, r, delta)
        assert expr.substitute() == S, f"case {n}"
        assert expr.degree() <= delta, f"case {n}: degree {expr.degree()} > {delta}"
    return "200 polynomials"


def classical_oracle():
    for n, (r, delta, S) in enumerate(_sigma_corpus(3, 200)):
        got = to_conventional_e(express_in_elementary(S, r, delta)).poly
        assert got == classical_fundamental(S, r), f"case {n}"
    return "200 polynomials"


def _reduced_divdiff(d, r, F):
    table = {
        (2, 3): [[F[2]]],
        (3, 3): [[s[0], F[3]], [s[1], F[2]]],
        (3, 4): [[F[3]]],
        (4, 4): [[s[0], F[4]], [s[1], F[3]]],
        (5, 4): [[s[0], Z, F[5]], [s[1], s[0], F[4]], [s[2], s[1], F[3]]],
        (1, 2): [[F[1]]],
        (2, 2): [[s[0], F[2]], [s[1], F[1]]],
        (0, 1): [[F[0]]],
        (1, 1): [[s[0], F[1]], [s[1], F[0]]],
    }
    return table[(d, r)]


def golden_vectors():
    banded = build_matrix(4, [SigmaShift(1), SigmaShift(0)], formal_sigma(3))
    assert banded == PolyMatrix.from_rows([[s[0], 0], [s[1], s[0]], [s[2], s[1]], [s[3], s[2]], [0, s[3]]])
    units = build_matrix(4, [MonomialUnit(3), MonomialUnit(2), MonomialUnit(1)])
    assert units == PolyMatrix.from_rows([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 0]])

    FC = [Poly.x(10 + k) for k in range(6)]
    for d, r in [(2, 3), (3, 3), (3, 4), (4, 4), (5, 4), (1, 2), (2, 2), (0, 1), (1, 1)]:
        F = sum((FC[k] * x ** k for k in range(d + 1)), Poly())
        dd = divdiff_determinant(F, r, d)
        hand = s0_to_one(det(PolyMatrix.from_rows(_reduced_divdiff(d, r, FC))))
        assert dd.expr.poly == hand, f"divided difference d={d} r={r}"
        if r == 1:
            assert dd.value == rename(F, {X: xvar(1)}), f"d={d} r=1 is not F(x1)"

    h = [Poly.x(1), Poly.x(2), Poly.x(3)]
    a = PolyMatrix.from_rows([[Poly.x(10 + 3 * i + j) for j in range(3)] for i in range(3)])
    assert wedge_row_det(None, h) == {(0, 1, 2): 1}
    assert wedge_row_det(a, h, 0) == {(): det(a)}
    four = PolyMatrix.from_rows([[Poly.x(20 + 3 * i + j) for j in range(3)] for i in range(4)])
    assert wedge_row_det(four, h) == {}
    return "banded, unit block, 9 closed forms, wedge-row q=0,p,>p"


def divided_differences():
    rng = random.Random(6)
    cases = 0
    for _ in range(60):
        r, deg = rng.randint(1, 4), rng.randint(0, 6)
        F = univariate(rng, deg)
        rec = divdiff_recursive(F, r).value
        assert divdiff_alternant(F, r).value == rec
        for d in range(max(deg, r - 1), max(deg, r - 1) + 3):
            assert divdiff_determinant(F, r, d).value == rec, f"r={r} d={d}"
            cases += 1
    x1, x2, x3 = xvar(1), xvar(2), xvar(3)
    for _ in range(50):
        F = univariate(rng, rng.randint(0, 6))
        left = two_point(two_point(F, X, x3), x1, x2)
        right = two_point(two_point(F, x1, X), x2, x3)
        assert left == right, "coassociativity"
    return f"{cases} determinant cases, 50 coassociativity checks"


def resultants():
    rng = random.Random(7)
    for n in range(50):
        roots = [rng.randint(-3, 3) for _ in range(rng.randint(1, 4))]
        f = Poly.const(1)
        for lam in roots:
            f = f * (x - lam)
        F = univariate(rng, rng.randint(0, 3))
        expected = 1
        for lam in roots:
            expected *= substitute(F, {X: Poly.const(lam)}).constant_value()
        assert norm_resultant(f, F) == expected, f"case {n}"
    return "50 pairs"


def rank_one_freeness():
    rng = random.Random(8)
    for n in range(100):
        r, delta = rng.randint(1, 3), rng.randint(0, 3)
        S = substitute(random_sigma_poly(rng, r, delta), sigma_values(r))
        w = ts_action(S, WedgeElement.basis(r), delta)
        assert decompose_rank1(w)[0] == S, f"case {n}"
    seen = {}
    for _ in range(60):
        r, d = rng.randint(1, 3), rng.randint(2, 4)
        d = max(d, r - 1)
        w = wedge_of([univariate(rng, d, -2, 2) for _ in range(r)], d)
        key = (r, tuple(sorted(w.coords.items())))
        S = decompose_rank1(w)[0]
        for other_key, other_S in seen.items():
            if other_key[0] == r and other_key != key:
                assert other_S != S, "two wedges share a quotient"
        seen[key] = S
    return f"100 multiples, {len(seen)} distinct wedges"


def _hand_minor(unit_row, h):
    high1 = [s[0], s[1], s[2], s[3], Z, Z, Z]
    high2 = [Z, s[0], s[1], s[2], s[3], Z, Z]
    unit = [Poly.const(1) if i == unit_row else Z for i in range(7)]
    low = [Z, Z, Z, s[0], s[1], s[2], s[3]]
    hcols = [[h[i][6 - k] for k in range(7)] for i in range(3)]
    return PolyMatrix.from_columns([high1, high2, unit, low] + hcols)


def wedge_expansion():
    coeffs = [[Poly.x(10 * (i + 1) + k) for k in range(7)] for i in range(3)]
    h = [sum((c * x ** k for k, c in enumerate(row)), Poly()) for row in coeffs]
    expansion = expand_wedge(h, 3, 1, 2)
    golden = {(2, 1, 0): (2, 1), (3, 1, 0): (3, -1), (3, 2, 0): (4, 1), (3, 2, 1): (5, -1)}
    assert set(expansion.coeffs) == set(golden)
    for key, (row, sign) in golden.items():
        assert expansion.coeffs[key].poly == s0_to_one(det(_hand_minor(row, coeffs))) * sign, f"golden {key}"

    rng = random.Random(9)
    cases = 0
    for r in range(1, 4):
        for d in range(r - 1, 5):
            for delta in range(4):
                for low in range(delta + 1):
                    h = [univariate(rng, d + delta) for _ in range(r)]
                    got = expand_wedge(h, d, low, delta - low)
                    assert got.resum() == wedge_of(h, d + delta), f"r={r} d={d} split={low}+{delta - low}"
                    cases += 1
    return f"golden layout and {cases} expansions"


CRITERIA = [
    (1, "Vandermonde determinant equals the product of differences", vandermonde_identity, 1),
    (2, "alternant equals sigma expression times Vandermonde", bialternant_identity, 60),
    (3, "express then substitute reproduces the input", express_round_trip, 60),
    (4, "agreement with leading-term reduction", classical_oracle, 60),
    (5, "golden layouts and closed forms", golden_vectors, 60),
    (6, "divided differences agree three ways", divided_differences, 30),
    (7, "resultant equals the product of values at roots", resultants, 30),
    (8, "wedges form a free rank-one module", rank_one_freeness, 30),
    (9, "wedge expansion over the degree-d basis", wedge_expansion, 60),
]


@pytest.mark.parametrize("number, title, check, limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(report, number, title, check, limit):
    report(number, title, check, limit)


if __name__ == "__main__":
    results = [_report(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
