"""Exact sparse multivariate polynomials over the rationals.

A polynomial is a mapping from monomials to nonzero ``Fraction`` coefficients.
A monomial is a tuple of ``(var, exponent)`` pairs sorted by variable code,
with no zero exponents, so ``x1^2*y`` is ``((1, 2), (Y, 1))``.

Variables are small integer codes, ordered as

    x < x1 < x2 < ... < y < s0 < s1 < ...

where the bare ``x`` is the variable of univariate inputs (h-tuples,
divided-difference arguments), ``x1..xr`` are the symmetric-function
variables, ``y`` is the coefficient-extraction variable and ``s0..sr`` are
formal stand-ins for the coefficients of ``prod(y - x_i)``.

Terms print in graded-lexicographic order, the earliest variable being the
most significant.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Tuple, Union

from .errors import ExponentOverflow, NotDivisible, ParseError, UnknownVariable

Var = int
Monomial = Tuple[Tuple[Var, int], ...]
Coefficient = Union[int, Fraction]

MAX_EXPONENT = 2**31 - 1
MAX_X_INDEX = (1 << 20) - 1

X = 0  # bare univariate x
Y = 1 << 20
_S_BASE = Y + 1


def xvar(i: int) -> Var:
    if not 1 <= i <= MAX_X_INDEX:
        raise ValueError(f"x-variable index must be in [1, {MAX_X_INDEX}], got {i}")
    return i


def svar(p: int) -> Var:
    if p < 0:
        raise ValueError(f"s-variable index must be >= 0, got {p}")
    return _S_BASE + p


def is_xi(v: Var) -> bool:
    return 1 <= v <= MAX_X_INDEX


def is_s(v: Var) -> bool:
    return v >= _S_BASE


def x_index(v: Var) -> int:
    return v


def s_index(v: Var) -> int:
    return v - _S_BASE


def var_name(v: Var) -> str:
    if v == X:
        return "x"
    if v == Y:
        return "y"
    if is_s(v):
        return f"s{s_index(v)}"
    return f"x{v}"


def _check_exp(e: int) -> int:
    if e > MAX_EXPONENT:
        raise ExponentOverflow(f"exponent {e} exceeds {MAX_EXPONENT}")
    return e


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, _check_exp(ea + eb)))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_div(a: Monomial, b: Monomial) -> Monomial | None:
    """Return ``a / b`` when ``b`` divides ``a``, else None."""
    da = dict(a)
    for v, e in b:
        have = da.get(v, 0)
        if have < e:
            return None
        if have == e:
            del da[v]
        else:
            da[v] = have - e
    return tuple(sorted(da.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def order_key(m: Monomial):
    """Sort key realising graded-lex order: a larger key is a larger monomial."""
    return (mono_degree(m), tuple((-v, e) for v, e in m))


class Poly:
    """Immutable polynomial with exact rational coefficients.

    Supports ``+ - * **`` with other polynomials and with ``int``/``Fraction``
    scalars. Equality against scalars compares with the constant polynomial.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Coefficient] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = Fraction(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> "Poly":
        # caller guarantees: Fraction values, no zeros, canonical monomials
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Coefficient) -> "Poly":
        return cls._wrap({(): Fraction(c)} if c else {})

    @classmethod
    def var(cls, v: Var, exp: int = 1) -> "Poly":
        if exp == 0:
            return cls.const(1)
        return cls._wrap({((v, _check_exp(exp)),): Fraction(1)})

    @classmethod
    def x(cls, i: int | None = None) -> "Poly":
        """``x`` when called bare, ``x_i`` otherwise."""
        return cls.var(X if i is None else xvar(i))

    @classmethod
    def y(cls) -> "Poly":
        return cls.var(Y)

    @classmethod
    def s(cls, p: int) -> "Poly":
        return cls.var(svar(p))

    @classmethod
    def monomial(cls, m: Iterable[tuple[Var, int]], c: Coefficient = 1) -> "Poly":
        exps: dict[Var, int] = {}
        for v, e in m:
            exps[v] = exps.get(v, 0) + e
        key = tuple(sorted((v, _check_exp(e)) for v, e in exps.items() if e))
        return cls._wrap({key: Fraction(c)} if c else {})

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_value(self) -> Fraction:
        """Coefficient of the empty monomial."""
        return self._terms.get((), Fraction(0))

    def variables(self) -> set[Var]:
        return {v for m in self._terms for v, _ in m}

    def degree(self, v: Var) -> int:
        return per_var_degree(self, v)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(mono_degree(m) for m in self._terms)

    # arithmetic

    @staticmethod
    def _coerce(other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return None

    def __add__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        if not q._terms:
            return self
        if not self._terms:
            return q
        out = dict(self._terms)
        for m, c in q._terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v += c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Poly._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly()
            return Poly._wrap({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return Poly()
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = mono_mul(ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return Poly._wrap({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a natural exponent")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c: Coefficient) -> "Poly":
        return self * Fraction(c)

    def __eq__(self, other) -> bool:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self._terms == q._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in canonical (descending graded-lex) order."""
        return sorted(self._terms.items(), key=lambda t: order_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[Monomial, Fraction]:
        m = max(self._terms, key=order_key)
        return m, self._terms[m]


# printing


def _format_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_monomial(m: Monomial, name=var_name) -> str:
    return "*".join(name(v) if e == 1 else f"{name(v)}^{e}" for v, e in m)


def format_poly(p: Poly, name=var_name) -> str:
    """Canonical text form; re-parses to an equal polynomial."""
    if not p:
        return "0"
    parts = []
    for i, (m, c) in enumerate(p.sorted_terms()):
        a = abs(c)
        if not m:
            body = _format_coeff(a)
        elif a == 1:
            body = format_monomial(m, name)
        else:
            body = f"{_format_coeff(a)}*{format_monomial(m, name)}"
        if i == 0:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(parts)


# parsing


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str, pos: int | None = None, cls=ParseError):
        at = self.pos if pos is None else pos
        raise cls(msg, len(self.text[:at].encode("utf-8")))

    def skip(self):
        t = self.text
        while self.pos < len(t) and t[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def nat(self) -> tuple[int, int]:
        self.skip()
        start = self.pos
        t = self.text
        while self.pos < len(t) and "0" <= t[self.pos] <= "9":
            self.pos += 1
        if start == self.pos:
            self.error("expected a natural number")
        return int(t[start:self.pos]), start

    def adjacent_digits(self) -> str:
        start = self.pos
        t = self.text
        while self.pos < len(t) and "0" <= t[self.pos] <= "9":
            self.pos += 1
        return t[start:self.pos]

    def variable(self) -> Var:
        self.skip()
        start = self.pos
        ch = self.peek()
        if ch == "y":
            self.pos += 1
            if self.adjacent_digits():
                self.error(f"unknown variable {self.text[start:self.pos]!r}", start, UnknownVariable)
            return Y
        if ch in ("x", "s"):
            self.pos += 1
            digits = self.adjacent_digits()
            if ch == "x":
                if not digits:
                    return X
                i = int(digits)
                if not 1 <= i <= MAX_X_INDEX:
                    self.error(f"unknown variable {self.text[start:self.pos]!r}", start, UnknownVariable)
                return xvar(i)
            if not digits:
                self.error("unknown variable 's'", start, UnknownVariable)
            return svar(int(digits))
        if ch.isalpha() or ch == "_":
            while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
                self.pos += 1
            self.error(f"unknown variable {self.text[start:self.pos]!r}", start, UnknownVariable)
        self.error("expected a variable" if ch else "unexpected end of input")

    def factor(self) -> tuple[Var, int]:
        v = self.variable()
        if self.peek() == "^":
            self.pos += 1
            e, at = self.nat()
            if e > MAX_EXPONENT:
                raise ExponentOverflow(
                    f"exponent {e} exceeds {MAX_EXPONENT} at offset {len(self.text[:at].encode('utf-8'))}"
                )
            return v, e
        return v, 1

    def factors(self) -> list[tuple[Var, int]]:
        out = [self.factor()]
        while self.peek() == "*":
            self.pos += 1
            out.append(self.factor())
        return out

    def term(self) -> Poly:
        ch = self.peek()
        if ch.isdigit():
            num, _ = self.nat()
            coeff = Fraction(num)
            if self.peek() == "/":
                self.pos += 1
                den, at = self.nat()
                if den == 0:
                    self.error("zero denominator", at)
                coeff = Fraction(num, den)
            if self.peek() == "*":
                self.pos += 1
                return Poly.monomial(self.factors(), coeff)
            return Poly.const(coeff)
        return Poly.monomial(self.factors())

    def poly(self) -> Poly:
        terms: dict = {}

        def accumulate(t: Poly, sign: int):
            for m, c in t.terms.items():
                terms[m] = terms.get(m, 0) + sign * c

        sign = 1
        if self.peek() == "-":
            self.pos += 1
            sign = -1
        accumulate(self.term(), sign)
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                accumulate(self.term(), 1)
            elif ch == "-":
                self.pos += 1
                accumulate(self.term(), -1)
            elif ch == "":
                break
            else:
                self.error(f"unexpected character {ch!r}")
        return Poly(terms)


def parse(text: str) -> Poly:
    """Parse polynomial text such as ``"3/2*x1*y - y"``.

    Raises ParseError (with a byte ``offset``), UnknownVariable or
    ExponentOverflow.
    """
    return _Parser(text).poly()


# ring operations


def per_var_degree(p: Poly, v: Var) -> int:
    """Largest exponent of ``v`` in ``p``; -1 for the zero polynomial."""
    if not p:
        return -1
    best = 0
    for m in p.terms:
        for w, e in m:
            if w == v:
                if e > best:
                    best = e
                break
    return best


def coefficients(p: Poly, v: Var) -> dict[int, Poly]:
    """Split ``p`` as ``sum(c_k * v^k)``; returns ``{k: c_k}`` without zero entries."""
    parts: dict[int, dict] = {}
    for m, c in p.terms.items():
        k = 0
        rest = m
        for idx, (w, e) in enumerate(m):
            if w == v:
                k = e
                rest = m[:idx] + m[idx + 1:]
                break
        parts.setdefault(k, {})[rest] = c
    return {k: Poly._wrap(t) for k, t in parts.items()}


def coeff_of(p: Poly, v: Var, k: int) -> Poly:
    out = {}
    for m, c in p.terms.items():
        e = 0
        rest = m
        for idx, (w, ew) in enumerate(m):
            if w == v:
                e = ew
                rest = m[:idx] + m[idx + 1:]
                break
        if e == k:
            out[rest] = c
    return Poly._wrap(out)


def coeff_of_y(p: Poly, alpha: int) -> Poly:
    """The polynomial multiplying ``y^alpha`` in ``p``."""
    return coeff_of(p, Y, alpha)


def substitute(p: Poly, bindings: Mapping[Var, Poly | Coefficient]) -> Poly:
    """Apply the algebra homomorphism ``v -> bindings[v]``; unbound variables are kept."""
    if not bindings or not p:
        return p
    images = {v: (b if isinstance(b, Poly) else Poly.const(b)) for v, b in bindings.items()}
    powers: dict[tuple[Var, int], Poly] = {}

    def power(v: Var, e: int) -> Poly:
        key = (v, e)
        got = powers.get(key)
        if got is None:
            got = images[v] ** e
            powers[key] = got
        return got

    acc: dict = {}
    for m, c in p.terms.items():
        kept = []
        value = None
        for v, e in m:
            if v in images:
                pw = power(v, e)
                value = pw if value is None else value * pw
            else:
                kept.append((v, e))
        kept_m = tuple(kept)
        if value is None:
            acc[kept_m] = acc.get(kept_m, 0) + c
            continue
        for mv, cv in value.terms.items():
            mm = mono_mul(kept_m, mv)
            acc[mm] = acc.get(mm, 0) + c * cv
    return Poly._wrap({m: c for m, c in acc.items() if c})


def rename(p: Poly, mapping: Mapping[Var, Var]) -> Poly:
    """Relabel variables; cheaper than ``substitute`` for variable-to-variable maps."""
    out: dict = {}
    for m, c in p.terms.items():
        mm = Poly.monomial(((mapping.get(v, v), e) for v, e in m)).terms
        (key,) = mm
        out[key] = out.get(key, 0) + c
    return Poly(out)


def _descending_key(m: Monomial):
    # smallest key <-> largest monomial, for use with heapq
    return (-mono_degree(m), tuple((v, -e) for v, e in m))


def exact_divide(p: Poly, q: Poly) -> Poly:
    """Return ``t`` with ``t * q == p``; raise NotDivisible when no such ``t`` exists."""
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p:
        return Poly()
    lm_q, lc_q = q.leading_term()
    q_terms = list(q.terms.items())
    rem = dict(p.terms)
    heap = [(_descending_key(m), m) for m in rem]
    heapq.heapify(heap)
    queued = set(rem)
    quot: dict = {}
    while rem:
        _, m = heapq.heappop(heap)
        queued.discard(m)
        if m not in rem:
            continue
        t = mono_div(m, lm_q)
        if t is None:
            raise NotDivisible(f"{format_poly(q)} does not divide {format_poly(p)}")
        c = rem[m] / lc_q
        quot[t] = c
        for mq, cq in q_terms:
            mm = mono_mul(t, mq)
            v = rem.get(mm, 0) - c * cq
            if v:
                rem[mm] = v
                if mm not in queued:
                    queued.add(mm)
                    heapq.heappush(heap, (_descending_key(mm), mm))
            else:
                rem.pop(mm, None)
    return Poly._wrap(quot)


def univariate_coeffs(p: Poly, v: Var) -> list[Fraction]:
    """Dense coefficient list ``[c_0, c_1, ...]`` of a polynomial in the single variable ``v``."""
    others = p.variables() - {v}
    if others:
        raise ValueError(
            f"expected a polynomial in {var_name(v)} only, found {', '.join(sorted(map(var_name, others)))}"
        )
    deg = per_var_degree(p, v)
    out = [Fraction(0)] * (deg + 1)
    for m, c in p.terms.items():
        out[m[0][1] if m else 0] = c
    return out
