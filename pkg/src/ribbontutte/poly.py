"""Sparse multivariate Laurent polynomials with half-integer exponents.

Exponents are stored doubled (so ``x^(3/2)`` is kept as ``3``) and
coefficients are Python integers.  Values are immutable; every
operation returns a new :class:`HalfPoly` in canonical form, so two
equal polynomials always compare and hash equal.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = [
    "CATALOGUE",
    "HalfPoly",
    "PolyDomainError",
    "monomial",
    "parse_poly",
    "poly_sum",
    "var",
]

# Fixed variable catalogue; anything else sorts alphabetically afterwards.
CATALOGUE = (
    "w", "x", "y", "z", "a", "b",
    "alpha", "beta", "gamma",
    "a_bs", "a_bp", "a_olc", "a_olh",
    "b_bs", "b_bp", "b_olc", "b_olh",
)
_RANK = {name: i for i, name in enumerate(CATALOGUE)}


class PolyDomainError(ValueError):
    """An operation would leave the ring (quarter exponents, bad roots)."""


def _var_key(name: str):
    return (0, _RANK[name], "") if name in _RANK else (1, 0, name)


Scalar = Union[int, Fraction]


class HalfPoly:
    """Polynomial over the integers in variables with exponents in ``(1/2)Z``."""

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Iterable[str] = (), terms: Mapping | None = None):
        variables = tuple(variables)
        terms = dict(terms or {})
        for exps in terms:
            if len(exps) != len(variables):
                raise ValueError("exponent tuple does not match variable arity")
        # canonicalise: drop zero coefficients and unused variables, sort vars
        terms = {e: c for e, c in terms.items() if c}
        used = [i for i in range(len(variables)) if any(e[i] for e in terms)]
        used.sort(key=lambda i: _var_key(variables[i]))
        self.variables = tuple(variables[i] for i in used)
        self.terms = {tuple(e[i] for i in used): c for e, c in terms.items()}
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c: int) -> "HalfPoly":
        return cls((), {(): int(c)} if c else {})

    @classmethod
    def _coerce(cls, other) -> "HalfPoly":
        if isinstance(other, HalfPoly):
            return other
        if isinstance(other, int):
            return cls.const(other)
        if isinstance(other, Fraction) and other.denominator == 1:
            return cls.const(other.numerator)
        raise TypeError(f"cannot treat {other!r} as a HalfPoly")

    # -- basic queries -------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_term(self) -> int:
        return self.terms.get((0,) * len(self.variables), 0)

    def exponents(self) -> dict[tuple[Fraction, ...], int]:
        """Terms with real (undoubled) exponents, keyed in variable order."""
        return {
            tuple(Fraction(d, 2) for d in e): c for e, c in self.terms.items()
        }

    def degree_in(self, name: str) -> Fraction:
        if name not in self.variables:
            return Fraction(0)
        i = self.variables.index(name)
        return Fraction(max(e[i] for e in self.terms), 2)

    # -- alignment ------------------------------------------------------
    def _lift(self, variables: tuple[str, ...]) -> dict:
        pos = [variables.index(v) for v in self.variables]
        out = {}
        for e, c in self.terms.items():
            full = [0] * len(variables)
            for i, d in zip(pos, e):
                full[i] = d
            out[tuple(full)] = c
        return out

    @staticmethod
    def _union(*polys: "HalfPoly") -> tuple[str, ...]:
        names = set()
        for p in polys:
            names.update(p.variables)
        return tuple(sorted(names, key=_var_key))

    # -- ring operations -------------------------------------------------
    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        vs = self._union(self, other)
        out = self._lift(vs)
        for e, c in other._lift(vs).items():
            out[e] = out.get(e, 0) + c
        return HalfPoly(vs, out)

    __radd__ = __add__

    def __neg__(self):
        return HalfPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        vs = self._union(self, other)
        left, right = self._lift(vs), other._lift(vs)
        out: dict = {}
        for e1, c1 in left.items():
            for e2, c2 in right.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return HalfPoly(vs, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("only integer powers are supported; use sqrt()")
        if k < 0:
            return self._monomial_inverse() ** (-k)
        result = HalfPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other._monomial_inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self._monomial_inverse()

    def _monomial_inverse(self) -> "HalfPoly":
        if not self.is_monomial():
            raise PolyDomainError("only monomials can be inverted")
        (e, c), = self.terms.items()
        if c not in (1, -1):
            raise PolyDomainError("monomial coefficient must be a unit to invert")
        return HalfPoly(self.variables, {tuple(-d for d in e): c})

    def sqrt(self) -> "HalfPoly":
        """Exact square root of a monomial with square coefficient."""
        if self.is_zero():
            return self
        if not self.is_monomial():
            raise PolyDomainError("square roots are only taken of monomials")
        (e, c), = self.terms.items()
        if c < 0 or math.isqrt(c) ** 2 != c:
            raise PolyDomainError(f"coefficient {c} is not a perfect square")
        if any(d % 2 for d in e):
            raise PolyDomainError("square root would produce quarter exponents")
        return HalfPoly(self.variables, {tuple(d // 2 for d in e): math.isqrt(c)})

    # -- substitution and evaluation ---------------------------------------
    def substitute(self, bindings: Mapping[str, object]) -> "HalfPoly":
        """Simultaneously replace variables by polynomials (or integers)."""
        bound = {k: self._coerce(v) for k, v in bindings.items()}
        roots: dict[str, HalfPoly] = {}
        powers: dict[tuple[str, int], HalfPoly] = {}

        def power(name: str, d: int) -> HalfPoly:
            key = (name, d)
            if key not in powers:
                q = bound[name]
                if d % 2:
                    if name not in roots:
                        roots[name] = q.sqrt()
                    powers[key] = roots[name] ** d
                else:
                    powers[key] = q ** (d // 2)
            return powers[key]

        free = [v for v in self.variables if v not in bound]
        pieces = []
        for e, c in self.terms.items():
            term = HalfPoly.const(c)
            rest = {}
            for name, d in zip(self.variables, e):
                if not d:
                    continue
                if name in bound:
                    term = term * power(name, d)
                else:
                    rest[name] = d
            if rest:
                term = term * HalfPoly(free, {tuple(rest.get(v, 0) for v in free): 1})
            pieces.append(term)
        return poly_sum(pieces)

    def eval_rational(self, point: Mapping[str, Scalar]) -> Fraction:
        """Evaluate exactly at a rational point covering every variable."""
        missing = [v for v in self.variables if v not in point]
        if missing:
            raise KeyError(f"no value for {', '.join(missing)}")
        total = Fraction(0)
        for e, c in self.terms.items():
            val = Fraction(c)
            for name, d in zip(self.variables, e):
                if d:
                    val *= _half_power(Fraction(point[name]), d, name)
            total += val
        return total

    # -- comparison and display -----------------------------------------
    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"HalfPoly({str(self)!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            factors = [
                name + _exp_text(d) for name, d in zip(self.variables, e) if d
            ]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _half_power(base: Fraction, d: int, name: str) -> Fraction:
    if d % 2 == 0:
        return base ** (d // 2)
    if base < 0:
        raise PolyDomainError(f"negative value for {name} under a half exponent")
    num, den = base.numerator, base.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise PolyDomainError(f"value {base} for {name} is not an exact square")
    return Fraction(rn, rd) ** d


def _exp_text(d: int) -> str:
    if d == 2:
        return ""
    if d % 2 == 0:
        k = d // 2
        return f"^{k}" if k > 0 else f"^({k})"
    return f"^({d}/2)"


def poly_sum(polys: Iterable[HalfPoly]) -> HalfPoly:
    """Sum many polynomials with a single alignment pass."""
    polys = list(polys)
    vs = HalfPoly._union(*polys) if polys else ()
    acc: dict = {}
    for p in polys:
        for e, c in p._lift(vs).items():
            acc[e] = acc.get(e, 0) + c
    return HalfPoly(vs, acc)


def var(name: str) -> HalfPoly:
    return HalfPoly((name,), {(2,): 1})


def monomial(exps: Mapping[str, Scalar], coeff: int = 1) -> HalfPoly:
    """Monomial from real exponents, e.g. ``monomial({"x": Fraction(1, 2)})``."""
    names = tuple(exps)
    doubled = []
    for n in names:
        d = Fraction(exps[n]) * 2
        if d.denominator != 1:
            raise PolyDomainError(f"exponent {exps[n]} of {n} is not a half-integer")
        doubled.append(int(d))
    return HalfPoly(names, {tuple(doubled): coeff})


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|\^\s*\(\s*(?P<pexp>-?\d+)\s*(?:/\s*(?P<pden>\d+))?\s*\)"
    r"|\^\s*(?P<exp>\d+)|(?P<op>[+\-*]))"
)


def parse_poly(text: str) -> HalfPoly:
    """Parse the canonical text form (also accepts implicit multiplication)."""
    pos, n = 0, len(text)
    total = HalfPoly()
    sign = 1
    term: HalfPoly | None = None
    last_factor: str | None = None
    expecting_term = True

    def flush():
        nonlocal total, term
        if term is not None:
            total = total + term * sign
        term = None

    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"malformed polynomial near {text[pos:]!r}")
        pos = m.end()
        if m.group("op") in ("+", "-"):
            if term is None and not expecting_term:
                raise ValueError("dangling operator in polynomial")
            if term is None:
                sign = -sign if m.group("op") == "-" else sign
            else:
                flush()
                sign = -1 if m.group("op") == "-" else 1
            expecting_term = True
            last_factor = None
            continue
        if m.group("op") == "*":
            if term is None:
                raise ValueError("'*' without a left factor")
            continue
        if m.group("num") is not None:
            factor = HalfPoly.const(int(m.group("num")))
            last_factor = None
        elif m.group("name") is not None:
            last_factor = m.group("name")
            factor = var(last_factor)
        else:
            if last_factor is None:
                raise ValueError("exponent must follow a variable")
            if m.group("exp") is not None:
                d = 2 * int(m.group("exp"))
            else:
                num = int(m.group("pexp"))
                den = int(m.group("pden") or 1)
                if den not in (1, 2):
                    raise PolyDomainError("exponent denominators must be 1 or 2")
                d = num * (2 // den)
            # replace the bare variable just multiplied in
            factor = monomial({last_factor: Fraction(d, 2)}) / var(last_factor)
            last_factor = None
        term = factor if term is None else term * factor
        expecting_term = False
    if expecting_term:
        raise ValueError("empty or incomplete polynomial")
    flush()
    return total
