"""Laurent polynomials with integer coefficients in polygon-edge generators.

A generator is a vertex pair ``(i, j)`` with ``i < j``.  Elements are stored
as a map from sparse signed exponent vectors to coefficients; the canonical
"polynomial over a monomial" form is derived from it (``numerator`` and
``denominator``).  Because the exponents already live in Z^k, cancellation
between numerator and denominator is automatic and never needs a polynomial
gcd.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

Generator = tuple[int, int]
Monomial = tuple[tuple[Generator, int], ...]

ONE_MONOMIAL: Monomial = ()


def _normalize_generator(g) -> Generator:
    i, j = g
    if i == j:
        raise ValueError(f"generator endpoints must differ: {g}")
    return (i, j) if i < j else (j, i)


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for g, e in m2:
        e = d.get(g, 0) + e
        if e:
            d[g] = e
        else:
            del d[g]
    return tuple(sorted(d.items()))


def mono_inv(m: Monomial) -> Monomial:
    return tuple((g, -e) for g, e in m)


def generator_name(g: Generator, sep: str | None = None) -> str:
    i, j = g
    if sep is None:
        sep = "_" if max(i, j) >= 10 else ""
    return f"x{i}{sep}{j}"


def _mono_str(m: Monomial, sep) -> str:
    parts = []
    for g, e in m:
        name = generator_name(g, sep)
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


class LaurentElement:
    """An element of Z[x_g^{+1}, x_g^{-1}]. Immutable."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean = {}
        for m, c in (terms or {}).items():
            if c:
                exps: dict[Generator, int] = {}
                for g, e in m:
                    g = _normalize_generator(g)
                    exps[g] = exps.get(g, 0) + e
                m = tuple(sorted((g, e) for g, e in exps.items() if e))
                clean[m] = clean.get(m, 0) + c
        self._terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    # constructors

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentElement":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def generator(cls, g) -> "LaurentElement":
        return cls._raw({((_normalize_generator(g), 1),): 1})

    @classmethod
    def constant(cls, c: int) -> "LaurentElement":
        return cls._raw({ONE_MONOMIAL: c} if c else {})

    @classmethod
    def monomial(cls, m: Monomial, c: int = 1) -> "LaurentElement":
        return cls({m: c})

    # structure

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def generators(self) -> set[Generator]:
        return {g for m in self._terms for g, _ in m}

    @property
    def denominator(self) -> Monomial:
        low: dict[Generator, int] = {}
        for m in self._terms:
            for g, e in m:
                if e < 0:
                    low[g] = max(low.get(g, 0), -e)
        return tuple(sorted(low.items()))

    @property
    def numerator(self) -> dict[Monomial, int]:
        den = self.denominator
        return {mono_mul(m, den): c for m, c in self._terms.items()}

    def coefficients(self) -> list[int]:
        return list(self._terms.values())

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # ring operations

    @staticmethod
    def _coerce(other) -> "LaurentElement":
        if isinstance(other, LaurentElement):
            return other
        if isinstance(other, int):
            return LaurentElement.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            c = out.get(m, 0) + c
            if c:
                out[m] = c
            else:
                out.pop(m, None)
        return LaurentElement._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentElement._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                c = out.get(m, 0) + c1 * c2
                if c:
                    out[m] = c
                else:
                    out.pop(m, None)
        return LaurentElement._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("use div_by_generator / exact_div for negative powers")
        out = LaurentElement.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def div_by_generator(self, g) -> "LaurentElement":
        inv = ((_normalize_generator(g), -1),)
        return LaurentElement._raw({mono_mul(m, inv): c for m, c in self._terms.items()})

    def exact_div(self, other) -> "LaurentElement":
        """Quotient in the Laurent ring; ``ArithmeticError`` if it does not exist."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero Laurent element")
        if not self:
            return self
        if other.is_monomial():
            ((m, c),) = other._terms.items()
            inv = mono_inv(m)
            out = {}
            for mm, cc in self._terms.items():
                q, r = divmod(cc, c)
                if r:
                    raise ArithmeticError(f"coefficient {cc} not divisible by {c}")
                out[mono_mul(mm, inv)] = q
            return LaurentElement._raw(out)

        # Reduce to polynomial division: self = A / x^alpha, other = B x^gamma / x^beta
        # with B free of monomial factors; then self/other = (A / B) x^(beta-gamma-alpha).
        alpha = self.denominator
        A = self.numerator
        beta = other.denominator
        Bfull = other.numerator
        gamma = {}
        for g in {g for m in Bfull for g, _ in m}:
            gamma[g] = min(dict(m).get(g, 0) for m in Bfull)
        gamma_m = tuple(sorted((g, e) for g, e in gamma.items() if e))
        B = {mono_mul(m, mono_inv(gamma_m)): c for m, c in Bfull.items()}
        C = _poly_exact_div(A, B)
        shift = mono_mul(mono_mul(beta, mono_inv(gamma_m)), mono_inv(alpha))
        return LaurentElement._raw({mono_mul(m, shift): c for m, c in C.items()})

    # comparison / evaluation

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def evaluate(self, values: Mapping[Generator, int | Fraction] | None = None, default=None):
        """Substitute numbers for generators. Missing generators use ``default``."""
        values = values or {}
        total = Fraction(0)
        for m, c in self._terms.items():
            t = Fraction(c)
            for g, e in m:
                v = values.get(g, default)
                if v is None:
                    raise KeyError(f"no value for {generator_name(g)}")
                t *= Fraction(v) ** e
            total += t
        return total

    def specialize_to_one(self) -> int:
        return sum(self._terms.values())

    # text form

    def to_string(self, sep: str | None = None) -> str:
        num = self.numerator
        den = self.denominator
        if not num:
            return "0"
        gens = sorted({g for m in num for g, _ in m})

        def key(m):
            d = dict(m)
            return tuple(d.get(g, 0) for g in gens)

        pieces = []
        for m in sorted(num, key=key, reverse=True):
            c = num[m]
            body = _mono_str(m, sep)
            if not body:
                s = str(abs(c))
            elif abs(c) == 1:
                s = body
            else:
                s = f"{abs(c)}*{body}"
            if not pieces:
                pieces.append(s if c > 0 else "-" + s)
            else:
                pieces.append((" + " if c > 0 else " - ") + s)
        num_s = "".join(pieces)
        if not den:
            return num_s
        if len(num) > 1:
            num_s = f"({num_s})"
        den_s = _mono_str(den, sep)
        if len(den) > 1:
            den_s = f"({den_s})"
        return f"{num_s}/{den_s}"

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"LaurentElement({self.to_string()!r})"


def _poly_exact_div(A: dict, B: dict) -> dict:
    """Exact division of polynomials (non-negative exponents) by lex leading terms."""
    gens = sorted({g for m in A for g, _ in m} | {g for m in B for g, _ in m})

    def key(m):
        d = dict(m)
        return tuple(d.get(g, 0) for g in gens)

    lead_b = max(B, key=key)
    lead_bd = dict(lead_b)
    lead_c = B[lead_b]
    R = dict(A)
    Q: dict = {}
    while R:
        lm = max(R, key=key)
        lmd = dict(lm)
        if any(lmd.get(g, 0) < e for g, e in lead_bd.items()):
            raise ArithmeticError("polynomial division is not exact")
        coef, rem = divmod(R[lm], lead_c)
        if rem:
            raise ArithmeticError("polynomial division is not exact (coefficient)")
        t = mono_mul(lm, mono_inv(lead_b))
        Q[t] = Q.get(t, 0) + coef
        for mb, cb in B.items():
            m = mono_mul(t, mb)
            c = R.get(m, 0) - coef * cb
            if c:
                R[m] = c
            else:
                R.pop(m, None)
    return {m: c for m, c in Q.items() if c}


def product(elements: Iterable[LaurentElement]) -> LaurentElement:
    out = LaurentElement.constant(1)
    for e in elements:
        out = out * e
    return out
