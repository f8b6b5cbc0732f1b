"""Integer Laurent polynomials in one variable ``q``.

Values are immutable; a polynomial is a canonical map exponent -> nonzero
integer coefficient. Specialization to complex numbers and to residues
modulo a fixed Mersenne prime is provided for numerics and search hashing.
"""
from __future__ import annotations

import re
from typing import Iterable, Mapping

# 2^61 - 1
MODULUS = (1 << 61) - 1


class NotDivisible(ArithmeticError):
    """Raised by :func:`lp_div_exact` when the divisor does not divide."""


class ZeroSpecialization(ValueError):
    """Raised when q is specialized to zero."""


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        if terms:
            self._terms = {int(k): int(c) for k, c in terms.items() if c}
        else:
            self._terms = {}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPoly":
        # trusted constructor: caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw({0: int(c)} if c else {})

    @classmethod
    def monomial(cls, c: int, k: int) -> "LaurentPoly":
        return cls._raw({int(k): int(c)} if c else {})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {0: 1}

    def min_exp(self) -> int:
        return min(self._terms)

    def max_exp(self) -> int:
        return max(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other):
        return lp_add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return lp_add(self, -_coerce(other))

    def __rsub__(self, other):
        return lp_add(_coerce(other), -self)

    def __mul__(self, other):
        return lp_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            unit = lp_is_unit(self)
            if unit is None:
                raise NotDivisible(f"{self} is not a unit")
            sign, k = unit
            return LaurentPoly.monomial(sign ** (-e), -k * (-e))
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"LaurentPoly({to_text(self)!r})"


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
Q = LaurentPoly.monomial(1, 1)


def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if not a._terms:
        return b
    if not b._terms:
        return a
    out = dict(a._terms)
    for k, c in b._terms.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return LaurentPoly._raw(out)


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if not a._terms or not b._terms:
        return ZERO
    out: dict[int, int] = {}
    for ka, ca in a._terms.items():
        for kb, cb in b._terms.items():
            k = ka + kb
            out[k] = out.get(k, 0) + ca * cb
    return LaurentPoly._raw({k: c for k, c in out.items() if c})


def lp_div_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact quotient ``a / b`` in Z[q, q^-1].

    Raises NotDivisible if ``b`` is zero or leaves a remainder.
    """
    if not b._terms:
        raise NotDivisible("division by zero polynomial")
    if not a._terms:
        return ZERO
    if len(b._terms) == 1:
        (kb, cb), = b._terms.items()
        out = {}
        for k, c in a._terms.items():
            quo, rem = divmod(c, cb)
            if rem:
                raise NotDivisible(f"{a} is not divisible by {b}")
            out[k - kb] = quo
        return LaurentPoly._raw(out)
    # shift both to ordinary polynomials with nonzero constant term
    va, vb = a.min_exp(), b.min_exp()
    num = [0] * (a.max_exp() - va + 1)
    for k, c in a._terms.items():
        num[k - va] = c
    den = [0] * (b.max_exp() - vb + 1)
    for k, c in b._terms.items():
        den[k - vb] = c
    if len(num) < len(den):
        raise NotDivisible(f"{a} is not divisible by {b}")
    lead = den[-1]
    quot = [0] * (len(num) - len(den) + 1)
    for i in range(len(quot) - 1, -1, -1):
        c, rem = divmod(num[i + len(den) - 1], lead)
        if rem:
            raise NotDivisible(f"{a} is not divisible by {b}")
        quot[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num):
        raise NotDivisible(f"{a} is not divisible by {b}")
    shift = va - vb
    return LaurentPoly._raw({i + shift: c for i, c in enumerate(quot) if c})


def lp_is_unit(a: LaurentPoly) -> tuple[int, int] | None:
    """Return ``(sign, k)`` when ``a == sign * q**k``, else None."""
    if len(a._terms) != 1:
        return None
    (k, c), = a._terms.items()
    if c in (1, -1):
        return c, k
    return None


def lp_eval_complex(a: LaurentPoly, q0: complex) -> complex:
    q0 = complex(q0)
    if q0 == 0:
        raise ZeroSpecialization("q must be nonzero")
    if not a._terms:
        return 0j
    lo, hi = a.min_exp(), a.max_exp()
    acc = 0j
    for k in range(hi, lo - 1, -1):
        acc = acc * q0 + a._terms.get(k, 0)
    return acc * q0 ** lo


def lp_eval_mod(a: LaurentPoly, q0: int, p: int = MODULUS) -> int:
    """Evaluate ``a`` at ``q = q0`` in Z/pZ."""
    q0 %= p
    if q0 == 0:
        raise ZeroSpecialization("q must be a unit mod p")
    if not a._terms:
        return 0
    lo, hi = a.min_exp(), a.max_exp()
    acc = 0
    for k in range(hi, lo - 1, -1):
        acc = (acc * q0 + a._terms.get(k, 0)) % p
    return acc * pow(q0, lo, p) % p


# -- text / JSON forms -------------------------------------------------------

def _term_text(c: int, k: int) -> str:
    if k == 0:
        return str(c)
    mono = "q" if k == 1 else f"q^{k}"
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def to_text(a: LaurentPoly) -> str:
    """Canonical text: ascending exponents, e.g. ``1 - q + 2*q^3``."""
    if not a._terms:
        return "0"
    parts = []
    for i, (k, c) in enumerate(sorted(a._terms.items())):
        t = _term_text(c, k)
        if i == 0:
            parts.append(t)
        elif c < 0:
            parts.append(" - " + t[1:])
        else:
            parts.append(" + " + t)
    return "".join(parts)


_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+)\s*\*?\s*)?(q(?:\s*\^\s*\(?\s*([+-]?\d+)\s*\)?)?)?\s*"
)


def from_text(text: str) -> LaurentPoly:
    """Parse the text form produced by :func:`to_text` (and looser variants)."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    terms: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, coeff, mono, exp = m.groups()
        if m.end() == pos or (coeff is None and mono is None):
            raise ValueError(f"cannot parse polynomial at position {pos}: {text!r}")
        if sign is None and not first:
            raise ValueError(f"missing operator at position {pos}: {text!r}")
        c = int(coeff) if coeff is not None else 1
        if sign == "-":
            c = -c
        k = 0 if mono is None else (1 if exp is None else int(exp))
        terms[k] = terms.get(k, 0) + c
        pos = m.end()
        first = False
    return LaurentPoly(terms)


def to_json(a: LaurentPoly) -> dict[str, int]:
    return {str(k): c for k, c in sorted(a._terms.items())}


def from_json(obj: Mapping[str, int]) -> LaurentPoly:
    return LaurentPoly({int(k): int(c) for k, c in obj.items()})


def poly(*coeffs: int, low: int = 0) -> LaurentPoly:
    """Build ``sum(coeffs[i] * q**(low + i))``."""
    return LaurentPoly({low + i: c for i, c in enumerate(coeffs)})


def lp_sum(items: Iterable[LaurentPoly]) -> LaurentPoly:
    out: dict[int, int] = {}
    for a in items:
        for k, c in a._terms.items():
            out[k] = out.get(k, 0) + c
    return LaurentPoly._raw({k: c for k, c in out.items() if c})
