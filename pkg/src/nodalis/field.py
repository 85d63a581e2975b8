"""Exact coefficient fields: the rationals, odd prime fields and one-step
quadratic extensions of either.

A :class:`FieldDescriptor` owns the arithmetic on *raw* values (``Fraction``
for the rationals, ``int`` residues for prime fields, ``(a, b)`` pairs of base
raw values for ``a + b*sqrt(d)``).  :class:`FieldElement` is the immutable
user-facing wrapper carrying its descriptor.

Canonical square roots:

* rationals: the non-negative root;
* prime fields: the smaller residue of ``{s, p - s}``;
* extensions: the root whose first nonzero component ``(a, b)`` is canonical in
  the base field (non-negative, resp. the smaller residue).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Any, Optional, Union

from .errors import FieldError

__all__ = [
    "FieldDescriptor",
    "FieldElement",
    "rationals",
    "prime_field",
    "adjoin_sqrt",
    "is_square",
    "sqrt",
    "parse_field",
    "squarefree_rational",
    "QQ",
]

RATIONALS = "rationals"
PRIME_FIELD = "prime_field"
QUADRATIC_EXTENSION = "quadratic_extension"

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def _is_prime(n: int) -> bool:
    # Miller-Rabin with the first 13 prime bases: deterministic below 3.3e24.
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _sqrt_mod(a: int, p: int) -> Optional[int]:
    """Tonelli-Shanks; returns the smaller root or None."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    else:
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, r = t * c % p, r * b % p
    return min(r, p - r)


def _rational_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def squarefree_rational(q: Fraction) -> Fraction:
    """A representative of the square class of nonzero ``q``.

    Square factors of the numerator and denominator are stripped by trial
    division up to 10**4 (plus a final perfect-square test), so small inputs
    come back square-free; larger ones are still in the same square class.
    """
    q = Fraction(q)
    if q == 0:
        raise FieldError("zero has no square class")
    sign = -1 if q < 0 else 1
    m = abs(q.numerator) * q.denominator
    core = 1
    f = 2
    while f * f <= m and f < 10_000:
        while m % (f * f) == 0:
            m //= f * f
        if m % f == 0:
            m //= f
            core *= f
        f += 1
    r = math.isqrt(m)
    if r * r != m:
        core *= m
    return Fraction(sign * core)


@dataclass(frozen=True)
class FieldDescriptor:
    """One of ``rationals``, ``prime_field(p)`` or
    ``quadratic_extension(base, d)``."""

    kind: str
    p: Optional[int] = None
    base: Optional["FieldDescriptor"] = None
    d: Any = None  # raw base value of the adjoined square
    _hash: int = dc_field(default=0, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hash((self.kind, self.p, self.base, self.d)))

    def __hash__(self) -> int:
        return self._hash

    # -- descriptive -----------------------------------------------------
    @property
    def characteristic(self) -> int:
        if self.kind == RATIONALS:
            return 0
        if self.kind == PRIME_FIELD:
            return self.p
        return self.base.characteristic

    @property
    def is_extension(self) -> bool:
        return self.kind == QUADRATIC_EXTENSION

    @property
    def root_field(self) -> "FieldDescriptor":
        return self.base if self.is_extension else self

    def __str__(self) -> str:
        if self.kind == RATIONALS:
            return "q"
        if self.kind == PRIME_FIELD:
            return f"fp:{self.p}"
        b = self.base
        prefix = "q" if b.kind == RATIONALS else f"fp:{b.p}"
        return f"{prefix}-adjoin:{b.format_raw(self.d)}"

    # -- raw arithmetic --------------------------------------------------
    def zero_raw(self):
        if self.kind == RATIONALS:
            return Fraction(0)
        if self.kind == PRIME_FIELD:
            return 0
        z = self.base.zero_raw()
        return (z, z)

    def one_raw(self):
        if self.kind == RATIONALS:
            return Fraction(1)
        if self.kind == PRIME_FIELD:
            return 1
        return (self.base.one_raw(), self.base.zero_raw())

    def coerce_raw(self, x):
        """Raw value for an int / Fraction / FieldElement / raw of this field."""
        if isinstance(x, FieldElement):
            if x.desc == self:
                return x.raw
            if self.is_extension and x.desc == self.base:
                return (x.raw, self.base.zero_raw())
            raise FieldError(f"cannot coerce element of {x.desc} into {self}")
        if self.kind == RATIONALS:
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            if isinstance(x, str):
                return Fraction(x)
        elif self.kind == PRIME_FIELD:
            if isinstance(x, int):
                return x % self.p
            if isinstance(x, Fraction):
                den = x.denominator % self.p
                if den == 0:
                    raise FieldError(f"denominator {x.denominator} vanishes in {self}")
                return x.numerator * pow(den, -1, self.p) % self.p
            if isinstance(x, str):
                return self.coerce_raw(Fraction(x))
        else:
            if isinstance(x, tuple) and len(x) == 2:
                return (self.base.coerce_raw(x[0]), self.base.coerce_raw(x[1]))
            return (self.base.coerce_raw(x), self.base.zero_raw())
        raise FieldError(f"cannot coerce {x!r} into {self}")

    def add(self, a, b):
        if self.kind == RATIONALS:
            return a + b
        if self.kind == PRIME_FIELD:
            return (a + b) % self.p
        B = self.base
        return (B.add(a[0], b[0]), B.add(a[1], b[1]))

    def sub(self, a, b):
        if self.kind == RATIONALS:
            return a - b
        if self.kind == PRIME_FIELD:
            return (a - b) % self.p
        B = self.base
        return (B.sub(a[0], b[0]), B.sub(a[1], b[1]))

    def neg(self, a):
        if self.kind == RATIONALS:
            return -a
        if self.kind == PRIME_FIELD:
            return -a % self.p
        return (self.base.neg(a[0]), self.base.neg(a[1]))

    def mul(self, a, b):
        if self.kind == RATIONALS:
            return a * b
        if self.kind == PRIME_FIELD:
            return a * b % self.p
        B = self.base
        re = B.add(B.mul(a[0], b[0]), B.mul(self.d, B.mul(a[1], b[1])))
        im = B.add(B.mul(a[0], b[1]), B.mul(a[1], b[0]))
        return (re, im)

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError(f"inverse of zero in {self}")
        if self.kind == RATIONALS:
            return 1 / a
        if self.kind == PRIME_FIELD:
            return pow(a, -1, self.p)
        B = self.base
        norm = B.sub(B.mul(a[0], a[0]), B.mul(self.d, B.mul(a[1], a[1])))
        ni = B.inv(norm)
        return (B.mul(a[0], ni), B.neg(B.mul(a[1], ni)))

    def is_zero(self, a) -> bool:
        if self.kind == QUADRATIC_EXTENSION:
            return self.base.is_zero(a[0]) and self.base.is_zero(a[1])
        return a == 0

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inv(a), -n)
        result, base = self.one_raw(), a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def _canonical_key(self, a) -> tuple:
        # smaller key = canonical choice among {s, -s}
        if self.kind == RATIONALS:
            return (0 if a >= 0 else 1,)
        if self.kind == PRIME_FIELD:
            return (a,)
        B = self.base
        lead = a[0] if not B.is_zero(a[0]) else a[1]
        return B._canonical_key(lead)

    def canonical_sign(self, s):
        neg = self.neg(s)
        return s if self._canonical_key(s) <= self._canonical_key(neg) else neg

    def is_square_raw(self, a) -> bool:
        return self.sqrt_raw(a) is not None

    def sqrt_raw(self, a):
        if self.kind == RATIONALS:
            return _rational_sqrt(a)
        if self.kind == PRIME_FIELD:
            return _sqrt_mod(a, self.p)
        B = self.base
        x, y = a
        if B.is_zero(y):
            s = B.sqrt_raw(x)
            if s is not None:
                return self.canonical_sign((s, B.zero_raw()))
            s = B.sqrt_raw(B.mul(x, B.inv(self.d)))
            if s is not None:
                return self.canonical_sign((B.zero_raw(), s))
            return None
        norm = B.sub(B.mul(x, x), B.mul(self.d, B.mul(y, y)))
        c = B.sqrt_raw(norm)
        if c is None:
            return None
        half = B.inv(B.coerce_raw(2))
        for cc in (c, B.neg(c)):
            t = B.mul(B.add(x, cc), half)
            r = B.sqrt_raw(t)
            if r is None or B.is_zero(r):
                continue
            s = (r, B.mul(y, B.inv(B.mul(B.coerce_raw(2), r))))
            if self.mul(s, s) == a:
                return self.canonical_sign(s)
        return None

    def format_raw(self, a) -> str:
        if self.kind == RATIONALS:
            return str(a)
        if self.kind == PRIME_FIELD:
            return str(a)
        B = self.base
        x, y = a
        r = "sqrt(" + B.format_raw(self.d) + ")"
        if B.is_zero(y):
            return B.format_raw(x)
        neg = B.kind == RATIONALS and y < 0
        if neg:
            y = -y
        ys = "" if y == B.one_raw() else B.format_raw(y) + "*"
        if B.is_zero(x):
            return f"{'-' if neg else ''}{ys}{r}"
        return f"({B.format_raw(x)} {'-' if neg else '+'} {ys}{r})"

    # -- element construction -------------------------------------------
    def __call__(self, x=0) -> "FieldElement":
        return FieldElement(self, self.coerce_raw(x))

    def zero(self) -> "FieldElement":
        return FieldElement(self, self.zero_raw())

    def one(self) -> "FieldElement":
        return FieldElement(self, self.one_raw())

    def gen(self) -> "FieldElement":
        """The adjoined square root (extensions only)."""
        if not self.is_extension:
            raise FieldError(f"{self} has no adjoined generator")
        return FieldElement(self, (self.base.zero_raw(), self.base.one_raw()))


Scalar = Union[int, Fraction, "FieldElement"]


class FieldElement:
    """Immutable exact scalar tied to a :class:`FieldDescriptor`."""

    __slots__ = ("desc", "raw")

    def __init__(self, desc: FieldDescriptor, raw):
        object.__setattr__(self, "desc", desc)
        object.__setattr__(self, "raw", raw)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.desc == self.desc:
                return other.raw
            return self.desc.coerce_raw(other)
        if isinstance(other, (int, Fraction)):
            return self.desc.coerce_raw(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.desc, self.desc.add(self.raw, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.desc, self.desc.sub(self.raw, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.desc, self.desc.sub(o, self.raw))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.desc, self.desc.mul(self.raw, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.desc, self.desc.mul(self.raw, self.desc.inv(o)))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.desc, self.desc.mul(o, self.desc.inv(self.raw)))

    def __neg__(self):
        return FieldElement(self.desc, self.desc.neg(self.raw))

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        return FieldElement(self.desc, self.desc.pow(self.raw, n))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.desc, self.desc.inv(self.raw))

    def __bool__(self) -> bool:
        return not self.desc.is_zero(self.raw)

    def is_zero(self) -> bool:
        return self.desc.is_zero(self.raw)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            if other.desc != self.desc:
                try:
                    return self.raw == self.desc.coerce_raw(other)
                except FieldError:
                    return False
            return self.raw == other.raw
        if isinstance(other, (int, Fraction)):
            try:
                return self.raw == self.desc.coerce_raw(other)
            except FieldError:
                return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.desc, self.raw))

    def __repr__(self) -> str:
        return f"FieldElement({self.desc}, {self})"

    def __str__(self) -> str:
        return self.desc.format_raw(self.raw)

    def is_square(self) -> bool:
        return self.desc.is_square_raw(self.raw)

    def sqrt(self) -> Optional["FieldElement"]:
        s = self.desc.sqrt_raw(self.raw)
        return None if s is None else FieldElement(self.desc, s)

    def to_fraction(self) -> Fraction:
        if self.desc.kind != RATIONALS:
            raise FieldError(f"{self.desc} element is not a rational number")
        return self.raw


# -- constructors ------------------------------------------------------------

QQ = FieldDescriptor(RATIONALS)


def rationals() -> FieldDescriptor:
    return QQ


def prime_field(p: int) -> FieldDescriptor:
    if p == 2:
        raise FieldError("characteristic 2 is not supported")
    if not _is_prime(p):
        raise FieldError(f"{p} is not a prime")
    return FieldDescriptor(PRIME_FIELD, p=p)


def adjoin_sqrt(desc: FieldDescriptor, d) -> FieldDescriptor:
    """Adjoin a square root of the base non-square ``d``."""
    if desc.is_extension:
        raise FieldError("extension tower depth exceeded: base is already an extension")
    raw = desc.coerce_raw(d)
    if desc.is_square_raw(raw):
        raise FieldError(f"{desc.format_raw(raw)} is already a square in {desc}")
    return FieldDescriptor(QUADRATIC_EXTENSION, base=desc, d=raw)


def is_square(e: FieldElement) -> bool:
    return e.is_square()


def sqrt(e: FieldElement) -> Optional[FieldElement]:
    return e.sqrt()


def parse_field(text: str) -> FieldDescriptor:
    """Parse ``q``, ``fp:<p>`` or ``q-adjoin:<d>`` (also ``fp:<p>-adjoin:<d>``)."""
    t = text.strip().lower()
    base_txt, _, adj = t.partition("-adjoin:")
    if base_txt == "q":
        base = QQ
    elif base_txt.startswith("fp:"):
        try:
            p = int(base_txt[3:])
        except ValueError:
            raise FieldError(f"bad prime in field {text!r}") from None
        base = prime_field(p)
    else:
        raise FieldError(f"unknown field {text!r}")
    if not adj:
        return base
    try:
        d = Fraction(adj)
    except (ValueError, ZeroDivisionError):
        raise FieldError(f"bad adjoined value in field {text!r}") from None
    return adjoin_sqrt(base, d)
