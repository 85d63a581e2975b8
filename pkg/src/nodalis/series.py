"""Truncated univariate power series ``c0 + c1*X + ... + O(X^N)``.

Every value carries its precision ``N`` (coefficients are known modulo
``X^N``) and every operation returns the precision it can prove:

* ``a + b``: ``min(Na, Nb)``;
* ``a * b``: ``min(Na + ord(b), Nb + ord(a))`` with orders capped at the
  precision (so ``O(X^Na) * (X^k + ...)`` is ``O(X^(Na+k))``);
* ``1/a`` and ``sqrt`` of a unit: unchanged;
* ``sqrt`` of ``X^(2k) * unit``: ``N - k``;
* ``s(t)`` with ``ord(t) = r >= 1``: ``min(Nt, r*Ns)``;
* ``s'``: ``N - 1``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import kernels
from .errors import InsufficientPrecision, NotSquareError
from .field import FieldDescriptor, FieldElement, PRIME_FIELD, RATIONALS

__all__ = ["AtLeast", "TruncatedSeries", "revert_unit_times_x", "mul_raw"]


@dataclass(frozen=True)
class AtLeast:
    """Order sentinel: every stored coefficient vanishes, so ``ord >= n``."""

    n: int

    def __str__(self) -> str:
        return f"at_least_{self.n}"


def _scale_to_int(a: Sequence[Fraction]) -> tuple[list[int], int]:
    den = 1
    for c in a:
        if c.denominator != 1:
            den = den * c.denominator // math.gcd(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in a], den


def mul_raw(desc: FieldDescriptor, a: Sequence, b: Sequence, n: int) -> list:
    """First ``n`` coefficients of the product of raw sequences ``a``, ``b``."""
    if n <= 0:
        return []
    if not a or not b:
        return [desc.zero_raw()] * n
    if desc.kind == PRIME_FIELD:
        return kernels.conv_mod(list(a), list(b), n, desc.p)
    if desc.kind == RATIONALS:
        ia, da = _scale_to_int(a)
        ib, db = _scale_to_int(b)
        d = da * db
        return [Fraction(c, d) for c in kernels.conv_int(ia, ib, n)]
    zero = desc.zero_raw()
    out = [zero] * n
    add, mul = desc.add, desc.mul
    for i in range(min(len(a), n)):
        ai = a[i]
        if desc.is_zero(ai):
            continue
        for j in range(min(len(b), n - i)):
            out[i + j] = add(out[i + j], mul(ai, b[j]))
    return out


def _inv_raw(desc: FieldDescriptor, a: Sequence, n: int) -> list:
    if desc.kind == PRIME_FIELD:
        return kernels.inv_mod(list(a[:n]), n, desc.p)
    if desc.kind == RATIONALS:
        ia, d = _scale_to_int(a[:n])
        a0 = ia[0]
        t = kernels.inv_int(ia, n)
        out = []
        pw = a0
        for k in range(n):
            out.append(Fraction(d * t[k], pw))
            pw *= a0
        return out
    inv0 = desc.inv(a[0])
    out = [inv0]
    for k in range(1, n):
        acc = desc.zero_raw()
        for i in range(1, min(k, len(a) - 1) + 1):
            acc = desc.add(acc, desc.mul(a[i], out[k - i]))
        out.append(desc.neg(desc.mul(acc, inv0)))
    return out


class TruncatedSeries:
    """Immutable power series over an exact field, known modulo ``X^prec``."""

    __slots__ = ("desc", "raw", "prec")

    def __init__(self, desc: FieldDescriptor, raw: Iterable, prec: int):
        if prec < 1:
            raise ValueError("series precision must be at least 1")
        raw = list(raw)[:prec]
        raw.extend([desc.zero_raw()] * (prec - len(raw)))
        object.__setattr__(self, "desc", desc)
        object.__setattr__(self, "raw", tuple(raw))
        object.__setattr__(self, "prec", prec)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- construction ------------------------------------------------------
    @classmethod
    def from_coeffs(cls, desc: FieldDescriptor, coeffs: Iterable, prec: int) -> "TruncatedSeries":
        return cls(desc, [desc.coerce_raw(c) for c in coeffs], prec)

    @classmethod
    def constant(cls, desc: FieldDescriptor, c, prec: int) -> "TruncatedSeries":
        return cls(desc, [desc.coerce_raw(c)], prec)

    @classmethod
    def variable(cls, desc: FieldDescriptor, prec: int) -> "TruncatedSeries":
        return cls(desc, [desc.zero_raw(), desc.one_raw()], prec)

    @classmethod
    def zero(cls, desc: FieldDescriptor, prec: int) -> "TruncatedSeries":
        return cls(desc, [], prec)

    # -- access --------------------------------------------------------------
    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.desc, c) for c in self.raw)

    def __getitem__(self, k: int) -> FieldElement:
        if k >= self.prec:
            raise InsufficientPrecision(f"coefficient {k} unknown at precision {self.prec}")
        return FieldElement(self.desc, self.raw[k])

    def __len__(self) -> int:
        return self.prec

    def ord(self) -> int | AtLeast:
        for k, c in enumerate(self.raw):
            if not self.desc.is_zero(c):
                return k
        return AtLeast(self.prec)

    def _ord_capped(self) -> int:
        o = self.ord()
        return o.n if isinstance(o, AtLeast) else o

    def is_zero(self) -> bool:
        return isinstance(self.ord(), AtLeast)

    def truncate(self, n: int) -> "TruncatedSeries":
        return TruncatedSeries(self.desc, self.raw, min(n, self.prec))

    # -- ring structure --------------------------------------------------------
    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            if other.desc != self.desc:
                if self.desc.is_extension and other.desc == self.desc.base:
                    return other.change_field(self.desc)
                raise ValueError(f"series over {other.desc} combined with {self.desc}")
            return other
        return TruncatedSeries.constant(self.desc, other, self.prec)

    def __add__(self, other):
        o = self._coerce(other)
        n = min(self.prec, o.prec)
        add = self.desc.add
        return TruncatedSeries(self.desc, [add(a, b) for a, b in zip(self.raw[:n], o.raw[:n])], n)

    __radd__ = __add__

    def __neg__(self):
        neg = self.desc.neg
        return TruncatedSeries(self.desc, [neg(a) for a in self.raw], self.prec)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.scale(other)
        o = self._coerce(other)
        n = min(self.prec + o._ord_capped(), o.prec + self._ord_capped())
        return TruncatedSeries(self.desc, mul_raw(self.desc, self.raw, o.raw, n), n)

    __rmul__ = __mul__

    def scale(self, c) -> "TruncatedSeries":
        r = self.desc.coerce_raw(c)
        mul = self.desc.mul
        return TruncatedSeries(self.desc, [mul(a, r) for a in self.raw], self.prec)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.scale(self.desc.inv(self.desc.coerce_raw(other)))
        return self * self._coerce(other).inverse()

    def __pow__(self, n: int) -> "TruncatedSeries":
        if n < 0:
            return self.inverse() ** (-n)
        result = TruncatedSeries.constant(self.desc, 1, self.prec + n * self._ord_capped())
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by ``X^k`` (exact, precision grows by ``k``)."""
        return TruncatedSeries(self.desc, [self.desc.zero_raw()] * k + list(self.raw), self.prec + k)

    def unshift(self, k: int) -> "TruncatedSeries":
        """Divide by ``X^k``; the first ``k`` coefficients must vanish."""
        if k >= self.prec:
            raise InsufficientPrecision(f"cannot divide by X^{k} at precision {self.prec}")
        if any(not self.desc.is_zero(c) for c in self.raw[:k]):
            raise ValueError(f"series is not divisible by X^{k}")
        return TruncatedSeries(self.desc, self.raw[k:], self.prec - k)

    def change_field(self, desc: FieldDescriptor) -> "TruncatedSeries":
        return TruncatedSeries(desc, [desc.coerce_raw(FieldElement(self.desc, c)) for c in self.raw], self.prec)

    # -- analytic operations ----------------------------------------------------
    def inverse(self) -> "TruncatedSeries":
        if self.desc.is_zero(self.raw[0]):
            raise ZeroDivisionError("series with zero constant term is not a unit")
        return TruncatedSeries(self.desc, _inv_raw(self.desc, self.raw, self.prec), self.prec)

    def sqrt(self) -> "TruncatedSeries":
        """Square root with the canonical leading coefficient.

        Raises :class:`NotSquareError` for odd order or a non-square leading
        coefficient and :class:`InsufficientPrecision` for the zero series.
        """
        v = self.ord()
        if isinstance(v, AtLeast):
            raise InsufficientPrecision("square root of a series that vanishes to full precision")
        if v % 2:
            raise NotSquareError("odd_order", v)
        desc = self.desc
        lead = self.raw[v]
        r0 = desc.sqrt_raw(lead)
        if r0 is None:
            raise NotSquareError("leading_coeff_not_square", FieldElement(desc, lead))
        u = self.raw[v:]
        n = len(u)
        inv2r0 = desc.inv(desc.add(r0, r0))
        r = [r0]
        for k in range(1, n):
            acc = u[k]
            for i in range(1, k):
                acc = desc.sub(acc, desc.mul(r[i], r[k - i]))
            r.append(desc.mul(acc, inv2r0))
        half = v // 2
        return TruncatedSeries(desc, [desc.zero_raw()] * half + r, self.prec - half)

    def compose(self, t: "TruncatedSeries") -> "TruncatedSeries":
        """``self(t(X))`` for ``ord(t) >= 1``."""
        t = self._coerce(t)
        r = t.ord()
        if isinstance(r, AtLeast):
            r = r.n
        if r == 0:
            raise ValueError("composition requires ord(t) >= 1")
        n = min(t.prec, r * self.prec)
        desc = self.desc
        tr = t.raw[:n]
        acc = [self.raw[-1]]
        for c in reversed(self.raw[:-1]):
            acc = mul_raw(desc, acc, tr, n)
            acc[0] = desc.add(acc[0], c)
        return TruncatedSeries(desc, acc, n)

    def substitute_xpow(self, k: int) -> "TruncatedSeries":
        """``self(X^k)`` (exact, precision ``k*N``)."""
        out = [self.desc.zero_raw()] * (k * self.prec)
        for i, c in enumerate(self.raw):
            out[i * k] = c
        return TruncatedSeries(self.desc, out, k * self.prec)

    def derivative(self) -> "TruncatedSeries":
        if self.prec < 2:
            raise InsufficientPrecision("derivative needs precision >= 2")
        desc = self.desc
        return TruncatedSeries(
            desc, [desc.mul(desc.coerce_raw(k), self.raw[k]) for k in range(1, self.prec)], self.prec - 1
        )

    def evaluate(self, x):
        """Evaluate the stored truncation (a polynomial) at the scalar ``x``."""
        desc = self.desc
        xr = desc.coerce_raw(x)
        acc = desc.zero_raw()
        for c in reversed(self.raw):
            acc = desc.add(desc.mul(acc, xr), c)
        return FieldElement(desc, acc)

    # -- comparison / rendering ---------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.desc == other.desc and self.prec == other.prec and self.raw == other.raw

    def __hash__(self) -> int:
        return hash((self.desc, self.raw, self.prec))

    def agrees_with(self, other: "TruncatedSeries", n: int | None = None) -> bool:
        """True iff the first ``n`` (default: common precision) coefficients match."""
        o = self._coerce(other)
        m = min(self.prec, o.prec) if n is None else n
        if m > min(self.prec, o.prec):
            raise InsufficientPrecision(f"cannot compare {m} coefficients")
        return self.raw[:m] == o.raw[:m]

    def to_strings(self) -> list[str]:
        return [self.desc.format_raw(c) for c in self.raw]

    def format(self, var: str = "X") -> str:
        terms = []
        for k, c in enumerate(self.raw):
            if self.desc.is_zero(c):
                continue
            s = self.desc.format_raw(c)
            if k == 0:
                terms.append(s)
            else:
                mon = var if k == 1 else f"{var}^{k}"
                terms.append(mon if s == "1" else f"-{mon}" if s == "-1" else f"{s}*{mon}")
        terms.append(f"O({var}^{self.prec})")
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.desc}, {self.format()})"


def revert_unit_times_x(U: TruncatedSeries, n: int) -> TruncatedSeries:
    """Solve ``c(t) * U(c(t)) = t`` for ``c`` with ``c(0) = 0``.

    Coefficients are determined order by order: the coefficient of ``t^k`` in
    ``c*U(c)`` is ``U(0)*c_k`` plus a polynomial in ``c_1..c_{k-1}``.
    The result is known modulo ``t^min(n, prec(U)+1)``.
    """
    desc = U.desc
    if desc.is_zero(U.raw[0]):
        raise ZeroDivisionError("reversion needs a unit U")
    f = U.shift(1)  # f(x) = x * U(x)
    n = min(n, f.prec)
    inv_u0 = desc.inv(U.raw[0])
    c = [desc.zero_raw()] * n
    if n > 1:
        c[1] = inv_u0
    for k in range(2, n):
        partial = TruncatedSeries(desc, c[:k], k + 1)
        coef = f.compose(partial).raw[k]
        c[k] = desc.neg(desc.mul(coef, inv_u0))
    return TruncatedSeries(desc, c, n)
