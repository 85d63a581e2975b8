"""Exact bivariate polynomials in ``X, Y`` and the geometric helpers built on
them: homogeneous parts, translations, linear coordinate changes, binary
quadratic splitting, restriction to lines, resultants and divisibility.

Coefficients are stored sparsely as raw field values keyed by exponent pairs
``(i, j)`` for ``X^i Y^j``; zero coefficients are never stored.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import FieldError, NeedsExtension
from .field import FieldDescriptor, FieldElement, QQ, RATIONALS, squarefree_rational
from .series import TruncatedSeries

__all__ = [
    "BivariatePoly",
    "LinearForm",
    "AffinePoint",
    "BinarySplit",
    "LineRestriction",
    "homogeneous_part",
    "translate_to_origin",
    "linear_change",
    "split_binary_quadratic",
    "restrict_to_line",
    "resultant_y",
    "partials",
    "divides",
    "upoly_gcd",
    "upoly_ord",
]


class BivariatePoly:
    """Immutable sparse polynomial in ``X, Y`` over an exact field."""

    __slots__ = ("desc", "terms")

    def __init__(self, desc: FieldDescriptor, terms: Mapping[tuple[int, int], object] | None = None):
        clean = {}
        if terms:
            for k, v in terms.items():
                if not desc.is_zero(v):
                    clean[k] = v
        object.__setattr__(self, "desc", desc)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BivariatePoly is immutable")

    # -- construction ----------------------------------------------------------
    @classmethod
    def from_dict(cls, desc: FieldDescriptor, coeffs: Mapping[tuple[int, int], object]) -> "BivariatePoly":
        """From ``{(i, j): scalar}`` with ints, Fractions or FieldElements."""
        terms: dict = {}
        for k, v in coeffs.items():
            r = desc.coerce_raw(v)
            terms[k] = desc.add(terms[k], r) if k in terms else r
        return cls(desc, terms)

    @classmethod
    def constant(cls, desc: FieldDescriptor, c) -> "BivariatePoly":
        return cls(desc, {(0, 0): desc.coerce_raw(c)})

    @classmethod
    def x(cls, desc: FieldDescriptor = QQ) -> "BivariatePoly":
        return cls(desc, {(1, 0): desc.one_raw()})

    @classmethod
    def y(cls, desc: FieldDescriptor = QQ) -> "BivariatePoly":
        return cls(desc, {(0, 1): desc.one_raw()})

    # -- inspection --------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def degree(self) -> int | None:
        """Total degree, ``None`` for the zero polynomial."""
        return max((i + j for i, j in self.terms), default=None)

    def degree_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def degree_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def coeff(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.desc, self.terms.get((i, j), self.desc.zero_raw()))

    def coefficients(self) -> dict[tuple[int, int], FieldElement]:
        return {k: FieldElement(self.desc, v) for k, v in self.terms.items()}

    def is_homogeneous(self, k: int) -> bool:
        return bool(self.terms) and all(i + j == k for i, j in self.terms)

    def low_degree(self) -> int | None:
        """Degree of the lowest nonzero homogeneous part."""
        return min((i + j for i, j in self.terms), default=None)

    def y_coeffs(self) -> list[list]:
        """``[f_0, f_1, ...]`` with ``F = sum f_j(X) Y^j``; each ``f_j`` a raw
        coefficient list in ``X`` (low to high)."""
        dy = self.degree_y()
        out = [[] for _ in range(dy + 1)]
        zero = self.desc.zero_raw()
        for (i, j), c in self.terms.items():
            row = out[j]
            if len(row) <= i:
                row.extend([zero] * (i + 1 - len(row)))
            row[i] = c
        return out

    def x_coeffs(self) -> list[list]:
        """``[g_0, g_1, ...]`` with ``F = sum X^i g_i(Y)``; each ``g_i`` a raw
        coefficient list in ``Y``."""
        dx = self.degree_x()
        out = [[] for _ in range(dx + 1)]
        zero = self.desc.zero_raw()
        for (i, j), c in self.terms.items():
            row = out[i]
            if len(row) <= j:
                row.extend([zero] * (j + 1 - len(row)))
            row[j] = c
        return out

    # -- arithmetic ----------------------------------------------------------------
    def _coerce(self, other) -> "BivariatePoly":
        if isinstance(other, BivariatePoly):
            if other.desc != self.desc:
                if self.desc.is_extension and other.desc == self.desc.base:
                    return other.change_field(self.desc)
                raise FieldError(f"polynomial over {other.desc} combined with {self.desc}")
            return other
        if isinstance(other, (int, Fraction, FieldElement)):
            return BivariatePoly.constant(self.desc, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        terms = dict(self.terms)
        add = self.desc.add
        for k, v in o.terms.items():
            terms[k] = add(terms[k], v) if k in terms else v
        return BivariatePoly(self.desc, terms)

    __radd__ = __add__

    def __neg__(self):
        neg = self.desc.neg
        return BivariatePoly(self.desc, {k: neg(v) for k, v in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        desc = self.desc
        add, mul = desc.add, desc.mul
        terms: dict = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in o.terms.items():
                k = (i1 + i2, j1 + j2)
                p = mul(a, b)
                terms[k] = add(terms[k], p) if k in terms else p
        return BivariatePoly(desc, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BivariatePoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = BivariatePoly.constant(self.desc, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "BivariatePoly":
        r = self.desc.coerce_raw(c)
        return BivariatePoly(self.desc, {k: self.desc.mul(v, r) for k, v in self.terms.items()})

    def change_field(self, desc: FieldDescriptor) -> "BivariatePoly":
        return BivariatePoly(desc, {k: desc.coerce_raw(FieldElement(self.desc, v)) for k, v in self.terms.items()})

    def truncate_x(self, n: int) -> "BivariatePoly":
        """Drop every term of X-degree ``>= n``."""
        return BivariatePoly(self.desc, {k: v for k, v in self.terms.items() if k[0] < n})

    # -- evaluation / substitution ---------------------------------------------------
    def evaluate(self, x, y) -> FieldElement:
        desc = self.desc
        xr, yr = desc.coerce_raw(x), desc.coerce_raw(y)
        acc = desc.zero_raw()
        for (i, j), c in self.terms.items():
            acc = desc.add(acc, desc.mul(c, desc.mul(desc.pow(xr, i), desc.pow(yr, j))))
        return FieldElement(desc, acc)

    def substitute(self, px: "BivariatePoly", py: "BivariatePoly") -> "BivariatePoly":
        """``F(px(X,Y), py(X,Y))``."""
        px, py = self._coerce(px), self._coerce(py)
        xp = [BivariatePoly.constant(self.desc, 1)]
        yp = [BivariatePoly.constant(self.desc, 1)]
        for _ in range(self.degree_x()):
            xp.append(xp[-1] * px)
        for _ in range(self.degree_y()):
            yp.append(yp[-1] * py)
        out = BivariatePoly(self.desc)
        for (i, j), c in self.terms.items():
            out = out + (xp[i] * yp[j]).scale(FieldElement(self.desc, c))
        return out

    def eval_series(self, sx: TruncatedSeries, sy: TruncatedSeries) -> TruncatedSeries:
        """``F(sx(T), sy(T))`` as a truncated series in ``T``."""
        desc = self.desc
        prec = min(sx.prec, sy.prec)
        if not self.terms:
            return TruncatedSeries.zero(desc, prec + 1)
        cols = self.y_coeffs()
        xpow = [TruncatedSeries.constant(desc, 1, prec + (self.degree or 0))]
        for _ in range(self.degree_x()):
            xpow.append(xpow[-1] * sx)

        def in_x(row):
            acc = None
            for i, c in enumerate(row):
                if desc.is_zero(c):
                    continue
                term = xpow[i].scale(FieldElement(desc, c))
                acc = term if acc is None else acc + term
            return acc

        acc = None
        for row in reversed(cols):
            if acc is not None:
                acc = acc * sy
            part = in_x(row)
            if part is not None:
                acc = part if acc is None else acc + part
        return acc

    def restrict_y(self, y0) -> list:
        """Raw coefficients (in X) of ``F(X, y0)``."""
        desc = self.desc
        yr = desc.coerce_raw(y0)
        out = [desc.zero_raw()] * (self.degree_x() + 1)
        for (i, j), c in self.terms.items():
            out[i] = desc.add(out[i], desc.mul(c, desc.pow(yr, j)))
        return out

    def at_x0(self) -> list:
        """Raw coefficients (in Y) of ``F(0, Y)``."""
        desc = self.desc
        out = [desc.zero_raw()] * (self.degree_y() + 1)
        for (i, j), c in self.terms.items():
            if i == 0:
                out[j] = c
        return out

    # -- comparison / rendering --------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, BivariatePoly):
            return self.desc == other.desc and self.terms == other.terms
        if isinstance(other, (int, Fraction, FieldElement)):
            return self == BivariatePoly.constant(self.desc, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.desc, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[tuple[int, int], object]]:
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], -kv[0][1]))

    def format(self) -> str:
        if not self.terms:
            return "0"
        desc = self.desc
        pieces = []
        for (i, j), c in self.sorted_terms():
            mon = "*".join(
                p for p in (
                    "" if i == 0 else "X" if i == 1 else f"X^{i}",
                    "" if j == 0 else "Y" if j == 1 else f"Y^{j}",
                ) if p
            )
            neg = False
            if desc.kind == RATIONALS and c < 0:
                neg, c = True, -c
            s = desc.format_raw(c)
            if desc.is_extension and s.startswith("("):
                body = s if not mon else f"{s}*{mon}"
            elif not mon:
                body = s
            elif s == "1":
                body = mon
            else:
                body = f"{s}*{mon}"
            pieces.append((neg, body))
        out = ("-" if pieces[0][0] else "") + pieces[0][1]
        for neg, body in pieces[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"BivariatePoly({self.desc}, {self.format()})"


@dataclass(frozen=True)
class AffinePoint:
    x: FieldElement
    y: FieldElement

    @classmethod
    def of(cls, desc: FieldDescriptor, x, y) -> "AffinePoint":
        return cls(desc(x), desc(y))

    def __neg__(self) -> "AffinePoint":
        return AffinePoint(-self.x, -self.y)

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


@dataclass(frozen=True)
class LinearForm:
    """The line ``a*X + b*Y = 0`` normalised so the first nonzero of
    ``(a, b)`` is 1."""

    a: FieldElement
    b: FieldElement

    def __post_init__(self):
        if self.a.is_zero() and self.b.is_zero():
            raise ValueError("linear form (0, 0) does not define a line")
        lead = self.a if not self.a.is_zero() else self.b
        if lead != 1:
            object.__setattr__(self, "a", self.a / lead)
            object.__setattr__(self, "b", self.b / lead)

    @classmethod
    def of(cls, desc: FieldDescriptor, a, b) -> "LinearForm":
        return cls(desc(a), desc(b))

    @classmethod
    def slope(cls, desc: FieldDescriptor, s) -> "LinearForm":
        """The line ``Y - s*X = 0``."""
        return cls(-desc(s), desc.one())

    @property
    def desc(self) -> FieldDescriptor:
        return self.a.desc

    def as_poly(self) -> BivariatePoly:
        return BivariatePoly(self.desc, {(1, 0): self.a.raw, (0, 1): self.b.raw})

    def change_field(self, desc: FieldDescriptor) -> "LinearForm":
        return LinearForm(desc(self.a), desc(self.b))

    def slope_value(self) -> FieldElement | None:
        """``s`` with the line equal to ``Y = s*X``; ``None`` for ``X = 0``."""
        if self.b.is_zero():
            return None
        return -self.a / self.b

    def __str__(self) -> str:
        # up to a scalar: "Y + k*X" when Y occurs, else "X"
        if self.b.is_zero():
            return "X"
        k = self.a / self.b
        if k.is_zero():
            return "Y"
        s = str(k)
        if s in ("1", "-1"):
            return f"Y {s[0] if s == '-1' else '+'} X"
        if s.startswith("-") and " " not in s:
            return f"Y - {s[1:]}*X"
        return f"Y + {s}*X"


@dataclass(frozen=True)
class BinarySplit:
    """``Q = const * l1 * l2``."""

    l1: LinearForm
    l2: LinearForm
    distinct: bool
    const: FieldElement


@dataclass(frozen=True)
class LineRestriction:
    """``F`` restricted to a line: ``Y = slope*X`` (``variable == "X"``) or
    ``X = 0`` (``variable == "Y"``)."""

    variable: str
    coeffs: tuple[FieldElement, ...]

    def ord(self) -> int | None:
        """Order of vanishing, ``None`` when identically zero."""
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                return k
        return None


# -- module-level operations ----------------------------------------------------------------


def homogeneous_part(F: BivariatePoly, k: int) -> BivariatePoly:
    return BivariatePoly(F.desc, {key: v for key, v in F.terms.items() if key[0] + key[1] == k})


def translate_to_origin(F: BivariatePoly, p: AffinePoint) -> BivariatePoly:
    """``F(X + p.x, Y + p.y)``: the point ``p`` moves to the origin."""
    desc = F.desc
    X, Y = BivariatePoly.x(desc), BivariatePoly.y(desc)
    if p.x.is_zero() and p.y.is_zero():
        return F
    return F.substitute(X + p.x, Y + p.y)


def linear_change(F: BivariatePoly, m11, m12, m21, m22) -> BivariatePoly:
    """``F(m11*X + m12*Y, m21*X + m22*Y)`` for an invertible matrix."""
    desc = F.desc
    m11, m12, m21, m22 = (desc(m) for m in (m11, m12, m21, m22))
    if (m11 * m22 - m12 * m21).is_zero():
        raise ValueError("singular linear change of coordinates")
    X, Y = BivariatePoly.x(desc), BivariatePoly.y(desc)
    return F.substitute(X.scale(m11) + Y.scale(m12), X.scale(m21) + Y.scale(m22))


def _extension_class(desc: FieldDescriptor, disc: FieldElement) -> FieldElement:
    if desc.kind == RATIONALS:
        return desc(squarefree_rational(disc.raw))
    return disc


def split_binary_quadratic(Q: BivariatePoly) -> BinarySplit:
    """Factor a binary quadratic form into linear forms.

    The dehomogenised quadratic is solved in ``Y/X`` when the ``Y^2``
    coefficient is nonzero, otherwise in ``X/Y``.  Raises
    :class:`NeedsExtension` (carrying a representative of the discriminant's
    square class) when the roots are not in the field.
    """
    if not Q.is_homogeneous(2):
        raise ValueError("split_binary_quadratic needs a nonzero form of degree 2")
    desc = Q.desc
    al, be, ga = Q.coeff(2, 0), Q.coeff(1, 1), Q.coeff(0, 2)
    if not ga.is_zero():
        # ga*(Y - r1 X)(Y - r2 X), r roots of ga*L^2 + be*L + al
        disc = be * be - 4 * al * ga
        s = disc.sqrt()
        if s is None:
            raise NeedsExtension(_extension_class(desc, disc))
        r1 = (-be + s) / (2 * ga)
        r2 = (-be - s) / (2 * ga)
        l1, l2 = LinearForm.slope(desc, r1), LinearForm.slope(desc, r2)
        distinct = not disc.is_zero()
    elif not al.is_zero():
        # al*X*(X + be/al Y)
        l1 = LinearForm(desc.one(), desc.zero())
        l2 = LinearForm(desc.one(), be / al)
        distinct = not be.is_zero()
    else:
        l1, l2, distinct = LinearForm(desc.one(), desc.zero()), LinearForm(desc.zero(), desc.one()), True
    # normalising the forms rescales them; recover the constant from Y^2, XY or X^2
    prod = l1.as_poly() * l2.as_poly()
    key = next(k for k in ((0, 2), (1, 1), (2, 0)) if not Q.coeff(*k).is_zero())
    return BinarySplit(l1, l2, distinct, Q.coeff(*key) / prod.coeff(*key))


def restrict_to_line(F: BivariatePoly, l: LinearForm) -> LineRestriction:
    """Substitute the parametrisation of the line through the origin.

    ``Y = s*X`` when the line is not the Y-axis (coefficients in X),
    otherwise ``X = 0`` (coefficients in Y).
    """
    desc = F.desc
    if not l.b.is_zero():
        s = l.slope_value()
        out = [desc.zero()] * ((F.degree or 0) + 1)
        for (i, j), c in F.terms.items():
            out[i + j] = out[i + j] + FieldElement(desc, c) * s ** j
        return LineRestriction("X", tuple(out))
    out = [desc.zero()] * (F.degree_y() + 1 if F.terms else 1)
    for (i, j), c in F.terms.items():
        if i == 0:
            out[j] = FieldElement(desc, c)
    return LineRestriction("Y", tuple(out))


def partials(F: BivariatePoly) -> tuple[BivariatePoly, BivariatePoly]:
    desc = F.desc
    fx, fy = {}, {}
    for (i, j), c in F.terms.items():
        if i:
            fx[(i - 1, j)] = desc.mul(desc.coerce_raw(i), c)
        if j:
            fy[(i, j - 1)] = desc.mul(desc.coerce_raw(j), c)
    return BivariatePoly(desc, fx), BivariatePoly(desc, fy)


def divmod_poly(H: BivariatePoly, F: BivariatePoly) -> tuple[BivariatePoly, BivariatePoly]:
    """Multivariate division of ``H`` by ``F`` in lex order ``Y > X``.

    A single divisor is a Groebner basis of the ideal it generates, so the
    remainder is zero exactly when ``F`` divides ``H``.
    """
    if F.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    desc = F.desc
    H = F._coerce(H)
    key = lambda m: (m[1], m[0])  # noqa: E731
    lm = max(F.terms, key=key)
    lc_inv = desc.inv(F.terms[lm])
    rem = dict(H.terms)
    quot: dict = {}
    out_rem: dict = {}
    while rem:
        m = max(rem, key=key)
        c = rem.pop(m)
        if m[0] >= lm[0] and m[1] >= lm[1]:
            shift = (m[0] - lm[0], m[1] - lm[1])
            q = desc.mul(c, lc_inv)
            quot[shift] = q
            for (i, j), f in F.terms.items():
                if (i, j) == lm:
                    continue
                k = (i + shift[0], j + shift[1])
                v = desc.sub(rem.get(k, desc.zero_raw()), desc.mul(q, f))
                if desc.is_zero(v):
                    rem.pop(k, None)
                else:
                    rem[k] = v
        else:
            out_rem[m] = c
    return BivariatePoly(desc, quot), BivariatePoly(desc, out_rem)


def divides(F: BivariatePoly, H: BivariatePoly) -> bool:
    """True iff ``F`` divides ``H`` exactly in ``K[X, Y]``."""
    if F.is_zero():
        raise ValueError("divides needs a nonzero divisor")
    return divmod_poly(H, F)[1].is_zero()


# -- univariate helpers (raw coefficient lists, low to high) -----------------------------------


def _utrim(desc, a: list) -> list:
    a = list(a)
    while a and desc.is_zero(a[-1]):
        a.pop()
    return a


def _uadd(desc, a, b):
    n = max(len(a), len(b))
    z = desc.zero_raw()
    return _utrim(desc, [desc.add(a[i] if i < len(a) else z, b[i] if i < len(b) else z) for i in range(n)])


def _uneg(desc, a):
    return [desc.neg(c) for c in a]


def _umul(desc, a, b):
    if not a or not b:
        return []
    out = [desc.zero_raw()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if desc.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = desc.add(out[i + j], desc.mul(x, y))
    return _utrim(desc, out)


def _udivmod(desc, a, b):
    a, b = _utrim(desc, a), _utrim(desc, b)
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    inv = desc.inv(b[-1])
    q = [desc.zero_raw()] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b) and r:
        k = len(r) - len(b)
        c = desc.mul(r[-1], inv)
        q[k] = c
        for i, y in enumerate(b):
            r[i + k] = desc.sub(r[i + k], desc.mul(c, y))
        r = _utrim(desc, r)
    return _utrim(desc, q), r


def _uexact_div(desc, a, b):
    q, r = _udivmod(desc, a, b)
    if r:
        raise ArithmeticError("inexact univariate division in fraction-free elimination")
    return q


def upoly_gcd(desc: FieldDescriptor, a: Sequence, b: Sequence) -> list:
    """Monic gcd of raw univariate coefficient lists."""
    a, b = _utrim(desc, a), _utrim(desc, b)
    while b:
        a, b = b, _udivmod(desc, a, b)[1]
    if not a:
        return []
    inv = desc.inv(a[-1])
    return [desc.mul(c, inv) for c in a]


def upoly_ord(desc: FieldDescriptor, a: Sequence) -> int | None:
    for k, c in enumerate(a):
        if not desc.is_zero(c):
            return k
    return None


def _bareiss_det(desc, M: list[list[list]]) -> list:
    """Fraction-free determinant of a square matrix of univariate polynomials."""
    n = len(M)
    if n == 0:
        return [desc.one_raw()]
    M = [[list(e) for e in row] for row in M]
    sign = 1
    prev = [desc.one_raw()]
    for k in range(n - 1):
        if not M[k][k]:
            for r in range(k + 1, n):
                if M[r][k]:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return []
        piv = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _uadd(desc, _umul(desc, M[i][j], piv), _uneg(desc, _umul(desc, M[i][k], M[k][j])))
                M[i][j] = _uexact_div(desc, num, prev)
            M[i][k] = []
        prev = piv
    det = M[n - 1][n - 1]
    return det if sign == 1 else _uneg(desc, det)


def resultant_y(F: BivariatePoly, H: BivariatePoly) -> list[FieldElement]:
    """Resultant of ``F`` and ``H`` as polynomials in ``Y``; coefficients in
    ``X`` from low to high (empty list for the zero resultant).

    Convention: the determinant of the Sylvester matrix whose first
    ``deg_Y H`` rows hold the coefficients of ``F`` (highest power first),
    followed by ``deg_Y F`` rows of ``H``.
    """
    H = F._coerce(H)
    desc = F.desc
    fc, hc = F.y_coeffs(), H.y_coeffs()
    m, n = len(fc) - 1, len(hc) - 1
    if m < 1 or n < 1:
        raise ValueError("resultant_y needs positive Y-degree in both polynomials")
    size = m + n
    rows = []
    for r in range(n):
        row = [[] for _ in range(size)]
        for k in range(m + 1):
            row[r + k] = _utrim(desc, fc[m - k])
        rows.append(row)
    for r in range(m):
        row = [[] for _ in range(size)]
        for k in range(n + 1):
            row[r + k] = _utrim(desc, hc[n - k])
        rows.append(row)
    det = _bareiss_det(desc, rows)
    return [FieldElement(desc, c) for c in det]
