"""Exact q-arithmetic: q-integers, q-binomials, q-multinomials and their
values at roots of unity.

Three value types live here:

``IntPoly``
    dense integer polynomial in q, little-endian, trailing zeros trimmed.
``QExpr``
    ``scalar * q**qpower * prod([j] for j in num) / prod([j] for j in den)``,
    kept unexpanded so it can be evaluated at roots of unity as a limit.
``CycInt``
    an element of Z[zeta_M] stored as a residue modulo the M-th cyclotomic
    polynomial, with zeta_M = exp(2*pi*i/M) as the reference embedding.
"""

from __future__ import annotations

import functools
import math
import threading
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

import mpmath

from . import kernels
from .errors import (
    Indeterminate,
    NonIntegerEvaluation,
    NonPolynomial,
    NotRational,
    PoleError,
)

POSITIVITY_MARGIN = 1e-9


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial in q; ``coeffs[i]`` is the coefficient of q**i."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "IntPoly":
        return cls((0,) * e + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other):
        o = _as_poly(other)
        if o is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return IntPoly(tuple(self[i] + o[i] for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = _as_poly(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        if isinstance(other, IntPoly):
            return IntPoly(tuple(kernels.poly_mul(list(self.coeffs), list(other.coeffs))))
        return NotImplemented

    __rmul__ = __mul__

    def shift(self, e: int) -> "IntPoly":
        """Multiply by q**e."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * e + self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def rem_monic(self, m: "IntPoly") -> "IntPoly":
        return IntPoly(tuple(kernels.poly_rem_monic(list(self.coeffs), list(m.coeffs))))

    def divexact_monic(self, m: "IntPoly") -> "IntPoly":
        """Exact quotient by a monic polynomial; raises NonPolynomial otherwise."""
        dm = m.degree
        rem = list(self.coeffs)
        if len(rem) <= dm:
            if any(rem):
                raise NonPolynomial("remainder in monic division")
            return IntPoly()
        quot = [0] * (len(rem) - dm)
        for k in range(len(rem) - 1, dm - 1, -1):
            c = rem[k]
            if c:
                quot[k - dm] = c
                for t in range(dm + 1):
                    rem[k - dm + t] -= c * m.coeffs[t]
        if any(rem):
            raise NonPolynomial("remainder in monic division")
        return IntPoly(tuple(quot))

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> "IntPoly":
        return cls(tuple(int(c) for c in data["coeffs"]))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' if mono else ''}{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def _as_poly(x):
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly((x,))
    return NotImplemented


# ---------------------------------------------------------------------------
# q-integers and q-binomials


def q_int(n: int) -> IntPoly:
    """[n]_q = 1 + q + ... + q**(n-1)."""
    if n <= 0:
        raise ValueError(f"q_int needs n >= 1, got {n}")
    return IntPoly((1,) * n)


_pascal_rows: list[list[tuple[int, ...]]] = [[(1,)]]
_pascal_lock = threading.Lock()


def q_binom(n: int, k: int) -> IntPoly:
    """Gaussian binomial [n choose k]_q via the q-Pascal rule.

    [n, k] = [n-1, k-1] + q**k [n-1, k]
    """
    if n < 0 or k < 0:
        raise ValueError("q_binom needs nonnegative arguments")
    if k > n:
        raise ValueError(f"q_binom needs k <= n, got n={n}, k={k}")
    with _pascal_lock:
        while len(_pascal_rows) <= n:
            prev = _pascal_rows[-1]
            m = len(prev)
            row = [(1,)]
            for j in range(1, m):
                left = prev[j - 1]
                right = prev[j]
                size = max(len(left), len(right) + j)
                c = [0] * size
                for t, v in enumerate(left):
                    c[t] += v
                for t, v in enumerate(right):
                    c[t + j] += v
                row.append(tuple(c))
            row.append((1,))
            _pascal_rows.append(row)
        return IntPoly(_pascal_rows[n][k])


def _mul_qint(p: list[int], j: int) -> list[int]:
    """p * [j]_q as a sliding-window sum."""
    if j == 1 or not p:
        return list(p)
    out = [0] * (len(p) + j - 1)
    run = 0
    for t in range(len(out)):
        if t < len(p):
            run += p[t]
        if t - j >= 0 and t - j < len(p):
            run -= p[t - j]
        out[t] = run
    return out


# ---------------------------------------------------------------------------
# Cyclotomic polynomials and Z[zeta_M]


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> IntPoly:
    """Phi_m, by dividing q**m - 1 by Phi_d for every proper divisor d."""
    if m < 1:
        raise ValueError("cyclotomic order must be positive")
    p = IntPoly((-1,) + (0,) * (m - 1) + (1,))
    for d in divisors(m)[:-1]:
        p = p.divexact_monic(cyclotomic_poly(d))
    return p


Number = Union[int, "CycInt"]


@dataclass(frozen=True)
class CycInt:
    """Element of Z[zeta_M]; ``coeffs`` has length phi(M) exactly."""

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != euler_phi(self.order):
            raise ValueError(
                f"CycInt of order {self.order} needs {euler_phi(self.order)} coefficients"
            )

    # construction ---------------------------------------------------------

    @classmethod
    def from_poly(cls, coeffs: Sequence[int], order: int) -> "CycInt":
        """Reduce a polynomial in zeta_M modulo Phi_M."""
        phi = cyclotomic_poly(order)
        red = kernels.poly_rem_monic([int(c) for c in coeffs], list(phi.coeffs))
        return cls(order, tuple(red))

    @classmethod
    def from_int(cls, a: int, order: int = 1) -> "CycInt":
        return cls(order, (a,) + (0,) * (euler_phi(order) - 1))

    @classmethod
    def zeta(cls, order: int, e: int = 1) -> "CycInt":
        e %= order
        return cls.from_poly((0,) * e + (1,), order)

    @classmethod
    def lam(cls, p: int, order: int | None = None) -> "CycInt":
        """lambda_p = 2 cos(pi/p) = zeta_{2p} + zeta_{2p}**-1."""
        if p < 1:
            raise ValueError("lambda_p needs p >= 1")
        m = 2 * p
        order = m if order is None else order
        if order % m:
            raise ValueError(f"lambda_{p} needs 2p | order, got order {order}")
        step = order // m
        return cls.zeta(order, step) + cls.zeta(order, -step)

    # structure ------------------------------------------------------------

    def promote(self, order: int) -> "CycInt":
        """Lift into Z[zeta_order]; requires self.order | order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot promote order {self.order} to {order}")
        step = order // self.order
        poly = [0] * ((len(self.coeffs) - 1) * step + 1)
        for i, c in enumerate(self.coeffs):
            poly[i * step] = c
        return CycInt.from_poly(poly, order)

    def galois(self, k: int) -> "CycInt":
        """Apply zeta -> zeta**k (k coprime to the order)."""
        if math.gcd(k, self.order) != 1:
            raise ValueError("Galois exponent must be coprime to the order")
        poly = [0] * self.order
        for i, c in enumerate(self.coeffs):
            poly[(i * k) % self.order] += c
        return CycInt.from_poly(poly, self.order)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def embed_rational(self) -> int:
        if not self.is_rational():
            raise NotRational(f"{self!s} is not a rational integer")
        return self.coeffs[0]

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> tuple["CycInt", "CycInt"]:
        if isinstance(other, int):
            return self, CycInt.from_int(other, self.order)
        if isinstance(other, CycInt):
            if other.order == self.order:
                return self, other
            m = math.lcm(self.order, other.order)
            return self.promote(m), other.promote(m)
        raise TypeError(f"cannot combine CycInt with {type(other).__name__}")

    def __add__(self, other):
        if not isinstance(other, (int, CycInt)):
            return NotImplemented
        a, b = self._coerce(other)
        return CycInt(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, (int, CycInt)):
            return NotImplemented
        a, b = self._coerce(other)
        return CycInt(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.order, tuple(c * other for c in self.coeffs))
        if not isinstance(other, CycInt):
            return NotImplemented
        a, b = self._coerce(other)
        prod = kernels.poly_mul(list(a.coeffs), list(b.coeffs))
        return CycInt.from_poly(prod, a.order)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = CycInt.from_int(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, CycInt):
            a, b = self._coerce(other)
            return a.coeffs == b.coeffs
        return NotImplemented

    def __hash__(self):
        # equal values of different orders must collide; hash the rational
        # part only when rational, else the canonical coefficient vector
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    # embeddings -----------------------------------------------------------

    def to_complex(self, dps: int = 30) -> mpmath.mpc:
        with mpmath.workdps(dps + 5):
            z = mpmath.expjpi(mpmath.mpf(2) / self.order)
            acc = mpmath.mpc(0)
            for c in reversed(self.coeffs):
                acc = acc * z + c
            return acc

    def to_real_approx(self, precision: int = 30) -> tuple[float, float]:
        """Real value and an absolute error bound at ``precision`` digits."""
        bound = (sum(abs(c) for c in self.coeffs) + 1) * 10.0 ** (-precision)
        with mpmath.workdps(precision + 5):
            val = self.to_complex(precision)
            if abs(val.imag) > max(bound, 1e-12) * 10:
                raise ValueError(f"{self!s} is not real")
            return float(val.real), bound

    def is_positive(self) -> bool:
        x, _ = self.to_real_approx(30)
        if abs(x) < POSITIVITY_MARGIN:
            raise Indeterminate(f"sign of {self!s} within margin")
        return x > 0

    def __float__(self):
        return self.to_real_approx()[0]

    def as_sqrt2(self) -> tuple[int, int] | None:
        """Return (a, b) with self == a + b*sqrt(2), or None."""
        if self.is_rational():
            return self.coeffs[0], 0
        if self.order % 8:
            return None
        k = next(k for k in range(3, 8 * self.order, 2)
                 if math.gcd(k, self.order) == 1 and k % 8 in (3, 5))
        x1 = self.to_complex(30)
        x2 = self.galois(k).to_complex(30)
        if abs(x1.imag) > 1e-20 or abs(x2.imag) > 1e-20:
            return None
        a = int(mpmath.nint((x1.real + x2.real) / 2))
        b = int(mpmath.nint((x1.real - x2.real) / (2 * mpmath.sqrt(2))))
        if self == CycInt.lam(4, self.order) * b + a:
            return a, b
        return None

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> "CycInt":
        return cls(int(data["order"]), tuple(int(c) for c in data["coeffs"]))

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        ab = self.as_sqrt2()
        if ab is not None:
            a, b = ab
            root = "√2" if abs(b) == 1 else f"{abs(b)}√2"
            if a == 0:
                return root if b > 0 else "-" + root
            return f"{a}{'+' if b > 0 else '-'}{root}"
        return f"[{','.join(map(str, self.coeffs))}]@{self.order}"

    def __repr__(self):
        return f"CycInt({self!s})"


def as_cyc(x: Number, order: int = 1) -> CycInt:
    if isinstance(x, CycInt):
        return x if x.order == order or order == 1 else x.promote(math.lcm(x.order, order))
    return CycInt.from_int(int(x), order)


# ---------------------------------------------------------------------------
# Field arithmetic in Q(zeta_d), used only to divide inside eval_at_root


def _qpoly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _qpoly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(_qpoly_trim(a)) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
    return _qpoly_trim(q), a


def _qpoly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _qpoly_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _qpoly_trim([Fraction(x) for x in out])


def _field_inverse(z: CycInt) -> list[Fraction]:
    """Inverse of a nonzero z in Q(zeta_M) as rational coefficients."""
    mod = [Fraction(c) for c in cyclotomic_poly(z.order).coeffs]
    r0, r1 = mod, _qpoly_trim([Fraction(c) for c in z.coeffs])
    s0, s1 = [], [Fraction(1)]
    if not r1:
        raise ZeroDivisionError("inverse of zero in Q(zeta)")
    while len(r1) > 1:
        q, r = _qpoly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))
    c = r1[0]
    inv = [x / c for x in s1]
    _, rem = _qpoly_divmod(inv, mod)
    return rem


# ---------------------------------------------------------------------------
# QExpr


@dataclass(frozen=True)
class QExpr:
    """``scalar * q**qpower * prod [num] / prod [den]`` with cancellation."""

    scalar: int = 1
    qpower: int = 0
    num: tuple[int, ...] = ()
    den: tuple[int, ...] = ()

    def __post_init__(self):
        if self.qpower < 0:
            raise ValueError("qpower must be nonnegative")
        if any(j < 1 for j in self.num) or any(j < 1 for j in self.den):
            raise ValueError("q-integer indices must be positive")
        cn, cd = Counter(self.num), Counter(self.den)
        common = cn & cd
        cn -= common
        cd -= common
        cn.pop(1, None)
        cd.pop(1, None)
        object.__setattr__(self, "num", tuple(sorted(cn.elements())))
        object.__setattr__(self, "den", tuple(sorted(cd.elements())))

    def __mul__(self, other):
        if isinstance(other, int):
            return QExpr(self.scalar * other, self.qpower, self.num, self.den)
        if isinstance(other, QExpr):
            return QExpr(
                self.scalar * other.scalar,
                self.qpower + other.qpower,
                self.num + other.num,
                self.den + other.den,
            )
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: "QExpr"):
        if not isinstance(other, QExpr) or other.scalar not in (1, -1) or other.qpower:
            return NotImplemented
        return QExpr(self.scalar * other.scalar, self.qpower, self.num + other.den,
                     self.den + other.num)

    def times_qpower(self, e: int) -> "QExpr":
        return QExpr(self.scalar, self.qpower + e, self.num, self.den)

    def at_one(self) -> Fraction:
        v = Fraction(self.scalar)
        for j in self.num:
            v *= j
        for j in self.den:
            v /= j
        return v

    def is_polynomial(self) -> bool:
        """Cyclotomic-exponent test: Phi_d must not occur more often below."""
        top = max(self.num + self.den, default=1)
        for d in range(2, top + 1):
            up = sum(1 for j in self.num if j % d == 0)
            down = sum(1 for j in self.den if j % d == 0)
            if down > up:
                return False
        return True

    def to_json(self) -> dict:
        return {"scalar": self.scalar, "qpower": self.qpower,
                "num": list(self.num), "den": list(self.den)}

    @classmethod
    def from_json(cls, data: dict) -> "QExpr":
        return cls(int(data["scalar"]), int(data["qpower"]),
                   tuple(int(j) for j in data["num"]), tuple(int(j) for j in data["den"]))

    def __str__(self):
        parts = []
        if self.scalar != 1 or not (self.num or self.qpower):
            parts.append(str(self.scalar))
        if self.qpower:
            parts.append(f"q^{self.qpower}")
        parts.extend(f"[{j}]" for j in self.num)
        s = "*".join(parts) or "1"
        if self.den:
            s += " / (" + "*".join(f"[{j}]" for j in self.den) + ")"
        return s


@dataclass(frozen=True)
class QSum:
    """Finite sum of QExpr terms (e.g. a sum over spoke counts)."""

    terms: tuple[QExpr, ...]

    def at_one(self) -> Fraction:
        return sum((t.at_one() for t in self.terms), Fraction(0))

    def to_json(self) -> dict:
        return {"terms": [t.to_json() for t in self.terms]}


QLike = Union[QExpr, QSum]


def q_binom_expr(n: int, k: int) -> QExpr:
    if k < 0 or k > n:
        raise ValueError(f"q_binom needs 0 <= k <= n, got n={n}, k={k}")
    return QExpr(1, 0, tuple(range(n - k + 1, n + 1)), tuple(range(1, k + 1)))


def q_multinomial(k: int, parts: Sequence[int]) -> QExpr:
    """[k; parts]_q as a QExpr."""
    if any(p < 0 for p in parts):
        raise ValueError("multinomial parts must be nonnegative")
    if sum(parts) != k:
        raise ValueError(f"parts sum to {sum(parts)}, expected {k}")
    den: list[int] = []
    for p in parts:
        den.extend(range(1, p + 1))
    return QExpr(1, 0, tuple(range(1, k + 1)), tuple(den))


def expand(e: QLike) -> IntPoly:
    """Multiply out a QExpr; raises NonPolynomial if a division is inexact."""
    if isinstance(e, QSum):
        total = IntPoly()
        for t in e.terms:
            total = total + expand(t)
        return total
    p = [1]
    for j in e.num:
        p = _mul_qint(p, j)
    for j in sorted(e.den, reverse=True):
        p, exact = kernels.poly_div_qint(p, j)
        if not exact:
            raise NonPolynomial(f"{e} is not a polynomial in q")
    return IntPoly(tuple(p)).shift(e.qpower) * e.scalar


def _qint_at_root(r: int, d: int) -> CycInt:
    """[r]_q at q = zeta_d."""
    return CycInt.from_poly((1,) * r, d)


def eval_at_root(e: QLike, d: int) -> CycInt:
    """Exact limit of e as q -> zeta_d, as an element of Z[zeta_d]."""
    if d < 1:
        raise ValueError("root order must be positive")
    if isinstance(e, QSum):
        total = CycInt.from_int(0, d)
        for t in e.terms:
            total = total + eval_at_root(t, d)
        return total
    zero_num = [j for j in e.num if j % d == 0]
    zero_den = [j for j in e.den if j % d == 0]
    if d > 1 and len(zero_num) > len(zero_den):
        return CycInt.from_int(0, d)
    if d > 1 and len(zero_den) > len(zero_num):
        raise PoleError(f"{e} has a pole at zeta_{d}")
    ratio = Fraction(e.scalar)
    for j in zero_num:
        ratio *= Fraction(j, d)
    for j in zero_den:
        ratio /= Fraction(j, d)
    # [g]/[h] -> 1 when g = h (mod d) and d does not divide either
    rest_num = Counter(j % d for j in e.num if j % d)
    rest_den = Counter(j % d for j in e.den if j % d)
    common = rest_num & rest_den
    rest_num -= common
    rest_den -= common
    top = CycInt.zeta(d, e.qpower)
    for r in rest_num.elements():
        top = top * _qint_at_root(r, d)
    bottom = CycInt.from_int(1, d)
    for r in rest_den.elements():
        bottom = bottom * _qint_at_root(r, d)
    if bottom == 1:
        coeffs = [ratio * c for c in top.coeffs]
    else:
        inv = _field_inverse(bottom)
        prod = _qpoly_mul([Fraction(c) for c in top.coeffs], inv)
        _, rem = _qpoly_divmod(prod, [Fraction(c) for c in cyclotomic_poly(d).coeffs])
        rem = rem + [Fraction(0)] * (len(top.coeffs) - len(rem))
        coeffs = [ratio * c for c in rem]
    if any(c.denominator != 1 for c in coeffs):
        raise NonIntegerEvaluation(f"{e} at zeta_{d} is not an algebraic integer here")
    return CycInt(d, tuple(int(c) for c in coeffs))


def eval_int_at_root(e: QLike, d: int) -> int:
    """eval_at_root, required to be a rational integer."""
    z = eval_at_root(e, d)
    try:
        return z.embed_rational()
    except NotRational as exc:
        raise NonIntegerEvaluation(str(exc)) from exc


def poly_at_root(p: IntPoly, d: int) -> CycInt:
    """p(zeta_d) by remainder modulo Phi_d."""
    return CycInt.from_poly(p.coeffs, d)


def reduce_mod_qn_minus_1(p: IntPoly, n: int) -> IntPoly:
    if n < 1:
        raise ValueError("n must be positive")
    out = [0] * n
    for i, c in enumerate(p.coeffs):
        out[i % n] += c
    return IntPoly(tuple(out))


def reduced_coeffs(p: IntPoly, n: int) -> list[int]:
    """The n coefficients g_0..g_{n-1} of p mod q**n - 1 (untrimmed)."""
    r = reduce_mod_qn_minus_1(p, n)
    return [r[i] for i in range(n)]
