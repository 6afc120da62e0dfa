"""Frieze patterns over cyclotomic integers.

A frieze is determined by its quiddity row ``c`` (``c[i] = F(i-1, i+1)``):

    F(i, i) = 0,  F(i, i+1) = 1,  F(i, j) = K(c[i+1], ..., c[j-1])

where ``K`` is the continuant with recursion ``K_n = x_n K_{n-1} - K_{n-2}``.
This minus sign is what makes the diamond rule hold; the plain continuant
(``+``) is exposed as well because it is the textbook object.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import kernels
from .dissect import Dissection, rotate as rotate_polygon
from .errors import NonConstant, NotSymmetric, NotTriangulation, OutOfBand, UnsupportedOrder
from .punctured import PuncturedDissection, window_lift
from .qcalc import CycInt, as_cyc


def continuant(xs: Sequence, sign: int = 1):
    """K_0 = 1, K_1 = x_1, K_n = x_n K_{n-1} + sign * K_{n-2}."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return kernels.continuant(list(xs), sign)


def lam(p: int, order: int | None = None) -> CycInt:
    """2 cos(pi/p) in Z[zeta_{2p}] (or a larger ring)."""
    return CycInt.lam(p, order)


def ring_order(sizes: Iterable[int]) -> int:
    M = 6
    for p in sizes:
        M = math.lcm(M, 2 * p)
    return M


def minimal_period(row: Sequence) -> int:
    n = len(row)
    for j in range(1, n + 1):
        if n % j == 0 and all(row[i] == row[(i + j) % n] for i in range(n)):
            return j
    return n


@dataclass(frozen=True)
class _Quiddity:
    """Shared machinery: cyclic quiddity row in one ring Z[zeta_M]."""

    quiddity: tuple[CycInt, ...]
    order: int = field(default=0)

    def __post_init__(self):
        q = tuple(self.quiddity)
        if not q:
            raise ValueError("quiddity row must be nonempty")
        M = self.order or 1
        for x in q:
            if isinstance(x, CycInt):
                M = math.lcm(M, x.order)
        q = tuple(as_cyc(x, 1).promote(M) if isinstance(x, CycInt) else CycInt.from_int(x, M)
                  for x in q)
        object.__setattr__(self, "quiddity", q)
        object.__setattr__(self, "order", M)
        ints = None
        if all(x.is_rational() for x in q):
            ints = tuple(x.coeffs[0] for x in q)
        object.__setattr__(self, "_ints", ints)

    @property
    def period(self) -> int:
        return len(self.quiddity)

    def entry(self, i: int) -> CycInt:
        return self.quiddity[i % self.period]

    def _raw(self, i: int, j: int) -> CycInt:
        if j < i:
            raise ValueError(f"entry ({i},{j}) lies above the zero row")
        if j == i:
            return CycInt.from_int(0, self.order)
        if self._ints is not None:
            n = self.period
            v = kernels.continuant([self._ints[t % n] for t in range(i + 1, j)], -1)
            return CycInt.from_int(v, self.order)
        return as_cyc(continuant([self.entry(t) for t in range(i + 1, j)], -1), self.order)

    def int_value(self, i: int, j: int) -> int:
        return self._raw(i, j).embed_rational()

    def quiddity_strings(self) -> list[str]:
        return [str(x) for x in self.quiddity]


class FriezePattern(_Quiddity):
    """Finite frieze of width n = len(quiddity)."""

    @property
    def width(self) -> int:
        return self.period

    def value(self, i: int, j: int) -> CycInt:
        if not 0 <= j - i <= self.width:
            raise OutOfBand(f"({i},{j}) is outside the band of width {self.width}")
        return self._raw(i, j)

    def extend_value(self, i: int, j: int) -> CycInt:
        """Entry of the unique infinite extension."""
        return self._raw(i, j)

    def rows(self, count: int | None = None) -> list[list[CycInt]]:
        """Rows F(i, i+k) for k = 0..count-1 and i = 0..n-1."""
        count = self.width + 1 if count is None else count
        return [[self._raw(i, i + k) for i in range(self.width)] for k in range(count)]

    def to_json(self, rows: int | None = None) -> dict:
        return {"width": self.width, "ring": self.order,
                "quiddity": [list(x.coeffs) for x in self.quiddity],
                "rows": [[list(x.coeffs) for x in r] for r in self.rows(rows)]}


class InfiniteFrieze(_Quiddity):
    """Periodic infinite frieze generated by a cyclic quiddity row."""

    def value(self, i: int, j: int) -> CycInt:
        return self._raw(i, j)

    def rows(self, count: int) -> list[list[CycInt]]:
        return [[self._raw(i, i + k) for i in range(self.period)] for k in range(count)]

    def to_json(self, rows: int = 6) -> dict:
        return {"period": self.period, "ring": self.order,
                "quiddity": [list(x.coeffs) for x in self.quiddity],
                "rows": [[list(x.coeffs) for x in r] for r in self.rows(rows)]}


# ---------------------------------------------------------------------------
# friezes from dissections


def quiddity_from_faces(n: int, faces: Iterable[Sequence[int]]) -> tuple[list[CycInt], int]:
    """c[v] = sum over face corners at v of lambda_{face size}."""
    faces = [tuple(f) for f in faces]
    sizes = {len(f) for f in faces}
    M = ring_order(sizes)
    lams = {p: lam(p, M) for p in sizes}
    row = [CycInt.from_int(0, M) for _ in range(n)]
    for f in faces:
        for v in f:
            row[v % n] = row[v % n] + lams[len(f)]
    return row, M


def frieze_from_dissection(T: Dissection) -> FriezePattern:
    row, M = quiddity_from_faces(T.n, T.faces())
    return FriezePattern(tuple(row), M)


def frieze_from_punctured(T: PuncturedDissection) -> InfiniteFrieze:
    """Corners are counted with multiplicity, so a folded face counts twice."""
    sizes = [T.m + 2]
    M = ring_order(sizes)
    lp = lam(T.m + 2, M)
    row = [CycInt.from_int(0, M) for _ in range(T.n)]
    for corners, _ in T.faces():
        for v in corners:
            row[v] = row[v] + lp
    return InfiniteFrieze(tuple(row), M)


def shift_rows(F: FriezePattern, t: int) -> FriezePattern:
    """F'(i, j) = F(i+t, j+t)."""
    n = F.width
    return FriezePattern(tuple(F.entry(i + t) for i in range(n)), F.order)


# ---------------------------------------------------------------------------
# checks


def diamond(F: _Quiddity, i: int, j: int) -> CycInt:
    """East * West - North * South for the diamond with F(i, j) on top."""
    return F._raw(i - 1, j) * F._raw(i, j + 1) - F._raw(i, j) * F._raw(i - 1, j + 1)


def check_unimodular(F: _Quiddity, max_gap: int | None = None) -> list[tuple[int, int]]:
    """Cells (i, j) whose diamond fails; empty means the rule holds."""
    gap = (F.period - 1) if max_gap is None else max_gap
    bad = []
    for i in range(F.period):
        for j in range(i, i + gap + 1):
            if diamond(F, i, j) != 1:
                bad.append((i, j))
    return bad


def check_tame(F: _Quiddity, max_gap: int | None = None) -> list[tuple[int, int]]:
    """Cells where the 3x3 minor F(i+a, j+b), a, b in 0..2, is nonzero."""
    gap = (F.period - 2) if max_gap is None else max_gap
    bad = []
    for i in range(F.period):
        for j in range(i + 2, i + gap + 1):
            m = [[F._raw(i + a, j + b) for b in range(3)] for a in range(3)]
            det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                   - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                   + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
            if det != 0:
                bad.append((i, j))
    return bad


# ---------------------------------------------------------------------------
# matchings (triangulations only)


def _matching_count(faces: Sequence[Sequence[int]], positions: Sequence[int]) -> int:
    index: dict[int, list[int]] = {}
    for fid, f in enumerate(faces):
        for v in set(f):
            index.setdefault(v, []).append(fid)
    choices = [index.get(v, []) for v in positions]
    return kernels.count_matchings(choices, [1] * len(faces))


def bci_matchings(T: Dissection, i: int, j: int) -> int:
    """Admissible matchings between v_i and v_j of a triangulated polygon.

    Vertices v_{i+1}..v_{j-1} each pick a distinct incident triangle.  The
    degenerate cell i == j (no arc) is 0.
    """
    faces = T.faces()
    if any(len(f) != 3 for f in faces):
        raise NotTriangulation("matchings are only defined here for triangulations")
    if not 0 <= j - i <= T.n:
        raise OutOfBand(f"({i},{j}) is outside the band of width {T.n}")
    if i == j:
        return 0
    return _matching_count(faces, [t % T.n for t in range(i + 1, j)])


def bci_matchings_punctured(T: PuncturedDissection, i: int, j: int) -> int:
    """Matchings between lifted vertices i < j on the infinite strip."""
    if T.m != 1:
        raise NotTriangulation("matchings are only defined here for triangulations")
    if j < i:
        raise ValueError("need i <= j")
    if i == j:
        return 0
    lift = window_lift(T, i, j)
    return _matching_count(lift.faces, list(range(i + 1, j)))


# ---------------------------------------------------------------------------
# growth coefficients


def chebyshev(k: int, x):
    """Normalized Chebyshev: T_0 = 2, T_1 = x, T_k = x T_{k-1} - T_{k-2}."""
    prev, cur = 2, x
    if k == 0:
        return 2
    for _ in range(k - 1):
        prev, cur = cur, x * cur - prev
    return cur


def growth_coefficient(F: _Quiddity, k: int = 1) -> CycInt:
    """s_k = F(i, i+jk+1) - F(i+1, i+jk) with j the minimal quiddity period."""
    if k < 1:
        raise ValueError("k must be positive")
    j = minimal_period(F.quiddity)
    vals = [F._raw(i, i + j * k + 1) - F._raw(i + 1, i + j * k) for i in range(j)]
    if any(v != vals[0] for v in vals[1:]):
        raise NonConstant(f"growth differences disagree: {[str(v) for v in vals]}")
    return vals[0]


def principal_growth_finite(F: FriezePattern) -> CycInt:
    return growth_coefficient(F, 1)


SYMMETRY_BY_GROWTH = {-2: 1, 0: 2, 1: 3}


def symmetry_from_growth(F: FriezePattern) -> int:
    """Order of rotational symmetry predicted by the principal growth coefficient."""
    s1 = principal_growth_finite(F).embed_rational()
    if s1 not in SYMMETRY_BY_GROWTH:
        raise ValueError(f"unexpected principal growth coefficient {s1}")
    return SYMMETRY_BY_GROWTH[s1]


def ones_in_fundamental_domain(F: _Quiddity, window: int | None = None) -> int:
    """Entries equal to 1 with 2 <= j - i <= window and 0 <= i < period."""
    n = F.period
    window = 3 * n if window is None else window
    return sum(1 for i in range(n) for j in range(i + 2, i + window + 1)
               if F._raw(i, j) == 1)


# ---------------------------------------------------------------------------
# orbifold friezes


@dataclass(frozen=True)
class OrbifoldFrieze:
    """Frieze of a triangulated orbifold P_n with one point of order p.

    ``lifted`` is the frieze of the n-step rotation-invariant triangulation
    of the (p n)-gon; ``f(i, j) = F(i, j + n [j <= i])``.
    """

    n: int
    p: int
    lifted: FriezePattern
    triangulation: Dissection

    def f(self, i: int, j: int) -> CycInt:
        i, j = i % self.n, j % self.n
        return self.lifted.value(i, j + (self.n if j <= i else 0))

    def table(self) -> list[list[CycInt]]:
        return [[self.f(i, j) for j in range(self.n)] for i in range(self.n)]

    def arcs(self) -> list[tuple[int, int]]:
        """Orbifold arcs of the triangulation as (i, j) with f-convention."""
        N = self.triangulation.n
        out = set()
        for a, b in self.triangulation.diagonals:
            x, L = (a, b - a) if b - a <= self.n else (b, N - (b - a))
            out.add((x % self.n, (x + L) % self.n))
        return sorted(out)

    def skein_defect(self, i: int, j: int) -> CycInt:
        """f(ii) f(jj) - f(ij)^2 - lambda_p f(ij) f(ji) - f(ji)^2 (zero when it holds)."""
        lp = lam(self.p, self.lifted.order) if self.lifted.order % (2 * self.p) == 0 \
            else lam(self.p)
        fij, fji = self.f(i, j), self.f(j, i)
        return self.f(i, i) * self.f(j, j) - fij * fij - lp * fij * fji - fji * fji


def orbifold_frieze(T: Dissection, p: int) -> OrbifoldFrieze:
    if p not in (2, 3):
        raise UnsupportedOrder(f"orbifold points of order {p} are not supported")
    if T.n % p:
        raise NotSymmetric(f"{T.n}-gon is not a {p}-fold lift")
    n = T.n // p
    if rotate_polygon(T, n) != T:
        raise NotSymmetric("lift is not invariant under rotation by n steps")
    if any(len(f) != 3 for f in T.faces()):
        raise NotTriangulation("orbifold friezes need a triangulation")
    return OrbifoldFrieze(n, p, frieze_from_dissection(T), T)


# ---------------------------------------------------------------------------
# text rendering


def render_rows(rows: Sequence[Sequence], cell: int = 0) -> str:
    """Staggered layout: odd rows are shifted by half a cell."""
    texts = [[str(x) for x in r] for r in rows]
    width = max(cell, max((len(t) for r in texts for t in r), default=1)) + 2
    lines = []
    for k, r in enumerate(texts):
        pad = " " * (width // 2) if k % 2 else ""
        lines.append((pad + "".join(t.center(width) for t in r)).rstrip())
    return "\n".join(lines)
