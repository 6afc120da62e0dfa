"""Dissections of a once-punctured polygon into (m+2)-gons.

A dissection is stored by cutting along its spokes.  Between two consecutive
spokes at ``v_a`` and ``v_b`` (clockwise) sits a sector polygon with local
vertex 0 at the puncture and local vertices ``1..L+1`` at
``v_a, v_{a+1}, ..., v_b`` where ``L = (b - a) mod n`` (``L = n`` when there
is a single spoke, so local vertices 1 and ``n+1`` are both ``v_a``).  The
sector carries an ordinary dissection that avoids local vertex 0.

Arcs not through the puncture are written ``(x, L)``: the arc leaves ``v_x``
and its unpunctured side runs clockwise over ``L`` boundary edges to
``v_{x+L}``.  ``L = n`` is a loop.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .dissect import Dissection, enumerate_angulations, rotate as rotate_polygon
from .errors import InvalidDissection
from .qcalc import QExpr, QSum, q_binom_expr


@functools.lru_cache(maxsize=None)
def sector_dissections(size: int, m: int) -> tuple[Dissection, ...]:
    """(m+2)-angulations of the size-gon with no diagonal at vertex 0."""
    out = [T for T in enumerate_angulations(size, m + 2)
           if all(0 not in d for d in T.diagonals)]
    return tuple(sorted(out, key=lambda T: T.sorted_diagonals()))


@dataclass(frozen=True)
class PuncturedDissection:
    n: int
    m: int
    spokes: tuple[int, ...]
    sectors: tuple[Dissection, ...]

    def __post_init__(self):
        n, m = self.n, self.m
        spokes = tuple(self.spokes)
        object.__setattr__(self, "spokes", spokes)
        object.__setattr__(self, "sectors", tuple(self.sectors))
        if m < 1 or n % m:
            raise InvalidDissection(f"m={m} must divide n={n}")
        if not spokes:
            raise InvalidDissection("an (m+2)-angulation needs at least one spoke")
        if list(spokes) != sorted(set(spokes)) or not all(0 <= a < n for a in spokes):
            raise InvalidDissection("spokes must be distinct, sorted vertices")
        if len(self.sectors) != len(spokes):
            raise InvalidDissection("need one sector per spoke")
        for a, L, sec in zip(spokes, self.spans(), self.sectors):
            if L % m:
                raise InvalidDissection(f"sector at v_{a} spans {L}, not a multiple of {m}")
            if sec.n != L + 2:
                raise InvalidDissection(f"sector at v_{a} must be a {L + 2}-gon")
            if any(0 in d for d in sec.diagonals):
                raise InvalidDissection("sector diagonals may not meet the puncture")
            if not sec.is_angulation(m + 2):
                raise InvalidDissection(f"sector at v_{a} is not an {m + 2}-angulation")

    def spans(self) -> list[int]:
        s, n = self.spokes, self.n
        if len(s) == 1:
            return [n]
        return [(s[(i + 1) % len(s)] - s[i]) % n for i in range(len(s))]

    @property
    def s(self) -> int:
        return len(self.spokes)

    def arcs(self) -> list[tuple]:
        """Spokes as ``("spoke", x)`` followed by sorted ``(x, L)`` arcs."""
        out: list[tuple] = [("spoke", a) for a in self.spokes]
        plain = []
        for a, sec in zip(self.spokes, self.sectors):
            for p, q in sec.diagonals:
                plain.append(((a + p - 1) % self.n, q - p))
        return out + sorted(plain)

    def faces(self) -> list[tuple[tuple[int, ...], bool]]:
        """Faces as (boundary vertices with multiplicity, touches puncture)."""
        out = []
        for a, sec in zip(self.spokes, self.sectors):
            for f in sec.faces():
                out.append((tuple((a + p - 1) % self.n for p in f if p), 0 in f))
        return out

    @classmethod
    def from_arcs(cls, n: int, m: int, arcs: Iterable) -> "PuncturedDissection":
        arcs = list(arcs)
        spokes = sorted({a[1] % n for a in arcs if a[0] == "spoke"})
        if not spokes:
            raise InvalidDissection("an (m+2)-angulation needs at least one spoke")
        if len(spokes) == 1:
            spans = [n]
        else:
            spans = [(spokes[(i + 1) % len(spokes)] - spokes[i]) % n
                     for i in range(len(spokes))]
        diags: list[set] = [set() for _ in spokes]
        for arc in arcs:
            if arc[0] == "spoke":
                continue
            x, L = int(arc[0]), int(arc[1])
            for idx, (a, J) in enumerate(zip(spokes, spans)):
                p = (x - a) % n + 1
                if p + L <= J + 1:
                    diags[idx].add((p, p + L))
                    break
            else:
                raise InvalidDissection(f"arc {arc} crosses a spoke")
        sectors = tuple(Dissection(J + 2, frozenset(ds)) for J, ds in zip(spans, diags))
        return cls(n, m, tuple(spokes), sectors)

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "spokes": list(self.spokes),
                "sectors": [sec.to_json() for sec in self.sectors]}

    @classmethod
    def from_json(cls, data: dict) -> "PuncturedDissection":
        return cls(int(data["n"]), int(data["m"]), tuple(int(a) for a in data["spokes"]),
                   tuple(Dissection.from_json(s) for s in data["sectors"]))


# ---------------------------------------------------------------------------
# enumeration and counts


def spoke_sets(n: int, m: int, s: int) -> list[tuple[int, ...]]:
    ell = n // m
    out = []
    for r in range(m):
        for pos in combinations(range(ell), s):
            out.append(tuple(r + m * p for p in pos))
    return sorted(out)


def _check_params(n: int, m: int, s: int) -> None:
    if m < 1 or n < 1 or n % m:
        raise ValueError(f"m={m} must divide n={n}")
    if not 1 <= s <= n // m:
        raise ValueError(f"spoke count {s} outside 1..{n // m}")


def enumerate_punctured(n: int, m: int, s: int) -> list[PuncturedDissection]:
    """All (m+2)-angulations of the punctured n-gon with exactly s spokes."""
    _check_params(n, m, s)
    out = []
    for spokes in spoke_sets(n, m, s):
        if s == 1:
            spans = [n]
        else:
            spans = [(spokes[(i + 1) % s] - spokes[i]) % n for i in range(s)]
        choices = [sector_dissections(L + 2, m) for L in spans]
        out.extend(_product(n, m, spokes, choices))
    return out


def _product(n, m, spokes, choices):
    acc: list[tuple] = [()]
    for opts in choices:
        acc = [prev + (c,) for prev in acc for c in opts]
    return [PuncturedDissection(n, m, spokes, secs) for secs in acc]


def p_count(m: int, ell: int) -> int:
    """Number of (m+2)-angulations of the (m*ell+2)-gon avoiding one vertex.

    Coefficient of x**(ell-1) in c(x)**m, c the Fuss-Catalan series.
    """
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    if ell == 0:
        return 0
    c = [math.comb((m + 1) * j, j) // (m * j + 1) for j in range(ell)]
    power = [1] + [0] * (ell - 1)
    for _ in range(m):
        power = [sum(power[i] * c[t - i] for i in range(t + 1)) for t in range(ell)]
    return power[ell - 1]


def t_count(n: int, m: int, s: int) -> int:
    _check_params(n, m, s)
    return m * math.comb(n + n // m - s - 1, n - 1)


def t_poly(n: int, m: int, s: int) -> QExpr:
    _check_params(n, m, s)
    return q_binom_expr(n + n // m - s - 1, n - 1) * m


def t_total_poly(n: int, m: int = 1) -> QSum:
    """Sum of t_poly over every admissible spoke count."""
    return QSum(tuple(t_poly(n, m, s) for s in range(1, n // m + 1)))


def csp_condition(n: int, m: int, s: int) -> bool:
    """True unless s and n/m share a residue that is not forced to be zero.

    For every d | n with s = n/m (mod d), also s = 0 (mod d) is required.
    """
    ell = n // m
    return all(s % d == 0 for d in range(1, n + 1)
               if n % d == 0 and (s - ell) % d == 0)


# ---------------------------------------------------------------------------
# rotation


def rotate_punctured(T: PuncturedDissection, steps: int = 1) -> PuncturedDissection:
    """Send v_i to v_{i-steps}; sector contents ride along with their spoke."""
    pairs = sorted(((a - steps) % T.n, sec) for a, sec in zip(T.spokes, T.sectors))
    return PuncturedDissection(T.n, T.m, tuple(a for a, _ in pairs),
                               tuple(sec for _, sec in pairs))


def is_symmetric_punctured(T: PuncturedDissection, d: int) -> bool:
    if T.n % d:
        raise ValueError(f"{d} does not divide {T.n}")
    return rotate_punctured(T, T.n // d) == T


def fixed_points_punctured(n: int, m: int, s: int, d: int) -> list[PuncturedDissection]:
    if n % d:
        raise ValueError(f"{d} does not divide {n}")
    return [T for T in enumerate_punctured(n, m, s) if is_symmetric_punctured(T, d)]


def quotient(T: PuncturedDissection, d: int) -> PuncturedDissection:
    """Keep one 2*pi/d sector of a d-fold symmetric dissection."""
    if not is_symmetric_punctured(T, d):
        raise InvalidDissection(f"dissection is not {d}-fold symmetric")
    if T.s % d:
        raise InvalidDissection("spoke count must be divisible by d")
    k = T.n // d
    keep = [(a, sec) for a, sec in zip(T.spokes, T.sectors) if a < k]
    return PuncturedDissection(k, T.m, tuple(a for a, _ in keep),
                               tuple(sec for _, sec in keep))


def unquotient(T: PuncturedDissection, d: int) -> PuncturedDissection:
    """Inverse of ``quotient``: repeat the dissection d times around."""
    n = T.n * d
    pairs = sorted((a + t * T.n, sec) for t in range(d) for a, sec in zip(T.spokes, T.sectors))
    return PuncturedDissection(n, T.m, tuple(a for a, _ in pairs), tuple(sec for _, sec in pairs))


# ---------------------------------------------------------------------------
# lift to the infinite strip


@dataclass(frozen=True)
class StripLift:
    """Lift on the vertex line, copies t = t0 .. t0+copies-1 of the period.

    ``finite`` holds arcs (t, u), ``asymptotic`` the endpoints of lifted
    spokes, and ``faces`` the lifted faces as tuples of strip vertices
    (faces with a corner at the puncture have an ideal corner, not listed).
    """

    n: int
    t0: int
    copies: int
    finite: tuple[tuple[int, int], ...]
    asymptotic: tuple[int, ...]
    faces: tuple[tuple[int, ...], ...]


def lift_to_strip(T: PuncturedDissection, copies: int, t0: int = 0) -> StripLift:
    if copies < 1:
        raise ValueError("copies must be positive")
    n = T.n
    finite, asym, faces = [], [], []
    for t in range(t0, t0 + copies):
        base = t * n
        for a, sec in zip(T.spokes, T.sectors):
            asym.append(a + base)
            for p, q in sec.diagonals:
                finite.append((a + p - 1 + base, a + q - 1 + base))
            for f in sec.faces():
                faces.append(tuple(a + p - 1 + base for p in f if p))
    return StripLift(n, t0, copies, tuple(sorted(finite)), tuple(sorted(asym)),
                     tuple(sorted(faces)))


def window_lift(T: PuncturedDissection, i: int, j: int) -> StripLift:
    """A lift wide enough for every face touching vertices i..j."""
    n = T.n
    t0 = math.floor(i / n) - 2
    copies = math.floor(j / n) - t0 + 2
    return lift_to_strip(T, copies, t0)
