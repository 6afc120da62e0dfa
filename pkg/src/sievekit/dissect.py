"""Dissections of a convex polygon and the rotation action on them.

Vertices are ``0..n-1`` in clockwise order; a diagonal is stored as ``(i, j)``
with ``i < j``.  Type vectors follow the convention that ``mu[i-1]`` counts the
faces with ``i + 2`` vertices, so a type vector with ``sum(i * mu_i) = n``
describes dissections of the ``(n + 2)``-gon.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ConditionViolated, InvalidDissection, NotSymmetric
from .qcalc import QExpr


def crosses(a: tuple[int, int], b: tuple[int, int]) -> bool:
    (p, q), (r, s) = a, b
    return p < r < q < s or r < p < s < q


def canon(i: int, j: int, n: int) -> tuple[int, int]:
    i, j = i % n, j % n
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Dissection:
    n: int
    diagonals: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        diags = frozenset(tuple(d) for d in self.diagonals)
        object.__setattr__(self, "diagonals", diags)
        n = self.n
        if n < 3:
            raise InvalidDissection(f"polygon needs at least 3 vertices, got {n}")
        for i, j in diags:
            if not (0 <= i < j <= n - 1):
                raise InvalidDissection(f"diagonal {(i, j)} is not in canonical range")
            if j - i < 2 or (i, j) == (0, n - 1):
                raise InvalidDissection(f"{(i, j)} is a side, not a diagonal")
        ds = sorted(diags)
        for x in range(len(ds)):
            for y in range(x + 1, len(ds)):
                if crosses(ds[x], ds[y]):
                    raise InvalidDissection(f"diagonals {ds[x]} and {ds[y]} cross")

    @classmethod
    def of(cls, n: int, pairs: Iterable[Sequence[int]]) -> "Dissection":
        """Build from pairs in any order or orientation (indices taken mod n)."""
        return cls(n, frozenset(canon(i, j, n) for i, j in pairs))

    def sorted_diagonals(self) -> list[tuple[int, int]]:
        return sorted(self.diagonals)

    def faces(self) -> list[tuple[int, ...]]:
        """Faces as increasing vertex tuples (which is their clockwise order)."""
        return _faces(self.n, self.diagonals)

    def is_angulation(self, size: int) -> bool:
        return all(len(f) == size for f in self.faces())

    def to_json(self) -> dict:
        return {"n": self.n, "diagonals": [list(d) for d in self.sorted_diagonals()]}

    @classmethod
    def from_json(cls, data: dict) -> "Dissection":
        return cls.of(int(data["n"]), data["diagonals"])


@functools.lru_cache(maxsize=4096)
def _faces(n: int, diagonals: frozenset) -> list[tuple[int, ...]]:
    polys = [tuple(range(n))]
    for i, j in sorted(diagonals, key=lambda d: d[0] - d[1]):
        for idx, poly in enumerate(polys):
            if i in poly and j in poly:
                pi, pj = poly.index(i), poly.index(j)
                if pj - pi >= 2 and not (pi == 0 and pj == len(poly) - 1):
                    polys[idx] = poly[pi:pj + 1]
                    polys.append(poly[pj:] + poly[:pi + 1])
                    break
    return [tuple(sorted(p)) for p in polys]


@dataclass(frozen=True)
class TypeVector:
    """mu[i-1] = number of (i+2)-gons; trailing zeros are dropped."""

    mu: tuple[int, ...]

    def __post_init__(self):
        mu = list(self.mu)
        if any(x < 0 for x in mu):
            raise ValueError("type vector entries must be nonnegative")
        while mu and mu[-1] == 0:
            mu.pop()
        if not mu:
            raise ValueError("type vector must have at least one face")
        object.__setattr__(self, "mu", tuple(mu))

    @property
    def k(self) -> int:
        return sum(self.mu)

    @property
    def n(self) -> int:
        return sum(i * x for i, x in enumerate(self.mu, start=1))

    @property
    def polygon(self) -> int:
        return self.n + 2

    def __str__(self):
        return ",".join(map(str, self.mu))


def as_type(mu) -> TypeVector:
    return mu if isinstance(mu, TypeVector) else TypeVector(tuple(mu))


def type_vector(T: Dissection) -> TypeVector:
    sizes = [len(f) for f in T.faces()]
    mu = [0] * max(s - 2 for s in sizes)
    for s in sizes:
        mu[s - 3] += 1
    return TypeVector(tuple(mu))


def type_vectors(n: int) -> list[TypeVector]:
    """All type vectors of dissections of the (n+2)-gon."""
    out = []

    def rec(rest: int, largest: int, parts: list[int]):
        if rest == 0:
            mu = [0] * max(parts)
            for p in parts:
                mu[p - 1] += 1
            out.append(TypeVector(tuple(mu)))
            return
        for p in range(min(rest, largest), 0, -1):
            rec(rest - p, p, parts + [p])

    rec(n, n, [])
    return out


def rotate(T: Dissection, steps: int = 1) -> Dissection:
    """Send v_i to v_{i-steps}."""
    n = T.n
    return Dissection(n, frozenset(canon(i - steps, j - steps, n) for i, j in T.diagonals))


# ---------------------------------------------------------------------------
# enumeration by face peeling


def _sub_vectors(mu: tuple[int, ...], weight: int) -> Iterator[tuple[int, ...]]:
    """Vectors nu <= mu (entrywise) with sum(i * nu_i) == weight and nu != 0."""

    def rec(i: int, rest: int, acc: list[int]):
        if rest == 0:
            if any(acc):
                yield tuple(acc) + (0,) * (len(mu) - len(acc))
            return
        if i >= len(mu):
            return
        size = i + 1
        for c in range(min(mu[i], rest // size), -1, -1):
            acc.append(c)
            yield from rec(i + 1, rest - c * size, acc)
            acc.pop()

    yield from rec(0, weight, [])


def _split(mu: tuple[int, ...], weights: list[int]) -> Iterator[list[tuple[int, ...]]]:
    if not weights:
        if not any(mu):
            yield []
        return
    for nu in _sub_vectors(mu, weights[0]):
        rest = tuple(a - b for a, b in zip(mu, nu))
        for tail in _split(rest, weights[1:]):
            yield [nu] + tail


@functools.lru_cache(maxsize=None)
def _peel(size: int, mu: tuple[int, ...]) -> tuple[frozenset, ...]:
    """Dissections of the polygon 0..size-1 with face-type mu (relative labels).

    The face containing the side (0, size-1) is chosen first; every gap
    between consecutive corners of that face is dissected recursively.
    """
    out = []
    interior = list(range(1, size - 1))
    for idx, count in enumerate(mu):
        if count == 0:
            continue
        face_size = idx + 3
        if face_size > size:
            break
        rest = list(mu)
        rest[idx] -= 1
        rest = tuple(rest)
        for mids in _combinations(interior, face_size - 2):
            corners = (0,) + mids + (size - 1,)
            gaps = [(corners[t], corners[t + 1]) for t in range(len(corners) - 1)
                    if corners[t + 1] - corners[t] >= 2]
            weights = [b - a - 1 for a, b in gaps]
            for parts in _split(rest, weights):
                partial = [frozenset(gaps)]
                for (a, b), nu in zip(gaps, parts):
                    subs = _peel(b - a + 1, _trim_mu(nu))
                    partial = [acc | frozenset((a + x, a + y) for x, y in sub)
                               for acc in partial for sub in subs]
                out.extend(partial)
    return tuple(out)


def _trim_mu(mu: tuple[int, ...]) -> tuple[int, ...]:
    mu = list(mu)
    while mu and mu[-1] == 0:
        mu.pop()
    return tuple(mu)


def _combinations(items: list[int], r: int):
    from itertools import combinations

    return combinations(items, r)


def enumerate_by_type(mu) -> set[Dissection]:
    tv = as_type(mu)
    N = tv.polygon
    if N < 3:
        return set()
    return {Dissection(N, frozenset(canon(i, j, N) for i, j in diags))
            for diags in _peel(N, tv.mu)}


def enumerate_all(N: int) -> set[Dissection]:
    """Every dissection of the N-gon."""
    out: set[Dissection] = set()
    for tv in type_vectors(N - 2):
        out |= enumerate_by_type(tv)
    return out


def enumerate_angulations(N: int, size: int) -> set[Dissection]:
    """All dissections of the N-gon into size-gons."""
    m = size - 2
    if (N - 2) % m:
        return set()
    mu = [0] * m
    mu[m - 1] = (N - 2) // m
    return enumerate_by_type(TypeVector(tuple(mu)))


def triangulations(N: int) -> set[Dissection]:
    return enumerate_angulations(N, 3)


# ---------------------------------------------------------------------------
# counting formulas


def a_mu_count(mu) -> int:
    tv = as_type(mu)
    n, k = tv.n, tv.k
    multi = math.factorial(k)
    for x in tv.mu:
        multi //= math.factorial(x)
    total = math.comb(n + k, k) * multi
    assert total % (n + 1) == 0
    return total // (n + 1)


def a_mu_poly(mu) -> QExpr:
    """(1/[n+1]) [n+k choose k] [k; mu] with the [k]! factors cancelled."""
    tv = as_type(mu)
    n, k = tv.n, tv.k
    den = list(range(1, n + 2))
    for x in tv.mu:
        den.extend(range(1, x + 1))
    return QExpr(1, 0, tuple(range(1, n + k + 1)), tuple(den))


def is_symmetric(T: Dissection, d: int) -> bool:
    if T.n % d:
        raise ValueError(f"{d} does not divide {T.n}")
    return rotate(T, T.n // d) == T


def fixed_points(mu, d: int) -> set[Dissection]:
    tv = as_type(mu)
    if tv.polygon % d:
        raise ValueError(f"{d} does not divide {tv.polygon}")
    return {T for T in enumerate_by_type(tv) if is_symmetric(T, d)}


def fixed_point_formula(mu, d: int) -> int:
    """Closed-form fixed-point count, case by case."""
    tv = as_type(mu)
    N, k = tv.polygon, tv.k
    if N % d:
        raise ValueError(f"{d} does not divide {N}")
    if d == 1:
        return a_mu_count(tv)
    if _central_face_case(tv, d):
        g = (k - 1) // d
        return math.comb(N // d + g - 1, g) * _multinomial([x // d for x in tv.mu])
    if d == 2 and all(x % 2 == 0 for x in tv.mu):
        return math.comb((tv.n + k) // 2, k // 2) * _multinomial([x // 2 for x in tv.mu])
    return 0


def _multinomial(parts: Sequence[int]) -> int:
    out = math.factorial(sum(parts))
    for p in parts:
        out //= math.factorial(p)
    return out


def _central_face_case(tv: TypeVector, d: int) -> bool:
    if d < 2:
        return False
    ones = [x for x in tv.mu if x % d == 1]
    return len(ones) == 1 and all(x % d in (0, 1) for x in tv.mu)


# ---------------------------------------------------------------------------
# symmetric codes


@dataclass(frozen=True)
class SymmetricCode:
    d: int
    pairs: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {"d": self.d, "pairs": [list(p) for p in self.pairs]}


def _oriented(diag: tuple[int, int], N: int) -> tuple[int, int]:
    """(start, length) with the short side running clockwise from start."""
    i, j = diag
    if j - i < N - (j - i):
        return i, j - i
    return j, N - (j - i)


def encode_symmetric(T: Dissection, d: int) -> SymmetricCode:
    tv = type_vector(T)
    N = T.n
    if d < 2 or N % d:
        raise ConditionViolated(f"d={d} must be at least 2 and divide {N}")
    if not _central_face_case(tv, d):
        raise ConditionViolated(f"type {tv} has no central face for d={d}")
    if not is_symmetric(T, d):
        raise NotSymmetric(f"dissection is not invariant under {d}-fold rotation")
    s = N // d
    faces = T.faces()
    recs = []
    for diag in T.diagonals:
        a, length = _oriented(diag, N)
        if a >= s:
            continue
        span = {(a + t) % N for t in range(length + 1)}
        face = next(f for f in faces if diag[0] in f and diag[1] in f and set(f) <= span)
        recs.append((a, -length, len(face) - 2))
    recs.sort()
    return SymmetricCode(d, tuple((a, e) for a, _, e in recs))


def decode_symmetric(code: SymmetricCode, mu, d: int) -> Dissection:
    """Rebuild the dissection by a stack parse around the boundary.

    Every diagonal starting at a vertex is pushed (longest first).  Each
    boundary edge is a unit for the diagonal on top of the stack; a diagonal
    whose small-side face has e + 2 corners closes after e + 1 units and in
    turn is one unit for its parent.
    """
    tv = as_type(mu)
    N = tv.polygon
    if d < 2 or N % d or not _central_face_case(tv, d):
        raise ConditionViolated(f"type {tv} with d={d} is outside the encoded case")
    s = N // d
    pairs = list(code.pairs)
    g = (tv.k - 1) // d
    want = sorted(e for i, x in enumerate(tv.mu, start=1) for e in [i] * (x // d))
    if len(pairs) != g or sorted(e for _, e in pairs) != want:
        raise ConditionViolated("code does not match the type vector")
    if any(not 0 <= a < s for a, _ in pairs) or [a for a, _ in pairs] != sorted(a for a, _ in pairs):
        raise ConditionViolated("starting points must be weakly increasing in [0, N/d)")
    starts: dict[int, list[tuple[int, int]]] = {}
    for t in range(2 * d):
        for idx, (a, e) in enumerate(pairs):
            starts.setdefault(a + t * s, []).append((e, idx if t == 0 else -1))
    stack: list[list[int]] = []  # [start, need, tag]
    closed: dict[int, int] = {}
    for v in range(2 * N):
        for e, tag in starts.get(v, []):
            stack.append([v, e + 1, tag])
        if stack:
            stack[-1][1] -= 1
        while stack and stack[-1][1] == 0:
            start, _, tag = stack.pop()
            if tag >= 0:
                closed[tag] = v + 1
            if stack:
                stack[-1][1] -= 1
        if len(closed) == g:
            break
    if len(closed) != g:
        raise ConditionViolated("code does not close up")
    diags = set()
    for idx, (a, _) in enumerate(pairs):
        b = closed[idx]
        for t in range(d):
            diags.add(canon(a + t * s, b + t * s, N))
    T = Dissection(N, frozenset(diags))
    if type_vector(T) != tv:
        raise ConditionViolated("decoded dissection has the wrong type")
    return T


def all_codes(mu, d: int) -> Iterator[SymmetricCode]:
    """Every admissible code for (mu, d) in the central-face case."""
    from itertools import combinations_with_replacement, permutations

    tv = as_type(mu)
    N = tv.polygon
    if not _central_face_case(tv, d) or N % d:
        return
    s = N // d
    g = (tv.k - 1) // d
    es = [i for i, x in enumerate(tv.mu, start=1) for _ in range(x // d)]
    orders = sorted(set(permutations(es)))
    for starts in combinations_with_replacement(range(s), g):
        for order in orders:
            yield SymmetricCode(d, tuple(zip(starts, order)))
