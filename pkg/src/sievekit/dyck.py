"""m-Dyck paths and their bijection with (m+2)-angulations.

Paths start at (0, 0); ``U`` steps go up (0, 1) and ``R`` steps go right
(1, 0).  A word is an m-Dyck path when every prefix has ``#R <= m * #U`` and
the totals are ``ell`` U's and ``m * ell`` R's.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .dissect import Dissection
from .errors import InvalidDissection, NotBallot
from .qcalc import CycInt


@dataclass(frozen=True)
class MDyckPath:
    m: int
    word: str

    @property
    def ell(self) -> int:
        return self.word.count("U")

    @property
    def polygon(self) -> int:
        """Number of vertices of the matching polygon."""
        return self.m * self.ell + 2

    def points(self) -> list[tuple[int, int]]:
        x = y = 0
        pts = [(0, 0)]
        for c in self.word:
            if c == "U":
                y += 1
            else:
                x += 1
            pts.append((x, y))
        return pts

    def __str__(self):
        return self.word


def validate(word: str, m: int) -> MDyckPath:
    if m < 1:
        raise ValueError("m must be positive")
    if set(word) - {"U", "R"}:
        raise ValueError("words use only the letters U and R")
    ups = rights = 0
    for pos, c in enumerate(word, start=1):
        if c == "U":
            ups += 1
        else:
            rights += 1
        if rights > m * ups:
            raise NotBallot(pos)
    if not word or rights != m * ups:
        raise NotBallot(len(word), f"word ends at height {m * ups - rights}, not 0")
    return MDyckPath(m, word)


def enumerate_dyck(m: int, ell: int) -> list[MDyckPath]:
    if m < 1 or ell < 1:
        raise ValueError("m and ell must be positive")
    out: list[MDyckPath] = []

    def rec(prefix: list[str], ups: int, rights: int):
        if ups == ell and rights == m * ell:
            out.append(MDyckPath(m, "".join(prefix)))
            return
        if ups < ell:
            prefix.append("U")
            rec(prefix, ups + 1, rights)
            prefix.pop()
        if rights < m * ups:
            prefix.append("R")
            rec(prefix, ups, rights + 1)
            prefix.pop()

    rec([], 0, 0)
    return out


def height_sequence(D: MDyckPath) -> list[int]:
    """H(j) after each step: U adds m, R subtracts 1."""
    h, out = 0, []
    for c in D.word:
        h += D.m if c == "U" else -1
        out.append(h)
    return out


# ---------------------------------------------------------------------------
# balance lines


@dataclass(frozen=True)
class BalanceLine:
    start: tuple[int, int]
    hit: tuple[int, int]

    @property
    def label(self) -> tuple[int, int]:
        return (self.start[0], self.hit[0] + 1)


def _corners(D: MDyckPath) -> tuple[list[tuple[int, int]], set[tuple[int, int]]]:
    """Path points and the corners (points between a U step and an R step)."""
    pts = D.points()
    corners = set()
    for t in range(1, len(D.word)):
        if D.word[t - 1] != D.word[t]:
            corners.add(pts[t])
    return pts, corners


def balance_lines(D: MDyckPath) -> list[BalanceLine]:
    """One line of slope 1/m from the base of every up step but the first.

    The line meets the lattice at (x + m t, y + t); its label comes from the
    first such point (t >= 1) on the path that is not a corner.
    """
    pts, corners = _corners(D)
    on_path = set(pts)
    m = D.m
    lines = []
    for idx, c in enumerate(D.word):
        if c != "U" or idx == 0:
            continue
        x, y = pts[idx]
        t = 1
        while True:
            p = (x + m * t, y + t)
            if p[1] > D.ell:
                raise AssertionError("balance line left the path")
            if p in on_path and p not in corners:
                lines.append(BalanceLine((x, y), p))
                break
            t += 1
    return lines


def balance_labels(D: MDyckPath) -> list[tuple[int, int]]:
    return sorted(line.label for line in balance_lines(D))


def rtn(D: MDyckPath) -> Dissection:
    return Dissection.of(D.polygon, balance_labels(D))


def up_stat(D: MDyckPath, i: int) -> int:
    """Up steps on the line x = i, not counting the very first step."""
    if not 0 <= i <= D.m * D.ell + 1:
        raise ValueError(f"i must lie in 0..{D.m * D.ell + 1}")
    pts = D.points()
    return sum(1 for idx, c in enumerate(D.word) if c == "U" and idx > 0 and pts[idx][0] == i)


def bal_stat(D: MDyckPath, i: int) -> int:
    """Balance lines whose labelling point has x-coordinate i - 1."""
    if not 0 <= i <= D.m * D.ell + 1:
        raise ValueError(f"i must lie in 0..{D.m * D.ell + 1}")
    return sum(1 for line in balance_lines(D) if line.hit[0] == i - 1)


def quiddity_coefficients(D: MDyckPath) -> list[int]:
    """Integer multipliers of lambda_{m+2}: up(i) + bal(i) + 1."""
    N = D.polygon
    labels = balance_lines(D)
    bal = Counter(line.hit[0] + 1 for line in labels)
    return [up_stat(D, i) + bal[i] + 1 for i in range(N)]


def quiddity_from_dyck(D: MDyckPath) -> list[CycInt]:
    from .frieze import ring_order

    M = ring_order([D.m + 2])
    lp = CycInt.lam(D.m + 2, M)
    return [lp * c for c in quiddity_coefficients(D)]


# ---------------------------------------------------------------------------
# brow: (m+2)-angulation -> path


def _angulation_size(T: Dissection) -> int:
    sizes = {len(f) for f in T.faces()}
    if len(sizes) != 1:
        raise InvalidDissection("brow needs an (m+2)-angulation")
    size = sizes.pop()
    if size < 3:
        raise InvalidDissection("faces must have at least 3 vertices")
    return size


def brow(T: Dissection) -> MDyckPath:
    """Walk clockwise; at each vertex sweep its faces counterclockwise.

    The k-th sighting of a face writes U (k = 1), R (2 <= k <= m+1) or
    nothing (k = m+2).
    """
    size = _angulation_size(T)
    m = size - 2
    N = T.n
    faces = T.faces()
    seen = [0] * len(faces)
    word = []
    for v in range(N):
        incident = [fid for fid, f in enumerate(faces) if v in f]
        incident.sort(key=lambda fid: -max((u - v) % N for u in faces[fid] if u != v))
        for fid in incident:
            seen[fid] += 1
            if seen[fid] == 1:
                word.append("U")
            elif seen[fid] <= m + 1:
                word.append("R")
    return validate("".join(word), m)


# ---------------------------------------------------------------------------
# rotation on paths


def rot_tilde(D: MDyckPath) -> MDyckPath:
    """Path of the rotated polygon, computed from the height sequence.

    With the word starting U^k R: for each 1 <= i <= k-1 insert U after the
    first position p > k with H(p) < m*i, drop the leading U^k R, then
    prepend U and append R.
    """
    word, m = D.word, D.m
    k = word.index("R")
    H = height_sequence(D)
    inserts: Counter[int] = Counter()
    for i in range(1, k):
        p = next(p for p in range(k + 1, len(word) + 1) if H[p - 1] < m * i)
        inserts[p] += 1
    out = []
    for p, c in enumerate(word, start=1):
        out.append(c)
        out.extend("U" * inserts[p])
    new = "U" + "".join(out[k + 1:]) + "R"
    return validate(new, m)
