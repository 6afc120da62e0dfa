"""Cyclic sieving checks, orbit censuses and the Stanton identity checker."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Sequence

from .errors import NonPolynomial
from .qcalc import (
    IntPoly,
    QExpr,
    QLike,
    eval_int_at_root,
    expand,
    q_binom,
    q_multinomial,
    reduced_coeffs,
)


@dataclass(frozen=True)
class CyclicFamily:
    """Finite set with a cyclic action given as an index permutation."""

    elements: tuple
    act: tuple[int, ...]
    order: int

    def __post_init__(self):
        if sorted(self.act) != list(range(len(self.elements))):
            raise ValueError("act must be a permutation of the element indices")
        for length in self.cycle_lengths():
            if self.order % length:
                raise ValueError(f"act has a cycle of length {length} not dividing {self.order}")

    @classmethod
    def from_action(cls, elements: Iterable[Hashable], rotate: Callable, order: int) -> "CyclicFamily":
        elems = tuple(elements)
        index = {e: i for i, e in enumerate(elems)}
        if len(index) != len(elems):
            raise ValueError("elements must be distinct")
        act = tuple(index[rotate(e)] for e in elems)
        return cls(elems, act, order)

    def cycle_lengths(self) -> list[int]:
        seen = [False] * len(self.act)
        out = []
        for start in range(len(self.act)):
            if seen[start]:
                continue
            length, x = 0, start
            while not seen[x]:
                seen[x] = True
                x = self.act[x]
                length += 1
            out.append(length)
        return out

    def fixed(self, k: int) -> int:
        """Fixed points of act**k."""
        return sum(L for L in self.cycle_lengths() if k % L == 0)

    def census(self) -> dict[int, int]:
        """Stabilizer order -> number of orbits."""
        return dict(sorted(Counter(self.order // L for L in self.cycle_lengths()).items()))


@dataclass
class DivisorRecord:
    d: int
    eval: int
    fixed: int

    @property
    def match(self) -> bool:
        return self.eval == self.fixed


@dataclass
class CspReport:
    n: int
    size: int
    value_at_one: Fraction
    records: list[DivisorRecord] = field(default_factory=list)
    census: dict[int, int] = field(default_factory=dict)
    coefficients: list[tuple[int, int, int]] = field(default_factory=list)
    polynomial: bool = True

    @property
    def evaluations_match(self) -> bool:
        return self.value_at_one == self.size and all(r.match for r in self.records)

    @property
    def census_match(self) -> bool:
        return self.polynomial and all(g == want for _, g, want in self.coefficients)

    @property
    def ok(self) -> bool:
        return self.evaluations_match and self.census_match

    def mismatches(self) -> list[DivisorRecord]:
        return [r for r in self.records if not r.match]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "size": self.size,
            "value_at_one": str(self.value_at_one),
            "records": [{"d": r.d, "eval": r.eval, "fixed": r.fixed, "match": r.match}
                        for r in self.records],
            "census": {str(k): v for k, v in self.census.items()},
            "coefficients": [{"i": i, "g": g, "orbits": w, "match": g == w}
                             for i, g, w in self.coefficients],
            "polynomial": self.polynomial,
            "ok": self.ok,
        }


def verify_csp(fam: CyclicFamily, poly: QLike) -> CspReport:
    n = fam.order
    report = CspReport(n, len(fam.elements), poly.at_one())
    if report.value_at_one != report.size:
        return report
    for d in sorted(d for d in range(1, n + 1) if n % d == 0):
        k = n // d  # act**k generates the subgroup of order d
        report.records.append(DivisorRecord(d, eval_int_at_root(poly, d), fam.fixed(k)))
    report.census = fam.census()
    try:
        g = reduced_coeffs(expand(poly), n)
    except NonPolynomial:
        report.polynomial = False
        return report
    for i in range(n):
        want = sum(c for stab, c in report.census.items() if i % stab == 0)
        report.coefficients.append((i, g[i], want))
    return report


def class_count(fam: CyclicFamily) -> int:
    """Orbit count by Burnside's lemma."""
    n = fam.order
    total = sum(fam.fixed(k) for k in range(n))
    assert total % n == 0
    return total // n


def class_count_from_poly(poly: QLike, n: int, i: int = 0) -> int:
    return reduced_coeffs(expand(poly), n)[i]


# ---------------------------------------------------------------------------
# Reiner-Stanton-White and Eu-Fu polynomials


def rsw_poly(n: int, k: int) -> QExpr:
    """f(n,k;q) = [n+k choose k+1][n-3 choose k] / [n+k]."""
    if n < 3 or k < 0 or k > n - 3:
        raise ValueError("need n >= 3 and 0 <= k <= n-3")
    num = list(range(n, n + k)) + list(range(n - 2 - k, n - 2))
    den = list(range(1, k + 2)) + list(range(1, k + 1))
    return QExpr(1, 0, tuple(num), tuple(den))


def eufu_poly(s: int, n: int, k: int) -> QExpr:
    """G(s,n,k;q) = [sn+k+2 choose k+1][n-1 choose k] / [sn+k+2]."""
    if s < 1 or n < 1 or k < 0 or k > n - 1:
        raise ValueError("need s, n >= 1 and 0 <= k <= n-1")
    top = s * n + k + 2
    num = list(range(top - k, top)) + list(range(n - k, n))
    den = list(range(1, k + 2)) + list(range(1, k + 1))
    return QExpr(1, 0, tuple(num), tuple(den))


# ---------------------------------------------------------------------------
# Stanton identity


def partitions_into(n: int, k: int) -> list[tuple[int, ...]]:
    """Partitions of n into exactly k positive parts, parts decreasing."""
    out = []

    def rec(rest: int, parts: int, largest: int, acc: list[int]):
        if parts == 0:
            if rest == 0:
                out.append(tuple(acc))
            return
        for p in range(min(rest - (parts - 1), largest), 0, -1):
            if p * parts < rest:
                break
            acc.append(p)
            rec(rest - p, parts - 1, p, acc)
            acc.pop()

    rec(n, k, n, [])
    return out


def b_derived(lam: Sequence[int]) -> int:
    """2*lam_1 + 4*lam_2 + ... + 2k*lam_k with lam decreasing."""
    return sum(2 * i * x for i, x in enumerate(lam, start=1))


def b_printed(lam: Sequence[int]) -> int:
    """2k*lam_1 + 2(k-1)*lam_2 + ... + 2*lam_{k-1} + lam_k, read literally."""
    k = len(lam)
    return sum((2 * (k - i) if i < k - 1 else 1) * x for i, x in enumerate(lam))


B_CANDIDATES: dict[str, Callable[[Sequence[int]], int]] = {
    "derived": b_derived,
    "printed": b_printed,
}


def linear_b(coeffs: Sequence[int]) -> Callable[[Sequence[int]], int]:
    """b(lam) = sum coeffs[i] * lam_i (lam decreasing)."""
    coeffs = list(coeffs)

    def b(lam):
        if len(lam) > len(coeffs):
            raise ValueError("not enough coefficients for this k")
        return sum(c * x for c, x in zip(coeffs, lam))

    return b


@dataclass
class StantonResult:
    n: int
    k: int
    holds: bool
    holds_at_one: bool
    first_diff: tuple[int, int, int] | None = None  # (exponent, lhs, rhs)

    def to_json(self) -> dict:
        out = {"n": self.n, "k": self.k, "holds": self.holds, "holds_at_one": self.holds_at_one}
        if self.first_diff is not None:
            e, a, b = self.first_diff
            out["first_diff"] = {"exponent": e, "lhs": a, "rhs": b}
        return out


def stanton_sides(n: int, k: int, b: Callable) -> tuple[IntPoly, IntPoly]:
    lhs = q_binom(n - 1, k - 1).shift(2 * n + k * (k - 1))
    rhs = IntPoly()
    for lam in partitions_into(n, k):
        mult = list(Counter(lam).values())
        rhs = rhs + expand(q_multinomial(k, mult)).shift(b(lam))
    return lhs, rhs


def stanton_check(n: int, k: int, b: Callable | str = "derived") -> StantonResult:
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    bf = B_CANDIDATES[b] if isinstance(b, str) else b
    at_one_lhs = math.comb(n - 1, k - 1)
    at_one_rhs = 0
    for lam in partitions_into(n, k):
        mult = math.factorial(k)
        for c in Counter(lam).values():
            mult //= math.factorial(c)
        at_one_rhs += mult
    lhs, rhs = stanton_sides(n, k, bf)
    res = StantonResult(n, k, lhs == rhs, at_one_lhs == at_one_rhs)
    if not res.holds:
        top = max(len(lhs.coeffs), len(rhs.coeffs))
        e = next(e for e in range(top) if lhs[e] != rhs[e])
        res.first_diff = (e, lhs[e], rhs[e])
    return res
