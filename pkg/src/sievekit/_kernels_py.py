"""Pure-Python reference kernels.

Every function here has a twin with the same signature in ``_ckernels.pyx``.
Coefficient lists are little-endian (index = power of q) and hold Python ints.
"""

from __future__ import annotations


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_div_qint(p: list[int], j: int) -> tuple[list[int], bool]:
    """Divide by [j]_q = 1 + q + ... + q^(j-1).

    Uses (q - 1)[j]_q = q^j - 1: multiply by (q - 1), then divide by q^j - 1.
    Returns (quotient, exact).
    """
    if j == 1:
        return list(p), True
    if not p:
        return [], True
    # r = p * (q - 1)
    r = [0] * (len(p) + 1)
    for i, c in enumerate(p):
        r[i + 1] += c
        r[i] -= c
    deg = len(r) - 1
    if deg < j:
        return [], all(c == 0 for c in r)
    quot = [0] * (deg - j + 1)
    rem = list(r)
    for k in range(deg, j - 1, -1):
        c = rem[k]
        if c:
            quot[k - j] = c
            rem[k] = 0
            rem[k - j] += c
    exact = all(c == 0 for c in rem[:j])
    return quot, exact


def poly_rem_monic(p: list[int], m: list[int]) -> list[int]:
    """Remainder of p modulo a monic polynomial m (len(m) >= 1)."""
    dm = len(m) - 1
    if dm == 0:
        return []
    rem = list(p)
    for k in range(len(rem) - 1, dm - 1, -1):
        c = rem[k]
        if c:
            off = k - dm
            for t in range(dm):
                rem[off + t] -= c * m[t]
            rem[k] = 0
    rem = rem[:dm]
    rem.extend([0] * (dm - len(rem)))
    return rem


def continuant(xs: list[int], sign: int) -> int:
    """K_0 = 1, K_n = x_n K_{n-1} + sign * K_{n-2} over Python ints."""
    prev, cur = 0, 1
    for x in xs:
        prev, cur = cur, x * cur + sign * prev
    return cur


def count_matchings(choices: list[list[int]], capacity: list[int]) -> int:
    """Count sequences picking one face id from each ``choices[t]``.

    Face f may be picked at most ``capacity[f]`` times overall.
    """
    used = [0] * len(capacity)
    npos = len(choices)

    def rec(t: int) -> int:
        if t == npos:
            return 1
        total = 0
        for f in choices[t]:
            if used[f] < capacity[f]:
                used[f] += 1
                total += rec(t + 1)
                used[f] -= 1
        return total

    return rec(0)
