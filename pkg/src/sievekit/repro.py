"""Named reproductions of worked examples, compared with stored expectations.

Each target recomputes its numbers from scratch; the expected values in
``repro_data/<name>.json`` were transcribed by hand, not generated.
"""

from __future__ import annotations

import json
from importlib import resources
from typing import Callable

from .csp import CyclicFamily, class_count, class_count_from_poly
from .dissect import Dissection, a_mu_poly, rotate, triangulations
from .dyck import (
    balance_labels,
    bal_stat,
    height_sequence,
    quiddity_coefficients,
    rot_tilde,
    rtn,
    up_stat,
    validate,
)
from .frieze import (
    _Quiddity,
    InfiniteFrieze,
    frieze_from_dissection,
    frieze_from_punctured,
    growth_coefficient,
    ones_in_fundamental_domain,
    orbifold_frieze,
)
from .punctured import (
    PuncturedDissection,
    enumerate_punctured,
    fixed_points_punctured,
    p_count,
    rotate_punctured,
    t_poly,
    t_total_poly,
)
from .qcalc import CycInt, eval_int_at_root

# printed q^1 sequence for punctured triangulations, n = 1..7
PRINTED_Q1 = [1, 1, 3, 8, 27, 245, 800]


def printed_rows(F: _Quiddity, rows: range, period: int) -> list[list[str]]:
    """Rows in the staggered-array convention: entry t of row k is F(t - k//2, t - k//2 + k)."""
    out = []
    for k in rows:
        out.append([str(F._raw(t - k // 2, t - k // 2 + k)) for t in range(period)])
    return out


def punctured_example(spoke: int = 1) -> PuncturedDissection:
    """Triangulation of the punctured hexagon with one spoke and a loop."""
    T = PuncturedDissection.from_arcs(
        6, 1, [("spoke", 1), (1, 6), (5, 2), (1, 4), (1, 2), (3, 2)])
    return rotate_punctured(T, 1 - spoke) if spoke != 1 else T


HEXAGON_EXAMPLES = {
    "triangulation": [(0, 2), (2, 5), (3, 5)],
    "quadrangulation": [(2, 5)],
    "mixed": [(0, 2), (2, 5)],
}


def _bijections_to_fps() -> dict:
    out = {}
    for name, diags in HEXAGON_EXAMPLES.items():
        F = frieze_from_dissection(Dissection.of(6, diags))
        out[name] = printed_rows(F, range(7), 6)
    return out


def _infinite_frieze_p6() -> dict:
    F = frieze_from_punctured(punctured_example(spoke=1))
    return {"rows": printed_rows(F, range(2, 5), 6), "growth": str(growth_coefficient(F, 1))}


def _orbifold_tables() -> dict:
    lifts = {
        "2": Dissection.of(6, [(0, 3), (0, 2), (3, 5)]),
        "3": Dissection.of(9, [(0, 3), (3, 6), (6, 0), (0, 2), (3, 5), (6, 8)]),
    }
    out = {}
    for p, T in lifts.items():
        O = orbifold_frieze(T, int(p))
        out[p] = [[str(x) for x in row] for row in O.table()]
    return out


def _punctured_counts() -> dict:
    A = enumerate_punctured(15, 3, 3)
    return {
        "total": len(A),
        "with_spoke_v0": sum(1 for T in A if 0 in T.spokes),
        "sector_products": [p_count(3, 2) ** 2 * p_count(3, 1),
                            p_count(3, 3) * p_count(3, 1) ** 2],
        "t_12_1_at_zeta3": eval_int_at_root(t_poly(12, 3, 1), 3),
        "fixed_12_1_d3": len(fixed_points_punctured(12, 3, 1, 3)),
    }


def lambda5_representatives() -> list[PuncturedDissection]:
    arcs = [(9, 4), (10, 4), (11, 4)]  # (v9,v1), (v10,v2), (v11,v3)
    return [PuncturedDissection.from_arcs(
        12, 3, [("spoke", 3), ("spoke", 6), ("spoke", 9), a]) for a in arcs]


def _lambda5_classes() -> dict:
    A = enumerate_punctured(12, 3, 3)
    fam = CyclicFamily.from_action(A, rotate_punctured, 12)
    orbit_of = {}
    for idx, T in enumerate(A):
        if T in orbit_of:
            continue
        x = T
        for _ in range(12):
            orbit_of[x] = idx
            x = rotate_punctured(x)
    reps = lambda5_representatives()
    return {
        "total": len(A),
        "q1": class_count_from_poly(t_poly(12, 3, 3), 12, 1),
        "classes": class_count(fam),
        "representative_classes": len({orbit_of[T] for T in reps}),
        "ones_per_representative": [ones_in_fundamental_domain(frieze_from_punctured(T), 36)
                                    for T in reps],
    }


def _dyck_figure() -> dict:
    D = validate("UURURRUURRRRRRR", 2)
    return {
        "labels": [list(x) for x in balance_labels(D)],
        "heights": height_sequence(D),
        "rot": rot_tilde(D).word,
        "up": {str(i): up_stat(D, i) for i in (0, 1, 3)},
        "bal": {str(i): bal_stat(D, i) for i in (6, 8, 9)},
        "quiddity_sqrt2": quiddity_coefficients(D),
        "rtn": [list(d) for d in rtn(D).sorted_diagonals()],
    }


def _growth_coefficients() -> dict:
    s2 = CycInt.lam(4)
    annulus = InfiniteFrieze((CycInt.from_int(1, 8), 2 + s2, 2 + 2 * s2))
    return {"punctured_hexagon": str(growth_coefficient(frieze_from_punctured(punctured_example()))),
            "annulus": str(growth_coefficient(annulus))}


def q1_sequence(max_n: int = 7) -> list[int]:
    """Free orbits of punctured triangulations, n = 1..max_n, by brute force."""
    out = []
    for n in range(1, max_n + 1):
        elems = [T for s in range(1, n + 1) for T in enumerate_punctured(n, 1, s)]
        fam = CyclicFamily.from_action(elems, rotate_punctured, n)
        out.append(fam.census().get(1, 0))
    return out


def _q1_sequence() -> dict:
    brute = q1_sequence(7)
    from_poly = [class_count_from_poly(t_total_poly(n), n, 1 % n) if n > 1 else brute[0]
                 for n in range(1, 8)]
    return {"brute_force": brute, "from_polynomial": from_poly, "printed": PRINTED_Q1,
            "diverges_at_n": [n for n, (a, b) in enumerate(zip(brute, PRINTED_Q1), 1) if a != b]}


def _hexagon_classes() -> dict:
    A = sorted(triangulations(6), key=lambda T: T.sorted_diagonals())
    fam = CyclicFamily.from_action(A, rotate, 6)
    return {"burnside": class_count(fam),
            "constant_term": class_count_from_poly(a_mu_poly((4,)), 6, 0)}


TARGETS: dict[str, Callable[[], dict]] = {
    "example-bijections-to-fps": _bijections_to_fps,
    "infinite-frieze-p6": _infinite_frieze_p6,
    "orbifold-tables": _orbifold_tables,
    "punctured-counts": _punctured_counts,
    "lambda5-classes": _lambda5_classes,
    "dyck-figure": _dyck_figure,
    "growth-coefficients": _growth_coefficients,
    "q1-sequence": _q1_sequence,
    "hexagon-classes": _hexagon_classes,
}


def expected(name: str) -> dict:
    text = resources.files("sievekit").joinpath("repro_data", f"{name}.json").read_text("utf-8")
    return json.loads(text)


def diff(actual, want, path: str = "") -> list[str]:
    """Human-readable differences between two JSON values."""
    if isinstance(actual, dict) and isinstance(want, dict):
        out = []
        for k in sorted(set(actual) | set(want)):
            if k not in actual:
                out.append(f"{path}/{k}: missing")
            elif k not in want:
                out.append(f"{path}/{k}: unexpected")
            else:
                out.extend(diff(actual[k], want[k], f"{path}/{k}"))
        return out
    if isinstance(actual, list) and isinstance(want, list) and len(actual) == len(want):
        out = []
        for i, (a, w) in enumerate(zip(actual, want)):
            out.extend(diff(a, w, f"{path}[{i}]"))
        return out
    return [] if actual == want else [f"{path}: got {actual!r}, expected {want!r}"]


def run(name: str) -> tuple[dict, list[str]]:
    if name not in TARGETS:
        raise KeyError(name)
    actual = TARGETS[name]()
    return actual, diff(actual, expected(name))
