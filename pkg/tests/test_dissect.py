from __future__ import annotations

import math
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sievekit.dissect import (
    Dissection,
    SymmetricCode,
    TypeVector,
    a_mu_count,
    a_mu_poly,
    all_codes,
    crosses,
    decode_symmetric,
    encode_symmetric,
    enumerate_all,
    enumerate_angulations,
    enumerate_by_type,
    fixed_point_formula,
    fixed_points,
    rotate,
    triangulations,
    type_vector,
    type_vectors,
)
from sievekit.errors import ConditionViolated, InvalidDissection, NotSymmetric
from sievekit.qcalc import eval_int_at_root


def brute_dissections(N: int) -> set[frozenset]:
    """Every set of pairwise noncrossing diagonals, by subset search."""
    diags = [(i, j) for i in range(N) for j in range(i + 2, N) if (i, j) != (0, N - 1)]
    out = {frozenset()}
    frontier = [((), -1)]
    while frontier:
        chosen, last = frontier.pop()
        for idx in range(last + 1, len(diags)):
            d = diags[idx]
            if all(not crosses(d, c) for c in chosen):
                nxt = chosen + (d,)
                out.add(frozenset(nxt))
                frontier.append((nxt, idx))
    return out


@pytest.mark.parametrize("N", range(3, 9))
def test_enumeration_matches_subset_search(N):
    assert {T.diagonals for T in enumerate_all(N)} == brute_dissections(N)


@pytest.mark.parametrize("N", range(3, 11))
def test_dissection_counts_by_number_of_diagonals(N):
    # Kirkman-Cayley numbers
    counts = {}
    for T in enumerate_all(N):
        counts[len(T.diagonals)] = counts.get(len(T.diagonals), 0) + 1
    for k, c in counts.items():
        assert c == math.comb(N - 3, k) * math.comb(N + k - 1, k) // (k + 1)


def test_triangulations_are_catalan():
    for N in range(3, 11):
        assert len(triangulations(N)) == math.comb(2 * (N - 2), N - 2) // (N - 1)


def test_fuss_catalan_angulations():
    # (m+2)-angulations of the (m l + 2)-gon
    for m in (1, 2, 3):
        for ell in range(1, 4):
            N = m * ell + 2
            want = math.comb((m + 1) * ell, ell) // (m * ell + 1)
            assert len(enumerate_angulations(N, m + 2)) == want


@pytest.mark.parametrize("N", range(3, 10))
def test_type_counts_match_formula(N):
    for tv in type_vectors(N - 2):
        found = enumerate_by_type(tv)
        assert all(type_vector(T) == tv for T in found)
        assert len(found) == a_mu_count(tv) == a_mu_poly(tv).at_one()


def test_validation():
    with pytest.raises(InvalidDissection):
        Dissection(6, frozenset({(0, 3), (1, 4)}))
    with pytest.raises(InvalidDissection):
        Dissection(6, frozenset({(0, 1)}))
    with pytest.raises(InvalidDissection):
        Dissection(2)
    with pytest.raises(ValueError):
        TypeVector((0, 0))
    assert TypeVector((1, 0, 0)).mu == (1,)


def test_faces_of_hexagon_example():
    T = Dissection.of(6, [(0, 2), (2, 5), (3, 5)])
    assert sorted(T.faces()) == [(0, 1, 2), (0, 2, 5), (2, 3, 5), (3, 4, 5)]


@settings(max_examples=50, deadline=None)
@given(N=st.integers(4, 9), data=st.data())
def test_rotation_is_an_action(N, data):
    T = data.draw(st.sampled_from(sorted(enumerate_all(N), key=Dissection.sorted_diagonals)))
    assert rotate(rotate(T, 2), 3) == rotate(T, 5)
    assert rotate(T, N) == T
    assert type_vector(rotate(T)) == type_vector(T)


@pytest.mark.parametrize("N", range(3, 11))
def test_fixed_points_formula_and_evaluation(N):
    for tv in type_vectors(N - 2):
        poly = a_mu_poly(tv)
        for d in range(1, N + 1):
            if N % d:
                continue
            fixed = len(fixed_points(tv, d))
            assert fixed == fixed_point_formula(tv, d) == eval_int_at_root(poly, d)


def test_symmetric_codes_round_trip():
    for N in range(4, 13):
        for tv in type_vectors(N - 2):
            for d in range(2, N + 1):
                if N % d:
                    continue
                decoded = set()
                for code in all_codes(tv, d):
                    try:
                        T = decode_symmetric(code, tv, d)
                    except ConditionViolated:
                        continue
                    assert encode_symmetric(T, d) == code
                    decoded.add(T)
                if decoded:
                    assert len(decoded) == fixed_point_formula(tv, d)
                    if N <= 10:
                        assert decoded == fixed_points(tv, d)


def test_encode_rejects():
    T = Dissection.of(6, [(0, 2), (2, 4), (4, 0)])
    assert encode_symmetric(T, 3) == SymmetricCode(3, ((0, 1),))
    with pytest.raises(NotSymmetric):
        encode_symmetric(Dissection.of(6, [(0, 2), (0, 3), (0, 4)]), 3)
    with pytest.raises(ConditionViolated):
        encode_symmetric(Dissection.of(6, [(0, 3)]), 2)


def test_json_round_trip():
    T = Dissection.of(8, [(0, 4), (1, 3), (5, 7)])
    assert Dissection.from_json(T.to_json()) == T
