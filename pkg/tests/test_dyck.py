from __future__ import annotations

import math

import pytest

from sievekit.dissect import Dissection, enumerate_angulations, rotate
from sievekit.dyck import (
    MDyckPath,
    balance_labels,
    brow,
    enumerate_dyck,
    height_sequence,
    quiddity_from_dyck,
    rot_tilde,
    rtn,
    validate,
)
from sievekit.errors import NotBallot
from sievekit.frieze import frieze_from_dissection

SMALL = [(m, ell) for m in (1, 2, 3) for ell in range(1, 5)]

FIGURE = "UURURRUURRRRRRR"


def test_validate_reports_position():
    with pytest.raises(NotBallot) as exc:
        validate("URRR", 2)
    assert exc.value.position == 4
    with pytest.raises(NotBallot):
        validate("UUR", 1)
    with pytest.raises(ValueError):
        validate("UXR", 1)


@pytest.mark.parametrize("m,ell", SMALL)
def test_fuss_catalan_count(m, ell):
    paths = enumerate_dyck(m, ell)
    assert len(paths) == math.comb((m + 1) * ell, ell) // (m * ell + 1)
    assert all(validate(D.word, m) == D for D in paths)


@pytest.mark.parametrize("m,ell", SMALL)
def test_brow_and_rtn_are_inverse(m, ell):
    N = m * ell + 2
    angs = enumerate_angulations(N, m + 2)
    paths = {D.word for D in enumerate_dyck(m, ell)}
    assert {brow(T).word for T in angs} == paths
    for T in angs:
        assert rtn(brow(T)) == T
    for word in paths:
        D = MDyckPath(m, word)
        assert brow(rtn(D)) == D


@pytest.mark.parametrize("m,ell", SMALL)
def test_rotation_commutes(m, ell):
    for T in enumerate_angulations(m * ell + 2, m + 2):
        assert brow(rotate(T)) == rot_tilde(brow(T))


@pytest.mark.parametrize("m,ell", [(1, 3), (2, 2), (2, 3), (3, 2)])
def test_quiddity_from_path(m, ell):
    for D in enumerate_dyck(m, ell):
        F = frieze_from_dissection(rtn(D))
        assert tuple(quiddity_from_dyck(D)) == F.quiddity


def test_figure_path():
    D = validate(FIGURE, 2)
    assert balance_labels(D) == [(0, 9), (1, 8), (3, 6), (3, 8)]
    assert rot_tilde(D).word == "UURRUURRRRRRURR"
    assert height_sequence(D)[-1] == 0


def test_small_fan():
    assert brow(Dissection.of(4, [(0, 2)])).word == "UURR"
