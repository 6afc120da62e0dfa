from __future__ import annotations

import importlib
import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sievekit import _kernels_py as py
from sievekit import kernels

try:
    from sievekit import _ckernels as cy
except ImportError:  # extension not built
    cy = None

needs_cy = pytest.mark.skipif(cy is None, reason="compiled extension not built")

ints = st.lists(st.integers(-50, 50), min_size=1, max_size=10)


@needs_cy
@settings(max_examples=80, deadline=None)
@given(a=ints, b=ints)
def test_poly_mul_backends_agree(a, b):
    assert list(cy.poly_mul(a, b)) == list(py.poly_mul(a, b))


@needs_cy
@settings(max_examples=80, deadline=None)
@given(a=ints, j=st.integers(1, 6))
def test_poly_div_qint_backends_agree(a, j):
    assert tuple(map(tuple, [cy.poly_div_qint(a, j)[0]])) == tuple(map(tuple, [py.poly_div_qint(a, j)[0]]))
    assert cy.poly_div_qint(a, j)[1] == py.poly_div_qint(a, j)[1]


@needs_cy
@settings(max_examples=80, deadline=None)
@given(a=ints, m=st.lists(st.integers(-3, 3), min_size=0, max_size=4))
def test_poly_rem_monic_backends_agree(a, m):
    monic = m + [1]
    assert list(cy.poly_rem_monic(a, monic)) == list(py.poly_rem_monic(a, monic))


@needs_cy
@settings(max_examples=80, deadline=None)
@given(xs=st.lists(st.integers(-4, 6), max_size=12), sign=st.sampled_from([1, -1]))
def test_continuant_backends_agree(xs, sign):
    assert cy.continuant(xs, sign) == py.continuant(xs, sign)


@needs_cy
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_count_matchings_backends_agree(data):
    faces = data.draw(st.integers(1, 6))
    slots = data.draw(st.integers(0, 7))
    choices = [data.draw(st.lists(st.integers(0, faces - 1), unique=True, max_size=faces))
               for _ in range(slots)]
    cap = data.draw(st.lists(st.integers(0, 2), min_size=faces, max_size=faces))
    assert cy.count_matchings(choices, cap) == py.count_matchings(choices, cap)


def test_continuant_small():
    assert py.continuant([1, 2, 3], 1) == 10
    assert py.continuant([1, 2, 3], -1) == 2
    assert py.continuant([], 1) == 1


def test_count_matchings_small():
    # two slots, one shared face usable once -> only one slot can take it
    assert py.count_matchings([[0], [0, 1]], [1, 1]) == 1
    assert py.count_matchings([[0], [0, 1]], [2, 1]) == 2


def test_env_var_forces_fallback():
    code = "from sievekit import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, SIEVEKIT_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "python"
    assert kernels.BACKEND in ("cython", "python")
