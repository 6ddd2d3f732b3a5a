"""Compiled and numpy kernels must agree bit for bit."""

import os
import subprocess
import sys

import numpy as np
import pytest

from t2interval import kernels
from t2interval._kernels_py import cauchy_scan as py_cauchy

BACKENDS = kernels.backends()
needs_compiled = pytest.mark.skipif("cython" not in BACKENDS, reason="compiled kernels not built")


def _data(rng, n):
    A = np.sort(rng.uniform(-10, 10, (n, 4)), axis=1)
    B = np.sort(rng.uniform(0.1, 10, (n, 4)), axis=1)
    flip = rng.random(n) < 0.5
    B[flip] = -B[flip][:, ::-1]
    ints = np.sort(rng.integers(-3, 4, (n, 4)), axis=1).astype(float)
    return A, B, ints


def test_backend_selection_reported():
    assert kernels.BACKEND in BACKENDS


def test_env_var_forces_python_backend():
    env = dict(os.environ, T2INTERVAL_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from t2interval import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


@needs_compiled
@pytest.mark.parametrize("op", [0, 1, 2, 3])
def test_parity_formula_and_corners(rng, op):
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    A, B, ints = _data(rng, 5000)
    for X, Y in ((A, B), (ints, B), (A, np.where(np.abs(B) < 0.5, 1.0, np.round(B)))):
        assert np.array_equal(py.formula_batch(op, X, Y), cy.formula_batch(op, X, Y))
        assert np.array_equal(py.corner_batch(op, X, Y), cy.corner_batch(op, X, Y))


@pytest.mark.parametrize("name", sorted(BACKENDS))
@pytest.mark.parametrize("op", [0, 1, 2, 3])
def test_formula_equals_corners_each_backend(rng, name, op):
    k = BACKENDS[name]
    A, B, ints = _data(rng, 5000)
    assert np.array_equal(k.formula_batch(op, A, B), k.corner_batch(op, A, B))
    if op != 3:
        assert np.array_equal(k.formula_batch(op, A, ints), k.corner_batch(op, A, ints))


@needs_compiled
@pytest.mark.parametrize("op", [0, 1, 2, 3])
def test_parity_type1_and_membership(rng, op):
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    n = 20000
    al, au = rng.uniform(-5, 0, n), rng.uniform(0, 5, n)
    bl, bu = rng.uniform(1, 2, n), rng.uniform(2, 3, n)
    assert all(np.array_equal(p, c) for p, c in zip(py.type1_batch(op, al, au, bl, bu), cy.type1_batch(op, al, au, bl, bu)))
    claimed = np.array([-3.0, -0.5, 0.5, 3.0])
    vp, ep, ip = py.membership_scan(op, al, au, bl, bu, claimed)
    vc, ec, ic = cy.membership_scan(op, al, au, bl, bu, claimed)
    assert vp == vc
    assert np.array_equal(ep, ec)
    assert np.array_equal(ip, ic)


@needs_compiled
def test_parity_distances(rng):
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    T = np.sort(rng.normal(size=(400, 4)), axis=1)
    x = T[7]
    assert np.array_equal(py.distances_to(T, x), cy.distances_to(T, x))
    I = rng.integers(0, 400, 3000)
    J = rng.integers(0, 400, 3000)
    assert np.array_equal(py.pair_distances(T, I, J), cy.pair_distances(T, I, J))
    with pytest.raises(IndexError):
        cy.pair_distances(T, [0], [400])


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_cauchy_scan_semantics(name):
    k = BACKENDS[name]
    n = np.arange(1, 201, dtype=float)
    T = np.stack([0 * n, 1 / n, 1 + 1 / n, 2 + 1 / n], axis=1)
    i, j, d, checked = k.cauchy_scan(T, 1.0)
    assert (i, j) == (-1, -1) and checked == 200 * 199 // 2 and d == np.max(np.abs(T[0] - T[-1]))
    i, j, d, checked = k.cauchy_scan(T, 0.4)
    # first offending pair in (m, then n) order: m=1 (second term) vs n=0
    assert (i, j) == (0, 1) and d == 0.5 and checked == 1
    assert k.cauchy_scan(T, 0.4) == py_cauchy(T, 0.4)


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_shape_validation(name):
    k = BACKENDS[name]
    with pytest.raises(ValueError):
        k.formula_batch(0, np.zeros((3, 3)), np.zeros((3, 3)))
    with pytest.raises(ValueError):
        k.formula_batch(7, np.zeros((1, 4)), np.zeros((1, 4)))
