"""Smoke tests for the python bindings.

The extension is importable either as the installed package `gspx` or as the
raw build-tree module `_gspx` (selected via the GSPX_PYMODULE env var set by
the CMake test harness).
"""

import importlib
import math
import os

import numpy as np
import pytest

gx = importlib.import_module(os.environ.get("GSPX_PYMODULE", "gspx"))


def test_graph_roundtrip_and_shift():
    g = gx.new_graph(3, [(0, 1, 1.0), (1, 2, 0.5)])
    assert g.n == 3
    s = gx.shift_operator(g)
    assert s[0, 1] == 1.0 and s[1, 0] == 1.0 and s[1, 2] == 0.5
    with pytest.raises(Exception):
        gx.new_graph(2, [(0, 0, 1.0)])


def test_gft_parseval_and_inverse():
    g = gx.new_graph(4, [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (0, 3, 1.0)])
    x = gx.GraphSignal(np.array([1.0, -2.0, 3.0, 0.5]))
    spec = gx.graph_spectrum(g)
    c = gx.gft(spec, x)
    assert c.l2_norm() == pytest.approx(np.linalg.norm(x.values), abs=1e-12)
    back = gx.igft(spec, c)
    np.testing.assert_allclose(back.values, x.values, atol=1e-12)


def test_induced_graphon_matches_graph_spectrum():
    g = gx.new_graph(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)])
    w = gx.induce_graphon(g)
    ws = gx.step_spectrum(w)
    gs = gx.graph_spectrum(g)
    for j in gs.indices():
        assert ws.at(j).sigma == pytest.approx(gs.at(j).sigma / g.n, abs=1e-12)


def test_wft_product_kernel():
    spec, coeffs = gx.wft_numeric(gx.AnalyticKernel.product(), gx.AnalyticSignal.identity(), 400)
    assert spec.at(1).sigma == pytest.approx(1.0 / 3.0, abs=5e-3)
    assert abs(coeffs.at(1)) == pytest.approx(math.sqrt(3.0) / 3.0, abs=5e-3)


def test_sampling_is_deterministic():
    w = gx.AnalyticKernel.constant(0.5)
    g1, l1 = gx.sample_w_random_graph(w, 20, 7, 0)
    g2, l2 = gx.sample_w_random_graph(w, 20, 7, 0)
    np.testing.assert_array_equal(g1.weights, g2.weights)
    np.testing.assert_array_equal(l1.u, l2.u)
    g3, _ = gx.sample_w_random_graph(w, 20, 7, 1)
    assert not np.array_equal(g1.weights, g3.weights)


def test_densities_and_norms():
    k3 = gx.new_graph(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)])
    assert gx.cycle_density_graph(3, k3) == pytest.approx(6.0 / 27.0, abs=1e-15)
    assert gx.hom_density_graph(gx.Motif.triangle(), k3) == pytest.approx(6.0 / 27.0, abs=1e-15)

    m = np.array([[0.5, -0.5], [-0.5, 0.5]])
    w = gx.StepGraphon(m, -1.0, 1.0)
    assert gx.cut_norm_step(w).value == pytest.approx(0.125, abs=1e-12)
    assert gx.check_norm_sandwich(w).holds


def test_experiment_helpers():
    assert gx.quantiles([1.0, 2.0, 3.0, 4.0], [0.5])[0] == pytest.approx(2.5)
    assert gx.spearman([1.0, 2.0, 3.0], [3.0, 2.0, 1.0]) == pytest.approx(-1.0)
    w = gx.pollution_graphon(3.0)
    assert w(0.2, 0.2) == pytest.approx(1.0)
    x = gx.pollution_signal(0.3)
    assert x(0.0) == pytest.approx(1.0)
