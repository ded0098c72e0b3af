import json
import math
import os
import pathlib

import numpy as np
import pytest

import crouzeix_lab as cl

SCHEMAS = pathlib.Path(os.environ.get("CROUZEIX_SCHEMAS", pathlib.Path(__file__).parents[2] / "schemas"))


def test_kms_matrix():
    a = cl.kms_matrix(4)
    assert a.shape == (4, 4)
    assert np.array_equal(a, np.triu(np.ones((4, 4)), 1))
    assert np.allclose(np.linalg.matrix_power(a, 4), 0)


def test_geometry():
    assert abs(cl.boundary_point(3, 0.0) - 1.0) < 1e-15
    assert abs(cl.cardioid_p(1.0)) < 1e-15
    assert abs(cl.tangential_poly(3, 1.0, 0.0, 0.5) - (0.125 - 0.375 + 0.25)) < 1e-14
    assert abs(cl.support_function(5, 0.0) - 2.0) < 1e-12
    b = cl.boundary(3, 40)
    assert len(b["nodes"]) % 2 == 1
    assert set(b["parts"]) == {"algebraic", "segment"}
    assert "<svg" in cl.boundary_svg(4, 40)


def test_map_and_bracket_coarse():
    d = cl.map_kms(3, 80)
    assert d["nn"] == len(cl.boundary(3, 80)["nodes"])
    assert abs(d["M"][0, 1] - 1.3603745) < 1e-5
    r = cl.bracket(3, 80)
    assert r["bounds"]["bracket_valid"]
    assert r["bounds"]["lower"] <= r["bounds"]["upper"] + 1e-9


def test_bounds_schema():
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads((SCHEMAS / "bounds.schema.json").read_text())
    jsonschema.validate(cl.bracket(4, 40), schema)
    schema = json.loads((SCHEMAS / "omega.schema.json").read_text())
    jsonschema.validate({"inclusion": cl.verify_inclusion(200), "h1": {
        "a1": 1.0, "b1": 1.0, "g1_second": 0.0, "cond_h1": cl.cond_h1(),
        "jordan_residual": 0.0, "contraction_norm": 1.0}}, schema)


def test_omega():
    r = cl.verify_inclusion(1000)
    assert r["included"]
    assert abs(r["min_re_segment"] + 0.4998968) < 2e-6
    assert abs(cl.cond_h1() - 1.9996222) < 1e-6


def test_blaschke_norm():
    n = cl.blaschke_norm([1.360374515, 0.710915425], [-0.5470208, 0.1465739])
    assert abs(n - 1.9956978) < 1e-6


def test_errors():
    with pytest.raises(cl.CrouzeixError):
        cl.kms_matrix(1)
    with pytest.raises(cl.CrouzeixError):
        cl.verify_inclusion(102)
    assert math.isfinite(cl.convergence_study(3, [23, 47])["slope_a"])
