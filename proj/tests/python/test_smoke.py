"""Smoke tests for the python bindings."""

import pytest

import tropjac as tj


@pytest.fixture
def theta():
    return tj.Graph(weights=[0, 0], edges=[(0, 1), (0, 1), (0, 1)], legs=[0])


def test_graph_basics(theta):
    assert theta.num_vertices == 2
    assert theta.num_edges == 3
    assert tj.betti(theta) == 2
    assert tj.genus(theta) == 2
    assert tj.is_stable(theta)
    assert theta.v0() == 0
    assert tj.valence(theta, 0, [0, 1, 2]) == 3
    assert tj.delta(theta, [0]) == 3


def test_spanning_trees_and_laplacian(theta):
    assert tj.spanning_trees(theta) == [[0], [1], [2]]
    assert tj.matrix_tree_count(theta) == "3"
    assert tj.laplacian(theta) == [[3, -3], [-3, 3]]
    assert tj.automorphism_count(theta) == 6


def test_quasistability(theta):
    mu = tj.zero_polarization(theta)
    assert tj.is_quasistable(theta, 0, mu, [0, 0])
    assert tj.is_quasistable(theta, 0, mu, [-1, 1])
    assert not tj.is_quasistable(theta, 0, mu, [2, -2])
    assert tj.beta(theta, mu, [1, -1], [1]) == "1/2"
    with pytest.raises(ValueError):
        tj.is_quasistable(theta, 0, mu, [1, 0])  # degree mismatch


def test_enumeration_and_poset(theta):
    mu = tj.zero_polarization(theta)
    elements = tj.enumerate_quasistable(theta, 0, mu)
    assert len(elements) == 12
    poset = tj.build_qd_poset(theta, 0, mu)
    assert poset["ranked"]
    assert poset["length"] == 2
    assert poset["connected_codim1"]
    assert sorted(poset["ranks"]).count(1) == 6
    assert len(poset["maximal"]) == 3


def test_reduction(theta):
    mu = tj.zero_polarization(theta)
    assert tj.reduce_graph(theta, 0, mu, [3, -3]) == [0, 0]
    assert tj.reduce_graph(theta, 0, mu, [1, -1]) == [1, -1]


def test_polarizations(theta):
    can = tj.canonical_polarization(theta, 2)
    assert can.values == ["1", "1"]
    conc = tj.v0_concentrated_polarization(theta, 2)
    assert conc.values == ["2", "0"]
    custom = tj.Polarization(theta, 1, ["1/3", "2/3"])
    assert custom.degree == 1


def test_tropical_reduction(theta):
    curve = tj.TropicalCurve(theta, ["1", "1", "1"])
    assert curve.genus == 2
    mu = tj.zero_polarization(theta)
    p0 = tj.CurvePoint.at_vertex(0)
    d = [(tj.CurvePoint.at_vertex(0), 3), (tj.CurvePoint.at_vertex(1), -3)]
    result = tj.reduce_tropical(curve, p0, mu, d)
    assert result["reduced"] == []  # the zero divisor
    assert tj.tropical_equivalent(curve, d, [])
    assert tj.is_quasistable_curve(
        curve, p0, mu, [(tj.CurvePoint.on_edge(0, "1/2"), -1), (p0, 1)]
    )


def test_jacobian(theta):
    curve = tj.TropicalCurve(theta, ["1", "1", "1"])
    mu = tj.zero_polarization(theta)
    p0 = tj.CurvePoint.at_vertex(0)
    assert tj.jacobian_f_vector(curve, p0, mu) == [3, 6, 3]
    assert tj.jacobian_euler_characteristic(curve, p0, mu) == 0


def test_universal():
    assert tj.stable_graph_count(1) == 2
    summary = tj.universal_summary(1, "concentrated", 0)
    assert summary["ok"]
    assert summary["expected_dimension"] == 2
    assert summary["elements"] == 3


def test_json_ingestion():
    g = tj.graph_from_json(
        '{"vertices":[{"id":5,"weight":1}],"edges":[],"legs":[{"index":0,"vertex":5}]}'
    )
    assert tj.genus(g) == 1


def test_validation_errors(theta):
    with pytest.raises(ValueError):
        tj.Graph(weights=[0, 0], edges=[], legs=[])  # disconnected
    with pytest.raises(ValueError):
        tj.TropicalCurve(theta, ["1", "0", "1"])  # nonpositive length
