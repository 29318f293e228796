"""End-to-end smoke test of the python bindings."""

import math

import cdsample


def test_graph_roundtrip():
    g = cdsample.Graph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
    assert g.node_count == 4
    assert g.edge_count == 4
    assert g.degree(0) == 3
    assert g.has_edge(1, 2)
    assert not g.has_edge(1, 3)


def test_load_edge_list():
    g = cdsample.load_edge_list("# header\n1 2\n2 3\n3 1\n")
    assert g.node_count == 3
    assert g.edge_count == 3


def test_dpl_helpers():
    alpha = cdsample.densification_exponent(500, 1000)
    assert abs(alpha - 1.1115) < 1e-3
    assert cdsample.dpl_edge_target(50, 1.11) in (76, 77)


def test_communities_on_two_triangles():
    g = cdsample.Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
    comms = cdsample.modularity_partition(g)
    assert sorted(sorted(c) for c in comms) == [[0, 1, 2], [3, 4, 5]]
    q = cdsample.modularity(g, [0, 0, 0, 1, 1, 1])
    assert abs(q - 0.35714285) < 1e-6


def test_sampling_and_evaluation():
    g = cdsample.generate_preferential_attachment(300, 3, seed=5)
    s = cdsample.sample(g, "C+D", fraction=0.2, seed=9)
    assert s.method == "C+D"
    assert len(s.nodes) == round(0.2 * 300)
    sg = s.to_graph()
    dists = cdsample.ks_distance(g, sg)
    assert set(dists) == {"degree", "sval", "svec", "cc", "hop"}
    for v in dists.values():
        assert 0.0 <= v <= 1.0
    assert math.isfinite(cdsample.dpl_difference(g, sg))


def test_sampling_is_deterministic():
    g = cdsample.generate_preferential_attachment(200, 3, seed=1)
    a = cdsample.sample(g, "FF", fraction=0.3, seed=4)
    b = cdsample.sample(g, "FF", fraction=0.3, seed=4)
    assert a.nodes == b.nodes and a.edges == b.edges


def test_properties_shapes():
    g = cdsample.generate_preferential_attachment(120, 3, seed=2)
    props = cdsample.properties(g, svd_k=10)
    assert [p["kind"] for p in props] == ["degree", "sval", "svec", "cc", "hop"]
    for p in props:
        assert abs(sum(p["mass"]) - 1.0) < 1e-9
