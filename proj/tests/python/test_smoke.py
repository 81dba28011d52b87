import pytest

import graphdecomp as gd


def chain():
    return gd.Digraph([("a", "b"), ("b", "c")])


def test_inflation_chain():
    g = chain()
    assert gd.inflate(g, ["a"]) == ["a", "b"]
    assert gd.hull(g, ["a"]) == ["a", "b", "c"]
    assert gd.hyperinflate(g, ["a"]) == [["a"], ["a", "b"], ["a", "b", "c"]]
    assert not gd.is_stable(g, ["a"])
    assert gd.is_stable(g, ["a", "b", "c"])
    assert gd.hyperinflation_witness(g, ["a", "b", "c"]) == ["a"]
    assert gd.hyperinflation_witness(g, ["a", "b"]) is None


def test_neighborhoods_and_loops():
    g = gd.Digraph([("v", "v")], isolated=["w"])
    assert g.in_set("v") == ["v"]
    assert g.out_set("v") == ["v"]
    assert g.in_set("w") == []
    assert g.vertex_count == 2


def test_region_and_intervals():
    g = chain()
    region = gd.region_of(g, "a")
    assert region["vertices"] == ["a", "b", "c"]
    assert region["headings"] == ["a"]

    d = gd.interval_decomposition(g)
    assert d["kind"] == "interval"
    assert len(d["components"]) == 1
    assert d["components"][0]["headings"] == ["a"]
    assert d["components"][0]["jet_layers"] == [["b"], ["c"]]


def test_seeded_process_replaces_swallowed_components():
    d = gd.seeded_decomposition(chain(), seeds=[["c"], ["a"]])
    assert [c["seed"] for c in d["components"]] == [["a"]]


def test_matching_roundtrip():
    g = gd.UndirectedGraph([("a", "b"), ("b", "c"), ("c", "d")])
    m = gd.maximal_matching(g)
    assert m == [("a", "b"), ("c", "d")]
    maximal, witness = gd.is_maximal_matching(g, m)
    assert maximal and witness is None
    partial, extendable = gd.is_maximal_matching(g, [("a", "b")])
    assert not partial and extendable == ("c", "d")


def test_undirected_decomposition():
    star = gd.UndirectedGraph([("hub", "x"), ("hub", "y"), ("hub", "z")])
    d = gd.arc_seed_decomposition(star)
    assert d["kind"] == "arc-seed"
    assert d["components"][0]["vertices"] == ["hub", "x", "y", "z"]
    assert d["leftover"] == []


def test_bowtie_and_bounds():
    bowtie = gd.UndirectedGraph(
        [("c", "a1"), ("c", "a2"), ("a1", "a2"), ("c", "b1"), ("c", "b2"), ("b1", "b2")]
    )
    found = gd.find_bowtie(bowtie)
    assert found is not None and found["center"] == "c"

    assert gd.find_bowtie(gd.extremal_construction(10)) is None
    assert gd.bowtie_bound(7) == 13

    report = gd.ex_oracle(5)
    assert report["oracle_bound"] == 7 and report["formula_matches"]
    k4 = gd.ex_oracle(4)
    assert k4["oracle_bound"] == 6 and not k4["formula_matches"]

    check = gd.volume_bound_check(gd.extremal_construction(6))
    assert check["applicable"] and check["holds"]


def test_jets():
    g = gd.Digraph([("x", "b"), ("b", "c")])
    ok, _ = gd.verify_jet(g, [["b"], ["c"]])
    assert ok
    bad, message = gd.verify_jet(g, [["b", "c"]])
    assert not bad and "layer" in message

    jet_graph = gd.Digraph([("u", "v")])
    interval = gd.jet_to_interval(jet_graph, [["u"], ["v"]], heading_label="h")
    assert gd.region_of(interval, "h")["vertices"] == ["h", "u", "v"]
    assert gd.jet_layers(interval, "h") == [["u"], ["v"]]


def test_text_formats():
    g = gd.parse_edge_list("a b\nb c\n# comment\nd\n", directed=True)
    assert g.vertex_count == 4
    assert ("a", "b") in g.arcs
    text = gd.to_edge_list(g)
    again = gd.parse_edge_list(text, directed=True)
    assert sorted(again.arcs) == sorted(g.arcs)

    dot = gd.parse_dot("graph { a -- b; }")
    assert dot.edge_count == 1


def test_error_mapping():
    with pytest.raises(ValueError):
        gd.UndirectedGraph([("a", "a")])  # loop
    with pytest.raises(ValueError):
        gd.inflate(chain(), ["missing"])
    with pytest.raises(RuntimeError):
        gd.ex_oracle(9)  # beyond the default budget
