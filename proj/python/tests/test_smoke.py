import pytest

import maxstc


def path(*labels):
    return maxstc.Graph(list(labels), list(zip(labels, labels[1:])))


def test_p4_oracle():
    res = maxstc.solve(path("a", "b", "c", "d"), solver="oracle")
    assert res["value"] == 2
    assert res["strong"] == [("a", "b"), ("c", "d")]
    assert res["weak"] == [("b", "c")]
    assert res["solver"] == "oracle"


def test_auto_matches_oracle_on_generated_graphs():
    for seed in range(20):
        g = maxstc.random_proper_interval(8, seed)
        if len(g.edges) > 30:
            continue
        assert maxstc.solve(g)["value"] == maxstc.solve(g, solver="oracle")["value"]
    for seed in range(20):
        g = maxstc.random_trivially_perfect(8, seed)
        res = maxstc.solve(g, solver="tp")
        assert maxstc.validate(g, res["strong"]) is None


def test_validate_reports_open_wedge():
    g = path("a", "b", "c")
    assert maxstc.validate(g, [("a", "b"), ("b", "c")]) == ("a", "b", "c")
    assert maxstc.validate(g, []) is None


def test_errors():
    with pytest.raises(ValueError):
        maxstc.Graph(["a"], [("a", "a")])
    c4 = maxstc.Graph.from_edge_list("a b\nb c\nc d\nd a\n")
    with pytest.raises(maxstc.WrongClassError):
        maxstc.solve(c4, solver="pig")
    assert maxstc.recognize_proper_interval(c4) is None
    assert maxstc.solve(c4, solver="bip")["value"] == 2


def test_incompat_and_twins():
    k3 = maxstc.Graph.from_edge_list("a b\na c\nb c\n")
    assert maxstc.incompat_graph(k3).edges == []
    assert maxstc.twin_classes(k3) == [["a", "b", "c"]]


def test_reduction():
    g, table = maxstc.stc_reduction(3, [(1, 2, 3)])
    assert len(g) == 10 and len(g.edges) == 33
    assert table == [(0, 16), (1, 17)]
    rep = maxstc.certify_reduction(3, [(1, 2, 3)])
    assert rep["optimum"] == 17 and rep["threshold_equivalent"]
