import os
from pathlib import Path

import pytest

import l1kit

FIXTURES = Path(os.environ.get("L1KIT_FIXTURE_DIR", Path(__file__).parent.parent / "fixtures"))
N4 = "(((((1)#H2,2),((#H2,3),4)))#H1,((#H1,5),6));"


def read_trees(name):
    lines = (FIXTURES / name).read_text().splitlines()
    return [s.strip() for s in lines if s.strip() and not s.lstrip().startswith("#")]


def test_tree_basics():
    t = l1kit.Tree("(c,(b,a));")
    assert t.newick() == "((a,b),c);"
    assert t.taxa() == ["a", "b", "c"]
    assert ["a", "b"] in t.clusters()
    assert t == l1kit.Tree("((a,b),c);")
    assert len({t, l1kit.Tree("((b,a),c);")}) == 1
    with pytest.raises(l1kit.ParseError):
        l1kit.Tree("((a,b,c));")


def test_display_set_of_n4():
    n = l1kit.Network(N4)
    trees = l1kit.display_set(n)
    assert trees == sorted(l1kit.Tree(s) for s in read_trees("f4.trees"))
    report = l1kit.display_set_report(n)
    assert report["k"] == 2 and report["maximum"]
    assert all(l1kit.is_displayed(n, t) for t in trees)
    with pytest.raises(l1kit.CapExceeded):
        l1kit.display_set(n, cap=1)


def test_reconstruct_and_enumerate():
    trees = read_trees("f4.trees")
    n = l1kit.reconstruct(trees)
    assert n is not None and n.enewick() == N4
    assert n.reticulation_pairs() == [
        (["1"], ["1", "2", "3", "4"]),
        (["1", "2", "3", "4"], ["1", "2", "3", "4", "5", "6"]),
    ]
    assert len(l1kit.enumerate(trees)) == 3
    assert l1kit.reconstruct(read_trees("three.trees")) is None
    assert l1kit.check(read_trees("three.trees"))["reason"] == "NOT_POWER_OF_TWO"
    assert l1kit.check(read_trees("distance2.trees"))["reason"] == "NOT_HYPERCUBE"


def test_rspr():
    t1, t2, t3, t4 = (l1kit.Tree(s) for s in read_trees("f4.trees"))
    assert l1kit.rspr_distance_one(t1, t2)
    assert l1kit.is_rnni_one(t1, t2)
    assert not l1kit.rspr_distance_one(t1, t4)
    assert l1kit.moving_subtrees(t1, t3) == [(["1"], ["1", "2", "3", "4"])]
    g = l1kit.rspr_graph(read_trees("f4.trees"))
    assert len(g["vertices"]) == 4 and len(g["edges"]) == 4 and g["hypercube"]


def test_random_round_trip():
    for seed in range(20):
        n = l1kit.random_network(7, 2, seed=seed, forbid_trivial=True)
        trees = [t.newick() for t in l1kit.display_set(n)]
        m = l1kit.reconstruct(trees)
        assert m is not None
        assert [t.newick() for t in l1kit.display_set(m)] == trees
        assert n.essential() in l1kit.enumerate(trees)
