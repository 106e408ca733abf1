import random

import pytest

from dhpath.documents import load_fixture
from dhpath.hypergraph import DirectedHypergraph, random_hypergraph
from dhpath.laws import (LAWS, check_bold_cylinder, check_connective_cylinder,
                         check_connective_digraph, check_density_filtration, check_full_complex,
                         check_natural_box_product, check_nondirected_cylinder,
                         check_product_inclusion, product_witness)

ARROW = DirectedHypergraph.from_arrows([({"a"}, {"b"})])


def singleton_arrows(G):
    return all(len(e.origin) == 1 and len(e.end) == 1 for e in G.edges)


def test_connective_digraph_law_on_fixtures():
    for name in ("hyper4", "hyper6", "suspension8"):
        r = check_connective_digraph(load_fixture(name), 2)
        assert r.holds and r.detail == "equal Betti tables"


def test_connective_cylinder_on_a_single_arrow():
    assert check_connective_cylinder(ARROW, 2).holds


def test_connective_cylinder_counterexample_on_hyper4():
    r = check_connective_cylinder(load_fixture("hyper4"), 3)
    assert not r.holds
    # (2,0) -> (3,1) comes from the crossing arrow {2,3}x{0} -> {2,3}x{1}
    assert r.counterexample == (("2", "0"), ("3", "1"))
    assert r.data["cylinder_only"] == 0 and r.data["box_only"] == 28


def test_connective_cylinder_equality_exactly_when_arrows_are_singletons():
    rng = random.Random(29)
    for _ in range(60):
        G = random_hypergraph(rng, 4, 4)
        r = check_connective_cylinder(G, 3)
        assert r.holds == singleton_arrows(G)
        # the cylinder side is always contained in the box product side
        assert r.holds or r.data["cylinder_only"] == 0


@pytest.mark.parametrize("check", [check_bold_cylinder, check_nondirected_cylinder])
def test_cylinder_inclusions(check):
    for G in (load_fixture("hyper4"), load_fixture("hyper6"), ARROW):
        assert check(G, 3 if G is not ARROW else 2).holds


def test_product_inclusion_and_witness():
    r = check_product_inclusion(load_fixture("hyper4"), 2, 2)
    assert r.holds and r.counterexample == (("1", "0"), ("2", "1"))
    assert r.data["witness_confirmed"]
    a = check_product_inclusion(ARROW, 2, 2)
    assert a.holds and a.counterexample == (("a", "0"), ("b", "1"))
    with pytest.raises(ValueError):
        check_product_inclusion(ARROW, 1, 2)


def test_product_witness_absent_when_every_pair_is_covered():
    # each crossing pair {v, w} is itself an origin
    G = DirectedHypergraph.from_arrows([({"a", "b"}, {"c"}), ({"a", "c"}, {"b"}), ({"b", "c"}, {"a"})])
    assert product_witness(G) is None
    r = check_product_inclusion(G, 2, 2)
    assert r.holds and r.counterexample is None and "no strictness witness" in r.detail


def test_natural_box_product_law():
    for name in ("hyper4", "hyper6", "suspension8", "cycle3"):
        assert check_natural_box_product(load_fixture(name)).holds


def test_full_complex_law():
    r = check_full_complex(load_fixture("hyper6"), 2)
    assert r.holds and r.data["betti"] == [1, 0, 0]


def test_density_filtration_law():
    assert check_density_filtration(load_fixture("hyper4"), 3, 3).holds


def test_registry_and_report_shape():
    assert set(LAWS) == {"connective-digraph", "connective-cylinder", "bold-cylinder",
                         "nondirected-cylinder", "product-inclusion", "natural-box-product",
                         "full-complex", "density-filtration"}
    d = LAWS["connective-cylinder"](load_fixture("hyper4"), 3).as_dict()
    assert d["counterexample"] == "(2|0 3|1)" and d["holds"] is False
