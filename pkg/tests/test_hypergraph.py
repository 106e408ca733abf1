import random
from itertools import combinations, product

import pytest

from dhpath.documents import load_fixture
from dhpath.homotopy import line_digraph, morphisms
from dhpath.hypergraph import (INTERVAL, Digraph, DirectedHypergraph, Hypergraph, InvalidInput,
                               NotAMorphism, arrow, as_directed, box_product, check_dh_morphism,
                               compose, components, digraph_box_product, epsilon, gamma,
                               hypergraph_product, identity, natural, natural_vertex_map, p_sets,
                               random_hypergraph, validate)

I1 = line_digraph([True])


def S(*xs):
    return frozenset(xs)


def test_validate_fixture_and_violations():
    G = load_fixture("hyper4")
    assert validate(G) == []
    bad = DirectedHypergraph.build(["1", "2"], [({"1"}, {"1", "2"})])
    assert any("share 1" in v for v in validate(bad))
    extra = DirectedHypergraph(G.vertices + ("9",), G.edges)
    assert validate(extra) == ["vertex 9 lies in no arrow"]
    dup = DirectedHypergraph.build(["a", "b"], [({"a"}, {"b"}), ({"a"}, {"b"})])
    assert any("duplicates arrow 0" in v for v in validate(dup))
    stray = DirectedHypergraph.build(["a"], [({"a"}, {"z"})])
    assert any("unknown vertex z" in v for v in validate(stray))
    with pytest.raises(InvalidInput):
        bad.check()
    assert DirectedHypergraph((), ()).validate() == ["vertices must be non-empty"]


def test_p_sets():
    p0, p1, p01 = p_sets(load_fixture("hyper4"))
    assert set(p0) == {S("1"), S("2"), S("4")}
    assert set(p1) == {S("1"), S("2"), S("3"), S("4"), S("2", "3"), S("3", "4")}
    assert len(p01) == 6
    one = DirectedHypergraph.from_arrows([({"a"}, {"b"})])
    assert set(p_sets(one)[2]) == {S("a"), S("b")}
    assert set(p_sets(load_fixture("suspension8"))[2]) == {
        S("1"), S("2"), S("3", "4"), S("5", "6"), S("7", "8")}


def test_gamma():
    assert set(gamma(load_fixture("hyper4")).arrows) == {
        ("1", "2"), ("1", "3"), ("2", "3"), ("2", "4"), ("4", "1")}
    G = DirectedHypergraph.from_arrows([({"a", "b"}, {"x", "y", "z"})])
    assert set(gamma(G).arrows) == set(product("ab", "xyz"))
    assert gamma(DirectedHypergraph.from_arrows([({"a"}, {"b"})])).arrows == (("a", "b"),)


def test_epsilon():
    assert set(epsilon(load_fixture("hyper6")).edges) == {
        S("1", "2"), S("1", "3"), S("2", "4", "6"), S("3", "5"), S("4", "5", "6")}
    merged = epsilon(DirectedHypergraph.from_arrows([({"a"}, {"b"}), ({"b"}, {"a"})]))
    assert merged.edges == (S("a", "b"),)
    assert set(epsilon(load_fixture("hyper4")).edges) == {
        S("1", "2"), S("2", "3", "4"), S("1", "4"), S("1", "2", "3"), S("2", "3"), S("2", "4")}
    X = epsilon(load_fixture("hyper4"))
    assert Hypergraph.build(X.vertices, X.edges + X.edges) == X


def test_natural():
    N = natural(load_fixture("suspension8"))
    assert len(N.vertices) == 5 and len(N.arrows) == 9
    N4 = natural(load_fixture("hyper4"))
    assert set(N4.vertices) == {S("1"), S("2"), S("3"), S("4"), S("2", "3"), S("3", "4")}
    assert set(N4.arrows) == {(S("1"), S("2")), (S("2"), S("3", "4")), (S("4"), S("1")),
                              (S("1"), S("2", "3")), (S("2"), S("3")), (S("2"), S("4"))}
    one = natural(DirectedHypergraph.from_arrows([({"a"}, {"b"})]))
    assert one.arrows == ((S("a"), S("b")),)


def test_no_loops_anywhere():
    rng = random.Random(3)
    for _ in range(50):
        G = random_hypergraph(rng)
        assert gamma(G).validate() == [] and natural(G).validate() == []


def test_box_product_counts():
    G = load_fixture("hyper4")
    B = box_product(G, I1)
    assert len(B.edges) == 18 and len(set(B.edges)) == 18
    assert len(B.vertices) == 8
    assert validate(B) == []
    rng = random.Random(5)
    for _ in range(5):
        G = random_hypergraph(rng)
        B = box_product(G, I1)
        assert len(set(B.edges)) == 2 * len(G.edges) + len(p_sets(G)[2])
        assert len(B.vertices) == 2 * len(G.vertices)


def test_box_product_level_zero_is_the_original():
    rng = random.Random(9)
    for G in [load_fixture("hyper4")] + [random_hypergraph(rng) for _ in range(20)]:
        B = box_product(G, I1)
        level0 = {arrow({v for v, _ in e.origin}, {v for v, _ in e.end}) for e in B.edges
                  if all(i == "0" for _, i in e.origin | e.end)}
        assert level0 == set(G.edges)


def test_box_product_needs_a_connected_factor_with_arrows():
    G = load_fixture("hyper4")
    with pytest.raises(ValueError):
        box_product(G, line_digraph([]))
    with pytest.raises(ValueError):
        box_product(G, Digraph.build("abcd", [("a", "b"), ("c", "d")]))


def _product_oracle(ex, ey):
    cells = [(a, b) for a in sorted(ex) for b in sorted(ey)]
    out = set()
    for k in range(1, len(cells) + 1):
        for sub in combinations(cells, k):
            if {a for a, _ in sub} == set(ex) and {b for _, b in sub} == set(ey):
                out.add(frozenset(sub))
    return out


def test_hypergraph_product():
    X = Hypergraph.build("ab", [{"a", "b"}])
    single = hypergraph_product(X, Hypergraph.build(["0"], [{"0"}]))
    assert single.edges == (S(("a", "0"), ("b", "0")),)
    square = hypergraph_product(X, Hypergraph.build(["0", "1"], [{"0", "1"}]))
    # 2x2 zero-one matrices with no empty row and no empty column
    assert set(square.edges) == _product_oracle("ab", "01")
    assert len(square.edges) == 7
    G = load_fixture("hyper4")
    big = set(hypergraph_product(epsilon(G), INTERVAL).edges)
    small = set(epsilon(box_product(G, I1)).edges)
    # every edge sits inside a product edge; C x {0,1} for C = {1} or {3,4} is not one itself
    assert all(any(e <= f for f in big) for e in small)
    assert S(("1", "0"), ("1", "1")) in small - big


def test_hypergraph_product_guard():
    X = Hypergraph.build([str(i) for i in range(11)], [{str(i) for i in range(11)}])
    with pytest.raises(ValueError):
        hypergraph_product(X, INTERVAL)


def test_morphism_checks():
    G, H = load_fixture("collapse-g"), load_fixture("collapse-h")
    f = check_dh_morphism(G, H, load_fixture("collapse-f"))
    assert f.edge_map == (0, 0)
    check_dh_morphism(G, G, {v: v for v in G.vertices})
    H2 = DirectedHypergraph.build(["a", "b", "c"], [({"b"}, {"a", "c"})])
    with pytest.raises(NotAMorphism) as exc:
        check_dh_morphism(G, H2, load_fixture("collapse-f"))
    assert exc.value.arrow_index == 0
    with pytest.raises(ValueError):
        check_dh_morphism(G, H, {"1": "a"})


def test_composition_and_identity():
    G = load_fixture("cycle3")
    rot = check_dh_morphism(G, G, load_fixture("cycle3-rot"))
    assert compose(rot, compose(rot, rot)) == identity(G)
    assert compose(identity(G), rot) == rot


def test_functors_carry_arrows_to_arrows():
    pairs = [("collapse-g", "collapse-h", load_fixture("collapse-f")),
             ("cycle3", "cycle3", load_fixture("cycle3-rot"))]
    rng = random.Random(21)
    for _ in range(10):
        G, H = random_hypergraph(rng, 3, 3), random_hypergraph(rng, 3, 3)
        for f in morphisms(G, H)[:3]:
            pairs.append((G, H, f.vertex_map))
    for G, H, vm in pairs:
        G = load_fixture(G) if isinstance(G, str) else G
        H = load_fixture(H) if isinstance(H, str) else H
        check_dh_morphism(G, H, vm)
        assert {(vm[v], vm[w]) for v, w in gamma(G).arrows} <= set(gamma(H).arrows)
        assert {frozenset(vm[v] for v in e) for e in epsilon(G).edges} <= set(epsilon(H).edges)
        nm = natural_vertex_map(G, vm)
        assert {(nm[a], nm[b]) for a, b in natural(G).arrows} <= set(natural(H).arrows)


def test_natural_box_product_relabelled():
    G = load_fixture("hyper4")
    lhs = natural(box_product(G, I1))
    rhs = digraph_box_product(natural(G), I1)
    relabel = lambda x: frozenset((c, x[1]) for c in x[0])
    assert set(lhs.arrows) == {(relabel(a), relabel(b)) for a, b in rhs.arrows}


def test_digraph_coercion_and_components():
    D = Digraph.build("abc", [("a", "b")])
    assert as_directed(D).edges == (arrow({"a"}, {"b"}),)
    assert len(components(D.vertices, D.arrows)) == 2
    assert not D.is_connected()


def test_undirected_hypergraph_validation():
    assert Hypergraph.build("ab", [{"a"}, {"a", "b"}]).validate() == []
    strict = Hypergraph.build("ab", [{"a"}, {"a", "b"}], strict=True)
    assert any("at least two" in v for v in strict.validate())
    assert any("lies in no edge" in v for v in Hypergraph.build("abc", [{"a", "b"}]).validate())
