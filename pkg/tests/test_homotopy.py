import random

import pytest

from dhpath.documents import load_fixture
from dhpath.homotopy import (CapExceeded, HomotopyWitness, homotopic, homotopy_class,
                             homotopy_equivalent, line_digraph, morphisms, one_step_homotopic)
from dhpath.hypergraph import (DirectedHypergraph, box_product, check_dh_morphism, compose, dh_violation,
                               identity, random_hypergraph)


@pytest.fixture(scope="module")
def cyc():
    G = load_fixture("cycle3")
    return G, identity(G), check_dh_morphism(G, G, load_fixture("cycle3-rot"))


def test_line_digraphs():
    assert line_digraph([True]).arrows == (("0", "1"),)
    empty = line_digraph([])
    assert empty.vertices == ("0",) and empty.arrows == ()
    assert set(line_digraph([True, False]).arrows) == {("0", "1"), ("2", "1")}


def test_identity_to_rotation_in_one_forward_step(cyc):
    G, idG, rot = cyc
    step = one_step_homotopic(idG, rot)
    assert step is not None and step.forward
    assert HomotopyWitness(idG, (step,)).validate()


def test_no_self_homotopy_in_one_step(cyc):
    G, idG, _ = cyc
    assert one_step_homotopic(idG, idG) is None
    f = check_dh_morphism(load_fixture("collapse-g"), load_fixture("collapse-h"), load_fixture("collapse-f"))
    assert one_step_homotopic(f, f) is None


def _works(f0, f1, forward):
    box = box_product(f0.source, line_digraph([forward]))
    vmap = {(v, i): f0(v) if i == "0" else f1(v) for v, i in box.vertices}
    return dh_violation(box, f0.target, vmap) is None


def test_one_step_relation_is_symmetric_with_flipped_orientation():
    rng = random.Random(23)
    hits = 0
    for _ in range(40):
        G, H = random_hypergraph(rng, 3, 3), random_hypergraph(rng, 3, 3)
        ms = morphisms(G, H)
        for a in ms:
            for b in ms:
                assert _works(a, b, True) == _works(b, a, False)
                found = one_step_homotopic(a, b)
                assert (found is not None) == (_works(a, b, True) or _works(a, b, False))
                hits += found is not None
    assert hits > 0


def test_homotopic_search(cyc):
    G, idG, rot = cyc
    assert len(homotopic(rot, rot, 0)) == 0
    assert len(homotopic(idG, idG, 0)) == 0
    w = homotopic(idG, rot, 2)
    assert len(w) == 1 and w.end == rot
    H = load_fixture("hyper4")
    assert len(homotopic(identity(H), identity(H), 3)) == 0


def test_rotation_twice(cyc):
    G, idG, rot = cyc
    rot2 = compose(rot, rot)
    # the backward orientation reaches the inverse rotation directly
    w = homotopic(idG, rot2, 2)
    assert len(w) == 1 and not w.steps[0].forward
    # chaining two forward rotations is also a valid witness
    two = HomotopyWitness(idG, (one_step_homotopic(idG, rot), one_step_homotopic(rot, rot2)))
    assert len(two) == 2 and two.end == rot2 and two.validate()


def test_none_within_bound():
    G = load_fixture("cycle3")
    rot = check_dh_morphism(G, G, load_fixture("cycle3-rot"))
    assert homotopic(identity(G), rot, 0) is None
    with pytest.raises(ValueError):
        homotopic(identity(G), rot, -1)


def test_broken_chain_is_caught(cyc):
    G, idG, rot = cyc
    step = one_step_homotopic(idG, rot)
    with pytest.raises(AssertionError):
        HomotopyWitness(rot, (step,)).validate()


def test_cap_is_enforced(cyc):
    G, idG, rot = cyc
    with pytest.raises(CapExceeded) as exc:
        homotopic(idG, rot, 1, cap=10)
    assert exc.value.count == 27


def test_homotopy_class(cyc):
    G, idG, rot = cyc
    assert homotopy_class(idG, 1) == set(morphisms(G, G))
    assert homotopy_class(idG, 0) == {idG}


def test_homotopy_equivalence():
    G = load_fixture("cycle3")
    eq = homotopy_equivalent(G, G)
    assert eq.f == identity(G) and len(eq.gf) == 0 and len(eq.fg) == 0
    relabelled = DirectedHypergraph.from_arrows([({"x"}, {"y"}), ({"y"}, {"z"}), ({"z"}, {"x"})])
    eq = homotopy_equivalent(G, relabelled)
    assert eq is not None and compose(eq.g, eq.f) == identity(G)
    single = DirectedHypergraph.from_arrows([({"a"}, {"b"})])
    assert morphisms(G, single) == []
    assert homotopy_equivalent(G, single) is None
