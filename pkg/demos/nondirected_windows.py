"""
Non-directed path homology and window size
==========================================

"""

from dhpath import TheorySpec, load_fixture, nondirected_view, theory_betti

# forgetting directions turns each arrow into the edge origin | end
G = load_fixture("hyper6")

# at q = 1 every vertex sequence is allowed: the full complex is acyclic
for q in (1, 2, 3):
    view = nondirected_view(G, q, 2)
    table = theory_betti(G, TheorySpec("nondirected", q))
    print(f"q={q}: allowed {view.counts()}  betti {table.betti}")
