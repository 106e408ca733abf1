"""
Connective path homology at several densities
==============================================

"""

from dhpath import TheorySpec, connective_view, load_fixture, theory_betti

# a directed hypergraph with four vertices and six arrows
G = load_fixture("hyper4")
for e in G.edges:
    print(sorted(e.origin), "->", sorted(e.end))

# a step v -> w is allowed at density c when at least c arrows carry v in
# their origin and w in their end
for c in (1, 2, 3):
    view = connective_view(G, c, 1)
    print(f"c={c}: 1-paths", [''.join(p) for p in view.allowed[1]])

# raising the density removes paths, so the Betti numbers change
for c in (1, 2, 3):
    print(f"c={c}: betti", theory_betti(G, TheorySpec("connective", c)).betti)
