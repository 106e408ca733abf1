"""
Natural path homology of a suspension
=====================================

"""

from dhpath import TheorySpec, load_fixture, natural, theory_betti

# the natural digraph has the origins and ends as vertices, with an arrow
# from each origin to its end and from each set to any set containing it
S = load_fixture("suspension8")
N = natural(S)
print(len(N.vertices), "vertices,", len(N.arrows), "arrows")

# a 2-dimensional class appears, as for a sphere
print("betti:", theory_betti(S, TheorySpec("natural", max_dim=3)).betti)
