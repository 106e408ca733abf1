"""
Bold path homology
==================

"""

from dhpath import betti, bold_view, build_omega, load_fixture
from dhpath.theories import bold_contains

G = load_fixture("hyper4")

# bold membership is decided by walking through whole arrows, which lets
# some steps run against the direction of a single arrow
print("32 allowed:", bold_contains(G, ("3", "2")))
print("14 allowed:", bold_contains(G, ("1", "4")))

view = bold_view(G, 4)
print("allowed path counts by length:", view.counts())

# the Omega modules keep chains whose boundary stays allowed
om = build_omega(view, 3)
print("dim Omega_n:", [om.dim(n) for n in range(om.top + 1)])
print("rank of the second boundary:", om.boundary_rank(2))
print("betti:", betti(view, 3).betti)
