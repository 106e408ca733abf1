"""
Homotopy of morphisms on a directed triangle
============================================

"""

from dhpath import (TheorySpec, build_omega, check_dh_morphism, check_pc_morphism, compose,
                    homotopic, identity, induced_homology_map, load_fixture, theory_view)

G = load_fixture("cycle3")
idG = identity(G)
rot = check_dh_morphism(G, G, load_fixture("cycle3-rot"))

# one step of the box product with a single arrow links id to the rotation
w = homotopic(idG, rot, 2)
print("id ~ rot in", len(w), "step(s), forward:", w.steps[0].forward)

# the backward orientation reaches the rotation squared directly
w2 = homotopic(idG, compose(rot, rot), 2)
print("id ~ rot^2 in", len(w2), "step(s), forward:", w2.steps[0].forward)

# homotopic maps induce the same map on homology
spec = TheorySpec("bold")
om = build_omega(theory_view(G, spec), 1)
for f in (idG, rot):
    m = check_pc_morphism(om.view, om.view, f.vertex_map)
    M = induced_homology_map(m, 1, om_src=om, om_tgt=om)
    print(f, "on H_1:", [[str(x) for x in row] for row in M.entries])
