"""Quivers with a pass-through vertex go through a bipartite reduction.

1 -> 2 -> 3 has a middle vertex that is neither a sink nor a source.  It
is split into two copies joined by a new arrow; representations of the
original quiver are exactly those of the bigger one whose new arrow is
invertible.
"""

from symquiver import (bipartite_reduce, enumerate_symmetric_orbits, image_set, make_quiver,
                       psi, rep_from_multiplicities, sym_zelevinsky_permutation)
from symquiver.reps import contract_rep, symmetric_embed

for eps in (1, -1):
    Q = make_quiver(3, "RR", eps)
    d = (1, 2, 1)
    red = bipartite_reduce(Q, d)
    print(f"{Q.describe()} d={d}")
    print(f"  reduces to {red.target.describe()} d={red.dims}, contracted edges {red.contracted}")

    for m in enumerate_symmetric_orbits(Q, d):
        W = rep_from_multiplicities(Q, d, m)
        Wt = psi(W, red)
        back = contract_rep(Wt, red) == symmetric_embed(W)
        print(f"  {m}  ->  v_eps = {sym_zelevinsky_permutation(W)}   (contracts back: {back})")

    # Only permutations whose ranks keep the new arrow invertible survive.
    print("  image:", ", ".join(map(str, image_set(Q, d))))
