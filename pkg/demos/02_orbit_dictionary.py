"""Orbits, their rank vectors, and the permutations that label them.

For each instance the orbits are listed with the rank data that separates
them.  Degeneration (one orbit in the closure of another) is read off the
ranks and compared with Bruhat order on the permutations, which should run
the other way.
"""

import sys
from pathlib import Path

from symquiver import degeneration_poset, export_poset, image_set, make_quiver, verify_dictionary

instances = [
    ("symmetric 2x2 forms", make_quiver(2, "R", 1), (2, 2)),
    ("skew 2x2 forms", make_quiver(2, "R", -1), (2, 2)),
    ("zigzag A4, orthogonal", make_quiver(4, "LRL", 1), (1, 3, 3, 1)),
    ("zigzag A4, symplectic", make_quiver(4, "LRL", -1), (1, 3, 3, 1)),
]

out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else None

for title, Q, d in instances:
    print(f"== {title}: {Q.describe()} d={d}")
    P = degeneration_poset(Q, d)
    for nd in P.nodes:
        print(f"  orbit {nd.id}: v_eps = {nd.vperm:<10} ranks {nd.ranks}")
    print("  covers (lower, upper):", list(P.hasse))
    print("  image set:", " ".join(str(u) for u in image_set(Q, d)))
    print("  check:", verify_dictionary(Q, d).summary())
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)
        stem = f"A{Q.n}{''.join(Q.arrow_dirs)}{'p' if Q.epsilon == 1 else 'm'}"
        (out_dir / f"{stem}.dot").write_text(export_poset(P, "dot"))
