"""A symplectic representation of a zigzag A4 quiver, from matrices to permutations.

The quiver is 1 <- 2 -> 3 <- 4 with the middle arrow fixed by the flip
i -> 5 - i.  A symmetric point only needs matrices over 2 -> 1 and 2 -> 3;
the arrow 4 -> 3 is forced to be the transpose of the first one.
"""

from symquiver import (Representation, block_rank_matrix, make_quiver, sym_zelevinsky_map,
                       sym_zelevinsky_permutation, symmetric_embed, zelevinsky_permutation)
from symquiver.reps import zeta
from symquiver.zelevinsky import block_structure


def show(name, M):
    print(f"{name}:")
    for row in M.tolist():
        print("   " + " ".join(f"{x:2d}" for x in row))


Q = make_quiver(4, "LRL", -1)
d = (1, 3, 3, 1)
print(Q.describe(), "d =", d)

A = [[1, 0, 0]]
B = [[0, 1, 0], [-1, 0, 0], [0, 0, 0]]   # skew, as the sign -1 demands
W = Representation.symmetric(Q, d, {1: A, 2: B})

full = symmetric_embed(W)
for e in Q.edges:
    t, h = Q.tail(e), Q.head(e)
    show(f"arrow {t}->{h}", full.mat(e))

Z, Ze = zeta(W), sym_zelevinsky_map(W)
show("zeta(W)", Z)
show("signed zeta(W)", Ze)
print("signed map is skew:", Ze.is_skew_symmetric())

bs = block_structure(Q, d)
print("block sizes", bs.sizes)
print("northwest block ranks", block_rank_matrix(Z, bs.sizes))

v = zelevinsky_permutation(W)
print("v(W)     =", v)
# alpha turns the pair of diagonal fixed points 7, 8 into a 2-cycle
print("v_eps(W) =", sym_zelevinsky_permutation(W))
