"""Rank tables, Rothe diagrams and essential sets of involutions."""

from symquiver import diagrams, nw_rank_matrix, parse_permutation, signed_matrix

w = parse_permutation("351624")
print("northwest ranks of", w)
for row in nw_rank_matrix(w.matrix()).tolist():
    print("  ", *row)

# the signed matrix is a symmetric or skew form with the same rank table
S = signed_matrix(w, -1)
print("skew version has the same ranks:", nw_rank_matrix(S) == nw_rank_matrix(w.matrix()))

u = parse_permutation("21563487")
dg = diagrams(u)
n = u.n
print(f"\nRothe diagram of {u}")
print("   * essential cell of D+, o other cell of D+, + cell of D above the diagonal")
for i in range(1, n + 1):
    row = []
    for j in range(1, n + 1):
        c = (i, j)
        row.append("*" if c in dg.E_plus else "o" if c in dg.D_plus else "+" if c in dg.D else ".")
    print("  ", " ".join(row))
print("E+ =", sorted(dg.E_plus))
print("E- =", sorted(dg.E_minus))
