"""Slow, obviously-correct reference implementations used only by the tests."""

from fractions import Fraction
from itertools import permutations

from symquiver import IntMatrix, Permutation, make_quiver


def fraction_rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def nw_ranks(M: IntMatrix):
    rows = M.tolist()
    n = len(rows)
    return [[fraction_rank([r[:j] for r in rows[:i]]) if i and j else 0
             for j in range(1, n + 1)] for i in range(1, n + 1)]


def length(w):
    one = w.one_line if isinstance(w, Permutation) else w
    return sum(1 for i in range(len(one)) for j in range(i + 1, len(one)) if one[i] > one[j])


def bruhat_upsets(n):
    """Bruhat order as the transitive closure of length-increasing transpositions.

    Returns ``{w: frozenset of all u >= w}`` over one-line tuples.
    """
    elems = sorted(permutations(range(1, n + 1)), key=length, reverse=True)
    up = {}
    for w in elems:
        lw = length(w)
        acc = {w}
        for i in range(n):
            for j in range(i + 1, n):
                u = list(w)
                u[i], u[j] = u[j], u[i]
                u = tuple(u)
                if length(u) > lw:
                    acc |= up[u]
        up[w] = frozenset(acc)
    return up


def double_factorial(k):
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def verification_instances():
    out = []
    for k in (1, 2, 3):
        for e in (1, -1):
            out.append((make_quiver(2, "R", e), (k, k)))
    for d in ((1, 2, 2, 1), (1, 3, 3, 1)):
        for e in (1, -1):
            out.append((make_quiver(4, "LRL", e), d))
    for e in (1, -1):
        out.append((make_quiver(3, "RR", e), (1, 2, 1)))
    return out


def instance_id(inst):
    Q, d = inst
    sign = "+" if Q.epsilon == 1 else "-"
    return f"A{Q.n}{''.join(Q.arrow_dirs)}{sign}-d{''.join(map(str, d))}"
