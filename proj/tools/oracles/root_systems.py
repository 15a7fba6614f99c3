#!/usr/bin/env python3
"""Independent oracle for root-system combinatorics.

Computes, straight from Cartan matrices and nothing else:
  * positive root closures (counts, full sorted lists, highest roots)
  * Weyl group orders by matrix-group closure
  * inversion sets Phi^+(w) for named words
  * unique-ending letters
  * Kostant partition counts for small vectors

Values printed here get frozen into tests/test_rootsys.cpp by hand.
Run: python3 tools/oracles/root_systems.py
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product

# Cartan data, a[i][j] = <alpha_j, alpha_i^vee>.  Conventions:
#   A_n: path 1..n
#   B_n: path, alpha_1 the unique short simple root, d = [1,2,...,2]
#   C_n: path, alpha_1 the unique long simple root,  d = [2,1,...,1]
#   D_n: legs alpha_1, alpha_2 joined to alpha_3, chain 3-4-...-n
#   G_2: alpha_1 short, alpha_2 long, d = [1,3]


def cartan(kind, n):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
    def edge(i, j, aij, aji):
        a[i][j] = aij
        a[j][i] = aji
    if kind == "A":
        for i in range(n - 1):
            edge(i, i + 1, -1, -1)
        d = [1] * n
    elif kind == "B":
        assert n >= 2
        edge(0, 1, -2, -1)
        for i in range(1, n - 1):
            edge(i, i + 1, -1, -1)
        d = [1] + [2] * (n - 1)
    elif kind == "C":
        assert n >= 2
        edge(0, 1, -1, -2)
        for i in range(1, n - 1):
            edge(i, i + 1, -1, -1)
        d = [2] + [1] * (n - 1)
    elif kind == "D":
        assert n >= 4
        edge(0, 2, -1, -1)
        edge(1, 2, -1, -1)
        for i in range(2, n - 1):
            edge(i, i + 1, -1, -1)
        d = [1] * n
    elif kind == "G":
        assert n == 2
        edge(0, 1, -3, -1)
        d = [1, 3]
    else:
        raise ValueError(kind)
    return a, d


def reflect(a, i, v):
    # s_i(v) = v - <v, alpha_i^vee> alpha_i, coordinates in the simple basis
    pairing = sum(v[j] * a[i][j] for j in range(len(v)))
    w = list(v)
    w[i] -= pairing
    return tuple(w)


def positive_roots(a, n):
    roots = set(tuple(1 if k == i else 0 for k in range(n)) for i in range(n))
    frontier = set(roots)
    while frontier:
        nxt = set()
        for v in frontier:
            for i in range(n):
                w = reflect(a, i, v)
                if all(x >= 0 for x in w) and w not in roots:
                    nxt.add(w)
        roots |= nxt
        frontier = nxt
    return sorted(roots, key=lambda r: (sum(r), r))


def weyl_order(a, n):
    id_m = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    gens = []
    for i in range(n):
        cols = [reflect(a, i, tuple(1 if k == j else 0 for k in range(n))) for j in range(n)]
        gens.append(tuple(tuple(cols[j][r] for j in range(n)) for r in range(n)))
    def mul(m1, m2):
        return tuple(tuple(sum(m1[r][k] * m2[k][c] for k in range(n)) for c in range(n))
                     for r in range(n))
    seen = {id_m}
    frontier = [id_m]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                p = mul(m, g)
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
        frontier = nxt
    return len(seen)


def apply_word(a, n, word, v):
    for i in reversed(word):
        v = reflect(a, i, v)
    return v


def inv_set(a, n, word, roots):
    # paper's Phi^+(w) = {beta > 0 : w^{-1} beta < 0}; w = s_{word[0]} ... s_{word[-1]}
    out = []
    for beta in roots:
        v = beta
        for i in word:  # w^{-1} = s_{last} ... s_{first} applied right-to-left = in word order
            v = reflect(a, i, v)
        if any(x < 0 for x in v):
            out.append(beta)
    return out


def right_descents(a, n, word, roots):
    out = []
    for i in range(n):
        alpha = tuple(1 if k == i else 0 for k in range(n))
        v = apply_word(a, n, word, alpha)
        if any(x < 0 for x in v):
            out.append(i + 1)
    return out


def kostant(roots, nu):
    roots = [r for r in roots]
    @lru_cache(maxsize=None)
    def count(idx, rem):
        if all(x == 0 for x in rem):
            return 1
        if idx == len(roots):
            return 0
        r = roots[idx]
        total = 0
        k = 0
        cur = rem
        while all(x >= 0 for x in cur):
            total += count(idx + 1, cur)
            cur = tuple(cur[j] - r[j] for j in range(len(r)))
        return total
    return count(0, tuple(nu))


def show(kind, n):
    a, d = cartan(kind, n)
    roots = positive_roots(a, n)
    print(f"== {kind}{n}: |Phi+| = {len(roots)}, |W| = {weyl_order(a, n)}")
    print("   highest root:", roots[-1])
    print("   roots:", roots)


def main():
    for kind, n in [("A", 2), ("A", 3), ("A", 4), ("B", 3), ("C", 3), ("D", 4), ("G", 2)]:
        show(kind, n)

    a2, _ = cartan("A", 2)
    r2 = positive_roots(a2, 2)
    a3, _ = cartan("A", 3)
    r3 = positive_roots(a3, 3)

    print("A2 inv(s1s2):", inv_set(a2, 2, [0, 1], r2))
    print("A2 inv(s2s1):", inv_set(a2, 2, [1, 0], r2))
    print("A2 inv(s1s2s1):", inv_set(a2, 2, [0, 1, 0], r2))
    print("A3 inv(s3s1s2):", inv_set(a3, 3, [2, 0, 1], r3))
    print("A3 inv(s3s1s2s1):", inv_set(a3, 3, [2, 0, 1, 0], r3))
    print("A2 right descents of s1s2:", right_descents(a2, 2, [0, 1], r2))
    print("A2 right descents of s1s2s1:", right_descents(a2, 2, [0, 1, 0], r2))

    print("A2 kostant a1+a2:", kostant(r2, (1, 1)))
    print("A2 kostant 2a1+a2:", kostant(r2, (2, 1)))
    print("A2 kostant 2a1+2a2:", kostant(r2, (2, 2)))
    print("A2 kostant 3a1+2a2:", kostant(r2, (3, 2)))
    print("A3 kostant a1+a2+a3:", kostant(r3, (1, 1, 1)))
    print("A3 kostant 2a1+2a2+2a3:", kostant(r3, (2, 2, 2)))
    b3, _ = cartan("B", 3)
    rb3 = positive_roots(b3, 3)
    print("B3 kostant a1+a2+a3:", kostant(rb3, (1, 1, 1)))
    print("B3 kostant 2a1+a2+a3:", kostant(rb3, (2, 1, 1)))
    print("B3 kostant 2a1+2a2+a3:", kostant(rb3, (2, 2, 1)))
    c3, _ = cartan("C", 3)
    rc3 = positive_roots(c3, 3)
    print("C3 kostant a1+a2+a3:", kostant(rc3, (1, 1, 1)))
    print("C3 kostant a1+2a2+a3:", kostant(rc3, (1, 2, 1)))

    # lengths of selected roots, for the criterion-1 classifier rows
    def lens(kind, n, vecs):
        a, d = cartan(kind, n)
        def bil(u, v):
            return sum(u[i] * v[j] * d[i] * a[i][j] for i in range(n) for j in range(n))
        return [bil(v, v) for v in vecs]
    print("B3 lengths a123, a1123, a2:", lens("B", 3, [(1, 1, 1), (2, 1, 1), (0, 1, 0)]))
    print("C3 lengths a123, a2:", lens("C", 3, [(1, 1, 1), (0, 1, 0)]))
    print("D4 lengths a1234, a4:", lens("D", 4, [(1, 1, 1, 1), (0, 0, 0, 1)]))


if __name__ == "__main__":
    main()
