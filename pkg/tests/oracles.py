"""Independent oracles: brute-force minors and random unimodular matrices."""
import random
from itertools import combinations
from math import gcd

import sympy

from toricstack import IntMatrix


def minors_gcd(rows, k):
    """gcd of all k x k minors, computed with sympy determinants."""
    m, n = len(rows), len(rows[0]) if rows else 0
    g = 0
    for r in combinations(range(m), k):
        for c in combinations(range(n), k):
            sub = sympy.Matrix([[rows[i][j] for j in c] for i in r])
            g = gcd(g, int(sub.det()))
    return g


def random_unimodular(n, rng, steps=6, bound=3):
    """Product of random elementary operations; det is +-1 by construction."""
    A = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        q = rng.randint(-bound, bound)
        for r in range(n):
            A[r][i] += q * A[r][j]
        if rng.random() < 0.3:
            A[i], A[j] = A[j], A[i]
    if n and rng.random() < 0.5:
        A[0] = [-x for x in A[0]]
    return IntMatrix.from_rows(A, n)


def random_matrix(rng, max_rows=3, max_cols=3, bound=4):
    m, n = rng.randint(1, max_rows), rng.randint(1, max_cols)
    return IntMatrix.from_rows([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(m)], n)


def nonneg_feasible(A, b):
    """Is ``{x >= 0 : A x = b}`` nonempty?  Enumerates basic solutions exactly with sympy."""
    M = sympy.Matrix(A)
    rhs = sympy.Matrix(b)
    m, n = M.shape
    r = M.rank()
    if M.row_join(rhs).rank() != r:
        return False
    if r == 0:
        return all(x == 0 for x in b)
    # a nonempty polyhedron in standard form has a vertex supported on r independent columns
    for cols in combinations(range(n), r):
        sub = M.extract(list(range(m)), list(cols))
        if sub.rank() != r:
            continue
        sol, params = sub.gauss_jordan_solve(rhs)
        if params.shape[0]:
            continue
        if all(v >= 0 for v in sol):
            return True
    return False


def bad_overlap(sigma, tau, outside):
    """Oracle for a point of cone(sigma) & cone(tau) with weight on the rays listed in outside."""
    d = len(sigma[0]) if sigma else len(tau[0])
    A = [[v[k] for v in sigma] + [-w[k] for w in tau] for k in range(d)]
    A.append([int(i in outside) for i in range(len(sigma))] + [0] * len(tau))
    return nonneg_feasible(A, [0] * d + [1])
