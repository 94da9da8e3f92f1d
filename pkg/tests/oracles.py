"""Brute-force reference computations, deliberately sharing no code with the
simplex: plain Gaussian elimination over Fractions and enumeration of every
candidate active set."""

import itertools
from fractions import Fraction


def solve_square(rows, rhs):
    """Unique solution of a square system, or None if it is singular."""
    n = len(rows)
    a = [[Fraction(v) for v in row] + [Fraction(r)] for row, r in zip(rows, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col] / a[col][col]
                a[r] = [u - f * v for u, v in zip(a[r], a[col])]
    return tuple(a[i][n] / a[i][i] for i in range(n))


def maximal_vertices(entries):
    """Vertices of {p >= 0, sum p = 1, p^T M >= 0} by active-set enumeration.

    A vertex makes m linearly independent constraints tight; one of them is
    always sum p = 1, the other m - 1 are chosen among the 2m inequalities
    (p_x >= 0 for each x, column value >= 0 for each y).
    """
    m = len(entries)
    inequalities = []
    for x in range(m):
        inequalities.append([1 if k == x else 0 for k in range(m)])
    for y in range(m):
        inequalities.append([entries[x][y] for x in range(m)])
    vertices = set()
    for active in itertools.combinations(range(2 * m), m - 1):
        rows = [inequalities[i] for i in active] + [[1] * m]
        rhs = [0] * (m - 1) + [1]
        p = solve_square(rows, rhs)
        if p is None:
            continue
        if all(sum(c * v for c, v in zip(row, p)) >= 0 for row in inequalities):
            vertices.add(p)
    return vertices


def polytope_summary(entries):
    """(lex max, unique?, per-coordinate ranges) computed from the vertex set."""
    vertices = maximal_vertices(entries)
    m = len(entries)
    ranges = tuple(
        (min(v[x] for v in vertices), max(v[x] for v in vertices)) for x in range(m)
    )
    return max(vertices), len(vertices) == 1, ranges, vertices


def lp_vertices(A, b):
    """All basic feasible solutions of {A x = b, x >= 0} (full row rank A)."""
    rows, cols = len(A), len(A[0])
    found = []
    for basis in itertools.combinations(range(cols), rows):
        sub = [[A[i][j] for j in basis] for i in range(rows)]
        xb = solve_square(sub, b)
        if xb is None or any(v < 0 for v in xb):
            continue
        x = [Fraction(0)] * cols
        for j, v in zip(basis, xb):
            x[j] = v
        found.append(tuple(x))
    return found


def grid_lotteries(size, max_den):
    """Every lottery over `size` alternatives whose entries have denominator <= max_den."""
    points = set()
    for d in range(1, max_den + 1):
        for cut in itertools.combinations_with_replacement(range(d + 1), size - 1):
            parts = [cut[0]] + [cut[i] - cut[i - 1] for i in range(1, size - 1)] + [d - cut[-1]]
            points.add(tuple(Fraction(k, d) for k in parts))
    return sorted(points)

