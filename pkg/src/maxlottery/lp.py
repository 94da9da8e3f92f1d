"""Exact rational simplex method with Bland's anti-cycling rule.

Problems are given in equality form ``A x = b, x >= 0``. A :class:`Tableau`
runs phase one once and can then be copied and re-optimized for several
objectives, which is how the solver computes per-coordinate ranges and
lexicographic maxima without repeating the feasibility search.
"""

from fractions import Fraction

ZERO = Fraction(0)


class Infeasible(ArithmeticError):
    pass


class Unbounded(ArithmeticError):
    pass


class Tableau:
    """Basic feasible solution of ``{x >= 0 : A x = b}`` kept in canonical form.

    Rows of ``self.rows`` are ``B^-1 A`` and ``self.rhs`` is ``B^-1 b``;
    ``self.basis[i]`` is the column that is basic in row ``i``. Columns in
    ``self.frozen`` are held at zero and never enter the basis.
    """

    def __init__(self, A, b):
        rows = [[Fraction(v) for v in row] for row in A]
        rhs = [Fraction(v) for v in b]
        if len(rows) != len(rhs):
            raise ValueError("A and b disagree on the number of constraints")
        self.num_vars = len(rows[0]) if rows else 0
        for i in range(len(rows)):
            if rhs[i] < 0:
                rows[i] = [-v for v in rows[i]]
                rhs[i] = -rhs[i]
        self.rows, self.rhs = rows, rhs
        self.basis = [None] * len(rows)
        self.frozen = set()
        self._phase_one()

    def copy(self):
        clone = object.__new__(Tableau)
        clone.num_vars = self.num_vars
        clone.rows = [row[:] for row in self.rows]
        clone.rhs = self.rhs[:]
        clone.basis = self.basis[:]
        clone.frozen = set(self.frozen)
        return clone

    # -- pivoting ---------------------------------------------------------

    def _pivot(self, r, j, objective=None):
        rows, rhs = self.rows, self.rhs
        prow = rows[r]
        inv = 1 / prow[j]
        if inv != 1:
            prow = [v * inv for v in prow]
            rows[r] = prow
            rhs[r] *= inv
        nz = [k for k, v in enumerate(prow) if v != 0]
        for i, row in enumerate(rows):
            if i == r:
                continue
            f = row[j]
            if f != 0:
                for k in nz:
                    row[k] -= f * prow[k]
                rhs[i] -= f * rhs[r]
        if objective is not None:
            f = objective[j]
            if f != 0:
                for k in nz:
                    objective[k] -= f * prow[k]
                objective[-1] -= f * rhs[r]
        self.basis[r] = j

    def _reduced_costs(self, c):
        """Objective row ``c - c_B B^-1 A`` with ``-c_B x_B`` in the last slot."""
        red = list(c) + [ZERO]
        for i, j in enumerate(self.basis):
            cb = c[j]
            if cb != 0:
                row = self.rows[i]
                for k, v in enumerate(row):
                    if v != 0:
                        red[k] -= cb * v
                red[-1] -= cb * self.rhs[i]
        return red

    def _bland(self, red, allowed):
        """Pivot until no allowed column has positive reduced cost."""
        while True:
            enter = next((j for j in allowed if red[j] > 0), None)
            if enter is None:
                return
            best = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    key = (self.rhs[i] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                raise Unbounded(f"objective unbounded along column {enter}")
            self._pivot(best[1], enter, red)

    # -- phase one --------------------------------------------------------

    def _phase_one(self):
        n = self.num_vars
        # Reuse any slack-like unit column as the initial basic variable.
        for i, row in enumerate(self.rows):
            for j in range(n):
                if row[j] == 1 and all(
                    other[j] == 0 for k, other in enumerate(self.rows) if k != i
                ):
                    if j not in self.basis:
                        self.basis[i] = j
                        break
        artificial = []
        for i, j in enumerate(self.basis):
            if j is None:
                col = n + len(artificial)
                artificial.append(col)
                self.basis[i] = col
        if artificial:
            width = n + len(artificial)
            for i, row in enumerate(self.rows):
                row.extend([ZERO] * len(artificial))
                if self.basis[i] >= n:
                    row[self.basis[i]] = Fraction(1)
            cost = [ZERO] * n + [Fraction(-1)] * len(artificial)
            red = self._reduced_costs(cost)
            self._bland(red, range(width))
            if red[-1] != 0:
                raise Infeasible("constraint system has no non-negative solution")
            self._drive_out_artificials(n)
            for row in self.rows:
                del row[n:]

    def _drive_out_artificials(self, n):
        r = 0
        while r < len(self.rows):
            if self.basis[r] >= n:
                row = self.rows[r]
                j = next((k for k in range(n) if row[k] != 0), None)
                if j is None:
                    # Redundant constraint.
                    del self.rows[r], self.rhs[r], self.basis[r]
                    continue
                self._pivot(r, j)
            r += 1

    # -- optimization -----------------------------------------------------

    def _allowed(self):
        return [j for j in range(self.num_vars) if j not in self.frozen]

    def maximize(self, c):
        """Move to an optimal vertex for ``c`` and return the optimal value."""
        red = self._reduced_costs(c)
        self._bland(red, self._allowed())
        self._last_reduced = red
        return -red[-1]

    def restrict_to_optimal_face(self):
        """Freeze every non-basic column whose increase would lower the last objective."""
        basic = set(self.basis)
        for j in self._allowed():
            if j not in basic and self._last_reduced[j] != 0:
                self.frozen.add(j)

    def solution(self):
        x = [ZERO] * self.num_vars
        for i, j in enumerate(self.basis):
            x[j] = self.rhs[i]
        return x


def maximize(c, A, b):
    """Solve ``max c.x s.t. A x = b, x >= 0``; returns ``(value, x)``."""
    t = Tableau(A, b)
    value = t.maximize(c)
    return value, t.solution()


def lexicographic_maximize(objectives, A, b):
    """Maximize ``objectives[0]``, then ``objectives[1]`` on its optimal face, etc."""
    t = Tableau(A, b)
    values = []
    for c in objectives:
        values.append(t.maximize(c))
        t.restrict_to_optimal_face()
    return values, t.solution()
