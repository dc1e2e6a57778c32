"""Resultants and discriminants in a chosen leader variable.

Polynomials are regrouped as univariate in one derivative variable with
differential-polynomial coefficients; the resultant is the determinant of
the Sylvester matrix, computed by fraction-free elimination (every pivot
update divides exactly by the previous pivot, which keeps intermediate
entries at minor size).  Plain cofactor expansion is kept alongside as an
independent cross-check for the test suite.

Degenerate degrees follow fixed conventions so the witness pipeline stays
total for degree-1 divisors:

    res(c, Q) = c^deg(Q),  res(P, c) = c^deg(P),  res(c1, c2) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConstantPolynomial, ZeroArgument, ZeroPolynomial
from .polynomials import Context, DerivVar, DiffPoly, exact_div
from .ranking import rank_profile, separant


@dataclass(frozen=True)
class LeaderPoly:
    """A differential polynomial regrouped as univariate in one variable.

    Coefficients are listed by descending power, never mention the leader
    variable, and the leading entry is nonzero.  Degree 0 means the
    original polynomial was free of the variable.
    """

    variable: DerivVar
    coefficients: tuple[DiffPoly, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a leader polynomial needs at least one coefficient")
        if self.coefficients[0].is_zero:
            raise ValueError("leading coefficient must be nonzero")
        for c in self.coefficients:
            if c.degree_in(self.variable):
                raise ValueError("coefficients must not mention the leader variable")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def ctx(self) -> Context:
        return self.coefficients[0].ctx


def as_leader_poly(p: DiffPoly, variable: DerivVar) -> LeaderPoly:
    """Regroup ``p`` by powers of ``variable``; ``p`` must be nonzero."""
    if p.is_zero:
        raise ZeroPolynomial("cannot regroup the zero polynomial")
    top = p.degree_in(variable)
    coefficients = tuple(p.coefficient_of(variable, top - i) for i in range(top + 1))
    return LeaderPoly(variable, coefficients)


def sylvester_matrix(p: LeaderPoly, q: LeaderPoly) -> list[list[DiffPoly]]:
    """The (deg p + deg q) square Sylvester matrix; both degrees >= 1."""
    if p.variable != q.variable:
        raise ValueError("leader polynomials use different variables")
    dp, dq = p.degree, q.degree
    if dp < 1 or dq < 1:
        raise ValueError("Sylvester matrix needs both degrees >= 1")
    ctx = p.ctx
    size = dp + dq
    zero = ctx.zero()
    rows: list[list[DiffPoly]] = []
    for i in range(dq):
        rows.append([zero] * i + list(p.coefficients) + [zero] * (dq - 1 - i))
    for j in range(dp):
        rows.append([zero] * j + list(q.coefficients) + [zero] * (dp - 1 - j))
    assert all(len(row) == size for row in rows)
    return rows


def det_bareiss(matrix: list[list[DiffPoly]], ctx: Context) -> DiffPoly:
    """Determinant by fraction-free elimination with exact pivot division."""
    n = len(matrix)
    if n == 0:
        return ctx.one()
    m = [row[:] for row in matrix]
    sign = 1
    prev = ctx.one()
    for k in range(n - 1):
        if m[k][k].is_zero:
            for i in range(k + 1, n):
                if not m[i][k].is_zero:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ctx.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev)
            m[i][k] = ctx.zero()
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def det_cofactor(matrix: list[list[DiffPoly]], ctx: Context) -> DiffPoly:
    """Determinant by Laplace expansion along rows (test oracle).

    Kept deliberately independent of the fraction-free path: no divisions,
    no pivoting.  Minor determinants are memoized per column subset so the
    expansion stays usable up to the matrix sizes the tests exercise.
    """
    n = len(matrix)
    memo: dict[tuple[int, ...], DiffPoly] = {}

    def expand(row: int, cols: tuple[int, ...]) -> DiffPoly:
        if not cols:
            return ctx.one()
        cached = memo.get(cols)
        if cached is not None:
            return cached
        total = ctx.zero()
        for i, c in enumerate(cols):
            entry = matrix[row][c]
            if entry.is_zero:
                continue
            term = entry * expand(row + 1, cols[:i] + cols[i + 1 :])
            total = total - term if i % 2 else total + term
        memo[cols] = total
        return total

    return expand(0, tuple(range(n)))


def resultant(p: LeaderPoly, q: LeaderPoly) -> DiffPoly:
    """Resultant of two leader polynomials in the same variable."""
    if p.variable != q.variable:
        raise ValueError("leader polynomials use different variables")
    if p.coefficients[0].is_zero or q.coefficients[0].is_zero:
        raise ZeroArgument("resultant arguments must be nonzero")
    dp, dq = p.degree, q.degree
    if dp == 0 and dq == 0:
        return p.ctx.one()
    if dp == 0:
        return p.coefficients[0] ** dq
    if dq == 0:
        return q.coefficients[0] ** dp
    return det_bareiss(sylvester_matrix(p, q), p.ctx)


def discriminant(p: DiffPoly, main: str) -> DiffPoly:
    """Resultant of ``p`` with its separant, in the leader of ``p``.

    This is the classical leader discriminant scaled by (a sign and) the
    initial, which preserves both downstream uses: non-vanishing detection
    and coefficient extraction.  Nonzero whenever ``p`` is squarefree as a
    polynomial in its leader; its order in ``main`` is strictly below the
    order of ``p``.
    """
    profile = rank_profile(p, main)
    if profile.is_constant:
        raise ConstantPolynomial(f"{p} is free of {main!r}")
    leader = profile.leader
    return resultant(as_leader_poly(p, leader), as_leader_poly(separant(p, main), leader))
