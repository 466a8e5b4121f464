"""Exact fractional chromatic number via the independent-set covering LP.

chi_f(G) is the optimum of: minimize total weight over maximal independent
sets such that every vertex is covered with weight >= 1. The solver runs in
exact rational arithmetic and certifies optimality with a matching dual
solution (a fractional clique of the same value), so the returned value is
exact, never a float approximation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CapExceeded
from .graphs import Graph
from .simplex import solve_covering_lp
from .solvers import maximal_independent_sets

DEFAULT_MAX_LP_VERTICES = 30


@dataclass(frozen=True)
class FractionalColoring:
    """Nonnegative rational weights on independent sets covering every vertex."""

    sets: tuple[frozenset[int], ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.sets) != len(self.weights):
            raise ValueError("sets and weights must have equal length")
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be nonnegative")

    @property
    def value(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    def covers(self, g: Graph) -> bool:
        """Every listed set independent in g and every vertex covered with weight >= 1."""
        cover = [Fraction(0)] * g.n
        for s, w in zip(self.sets, self.weights):
            for u in s:
                for v in s:
                    if u < v and g.has_edge(u, v):
                        return False
            for v in s:
                cover[v] += w
        return all(c >= 1 for c in cover)


def fractional_chromatic(
    g: Graph, max_vertices: int = DEFAULT_MAX_LP_VERTICES
) -> tuple[Fraction, FractionalColoring]:
    """Exact chi_f(G) with an optimal witness fractional coloring.

    Optimality is certified internally: the LP's dual solution is a feasible
    fractional clique of equal value, and both sides are re-checked here.
    """
    if g.loops:
        raise ValueError("fractional chromatic number is undefined on graphs with loops")
    if g.n > max_vertices:
        raise CapExceeded(
            f"graph has {g.n} vertices, above the max_vertices cap of {max_vertices}"
        )
    if g.n == 0:
        return Fraction(0), FractionalColoring((), ())

    sets = maximal_independent_sets(g)
    solution = solve_covering_lp(g.n, sets)

    witness = FractionalColoring(
        tuple(frozenset(sets[j]) for j in sorted(solution.primal)),
        tuple(solution.primal[j] for j in sorted(solution.primal)),
    )
    # primal feasibility, dual feasibility, and equal values together certify
    # optimality without trusting the pivoting path
    if not witness.covers(g):
        raise RuntimeError("simplex returned an infeasible fractional coloring")
    dual = solution.dual
    if any(y < 0 for y in dual):
        raise RuntimeError("negative dual price; certificate invalid")
    for s in sets:
        if sum((dual[v] for v in s), Fraction(0)) > 1:
            raise RuntimeError("dual violates an independent-set constraint")
    if witness.value != sum(dual, Fraction(0)) or witness.value != solution.value:
        raise RuntimeError("primal and dual values differ; certificate invalid")
    return solution.value, witness
