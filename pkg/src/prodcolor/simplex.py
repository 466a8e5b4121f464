"""Exact rational simplex for covering LPs.

Solves  min sum_j x_j  subject to  sum_{j : i in cols[j]} x_j >= 1 for every
row i, x >= 0  -- entirely in Fraction arithmetic (no floating point).

Revised simplex on the basis inverse. Entering column: most negative reduced
cost with lowest-index tie-break ("dantzig", the default) or Bland's
lowest-index rule ("bland"). Leaving row: lexicographic ratio test, which is
deterministic and prevents cycling under either entering rule. Reduced-cost
pricing is done in scaled integer arithmetic (one lcm per iteration) so that
the column scan is cheap even with thousands of columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

ZERO = Fraction(0)
ONE = Fraction(1)

_ITERATION_GUARD = 500_000


@dataclass(frozen=True)
class CoverLpSolution:
    """Optimal primal weights, dual row prices, and the common objective value."""

    value: Fraction
    primal: dict[int, Fraction]  # column index -> weight (only nonzero entries)
    dual: tuple[Fraction, ...]  # one price per row
    iterations: int


class _State:
    def __init__(self, m: int, ns: int):
        self.m = m
        self.ns = ns
        self.binv = [[ONE if i == j else ZERO for j in range(m)] for i in range(m)]
        self.xb = [ONE] * m
        # variable ids: 0..ns-1 columns, ns..ns+m-1 surplus, ns+m.. artificial
        self.basis = list(range(ns + m, ns + 2 * m))


def solve_covering_lp(num_rows: int, columns: list[tuple[int, ...]], rule: str = "dantzig") -> CoverLpSolution:
    """Exact optimum of the unit-cost covering LP over the given columns."""
    if rule not in ("dantzig", "bland"):
        raise ValueError(f"unknown pivot rule {rule!r}")
    m = num_rows
    ns = len(columns)
    if m == 0:
        return CoverLpSolution(ZERO, {}, (), 0)
    covered = set()
    for j, col in enumerate(columns):
        if not col:
            raise ValueError(f"column {j} is empty")
        covered.update(col)
    if covered != set(range(m)):
        missing = sorted(set(range(m)) - covered)
        raise ValueError(f"rows {missing} are covered by no column; LP infeasible")

    st = _State(m, ns)
    flat = np.array([i for col in columns for i in col], dtype=np.int64)
    offsets = np.array(
        [0] + list(np.cumsum([len(c) for c in columns])[:-1]), dtype=np.int64
    ) if ns else np.zeros(0, dtype=np.int64)
    maxcol = max((len(c) for c in columns), default=1)

    it1 = _iterate(st, columns, flat, offsets, maxcol, phase1=True, rule=rule)
    if any(st.basis[r] >= ns + m and st.xb[r] != 0 for r in range(m)):
        raise RuntimeError("phase 1 ended with a nonzero artificial; LP infeasible")
    _drive_out_artificials(st, columns)
    it2 = _iterate(st, columns, flat, offsets, maxcol, phase1=False, rule=rule)

    dual = _dual_prices(st, phase1=False)
    primal = {st.basis[r]: st.xb[r] for r in range(m) if st.basis[r] < ns and st.xb[r] != 0}
    value = sum(primal.values(), ZERO)
    if value != sum(dual, ZERO):
        raise RuntimeError("primal/dual value mismatch; simplex invariant broken")
    return CoverLpSolution(value, primal, tuple(dual), it1 + it2)


def _entering_column(st: _State, columns, enter: int) -> list[Fraction]:
    a = [ZERO] * st.m
    if enter < st.ns:
        for i in columns[enter]:
            a[i] = ONE
    elif enter < st.ns + st.m:
        a[enter - st.ns] = -ONE
    else:
        a[enter - st.ns - st.m] = ONE
    return a


def _eliminate(st: _State, d: list[Fraction], leave: int, enter: int) -> None:
    piv = d[leave]
    brow = st.binv[leave]
    if piv != 1:
        brow = st.binv[leave] = [v / piv for v in brow]
        st.xb[leave] /= piv
    xl = st.xb[leave]
    for r in range(st.m):
        if r != leave and d[r]:
            f = d[r]
            row = st.binv[r]
            st.binv[r] = [v - f * w for v, w in zip(row, brow)]
            st.xb[r] -= f * xl
    st.basis[leave] = enter


def _drive_out_artificials(st: _State, columns) -> None:
    """Pivot zero-valued artificials out of the phase-1 basis where possible.

    A row whose artificial cannot be pivoted out has zero transformed entries
    in every original column, so no phase-2 pivot can ever touch it; leaving
    it basic at zero is then harmless.
    """
    m, ns = st.m, st.ns
    for r in range(m):
        if st.basis[r] < ns + m:
            continue
        basic = set(st.basis)
        brow = st.binv[r]
        for j in range(ns + m):
            if j in basic:
                continue
            entry = (
                sum((brow[i] for i in columns[j]), ZERO) if j < ns else -brow[j - ns]
            )
            if entry != 0:
                a = _entering_column(st, columns, j)
                d = [
                    sum(st.binv[rr][i] * a[i] for i in range(m) if a[i])
                    for rr in range(m)
                ]
                _eliminate(st, d, r, j)
                break


def _dual_prices(st: _State, phase1: bool) -> list[Fraction]:
    # y = c_B B^-1 with c = 1 on artificials (phase 1) or on columns (phase 2)
    m, ns = st.m, st.ns
    y = [ZERO] * m
    for r in range(m):
        b = st.basis[r]
        is_costed = (b >= ns + m) if phase1 else (b < ns)
        if is_costed:
            row = st.binv[r]
            for i in range(m):
                if row[i]:
                    y[i] += row[i]
    return y


def _iterate(st, columns, flat, offsets, maxcol, phase1: bool, rule: str) -> int:
    # Long degenerate stalls are normal here (covering LPs over symmetric
    # graphs), and the lexicographic test usually resolves them. Should a
    # stall outlast the threshold, switch to full Bland pivoting, whose
    # termination guarantee needs no basis invariant, until the objective
    # strictly moves again.
    stall_threshold = max(1000, 40 * st.m)
    stalled = 0
    fallback = False
    iterations = 0
    while True:
        iterations += 1
        if iterations > _ITERATION_GUARD:
            raise RuntimeError("simplex iteration guard tripped")
        y = _dual_prices(st, phase1)
        q = 1
        for f in y:
            q = lcm(q, f.denominator)
        p = [int(f * q) for f in y]
        effective = "bland" if fallback else rule
        enter = _price(st, columns, flat, offsets, maxcol, p, q, phase1, effective)
        if enter < 0:
            return iterations
        degenerate = _pivot(st, columns, enter, effective)
        if degenerate:
            stalled += 1
            fallback = fallback or rule == "bland" or stalled > stall_threshold
        else:
            stalled = 0
            fallback = rule == "bland"


def _price(st, columns, flat, offsets, maxcol, p, q, phase1, rule) -> int:
    """Entering variable index, or -1 at optimality.

    Works on integer-scaled reduced costs z_j = q * r_j: the sign and the
    ordering are unaffected by the common positive scale q.
    """
    m, ns = st.m, st.ns
    candidates: list[tuple[int, int]] = []  # (z_j, variable id)
    struct_cost = 0 if phase1 else q
    if ns:
        pmax = max((abs(v) for v in p), default=0)
        if pmax * maxcol + q < 2**62:
            sums = np.add.reduceat(np.array(p, dtype=np.int64)[flat], offsets)
            z = struct_cost - sums
            j = int(np.argmin(z))
            if z[j] < 0:
                if rule == "bland":
                    j = int(np.nonzero(z < 0)[0][0])
                candidates.append((int(z[j]), j))
        else:
            best, bj = 0, -1
            for j, col in enumerate(columns):
                zj = struct_cost - sum(p[i] for i in col)
                if zj < best:
                    best, bj = zj, j
                    if rule == "bland":
                        break
            if bj >= 0:
                candidates.append((best, bj))
    for i in range(m):  # surplus columns: A = -e_i, cost 0
        if p[i] < 0:
            candidates.append((p[i], ns + i))
    if phase1:
        for i in range(m):  # artificial columns: A = e_i, cost 1
            if q - p[i] < 0:
                candidates.append((q - p[i], ns + m + i))
    if not candidates:
        return -1
    if rule == "bland":
        return min(candidates, key=lambda t: t[1])[1]
    return min(candidates, key=lambda t: (t[0], t[1]))[1]


def _pivot(st, columns, enter: int, rule: str = "dantzig") -> bool:
    """Ratio test and basis update; returns True when the step is degenerate.

    Ties break lexicographically, or by smallest basic-variable index when
    running under Bland's rule.
    """
    m = st.m
    a = _entering_column(st, columns, enter)
    d = [
        sum(st.binv[r][i] * a[i] for i in range(m) if a[i]) for r in range(m)
    ]
    leave = -1
    if rule == "bland":
        best = None
        for r in range(m):
            if d[r] > 0:
                ratio = st.xb[r] / d[r]
                if best is None or ratio < best or (ratio == best and st.basis[r] < st.basis[leave]):
                    best, leave = ratio, r
    else:
        for r in range(m):
            if d[r] > 0 and (leave < 0 or _lex_less(st, d, r, leave)):
                leave = r
    if leave < 0:
        raise RuntimeError("LP unbounded; covering LPs cannot be unbounded")
    degenerate = st.xb[leave] == 0
    _eliminate(st, d, leave, enter)
    return degenerate


def _lex_less(st, d: list[Fraction], r: int, s: int) -> bool:
    """Is row r lexicographically smaller than row s in the ratio test?"""
    a, b = st.xb[r] * d[s], st.xb[s] * d[r]
    if a != b:
        return a < b
    for i in range(st.m):
        a, b = st.binv[r][i] * d[s], st.binv[s][i] * d[r]
        if a != b:
            return a < b
    return False
