"""Exact feasibility oracles for homogeneous sign systems.

The class memberships downstream all reduce to questions of the form
"is there y > 0 with My < 0 (or My <= 0)?" on a principal block M.  By
positive homogeneity these are equivalent to the closed systems

    strict:      y >= 1,  My <= -1
    semistrict:  y >= 1,  My <=  0

which are decided exactly: orders 1 and 2 by closed-form interval
arithmetic, larger orders by a phase-1 simplex over Fractions with Bland's
pivoting rule (termination under degeneracy, no tolerances anywhere).
A Fourier-Motzkin eliminator provides an independent second route for
small orders.

Everything here is pure and stateless; callers may evaluate many systems
concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .ratcore import RatMatrix, RatVector

FM_MAX_ORDER = 5


class OrderTooLargeError(ValueError):
    """Fourier-Motzkin refuses orders whose elimination blows up."""


class Strictness(Enum):
    STRICT = "strict"          # seek y > 0 with My < 0
    SEMISTRICT = "semistrict"  # seek y > 0 with My <= 0


@dataclass(frozen=True)
class SignSystem:
    """One support-restricted system: a square block plus the strictness."""

    m: RatMatrix
    strictness: Strictness

    def __post_init__(self) -> None:
        self.m._require_square()


@dataclass(frozen=True)
class FeasibilityOutcome:
    feasible: bool
    certificate: Optional[RatVector] = None

    @property
    def status(self) -> str:
        return "feasible" if self.feasible else "infeasible"


def _closed_rhs(m: RatMatrix, strictness: Strictness) -> list[Fraction]:
    """Right-hand side of the compiled system M u <= h after u = y - 1."""
    shift = Fraction(-1) if strictness is Strictness.STRICT else Fraction(0)
    n = m.order
    return [shift - sum((m[i, j] for j in range(n)), Fraction(0)) for i in range(n)]


# ---------------------------------------------------------------------------
# phase-1 simplex for {x >= 0 : Gx <= h}


def phase1_feasible(g_rows: list[list[Fraction]], h: list[Fraction]) -> tuple[bool, Optional[list[Fraction]]]:
    """Decide whether {x >= 0 : Gx <= h} is nonempty, exactly.

    Minimizes the sum of artificial variables with Bland's rule; the system
    is feasible iff the optimum is exactly zero.  Returns a witness x when
    feasible.
    """
    nrows = len(g_rows)
    nvars = len(g_rows[0]) if nrows else 0
    if all(hi >= 0 for hi in h):
        return True, [Fraction(0)] * nvars

    art_rows = [i for i in range(nrows) if h[i] < 0]
    nart = len(art_rows)
    ncols = nvars + nrows + nart
    zero = Fraction(0)
    one = Fraction(1)

    rows: list[list[Fraction]] = []
    basis: list[int] = []
    art_pos = {r: k for k, r in enumerate(art_rows)}
    for i in range(nrows):
        row = [zero] * (ncols + 1)
        negate = h[i] < 0
        for j in range(nvars):
            row[j] = -g_rows[i][j] if negate else g_rows[i][j]
        row[nvars + i] = -one if negate else one
        if negate:
            row[nvars + nrows + art_pos[i]] = one
            basis.append(nvars + nrows + art_pos[i])
        else:
            basis.append(nvars + i)
        row[ncols] = -h[i] if negate else h[i]
        rows.append(row)

    # reduced-cost row for the phase-1 objective (cost 1 on artificials)
    zrow = [zero] * (ncols + 1)
    for j in range(nart):
        zrow[nvars + nrows + j] = one
    for i in range(nrows):
        if basis[i] >= nvars + nrows:
            for j in range(ncols + 1):
                zrow[j] -= rows[i][j]

    while True:
        enter = next((j for j in range(ncols) if zrow[j] < 0), None)
        if enter is None:
            break
        leave = None
        best_ratio: Optional[Fraction] = None
        for i in range(nrows):
            coeff = rows[i][enter]
            if coeff > 0:
                ratio = rows[i][ncols] / coeff
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[leave])
                ):
                    best_ratio = ratio
                    leave = i
        if leave is None:
            raise AssertionError("phase-1 objective is bounded; no leaving row means a bug")
        pivot = rows[leave][enter]
        rows[leave] = [v / pivot for v in rows[leave]]
        prow = rows[leave]
        for i in range(nrows):
            if i != leave and rows[i][enter] != 0:
                f = rows[i][enter]
                rows[i] = [v - f * p for v, p in zip(rows[i], prow)]
        if zrow[enter] != 0:
            f = zrow[enter]
            zrow = [v - f * p for v, p in zip(zrow, prow)]
        basis[leave] = enter

    objective = -zrow[ncols]
    if objective != 0:
        return False, None
    x = [zero] * nvars
    for i, b in enumerate(basis):
        if b < nvars:
            x[b] = rows[i][ncols]
    return True, x


# ---------------------------------------------------------------------------
# closed forms for orders 1 and 2


def _order1(m: RatMatrix, strictness: Strictness) -> FeasibilityOutcome:
    a = m[0, 0]
    if strictness is Strictness.STRICT:
        if a >= 0:
            return FeasibilityOutcome(False)
        y = max(Fraction(1), Fraction(-1) / a)
        return FeasibilityOutcome(True, (y,))
    if a > 0:
        return FeasibilityOutcome(False)
    return FeasibilityOutcome(True, (Fraction(1),))


def _order2(m: RatMatrix, strictness: Strictness) -> FeasibilityOutcome:
    strict = strictness is Strictness.STRICT
    lo_val, lo_open = Fraction(0), True  # y = (1, t) with t > 0
    hi_val: Optional[Fraction] = None
    hi_open = False
    for p, q in ((m[0, 0], m[0, 1]), (m[1, 0], m[1, 1])):
        if q == 0:
            ok = p < 0 if strict else p <= 0
            if not ok:
                return FeasibilityOutcome(False)
        elif q < 0:
            bound = -p / q
            if bound > lo_val or (bound == lo_val and strict):
                lo_val, lo_open = bound, strict if bound > lo_val else (lo_open or strict)
        else:
            bound = -p / q
            if hi_val is None or bound < hi_val or (bound == hi_val and strict):
                hi_open = strict if hi_val is None or bound < hi_val else (hi_open or strict)
                hi_val = bound

    if hi_val is None:
        t = lo_val + 1
    elif lo_val < hi_val:
        t = (lo_val + hi_val) / 2
    elif lo_val == hi_val and not lo_open and not hi_open and lo_val > 0:
        t = lo_val
    else:
        return FeasibilityOutcome(False)
    return FeasibilityOutcome(True, _normalize_certificate(m, (Fraction(1), t), strictness))


def _normalize_certificate(m: RatMatrix, y: RatVector, strictness: Strictness) -> RatVector:
    """Scale a raw witness (y > 0, My < 0 or <= 0) onto y >= 1, My <= -1 / 0."""
    factors = [Fraction(1)]
    factors.extend(Fraction(1) / yi for yi in y)
    if strictness is Strictness.STRICT:
        image = m @ y
        factors.extend(Fraction(-1) / wi for wi in image)
    t = max(factors)
    return tuple(t * yi for yi in y)


# ---------------------------------------------------------------------------
# public oracles


def _simplex_outcome(m: RatMatrix, strictness: Strictness) -> FeasibilityOutcome:
    n = m.order
    g = [[m[i, j] for j in range(n)] for i in range(n)]
    ok, u = phase1_feasible(g, _closed_rhs(m, strictness))
    if not ok:
        return FeasibilityOutcome(False)
    y = tuple(ui + 1 for ui in u)
    return FeasibilityOutcome(True, y)


def _shortcut(m: RatMatrix, strictness: Strictness) -> Optional[FeasibilityOutcome]:
    """Exact O(n^2) resolutions that skip the simplex when possible.

    A row with no negative entry pins (My)_i >= 0 for y > 0 (> 0 when the
    row is nonzero), settling infeasibility; conversely the all-ones vector
    is a ready-made certificate whenever the row sums already have the right
    signs.
    """
    n = m.order
    strict = strictness is Strictness.STRICT
    for i in range(n):
        row = m.row(i)
        if all(v >= 0 for v in row) and (strict or any(v > 0 for v in row)):
            return FeasibilityOutcome(False)
    sums = [sum(row, Fraction(0)) for row in m.entries]
    if (strict and all(s < 0 for s in sums)) or (not strict and all(s <= 0 for s in sums)):
        ones = tuple([Fraction(1)] * n)
        return FeasibilityOutcome(True, _normalize_certificate(m, ones, strictness))
    return None


def _decide(m: RatMatrix, strictness: Strictness) -> FeasibilityOutcome:
    m._require_square()
    if m.order == 1:
        return _order1(m, strictness)
    if m.order == 2:
        return _order2(m, strictness)
    quick = _shortcut(m, strictness)
    if quick is not None:
        return quick
    return _simplex_outcome(m, strictness)


def feasible_strict(m: RatMatrix) -> FeasibilityOutcome:
    """Is there y > 0 with My < 0?  Certificate satisfies y >= 1, My <= -1."""
    return _decide(m, Strictness.STRICT)


def feasible_semistrict(m: RatMatrix) -> FeasibilityOutcome:
    """Is there y > 0 with My <= 0?  Certificate satisfies y >= 1, My <= 0."""
    return _decide(m, Strictness.SEMISTRICT)


def decide(system: SignSystem) -> FeasibilityOutcome:
    return _decide(system.m, system.strictness)


# ---------------------------------------------------------------------------
# Fourier-Motzkin oracle

_Row = tuple[tuple[Fraction, ...], Fraction]  # coeffs . y <= rhs


def _canonical(rows: list[_Row]) -> tuple[list[_Row], bool]:
    """Deduplicate, keep tightest rhs per direction, detect 0 <= negative."""
    best: dict[tuple[Fraction, ...], Fraction] = {}
    contradiction = False
    for coeffs, rhs in rows:
        scale = next((abs(c) for c in coeffs if c != 0), None)
        if scale is None:
            if rhs < 0:
                contradiction = True
            continue
        key = tuple(c / scale for c in coeffs)
        val = rhs / scale
        if key not in best or val < best[key]:
            best[key] = val
    return [(k, v) for k, v in best.items()], contradiction


def _eliminate(rows: list[_Row], k: int) -> list[_Row]:
    keep: list[_Row] = []
    uppers: list[_Row] = []
    lowers: list[_Row] = []
    for coeffs, rhs in rows:
        c = coeffs[k]
        if c == 0:
            keep.append((coeffs, rhs))
        else:
            scaled = tuple(v / abs(c) for v in coeffs), rhs / abs(c)
            (uppers if c > 0 else lowers).append(scaled)
    for ucoeffs, urhs in uppers:
        for lcoeffs, lrhs in lowers:
            combo = tuple(u + l for u, l in zip(ucoeffs, lcoeffs))
            keep.append((combo, urhs + lrhs))
    return keep


def fm_feasible(m: RatMatrix, strictness: Strictness) -> FeasibilityOutcome:
    """Independent Fourier-Motzkin decision of the same compiled system.

    Restricted to order <= FM_MAX_ORDER: variable elimination is doubly
    exponential beyond desk scale.
    """
    m._require_square()
    n = m.order
    if n > FM_MAX_ORDER:
        raise OrderTooLargeError(f"order {n} exceeds the Fourier-Motzkin cap {FM_MAX_ORDER}")

    rhs_shift = Fraction(-1) if strictness is Strictness.STRICT else Fraction(0)
    rows: list[_Row] = []
    for i in range(n):
        coeffs = [Fraction(0)] * n
        coeffs[i] = Fraction(-1)
        rows.append((tuple(coeffs), Fraction(-1)))  # y_i >= 1
    for i in range(n):
        rows.append((tuple(m[i, j] for j in range(n)), rhs_shift))

    stages: list[list[_Row]] = []
    contradiction = False
    for k in range(n - 1, -1, -1):
        rows, bad = _canonical(rows)
        contradiction = contradiction or bad
        stages.append(rows)
        rows = _eliminate(rows, k)
    rows, bad = _canonical(rows)
    contradiction = contradiction or bad
    if contradiction:
        return FeasibilityOutcome(False)

    y: list[Optional[Fraction]] = [None] * n
    for k in range(n):
        stage = stages[n - 1 - k]
        lo: Optional[Fraction] = None
        hi: Optional[Fraction] = None
        for coeffs, rhs in stage:
            c = coeffs[k]
            if c == 0:
                continue
            residual = rhs - sum(
                (coeffs[j] * y[j] for j in range(k) if coeffs[j] != 0), Fraction(0)
            )
            bound = residual / c
            if c > 0:
                hi = bound if hi is None else min(hi, bound)
            else:
                lo = bound if lo is None else max(lo, bound)
        if lo is None:
            lo = Fraction(1)
        if hi is not None and hi < lo:
            raise AssertionError("back-substitution broke; elimination is unsound")
        y[k] = lo if hi is None else (lo + hi) / 2
    return FeasibilityOutcome(True, tuple(v for v in y if v is not None))
