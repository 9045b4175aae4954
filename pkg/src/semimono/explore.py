"""Seeded randomized matrix generation and counterexample search.

No constructive parameterization of the exact-order classes is known beyond
small cases, so exploration is honest rejection sampling: generate matrices
matching a sign template, filter through the exact classifier, and check the
conjectured conclusions on every verified hit.  Searches can only falsify a
conjecture or accumulate evidence for it, never prove it; reports carry that
caveat.

Determinism contract: a report is a pure function of its configuration
(seed included), so identical configs reproduce identical reports.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Optional

from .classify import Variant, exact_order, has_exact_order, is_Z, negative_entry_profile
from .ratcore import (
    IndexSet,
    RatMatrix,
    SingularBlockError,
    SingularMatrixError,
    adjugate,
    block_inverse_principal,
    count_negative_eigenvalues,
    det,
    inverse,
    principal_submatrix,
)


class EntrySign(Enum):
    NEG = "neg"
    POS = "pos"
    NONNEG = "nonneg"
    NONPOS = "nonpos"
    ZERO = "zero"
    FREE = "free"


Template = tuple[tuple[EntrySign, ...], ...]


def _grid(n: int, diag: EntrySign, off: EntrySign) -> Template:
    return tuple(
        tuple(diag if i == j else off for j in range(n)) for i in range(n)
    )


def template_exact_order_pattern(n: int, variant: Variant = Variant.E0) -> Template:
    """Nonnegative (resp. positive) diagonal, strictly negative off-diagonal:
    the sign pattern exact-order-(n-1) matrices are forced into."""
    diag = EntrySign.NONNEG if variant is Variant.E0 else EntrySign.POS
    return _grid(n, diag, EntrySign.NEG)


def template_z(n: int) -> Template:
    """Nonnegative diagonal, nonpositive off-diagonal (Z-matrices with the
    diagonal signs any semimonotone-flavored target forces)."""
    return _grid(n, EntrySign.NONNEG, EntrySign.NONPOS)


def template_free(n: int) -> Template:
    return _grid(n, EntrySign.FREE, EntrySign.FREE)


def template_nonneg(n: int) -> Template:
    return _grid(n, EntrySign.NONNEG, EntrySign.NONNEG)


def template_diag_nonneg_off_free(n: int) -> Template:
    """Free off-diagonal signs over a nonnegative diagonal.

    A nonnegative diagonal is a definitional necessary condition for every
    semimonotone-of-exact-order target (the order-1 submatrices must pass),
    so restricting the diagonal loses no candidate while keeping the
    off-diagonal part unconstrained.
    """
    return _grid(n, EntrySign.NONNEG, EntrySign.FREE)


@dataclass(frozen=True)
class GeneratorConfig:
    """Deterministic rejection-sampling stream specification.

    ``free_weights`` are the relative odds of drawing a negative, zero, or
    positive value at FREE template positions; every sign pattern keeps
    positive probability whenever all three weights are positive.
    ``diagonal_numerator_bound`` lets the diagonal range differ from the
    off-diagonal one (the interesting targets tend to need diagonals that
    dominate the off-diagonal magnitudes); None means "same bound".
    """

    order: int
    template: Template
    numerator_bound: int = 5
    denominator_bound: int = 3
    seed: int = 0
    max_attempts: int = 10_000
    free_weights: tuple[int, int, int] = (4, 1, 4)
    diagonal_numerator_bound: Optional[int] = None

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError("order must be >= 1")
        if self.numerator_bound < 1 or self.denominator_bound < 1:
            raise ValueError("bounds must be >= 1")
        if self.diagonal_numerator_bound is not None and self.diagonal_numerator_bound < 1:
            raise ValueError("bounds must be >= 1")
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be >= 1")
        if len(self.template) != self.order or any(len(r) != self.order for r in self.template):
            raise ValueError("template shape must match the order")
        if any(w < 0 for w in self.free_weights) or sum(self.free_weights) == 0:
            raise ValueError("free weights must be nonnegative and not all zero")


def _sample_entry(
    sign: EntrySign, rng: random.Random, cfg: GeneratorConfig, diagonal: bool
) -> Fraction:
    nb = cfg.numerator_bound
    if diagonal and cfg.diagonal_numerator_bound is not None:
        nb = cfg.diagonal_numerator_bound
    if sign is EntrySign.ZERO:
        return Fraction(0)
    if sign is EntrySign.NEG:
        num = -rng.randint(1, nb)
    elif sign is EntrySign.POS:
        num = rng.randint(1, nb)
    elif sign is EntrySign.NONNEG:
        num = rng.randint(0, nb)
    elif sign is EntrySign.NONPOS:
        num = -rng.randint(0, nb)
    else:
        wn, wz, wp = cfg.free_weights
        r = rng.randrange(wn + wz + wp)
        if r < wn:
            num = -rng.randint(1, nb)
        elif r < wn + wz:
            num = 0
        else:
            num = rng.randint(1, nb)
    if num == 0:
        return Fraction(0)
    return Fraction(num, rng.randint(1, cfg.denominator_bound))


def generate(cfg: GeneratorConfig) -> Iterator[RatMatrix]:
    """Deterministic seeded stream of template-conforming matrices; yields at
    most ``max_attempts`` of them."""
    rng = random.Random(cfg.seed)
    for _ in range(cfg.max_attempts):
        yield RatMatrix(
            [
                [
                    _sample_entry(cfg.template[i][j], rng, cfg, i == j)
                    for j in range(cfg.order)
                ]
                for i in range(cfg.order)
            ]
        )


@dataclass(frozen=True)
class Counterexample:
    matrix: RatMatrix
    failed: str
    evidence: str


@dataclass(frozen=True)
class SearchReport:
    target: str
    attempts: int
    hits: tuple[RatMatrix, ...]
    counterexamples: tuple[Counterexample, ...]
    notes: tuple[str, ...] = ()

    @property
    def hit_count(self) -> int:
        return len(self.hits)


_EVIDENCE_NOTE = "randomized search accumulates evidence or counterexamples; it proves nothing"


# ---------------------------------------------------------------------------
# fast necessary-condition screens (hits are always re-verified exactly)


def _z_exact_two_minor_screen(a: RatMatrix) -> bool:
    """For Z-matrices, E0 exact order 2 is equivalent to: principal minors of
    order <= n-2 nonnegative and of order n-1 negative.  Used as a cheap
    determinant-only screen; survivors still face the support-LP classifier."""
    n = a.order
    for size in range(1, n):
        for combo in itertools.combinations(range(1, n + 1), size):
            minor = det(principal_submatrix(a, IndexSet(n, combo)))
            if size <= n - 2 and minor < 0:
                return False
            if size == n - 1 and minor >= 0:
                return False
    return True


def _diag_nonneg(a: RatMatrix) -> bool:
    return all(a[i, i] >= 0 for i in range(a.order))


# ---------------------------------------------------------------------------
# per-matrix conjecture checkers (shared by searches, audits, and tests)


def conjecture_1_violations(a: RatMatrix) -> list[tuple[str, str]]:
    """Failed conclusions of the inverse-block conjecture on one matrix:
    every size-(n-1) principal block of A^{-1}, written via the partitioned
    inverse formula, should be a Z-matrix, and A should have exactly one
    negative eigenvalue."""
    n = a.order
    violations: list[tuple[str, str]] = []
    for combo in itertools.combinations(range(1, n + 1), n - 1):
        alpha = IndexSet(n, combo)
        try:
            block = block_inverse_principal(a, alpha)
        except (SingularMatrixError, SingularBlockError) as exc:
            violations.append((f"inverse block formula undefined for alpha={alpha}", str(exc)))
            continue
        if not is_Z(block):
            violations.append(
                (f"inverse principal block for alpha={alpha} is not Z", repr(block))
            )
    negatives = count_negative_eigenvalues(a)
    if negatives != 1:
        violations.append(("negative eigenvalue count != 1", f"count = {negatives}"))
    return violations


def conjecture_2_violations(a: RatMatrix) -> list[tuple[str, str]]:
    """Failed conclusions of the inverse-Z conjecture on one matrix:
    det A < 0 and A^{-1} exists and is a Z-matrix."""
    violations: list[tuple[str, str]] = []
    d = det(a)
    if d >= 0:
        violations.append(("det A is not negative", f"det = {d}"))
    if d == 0:
        violations.append(("inverse does not exist", "det = 0"))
    else:
        inv = inverse(a)
        if not is_Z(inv):
            violations.append(("inverse is not a Z-matrix", repr(inv)))
    return violations


def _revalidate_hit(a: RatMatrix, k: int, variant: Variant) -> bool:
    full = exact_order(a, variant)
    return full.k == k


def _independent_inverse_check(a: RatMatrix) -> bool:
    """Second route to the inverse: adjugate over determinant must agree with
    Gauss-Jordan elimination entrywise."""
    d = det(a)
    if d == 0:
        return True
    return adjugate(a) * (Fraction(1) / d) == inverse(a)


def _validated_counterexample(a: RatMatrix, k: int, variant: Variant, recheck) -> bool:
    """Triple check before a counterexample may enter a report: the classifier
    re-confirms the hit, the conclusion checker reproduces the violation, and
    an independent substitution route agrees on the underlying inverse."""
    return bool(
        _revalidate_hit(a, k, variant) and recheck(a) and _independent_inverse_check(a)
    )


# ---------------------------------------------------------------------------
# searches


def search_exact_order(
    n: int,
    k: int,
    variant: Variant,
    config: GeneratorConfig,
    target_hits: Optional[int] = None,
) -> SearchReport:
    """Filter the generator stream through the exact-order classifier."""
    if config.order != n:
        raise ValueError("config order must match n")
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in 0..{n}")
    hits: list[RatMatrix] = []
    attempts = 0
    for m in generate(config):
        attempts += 1
        if has_exact_order(m, k, variant):
            if exact_order(m, variant).k != k:
                raise AssertionError("screener and full classifier disagree")
            hits.append(m)
            if target_hits is not None and len(hits) >= target_hits:
                break
    return SearchReport(
        f"exact-order k={k} ({variant.value})", attempts, tuple(hits), (), (_EVIDENCE_NOTE,)
    )


def search_conjecture_1(
    config: GeneratorConfig, target_hits: Optional[int] = None
) -> SearchReport:
    """Hunt for Z-matrices of E0 exact order 2 violating the inverse-block
    conjecture (Z principal blocks of the inverse, one negative eigenvalue)."""
    hits: list[RatMatrix] = []
    counterexamples: list[Counterexample] = []
    attempts = 0
    for m in generate(config):
        attempts += 1
        if not is_Z(m) or not _diag_nonneg(m):
            continue
        if not _z_exact_two_minor_screen(m):
            continue
        if not has_exact_order(m, 2, Variant.E0):
            continue
        hits.append(m)
        for failed, evidence in conjecture_1_violations(m):
            if not _validated_counterexample(
                m, 2, Variant.E0, lambda x: bool(conjecture_1_violations(x))
            ):
                raise AssertionError("counterexample failed re-validation; refusing to report it")
            counterexamples.append(Counterexample(m, failed, evidence))
        if target_hits is not None and len(hits) >= target_hits:
            break
    return SearchReport(
        "conjecture-1 (Z exact order 2: inverse blocks Z, one negative eigenvalue)",
        attempts,
        tuple(hits),
        tuple(counterexamples),
        (_EVIDENCE_NOTE,),
    )


def search_conjecture_2(
    config: GeneratorConfig, target_hits: Optional[int] = None
) -> SearchReport:
    """Hunt for E0-exact-order-2 matrices (no Z restriction) violating
    det < 0 or inverse-Z-ness.  The report notes how many hits escape the
    Z class, since those are the informative ones."""
    hits: list[RatMatrix] = []
    counterexamples: list[Counterexample] = []
    attempts = 0
    non_z_hits = 0
    for m in generate(config):
        attempts += 1
        if not _diag_nonneg(m):
            continue
        if not has_exact_order(m, 2, Variant.E0):
            continue
        hits.append(m)
        if not is_Z(m):
            non_z_hits += 1
        for failed, evidence in conjecture_2_violations(m):
            if not _validated_counterexample(
                m, 2, Variant.E0, lambda x: bool(conjecture_2_violations(x))
            ):
                raise AssertionError("counterexample failed re-validation; refusing to report it")
            counterexamples.append(Counterexample(m, failed, evidence))
        if target_hits is not None and len(hits) >= target_hits:
            break
    return SearchReport(
        "conjecture-2 (exact order 2: det < 0, inverse exists and is Z)",
        attempts,
        tuple(hits),
        tuple(counterexamples),
        (_EVIDENCE_NOTE, f"hits outside the Z class: {non_z_hits}"),
    )


def search_negative_entries_question(
    config: GeneratorConfig,
    k: int,
    variant: Variant = Variant.E0,
    target_hits: Optional[int] = None,
) -> SearchReport:
    """Probe whether exact-order-k matrices always carry at least k negative
    entries in every row and column; a verified violation would settle the
    question negatively."""
    n = config.order
    if not 1 <= k < n:
        raise ValueError("k must satisfy 1 <= k < n")
    hits: list[RatMatrix] = []
    counterexamples: list[Counterexample] = []
    attempts = 0
    for m in generate(config):
        attempts += 1
        if not has_exact_order(m, k, variant):
            continue
        hits.append(m)
        profile = negative_entry_profile(m)
        if profile.min_row < k or profile.min_column < k:
            transpose_profile = negative_entry_profile(m.transpose())
            confirmed = (
                _revalidate_hit(m, k, variant)
                and transpose_profile.row_counts == profile.column_counts
                and transpose_profile.column_counts == profile.row_counts
            )
            if not confirmed:
                raise AssertionError("counterexample failed re-validation; refusing to report it")
            counterexamples.append(
                Counterexample(
                    m,
                    f"a row or column has fewer than {k} negative entries",
                    f"row counts {profile.row_counts}, column counts {profile.column_counts}",
                )
            )
        if target_hits is not None and len(hits) >= target_hits:
            break
    return SearchReport(
        f"negative-entries question (exact order k={k}, {variant.value})",
        attempts,
        tuple(hits),
        tuple(counterexamples),
        (_EVIDENCE_NOTE,),
    )
