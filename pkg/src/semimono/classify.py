"""Decision procedures for the matrix classes in the semimonotonicity
hierarchy, with machine-checkable certificates.

The central reduction: a square matrix A fails to be semimonotone exactly
when some nonempty support alpha admits y > 0 with A_aa y < 0 (pad y with
zeros to recover the failing x), and fails to be strictly semimonotone when
some support admits y > 0 with A_aa y <= 0.  Membership in either class is
therefore decided by sweeping all 2^n - 1 supports through the exact
feasibility oracle; the sweep is shared, memoized by index set, and reused
by the exact-order profile.

All procedures are pure; supports are visited in a fixed (size, lex) order
so the "first witness" is deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from .feasibility import (
    FeasibilityOutcome,
    Strictness,
    feasible_semistrict,
    feasible_strict,
)
from .ratcore import (
    IndexSet,
    RatMatrix,
    RatVector,
    SingularMatrixError,
    all_supports,
    det,
    inverse,
    principal_submatrix,
)


class WrongOrderError(ValueError):
    """An operation fixed to one matrix order was fed another."""


class Variant(Enum):
    """Which flavor of semimonotonicity a test refers to."""

    E0 = "E0"  # semimonotone
    E = "E"    # strictly semimonotone

    @property
    def failing_system(self) -> Strictness:
        # E0 fails through a strict system, E through a semistrict one.
        return Strictness.STRICT if self is Variant.E0 else Strictness.SEMISTRICT


class OrderStatus(Enum):
    ALL = "all"
    NONE = "none"
    MIXED = "mixed"


class ClassLabel(Enum):
    E0 = "E0"
    E = "E"
    ALMOST_E0 = "almost E0"
    ALMOST_E = "almost E"
    Z = "Z"
    NONNEGATIVE = "nonnegative"
    P0 = "P0"
    P = "P"
    COPOSITIVE = "copositive"
    STRICTLY_COPOSITIVE = "strictly copositive"
    INVERSE_Z = "inverse Z"


@dataclass(frozen=True)
class SupportWitness:
    """A support alpha and a vector y > 0 with A_aa y < 0 (or <= 0)."""

    support: IndexSet
    vector: RatVector


@dataclass(frozen=True)
class MinorWitness:
    """A principal index set whose minor violates a sign requirement."""

    support: IndexSet
    minor: Fraction


Witness = Union[SupportWitness, MinorWitness]


@dataclass(frozen=True)
class ClassVerdict:
    label: ClassLabel
    member: bool
    witness: Optional[Witness] = None


@dataclass(frozen=True)
class ExactOrderResult:
    """Outcome of the exact-order classification.

    ``k`` is the exact order when one exists, else None (the definition does
    not partition all matrices).  ``evidence[m-1]`` records whether ALL,
    NONE, or a MIXED set of the order-m principal submatrices belong to the
    class; heredity forces the ALL region to be a prefix and the NONE region
    a suffix of the orders.
    """

    variant: Variant
    k: Optional[int]
    evidence: tuple[OrderStatus, ...]

    @property
    def has_exact_order(self) -> bool:
        return self.k is not None

    def describe(self) -> str:
        if self.k is None:
            profile = ",".join(s.value for s in self.evidence)
            return f"no exact order ({self.variant.value}; per-order profile {profile})"
        return f"{self.variant.value} exact order {self.k}"


def _support_outcome(a: RatMatrix, alpha: IndexSet, variant: Variant) -> FeasibilityOutcome:
    block = principal_submatrix(a, alpha)
    if variant is Variant.E0:
        return feasible_strict(block)
    return feasible_semistrict(block)


def _membership_verdict(a: RatMatrix, variant: Variant) -> ClassVerdict:
    a._require_square()
    label = ClassLabel.E0 if variant is Variant.E0 else ClassLabel.E
    for alpha in all_supports(a.order):
        outcome = _support_outcome(a, alpha, variant)
        if outcome.feasible:
            assert outcome.certificate is not None
            return ClassVerdict(label, False, SupportWitness(alpha, outcome.certificate))
    return ClassVerdict(label, True)


def is_semimonotone(a: RatMatrix) -> ClassVerdict:
    """Semimonotone: every nonzero x >= 0 has an index i with x_i > 0 and
    (Ax)_i >= 0.  A negative verdict carries the first failing support and
    its certifying y."""
    return _membership_verdict(a, Variant.E0)


def is_strictly_semimonotone(a: RatMatrix) -> ClassVerdict:
    """Same with (Ax)_i > 0 demanded at the witnessing index."""
    return _membership_verdict(a, Variant.E)


@lru_cache(maxsize=512)
def exact_order(a: RatMatrix, variant: Variant) -> ExactOrderResult:
    """Full per-order membership profile and the exact order k, if any.

    A has exact order k when every order-(n-k) principal submatrix is in the
    class and no larger one is.  k = 0 means A itself belongs; k = n is
    reported when already the order-1 submatrices all fail (the order-0
    requirement is vacuous).  Every support is solved exactly once.
    """
    a._require_square()
    n = a.order
    failing: dict[tuple[int, ...], bool] = {}
    members_per_order: list[list[bool]] = [[] for _ in range(n)]
    for alpha in all_supports(n):
        key = alpha.members
        bad = _support_outcome(a, alpha, variant).feasible
        if not bad and len(key) > 1:
            bad = any(failing[tuple(x for x in key if x != i)] for i in key)
        failing[key] = bad
        members_per_order[len(key) - 1].append(not bad)

    statuses: list[OrderStatus] = []
    for members in members_per_order:
        if all(members):
            statuses.append(OrderStatus.ALL)
        elif not any(members):
            statuses.append(OrderStatus.NONE)
        else:
            statuses.append(OrderStatus.MIXED)

    all_prefix = 0
    for status in statuses:
        if status is not OrderStatus.ALL:
            break
        all_prefix += 1
    if all(statuses[m] is OrderStatus.NONE for m in range(all_prefix, n)):
        k: Optional[int] = n - all_prefix
    else:
        k = None
    return ExactOrderResult(variant, k, tuple(statuses))


def has_exact_order(a: RatMatrix, k: int, variant: Variant) -> bool:
    """Early-exit test for one specific exact order (the explorer's filter).

    Equivalent to ``exact_order(a, variant).k == k``: the orders up to n-k
    must show no failing support, and every support of size n-k+1 must fail
    (heredity settles all larger orders).
    """
    a._require_square()
    n = a.order
    if not 0 <= k <= n:
        raise ValueError(f"exact order must lie in 0..{n}")
    for size in range(1, n - k + 1):
        for combo in itertools.combinations(range(1, n + 1), size):
            if _support_outcome(a, IndexSet(n, combo), variant).feasible:
                return False
    if k >= 1:
        for combo in itertools.combinations(range(1, n + 1), n - k + 1):
            if not _support_outcome(a, IndexSet(n, combo), variant).feasible:
                return False
    return True


def is_almost_semimonotone(a: RatMatrix, variant: Variant = Variant.E0) -> ClassVerdict:
    """All proper principal submatrices in the class, and some x > 0 with
    Ax <= 0 (variant E0) or Ax < 0 (variant E).

    This is the literal two-part definition; it is related to, but not
    interchangeable with, "exact order 1" (use :func:`exact_order` for
    that predicate).  A positive verdict carries the certifying x on the
    full support.
    """
    a._require_square()
    n = a.order
    if n < 2:
        raise ValueError("almost-class tests need order >= 2")
    label = ClassLabel.ALMOST_E0 if variant is Variant.E0 else ClassLabel.ALMOST_E
    for alpha in all_supports(n):
        if len(alpha) == n:
            continue
        outcome = _support_outcome(a, alpha, variant)
        if outcome.feasible:
            assert outcome.certificate is not None
            return ClassVerdict(label, False, SupportWitness(alpha, outcome.certificate))
    full = feasible_semistrict(a) if variant is Variant.E0 else feasible_strict(a)
    if not full.feasible:
        return ClassVerdict(label, False)
    assert full.certificate is not None
    return ClassVerdict(label, True, SupportWitness(IndexSet.full(n), full.certificate))


def is_Z(a: RatMatrix) -> bool:
    """All off-diagonal entries nonpositive."""
    a._require_square()
    n = a.order
    return all(a[i, j] <= 0 for i in range(n) for j in range(n) if i != j)


def is_nonnegative(a: RatMatrix) -> bool:
    return all(v >= 0 for row in a.entries for v in row)


def _minor_verdict(a: RatMatrix, strict: bool) -> ClassVerdict:
    a._require_square()
    label = ClassLabel.P if strict else ClassLabel.P0
    for alpha in all_supports(a.order):
        minor = det(principal_submatrix(a, alpha))
        if minor < 0 or (strict and minor == 0):
            return ClassVerdict(label, False, MinorWitness(alpha, minor))
    return ClassVerdict(label, True)


def is_P0(a: RatMatrix) -> ClassVerdict:
    """All 2^n - 1 principal minors nonnegative, checked exactly."""
    return _minor_verdict(a, strict=False)


def is_P(a: RatMatrix) -> ClassVerdict:
    """All principal minors strictly positive."""
    return _minor_verdict(a, strict=True)


def is_copositive(a: RatMatrix) -> ClassVerdict:
    """x^T A x >= 0 for all x >= 0.

    Decided through the symmetric part S = (A + A^T)/2, whose quadratic form
    is identical, and the fact that for symmetric matrices copositivity
    coincides with semimonotonicity.  A failure witness (alpha, y) gives a
    nonnegative x (y padded with zeros) with x^T A x < 0.
    """
    verdict = _membership_verdict(a.symmetric_part(), Variant.E0)
    return ClassVerdict(ClassLabel.COPOSITIVE, verdict.member, verdict.witness)


def is_strictly_copositive(a: RatMatrix) -> ClassVerdict:
    """x^T A x > 0 for all nonzero x >= 0, via the strict test on the
    symmetric part."""
    verdict = _membership_verdict(a.symmetric_part(), Variant.E)
    return ClassVerdict(ClassLabel.STRICTLY_COPOSITIVE, verdict.member, verdict.witness)


def copositive_exact_order(a: RatMatrix, variant: Variant) -> ExactOrderResult:
    """Exact-order profile with (strict) copositivity as the membership test.

    Symmetrization commutes with taking principal submatrices, so this is
    the semimonotone profile of the symmetric part.
    """
    return exact_order(a.symmetric_part(), variant)


def is_inverse_Z(a: RatMatrix) -> ClassVerdict:
    """Nonsingular with a Z-matrix inverse."""
    try:
        inv = inverse(a)
    except SingularMatrixError:
        return ClassVerdict(ClassLabel.INVERSE_Z, False)
    return ClassVerdict(ClassLabel.INVERSE_Z, is_Z(inv))


class Sign(Enum):
    NEG = "-"
    ZERO = "0"
    POS = "+"

    @classmethod
    def of(cls, x: Fraction) -> "Sign":
        if x < 0:
            return cls.NEG
        if x > 0:
            return cls.POS
        return cls.ZERO


@dataclass(frozen=True)
class SignPattern:
    """Exact entry signs, diagonal separated from off-diagonal."""

    diagonal: tuple[Sign, ...]
    off_diagonal: tuple[tuple[Optional[Sign], ...], ...]


def sign_pattern(a: RatMatrix) -> SignPattern:
    a._require_square()
    n = a.order
    diag = tuple(Sign.of(a[i, i]) for i in range(n))
    off = tuple(
        tuple(None if i == j else Sign.of(a[i, j]) for j in range(n)) for i in range(n)
    )
    return SignPattern(diag, off)


@dataclass(frozen=True)
class Structure3x3Report:
    """Sign-pattern and order-2-minor audit data for a 3x3 matrix.

    ``pattern_ok`` demands nonnegative (variant E0) or positive (variant E)
    diagonal entries and strictly negative off-diagonal entries;
    ``minors_ok`` demands negative (E0) or nonpositive (E) order-2 principal
    minors.  The checks are independent of whether the matrix actually has
    exact order two, so they can audit that implication.
    """

    variant: Variant
    diagonal_ok: bool
    off_diagonal_ok: bool
    minors: tuple[Fraction, Fraction, Fraction]
    minors_ok: bool

    @property
    def pattern_ok(self) -> bool:
        return self.diagonal_ok and self.off_diagonal_ok


def check_3x3_structure(a: RatMatrix, variant: Variant = Variant.E0) -> Structure3x3Report:
    if not a.is_square or a.order != 3:
        raise WrongOrderError("structure check is specific to 3x3 matrices")
    diag_ok = all(
        (a[i, i] >= 0 if variant is Variant.E0 else a[i, i] > 0) for i in range(3)
    )
    off_ok = all(a[i, j] < 0 for i in range(3) for j in range(3) if i != j)
    minors = tuple(
        det(principal_submatrix(a, IndexSet(3, combo)))
        for combo in ((1, 2), (1, 3), (2, 3))
    )
    if variant is Variant.E0:
        minors_ok = all(m < 0 for m in minors)
    else:
        minors_ok = all(m <= 0 for m in minors)
    return Structure3x3Report(variant, diag_ok, off_ok, minors, minors_ok)


@dataclass(frozen=True)
class NegativeEntryProfile:
    row_counts: tuple[int, ...]
    column_counts: tuple[int, ...]

    @property
    def min_row(self) -> int:
        return min(self.row_counts)

    @property
    def min_column(self) -> int:
        return min(self.column_counts)


def negative_entry_profile(a: RatMatrix) -> NegativeEntryProfile:
    """Count strictly negative entries per row and per column."""
    a._require_square()
    n = a.order
    rows = tuple(sum(1 for j in range(n) if a[i, j] < 0) for i in range(n))
    cols = tuple(sum(1 for i in range(n) if a[i, j] < 0) for j in range(n))
    return NegativeEntryProfile(rows, cols)
