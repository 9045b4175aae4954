"""Executable audits: each structural result about exact-order matrices
becomes a hypotheses/conclusions check runnable on arbitrary input.

Hypothesis checking is kept strictly separate from conclusion checking: a
failed conclusion *with hypotheses met* is genuine evidence against the
audited statement and is surfaced as a counterexample with re-checkable
data, while unmet hypotheses simply skip the conclusions.  The audits
double as the validators behind the randomized conjecture searches.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .classify import (
    Variant,
    WrongOrderError,
    check_3x3_structure,
    copositive_exact_order,
    exact_order,
    is_Z,
    negative_entry_profile,
)
from .ratcore import (
    IndexSet,
    RatMatrix,
    SingularBlockError,
    SingularMatrixError,
    all_supports,
    count_negative_eigenvalues,
    det,
    inverse,
    is_irreducible,
    permutation_similarity,
    principal_submatrix,
    schur_complement,
)


class NotSymmetricError(ValueError):
    """The symmetric-equivalence audit needs symmetric input."""


@dataclass(frozen=True)
class Conclusion:
    name: str
    passed: bool
    evidence: str


@dataclass(frozen=True)
class AuditReport:
    audit_id: str
    hypotheses_met: bool
    hypotheses_note: str
    conclusions: tuple[Conclusion, ...]
    counterexample: Optional[RatMatrix] = None

    @property
    def ok(self) -> bool:
        """False exactly when a conclusion failed with hypotheses met."""
        return self.counterexample is None

    def failed_conclusions(self) -> tuple[Conclusion, ...]:
        return tuple(c for c in self.conclusions if not c.passed)


def _report(
    audit_id: str,
    a: RatMatrix,
    hypotheses_met: bool,
    note: str,
    conclusions: list[Conclusion],
) -> AuditReport:
    counter = a if hypotheses_met and any(not c.passed for c in conclusions) else None
    return AuditReport(audit_id, hypotheses_met, note, tuple(conclusions), counter)


def _almost_block_conclusions(a: RatMatrix, variant: Variant) -> list[Conclusion]:
    """Auxiliary checks on the order-(n-1) principal blocks.

    Under exact-order-2 hypotheses these blocks sit just outside the class
    while all their proper submatrices sit inside, which forces a negative
    entry into each of their rows and columns; in the E0 flavor the blocks
    are additionally invertible with entrywise nonpositive inverses.
    """
    n = a.order
    out: list[Conclusion] = []
    neg_ok = True
    neg_evidence = []
    inv_ok = True
    inv_evidence = []
    for combo in itertools.combinations(range(1, n + 1), n - 1):
        alpha = IndexSet(n, combo)
        block = principal_submatrix(a, alpha)
        profile = negative_entry_profile(block)
        if profile.min_row < 1 or profile.min_column < 1:
            neg_ok = False
            neg_evidence.append(f"alpha={alpha} has a nonnegative row or column")
        if variant is Variant.E0:
            try:
                block_inv = inverse(block)
            except SingularMatrixError:
                inv_ok = False
                inv_evidence.append(f"alpha={alpha} block is singular")
                continue
            if any(v > 0 for row in block_inv.entries for v in row):
                inv_ok = False
                inv_evidence.append(f"alpha={alpha} inverse has a positive entry")
    out.append(
        Conclusion(
            "order n-1 blocks: negative entry in every row and column",
            neg_ok,
            "; ".join(neg_evidence) or "holds for every block",
        )
    )
    if variant is Variant.E0:
        out.append(
            Conclusion(
                "order n-1 blocks: inverse exists and is entrywise nonpositive",
                inv_ok,
                "; ".join(inv_evidence) or "holds for every block",
            )
        )
    return out


def audit_thm_3x3_structure(a: RatMatrix, variant: Variant = Variant.E0) -> AuditReport:
    """3x3 exact-order-2 matrices must be Z with an admissible sign pattern,
    negative (resp. nonpositive) order-2 minors, and irreducible."""
    if not a.is_square or a.order != 3:
        raise WrongOrderError("this audit is specific to 3x3 matrices")
    result = exact_order(a, variant)
    met = result.k == 2
    note = f"classified as {result.describe()}; requires exact order 2"
    conclusions: list[Conclusion] = []
    if met:
        structure = check_3x3_structure(a, variant)
        diag_req = ">= 0" if variant is Variant.E0 else "> 0"
        conclusions.append(
            Conclusion(
                f"diagonal entries {diag_req}",
                structure.diagonal_ok,
                f"diagonal = {[str(a[i, i]) for i in range(3)]}",
            )
        )
        conclusions.append(
            Conclusion(
                "off-diagonal entries < 0 (Z-matrix form)",
                structure.off_diagonal_ok,
                "off-diagonal signs checked entrywise",
            )
        )
        minor_req = "negative" if variant is Variant.E0 else "nonpositive"
        conclusions.append(
            Conclusion(
                f"order-2 principal minors {minor_req}",
                structure.minors_ok,
                f"minors = {[str(m) for m in structure.minors]}",
            )
        )
        n = 3
        upper = all(a[i, j] == 0 for i in range(n) for j in range(n) if i > j)
        lower = all(a[i, j] == 0 for i in range(n) for j in range(n) if i < j)
        conclusions.append(
            Conclusion("not a triangular matrix", not upper and not lower, "zero pattern scan")
        )
        conclusions.append(
            Conclusion("irreducible", is_irreducible(a), "strong connectivity of the support digraph")
        )
        conclusions.extend(_almost_block_conclusions(a, variant))
    return _report("thm3.4", a, met, note, conclusions)


def audit_thm_3x3_inverse(a: RatMatrix) -> AuditReport:
    """3x3 semimonotone matrices of exact order 2: negative determinant,
    Z-matrix inverse, exactly one negative eigenvalue, positive Schur
    complement of the leading 2x2 block."""
    if not a.is_square or a.order != 3:
        raise WrongOrderError("this audit is specific to 3x3 matrices")
    result = exact_order(a, Variant.E0)
    met = result.k == 2
    note = f"classified as {result.describe()}; requires E0 exact order 2"
    conclusions: list[Conclusion] = []
    if met:
        d = det(a)
        conclusions.append(Conclusion("det A < 0", d < 0, f"det = {d}"))
        try:
            inv = inverse(a)
            conclusions.append(
                Conclusion("inverse exists and is a Z-matrix", is_Z(inv), f"inverse = {inv!r}")
            )
        except SingularMatrixError:
            conclusions.append(Conclusion("inverse exists and is a Z-matrix", False, "singular"))
        negatives = count_negative_eigenvalues(a)
        conclusions.append(
            Conclusion("exactly one negative eigenvalue", negatives == 1, f"count = {negatives}")
        )
        alpha = IndexSet(3, (1, 2))
        try:
            schur = schur_complement(a, alpha)
            positive = all(v > 0 for row in schur.entries for v in row)
            conclusions.append(
                Conclusion("Schur complement of A_{12,12} positive", positive, f"value = {schur!r}")
            )
        except SingularBlockError:
            conclusions.append(
                Conclusion("Schur complement of A_{12,12} positive", False, "leading block singular")
            )
    return _report("thm3.5", a, met, note, conclusions)


def audit_prop_4_10(a: RatMatrix, variant: Variant = Variant.E0) -> AuditReport:
    """Exact-order-2 matrices of order >= 3: admissible diagonal signs and
    at least two negative entries in every row and column."""
    a._require_square()
    n = a.order
    if n < 3:
        return _report("prop4.10", a, False, f"order {n} < 3; statement needs n >= 3", [])
    result = exact_order(a, variant)
    met = result.k == 2
    note = f"classified as {result.describe()}; requires exact order 2"
    conclusions: list[Conclusion] = []
    if met:
        if variant is Variant.E0:
            diag_ok = all(a[i, i] >= 0 for i in range(n))
            diag_req = ">= 0"
        else:
            diag_ok = all(a[i, i] > 0 for i in range(n))
            diag_req = "> 0"
        conclusions.append(
            Conclusion(
                f"diagonal entries {diag_req}",
                diag_ok,
                f"diagonal = {[str(a[i, i]) for i in range(n)]}",
            )
        )
        profile = negative_entry_profile(a)
        conclusions.append(
            Conclusion(
                "every row has >= 2 negative entries",
                profile.min_row >= 2,
                f"row counts = {profile.row_counts}",
            )
        )
        conclusions.append(
            Conclusion(
                "every column has >= 2 negative entries",
                profile.min_column >= 2,
                f"column counts = {profile.column_counts}",
            )
        )
        conclusions.extend(_almost_block_conclusions(a, variant))
    return _report("prop4.10", a, met, note, conclusions)


def audit_thm_4_11(a: RatMatrix) -> AuditReport:
    """Z-matrices of E0 exact order 2: nonnegative minors up to order n-2,
    negative order-(n-1) minors, negative determinant, positive inverse
    diagonal, and positive Schur complements over every size-(n-1) block."""
    a._require_square()
    n = a.order
    if n < 3:
        return _report("thm4.11", a, False, f"order {n} < 3; statement needs n >= 3", [])
    z = is_Z(a)
    result = exact_order(a, Variant.E0)
    met = z and result.k == 2
    note = f"Z: {z}; classified as {result.describe()}; requires Z and E0 exact order 2"
    conclusions: list[Conclusion] = []
    if met:
        small_bad = []
        middle_bad = []
        for alpha in all_supports(n):
            size = len(alpha)
            if size > n - 1:
                continue
            minor = det(principal_submatrix(a, alpha))
            if size <= n - 2 and minor < 0:
                small_bad.append(f"det A_{alpha} = {minor}")
            if size == n - 1 and minor >= 0:
                middle_bad.append(f"det A_{alpha} = {minor}")
        conclusions.append(
            Conclusion(
                "principal minors of order <= n-2 nonnegative",
                not small_bad,
                "; ".join(small_bad) or "all nonnegative",
            )
        )
        conclusions.append(
            Conclusion(
                "principal minors of order n-1 negative",
                not middle_bad,
                "; ".join(middle_bad) or "all negative",
            )
        )
        d = det(a)
        conclusions.append(Conclusion("det A < 0", d < 0, f"det = {d}"))
        try:
            inv = inverse(a)
            diag_pos = all(inv[i, i] > 0 for i in range(n))
            conclusions.append(
                Conclusion(
                    "inverse exists with positive diagonal",
                    diag_pos,
                    f"inverse diagonal = {[str(inv[i, i]) for i in range(n)]}",
                )
            )
        except SingularMatrixError:
            conclusions.append(Conclusion("inverse exists with positive diagonal", False, "singular"))
        schur_bad = []
        for combo in itertools.combinations(range(1, n + 1), n - 1):
            alpha = IndexSet(n, combo)
            try:
                schur = schur_complement(a, alpha)
            except SingularBlockError:
                schur_bad.append(f"alpha={alpha}: block singular")
                continue
            if any(v <= 0 for row in schur.entries for v in row):
                schur_bad.append(f"alpha={alpha}: A/A_aa = {schur!r}")
        conclusions.append(
            Conclusion(
                "Schur complement positive for every size-(n-1) alpha",
                not schur_bad,
                "; ".join(schur_bad) or "all positive",
            )
        )
    return _report("thm4.11", a, met, note, conclusions)


def _random_permutation(n: int, rng: random.Random) -> list[int]:
    sigma = list(range(n))
    rng.shuffle(sigma)
    return sigma


def _random_positive_diagonal(n: int, rng: random.Random) -> RatMatrix:
    return RatMatrix.diagonal(
        [Fraction(rng.randint(1, 9), rng.randint(1, 4)) for _ in range(n)]
    )


def audit_invariance(a: RatMatrix, seed: int) -> AuditReport:
    """Exact order is invariant under transpose, permutation similarity, and
    one-sided positive diagonal scaling; asserted for both variants on a
    seeded random permutation and diagonal."""
    a._require_square()
    n = a.order
    rng = random.Random(seed)
    sigma = _random_permutation(n, rng)
    d = _random_positive_diagonal(n, rng)
    transforms = [
        ("transpose", a.transpose()),
        ("permutation similarity", permutation_similarity(a, sigma)),
        ("left positive diagonal scaling", d @ a),
        ("right positive diagonal scaling", a @ d),
    ]
    conclusions: list[Conclusion] = []
    for variant in (Variant.E0, Variant.E):
        base = exact_order(a, variant)
        for name, transformed in transforms:
            other = exact_order(transformed, variant)
            conclusions.append(
                Conclusion(
                    f"{variant.value} exact order invariant under {name}",
                    other == base,
                    f"base = {base.describe()}, transformed = {other.describe()}",
                )
            )
    note = f"universal statement; permutation = {sigma}, diagonal = {[str(d[i, i]) for i in range(n)]}"
    return _report("invariance", a, True, note, conclusions)


def audit_n_eq_k_plus_1(a: RatMatrix, variant: Variant = Variant.E0) -> AuditReport:
    """Matrices of exact order n-1 (n >= 3) must have admissible diagonal
    signs and strictly negative off-diagonal entries."""
    a._require_square()
    n = a.order
    result = exact_order(a, variant)
    met = n >= 3 and result.k == n - 1
    note = f"classified as {result.describe()}; requires exact order n-1 = {n - 1} and n >= 3"
    conclusions: list[Conclusion] = []
    if met:
        if variant is Variant.E0:
            diag_ok = all(a[i, i] >= 0 for i in range(n))
            diag_req = ">= 0"
        else:
            diag_ok = all(a[i, i] > 0 for i in range(n))
            diag_req = "> 0"
        off_ok = all(a[i, j] < 0 for i in range(n) for j in range(n) if i != j)
        conclusions.append(
            Conclusion(
                f"diagonal entries {diag_req}",
                diag_ok,
                f"diagonal = {[str(a[i, i]) for i in range(n)]}",
            )
        )
        conclusions.append(
            Conclusion("all off-diagonal entries negative (Z form)", off_ok, "entrywise scan")
        )
    return _report("n=k+1", a, met, note, conclusions)


def audit_symmetric_copositive_equiv(a: RatMatrix, variant: Variant = Variant.E0) -> AuditReport:
    """For symmetric matrices the copositive and semimonotone exact-order
    classifications must agree in full (same k, same per-order profile)."""
    a._require_square()
    if not a.is_symmetric():
        raise NotSymmetricError("this audit requires a symmetric matrix")
    semi = exact_order(a, variant)
    cop = copositive_exact_order(a, variant)
    conclusions = [
        Conclusion(
            f"copositive and {variant.value} exact-order results identical",
            semi == cop,
            f"semimonotone = {semi.describe()}, copositive = {cop.describe()}",
        )
    ]
    return _report("sym-copositive", a, True, "symmetric input verified", conclusions)


def audit_nonclosure(a: RatMatrix, b: RatMatrix) -> AuditReport:
    """Classify two matrices, their sum, and their product, and record
    whether sum and product leave the E0-exact-order-2 class.

    Non-closure is an existential claim, so a pair whose sum or product
    stays in the class merely fails to witness it; the observation is
    reported in the conclusions but never flagged as a counterexample.
    """
    a._require_square()
    b._require_square()
    if a.order != b.order:
        raise ValueError("matrices must have equal order")
    ra = exact_order(a, Variant.E0)
    rb = exact_order(b, Variant.E0)
    met = ra.k == 2 and rb.k == 2
    note = f"A: {ra.describe()}; B: {rb.describe()}; requires both E0 exact order 2"
    conclusions: list[Conclusion] = []
    if met:
        rsum = exact_order(a + b, Variant.E0)
        rprod = exact_order(a @ b, Variant.E0)
        conclusions.append(
            Conclusion("A + B leaves E0 exact order 2", rsum.k != 2, f"sum: {rsum.describe()}")
        )
        conclusions.append(
            Conclusion("A B leaves E0 exact order 2", rprod.k != 2, f"product: {rprod.describe()}")
        )
    return AuditReport("nonclosure", met, note, tuple(conclusions), None)


AUDIT_IDS = (
    "thm3.4",
    "thm3.5",
    "prop4.10",
    "thm4.11",
    "invariance",
    "n=k+1",
    "sym-copositive",
    "nonclosure",
)
