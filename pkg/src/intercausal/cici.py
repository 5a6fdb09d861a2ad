"""Rank-one likelihood structure: tests, factorizations, conversions.

A two-parent evidence node leaves its parents conditionally independent
under one observed evidence state exactly when that state's likelihood
table has rank one.  For the 2x2 case this is a single determinant test;
for wider tables every 2x2 minor must vanish.

A rank-one negative-state table factors as an outer product of per-parent
likelihood vectors ``(a, 1-a)`` and ``(b, 1-b)`` times a scale ``c``.  When
both ``a`` and ``b`` sit below one half, the same table is the complement
of a noisy-or model; otherwise it differs from one by swapping the states
of one or both parents, which this module classifies and can undo.
"""

from __future__ import annotations

import enum
import itertools
from typing import Union

from .core import (
    EvidenceState,
    FactoredSymmetric,
    GeneralLikelihoodMatrix,
    LikelihoodMatrix,
    NoisyOrParams,
    SingularFactorization,
    require_positive,
    require_probability,
)
from .errors import (
    DegenerateEntriesError,
    IntercausalError,
    NotCICIError,
    OutOfNoisyOrRangeError,
    OutOfRangeError,
)

__all__ = [
    "DEFAULT_TOL",
    "SwapClass",
    "outer_product_matrix",
    "noisy_or_matrix",
    "is_cici",
    "factorize",
    "classify_swap",
    "canonicalize",
    "singular_to_noisy_or",
    "noisy_or_to_singular",
    "symmetric_to_noisy_or",
    "noisy_or_to_symmetric",
    "is_degenerate_double_cici",
    "complete_exclusion_matrix",
    "complete_collaboration_matrix",
]

DEFAULT_TOL = 1e-9

# Half-width of the band around 1/2 inside which a factorization parameter
# counts as exactly one half (reliability exactly 1, still noisy-or form).
CLASS_TIE_BAND = 1e-9


class SwapClass(enum.Enum):
    """Which parent-state swap relates a rank-one table to noisy-or form.

    Values follow the four cells of the (a, b) unit square split at 1/2:

    1. ``NOISY_OR``   a <= 1/2 and b <= 1/2, already canonical;
    2. ``ROW_SWAP``   b > 1/2 only, the B states (rows) are reversed;
    3. ``COLUMN_SWAP`` a > 1/2 only, the A states (columns) are reversed;
    4. ``BOTH_SWAP``  both parameters above 1/2.
    """

    NOISY_OR = 1
    ROW_SWAP = 2
    COLUMN_SWAP = 3
    BOTH_SWAP = 4


Matrix = Union[LikelihoodMatrix, GeneralLikelihoodMatrix]


def outer_product_matrix(a: float, b: float, c: float) -> LikelihoodMatrix:
    """Build the rank-one negative-state table from vector parameters.

    Entries are ``[[abc, (1-a)bc], [a(1-b)c, (1-a)(1-b)c]]``, so the
    column ratio within each row is ``a : (1-a)`` and the row ratio within
    each column is ``b : (1-b)``.  Raises ``OutOfRangeError`` when any
    entry would leave [0, 1].
    """
    a = require_probability(a, "a")
    b = require_probability(b, "b")
    c = require_positive(c, "c")
    top = max(a, 1.0 - a) * max(b, 1.0 - b) * c
    if top > 1.0 + 1e-15:
        raise OutOfRangeError(f"entry {top!r} exceeds 1; reduce the scale c")
    return LikelihoodMatrix(
        EvidenceState.NEG,
        a * b * c,
        (1.0 - a) * b * c,
        a * (1.0 - b) * c,
        (1.0 - a) * (1.0 - b) * c,
    )


def noisy_or_matrix(p: NoisyOrParams) -> LikelihoodMatrix:
    """Positive-state table of the leaky noisy-or model.

    The evidence stays negative only if the leak and every active cause
    fail independently, so ``p{e-|AB}`` multiplies ``q0`` by ``q1`` when A
    is present and by ``q2`` when B is present.  The returned positive
    table is the complement::

        [[1 - q0 q1 q2,  1 - q0 q2],
         [1 - q0 q1,     1 - q0   ]]
    """
    return LikelihoodMatrix(
        EvidenceState.POS,
        1.0 - p.q0 * p.q1 * p.q2,
        1.0 - p.q0 * p.q2,
        1.0 - p.q0 * p.q1,
        1.0 - p.q0,
    )


def _minor_tolerance(tol: float, max_entry: float) -> float:
    return tol * max(1.0, max_entry * max_entry)


def is_cici(m: Matrix, tol: float = DEFAULT_TOL) -> bool:
    """True when the table admits conditional inter-causal independence.

    Checks that every 2x2 minor vanishes within ``tol`` scaled by
    ``max(1, max_entry^2)``; for probability tables the scale factor is a
    no-op and ``tol`` applies directly.  A table with a single row or
    column has no minors and passes vacuously.
    """
    if tol < 0:
        raise OutOfRangeError(f"tol must be nonnegative, got {tol!r}")
    if isinstance(m, LikelihoodMatrix):
        return abs(m.r * m.u - m.s * m.t) <= _minor_tolerance(tol, m.max_entry)
    grid = m.grid
    n, w = m.shape
    bound = _minor_tolerance(tol, m.max_entry)
    for i1, i2 in itertools.combinations(range(n), 2):
        for j1, j2 in itertools.combinations(range(w), 2):
            minor = grid[i1][j1] * grid[i2][j2] - grid[i1][j2] * grid[i2][j1]
            if abs(minor) > bound:
                return False
    return True


def factorize(m: LikelihoodMatrix, tol: float = DEFAULT_TOL) -> SingularFactorization:
    """Recover outer-product parameters from a rank-one table.

    Uses the closed forms ``a = r/(r+s)``, ``b = r/(r+t)`` and
    ``c = (r+s)(r+t)/r``, which reproduce the entries exactly when the
    determinant is zero.  Raises ``NotCICIError`` when the table fails the
    rank test and ``DegenerateEntriesError`` when any entry is zero, since
    a zero entry makes the decomposition non-identifiable.
    """
    if not is_cici(m, tol):
        raise NotCICIError(
            f"determinant {m.r * m.u - m.s * m.t!r} is not zero within tolerance {tol!r}"
        )
    if m.min_entry == 0.0:
        raise DegenerateEntriesError("cannot factorize a table with zero entries")
    a = m.r / (m.r + m.s)
    b = m.r / (m.r + m.t)
    c = (m.r + m.s) * (m.r + m.t) / m.r
    return SingularFactorization(a, b, c)


def classify_swap(f: SingularFactorization) -> SwapClass:
    """Place a factorization in one of the four swap classes.

    Parameters within ``1e-9`` of one half count as exactly one half and
    stay on the noisy-or side (the corresponding reliability is exactly 1,
    which the noisy-or form allows).
    """
    a_high = f.a > 0.5 + CLASS_TIE_BAND
    b_high = f.b > 0.5 + CLASS_TIE_BAND
    if a_high and b_high:
        return SwapClass.BOTH_SWAP
    if a_high:
        return SwapClass.COLUMN_SWAP
    if b_high:
        return SwapClass.ROW_SWAP
    return SwapClass.NOISY_OR


def canonicalize(
    m: LikelihoodMatrix, tol: float = DEFAULT_TOL
) -> tuple[LikelihoodMatrix, SwapClass]:
    """Swap parent states so a rank-one table lands in noisy-or form.

    Returns the canonical matrix together with the class of the input.
    In canonical position the negative table's smallest entry (equivalently
    the largest entry of its positive complement) sits in the upper-left
    corner.  Idempotent: a canonical matrix comes back unchanged with
    class 1.
    """
    f = factorize(m, tol)
    cls = classify_swap(f)
    out = m
    if cls in (SwapClass.ROW_SWAP, SwapClass.BOTH_SWAP):
        out = out.swap_rows()
    if cls in (SwapClass.COLUMN_SWAP, SwapClass.BOTH_SWAP):
        out = out.swap_columns()
    return out, cls


def singular_to_noisy_or(f: SingularFactorization) -> NoisyOrParams:
    """Convert outer-product parameters to the equivalent noisy-or model.

    The negative table of the result equals the outer-product table entry
    for entry: ``q1 = a/(1-a)``, ``q2 = b/(1-b)``, and the leak absorbs the
    corner entry, ``q0 = (1-a)(1-b)c``.  Requires ``0 < a < 1/2`` and
    ``0 < b < 1/2``; parameters at or above one half raise
    ``OutOfNoisyOrRangeError`` carrying the swap class that would fix them.
    Values exactly at 1/2 (within the tie band) are allowed and give a
    reliability of exactly 1.
    """
    if f.a == 0.0 or f.b == 0.0:
        raise OutOfRangeError("a and b must be positive to form noisy-or reliabilities")
    cls = classify_swap(f)
    if cls is not SwapClass.NOISY_OR:
        raise OutOfNoisyOrRangeError(
            f"parameters (a={f.a!r}, b={f.b!r}) are out of noisy-or range; "
            f"swap class {cls.name} (class {cls.value})",
            swap_class=cls,
        )
    a = min(f.a, 0.5)
    b = min(f.b, 0.5)
    return NoisyOrParams(
        q0=_clip_reliability((1.0 - f.a) * (1.0 - f.b) * f.c),
        q1=a / (1.0 - a),
        q2=b / (1.0 - b),
    )


def _clip_reliability(q: float) -> float:
    # Absorb last-ulp overshoot past 1 coming from the scale's own 1e-15
    # construction slack; anything larger is a real range violation.
    if 1.0 < q <= 1.0 + 1e-12:
        return 1.0
    return q


def noisy_or_to_singular(p: NoisyOrParams) -> SingularFactorization:
    """Inverse of ``singular_to_noisy_or``; exact round trip.

    Matches what ``factorize`` returns on the complement of
    ``noisy_or_matrix(p)``.
    """
    return SingularFactorization(
        a=p.q1 / (1.0 + p.q1),
        b=p.q2 / (1.0 + p.q2),
        c=p.q0 * (1.0 + p.q1) * (1.0 + p.q2),
    )


def symmetric_to_noisy_or(p: FactoredSymmetric) -> NoisyOrParams:
    """The symmetric two-parameter table is noisy-or with equal link terms."""
    return NoisyOrParams(q0=p.w, q1=p.k, q2=p.k)


def noisy_or_to_symmetric(p: NoisyOrParams, tol: float = DEFAULT_TOL) -> FactoredSymmetric:
    """Collapse noisy-or parameters to the symmetric model when q1 = q2.

    Raises ``OutOfRangeError`` when the link terms differ by more than
    ``tol`` or lie on the boundary the symmetric model excludes.
    """
    if abs(p.q1 - p.q2) > tol:
        raise OutOfRangeError(
            f"symmetric model needs q1 = q2, got q1={p.q1!r}, q2={p.q2!r}"
        )
    return FactoredSymmetric(k=p.q1, w=p.q0)


def is_degenerate_double_cici(m: LikelihoodMatrix, tol: float = DEFAULT_TOL) -> bool:
    """True when both evidence states leave the parents independent.

    This only happens when the table carries no information about one
    parent at all: both the table and its complement are rank one, which
    forces equal rows or equal columns.  That structural fact is verified
    as an internal consistency check whenever the determinant test says
    yes.
    """
    comp = m.complement()
    both = abs(m.r * m.u - m.s * m.t) <= _minor_tolerance(tol, m.max_entry) and abs(
        comp.r * comp.u - comp.s * comp.t
    ) <= _minor_tolerance(tol, comp.max_entry)
    if both:
        row_gap = max(abs(m.r - m.t), abs(m.s - m.u))
        col_gap = max(abs(m.r - m.s), abs(m.t - m.u))
        slack = 2.0 * tol**0.5 + 4.0 * tol
        if min(row_gap, col_gap) > slack:
            raise IntercausalError(
                "internal check failed: doubly rank-one table has neither "
                f"equal rows nor equal columns (gaps {row_gap!r}, {col_gap!r})"
            )
    return both


def complete_exclusion_matrix(state: EvidenceState = EvidenceState.POS) -> LikelihoodMatrix:
    """Deterministic exclusive-or table ``[[0, 1], [1, 0]]``.

    The evidence fires exactly when one parent is present.  Neither this
    table nor its complement is rank one.
    """
    return LikelihoodMatrix(state, 0.0, 1.0, 1.0, 0.0)


def complete_collaboration_matrix(state: EvidenceState = EvidenceState.POS) -> LikelihoodMatrix:
    """Deterministic conjunction table ``[[1, 0], [0, 1]]`` (both-or-nothing)."""
    return LikelihoodMatrix(state, 1.0, 0.0, 0.0, 1.0)
