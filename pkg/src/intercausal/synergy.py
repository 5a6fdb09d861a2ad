"""Synergy measures and the sign-preserving table transformations.

Two scalar summaries of a conditioned 2x2 table ``[[r, s], [t, u]]``:

* multiplicative synergy, the determinant ``ru - st``;
* additive synergy, ``Y = r + u - s - t``.

A negative sign means the parents exclude each other once the evidence is
seen (confirming one explains the other away); positive means they
collaborate.  The additive measure of a positive table always equals the
difference of the two determinants, ``Y(e+) = det(e+) - det(e-)``, and
flips sign exactly under complementation.

The determinant's sign is invariant under everything Bayes' rule can do to
a table: scaling rows or columns by positive weights, and reversing the
direction of conditioning.  ``scale_axis`` and ``bayes_reverse`` implement
those transformations; returned grids are plain tuples since scaled
entries may leave [0, 1].
"""

from __future__ import annotations

from typing import Sequence, Union

from .core import LikelihoodMatrix, SynergyClass, SynergyReport, EvidenceState
from .errors import NonPositiveWeightError, OutOfRangeError, ZeroPreposteriorError

__all__ = [
    "CLASS_TIE_TOL",
    "Grid",
    "multiplicative_synergy",
    "additive_synergy",
    "synergy_report",
    "scale_axis",
    "bayes_reverse",
]

Grid = tuple[tuple[float, float], tuple[float, float]]

# |y_pos| at or below this counts as preserving independence.
CLASS_TIE_TOL = 1e-9


def _entries(m: Union[LikelihoodMatrix, Sequence[Sequence[float]]]) -> tuple[float, float, float, float]:
    if isinstance(m, LikelihoodMatrix):
        return m.r, m.s, m.t, m.u
    (r, s), (t, u) = m
    return float(r), float(s), float(t), float(u)


def multiplicative_synergy(m: Union[LikelihoodMatrix, Sequence[Sequence[float]]]) -> float:
    """Determinant ``ru - st`` of a table or raw 2x2 grid."""
    r, s, t, u = _entries(m)
    return r * u - s * t


def additive_synergy(m: Union[LikelihoodMatrix, Sequence[Sequence[float]]]) -> float:
    """Diagonal-minus-antidiagonal sum ``r + u - s - t``."""
    r, s, t, u = _entries(m)
    return r + u - s - t


def synergy_report(m_pos: LikelihoodMatrix, tol: float = CLASS_TIE_TOL) -> SynergyReport:
    """Summarize both synergy measures for a positive-state table.

    ``y_neg`` is stored as the exact negation of ``y_pos``; recomputing the
    additive measure on the complement table gives the same number up to
    last-digit rounding.  Classification follows the sign of ``y_pos``
    outside the tie band ``tol``.
    """
    if m_pos.state is not EvidenceState.POS:
        raise OutOfRangeError("synergy_report expects the positive-state table")
    neg = m_pos.complement()
    y_pos = additive_synergy(m_pos)
    if y_pos < -tol:
        cls = SynergyClass.EXCLUSIONARY
    elif y_pos > tol:
        cls = SynergyClass.COLLABORATIVE
    else:
        cls = SynergyClass.INDEPENDENCE_PRESERVING
    return SynergyReport(
        det_pos=multiplicative_synergy(m_pos),
        det_neg=multiplicative_synergy(neg),
        y_pos=y_pos,
        y_neg=-y_pos,
        classification=cls,
    )


def scale_axis(m: LikelihoodMatrix, v: Sequence[float], axis: str) -> Grid:
    """Scale both rows (or both columns) by a positive weight pair.

    ``axis`` is ``"rows"`` or ``"cols"``.  The result is a raw grid, not a
    ``LikelihoodMatrix``, because scaled entries routinely exceed 1; it is
    an intermediate quantity whose determinant sign matches the input's.
    """
    if len(v) != 2:
        raise NonPositiveWeightError(f"need exactly two weights, got {len(v)}")
    w0, w1 = float(v[0]), float(v[1])
    if not (w0 > 0.0 and w1 > 0.0):
        raise NonPositiveWeightError(f"weights must be strictly positive, got {(w0, w1)}")
    ax = axis.lower()
    if ax == "rows":
        return ((m.r * w0, m.s * w0), (m.t * w1, m.u * w1))
    if ax in ("cols", "columns"):
        return ((m.r * w0, m.s * w1), (m.t * w0, m.u * w1))
    raise OutOfRangeError(f'axis must be "rows" or "cols", got {axis!r}')


def bayes_reverse(m: LikelihoodMatrix, prior: Sequence[float], axis: str) -> Grid:
    """Reverse the direction of conditioning for one parent.

    With ``axis="A"`` the input cell (B, A) holds p{e|A, B} and the output
    cell holds p{A | B, e}: each entry is weighted by the prior over A and
    renormalized within its row (fixed B).  With ``axis="B"`` the prior is
    over B and normalization runs within each column (fixed A).  The output
    keeps the input's (row = B, column = A) orientation, and its
    determinant has the same sign as the input's.

    ``prior`` is the pair (positive state, negative state) for the reversed
    variable and must be strictly positive.  A vanishing normalizer means
    the conditioning state is impossible under the prior and raises
    ``ZeroPreposteriorError``.
    """
    if len(prior) != 2:
        raise OutOfRangeError(f"prior must be a pair, got {len(prior)} values")
    p0, p1 = float(prior[0]), float(prior[1])
    if not (p0 > 0.0 and p1 > 0.0):
        raise OutOfRangeError(f"prior must be strictly positive, got {(p0, p1)}")
    ax = axis.upper()
    if ax == "A":
        w = ((m.r * p0, m.s * p1), (m.t * p0, m.u * p1))
        norms = (w[0][0] + w[0][1], w[1][0] + w[1][1])
        if norms[0] == 0.0 or norms[1] == 0.0:
            raise ZeroPreposteriorError("a row normalizer vanished; evidence impossible for that B state")
        return (
            (w[0][0] / norms[0], w[0][1] / norms[0]),
            (w[1][0] / norms[1], w[1][1] / norms[1]),
        )
    if ax == "B":
        w = ((m.r * p0, m.s * p0), (m.t * p1, m.u * p1))
        norms = (w[0][0] + w[1][0], w[0][1] + w[1][1])
        if norms[0] == 0.0 or norms[1] == 0.0:
            raise ZeroPreposteriorError("a column normalizer vanished; evidence impossible for that A state")
        return (
            (w[0][0] / norms[0], w[0][1] / norms[1]),
            (w[1][0] / norms[0], w[1][1] / norms[1]),
        )
    raise OutOfRangeError(f'axis must be "A" or "B", got {axis!r}')
