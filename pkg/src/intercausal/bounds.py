"""Closed forms and bounds for the symmetric two-parameter model.

The negative table ``[[k^2 w, kw], [kw, w]]`` is the noisy-or complement
with equal link terms (q0 = w, q1 = q2 = k).  Its belief surface has three
landmark values with exact closed forms, named by their (a, f) coordinates
since that is unambiguous:

* independent edge: f = 0, any a.  The surface is flat across a there and
  the value depends only on k and the prior b.
* confirmed corner: a = 1, f = 1.  Evidence seen and the competing cause
  confirmed; exclusion pulls the belief down toward the prior but never
  through it.
* positive exclusion: a = 0, f = 1.  Evidence seen, competing cause ruled
  out; the belief is near w for small k and b near 1/2.

The corner approximations carry second-order error: halving k (for the
confirmed corner) or 1 - w (for the positive-exclusion lower bound's gap)
shrinks the error roughly fourfold.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence, Union

from .cici import noisy_or_matrix, symmetric_to_noisy_or
from .core import (
    BeliefQuery,
    EvidenceState,
    FactoredSymmetric,
    LikelihoodMatrix,
    NoisyOrParams,
    require_probability,
)
from .errors import DomainError, InfeasibleError, OutOfRangeError
from .inference import belief_B

__all__ = [
    "CornerValue",
    "ExclusionValue",
    "Expansion",
    "factored_symmetric_matrix",
    "prior_straddle_check",
    "independent_edge",
    "confirmed_corner",
    "positive_exclusion",
    "reciprocal_expansion",
    "estimate_parameters",
]


def factored_symmetric_matrix(p: FactoredSymmetric) -> LikelihoodMatrix:
    """Negative-state table ``[[k^2 w, kw], [kw, w]]``; always rank one."""
    return LikelihoodMatrix(
        EvidenceState.NEG, p.k * p.k * p.w, p.k * p.w, p.k * p.w, p.w
    )


def prior_straddle_check(
    p: Union[FactoredSymmetric, NoisyOrParams],
    b: float,
    a_grid: Sequence[float],
    slack: float = 1e-12,
) -> bool:
    """Check that evidence sign decides which side of the prior belief lands on.

    For every a in the grid, the positive-evidence belief must exceed the
    prior b and the negative-evidence belief must fall below it, each
    strictly up to ``slack``.  This is the partial-exclusion guarantee:
    explaining away cannot push the belief through its prior.

    Requires an informative model (link terms strictly below 1) and an
    interior prior.
    """
    if isinstance(p, FactoredSymmetric):
        params = symmetric_to_noisy_or(p)
    else:
        params = p
    if params.q1 >= 1.0 or params.q2 >= 1.0:
        raise OutOfRangeError("link terms must be strictly below 1 for a strict straddle")
    b = require_probability(b, "b")
    if b == 0.0 or b == 1.0:
        raise OutOfRangeError("prior b must be interior to (0, 1)")
    m_pos = noisy_or_matrix(params)
    for a in a_grid:
        above = belief_B(BeliefQuery(a, b, 1.0), m_pos)
        below = belief_B(BeliefQuery(a, b, 0.0), m_pos)
        if not (above > b - slack and below < b + slack):
            return False
    return True


def independent_edge(p: FactoredSymmetric, b: float) -> float:
    """Belief at f = 0: ``bk / (1 + b(k-1))``.

    Independent of both a (the negative table is rank one) and w (the
    scale cancels).  At b = 1/2 it reduces to ``k/(1+k)``.  The belief
    stays below k itself whenever b <= 1/2; for b above ``1/(2-k)`` it
    crosses k, so no unrestricted comparison with k is claimed.
    """
    b = require_probability(b, "b")
    return b * p.k / (1.0 + b * (p.k - 1.0))


class CornerValue(NamedTuple):
    exact: float
    first_order: float


def confirmed_corner(p: FactoredSymmetric, b: float) -> CornerValue:
    """Belief at (a = 1, f = 1), exact and to first order in k.

    exact       = b(1 - k^2 w) / (b(1 - k^2 w) + (1-b)(1 - kw))
    first_order = b [1 + kw(1-b)]

    The exact value always exceeds the prior and approaches it linearly in
    k; the first-order form matches it up to a deficit of order k^2, so it
    can sit slightly above the exact value.
    """
    b = require_probability(b, "b")
    k, w = p.k, p.w
    num = b * (1.0 - k * k * w)
    exact = num / (num + (1.0 - b) * (1.0 - k * w))
    return CornerValue(exact, b * (1.0 + k * w * (1.0 - b)))


class ExclusionValue(NamedTuple):
    exact: float
    lower_bound: float


def positive_exclusion(p: FactoredSymmetric, b: float) -> ExclusionValue:
    """Belief at (a = 0, f = 1) and its closed-form lower bound.

    exact       = b(1 - kw) / (b(1 - kw) + (1-b)(1 - w))
    lower_bound = 1 - (1-b)(1-w) / (b(1 - kw))

    The bound is strict for b < 1 (they meet at b = 1) and may go negative
    for small b, where it is valid but uninformative.  For small k and b
    near 1/2 the exact value approaches w.  Requires b > 0.
    """
    b = require_probability(b, "b")
    if b == 0.0:
        raise OutOfRangeError("lower bound needs b > 0")
    k, w = p.k, p.w
    num = b * (1.0 - k * w)
    exact = num / (num + (1.0 - b) * (1.0 - w))
    return ExclusionValue(exact, 1.0 - (1.0 - b) * (1.0 - w) / num)


class Expansion(NamedTuple):
    approx: float
    residual_bound: float


def reciprocal_expansion(z: float) -> Expansion:
    """First-order expansion of 1/(1-z) with its exact residual.

    Returns ``(1 + z, z^2/(1-z))``; the two sum to 1/(1-z) identically.
    For z in [0, 1) the residual is non-negative, giving the direction
    ``1/(1-z) >= 1 + z`` that the corner bounds lean on.
    """
    if not math.isfinite(z) or abs(z) >= 1.0:
        raise DomainError(f"z must satisfy |z| < 1, got {z!r}")
    return Expansion(1.0 + z, z * z / (1.0 - z))


def estimate_parameters(
    independent_edge_target: float,
    positive_exclusion_target: float,
    b: float,
) -> FactoredSymmetric:
    """Recover (k, w) from two observed conditional probabilities.

    Inverts the exact closed forms, not the approximations: first
    ``k = t(1-b) / (b(1-t))`` from the f = 0 edge value t, then w from the
    (a = 0, f = 1) value with that k.  Targets that imply parameters
    outside (0, 1) raise ``InfeasibleError`` naming the offending one; in
    particular the edge target must lie below the prior and the exclusion
    target above it.
    """
    t = require_probability(independent_edge_target, "independent_edge_target")
    pe = require_probability(positive_exclusion_target, "positive_exclusion_target")
    b = require_probability(b, "b")
    if not (0.0 < t < 1.0 and 0.0 < pe < 1.0):
        raise InfeasibleError("targets must be interior probabilities")
    if not (0.0 < b < 1.0):
        raise OutOfRangeError("prior b must be interior to (0, 1)")
    k = t * (1.0 - b) / (b * (1.0 - t))
    if not (0.0 < k < 1.0):
        raise InfeasibleError(
            f"edge target {t!r} at prior {b!r} implies k = {k!r} outside (0, 1)"
        )
    denom = pe * (1.0 - b) - (1.0 - pe) * b * k
    if denom <= 0.0:
        raise InfeasibleError(
            f"exclusion target {pe!r} is incompatible with the implied k = {k!r}"
        )
    w = (pe - b) / denom
    if not (0.0 < w < 1.0):
        raise InfeasibleError(
            f"exclusion target {pe!r} at prior {b!r} implies w = {w!r} outside (0, 1)"
        )
    return FactoredSymmetric(k=k, w=w)
