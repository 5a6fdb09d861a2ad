"""Exact single-clique inference over (A, B, E).

Everything here works on one clique: two parent priors entering as pi
messages ``a = p{a+}`` and ``b = p{b+}``, and evidence entering as a
normalized lambda message ``f`` on the child's positive state.  The joint
potential is the elementwise product of all factors; beliefs are its
normalized marginals.

``belief_A`` and ``belief_B`` evaluate closed two-term expressions.
``brute_force_oracle`` recomputes the same marginals by enumerating all
eight joint states with its own arithmetic, deliberately sharing no code
with the closed forms, so the two paths cross-check each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .cici import complete_exclusion_matrix
from .core import BeliefQuery, EvidenceState, LikelihoodMatrix, require_probability
from .errors import ImpossibleEvidenceError, OutOfRangeError

__all__ = [
    "JointPotential",
    "OracleMarginals",
    "BeliefSurface",
    "EdgeCurve",
    "joint_potential",
    "belief_A",
    "belief_B",
    "brute_force_oracle",
    "belief_surface",
    "edge_curve",
    "scaling_invariance_check",
    "surface_csv",
    "edge_csv",
]


def _require_pos(m: LikelihoodMatrix) -> None:
    if m.state is not EvidenceState.POS:
        raise OutOfRangeError(
            "expected the positive-state table; call .pos_table() on a negative one"
        )


@dataclass(frozen=True, slots=True)
class JointPotential:
    """The 2x2x2 product of all clique factors.

    ``psi[i_a][i_b][i_e]`` with index 0 for the positive state of each
    variable.  Entries are non-negative; a query is answerable only when
    the total mass is positive.
    """

    psi: tuple[tuple[tuple[float, float], tuple[float, float]], ...]

    @property
    def total(self) -> float:
        return sum(e for plane in self.psi for row in plane for e in row)

    def marginal(self, variable: str) -> float:
        """Normalized positive-state marginal for "A", "B", or "E"."""
        axis = {"A": 0, "B": 1, "E": 2}.get(variable.upper())
        if axis is None:
            raise OutOfRangeError(f'variable must be "A", "B", or "E", got {variable!r}')
        total = pos = 0.0
        for ia in (0, 1):
            for ib in (0, 1):
                for ie in (0, 1):
                    v = self.psi[ia][ib][ie]
                    total += v
                    if (ia, ib, ie)[axis] == 0:
                        pos += v
        if total == 0.0:
            raise ImpossibleEvidenceError("all joint states have zero potential")
        return pos / total


def joint_potential(q: BeliefQuery, m_pos: LikelihoodMatrix) -> JointPotential:
    """Multiply priors, evidence message, and likelihood into one grid."""
    _require_pos(m_pos)
    rows = m_pos.entries  # rows[i_b][i_a] = p{e+ | A, B}
    psi = tuple(
        tuple(
            tuple(
                pa * pb * (q.f if ie == 0 else 1.0 - q.f)
                * (rows[ib][ia] if ie == 0 else 1.0 - rows[ib][ia])
                for ie in (0, 1)
            )
            for ib, pb in ((0, q.b), (1, 1.0 - q.b))
        )
        for ia, pa in ((0, q.a), (1, 1.0 - q.a))
    )
    return JointPotential(psi)


def belief_B(q: BeliefQuery, m_pos: LikelihoodMatrix) -> float:
    """Posterior p{b+} given the three messages.

    Each likelihood entry x contributes ``f x + (1-f)(1-x)``; the belief is
    the B-positive share of the prior-weighted mixture::

        b [a g(r) + (1-a) g(s)]
        -----------------------------------------------
        b [a g(r) + (1-a) g(s)] + (1-b) [a g(t) + (1-a) g(u)]

    with ``g(x) = f x + (1-f)(1-x)``.  Vacuous evidence ``f = 1/2`` returns
    ``b`` exactly, including in floating point.
    """
    _require_pos(m_pos)
    a, b, f = q.a, q.b, q.f
    gr = f * m_pos.r + (1.0 - f) * (1.0 - m_pos.r)
    gs = f * m_pos.s + (1.0 - f) * (1.0 - m_pos.s)
    gt = f * m_pos.t + (1.0 - f) * (1.0 - m_pos.t)
    gu = f * m_pos.u + (1.0 - f) * (1.0 - m_pos.u)
    num = b * (a * gr + (1.0 - a) * gs)
    other = (1.0 - b) * (a * gt + (1.0 - a) * gu)
    total = num + other
    if total == 0.0:
        raise ImpossibleEvidenceError("evidence message contradicts deterministic priors")
    return num / total


def belief_A(q: BeliefQuery, m_pos: LikelihoodMatrix) -> float:
    """Posterior p{a+}; same construction as ``belief_B`` with roles swapped."""
    _require_pos(m_pos)
    a, b, f = q.a, q.b, q.f
    gr = f * m_pos.r + (1.0 - f) * (1.0 - m_pos.r)
    gs = f * m_pos.s + (1.0 - f) * (1.0 - m_pos.s)
    gt = f * m_pos.t + (1.0 - f) * (1.0 - m_pos.t)
    gu = f * m_pos.u + (1.0 - f) * (1.0 - m_pos.u)
    num = a * (b * gr + (1.0 - b) * gt)
    other = (1.0 - a) * (b * gs + (1.0 - b) * gu)
    total = num + other
    if total == 0.0:
        raise ImpossibleEvidenceError("evidence message contradicts deterministic priors")
    return num / total


class OracleMarginals(NamedTuple):
    a: float
    b: float
    e: float


def brute_force_oracle(q: BeliefQuery, m_pos: LikelihoodMatrix) -> OracleMarginals:
    """Marginals by direct enumeration of the eight joint states.

    Walks every (A, B, E) assignment, multiplies the four factors, and
    accumulates positive-state mass per variable.  Shares no arithmetic
    with ``belief_A``/``belief_B``/``joint_potential``; used as the
    independent verification path.
    """
    _require_pos(m_pos)
    rows = m_pos.entries
    total = acc_a = acc_b = acc_e = 0.0
    for ia, pa in ((0, q.a), (1, 1.0 - q.a)):
        for ib, pb in ((0, q.b), (1, 1.0 - q.b)):
            e_pos = rows[ib][ia]
            for ie, le in ((0, q.f), (1, 1.0 - q.f)):
                weight = pa * pb * le * (e_pos if ie == 0 else 1.0 - e_pos)
                total += weight
                if ia == 0:
                    acc_a += weight
                if ib == 0:
                    acc_b += weight
                if ie == 0:
                    acc_e += weight
    if total == 0.0:
        raise ImpossibleEvidenceError("all joint states have zero potential")
    return OracleMarginals(acc_a / total, acc_b / total, acc_e / total)


@dataclass(frozen=True, slots=True)
class BeliefSurface:
    """p{B} over the (a, f) unit square at a fixed prior b.

    ``values[i][j]`` is the belief at ``f = f_values[i]``, ``a = a_values[j]``;
    both axes run from 0 to 1 inclusive.
    """

    b: float
    a_values: tuple[float, ...]
    f_values: tuple[float, ...]
    values: tuple[tuple[float, ...], ...]


def _linspace01(n: int) -> tuple[float, ...]:
    return tuple(i / (n - 1) for i in range(n))


def belief_surface(m_pos: LikelihoodMatrix, b: float, n: int) -> BeliefSurface:
    """Evaluate ``belief_B`` on an n x n grid with endpoints included."""
    _require_pos(m_pos)
    b = require_probability(b, "b")
    if n < 2:
        raise OutOfRangeError(f"grid size must be at least 2, got {n}")
    a_values = _linspace01(n)
    f_values = _linspace01(n)
    values = tuple(
        tuple(belief_B(BeliefQuery(a, b, f), m_pos) for a in a_values) for f in f_values
    )
    return BeliefSurface(b, a_values, f_values, values)


@dataclass(frozen=True, slots=True)
class EdgeCurve:
    """The f = 1 edge of the surface, with the complete-exclusion reference.

    ``partial`` is the belief under the given table; ``complete`` is the
    belief under the deterministic exclusive-or table at the same prior,
    the curve the partial one is compared against.  Reference points whose
    potential vanishes (only possible at deterministic priors) are NaN.
    """

    b: float
    a_values: tuple[float, ...]
    partial: tuple[float, ...]
    complete: tuple[float, ...]


def edge_curve(m_pos: LikelihoodMatrix, b: float, n: int) -> EdgeCurve:
    """Evaluate the f = 1 exclusion curve on n points of the a axis."""
    _require_pos(m_pos)
    b = require_probability(b, "b")
    if n < 2:
        raise OutOfRangeError(f"grid size must be at least 2, got {n}")
    xor = complete_exclusion_matrix()
    a_values = _linspace01(n)
    partial = tuple(belief_B(BeliefQuery(a, b, 1.0), m_pos) for a in a_values)
    complete = []
    for a in a_values:
        try:
            complete.append(belief_B(BeliefQuery(a, b, 1.0), xor))
        except ImpossibleEvidenceError:
            complete.append(math.nan)
    return EdgeCurve(b, a_values, partial, tuple(complete))


def _conditioned_beliefs(grid, a: float, b: float) -> tuple[float, float]:
    # Beliefs when the grid's own evidence state is observed outright.
    (r, s), (t, u) = grid
    b_num = b * (a * r + (1.0 - a) * s)
    b_other = (1.0 - b) * (a * t + (1.0 - a) * u)
    a_num = a * (b * r + (1.0 - b) * t)
    a_other = (1.0 - a) * (b * s + (1.0 - b) * u)
    total = b_num + b_other
    if total == 0.0:
        raise ImpossibleEvidenceError("observed state has zero mass under these priors")
    return a_num / (a_num + a_other), b_num / total


def scaling_invariance_check(
    m: LikelihoodMatrix, c: float, q: BeliefQuery, tol: float = 1e-12
) -> bool:
    """Confirm beliefs conditioned on m's state ignore an overall scale.

    The table for the observed state is multiplied by ``c`` without
    recomplementing; the scaled grid may leave [0, 1].  Beliefs for both
    parents are compared at the query's priors (the query's ``f`` plays no
    role because conditioning is on the table's own state).  The
    determinant, by contrast, scales by c squared.
    """
    if not (c > 0.0 and math.isfinite(c)):
        raise OutOfRangeError(f"scale must be finite and positive, got {c!r}")
    base = m.entries
    scaled = tuple(tuple(x * c for x in row) for row in base)
    pa0, pb0 = _conditioned_beliefs(base, q.a, q.b)
    pa1, pb1 = _conditioned_beliefs(scaled, q.a, q.b)
    return abs(pa0 - pa1) <= tol and abs(pb0 - pb1) <= tol


def _fmt(x: float) -> str:
    return format(x, ".12g")


def surface_csv(surface: BeliefSurface) -> str:
    r"""Render the surface in the stable delimited format.

    First cell ``f\a``, first row the a axis, first column the f axis,
    body cells at 12 significant digits.  Byte-identical across runs for
    identical inputs.
    """
    lines = ["f\\a," + ",".join(_fmt(a) for a in surface.a_values)]
    for f, row in zip(surface.f_values, surface.values):
        lines.append(_fmt(f) + "," + ",".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def edge_csv(curve: EdgeCurve) -> str:
    """Render the f = 1 curve: columns a, belief, complete-exclusion reference."""
    lines = ["a,belief_b,complete_exclusion"]
    for a, p, c in zip(curve.a_values, curve.partial, curve.complete):
        lines.append(f"{_fmt(a)},{_fmt(p)},{_fmt(c)}")
    return "\n".join(lines) + "\n"
