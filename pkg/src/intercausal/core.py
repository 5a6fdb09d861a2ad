"""Value types for binary two-parent evidence models.

The model throughout the package is a single binary evidence node E with two
binary parents A and B.  Conditional probability tables for one evidence
state are stored as 2x2 likelihood matrices with a fixed orientation:

* rows index B, with the positive state ``b+`` first;
* columns index A, with the positive state ``a+`` first.

The four entries are named ``r``, ``s``, ``t``, ``u``::

    [[r, s],      r = p{e|a+ b+}    s = p{e|a- b+}
     [t, u]]      t = p{e|a+ b-}    u = p{e|a- b-}

where ``e`` is the table's evidence state (positive or negative).  The
complement table ``1 - entries`` describes the opposite evidence state, and
complementing twice returns the original table.

All probabilities are validated at construction time.  Types are frozen
dataclasses; every operation returns a new value.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import OutOfRangeError, ParseError

__all__ = [
    "EvidenceState",
    "SynergyClass",
    "LikelihoodMatrix",
    "GeneralLikelihoodMatrix",
    "NoisyOrParams",
    "SingularFactorization",
    "FactoredSymmetric",
    "BeliefQuery",
    "SynergyReport",
    "require_probability",
    "require_positive",
]


def require_probability(value: float, name: str) -> float:
    """Validate that ``value`` is a finite probability in [0, 1].

    Returns the value as a float so callers can write
    ``self.r = require_probability(r, "r")`` style assignments.
    """
    try:
        v = float(value)
    except (TypeError, ValueError):
        raise OutOfRangeError(f"{name} must be a real number, got {value!r}")
    if not math.isfinite(v):
        raise OutOfRangeError(f"{name} must be finite, got {v!r}")
    if v < 0.0 or v > 1.0:
        raise OutOfRangeError(f"{name} must lie in [0, 1], got {v!r}")
    return v


def require_positive(value: float, name: str) -> float:
    """Validate that ``value`` is a finite, strictly positive real."""
    try:
        v = float(value)
    except (TypeError, ValueError):
        raise OutOfRangeError(f"{name} must be a real number, got {value!r}")
    if not math.isfinite(v) or v <= 0.0:
        raise OutOfRangeError(f"{name} must be finite and positive, got {v!r}")
    return v


class EvidenceState(enum.Enum):
    """Which state of the evidence node a likelihood table describes."""

    POS = "pos"
    NEG = "neg"

    @property
    def flipped(self) -> "EvidenceState":
        return EvidenceState.NEG if self is EvidenceState.POS else EvidenceState.POS

    @classmethod
    def parse(cls, text: str) -> "EvidenceState":
        try:
            return cls(text)
        except ValueError:
            raise ParseError(f'evidence state must be "pos" or "neg", got {text!r}')


class SynergyClass(enum.Enum):
    """Direction of interaction induced between the parents at e+.

    ``INDEPENDENCE_PRESERVING`` covers additive synergy within the tie
    band around zero, where observing the evidence leaves the parents'
    joint behavior unchanged to first order.
    """

    EXCLUSIONARY = "exclusionary"
    COLLABORATIVE = "collaborative"
    INDEPENDENCE_PRESERVING = "independence_preserving"


@dataclass(frozen=True, slots=True)
class LikelihoodMatrix:
    """A 2x2 conditional probability table for one evidence state.

    Entries follow the module-level orientation (rows = B, columns = A).
    """

    state: EvidenceState
    r: float
    s: float
    t: float
    u: float

    def __post_init__(self):
        if not isinstance(self.state, EvidenceState):
            raise OutOfRangeError(f"state must be an EvidenceState, got {self.state!r}")
        for name in ("r", "s", "t", "u"):
            object.__setattr__(self, name, require_probability(getattr(self, name), name))

    @property
    def entries(self) -> tuple[tuple[float, float], tuple[float, float]]:
        return ((self.r, self.s), (self.t, self.u))

    @property
    def max_entry(self) -> float:
        return max(self.r, self.s, self.t, self.u)

    @property
    def min_entry(self) -> float:
        return min(self.r, self.s, self.t, self.u)

    def complement(self) -> "LikelihoodMatrix":
        """Table for the opposite evidence state: entries 1 - x, state flipped.

        An involution: ``m.complement().complement() == m`` up to floating
        point, and exactly for entries representable as ``1 - x``.
        """
        return LikelihoodMatrix(
            self.state.flipped, 1.0 - self.r, 1.0 - self.s, 1.0 - self.t, 1.0 - self.u
        )

    def pos_table(self) -> "LikelihoodMatrix":
        """This matrix if it describes e+, otherwise its complement."""
        return self if self.state is EvidenceState.POS else self.complement()

    def neg_table(self) -> "LikelihoodMatrix":
        """This matrix if it describes e-, otherwise its complement."""
        return self if self.state is EvidenceState.NEG else self.complement()

    def swap_rows(self) -> "LikelihoodMatrix":
        return LikelihoodMatrix(self.state, self.t, self.u, self.r, self.s)

    def swap_columns(self) -> "LikelihoodMatrix":
        return LikelihoodMatrix(self.state, self.s, self.r, self.u, self.t)

    def to_json(self) -> dict:
        """Serializable form: ``{"state": "pos"|"neg", "rows": [[r, s], [t, u]]}``."""
        return {"state": self.state.value, "rows": [[self.r, self.s], [self.t, self.u]]}

    @classmethod
    def from_json(cls, data: object) -> "LikelihoodMatrix":
        """Parse the ``to_json`` form.

        Structural problems (wrong keys, wrong shape, non-numeric cells)
        raise :class:`ParseError`; numeric values outside [0, 1] raise
        :class:`OutOfRangeError`.
        """
        if not isinstance(data, dict):
            raise ParseError(f"matrix document must be an object, got {type(data).__name__}")
        unknown = set(data) - {"state", "rows"}
        if unknown:
            raise ParseError(f"unknown matrix keys: {sorted(unknown)}")
        if "state" not in data or "rows" not in data:
            raise ParseError('matrix document needs "state" and "rows" keys')
        state = EvidenceState.parse(data["state"]) if isinstance(data["state"], str) else None
        if state is None:
            raise ParseError('"state" must be the string "pos" or "neg"')
        rows = data["rows"]
        if (
            not isinstance(rows, list)
            or len(rows) != 2
            or any(not isinstance(row, list) or len(row) != 2 for row in rows)
        ):
            raise ParseError('"rows" must be a 2x2 nested list')
        cells = []
        for row in rows:
            for cell in row:
                if isinstance(cell, bool) or not isinstance(cell, (int, float)):
                    raise ParseError(f"matrix cells must be numbers, got {cell!r}")
                cells.append(cell)
        return cls(state, *cells)


@dataclass(frozen=True, slots=True)
class GeneralLikelihoodMatrix:
    """An n x m likelihood table for one evidence state, n, m >= 1.

    Used only for the rank-one test on wider parent domains; the rest of the
    package works with the 2x2 case.
    """

    state: EvidenceState
    grid: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        if not isinstance(self.state, EvidenceState):
            raise OutOfRangeError(f"state must be an EvidenceState, got {self.state!r}")
        rows = tuple(tuple(row) for row in self.grid)
        if len(rows) == 0 or any(len(row) == 0 for row in rows):
            raise OutOfRangeError("grid must have at least one row and one column")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise OutOfRangeError("grid rows must all have the same length")
        rows = tuple(
            tuple(require_probability(x, f"grid[{i}][{j}]") for j, x in enumerate(row))
            for i, row in enumerate(rows)
        )
        object.__setattr__(self, "grid", rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.grid), len(self.grid[0]))

    @property
    def max_entry(self) -> float:
        return max(max(row) for row in self.grid)


@dataclass(frozen=True, slots=True)
class NoisyOrParams:
    """Noisy-or parameters as complement reliabilities.

    ``q0`` is the leak term (probability the evidence stays negative with
    both causes absent); ``q1`` and ``q2`` are the failure probabilities of
    the A and B causal links.  All must lie in (0, 1]: a value of exactly 1
    means the mechanism never fires, while 0 is excluded because it collapses
    the negative-state table to zeros and breaks factorization.
    """

    q0: float
    q1: float
    q2: float

    def __post_init__(self):
        for name in ("q0", "q1", "q2"):
            v = require_probability(getattr(self, name), name)
            if v == 0.0:
                raise OutOfRangeError(f"{name} must lie in (0, 1], got 0.0")
            object.__setattr__(self, name, v)


@dataclass(frozen=True, slots=True)
class SingularFactorization:
    """Rank-one decomposition of a negative-evidence table.

    ``a`` and ``b`` are the per-parent likelihood parameters (the positive
    state's share of each likelihood vector) and ``c`` is the overall scale,
    so the reconstructed table is::

        [[a b c,      (1-a) b c],
         [a (1-b) c,  (1-a)(1-b) c]]

    Construction checks that every reconstructed entry is a probability.
    """

    a: float
    b: float
    c: float

    def __post_init__(self):
        object.__setattr__(self, "a", require_probability(self.a, "a"))
        object.__setattr__(self, "b", require_probability(self.b, "b"))
        object.__setattr__(self, "c", require_positive(self.c, "c"))
        top = max(self.a, 1.0 - self.a) * max(self.b, 1.0 - self.b) * self.c
        if top > 1.0 + 1e-15:
            raise OutOfRangeError(
                f"scale c={self.c!r} pushes a reconstructed entry to {top!r} > 1"
            )


@dataclass(frozen=True, slots=True)
class FactoredSymmetric:
    """Two-parameter symmetric model for the negative-evidence table.

    The table is ``[[k^2 w, k w], [k w, w]]``: one factor of ``k`` per
    positive parent, and ``w`` the weight with both parents negative.
    Both parameters must lie strictly inside (0, 1).
    """

    k: float
    w: float

    def __post_init__(self):
        for name in ("k", "w"):
            v = require_probability(getattr(self, name), name)
            if v == 0.0 or v == 1.0:
                raise OutOfRangeError(f"{name} must lie strictly in (0, 1), got {v!r}")
            object.__setattr__(self, name, v)


@dataclass(frozen=True, slots=True)
class BeliefQuery:
    """Soft inputs for a single belief evaluation.

    ``a`` and ``b`` are the prior messages p{a+} and p{b+}; ``f`` is the
    evidence likelihood message for the positive state, with ``1 - f``
    implied for the negative state.  ``f = 1`` observes e+, ``f = 0``
    observes e-, and ``f = 1/2`` is vacuous evidence.
    """

    a: float
    b: float
    f: float

    def __post_init__(self):
        for name in ("a", "b", "f"):
            object.__setattr__(self, name, require_probability(getattr(self, name), name))


@dataclass(frozen=True, slots=True)
class SynergyReport:
    """Both synergy measures for a complementary table pair.

    ``det_pos`` and ``det_neg`` are the determinants of the positive and
    negative tables.  ``y_pos`` is the additive synergy of the positive
    table and ``y_neg`` is its exact negation (the additive measure always
    flips sign under complementation, so the pair carries one number).
    """

    det_pos: float
    det_neg: float
    y_pos: float
    y_neg: float
    classification: SynergyClass


def probabilities(values: Sequence[float], name: str) -> tuple[float, ...]:
    """Validate a sequence of probabilities, for grid and vector inputs."""
    return tuple(require_probability(v, f"{name}[{i}]") for i, v in enumerate(values))
