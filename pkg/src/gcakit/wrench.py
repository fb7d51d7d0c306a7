"""Wrenches (pure forces and pure moments) as Pluecker lines.

An actuation force along a line through r with unit direction s is the
zero-pitch screw (s, r x s); a constraint moment with torque axis n is the
infinite-pitch screw (0, n), a line at infinity.  Six wrenches stacked as
rows give the transpose of the inverse Jacobian; its rank decides
singularity.

Every wrench caches the ordered point pair that spans its line, chosen
deterministically at construction, and its line is stored as the join of
that pair.  Rebuilding the 6x6 matrix from the spanning points therefore
reproduces the assembled matrix bit for bit, which is what lets the
determinant of the assembled system and the six-line bracket of the spans
be compared without any tolerance slack.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateMoment, ZeroDirection
from .projective import (DEFAULT_TOL, HomogeneousPoint, PlueckerLine,
                         infinite_line_span)
from .superbracket import LineSpan

ACTUATION_FORCE = "actuation-force"
CONSTRAINT_MOMENT = "constraint-moment"


@dataclass(frozen=True)
class Wrench:
    kind: str
    line: PlueckerLine
    leg: str
    span: LineSpan


@dataclass(frozen=True)
class WrenchSystem:
    """Exactly six wrenches, in row order of the inverse Jacobian."""

    wrenches: tuple

    def __post_init__(self):
        if len(self.wrenches) != 6:
            raise ValueError(f"need exactly 6 wrenches, got {len(self.wrenches)}")


@dataclass(frozen=True)
class InverseJacobian:
    """6x6 matrix whose row i is wrench i's Pluecker coordinates."""

    matrix: np.ndarray
    system: WrenchSystem


def force_wrench(s, r, leg="", tol=DEFAULT_TOL) -> Wrench:
    """Actuation force along direction s through the point r.

    s is normalized internally; r is kept as given.
    """
    s = np.asarray(s, dtype=float)
    r = np.asarray(r, dtype=float)
    norm = np.linalg.norm(s)
    if norm <= tol:
        raise ZeroDirection(f"force direction has zero length (leg {leg!r})")
    s = s / norm
    span = LineSpan(HomogeneousPoint.from_position(r),
                    HomogeneousPoint.at_infinity(s))
    return Wrench(ACTUATION_FORCE, PlueckerLine(s, np.cross(r, s)), leg, span)


def moment_wrench(n, leg="", tol=DEFAULT_TOL) -> Wrench:
    """Constraint moment with torque axis n.

    The spanning directions (u, w) with u x w = n are fixed first and the
    stored line is their join, so the span round-trip is exact; the stored
    moment agrees with n to a couple of ulps.
    """
    n = np.asarray(n, dtype=float)
    if np.linalg.norm(n) <= tol:
        raise DegenerateMoment(f"moment axis has zero length (leg {leg!r})")
    u, w = infinite_line_span(n)
    span = LineSpan(HomogeneousPoint.at_infinity(u),
                    HomogeneousPoint.at_infinity(w))
    return Wrench(CONSTRAINT_MOMENT, PlueckerLine(np.zeros(3), np.cross(u, w)),
                  leg, span)


def wrench_span(w: Wrench) -> LineSpan:
    """The deterministic spanning point pair chosen at construction."""
    return w.span


def assemble(system: WrenchSystem) -> InverseJacobian:
    """Stack the six wrench lines as rows, in system order."""
    rows = np.array([w.line.coords() for w in system.wrenches])
    rows.flags.writeable = False
    return InverseJacobian(rows, system)


def numeric_rank(jac, tol=DEFAULT_TOL) -> int:
    """Number of singular values above tol * sigma_max."""
    matrix = jac.matrix if isinstance(jac, InverseJacobian) else np.asarray(jac, dtype=float)
    sv = np.linalg.svd(matrix, compute_uv=False)
    if sv[0] == 0.0:
        return 0
    return int(np.sum(sv > tol * sv[0]))
