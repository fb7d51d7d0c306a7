"""Translational 3-UPU manipulator: wrench system and singularity conditions.

Each leg applies one actuation force (s_i, r_i x s_i) along the leg and one
constraint moment (0, n_i), where n_i is the cross product of the two base
U-joint axes of that leg.  The assembled 6x6 matrix is block triangular,
so its determinant factors exactly into

    det = [(s1 x s2) . s3] * [(n1 x n2) . n3]

and the manipulator is singular iff the force directions are coplanar, the
moment axes are coplanar, or a moment degenerates.

U-joint model: the second base axis is taken perpendicular to both the
fixed axis e_i and the leg, e'_i = unit(e_i x s_i), which keeps
n_i = e_i x e'_i a unit vector away from e_i parallel to the leg.  n_i is
perpendicular to e_i and e'_i (it is generally not perpendicular to the
leg itself).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import (OracleDisagreement, UAxisParallelToLeg, ZeroDirection,
                      ZeroLegLength)
from ..projective import DEFAULT_TOL
from ..wrench import WrenchSystem, assemble, force_wrench, moment_wrench, numeric_rank
from .report import SingularityReport

FORCES_COPLANAR = "FORCES_COPLANAR"
FORCES_TWO_PARALLEL = "FORCES_TWO_PARALLEL"
FORCES_ALL_PARALLEL = "FORCES_ALL_PARALLEL"
MOMENTS_COPLANAR = "MOMENTS_COPLANAR"
MOMENTS_TWO_PARALLEL = "MOMENTS_TWO_PARALLEL"
MOMENTS_ALL_PARALLEL = "MOMENTS_ALL_PARALLEL"
MOMENT_DEGENERATE = "MOMENT_DEGENERATE"

UPU3_LABELS = (FORCES_COPLANAR, FORCES_TWO_PARALLEL, FORCES_ALL_PARALLEL,
               MOMENTS_COPLANAR, MOMENTS_TWO_PARALLEL, MOMENTS_ALL_PARALLEL,
               MOMENT_DEGENERATE)


def _vec3_rows(x, name):
    a = np.asarray(x, dtype=float)
    if a.shape != (3, 3):
        raise ValueError(f"{name} must be three 3-vectors, got shape {a.shape}")
    return a


@dataclass(frozen=True)
class UPU3Geometry:
    """Base anchors A_i, platform anchor offsets B_i, fixed U-axes e_i."""

    base_points: np.ndarray
    platform_offsets: np.ndarray
    base_u_axes: np.ndarray

    def __post_init__(self):
        bp = _vec3_rows(self.base_points, "base_points")
        po = _vec3_rows(self.platform_offsets, "platform_offsets")
        ax = _vec3_rows(self.base_u_axes, "base_u_axes")
        norms = np.linalg.norm(ax, axis=1)
        if np.any(norms == 0.0):
            raise ZeroDirection("base U-joint axis has zero length")
        ax = ax / norms[:, None]
        if np.allclose(bp[0], bp[1]) and np.allclose(bp[0], bp[2]):
            raise ValueError("base points must not all coincide")
        object.__setattr__(self, "base_points", bp)
        object.__setattr__(self, "platform_offsets", po)
        object.__setattr__(self, "base_u_axes", ax)


@dataclass(frozen=True)
class UPU3State:
    """Instantaneous wrench data: unit leg directions s, anchor points r,
    moment axes n."""

    s: np.ndarray
    r: np.ndarray
    n: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "s", _vec3_rows(self.s, "s"))
        object.__setattr__(self, "r", _vec3_rows(self.r, "r"))
        object.__setattr__(self, "n", _vec3_rows(self.n, "n"))


def upu3_state(geom: UPU3Geometry, platform_position, tol=DEFAULT_TOL) -> UPU3State:
    """Wrench data at a platform position (platform kept unrotated)."""
    p = np.asarray(platform_position, dtype=float)
    s = np.empty((3, 3))
    n = np.empty((3, 3))
    for i in range(3):
        leg = (p + geom.platform_offsets[i]) - geom.base_points[i]
        length = np.linalg.norm(leg)
        if length <= tol:
            raise ZeroLegLength(f"leg {i + 1} has zero length at {p}")
        s[i] = leg / length
        e = geom.base_u_axes[i]
        second = np.cross(e, s[i])
        norm2 = np.linalg.norm(second)
        if norm2 <= tol:
            raise UAxisParallelToLeg(f"leg {i + 1}: U axis parallel to the leg")
        n[i] = np.cross(e, second / norm2)
    return UPU3State(s=s, r=geom.base_points.copy(), n=n)


def upu3_wrench_system(state: UPU3State, tol=DEFAULT_TOL) -> WrenchSystem:
    """Rows F1, F2, F3, M1, M2, M3; degenerate moments raise."""
    forces = [force_wrench(state.s[i], state.r[i], leg=f"leg{i + 1}", tol=tol)
              for i in range(3)]
    moments = [moment_wrench(state.n[i], leg=f"leg{i + 1}", tol=tol)
               for i in range(3)]
    return WrenchSystem(tuple(forces + moments))


def state_matrix(state: UPU3State) -> np.ndarray:
    """The 6x6 rows built directly, without wrench validation.

    Used for rank checks on degenerate states that moment_wrench rejects.
    """
    rows = []
    for i in range(3):
        s = state.s[i] / np.linalg.norm(state.s[i])
        rows.append(np.concatenate([s, np.cross(state.r[i], s)]))
    for i in range(3):
        rows.append(np.concatenate([np.zeros(3), state.n[i]]))
    return np.array(rows)


def _triples(matrix):
    triple_s = float(np.linalg.det(matrix[:3, :3]))
    triple_n = float(np.linalg.det(matrix[3:, 3:]))
    return triple_s, triple_n


def upu3_classify(state: UPU3State, tol=DEFAULT_TOL):
    """Geometric case labels; empty list iff the state is nonsingular.

    Parallel labels imply the matching coplanar label; a degenerate moment
    is labeled before any rank evaluation would be attempted.
    """
    labels = []
    s = state.s / np.linalg.norm(state.s, axis=1, keepdims=True)

    forces_parallel = [np.linalg.norm(np.cross(s[i], s[j])) <= tol
                       for i, j in ((0, 1), (0, 2), (1, 2))]
    if all(forces_parallel):
        labels += [FORCES_ALL_PARALLEL, FORCES_TWO_PARALLEL]
    elif any(forces_parallel):
        labels.append(FORCES_TWO_PARALLEL)
    if abs(np.linalg.det(s)) <= tol:
        labels.append(FORCES_COPLANAR)

    n = state.n
    n_norms = np.linalg.norm(n, axis=1)
    n_gauge = max(n_norms.max(), 1.0) if n_norms.max() > 0 else 1.0
    degenerate = n_norms <= tol * n_gauge
    if np.any(degenerate):
        labels.append(MOMENT_DEGENERATE)
    ok = ~degenerate
    pairs = [(i, j) for i, j in ((0, 1), (0, 2), (1, 2)) if ok[i] and ok[j]]
    moments_parallel = [
        np.linalg.norm(np.cross(n[i] / n_norms[i], n[j] / n_norms[j])) <= tol
        for i, j in pairs]
    if moments_parallel and all(moments_parallel) and len(pairs) == 3:
        labels += [MOMENTS_ALL_PARALLEL, MOMENTS_TWO_PARALLEL]
    elif any(moments_parallel):
        labels.append(MOMENTS_TWO_PARALLEL)
    if abs(np.linalg.det(n)) <= tol * n_norms[0] * n_norms[1] * n_norms[2] \
            or np.any(degenerate):
        labels.append(MOMENTS_COPLANAR)

    return [lab for lab in UPU3_LABELS if lab in labels]


def upu3_singularity(state: UPU3State, tol=DEFAULT_TOL) -> SingularityReport:
    """Closed-form condition value with the determinant cross-check.

    value = [(s1 x s2) . s3] * [(n1 x n2) . n3]; equal to the determinant
    of the assembled matrix by block triangularity.  A near-zero moment
    axis raises DegenerateMoment (classify labels it instead of raising).
    """
    system = upu3_wrench_system(state, tol=tol)
    jac = assemble(system)
    matrix = jac.matrix
    triple_s, triple_n = _triples(matrix)
    value = triple_s * triple_n
    det = float(np.linalg.det(matrix))
    gauge = float(np.prod(np.linalg.norm(matrix, axis=1)))
    if abs(value - det) > max(1e-10 * gauge, 1e-300):
        raise OracleDisagreement(
            f"triple product {value!r} vs determinant {det!r}")
    rank = numeric_rank(jac, tol=tol)
    labels = tuple(upu3_classify(state, tol=tol))
    factors = {"triple_s": triple_s, "triple_n": triple_n, "det": det}
    return SingularityReport(value=value, factors=factors, rank=rank,
                             labels=labels, tol=tol)
