"""Result record shared by the manipulator singularity analyses."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class SingularityReport:
    """Closed-form condition value with its factor breakdown and rank check.

    value    -- the scalar singularity condition (zero at a singularity)
    factors  -- named sub-values (triples, brackets, determinant oracle)
    rank     -- numeric rank of the 6x6 inverse Jacobian
    labels   -- geometric case labels; empty means no singularity detected
    tol      -- relative tolerance gauge used for every zero decision
    """

    value: float
    factors: dict = field(default_factory=dict)
    rank: int = 6
    labels: tuple = ()
    tol: float = 1e-9

    @property
    def singular(self) -> bool:
        return self.rank < 6 or bool(self.labels)
