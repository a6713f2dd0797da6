"""Superiority degrees, ranking, and the seven-grade risk classification.

The superiority degree s of an area with incidence gamma_pos toward the
riskiest profile and gamma_neg toward the safest one is the minimizer of

    H(s) = sum_i [((1 - s_i) * gamma_pos_i)^2 + (s_i * gamma_neg_i)^2],

which separates per area and has the closed form

    s = gamma_pos^2 / (gamma_pos^2 + gamma_neg^2).

Larger s means higher risk. Areas are ranked by descending s and classified
against seven fixed grade thresholds; a degree falling between two grades
takes the higher grade.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Sequence

import numpy as np


class DegenerateAssessmentError(ArithmeticError):
    """Raised when both incidence degrees of an area are zero.

    A zero pair means every grey coefficient hit the degenerate branch;
    the superiority degree is undefined and the run should be inspected
    rather than silently neutralized.
    """


class RiskLevel(IntEnum):
    EXTREMELY_LOW = 1
    LOW = 2
    SLIGHTLY_LOW = 3
    MEDIUM = 4
    SLIGHTLY_HIGH = 5
    HIGH = 6
    EXTREMELY_HIGH = 7

    @property
    def label(self) -> str:
        return self.name.lower().replace("_", " ")


# Grade thresholds for levels 1..7; a degree above the last one is
# extremely high.
RISK_THRESHOLDS: tuple[float, ...] = (0.1, 0.2, 0.4, 0.6, 0.7, 0.8, 0.9)


@dataclass(frozen=True)
class RankedArea:
    name: str
    superiority: float
    rank: int
    tied: bool


def superiority_degree(gamma_pos: float, gamma_neg: float) -> float:
    if not (0.0 <= gamma_pos <= 1.0 and 0.0 <= gamma_neg <= 1.0):
        raise ValueError(
            f"incidence degrees must lie in [0, 1], got ({gamma_pos!r}, {gamma_neg!r})"
        )
    if gamma_pos == 0.0 and gamma_neg == 0.0:
        raise DegenerateAssessmentError(
            "both incidence degrees are zero; superiority degree undefined"
        )
    return gamma_pos**2 / (gamma_pos**2 + gamma_neg**2)


def objective_H(
    s: Sequence[float], gammas_pos: Sequence[float], gammas_neg: Sequence[float]
) -> float:
    """Evaluate the ranking objective; used to verify optimizer minimality."""
    s = np.asarray(s, dtype=float)
    gp = np.asarray(gammas_pos, dtype=float)
    gn = np.asarray(gammas_neg, dtype=float)
    if not (s.shape == gp.shape == gn.shape):
        raise ValueError(f"length mismatch: {s.shape}, {gp.shape}, {gn.shape}")
    return float((((1.0 - s) * gp) ** 2 + (s * gn) ** 2).sum())


def classify(s: float) -> RiskLevel:
    """Map a superiority degree to the smallest grade whose threshold covers it."""
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"superiority degree must lie in [0, 1], got {s!r}")
    for level, threshold in zip(RiskLevel, RISK_THRESHOLDS):
        if s <= threshold:
            return level
    return RiskLevel.EXTREMELY_HIGH


def rank_areas(results: Iterable[tuple[str, float]]) -> list[RankedArea]:
    """Order areas by descending superiority; rank 1 is the riskiest.

    Ties share the numerically smaller rank value and are flagged; input
    order is preserved among tied entries.
    """
    entries = [(name, float(s)) for name, s in results]
    order = sorted(range(len(entries)), key=lambda i: (-entries[i][1], i))
    counts: dict[float, int] = {}
    for _, s in entries:
        counts[s] = counts.get(s, 0) + 1
    ranked = []
    for i in order:
        name, s = entries[i]
        greater = sum(1 for _, v in entries if v > s)
        ranked.append(RankedArea(name=name, superiority=s, rank=greater + 1,
                                 tied=counts[s] > 1))
    return ranked
