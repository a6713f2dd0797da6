"""Core domain types for dynamic multi-criteria risk assessment.

An assessment problem consists of n areas, each scored on m indices over
T periods. Every area carries an m x T matrix of raw scores (row = index,
column = period); index weights and time weights are supplied as data.
All types are immutable value objects and safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

WEIGHT_SUM_TOLERANCE = 1e-2


class ValidationError(ValueError):
    """Raised when an assessment input violates its invariants.

    Carries the complete list of violations, not just the first one found.
    """

    def __init__(self, errors: list[str]):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


class OrientationKind(str, Enum):
    BENEFIT = "benefit"            # larger raw score = higher risk
    COST = "cost"                  # larger raw score = lower risk
    INTERMEDIATE = "intermediate"  # closer to the cross-area median = higher risk
    INTERVAL = "interval"          # inside [low, high] = highest risk


@dataclass(frozen=True)
class Orientation:
    """Orientation of one index, with bounds only for the interval kind."""

    kind: OrientationKind
    interval_low: float | None = None
    interval_high: float | None = None

    @staticmethod
    def benefit() -> "Orientation":
        return Orientation(OrientationKind.BENEFIT)

    @staticmethod
    def cost() -> "Orientation":
        return Orientation(OrientationKind.COST)

    @staticmethod
    def intermediate() -> "Orientation":
        return Orientation(OrientationKind.INTERMEDIATE)

    @staticmethod
    def interval(low: float, high: float) -> "Orientation":
        return Orientation(OrientationKind.INTERVAL, float(low), float(high))


@dataclass(frozen=True)
class IndexDefinition:
    """One evaluation criterion: identity, orientation, and weight."""

    id: str
    name: str
    orientation: Orientation
    weight: float


@dataclass(frozen=True)
class AreaSeries:
    """Raw score matrix of one assessed area, shape m x T."""

    name: str
    values: np.ndarray

    def __post_init__(self):
        arr = np.array(self.values, dtype=float)
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)


@dataclass(frozen=True)
class AssessmentInput:
    """A full assessment problem.

    Weight vectors are kept as given; renormalization to an exact unit sum
    happens at run time and is recorded in the report's config echo.
    """

    indices: tuple[IndexDefinition, ...]
    periods: tuple[str, ...]
    time_weights: np.ndarray
    areas: tuple[AreaSeries, ...]

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(self.indices))
        object.__setattr__(self, "periods", tuple(str(p) for p in self.periods))
        object.__setattr__(self, "areas", tuple(self.areas))
        tw = np.array(self.time_weights, dtype=float)
        tw.setflags(write=False)
        object.__setattr__(self, "time_weights", tw)

    @property
    def num_indices(self) -> int:
        return len(self.indices)

    @property
    def num_periods(self) -> int:
        return len(self.periods)

    @property
    def num_areas(self) -> int:
        return len(self.areas)

    @property
    def index_weights(self) -> np.ndarray:
        return np.array([d.weight for d in self.indices], dtype=float)


@dataclass(frozen=True)
class StageMatrices:
    """Intermediate matrices of one assessment run, kept for trace output.

    Per-area lists are aligned with ``area_names``. Standardized and
    weighted matrices are m x T; volume, difference, and coefficient
    matrices are (m-1) x (T-1).
    """

    index_ids: tuple[str, ...]
    period_labels: tuple[str, ...]
    area_names: tuple[str, ...]
    standardized: tuple[np.ndarray, ...]
    weighted: tuple[np.ndarray, ...]
    positive_ideal: np.ndarray
    negative_ideal: np.ndarray
    volume: tuple[np.ndarray, ...]
    volume_positive: np.ndarray
    volume_negative: np.ndarray
    volume_diff_pos: tuple[np.ndarray, ...]
    volume_diff_neg: tuple[np.ndarray, ...]
    coeff_pos: tuple[np.ndarray, ...]
    coeff_neg: tuple[np.ndarray, ...]


def _check_orientation(d: IndexDefinition, errors: list[str]) -> None:
    o = d.orientation
    if o.kind is OrientationKind.INTERVAL:
        if o.interval_low is None or o.interval_high is None:
            errors.append(f"index '{d.id}': interval orientation missing bounds")
            return
        if not (math.isfinite(o.interval_low) and math.isfinite(o.interval_high)):
            errors.append(f"index '{d.id}': interval bounds must be finite")
        elif o.interval_low > o.interval_high:
            errors.append(
                f"index '{d.id}': interval_low {o.interval_low:.4g} exceeds "
                f"interval_high {o.interval_high:.4g}"
            )
    elif o.interval_low is not None or o.interval_high is not None:
        errors.append(
            f"index '{d.id}': orientation '{o.kind.value}' must carry no interval bounds"
        )


def validate_input(inp: AssessmentInput) -> AssessmentInput:
    """Check every input invariant; raise ValidationError listing all violations.

    Returns the input object unchanged when valid, so validation is
    idempotent.
    """
    errors: list[str] = []
    m, T, n = inp.num_indices, inp.num_periods, inp.num_areas

    if m < 2:
        errors.append(f"m >= 2 required (local volume needs a 2x2 grid), got m={m}")
    if T < 2:
        errors.append(f"T >= 2 required (local volume needs a 2x2 grid), got T={T}")
    if n < 2:
        errors.append(f"n >= 2 required (ideal matrices need two areas), got n={n}")

    seen: set[str] = set()
    for d in inp.indices:
        if d.id in seen:
            errors.append(f"duplicate index id '{d.id}'")
        seen.add(d.id)
        if not math.isfinite(d.weight) or not (0.0 < d.weight <= 1.0):
            errors.append(f"index '{d.id}': weight {d.weight!r} outside (0, 1]")
        _check_orientation(d, errors)

    # reports, tie flags, and trace files key rows by area name
    seen_areas: set[str] = set()
    for area in inp.areas:
        if area.name in seen_areas:
            errors.append(f"duplicate area name '{area.name}'")
        seen_areas.add(area.name)

    if inp.time_weights.shape != (T,):
        errors.append(
            f"time_weights length {inp.time_weights.size} does not match {T} periods"
        )
    else:
        for t, w in enumerate(inp.time_weights):
            if not math.isfinite(w) or w <= 0.0:
                errors.append(
                    f"period '{inp.periods[t]}': time weight {float(w)!r} not positive"
                )

    if m > 0:
        lam_sum = float(sum(d.weight for d in inp.indices))
        if math.isfinite(lam_sum) and abs(lam_sum - 1.0) > WEIGHT_SUM_TOLERANCE:
            errors.append(f"index weights sum {lam_sum:.2f} outside tolerance")
    if inp.time_weights.shape == (T,) and T > 0:
        theta_sum = float(inp.time_weights.sum())
        if math.isfinite(theta_sum) and abs(theta_sum - 1.0) > WEIGHT_SUM_TOLERANCE:
            errors.append(f"time weights sum {theta_sum:.2f} outside tolerance")

    for area in inp.areas:
        if area.values.ndim != 2 or area.values.shape != (m, T):
            got = "x".join(str(k) for k in area.values.shape)
            errors.append(f"area '{area.name}': expected {m}x{T} value matrix, got {got}")
            continue
        if not np.isfinite(area.values).all():
            bad = np.argwhere(~np.isfinite(area.values))[0]
            errors.append(
                f"area '{area.name}': non-finite value at index "
                f"'{inp.indices[bad[0]].id}', period '{inp.periods[bad[1]]}'"
            )

    if errors:
        raise ValidationError(errors)
    return inp


# Canonical index system for the bundled wildland-urban interface fire case:
# (id, display name, weight). All indices are scored so that a larger value
# means higher risk, hence benefit orientation throughout.
_WUI_INDICES: tuple[tuple[str, str, float], ...] = (
    ("fuel_load", "Fuel Load", 0.1458),
    ("moisture_content", "Moisture Content of Combustible Materials", 0.1303),
    ("spatial_distribution", "Spatial Distribution of Combustible Materials", 0.1114),
    ("agri_fire_spread",
     "Uncontrolled Fire Spread in Agricultural, Forestry, and Livestock Production Regions",
     0.0666),
    ("domestic_fire_use", "Domestic Fire Use in Daily Life", 0.0612),
    ("population_density", "Population Density Distribution", 0.0585),
    ("road_density", "Road Network Density", 0.0559),
    ("precipitation", "Precipitation Levels", 0.0650),
    ("humidity", "Relative Humidity", 0.0542),
    ("air_temperature", "Air Temperature", 0.0451),
    ("wind_velocity", "Wind Velocity", 0.0376),
    ("slope_gradient", "Slope Gradient", 0.0450),
    ("slope_aspect", "Slope Aspect", 0.0430),
    ("topographic_position", "Topographic Position", 0.0411),
    ("elevation", "Elevation Above Sea Level", 0.0392),
)


def default_wui_schema() -> list[IndexDefinition]:
    """The 15-index wildland-urban interface fire risk schema with its weights."""
    return [
        IndexDefinition(id=i, name=name, orientation=Orientation.benefit(), weight=w)
        for i, name, w in _WUI_INDICES
    ]
