"""End-to-end assessment run: standardize, weight, build ideals, score, rank.

A run is a pure function of (input, config): identical inputs produce
identical reports apart from the wall-clock duration field.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from importlib import resources

import numpy as np

from . import io as gio
from ._meta import VERSION
from .incidence import ZeroingMode, incidence_family, local_volume, zeroing_image
from .model import AssessmentInput, StageMatrices, validate_input
from .normalize import standardize_all
from .ranking import (
    DegenerateAssessmentError,
    RiskLevel,
    classify,
    rank_areas,
    superiority_degree,
)
from .weighting import apply_weights, negative_ideal, positive_ideal

OUTPUT_FORMATS = ("text", "json", "csv")


@dataclass(frozen=True)
class RunConfig:
    zeroing_mode: ZeroingMode = ZeroingMode.FIRST_COLUMN
    renormalize_weights: bool = True
    report_decimals: int = 2
    emit_trace: bool = False
    output_format: str = "text"

    def validate(self) -> "RunConfig":
        if not 0 <= self.report_decimals <= 12:
            raise ValueError(f"report_decimals must lie in [0, 12], got {self.report_decimals}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(
                f"unknown output format '{self.output_format}' "
                f"(allowed: {', '.join(OUTPUT_FORMATS)})"
            )
        return self


@dataclass(frozen=True)
class AreaAssessment:
    """Scores of one area: incidence toward both ideals, superiority, rank, level."""

    name: str
    gamma_pos: float
    gamma_neg: float
    superiority: float
    rank: int
    level: RiskLevel
    tied: bool = False


@dataclass(frozen=True)
class AssessmentResult:
    areas: tuple[AreaAssessment, ...]  # in rank order
    config_echo: dict
    trace: StageMatrices | None = None


@dataclass(frozen=True)
class AssessmentReport:
    result: AssessmentResult
    fingerprint: str
    version: str
    duration_seconds: float


def _renormalized(weights: np.ndarray, enabled: bool) -> tuple[np.ndarray, bool]:
    total = float(weights.sum())
    if enabled and total != 1.0:
        return weights / total, True
    return weights, False


def run_assessment(inp: AssessmentInput, config: RunConfig | None = None) -> AssessmentReport:
    """Run the full assessment procedure and return a ranked report.

    Steps, in order: validate, standardize, weight, build ideal matrices,
    volumetric incidence against each ideal, superiority degrees, ranking,
    classification. Errors carry the failing step in their message.
    """
    config = (config or RunConfig()).validate()
    t0 = time.perf_counter()

    validate_input(inp)
    fingerprint = gio.compute_fingerprint(inp)

    lam_raw = inp.index_weights
    theta_raw = inp.time_weights
    lam, lam_renormed = _renormalized(lam_raw, config.renormalize_weights)
    theta, theta_renormed = _renormalized(theta_raw, config.renormalize_weights)

    b_mats = standardize_all(inp)
    c_mats = [apply_weights(b, lam, theta) for b in b_mats]
    c_pos = positive_ideal(c_mats)
    c_neg = negative_ideal(c_mats)

    fam_pos = incidence_family(c_pos, c_mats, config.zeroing_mode, "positive-ideal")
    fam_neg = incidence_family(c_neg, c_mats, config.zeroing_mode, "negative-ideal")

    supers = []
    for area, gp, gn in zip(inp.areas, fam_pos.degrees, fam_neg.degrees):
        try:
            supers.append(superiority_degree(gp, gn))
        except DegenerateAssessmentError as exc:
            raise DegenerateAssessmentError(
                f"superiority step: area '{area.name}': {exc}"
            ) from exc

    ranked = rank_areas(zip((a.name for a in inp.areas), supers))
    by_name = {a.name: (gp, gn) for a, gp, gn in zip(inp.areas, fam_pos.degrees, fam_neg.degrees)}
    records = tuple(
        AreaAssessment(
            name=r.name,
            gamma_pos=by_name[r.name][0],
            gamma_neg=by_name[r.name][1],
            superiority=r.superiority,
            rank=r.rank,
            level=classify(r.superiority),
            tied=r.tied,
        )
        for r in ranked
    )

    echo = {
        "zeroing_mode": config.zeroing_mode.value,
        "renormalize_weights": config.renormalize_weights,
        "report_decimals": config.report_decimals,
        "emit_trace": config.emit_trace,
        "output_format": config.output_format,
        "index_weight_sum": float(lam_raw.sum()),
        "time_weight_sum": float(theta_raw.sum()),
        "index_weights_renormalized": lam_renormed,
        "time_weights_renormalized": theta_renormed,
    }

    trace = None
    if config.emit_trace:
        def zim(c):
            return zeroing_image(c, config.zeroing_mode)

        trace = StageMatrices(
            index_ids=tuple(d.id for d in inp.indices),
            period_labels=inp.periods,
            area_names=tuple(a.name for a in inp.areas),
            standardized=tuple(b_mats),
            weighted=tuple(c_mats),
            positive_ideal=c_pos,
            negative_ideal=c_neg,
            volume=tuple(local_volume(zim(c)) for c in c_mats),
            volume_positive=local_volume(zim(c_pos)),
            volume_negative=local_volume(zim(c_neg)),
            volume_diff_pos=fam_pos.volume_diffs,
            volume_diff_neg=fam_neg.volume_diffs,
            coeff_pos=fam_pos.coefficients,
            coeff_neg=fam_neg.coefficients,
        )

    result = AssessmentResult(areas=records, config_echo=echo, trace=trace)
    return AssessmentReport(
        result=result,
        fingerprint=fingerprint,
        version=VERSION,
        duration_seconds=time.perf_counter() - t0,
    )


def load_bundled_case() -> AssessmentInput:
    """The packaged three-area wildland-urban interface fire dataset."""
    ref = resources.files("greyrisk").joinpath("data/wui-case.json")
    with resources.as_file(ref) as path:
        return gio.load_input(path, "json")


def demo(config: RunConfig | None = None) -> AssessmentReport:
    """Run the bundled case dataset with the default configuration."""
    return run_assessment(load_bundled_case(), config)
