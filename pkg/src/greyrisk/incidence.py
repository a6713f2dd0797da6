"""Volumetric grey incidence between a reference matrix and behavior matrices.

The closeness of two m x T matrices is measured through the volumes under
their re-based (zeroed) surfaces. Each adjacent 2x2 window of a zeroed
matrix contributes one local volume

    d[i, j] = (z[i, j] + z[i+1, j+1]) / 6 + (z[i+1, j] + z[i, j+1]) / 3,

which equals the integral over the unit cell of the piecewise-linear
surface obtained by splitting the cell into two triangles along its
anti-diagonal. Absolute differences of local volumes between a factor and
the reference, rescaled by the extreme differences across the whole factor
family, give per-window grey coefficients in [0, 1]; their mean is the
volumetric incidence degree of that factor.

Working on volume differences of re-based surfaces makes the degree
invariant under a common positive scaling of all matrices, and (for the
subtractive zeroing modes) under a common translation.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np


class ZeroingMode(str, Enum):
    """How a behavior matrix is re-based before volume computation.

    FIRST_COLUMN subtracts each row's first-period value, re-basing every
    index's time series at its start; this is the default. FIRST_ELEMENT
    subtracts the single top-left value from the whole matrix. NONE leaves
    the matrix untouched (no translation invariance).
    """

    FIRST_COLUMN = "first-column"
    FIRST_ELEMENT = "first-element"
    NONE = "none"


@dataclass(frozen=True)
class IncidenceFamilyResult:
    """Incidence of each factor matrix against one shared reference.

    The extreme differences d_max/d_min are taken jointly over every
    factor's volume difference matrix, so coefficients of different factors
    are on a common scale.
    """

    reference_label: str
    volume_diffs: tuple[np.ndarray, ...]
    d_max: float
    d_min: float
    coefficients: tuple[np.ndarray, ...]
    degrees: tuple[float, ...]


def zeroing_image(c: np.ndarray, mode: ZeroingMode = ZeroingMode.FIRST_COLUMN) -> np.ndarray:
    c = np.asarray(c, dtype=float)
    mode = ZeroingMode(mode)
    if mode is ZeroingMode.FIRST_COLUMN:
        return c - c[:, :1]
    if mode is ZeroingMode.FIRST_ELEMENT:
        return c - c[0, 0]
    return c.copy()


def local_volume(ctilde: np.ndarray) -> np.ndarray:
    """(m-1) x (T-1) matrix of signed volumes under the zeroed surface.

    Cell (i, j) integrates the surface spanned by the 2x2 window at (i, j),
    triangulated along the window's anti-diagonal.
    """
    z = np.asarray(ctilde, dtype=float)
    if z.ndim != 2 or z.shape[0] < 2 or z.shape[1] < 2:
        raise ValueError(f"local volume needs at least a 2x2 matrix, got shape {z.shape}")
    return (z[:-1, :-1] + z[1:, 1:]) / 6.0 + (z[1:, :-1] + z[:-1, 1:]) / 3.0


def volume_difference(d0: np.ndarray, dk: np.ndarray) -> np.ndarray:
    """Elementwise absolute difference of two local volume matrices."""
    d0 = np.asarray(d0, dtype=float)
    dk = np.asarray(dk, dtype=float)
    if d0.shape != dk.shape:
        raise ValueError(f"shape mismatch: {d0.shape} vs {dk.shape}")
    return np.abs(d0 - dk)


def incidence_family(
    reference: np.ndarray,
    factors: Sequence[np.ndarray],
    mode: ZeroingMode = ZeroingMode.FIRST_COLUMN,
    reference_label: str = "reference",
) -> IncidenceFamilyResult:
    """Volumetric incidence degree of every factor against the reference.

    Per factor k: coefficient matrix G(k) = (d_max - D0k) / (d_max - d_min)
    and degree = mean of G(k). Two degenerate situations yield all-ones
    coefficients: d_max = 0 (every factor matches the reference exactly)
    and d_max = d_min != 0 (all differences equal, so no discrimination is
    possible).
    """
    ref = np.asarray(reference, dtype=float)
    if len(factors) == 0:
        raise ValueError("at least one factor matrix required")
    mats = [np.asarray(f, dtype=float) for f in factors]
    for k, f in enumerate(mats):
        if f.shape != ref.shape:
            raise ValueError(f"factor {k} shape {f.shape} does not match reference {ref.shape}")

    d0 = local_volume(zeroing_image(ref, mode))
    diffs = tuple(volume_difference(d0, local_volume(zeroing_image(f, mode))) for f in mats)
    d_max = float(max(d.max() for d in diffs))
    d_min = float(min(d.min() for d in diffs))

    if d_max == d_min:
        coeffs = tuple(np.ones_like(d) for d in diffs)
    else:
        coeffs = tuple((d_max - d) / (d_max - d_min) for d in diffs)
    degrees = tuple(float(g.mean()) for g in coeffs)
    return IncidenceFamilyResult(
        reference_label=reference_label,
        volume_diffs=diffs,
        d_max=d_max,
        d_min=d_min,
        coefficients=coeffs,
        degrees=degrees,
    )
