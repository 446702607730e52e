"""Resistance curvature: the solution of ``Omega @ kappa = 1``."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import LinAlgFault, ZeroTotalCurvature
from .graph import Graph, laplacian
from .resistance import ResistanceData

POSITIVE, ZERO, NEGATIVE = "positive", "zero", "negative"


@dataclass(frozen=True)
class CurvatureResult:
    kappa: np.ndarray
    total: float
    kmin: float
    kmax: float
    signs: tuple[str, ...]
    constant: bool
    constant_value: float | None

    def to_json(self) -> dict:
        return {
            "kappa": [float(k) for k in self.kappa],
            "total": self.total,
            "kmin": self.kmin,
            "kmax": self.kmax,
            "constant": self.constant,
        }


def sign_class(value: float, band: float | None = None) -> str:
    band = linalg.numerics().zero_band if band is None else band
    if value > band:
        return POSITIVE
    if value < -band:
        return NEGATIVE
    return ZERO


def _flat(values: np.ndarray) -> tuple[bool, float]:
    mean = float(values.mean())
    spread = float(np.abs(values - mean).max())
    return spread <= linalg.numerics().constancy_rtol * max(1.0, abs(mean)), mean


def curvature(rd: ResistanceData) -> CurvatureResult:
    kappa = linalg.solve_symmetric(rd.omega, np.ones(rd.n))
    flat, mean = _flat(kappa)
    if flat:
        _cross_check_rows(rd, mean)
    return CurvatureResult(
        kappa=kappa,
        total=float(kappa.sum()),
        kmin=float(kappa.min()),
        kmax=float(kappa.max()),
        signs=tuple(sign_class(k) for k in kappa),
        constant=flat,
        constant_value=mean if flat else None,
    )


def _cross_check_rows(rd: ResistanceData, value: float) -> None:
    rows = rd.omega.sum(axis=1)
    flat, _ = _flat(rows)
    tol = linalg.numerics().constancy_rtol
    if not flat or np.abs(value * rows - 1.0).max() > tol * rd.n:
        raise LinAlgFault("constant curvature without constant resistance row sums")


def is_constant(cr: CurvatureResult, rd: ResistanceData | None = None) -> bool:
    """Constant-curvature test; with ``rd`` the Omega row sums are checked too."""
    flat, mean = _flat(cr.kappa)
    if flat and rd is not None:
        _cross_check_rows(rd, mean)
    return flat


def dl_curvature(cr: CurvatureResult) -> np.ndarray:
    """Curvature rescaled to sum to one."""
    if abs(cr.total) <= linalg.numerics().zero_band:
        raise ZeroTotalCurvature("total curvature vanishes")
    return cr.kappa / cr.total


def edge_balance(g: Graph, rd: ResistanceData) -> np.ndarray:
    """``1 - (1/2) sum_{j ~ i} Omega_ij`` per vertex.

    Proportional to the curvature with factor ``cr.total``; entries sum to one
    because edge resistances sum to ``n - 1``.
    """
    return 1.0 - 0.5 * (g.adjacency() * rd.omega).sum(axis=1)


def inverse_residual(g: Graph, rd: ResistanceData, cr: CurvatureResult) -> float:
    """``max |Omega (-L/2 + kappa kappa^T / sum kappa) - I|``."""
    inv = -0.5 * laplacian(g) + np.outer(cr.kappa, cr.kappa) / cr.total
    return float(np.abs(rd.omega @ inv - np.eye(g.n)).max())
