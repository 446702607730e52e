"""Effective resistance through the grounded Laplacian ``Gamma = L + J/n``."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from . import linalg
from .graph import Graph, laplacian
from .linalg import Spectrum


@dataclass(frozen=True)
class ResistanceData:
    """Resistance quantities of one graph.

    Attributes
    ----------
    gamma : ndarray
        ``L + J/n``; positive definite for connected graphs.
    gamma_inv : ndarray
        Its inverse.
    omega : ndarray
        Effective resistance matrix, zero diagonal.
    spectrum : Spectrum
        Laplacian eigenvalues, ascending.
    kirchhoff : float
        Sum of ``omega`` over unordered pairs.
    """

    gamma: np.ndarray
    gamma_inv: np.ndarray
    omega: np.ndarray
    spectrum: Spectrum
    kirchhoff: float

    @property
    def n(self) -> int:
        return self.omega.shape[0]

    @property
    def lambda2(self) -> float:
        return float(self.spectrum.values[1])


def resistance_matrix(g: Graph) -> ResistanceData:
    n = g.n
    lap = laplacian(g)
    gamma = lap + 1.0 / n
    # one factorization, n back-substitutions against the identity
    gamma_inv = linalg.cho_solve(linalg.cholesky(gamma), np.eye(n))
    gamma_inv = (gamma_inv + gamma_inv.T) / 2
    d = np.diag(gamma_inv)
    omega = d[:, None] + d[None, :] - 2.0 * gamma_inv
    np.fill_diagonal(omega, 0.0)
    omega = (omega + omega.T) / 2
    spec = linalg.eig_symmetric(lap)
    return ResistanceData(gamma, gamma_inv, omega, spec, kirchhoff_from_omega(omega))


def kirchhoff_from_omega(omega: np.ndarray) -> float:
    return float(omega[np.triu_indices_from(omega, k=1)].sum())


def kirchhoff_index(rd: ResistanceData) -> float:
    return kirchhoff_from_omega(rd.omega)


def foster_check(g: Graph, rd: ResistanceData) -> float:
    """``|sum over edges of Omega - (n - 1)|``."""
    total = sum(rd.omega[i, j] for i, j in g.edges)
    return abs(total - (g.n - 1))


def mckay_check(rd: ResistanceData) -> float:
    """``|Kf - n * sum_{k>=2} 1/lambda_k|``."""
    lam = rd.spectrum.values[1:]
    return abs(rd.kirchhoff - rd.n * float(np.sum(1.0 / lam)))


def omega_csv(g: Graph, rd: ResistanceData) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(g.labels)
    for row in rd.omega:
        w.writerow(repr(float(x)) for x in row)
    return buf.getvalue()
