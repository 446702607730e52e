"""Dense real symmetric kernels.

Thin wrappers over LAPACK (through scipy) that enforce symmetry on entry,
translate LAPACK failures into package exceptions and check the residual
contract on the way out. Everything else in the package goes through here.
"""

from __future__ import annotations

import contextlib
import warnings
from dataclasses import dataclass, replace

import numpy as np
import scipy.linalg as sla

from .errors import NoConvergence, NotPositiveDefinite, NotSymmetric, SingularMatrix


@dataclass(frozen=True)
class Numerics:
    symmetry_rtol: float = 1e-12
    residual_rtol: float = 1e-9
    zero_band: float = 1e-9
    constancy_rtol: float = 1e-8


_numerics = Numerics()


def numerics() -> Numerics:
    """The active global tolerance settings."""
    return _numerics


@contextlib.contextmanager
def override_numerics(**changes):
    """Temporarily replace fields of the global :class:`Numerics`."""
    global _numerics
    saved = _numerics
    _numerics = replace(saved, **changes)
    try:
        yield _numerics
    finally:
        _numerics = saved


def sym_matrix(a) -> np.ndarray:
    """Validate symmetry and return an exactly symmetric float64 copy."""
    m = np.array(a, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {m.shape}")
    scale = np.abs(m).max() if m.size else 0.0
    asym = np.abs(m - m.T).max() if m.size else 0.0
    if asym > numerics().symmetry_rtol * scale:
        raise NotSymmetric(f"max asymmetry {asym:.3g} exceeds tolerance")
    return (m + m.T) / 2


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in ascending order, with optional orthonormal eigenvectors."""

    values: np.ndarray
    vectors: np.ndarray | None = None


def _check_residual(m, x, b):
    n = m.shape[0]
    resid = np.abs(m @ x - b).max()
    bound = numerics().residual_rtol * n * np.abs(m).max() * np.abs(x).max()
    return resid <= bound, resid


def cholesky(m) -> tuple[np.ndarray, bool]:
    """Cholesky factor of a symmetric positive definite matrix, reusable by
    :func:`cho_solve`."""
    m = sym_matrix(m)
    try:
        return sla.cho_factor(m, lower=True, check_finite=True)
    except sla.LinAlgError as exc:
        raise NotPositiveDefinite(str(exc)) from None


def cho_solve(factor, b) -> np.ndarray:
    return sla.cho_solve(factor, np.asarray(b, dtype=np.float64))


def solve_spd(m, b) -> np.ndarray:
    """Solve ``M x = b`` for symmetric positive definite ``M``."""
    m = sym_matrix(m)
    x = cho_solve(cholesky(m), b)
    ok, resid = _check_residual(m, x, b)
    if not ok:
        raise NotPositiveDefinite(f"residual {resid:.3g} violates solve contract")
    return x


def solve_symmetric(m, b) -> np.ndarray:
    """Solve ``M x = b`` for symmetric, possibly indefinite, nonsingular ``M``.

    Uses a Bunch-Kaufman LDL^T factorization with symmetric pivoting.
    """
    m = sym_matrix(m)
    b = np.asarray(b, dtype=np.float64)
    with warnings.catch_warnings():
        warnings.simplefilter("error", sla.LinAlgWarning)
        try:
            x = sla.solve(m, b, assume_a="sym", check_finite=True)
        except (sla.LinAlgError, sla.LinAlgWarning) as exc:
            raise SingularMatrix(str(exc)) from None
    ok, resid = _check_residual(m, x, b)
    if not ok:
        raise SingularMatrix(f"residual {resid:.3g} violates solve contract")
    return x


def eig_symmetric(m, vectors: bool = False) -> Spectrum:
    """Full symmetric eigendecomposition, eigenvalues ascending."""
    m = sym_matrix(m)
    try:
        if vectors:
            w, v = sla.eigh(m, driver="evd")
            return Spectrum(w, v)
        return Spectrum(sla.eigh(m, eigvals_only=True, driver="evd"))
    except sla.LinAlgError as exc:
        raise NoConvergence(str(exc)) from None
