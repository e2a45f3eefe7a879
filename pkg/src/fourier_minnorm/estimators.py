"""Min-norm and least-squares estimators for equispaced Fourier regression.

Overparameterized (p >= n): the weighted min-norm estimator

    theta_T = S^(2q) F_T^* (F_T S^(2q) F_T^*)^(-1) y,   S = diag(t_T),

is the minimiser of ||S^(-q) theta|| among interpolants with support in T.
It is computed either densely (SVD pseudoinverse of F_T S^q, any p >= n) or
through the circulant structure of the Gram matrix (p a multiple of n,
O(n log n + p)).

Underparameterized (p <= n): least squares; the equispaced geometry gives
F_T^* F_T = n I, so the normal equations collapse to theta_T = F_T^* y / n,
independent of any weighting exponent.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .circulant import equispaced_predict, fold_mod, fourier_matrix
from .errors import ConfigurationError, RegimeError, StructureError
from .model import GridConfig, Spectrum


class SolverPath(enum.Enum):
    DENSE_SVD = "dense_svd"
    CIRCULANT_FFT = "circulant_fft"
    NORMAL_EQUATIONS = "normal_equations"


@dataclass(frozen=True)
class EstimatorResult:
    """Fitted coefficients (zero outside T) plus solve-path metadata."""

    theta_hat: np.ndarray = field(repr=False)  # (D,) complex
    q_used: float
    path: SolverPath
    residual: float  # ||F_T theta_T - y||_2


def solve_weighted_minnorm(features: np.ndarray, weights: np.ndarray, q: float, y: np.ndarray) -> np.ndarray:
    """Minimise ||diag(weights)^(-q) theta|| subject to features @ theta = y.

    Solved through the SVD pseudoinverse of the column-scaled system (lstsq),
    never by explicit Gram inversion.  Also usable with p <= n, where it
    returns the unique least-squares solution instead.
    """
    weights = np.asarray(weights, dtype=float)
    if np.any(weights <= 0):
        raise ConfigurationError("weights must be strictly positive")
    wq = weights ** q if q != 0.0 else np.ones_like(weights)
    beta, *_ = np.linalg.lstsq(features * wq[None, :], np.asarray(y, dtype=complex), rcond=None)
    return wq * beta


def weighted_minnorm(
    y: np.ndarray,
    spectrum: Spectrum,
    grid: GridConfig,
    q: float,
    path: SolverPath | None = None,
) -> EstimatorResult:
    """Fit the (weighted for q > 0, plain for q = 0) min-norm interpolator."""
    y = np.asarray(y, dtype=complex)
    if y.shape != (grid.n,):
        raise ConfigurationError(f"y has shape {y.shape}, expected ({grid.n},)")
    if q < 0:
        raise ConfigurationError(f"weighting exponent q must be >= 0, got {q}")
    if grid.p < grid.n:
        raise RegimeError(f"min-norm estimation needs p >= n, got p={grid.p}, n={grid.n}")
    if path is None:
        path = SolverPath.CIRCULANT_FFT if grid.l is not None else SolverPath.DENSE_SVD
    n, p = grid.n, grid.p
    t_T = spectrum.t[:p]

    if path is SolverPath.CIRCULANT_FFT:
        if grid.l is None:
            raise StructureError(f"circulant path needs p = l*n, got p={p}, n={n}")
        folded = fold_mod(t_T ** (2.0 * q), n)
        # fft(first column of the Gram) carries the aliased sums in
        # index-reversed order under the exp(-2*pi*i*j*k/n) convention
        lam = n * folded[(-np.arange(n)) % n]
        z = np.fft.ifft(np.fft.fft(y) / lam)
        v = n * np.fft.ifft(z)
        theta_T = (t_T ** (2.0 * q)) * np.tile(v, grid.l)
    elif path is SolverPath.DENSE_SVD:
        theta_T = solve_weighted_minnorm(fourier_matrix(n, 0, p), t_T, q, y)
    else:
        raise ConfigurationError(f"unsupported path for min-norm estimation: {path}")

    theta = np.zeros(grid.D, dtype=complex)
    theta[:p] = theta_T
    residual = float(np.linalg.norm(equispaced_predict(theta_T, n) - y))
    return EstimatorResult(theta_hat=theta, q_used=float(q), path=path, residual=residual)


def least_squares(y: np.ndarray, grid: GridConfig) -> EstimatorResult:
    """Least-squares fit for p <= n; the weighting exponent has no effect here."""
    y = np.asarray(y, dtype=complex)
    if y.shape != (grid.n,):
        raise ConfigurationError(f"y has shape {y.shape}, expected ({grid.n},)")
    if grid.p > grid.n:
        raise RegimeError(f"least squares needs p <= n, got p={grid.p}, n={grid.n}")
    theta_T = np.fft.ifft(y)[: grid.p]
    theta = np.zeros(grid.D, dtype=complex)
    theta[: grid.p] = theta_T
    residual = float(np.linalg.norm(equispaced_predict(theta_T, grid.n) - y))
    return EstimatorResult(theta_hat=theta, q_used=0.0, path=SolverPath.NORMAL_EQUATIONS, residual=residual)


def minnorm_kkt_check(result: EstimatorResult, grid: GridConfig, spectrum: Spectrum, q: float) -> float:
    """Stationarity certificate for an overparameterized min-norm fit.

    Returns the norm of the component of S^(-2q) theta_T orthogonal to the
    row space of F_T; it vanishes exactly at the weighted-norm minimiser.
    """
    if grid.p < grid.n:
        raise RegimeError("certificate applies to overparameterized fits only")
    p = grid.p
    gradient = (spectrum.t[:p] ** (-2.0 * q)) * result.theta_hat[:p]
    basis = fourier_matrix(grid.n, 0, p).conj().T  # columns span row space of F_T
    coef, *_ = np.linalg.lstsq(basis, gradient, rcond=None)
    return float(np.linalg.norm(gradient - basis @ coef))
