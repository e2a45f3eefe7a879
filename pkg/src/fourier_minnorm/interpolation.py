"""Function interpolation with truncated Fourier models on periodic grids.

Each problem lives on a d-torus of per-axis domain [x0, x0 + L); the basis
functions are exp(2*pi*i*k*(x - x0)/L) for integer k, and training samples
sit on the equispaced tensor grid x_j = x0 + L*j/n per axis.  (For the
[-1, 1) targets, L = 2 makes this the family exp(pi*i*k*x) up to a unit
per-mode phase, which changes neither fits nor norms.)

A truncation of size m per axis keeps the m frequencies
[0, 1, ..., ceil(m/2)-1, -floor(m/2), ..., -1] (the standard FFT aliasing
order, so odd m = 2h+1 gives the symmetric window {-h, ..., h}).

Frequency weighting uses (1 + |k|)^(-1) per axis; in d > 1 either the
separable product of axis weights or the non-separable Euclidean variant
(1 + ||k||_2)^(-1).  Separable fits go through the Kronecker identity
(A (x) B)^+ = A^+ (x) B^+ one axis at a time; the Euclidean weight needs one
dense solve on the flattened system.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import ConfigurationError, RegimeError, UnknownTargetError
from .estimators import solve_weighted_minnorm

UNIT_DOMAIN = (0.0, 1.0)


class Method(enum.Enum):
    LEAST_SQUARES = "least-squares"
    PLAIN_MIN_NORM = "plain-min-norm"
    WEIGHTED_MIN_NORM = "weighted-min-norm"


class WeightKind(enum.Enum):
    SEPARABLE = "separable"
    EUCLIDEAN = "euclidean"


def symmetric_frequencies(m: int) -> np.ndarray:
    """Integer frequencies kept by an m-term truncation, FFT aliasing order."""
    if m < 1:
        raise ConfigurationError(f"truncation size must be >= 1, got {m}")
    return np.concatenate([np.arange(0, (m + 1) // 2), np.arange(-(m // 2), 0)])


def frequency_to_index(k: int, m: int) -> int:
    """Column index of frequency k in the m-term layout (inverse mapping)."""
    half = (m + 1) // 2
    if not -(m // 2) <= k < half:
        raise ConfigurationError(f"frequency {k} outside the size-{m} window")
    return k if k >= 0 else k + m


def axis_weights(m: int) -> np.ndarray:
    """Per-axis weights (1 + |k|)^(-1) in the m-term frequency layout."""
    return 1.0 / (1.0 + np.abs(symmetric_frequencies(m)))


def tensor_weights(m: int, d: int, kind: WeightKind) -> np.ndarray:
    """Weight tensor of shape (m,)*d for the chosen variant."""
    if kind is WeightKind.SEPARABLE:
        w = axis_weights(m)
        out = w
        for _ in range(d - 1):
            out = np.multiply.outer(out, w)
        return np.asarray(out)
    sq = symmetric_frequencies(m).astype(float) ** 2
    norm_sq = sq
    for _ in range(d - 1):
        norm_sq = np.add.outer(norm_sq, sq)
    return 1.0 / (1.0 + np.sqrt(norm_sq))


def sample_axis(n: int, domain: tuple[float, float] = UNIT_DOMAIN) -> np.ndarray:
    """n equispaced points on the periodic interval [x0, x0 + L)."""
    start, length = domain
    return start + length * np.arange(n) / n


def axis_feature_matrix(x: np.ndarray, m: int, domain: tuple[float, float] = UNIT_DOMAIN) -> np.ndarray:
    """Entries exp(2*pi*i*k*(x - x0)/L) for the m-term frequency layout."""
    start, length = domain
    u = (np.asarray(x, dtype=float) - start) / length
    return np.exp(2j * np.pi * np.outer(u, symmetric_frequencies(m)))


# ---------------------------------------------------------------------------
# Built-in targets
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class Target:
    name: str
    dimension: int
    domain: tuple[float, float]  # per-axis (start, length)
    fn: Callable[[np.ndarray], np.ndarray]

    def __call__(self, points: np.ndarray) -> np.ndarray:
        return self.fn(points)


def _stage(x: np.ndarray) -> np.ndarray:
    return np.where(np.asarray(x) < 0.0, -1.0, 1.0)


def _cubic(x: np.ndarray) -> np.ndarray:
    x = np.asarray(x)
    return 2.5 * (x**3 - x)


def _cos2d(points: np.ndarray) -> np.ndarray:
    pts = np.asarray(points)
    return np.cos(6.28 * (2.0 * pts[..., 0] + 3.0 * pts[..., 1]))


_TARGETS = {
    "stage1d": Target("stage1d", 1, (-1.0, 2.0), _stage),
    "cubic1d": Target("cubic1d", 1, (-1.0, 2.0), _cubic),
    "cos2d": Target("cos2d", 2, (0.0, 1.0), _cos2d),
}


def builtin_targets(name: str) -> Target:
    try:
        return _TARGETS[name]
    except KeyError:
        raise UnknownTargetError(f"unknown target {name!r}; choices: {sorted(_TARGETS)}") from None


# ---------------------------------------------------------------------------
# Problems and fits
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class InterpolationProblem:
    """One interpolation task: target, grid sizes, weighting, optional noise.

    ``target`` is either a built-in name or an array of tabulated samples on
    the training grid (shape (n_axis,)*dimension, row-major axis order).
    The periodic domain defaults to the built-in target's; tabulated samples
    default to [0, 1) per axis.
    """

    dimension: int
    n_axis: int
    p_axis: int
    D_axis: int
    q: float
    target: str | np.ndarray
    noise_sigma: float = 0.0
    weight_kind: WeightKind = WeightKind.EUCLIDEAN
    noise_seed: int = 0
    domain: tuple[float, float] | None = None

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise ConfigurationError(f"dimension must be >= 1, got {self.dimension}")
        if self.n_axis < 1 or self.p_axis < 1:
            raise ConfigurationError("per-axis sample and truncation counts must be >= 1")
        if self.p_axis > self.D_axis:
            raise ConfigurationError(f"p_axis={self.p_axis} exceeds ambient D_axis={self.D_axis}")
        if self.noise_sigma < 0:
            raise ConfigurationError(f"noise_sigma must be >= 0, got {self.noise_sigma}")
        if self.q < 0:
            raise ConfigurationError(f"q must be >= 0, got {self.q}")
        if isinstance(self.target, str):
            named = builtin_targets(self.target)
            if named.dimension != self.dimension:
                raise ConfigurationError(f"target {self.target!r} is {named.dimension}-dimensional")
            if self.domain is None:
                object.__setattr__(self, "domain", named.domain)
        elif self.domain is None:
            object.__setattr__(self, "domain", UNIT_DOMAIN)

    def axes(self, points_per_axis: int | None = None) -> list[np.ndarray]:
        m = self.n_axis if points_per_axis is None else points_per_axis
        return [sample_axis(m, self.domain)] * self.dimension


def training_grid(problem: InterpolationProblem) -> np.ndarray:
    """Training points, shape (n_axis,)*d + (d,)."""
    mesh = np.meshgrid(*problem.axes(), indexing="ij")
    return np.stack(mesh, axis=-1)


def training_samples(problem: InterpolationProblem) -> tuple[np.ndarray, np.ndarray]:
    """(clean, observed) sample tensors on the training grid."""
    d, n = problem.dimension, problem.n_axis
    if isinstance(problem.target, str):
        target = builtin_targets(problem.target)
        pts = training_grid(problem)
        clean = target(pts[..., 0]) if d == 1 else target(pts)
    else:
        clean = np.asarray(problem.target).reshape((n,) * d)
    if problem.noise_sigma > 0:
        rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy=problem.noise_seed)))
        observed = clean + problem.noise_sigma * rng.standard_normal(clean.shape)
    else:
        observed = clean
    return clean, observed


@dataclass(frozen=True)
class FittedInterpolant:
    """Coefficient tensor of shape (p_axis,)*d plus fit diagnostics.

    weighted_norm is ||W^(-q) theta|| for the problem's weight tensor (the
    quantity the weighted estimator minimises); plain_norm is ||theta||.
    """

    coefficients: np.ndarray = field(repr=False)
    method: Method
    q: float
    weight_kind: WeightKind
    residual: float
    weighted_norm: float
    plain_norm: float
    problem: InterpolationProblem = field(repr=False)

    def evaluate(self, axes: Sequence[np.ndarray]) -> np.ndarray:
        return evaluate_interpolant(self.coefficients, axes, self.problem.domain)


def _apply_per_axis(matrix: np.ndarray, tensor: np.ndarray) -> np.ndarray:
    """Apply one matrix along every axis of a tensor (same matrix per axis)."""
    out = tensor
    for _ in range(tensor.ndim):
        out = np.tensordot(matrix, out, axes=(1, 0))
        out = np.moveaxis(out, 0, -1)
    return out


def fit_interpolant(problem: InterpolationProblem, method: Method) -> FittedInterpolant:
    """Fit the chosen estimator; see the module docstring for the solve paths."""
    d, n, p = problem.dimension, problem.n_axis, problem.p_axis
    if method is Method.LEAST_SQUARES and p > n:
        raise RegimeError(f"least squares needs p_axis <= n_axis, got {p} > {n}")
    if method is not Method.LEAST_SQUARES and p < n:
        raise RegimeError(f"min-norm interpolation needs p_axis >= n_axis, got {p} < {n}")

    _, observed = training_samples(problem)
    phi = axis_feature_matrix(sample_axis(n, problem.domain), p, problem.domain)
    q_eff = problem.q if method is Method.WEIGHTED_MIN_NORM else 0.0

    if d == 1:
        theta = solve_weighted_minnorm(phi, axis_weights(p), q_eff, observed)
    elif method is Method.WEIGHTED_MIN_NORM and problem.weight_kind is WeightKind.EUCLIDEAN:
        if d > 3:
            raise ConfigurationError("dense Euclidean-weight solve is limited to d <= 3")
        flat_features = phi
        for _ in range(d - 1):
            flat_features = np.kron(flat_features, phi)
        w_flat = tensor_weights(p, d, WeightKind.EUCLIDEAN).ravel()
        theta = solve_weighted_minnorm(flat_features, w_flat, q_eff, observed.ravel())
    else:
        # Separable (or unweighted) case: pseudoinvert one axis at a time.
        wq = axis_weights(p) ** q_eff
        pinv = np.linalg.pinv(phi * wq[None, :])
        beta = _apply_per_axis(pinv, observed.astype(complex))
        theta = beta * tensor_weights(p, d, WeightKind.SEPARABLE) ** q_eff

    theta = np.asarray(theta).reshape((p,) * d)
    y_hat = evaluate_interpolant(theta, problem.axes(), problem.domain)
    residual = float(np.linalg.norm((y_hat - observed).ravel()))
    w_tensor = tensor_weights(p, d, problem.weight_kind)
    weighted_norm = float(np.linalg.norm((theta / w_tensor**problem.q).ravel()))
    theta.setflags(write=False)
    return FittedInterpolant(
        coefficients=theta,
        method=method,
        q=problem.q,
        weight_kind=problem.weight_kind,
        residual=residual,
        weighted_norm=weighted_norm,
        plain_norm=float(np.linalg.norm(theta.ravel())),
        problem=problem,
    )


def evaluate_interpolant(
    coefficients: np.ndarray,
    axes: Sequence[np.ndarray],
    domain: tuple[float, float] = UNIT_DOMAIN,
) -> np.ndarray:
    """Synthesise the truncated Fourier series on a tensor evaluation grid.

    ``axes`` holds one 1-D point array per dimension; the result has shape
    (len(axes[0]), ..., len(axes[d-1])) and is complex (imaginary parts of
    fits to real data are rounding-level).
    """
    coefficients = np.asarray(coefficients)
    if coefficients.ndim != len(axes):
        raise ConfigurationError(
            f"coefficient tensor is {coefficients.ndim}-dimensional but {len(axes)} axes were given"
        )
    out = coefficients.astype(complex)
    for ax in axes:
        m = out.shape[0]
        out = np.tensordot(axis_feature_matrix(ax, m, domain), out, axes=(1, 0))
        out = np.moveaxis(out, 0, -1)
    return out


def dense_grid_rmse(fit: FittedInterpolant, points_per_axis: int) -> float:
    """RMSE of the interpolant against the named target on a dense tensor grid."""
    problem = fit.problem
    if not isinstance(problem.target, str):
        raise ConfigurationError("dense-grid RMSE needs a named target")
    target = builtin_targets(problem.target)
    axes = problem.axes(points_per_axis)
    values = fit.evaluate(axes)
    mesh = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1)
    truth = target(mesh[..., 0]) if problem.dimension == 1 else target(mesh)
    return float(np.sqrt(np.mean(np.abs(values - truth) ** 2)))
