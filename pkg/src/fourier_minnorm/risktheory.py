"""Exact risk expressions, asymptotic bounds, and concentration constants.

Risk means E ||theta - theta_hat||^2 over coefficients with E[theta] = 0 and
E[theta theta^*] = c_r diag(t^(2r)) (unit trace).  Two independent routes are
provided for each regime and cross-validated in the tests:

* closed forms over aliased index sums (aligned grids, O(D) time);
* trace forms that materialise the feature matrices densely (any grid with
  the right (n, p) ordering; the oracle route).

Overparameterized closed form, with A(k, u) = sum over nu < l of t_{k+n*nu}^u
and C(k, u) the same sum over nu in [l, tau):

    P_q  = c_r * sum_k A(k, 2q+2r) / A(k, 2q)
    Q_q1 = c_r * sum_k A(k, 4q) A(k, 2r) / A(k, 2q)^2
    Q_q2 = c_r * sum_k A(k, 4q) C(k, 2r) / A(k, 2q)^2
    risk = 1 - 2 P_q + Q_q1 + Q_q2
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .circulant import fourier_matrix
from .errors import (
    ConfigurationError,
    NumericalInconsistencyError,
    RegimeError,
    SingularConstantError,
    StructureError,
)
from .model import COMPENSATED_SUM_MIN_D, GridConfig, Spectrum, classify_grid, folded_sums

# Risks are expectations of squared norms; tiny negatives are rounding noise
# and reported as 0, anything worse indicates a bug.
NEGATIVE_RISK_TOLERANCE = 1e-10


@dataclass(frozen=True)
class RiskBreakdown:
    P_q: float
    Q_q1: float
    Q_q2: float
    risk: float
    clamped: bool = False


@dataclass(frozen=True)
class BoundReport:
    a: float
    b: float
    d_r: float
    bound: float
    large_D_bound: float


class ConcentrationBound(NamedTuple):
    T_q: float
    tail: float


class LowestRisks(NamedTuple):
    under_star: float
    over_star: float
    argmin_p_over: int


def _finalize_risk(value: float) -> tuple[float, bool]:
    if value >= 0.0:
        return value, False
    if value >= -NEGATIVE_RISK_TOLERANCE:
        return 0.0, True
    raise NumericalInconsistencyError(f"risk evaluated to {value}, below -{NEGATIVE_RISK_TOLERANCE}")


def _require_aligned_over(grid: GridConfig) -> None:
    if grid.p < grid.n:
        raise RegimeError(f"overparameterized form needs p >= n, got p={grid.p}, n={grid.n}")
    if grid.l is None or grid.tau is None:
        raise StructureError(
            f"closed form needs p = l*n and D = tau*n, got D={grid.D}, n={grid.n}, p={grid.p}"
        )


def risk_over_closed(spectrum: Spectrum, grid: GridConfig, q: float) -> RiskBreakdown:
    """Closed-form risk of the weighted min-norm estimator on aligned grids."""
    _require_aligned_over(grid)
    if q < 0:
        raise ConfigurationError(f"weighting exponent q must be >= 0, got {q}")
    n, p, D = grid.n, grid.p, grid.D
    r = spectrum.decay_r
    comp = spectrum.D >= COMPENSATED_SUM_MIN_D
    t_T = spectrum.t[:p]

    a_2q = folded_sums(t_T ** (2.0 * q), n, comp)
    a_2q2r = folded_sums(t_T ** (2.0 * q + 2.0 * r), n, comp)
    a_4q = folded_sums(t_T ** (4.0 * q), n, comp)
    a_2r = folded_sums(t_T ** (2.0 * r), n, comp)
    c_2r = folded_sums(spectrum.t[p:] ** (2.0 * r), n, comp) if p < D else np.zeros(n)

    cr = spectrum.c_r
    P_q = cr * float(np.sum(a_2q2r / a_2q))
    Q_q1 = cr * float(np.sum(a_4q * a_2r / a_2q**2))
    Q_q2 = cr * float(np.sum(a_4q * c_2r / a_2q**2))
    risk, clamped = _finalize_risk(1.0 - 2.0 * P_q + Q_q1 + Q_q2)
    return RiskBreakdown(P_q=P_q, Q_q1=Q_q1, Q_q2=Q_q2, risk=risk, clamped=clamped)


def risk_over_plain(spectrum: Spectrum, grid: GridConfig) -> float:
    """Closed-form risk of the plain (q = 0) min-norm estimator."""
    _require_aligned_over(grid)
    n, p = grid.n, grid.p
    tail = spectrum.tail_sum(2.0 * spectrum.decay_r, start=p)
    value = 1.0 - n / p + (2.0 * n / p) * spectrum.c_r * tail
    risk, _ = _finalize_risk(value)
    return risk


def risk_trace_over(spectrum: Spectrum, grid: GridConfig, q: float) -> RiskBreakdown:
    """Dense trace-form risk; works on misaligned grids too (oracle route).

    Evaluated through the SVD of the column-weighted feature matrix rather
    than the inverted Gram: with F Sigma^q = U diag(s) V^*, the three traces
    collapse to

        P_q  = tr(K V V^*),
        Q_q1 = tr((V^* Sigma^{2q} V)(V^* K Sigma^{-2q} V)),
        Q_q2 = tr(diag(1/s) (V^* Sigma^{2q} V) diag(1/s) U^* M_c U),

    in which the singular values cancel everywhere except the benign Q_q2
    factor, keeping the oracle accurate at large weighting exponents.
    """
    if grid.p < grid.n:
        raise RegimeError(f"overparameterized form needs p >= n, got p={grid.p}, n={grid.n}")
    if q < 0:
        raise ConfigurationError(f"weighting exponent q must be >= 0, got {q}")
    n, p, D = grid.n, grid.p, grid.D
    r = spectrum.decay_r
    t = spectrum.t
    k_diag = spectrum.c_r * t ** (2.0 * r)

    f_T = fourier_matrix(n, 0, p)
    wq = t[:p] ** q
    u, sv, vh = np.linalg.svd(f_T * wq[None, :], full_matrices=False)
    v = vh.conj().T  # (p, n), orthonormal columns

    P_q = float(np.sum(k_diag[:p] * np.sum(np.abs(v) ** 2, axis=1)))
    a = v.conj().T @ ((t[:p] ** (2.0 * q))[:, None] * v)
    b = v.conj().T @ ((k_diag[:p] * t[:p] ** (-2.0 * q))[:, None] * v)
    Q_q1 = float(np.sum(a * b.T).real)
    if p < D:
        f_c = fourier_matrix(n, p, D)
        m_c = (f_c * k_diag[p:][None, :]) @ f_c.conj().T
        m_tilde = u.conj().T @ m_c @ u
        Q_q2 = float(np.sum((a / np.outer(sv, sv)) * m_tilde.T).real)
    else:
        Q_q2 = 0.0
    risk, clamped = _finalize_risk(1.0 - 2.0 * P_q + Q_q1 + Q_q2)
    return RiskBreakdown(P_q=P_q, Q_q1=Q_q1, Q_q2=Q_q2, risk=risk, clamped=clamped)


def risk_under_closed(spectrum: Spectrum, grid: GridConfig) -> float:
    """Closed-form least-squares risk for p <= n on grids with D = tau*n."""
    if grid.p > grid.n:
        raise RegimeError(f"underparameterized form needs p <= n, got p={grid.p}, n={grid.n}")
    if grid.tau is None:
        raise StructureError(f"closed form needs D = tau*n, got D={grid.D}, n={grid.n}")
    n, p, tau = grid.n, grid.p, grid.tau
    t2r = spectrum.t_pow(2.0 * spectrum.decay_r)
    tail = math.fsum(t2r[p:])
    folded_head = math.fsum(t2r[k * n + j] for k in range(1, tau) for j in range(p))
    risk, _ = _finalize_risk(spectrum.c_r * (tail + folded_head))
    return risk


def risk_trace_under(spectrum: Spectrum, grid: GridConfig) -> float:
    """Dense trace-form least-squares risk; no divisibility requirement."""
    if grid.p > grid.n:
        raise RegimeError(f"underparameterized form needs p <= n, got p={grid.p}, n={grid.n}")
    n, p, D = grid.n, grid.p, grid.D
    k_diag = spectrum.c_r * spectrum.t ** (2.0 * spectrum.decay_r)
    if p == D:
        return 0.0
    f_T = fourier_matrix(n, 0, p)
    f_c = fourier_matrix(n, p, D)
    ftf = f_T.conj().T @ f_T
    inv2 = np.linalg.inv(ftf @ ftf)
    cross = f_T.conj().T @ (f_c * k_diag[p:][None, :])
    back = f_c.conj().T @ f_T
    value = math.fsum(k_diag[p:]) + float(np.trace(inv2 @ cross @ back).real)
    risk, _ = _finalize_risk(value)
    return risk


def asymptotic_bound(spectrum: Spectrum, grid: GridConfig) -> BoundReport:
    """Rate bound for the weighted min-norm risk at matched exponent q = r.

    Valid for r > 1/2 and p = l*n with l >= 2; the reported bound dominates
    the closed-form risk on that domain.
    """
    _require_aligned_over(grid)
    r = spectrum.decay_r
    if r <= 0.5:
        raise RegimeError(f"rate bound requires r > 1/2, got r={r}")
    if grid.l < 2:
        raise RegimeError(f"rate bound requires l >= 2, got l={grid.l}")
    n, p, D, l = grid.n, grid.p, grid.D, grid.l
    d_r = (2.0 ** (-2.0 * r + 1.0) - float(l + 1) ** (-2.0 * r + 1.0)) / (2.0 * r - 1.0)
    shrink = 1.0 + d_r * float(n) ** (-2.0 * r)
    denom = shrink * (1.0 - float(D + 1) ** (-2.0 * r + 1.0))
    a = (2.0 + d_r * float(n) ** (-2.0 * r)) / denom
    b = d_r / denom
    bound = a * float(n) ** (-2.0 * r + 1.0) + b * float(n) ** (-2.0 * r) * float(p) ** (-2.0 * r + 1.0)
    large_D = 2.0 * float(n) ** (-2.0 * r + 1.0) + (2.0 / (2.0 * r - 1.0)) * float(2 * n) ** (
        -2.0 * r
    ) * float(p) ** (-2.0 * r + 1.0)
    return BoundReport(a=a, b=b, d_r=d_r, bound=bound, large_D_bound=large_D)


def concentration_bound(r: float, q: float, t: float) -> ConcentrationBound:
    """Sub-Gaussian deviation constant T_q and the two-sided tail at level t.

    Requires r >= q > 1/2: the constant diverges at q = 1/2 and the inner
    polynomial changes sign below it, so those exponents are rejected.
    """
    if q <= 0.5:
        raise SingularConstantError(f"T_q is undefined for q <= 1/2, got q={q}")
    if r < q:
        raise RegimeError(f"concentration bound requires r >= q, got r={r}, q={q}")
    if t < 0:
        raise ConfigurationError(f"deviation level t must be >= 0, got {t}")
    poly = q * (24.0 * q * q - 17.0 * q + 3.0)
    T_q = 4.0 * (2.0 * r - 1.0) * math.sqrt(poly / ((2.0 * q - 1.0) ** 2 * (4.0 * q - 1.0)))
    tail = 2.0 * math.exp(-min(t * t / (T_q * T_q), t / T_q))
    return ConcentrationBound(T_q=T_q, tail=tail)


def lowest_risks(spectrum: Spectrum, n: int, q: float) -> LowestRisks:
    """Lowest under-regime risk and the best aligned overparameterized risk.

    The under-regime optimum is attained at p = n; the over-regime value
    scans p in {n, 2n, ..., D} with the closed form.  For q >= r >= 1 the
    over-regime minimum is strictly smaller.
    """
    D = spectrum.D
    if D % n != 0:
        raise StructureError(f"scan needs D = tau*n, got D={D}, n={n}")
    under_star = 2.0 * spectrum.c_r * spectrum.tail_sum(2.0 * spectrum.decay_r, start=n)
    over_star = math.inf
    argmin_p = n
    for l in range(1, D // n + 1):
        p = l * n
        value = risk_over_closed(spectrum, classify_grid(D, n, p), q).risk
        if value < over_star:
            over_star = value
            argmin_p = p
    return LowestRisks(under_star=under_star, over_star=over_star, argmin_p_over=argmin_p)


def theory_risk(spectrum: Spectrum, grid: GridConfig, q: float) -> float:
    """Regime-dispatched theoretical risk for one configuration.

    Closed forms on aligned grids, dense trace forms otherwise.  For p <= n
    the value is independent of q.
    """
    if grid.p <= grid.n:
        if grid.tau is not None:
            return risk_under_closed(spectrum, grid)
        return risk_trace_under(spectrum, grid)
    if grid.l is not None and grid.tau is not None:
        return risk_over_closed(spectrum, grid, q).risk
    return risk_trace_over(spectrum, grid, q).risk
