"""Polynomial trend fitting, automatic degree selection, and removal.

Fitting works in a centered, scaled time basis: raw powers of the sample
index give normal equations with condition number around n**4, while the
centered basis keeps the (degree+1) x (degree+1) system benign for any
length. The fitted trend values are basis-invariant, so removal is not
affected by the change of basis. Assembling the normal equations costs
O(n); no n x n matrix is ever formed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from seasonlen.core import (
    DegreeUnsupportedError,
    InsufficientPointsError,
    LengthMismatchError,
    SingularSystemError,
    TimeSeries,
)

__all__ = [
    "TrendModel",
    "design_matrix",
    "fit_polynomial",
    "select_trend_degree",
    "remove_trend",
]


@dataclass(frozen=True, eq=False)
class TrendModel:
    """A fitted polynomial trend.

    Attributes:
        degree: 1 for linear, 2 for quadratic.
        coefficients: constant term first, in the centered time basis.
        cost: mean squared residual of the fit.
        n: length of the series the model was fitted on; the centered
            basis depends on it, so removal checks it.
    """

    degree: int
    coefficients: np.ndarray
    cost: float
    n: int

    def __post_init__(self) -> None:
        coef = np.array(self.coefficients, dtype=np.float64, copy=True)
        if coef.size != self.degree + 1:
            raise ValueError(f"degree {self.degree} needs {self.degree + 1} coefficients")
        if self.cost < 0:
            raise ValueError("cost cannot be negative")
        coef.flags.writeable = False
        object.__setattr__(self, "coefficients", coef)


def design_matrix(n: int, degree: int) -> np.ndarray:
    """Build the n x (degree+1) regression basis for n samples.

    Column j holds the j-th power of the centered, scaled time index
    (i - (n+1)/2) / n for i = 1..n. The column space equals that of the
    raw powers [1, i, i**2], only better conditioned.

    Raises:
        DegreeUnsupportedError: degree not in {1, 2}.
        InsufficientPointsError: fewer samples than coefficients.
    """
    if degree not in (1, 2):
        raise DegreeUnsupportedError(f"only degrees 1 and 2 are supported, got {degree}")
    if n < degree + 1:
        raise InsufficientPointsError(f"need at least {degree + 1} points, got {n}")
    t = (np.arange(1, n + 1, dtype=np.float64) - (n + 1) / 2.0) / n
    columns = [np.ones(n), t]
    if degree == 2:
        columns.append(t * t)
    return np.column_stack(columns)


def fit_polynomial(series: TimeSeries, degree: int) -> TrendModel:
    """Least-squares fit of a degree-1 or degree-2 polynomial.

    Solves the (degree+1) x (degree+1) normal equations; total cost is
    O(n).

    Raises:
        SingularSystemError: the normal equations are singular. Cannot
            happen for distinct time points, guarded regardless.
    """
    x = series.values
    basis = design_matrix(x.size, degree)
    gram = basis.T @ basis
    rhs = basis.T @ x
    try:
        theta = np.linalg.solve(gram, rhs)
    except np.linalg.LinAlgError as exc:
        raise SingularSystemError(str(exc)) from exc
    residual = x - basis @ theta
    cost = float(residual @ residual) / x.size
    return TrendModel(degree=degree, coefficients=theta, cost=cost, n=x.size)


def select_trend_degree(series: TimeSeries, k_trend: float) -> int:
    """Choose between a linear and a quadratic trend model.

    Degree 2 wins only when the squared-error gap between the two fits,
    totalled over all samples, exceeds exp(k_trend) on the log scale. A
    gap that is zero or negative (possible only through round-off, the
    models are nested) always selects degree 1: a quadratic gain
    indistinguishable from noise never justifies the extra parameter.
    """
    cost_linear = fit_polynomial(series, 1).cost
    cost_quadratic = fit_polynomial(series, 2).cost
    gap = (cost_linear - cost_quadratic) * len(series)
    if gap <= 0.0:
        return 1
    return 2 if math.log(gap) > k_trend else 1


def remove_trend(series: TimeSeries, model: TrendModel) -> TimeSeries:
    """Subtract the fitted trend values from the series.

    Raises:
        LengthMismatchError: the model was fitted on a different length.
    """
    if model.n != len(series):
        raise LengthMismatchError(
            f"model fitted on {model.n} samples, series has {len(series)}"
        )
    basis = design_matrix(model.n, model.degree)
    return TimeSeries(series.values - basis @ model.coefficients, series.delta)
