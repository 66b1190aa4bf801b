# coding: utf-8
"""
This module holds the metrics on S and the slice metric d_st built from them.
"""
from typing import List, Optional, Sequence, Tuple

import numpy as np

from polybrx.extension import BrxContext, BrxZero, Element
from polybrx.monoid import FiniteMonoid

METRIC_TOLERANCE = 1e-12


class BaseMetric:
    """ Metric on the elements of S, bounded by 1, stored as a distance matrix. """

    def __init__(self, matrix, name: str = "custom"):
        """
        :param matrix: n x n array of distances
        :param name: name used in logs and reports
        """
        self.matrix = np.array(matrix, dtype=np.float64)
        if self.matrix.ndim != 2 or self.matrix.shape[0] != self.matrix.shape[1]:
            raise ValueError("Base metric must be a square matrix")
        if self.matrix.max() > 1.0 + METRIC_TOLERANCE:
            i, j = np.argwhere(self.matrix > 1.0 + METRIC_TOLERANCE)[0]
            raise ValueError(
                "Base metric exceeds 1 at ({}, {}): {}; wrap it with truncate()".format(
                    i, j, self.matrix[i, j]
                )
            )
        violation = metric_violation(self.matrix)
        if violation is not None:
            raise ValueError("Base metric is not a metric: {} at {}".format(*violation))
        self.matrix.setflags(write=False)
        self.name = name

    def __call__(self, s: int, t: int) -> float:
        return float(self.matrix[s, t])

    def __len__(self) -> int:
        return self.matrix.shape[0]


def discrete_metric(m: FiniteMonoid) -> BaseMetric:
    return BaseMetric(1.0 - np.eye(m.size), name="discrete")


def gap_metric(m: FiniteMonoid) -> BaseMetric:
    """ |i - j| / (n - 1) on element indices. """
    idx = np.arange(m.size, dtype=np.float64)
    scale = max(m.size - 1, 1)
    return BaseMetric(np.abs(idx[:, None] - idx[None, :]) / scale, name="gap")


def truncate(matrix, name: str = "truncated") -> BaseMetric:
    """ min(d, 1) of any metric, which is again a metric. """
    return BaseMetric(np.minimum(np.asarray(matrix, dtype=np.float64), 1.0), name=name)


BASE_METRICS = {"discrete": discrete_metric, "gap": gap_metric}


def metric_violation(matrix: np.ndarray) -> Optional[Tuple[str, Tuple[int, ...]]]:
    """
    First failure of the metric axioms on a distance matrix.

    :param matrix: n x n distances
    :return: (axiom, indices) or None if all axioms hold
    """
    d = np.asarray(matrix, dtype=np.float64)
    bad = np.argwhere(d < -METRIC_TOLERANCE)
    if len(bad) > 0:
        return "nonnegativity", tuple(int(i) for i in bad[0])
    bad = np.argwhere(np.abs(d - d.T) > METRIC_TOLERANCE)
    if len(bad) > 0:
        return "symmetry", tuple(int(i) for i in bad[0])
    zero = np.abs(d) <= METRIC_TOLERANCE
    bad = np.argwhere(zero != np.eye(d.shape[0], dtype=bool))
    if len(bad) > 0:
        return "identity_of_indiscernibles", tuple(int(i) for i in bad[0])
    for j in range(d.shape[0]):
        # d[i, k] <= d[i, j] + d[j, k] for all i, k
        bad = np.argwhere(d > d[:, j][:, None] + d[j, :][None, :] + METRIC_TOLERANCE)
        if len(bad) > 0:
            i, k = (int(t) for t in bad[0])
            return "triangle", (i, j, k)
    return None


def d_st(ctx: BrxContext, d_S: BaseMetric, x: Element, y: Element) -> float:
    """
    Distance between extension elements: d_S(s, t) inside one slice, 1 across
    slices and between the zero and anything else.
    """
    if len(d_S) != ctx.monoid.size:
        raise ValueError(
            "Base metric on {} points used with {}".format(len(d_S), ctx.monoid.name)
        )
    if x == y:
        return 0.0
    if isinstance(x, BrxZero) or isinstance(y, BrxZero) or x.p != y.p:
        return 1.0
    return d_S(x.s, y.s)


def distance_matrix(ctx: BrxContext, d_S: BaseMetric, elements: Sequence[Element]) -> np.ndarray:
    n = len(elements)
    d = np.zeros((n, n), dtype=np.float64)
    for i in range(n):
        for j in range(i + 1, n):
            d[i, j] = d[j, i] = d_st(ctx, d_S, elements[i], elements[j])
    return d


def open_ball(
    ctx: BrxContext,
    d_S: BaseMetric,
    elements: Sequence[Element],
    center: Element,
    radius: float,
) -> List[Element]:
    """ Elements of `elements` at distance < radius from center. """
    return [x for x in elements if d_st(ctx, d_S, center, x) < radius]
