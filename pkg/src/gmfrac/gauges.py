"""Gauge calculus for the homogeneous case ``B = 0``.

Only when ``B = 0`` does the hull contain the origin, so only then is the
support function a gauge (of the polar set) and the hull's own gauge
available in closed form.  The gauge of ``(Y, W)`` is the smallest ``t``
with ``1/2 Y Y^T <= t (-W)``, which by the standard semidefinite-domination
lemma (``Y Y^T <= c G`` iff ``rge Y subset rge G`` and ``Y^T G^+ Y <= c I``)
equals

    gauge(Y, W) = 1/2 * lambda_max( S U^T (-W)^+ U S )

with reduced SVD ``Y = U S V^T``, on the domain ``rge Y subset ker A
intersect rge W``, ``W`` in the polar cone.  Equivalently the value is
``1/2 / sigma_min`` of the critical matrix, the pseudoinverse of
``-Y^T W^+ Y``; note the block of the inverse here, not the inverse of the
block: compressing ``W`` itself to ``rge Y`` would drop the coupling
between ``rge Y`` and the rest of the kernel and can understate the gauge.
A missing nonzero singular value (``rank_tol`` decides "nonzero") means
gauge zero, e.g. ``Y = 0`` with ``W`` in the polar cone.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .linalg import range_inclusion, sym_pinv, symmetrize
from .cones import in_polar_cone
from .support import PreconditionError, eval_support

__all__ = [
    "GaugeResult",
    "in_scaled_hull",
    "eval_gauge",
    "eval_polar_gauge",
]


@dataclass
class GaugeResult:
    """Gauge value with the spectral data that produced it.

    ``finite`` is the explicit +inf flag.  ``critical_matrix`` is the m-by-m
    matrix ``-Y^+ W (Y^+)^T`` when it was formed, and ``sigma_min`` its
    smallest nonzero singular value (``None`` encodes "no nonzero singular
    value", in which case the gauge is 0 by the ``1/inf = 0`` convention).
    """

    finite: bool
    value: Optional[float] = None
    critical_matrix: Optional[np.ndarray] = None
    sigma_min: Optional[float] = None

    @classmethod
    def infinite(cls):
        return cls(finite=False)


def _require_homogeneous(pair):
    if not pair.homogeneous:
        raise PreconditionError("gauge calculus requires B = 0")


def in_scaled_hull(point, t, pair):
    """Membership of ``(Y, W)`` in ``t`` times the hull of the ``B = 0`` set.

    The scaled set is ``{(Y, W) : A Y = 0 and 1/2 Y Y^T + t W in polar}``;
    the same formula is applied at ``t = 0``.  Membership is upward closed
    in ``t`` on ``(0, inf)`` because the hull is convex and contains the
    origin.

    Raises
    ------
    PreconditionError
        If the pair has ``B != 0``.
    ValueError
        If ``t < 0``.
    """
    _require_homogeneous(pair)
    if t < 0:
        raise ValueError(f"scale t must be nonnegative, got {t!r}")
    if float(np.linalg.norm(pair.A @ point.Y)) > pair.tol.feas_tol:
        return False
    gap = symmetrize(0.5 * (point.Y @ point.Y.T) + t * point.W)
    return in_polar_cone(gap, pair.kernel, tol=pair.tol)


def eval_gauge(point, pair):
    """Closed-form gauge of the hull of the ``B = 0`` graph set.

    Returns an infinite result unless ``rge Y subset ker A``,
    ``rge Y subset rge W`` and ``W`` lies in the polar cone.  On that domain
    the value is ``1/2 / sigma_min`` of the critical matrix (see module
    docstring); a numerically zero ``Y`` gives gauge 0.

    Raises
    ------
    PreconditionError
        If the pair has ``B != 0``.
    """
    _require_homogeneous(pair)
    tol = pair.tol
    Y = point.Y
    W = point.W
    if not (
        range_inclusion(Y, pair.kernel.projector, tol=tol)
        and range_inclusion(Y, W, tol=tol)
        and in_polar_cone(W, pair.kernel, tol=tol)
    ):
        return GaugeResult.infinite()
    if float(np.linalg.norm(Y)) <= tol.eq_tol:
        return GaugeResult(finite=True, value=0.0)
    u, s, vt = np.linalg.svd(Y, full_matrices=False)
    rank = int(np.sum(s > tol.rank_tol * s[0]))
    ur, sr, vr = u[:, :rank], s[:rank], vt[:rank].T
    # compressed form of Y^T (-W)^+ Y; its top eigenvalue decides the gauge
    neg_w_pinv = sym_pinv(-W, tol=tol)
    reduced = symmetrize((ur.T @ neg_w_pinv @ ur) * np.outer(sr, sr))
    lam, q = np.linalg.eigh(reduced)
    top = float(lam[-1])
    keep = lam > tol.rank_tol * top if top > 0 else np.zeros_like(lam, dtype=bool)
    if not np.any(keep):
        return GaugeResult(finite=True, value=0.0)
    # critical matrix = pinv(-Y^T W^+ Y); its smallest nonzero singular
    # value is 1 / lambda_max(reduced)
    inv = np.where(keep, np.divide(1.0, lam, where=keep), 0.0)
    critical = symmetrize((vr @ q * inv) @ (vr @ q).T)
    sigma_min = 1.0 / top
    return GaugeResult(
        finite=True, value=0.5 * top, critical_matrix=critical, sigma_min=sigma_min
    )


def eval_polar_gauge(dual, pair):
    """Gauge of the polar set, which equals the support value at ``(X, V)``.

    Returns ``math.inf`` outside the support-function domain.

    Raises
    ------
    PreconditionError
        If the pair has ``B != 0``.
    """
    _require_homogeneous(pair)
    res = eval_support(dual, pair)
    return res.value if res.finite else math.inf
