"""The closed convex hull of the constrained quadratic graph set.

The graph set ``{(Y, -1/2 Y Y^T) : A Y = B}`` is nonconvex, but its closed
convex hull has the simple description

    { (Y, W) : A Y = B  and  1/2 Y Y^T + W in (polar cone of K) },

where K is the cone of matrices PSD on ``ker A``.  This module implements
membership for the hull, its relative interior and affine hull, the
``(A, B) = (0, 0)`` special case, the polar set, both horizon cones, and an
explicit Caratheodory-style convex-combination witness that approximates any
hull point by graph points to accuracy ``O(sqrt(eps))``.
"""

from dataclasses import dataclass

import numpy as np

from .linalg import DEFAULT_TOL, frobenius_inner, symmetrize
from .cones import in_aff_polar, in_polar_cone, in_rint_polar
from .support import PreconditionError, eval_support

__all__ = [
    "PrimalPoint",
    "ConvexWitness",
    "graph_point",
    "pairing",
    "distance",
    "in_hull",
    "in_hull_rint",
    "in_hull_aff",
    "in_free_hull",
    "in_hull_polar",
    "in_hull_horizon",
    "in_hull_polar_horizon",
    "caratheodory_witness",
]


@dataclass
class PrimalPoint:
    """A point ``(Y, W)`` tested against the hull, normal cones, and gauges.

    ``W`` is symmetrized on entry.
    """

    Y: np.ndarray
    W: np.ndarray

    def __post_init__(self):
        self.Y = np.asarray(self.Y, dtype=float)
        if self.Y.ndim == 1:
            self.Y = self.Y.reshape(-1, 1)
        self.W = symmetrize(self.W)
        if self.Y.shape[0] != self.W.shape[0]:
            raise ValueError(
                f"Y has {self.Y.shape[0]} rows but W is {self.W.shape[0]}x{self.W.shape[1]}"
            )

    def norm(self):
        return float(np.sqrt(np.linalg.norm(self.Y) ** 2 + np.linalg.norm(self.W) ** 2))

    def scaled(self, t):
        return PrimalPoint(t * self.Y, t * self.W)


def graph_point(Y):
    """The graph set point ``(Y, -1/2 Y Y^T)``."""
    Y = np.asarray(Y, dtype=float)
    if Y.ndim == 1:
        Y = Y.reshape(-1, 1)
    return PrimalPoint(Y, -0.5 * (Y @ Y.T))


def pairing(dual, primal):
    """Duality pairing ``<(X, V), (Y, W)> = tr(X^T Y) + tr(V W)``."""
    return frobenius_inner(dual.X, primal.Y) + frobenius_inner(dual.V, primal.W)


def distance(a, b):
    """Distance ``sqrt(||Ya - Yb||_F^2 + ||Wa - Wb||_F^2)`` between points."""
    return float(
        np.sqrt(np.linalg.norm(a.Y - b.Y) ** 2 + np.linalg.norm(a.W - b.W) ** 2)
    )


def _gap(point):
    # the matrix 1/2 Y Y^T + W whose polar-cone membership characterizes the hull
    return symmetrize(0.5 * (point.Y @ point.Y.T) + point.W)


def _feasible(point, pair):
    resid = pair.A @ point.Y - pair.B
    return float(np.linalg.norm(resid)) <= pair.tol.feas_tol * max(
        1.0, float(np.linalg.norm(pair.B))
    )


def in_hull(point, pair):
    """Hull membership: ``A Y = B`` and ``1/2 Y Y^T + W`` in the polar cone."""
    return _feasible(point, pair) and in_polar_cone(_gap(point), pair.kernel, tol=pair.tol)


def in_hull_rint(point, pair):
    """Relative-interior membership: the gap matrix lies in rint of the polar."""
    return _feasible(point, pair) and in_rint_polar(_gap(point), pair.kernel, tol=pair.tol)


def in_hull_aff(point, pair):
    """Affine-hull membership: ``A Y = B`` and ``rge(1/2 Y Y^T + W) subset ker A``."""
    return _feasible(point, pair) and in_aff_polar(_gap(point), pair.kernel, tol=pair.tol)


def in_free_hull(point, strict=False, tol=DEFAULT_TOL):
    """Membership for the unconstrained special case ``A = B = 0``.

    The hull of ``{(Y, -1/2 Y Y^T) : Y arbitrary}`` is
    ``{(Y, W) : W + 1/2 Y Y^T <= 0}`` and its interior replaces ``<=`` by
    strict definiteness.  Decided directly through ``lambda_max`` thresholds.
    """
    lam_max = float(np.linalg.eigvalsh(_gap(point))[-1])
    if strict:
        return lam_max < -tol.psd_tol
    return lam_max <= tol.psd_tol


def in_hull_polar(dual, pair):
    """Polar-set membership: support value at ``(X, V)`` finite and ``<= 1``."""
    res = eval_support(dual, pair)
    return res.finite and res.value <= 1.0 + pair.tol.eq_tol


def in_hull_horizon(point, pair):
    """Horizon (recession) cone membership: ``Y = 0`` and ``W`` in the polar cone."""
    if float(np.linalg.norm(point.Y)) > pair.tol.eq_tol:
        return False
    return in_polar_cone(point.W, pair.kernel, tol=pair.tol)


def in_hull_polar_horizon(dual, pair):
    """Horizon cone of the polar set: support value finite and ``<= 0``."""
    res = eval_support(dual, pair)
    return res.finite and res.value <= pair.tol.eq_tol


@dataclass
class ConvexWitness:
    """An explicit convex combination of graph points near a hull point.

    ``weights`` are nonnegative and sum to one; each component matrix ``Y_i``
    satisfies ``A Y_i = B``, so the induced point

        ( sum_i w_i Y_i,  -1/2 sum_i w_i Y_i Y_i^T )

    lies in the convex hull of the graph set by construction.  Its distance
    to the witnessed point shrinks like ``sqrt(epsilon)``.
    """

    weights: np.ndarray
    components: np.ndarray
    epsilon: float

    def induced_point(self):
        w, ys = self.weights, self.components
        y_bar = np.einsum("k,kij->ij", w, ys)
        w_bar = -0.5 * np.einsum("k,kij,klj->il", w, ys, ys)
        return PrimalPoint(y_bar, symmetrize(w_bar))

    def distance_to(self, point):
        return distance(self.induced_point(), point)


def caratheodory_witness(point, pair, epsilon, rng=None, z_jitter=0.0):
    """Build the convex-combination witness for a hull point.

    The construction decomposes ``-(1/2 Y Y^T + W)`` into at most
    ``N = n(n+1)/2 + 1`` rank-one terms ``mu_i v_i v_i^T`` with ``v_i`` in
    ``ker A`` (eigendecomposition of the projected gap matrix, padded with
    zero terms up to N), then forms components

        Y_1     = Z0 + (Y - Z0) / sqrt(1 - eps),
        Y_{i+1} = Z_i + [ sqrt(2 mu_i / lam) v_i, 0, ..., 0 ],

    with weights ``1 - eps`` and ``lam = eps / N``, where ``Z_i`` solve
    ``A Z = B`` (the minimum-norm solution, so the witness is deterministic;
    pass ``z_jitter > 0`` with an ``rng`` to spread the ``Z_i`` inside the
    feasible manifold).  The correction of ``Y_1`` by ``Z0`` keeps every
    component exactly feasible while preserving
    ``(1 - eps) Y_1 Y_1^T = Y Y^T + O(eps)``.

    Parameters
    ----------
    point : PrimalPoint
        Must pass :func:`in_hull`.
    pair : ConstraintPair
    epsilon : float
        Approximation parameter in ``(0, 1)``; the induced point approaches
        the input at rate ``O(sqrt(epsilon))``.
    rng : int or numpy.random.Generator, optional
    z_jitter : float
        Standard deviation of the optional feasible-manifold perturbation of
        the ``Z_i``.

    Raises
    ------
    PreconditionError
        If the point is not in the hull.
    ValueError
        If ``epsilon`` is out of range or the pair has no columns (m = 0).
    """
    if not 0.0 < epsilon < 1.0:
        raise ValueError(f"epsilon must lie in (0, 1), got {epsilon!r}")
    if pair.m == 0:
        raise ValueError("witness construction needs at least one column (m >= 1)")
    if not in_hull(point, pair):
        raise PreconditionError("point is not in the hull; no witness exists")

    n, m = pair.n, pair.m
    count = n * (n + 1) // 2 + 1
    P = pair.kernel.projector
    gap = _gap(point)
    projected = symmetrize(P @ (-gap) @ P)
    w, q = np.linalg.eigh(projected)
    mu = np.maximum(w[::-1], 0.0)
    vecs = q[:, ::-1]

    lam = epsilon / count
    weights = np.full(count + 1, lam)
    weights[0] = 1.0 - epsilon

    z0 = pair.min_norm_solution
    components = np.empty((count + 1, n, m))
    components[0] = z0 + (point.Y - z0) / np.sqrt(1.0 - epsilon)
    if z_jitter > 0.0:
        gen = np.random.default_rng(rng)
        k = pair.kernel.dim
    for i in range(count):
        z_i = z0
        if z_jitter > 0.0 and k > 0:
            z_i = z0 + z_jitter * (pair.kernel.basis @ gen.standard_normal((k, m)))
        comp = z_i.copy()
        if i < n and mu[i] > 0.0:
            comp = comp.copy()
            comp[:, 0] += np.sqrt(2.0 * mu[i] / lam) * vecs[:, i]
        components[i + 1] = comp
    return ConvexWitness(weights=weights, components=components, epsilon=float(epsilon))
