"""Normal cones of the hull and subdifferentials of the support function.

At a hull point ``(Y, W)`` the normal cone consists of the duals ``(X, V)``
with ``V`` PSD on ``ker A``, complementarity ``<V, 1/2 Y Y^T + W> = 0``, and
``rge(X - V Y)`` orthogonal to ``ker A``.  Combined with hull membership
this characterizes the subdifferential of the support function, and the KKT
solve of :func:`gmfrac.support.eval_support` yields one canonical
subgradient at every domain point.
"""

from dataclasses import dataclass

import numpy as np

from .linalg import frobenius_inner, symmetrize
from .cones import in_cone
from .support import PreconditionError, eval_support, in_domain
from .hull import PrimalPoint, in_hull, _gap

__all__ = [
    "SubgradientResult",
    "in_normal_cone",
    "canonical_subgradient",
    "in_subdifferential",
]


@dataclass
class SubgradientResult:
    """A constructed subgradient with its certificate.

    ``point = (Y*, -1/2 Y* Y*^T)`` lies on the graph set itself, so it
    satisfies complementarity with any cone element, and ``multiplier`` is
    the ``Z`` certifying ``X = V Y* + A^T Z``.  ``value`` is the support
    value at the dual point, which equals ``<X, Y*> + <V, W*>`` (the Fenchel
    equality).
    """

    point: PrimalPoint
    multiplier: np.ndarray
    value: float


def in_normal_cone(dual, base, pair):
    """Normal-cone membership of ``(X, V)`` at a hull point ``(Y, W)``.

    Checks the three conditions: ``V`` in the cone over ``ker A``,
    complementarity ``<V, 1/2 Y Y^T + W> = 0`` within
    ``eq_tol * max(1, ||V|| ||1/2 Y Y^T + W||)``, and
    ``||P (X - V Y)||_F <= range_tol * max(1, ||X - V Y||_F)`` (existence of
    a multiplier ``Z`` with ``X - V Y = A^T Z``, since ``rge A^T`` is the
    orthogonal complement of ``ker A``).

    Raises
    ------
    PreconditionError
        If ``base`` is not in the hull.
    """
    if not in_hull(base, pair):
        raise PreconditionError("normal cone is only defined at hull points")
    V = dual.V
    if not in_cone(V, pair.kernel, tol=pair.tol):
        return False
    gap = _gap(base)
    comp = frobenius_inner(V, gap)
    comp_scale = max(1.0, float(np.linalg.norm(V)) * float(np.linalg.norm(gap)))
    if abs(comp) > pair.tol.eq_tol * comp_scale:
        return False
    resid = dual.X - V @ base.Y
    proj = pair.kernel.projector @ resid
    return float(np.linalg.norm(proj)) <= pair.tol.range_tol * max(
        1.0, float(np.linalg.norm(resid))
    )


def canonical_subgradient(dual, pair):
    """One explicit subgradient of the support function at a domain point.

    Takes ``(Y*, Z*)`` from the KKT solve and returns the graph-set
    representative ``(Y*, -1/2 Y* Y*^T)``; its gap matrix is exactly zero, so
    complementarity holds for free and the subdifferential meets the graph
    set at every domain point.

    Raises
    ------
    PreconditionError
        If the dual point is outside the domain.
    """
    res = eval_support(dual, pair)
    if not res.finite:
        raise PreconditionError("dual point is outside the support-function domain")
    y_star = res.maximizer
    w_star = symmetrize(-0.5 * (y_star @ y_star.T))
    return SubgradientResult(
        point=PrimalPoint(y_star, w_star), multiplier=res.multiplier, value=res.value
    )


def in_subdifferential(candidate, dual, pair):
    """Subdifferential membership of ``(Y, W)`` at a domain point ``(X, V)``.

    Equivalent to hull membership plus normal-cone membership of the dual at
    the candidate.

    Raises
    ------
    PreconditionError
        If the dual point is outside the domain.
    """
    if not in_domain(dual, pair):
        raise PreconditionError("dual point is outside the support-function domain")
    if not in_hull(candidate, pair):
        return False
    return in_normal_cone(dual, candidate, pair)
