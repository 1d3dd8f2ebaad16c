"""The matrix-fractional support function and its domain.

The central object is the support function of the graph set

    { (Y, -1/2 Y Y^T) : A Y = B },

evaluated at a dual point ``(X, V)``.  On its domain the value has the
closed form ``1/2 tr( (X; B)^T M(V)^+ (X; B) )`` where ``M(V)`` is the
saddle (KKT) matrix ``[[V, A^T], [A, 0]]`` of the underlying equality
constrained quadratic program, and the pseudoinverse solve simultaneously
produces the maximizer ``Y*`` and dual multiplier ``Z*``.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    frobenius_inner,
    kernel_basis,
    range_inclusion,
    sym_pinv,
    symmetrize,
)
from .cones import in_cone

__all__ = [
    "InfeasiblePairError",
    "PreconditionError",
    "ConstraintPair",
    "DualPoint",
    "SupportResult",
    "saddle_matrix",
    "in_domain",
    "eval_support",
]


class InfeasiblePairError(ValueError):
    """Raised when ``rge B`` is not contained in ``rge A``."""


class PreconditionError(ValueError):
    """Raised when an operation's stated precondition fails."""


class ConstraintPair:
    """The pair ``(A, B)`` defining the affine manifold ``{Y : A Y = B}``.

    Parameters
    ----------
    A : array_like, shape (p, n)
        Constraint matrix.  ``p = 0`` encodes the unconstrained case; a zero
        matrix with ``p >= 1`` is accepted and treated equivalently.
    B : array_like, shape (p, m)
        Right-hand side.  Must satisfy ``rge B subset rge A`` (checked at
        construction within ``range_tol``), which is exactly feasibility of
        the manifold.
    tol : ToleranceConfig

    Notes
    -----
    The orthonormal kernel basis of ``A`` and the minimum-norm solution of
    ``A Y = B`` are computed once and cached; all downstream operations read
    them from here.
    """

    def __init__(self, A, B, tol=DEFAULT_TOL):
        A = np.asarray(A, dtype=float)
        B = np.asarray(B, dtype=float)
        if A.ndim != 2 or B.ndim != 2:
            raise ValueError("A and B must be 2-D arrays")
        if A.shape[0] != B.shape[0]:
            raise ValueError(
                f"A and B must have the same number of rows, got {A.shape} and {B.shape}"
            )
        if not (np.all(np.isfinite(A)) and np.all(np.isfinite(B))):
            raise ValueError("A and B must have finite entries")
        self.A = A
        self.B = B
        self.tol = tol
        self._check_feasible()
        self.kernel = kernel_basis(A, tol=tol)
        if self.p == 0:
            self._min_norm = np.zeros((self.n, self.m))
        else:
            self._min_norm = np.linalg.lstsq(A, B, rcond=tol.rank_tol)[0]

    def _check_feasible(self):
        if self.p == 0 or not np.any(self.B):
            return
        u, s, _ = np.linalg.svd(self.A)
        r = int(np.sum(s > self.tol.rank_tol * s[0])) if s[0] > 0 else 0
        ur = u[:, :r]
        resid = self.B - ur @ (ur.T @ self.B)
        if float(np.linalg.norm(resid)) > self.tol.range_tol * max(
            1.0, float(np.linalg.norm(self.B))
        ):
            raise InfeasiblePairError(
                "rge B is not contained in rge A: the manifold {A Y = B} is empty"
            )

    @property
    def p(self):
        return self.A.shape[0]

    @property
    def n(self):
        return self.A.shape[1]

    @property
    def m(self):
        return self.B.shape[1]

    @property
    def min_norm_solution(self):
        """Minimum-norm ``Y0`` with ``A Y0 = B`` (zero when p = 0)."""
        return self._min_norm

    @property
    def homogeneous(self):
        """True iff ``B = 0`` within ``feas_tol`` (gauge calculus applies)."""
        return float(np.linalg.norm(self.B)) <= self.tol.feas_tol

    def __repr__(self):
        return f"ConstraintPair(p={self.p}, n={self.n}, m={self.m})"


@dataclass
class DualPoint:
    """A point ``(X, V)`` where the support function is evaluated.

    ``V`` is symmetrized on entry.
    """

    X: np.ndarray
    V: np.ndarray

    def __post_init__(self):
        self.X = np.asarray(self.X, dtype=float)
        if self.X.ndim == 1:
            self.X = self.X.reshape(-1, 1)
        self.V = symmetrize(self.V)
        if self.X.shape[0] != self.V.shape[0]:
            raise ValueError(
                f"X has {self.X.shape[0]} rows but V is {self.V.shape[0]}x{self.V.shape[1]}"
            )

    def norm(self):
        return float(np.sqrt(np.linalg.norm(self.X) ** 2 + np.linalg.norm(self.V) ** 2))

    def scaled(self, t):
        return DualPoint(t * self.X, t * self.V)


@dataclass
class SupportResult:
    """Value and certificates of one support-function evaluation.

    ``finite`` is an explicit flag; a ``+inf`` value is never carried as a
    float into arithmetic.  When finite, ``maximizer`` is the optimal ``Y*``
    and ``multiplier`` the constraint multiplier ``Z*`` of the KKT system
    ``M(V) (Y; Z) = (X; B)``.
    """

    finite: bool
    value: Optional[float] = None
    maximizer: Optional[np.ndarray] = None
    multiplier: Optional[np.ndarray] = None

    @classmethod
    def infinite(cls):
        return cls(finite=False)


def saddle_matrix(V, pair):
    """The KKT saddle matrix ``M(V) = [[V, A^T], [A, 0]]``.

    For ``p = 0`` this is just ``V``.
    """
    V = symmetrize(V)
    if V.shape[0] != pair.n:
        raise ValueError(f"V must be {pair.n}x{pair.n}, got {V.shape}")
    p = pair.p
    if p == 0:
        return V
    return np.block([[V, pair.A.T], [pair.A, np.zeros((p, p))]])


def _check_point(point, pair):
    if point.X.shape != (pair.n, pair.m):
        raise ValueError(
            f"X must be {pair.n}x{pair.m} for this pair, got {point.X.shape}"
        )


def _stacked_rhs(point, pair):
    return np.vstack([point.X, pair.B])


def in_domain(point, pair):
    """Domain test for the support function at ``(X, V)``.

    True iff ``V`` lies in the cone of matrices PSD on ``ker A`` and
    ``rge (X; B) subset rge M(V)``.  This set is not closed: with
    ``A = B = 0`` and ``X != 0``, every ``V = eta I`` with ``eta > 0`` is in
    the domain but the limit ``V = 0`` is not.
    """
    _check_point(point, pair)
    if not in_cone(point.V, pair.kernel, tol=pair.tol):
        return False
    return range_inclusion(_stacked_rhs(point, pair), saddle_matrix(point.V, pair), tol=pair.tol)


def eval_support(point, pair):
    """Evaluate the support function at ``(X, V)``.

    Out-of-domain points yield ``SupportResult.infinite()``; this is a
    regular result, not an error.  On the domain,

        value = 1/2 tr( (X; B)^T M(V)^+ (X; B) ),

    and the blocks of ``M(V)^+ (X; B)`` are returned as the maximizer and
    multiplier.  The pseudoinverse solve (rather than a factorization) is
    deliberate: it matches the closed form and handles rank-deficient
    ``M(V)`` inside the domain.
    """
    _check_point(point, pair)
    if not in_domain(point, pair):
        return SupportResult.infinite()
    M = saddle_matrix(point.V, pair)
    rhs = _stacked_rhs(point, pair)
    sol = sym_pinv(M, tol=pair.tol) @ rhs
    y_star = sol[: pair.n]
    z_star = sol[pair.n :]
    value = 0.5 * frobenius_inner(rhs, sol)
    return SupportResult(finite=True, value=value, maximizer=y_star, multiplier=z_star)
