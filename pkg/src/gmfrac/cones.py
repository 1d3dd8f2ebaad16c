"""The cone of matrices with nonnegative quadratic form on a subspace.

For a subspace S of R^n with orthonormal basis Q and projector P, the cone
is ``{V symmetric : u^T V u >= 0 for all u in S}``, equivalently
``{V : P V P >= 0}``.  This module provides membership tests for the cone,
its interior, its polar ``{W : W = P W P <= 0}``, the affine hull of the
polar ``{W : rge W subset S}``, the relative interior of the polar, and a
sampler of polar elements built from the generating set ``{-v v^T : v in S}``.
"""

import numpy as np

from .linalg import DEFAULT_TOL, symmetrize, psd_on_subspace, range_inclusion

__all__ = [
    "in_cone",
    "in_int_cone",
    "in_polar_cone",
    "in_aff_polar",
    "in_rint_polar",
    "sample_polar",
]


def in_cone(V, subspace, tol=DEFAULT_TOL):
    """True iff ``u^T V u >= 0`` for all ``u`` in the subspace."""
    return psd_on_subspace(V, subspace, strict=False, tol=tol)


def in_int_cone(V, subspace, tol=DEFAULT_TOL):
    """True iff ``u^T V u > 0`` for all nonzero ``u`` in the subspace."""
    return psd_on_subspace(V, subspace, strict=True, tol=tol)


def _block_psd_max(W, subspace):
    # largest eigenvalue of Q^T W Q; the complement directions are covered
    # by the W = PWP residual test in in_polar_cone
    q = subspace.basis
    block = symmetrize(q.T @ W @ q)
    return float(np.linalg.eigvalsh(block)[-1])


def in_polar_cone(W, subspace, tol=DEFAULT_TOL):
    """Polar-cone membership: ``W = P W P`` and ``W <= 0`` on the subspace.

    The support condition is tested as a relative residual,
    ``||W - P W P||_F <= eq_tol * max(1, ||W||_F)``; the sign condition on
    the subspace block must satisfy ``lambda_max(Q^T W Q) <= psd_tol``.
    For the zero subspace the polar is ``{0}``.
    """
    W = symmetrize(W)
    P = subspace.projector
    resid = W - P @ W @ P
    if float(np.linalg.norm(resid)) > tol.eq_tol * max(1.0, float(np.linalg.norm(W))):
        return False
    if subspace.dim == 0:
        return True
    return _block_psd_max(W, subspace) <= tol.psd_tol


def in_aff_polar(W, subspace, tol=DEFAULT_TOL):
    """Affine hull of the polar cone: ``rge W subset S`` (sign-free)."""
    return range_inclusion(symmetrize(W), subspace.projector, tol=tol)


def in_rint_polar(W, subspace, tol=DEFAULT_TOL):
    """Relative interior of the polar cone.

    For a nonzero subspace this means polar membership plus a strictly
    negative form on the subspace (``lambda_max(Q^T W Q) < -psd_tol``).  For
    the zero subspace the polar is ``{0}`` and its relative interior is
    ``{0}`` as well; that branch dispatches on the exact dimension ``k = 0``,
    not on a tolerance test.
    """
    W = symmetrize(W)
    if subspace.dim == 0:
        return float(np.linalg.norm(W)) <= tol.eq_tol
    if not in_polar_cone(W, subspace, tol=tol):
        return False
    return _block_psd_max(W, subspace) < -tol.psd_tol


def sample_polar(subspace, generators, rng, count=1, tol=DEFAULT_TOL):
    """Draw random elements of the polar cone.

    Each sample is ``W = -sum_{i<=r} lam_i v_i v_i^T`` with ``r =
    generators`` rank-one terms, weights ``lam_i = |N(0,1)|`` and directions
    ``v_i = Q g_i`` for ``g_i ~ N(0, I_k)``.  On the zero subspace every
    sample is the zero matrix.

    Parameters
    ----------
    subspace : SubspaceBasis
    generators : int
        Number of rank-one terms per sample, at least 1.
    rng : int or numpy.random.Generator
    count : int
        Number of samples to return.

    Returns
    -------
    list of ndarray
        ``count`` symmetric n-by-n matrices, each passing ``in_polar_cone``.
    """
    if generators < 1:
        raise ValueError("generators must be >= 1")
    rng = np.random.default_rng(rng)
    n, k = subspace.dim_ambient, subspace.dim
    out = []
    for _ in range(count):
        if k == 0:
            out.append(np.zeros((n, n)))
            continue
        lam = np.abs(rng.standard_normal(generators))
        g = rng.standard_normal((k, generators))
        v = subspace.basis @ g
        out.append(symmetrize(-(v * lam) @ v.T))
    return out
