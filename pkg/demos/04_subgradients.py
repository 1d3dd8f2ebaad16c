"""Subdifferentials of the support function and normal cones of the hull.

The KKT solve that evaluates the support function also produces a canonical
subgradient: the graph-set point (Y*, -1/2 Y* Y*^T).  This script verifies
the Fenchel equality, the subgradient inequality against random probe
points, and the normal-cone characterization at the subgradient.
"""

import numpy as np

from gmfrac import (
    ConstraintPair,
    DualPoint,
    canonical_subgradient,
    eval_support,
    in_normal_cone,
    in_subdifferential,
    pairing,
)

rng = np.random.default_rng(1)
pair = ConstraintPair([[1.0, 0.0]], [[0.0]])
dual = DualPoint(np.array([[1.0], [2.0]]), np.eye(2))

sub = canonical_subgradient(dual, pair)
print("support value:", sub.value)
print("canonical subgradient Y* =", sub.point.Y.ravel())
print("W* = -1/2 Y* Y*^T =\n", sub.point.W)
print("multiplier certificate Z* =", sub.multiplier.ravel())
print("X - V Y* - A^T Z* =", (dual.X - dual.V @ sub.point.Y - pair.A.T @ sub.multiplier).ravel())

fenchel = pairing(dual, sub.point)
print(f"\nFenchel equality: <dual, subgradient> = {fenchel} = value ({sub.value})")
print("in_subdifferential:", in_subdifferential(sub.point, dual, pair))
print("in_normal_cone at the subgradient:", in_normal_cone(dual, sub.point, pair))

print("\nsubgradient inequality against 5 random probe duals:")
for _ in range(5):
    probe = DualPoint(
        rng.standard_normal((2, 1)),
        (lambda g: g @ g.T + 0.5 * np.eye(2))(rng.standard_normal((2, 2))),
    )
    lhs = eval_support(probe, pair).value
    rhs = sub.value + pairing(DualPoint(probe.X - dual.X, probe.V - dual.V), sub.point)
    print(f"  sigma(probe) = {lhs:9.4f} >= linearization {rhs:9.4f}: {lhs >= rhs - 1e-9}")
