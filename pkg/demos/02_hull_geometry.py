"""Geometry of the closed convex hull of the graph set.

Hull membership reduces to feasibility A Y = B plus a polar-cone test on
the gap matrix 1/2 Y Y^T + W.  The script walks through membership, the
relative interior and affine hull, the horizon cone, and the explicit
convex-combination witness whose distance to the target shrinks like
sqrt(epsilon).
"""

import numpy as np

from gmfrac import (
    ConstraintPair,
    PrimalPoint,
    caratheodory_witness,
    graph_point,
    in_hull,
    in_hull_aff,
    in_hull_horizon,
    in_hull_rint,
)

pair = ConstraintPair([[1.0, 0.0]], [[0.0]])
y = np.array([[0.0], [1.0]])

print("membership of (Y, W) for Y = (0, 1) and varying W:")
for w22, label in [(-1.0, "below the graph"), (-0.5, "on the graph"), (0.0, "above the graph")]:
    pt = PrimalPoint(y, np.diag([0.0, w22]))
    print(
        f"  W22 = {w22:>5}: member={in_hull(pt, pair)!s:<5} "
        f"rint={in_hull_rint(pt, pair)!s:<5} aff={in_hull_aff(pt, pair)}  ({label})"
    )

print("\ngraph points are always members:", in_hull(graph_point(y), pair))

print("\nhorizon cone: directions (0, W) with W in the polar cone")
print("  (0, diag(0, -4)):", in_hull_horizon(PrimalPoint(np.zeros((2, 1)), np.diag([0.0, -4.0])), pair))
print("  ((0,1), -I):     ", in_hull_horizon(PrimalPoint(y, -np.eye(2)), pair))

# the witness realizes a hull point as a convex combination of graph points
target = PrimalPoint(y, np.diag([0.0, -1.0]))
print("\nwitness distances (expect ~sqrt(eps) decay):")
print(f"  {'epsilon':>10} {'distance':>12} {'ratio':>8}")
prev = None
for eps in (1e-1, 1e-2, 1e-3, 1e-4):
    wit = caratheodory_witness(target, pair, eps)
    d = wit.distance_to(target)
    ratio = "" if prev is None else f"{prev / d:8.2f}"
    print(f"  {eps:>10g} {d:>12.6f} {ratio:>8}")
    prev = d

wit = caratheodory_witness(target, pair, 1e-4)
print("\nwitness weights sum:", wit.weights.sum())
print("every component is feasible:", all(np.allclose(pair.A @ c, pair.B) for c in wit.components))
print("induced point is a hull member:", in_hull(wit.induced_point(), pair))
