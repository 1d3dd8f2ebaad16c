"""Gauge calculus for the homogeneous case B = 0.

With B = 0 the hull contains the origin, the support function becomes the
gauge of the polar set, and the hull's own gauge has a closed form through
the pseudoinverse of -W compressed to the range of Y.  The bisection oracle
over scaled-set membership brackets the same value from the definition
inf {t >= 0 : point in t * hull}.
"""

import numpy as np

from gmfrac import (
    ConstraintPair,
    DualPoint,
    PrimalPoint,
    eval_gauge,
    eval_polar_gauge,
    gauge_bisection,
    in_scaled_hull,
    pairing,
)

pair = ConstraintPair([[1.0, 0.0]], [[0.0]])
point = PrimalPoint(np.array([[0.0], [2.0]]), np.diag([0.0, -2.0]))

res = eval_gauge(point, pair)
ref = gauge_bisection(point, pair, in_scaled_hull)
print(f"closed-form gauge: {res.value}   bisection oracle: {ref}")
print("critical matrix:\n", res.critical_matrix)
print("sigma_min:", res.sigma_min, " (value = 1/2 / sigma_min)")

print("\nscaled-set membership around the gauge value:")
for t in (0.5, 0.99, 1.0, 1.01, 2.0):
    print(f"  t = {t:<5}: {in_scaled_hull(point, t, pair)}")

print("\ngauge of a coupled instance (off-diagonal W):")
free = ConstraintPair(np.zeros((0, 2)), np.zeros((0, 1)))
coupled = PrimalPoint(np.array([[1.0], [0.0]]), np.array([[-1.0, 0.5], [0.5, -1.0]]))
res = eval_gauge(coupled, free)
ref = gauge_bisection(coupled, free, in_scaled_hull)
print(f"  closed form: {res.value:.9f}   bisection: {ref:.9f}")

print("\npolar gauge = support value (gauge duality):")
dual = DualPoint(np.array([[0.0], [1.0]]), np.eye(2))
gamma_polar = eval_polar_gauge(dual, pair)
print(f"  gauge of the polar at X = (0,1), V = I: {gamma_polar}")
print(f"  pairing bound <point, dual> <= gauge * polar gauge:")
lhs = pairing(dual, point)
print(f"  {lhs} <= {eval_gauge(point, pair).value * gamma_polar}")
