"""Weighted degrees, leading faces and their distinguished points."""

from weylstar import PolyElement
from weylstar.geometry import (
    aligned,
    degree,
    end_point,
    leading_term,
    lower_degree,
    lower_leading_term,
    start_point,
    support,
)

X, Y = PolyElement.generators()
p = X**3 + X**2 * Y + 2 * X * Y**2 + Y**3 + X + 5

print("support:", " ".join(f"({i},{j})" for i, j in sorted(support(p))))
for d in [(1, 0), (0, 1), (1, 1), (2, 1), (1, -1)]:
    print(f"direction {d}: degree {degree(d, p)}, leading face {leading_term(d, p)}")

# The (1,1) face is a segment; st and en are its two ends.
print("st_(1,1) =", tuple(start_point((1, 1), p)))
print("en_(1,1) =", tuple(end_point((1, 1), p)))

# Minimal-weight analogues
q = 3 * Y + X * Y**2 + X**4 * Y
print("w_(0,1)  =", lower_degree((0, 1), q))
print("ll_(0,1) =", lower_leading_term((0, 1), q))

print("(2,4) aligned with (1,2):", aligned((2, 4), (1, 2)))
print("(1,0) aligned with (0,1):", aligned((1, 0), (0, 1)))
