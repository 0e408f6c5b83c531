"""The commutative counterpart: polynomial maps of Jacobian one."""

from fractions import Fraction

from weylstar import PolyElement
from weylstar.jacobian import (
    JacFamilyParams,
    beta_conjugate,
    build_jac_family,
    compose_poly,
    jac_bracket,
    jc2_classify,
    jc2_invert,
)

X, Y = PolyElement.generators()

p = JacFamilyParams(Fraction(5, 4), Fraction(3, 4), [0, 2])
fx, fy = build_jac_family(p)
print("f(X) =", fx)
print("f(Y) =", fy)
print("Jac  =", jac_bracket(fx, fy))

print("classified:", jc2_classify(fx, fy).to_json())

gx, gy = jc2_invert(fx, fy)
print("f^-1(X) =", gx)
print("f^-1(Y) =", gy)
print("f . f^-1 =", ", ".join(map(str, compose_poly((fx, fy), (gx, gy)))))

# After conjugation the second image is linear and the first is X/lam plus an even series.
P, Q = beta_conjugate(fx, fy)
print("P =", P)
print("Q =", Q)
