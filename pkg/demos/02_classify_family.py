"""Build an alpha-endomorphism, classify it, and invert it."""

from fractions import Fraction

from weylstar import WeylElement, classify, commutator, decompose, invert
from weylstar.morphisms import IDENTITY, FamilyParams, build_family, compose, diagnose
from weylstar.harness import family_params_from_t

# a = 5/4, b = 3/4 satisfies a^2 - b^2 = 1; c adds 2 + (x - y)^2.
p = FamilyParams(Fraction(5, 4), Fraction(3, 4), [2, 1])
f = build_family(p)
print("f(x) =", f.fx)
print("f(y) =", f.fy)
print("[f(y), f(x)] =", commutator(f.fy, f.fx))

# The symmetric/antisymmetric split after conjugating by phi.
pair = decompose(f)
print("P0 =", pair.p0)
print("P1 =", pair.p1)
print("[P0, P1] =", commutator(pair.p0, pair.p1))

form = classify(f)
print("classified:", form.to_json())

g = invert(f)
print("f^-1(x) =", g.fx)
print("f^-1(y) =", g.fy)
print("f . f^-1 is the identity:", compose(f, g) == IDENTITY)

# Any nonzero rational t gives a member of the family.
for t in (1, 2, -1, Fraction(3, 7)):
    q = family_params_from_t(t, [0, 0, 1])
    print(f"t = {t}: lambda = {classify(build_family(q)).lam}")

# Maps outside the family are rejected with an exact residual.
x, y = WeylElement.generators()
d = diagnose((x + 1, y))
print("(x+1, y): endomorphism", d.is_endomorphism, "| alpha residual", d.alpha_residual_x)
