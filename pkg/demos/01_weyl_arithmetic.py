"""Normal ordering in the first Weyl algebra.

Every product is rewritten into the basis x^i y^j using yx = xy + 1.
"""

from weylstar import WeylElement, commutator
from weylstar.harness import rewrite_oracle_mul

x, y = WeylElement.generators()

# The defining relation.
print("y*x      =", y * x)
print("[y, x]   =", commutator(y, x))

# Moving y^2 past x^2 produces lower-order corrections.
print("y^2*x^2  =", (y * y) * (x * x))
print("oracle   =", rewrite_oracle_mul(y * y, x * x))

# (x - y)^2 picks up a -1 from the single yx in the expansion
print("(x-y)^2  =", (x - y) ** 2)

# Commuting y with a power of x acts as a derivative.
for i in range(1, 5):
    print(f"[y, x^{i}] =", commutator(y, x**i))

# x - y commutes with all of its powers; this is what keeps the
# (x - y)^(2j) terms in the family harmless.
print("[x-y, (x-y)^5] =", commutator(x - y, (x - y) ** 5))
