"""The product action of Sym(Gamma) wr Sym(Delta) on tuples.

An element (f, h) carries a Gamma-permutation for every coordinate and a
permutation of the coordinates; it moves a tuple by first relocating the
coordinates along h and then applying the relocated base entries.
"""

import math

from wreathact import (
    Permutation,
    WreathContext,
    WreathElement,
    stabilizer_order_oracle,
)

ctx = WreathContext(gamma_size=2, delta_size=2)
s = Permutation([1, 0])
identity = Permutation.identity(2)

w = WreathElement(base=(s, identity), top=s)
print("w =", w)
print("w moves (0,1) to", w.apply((0, 1)))
print("w moves every point:")
for phi in ctx.all_points():
    print(f"  {phi} -> {w.apply(phi)}")

# multiplication is exactly the rule making apply a right action
a = WreathElement((s, identity), s)
b = WreathElement((identity, s), identity)
ab = a * b
print("\na*b =", ab)
for phi in ctx.all_points():
    assert ab.apply(phi) == b.apply(a.apply(phi))
print("checked: applying a*b equals applying a, then b, on all points")

# the stabilizer of a constant point, counted by brute force, matches
# ((q-1)!)^m * m!
for q, m in ((2, 2), (3, 2), (2, 3)):
    context = WreathContext(q, m)
    count = stabilizer_order_oracle(context, context.constant_point(0))
    formula = math.factorial(q - 1) ** m * math.factorial(m)
    print(f"stabilizer of the constant point at q={q} m={m}: {count} (formula {formula})")
