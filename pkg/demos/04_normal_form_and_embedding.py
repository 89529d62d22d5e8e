"""The conjugation normal form and the embedding into G wr H.

Start from a subgroup whose components agree at every coordinate, scatter
them with a random base conjugation, then recover constancy with the
computed normalizing element. With a transitive coordinate action the
normalized group embeds into G wr H, certified generator by generator.
"""

import random

from wreathact import (
    Permutation,
    WreathContext,
    WreathElement,
    WreathSubgroup,
    conjugate_subgroup,
    embed_in_wreath,
    normalizing_element,
    random_permutation,
)

rng = random.Random(4)
q, m = 4, 3
ctx = WreathContext(q, m)
cycle = Permutation([1, 2, 3, 0])
id_q = Permutation.identity(q)

# X0: a diagonal 4-cycle at every coordinate plus the full coordinate rotation
X0 = WreathSubgroup(
    ctx,
    (
        WreathElement((cycle,) * m, Permutation.identity(m)),
        WreathElement((id_q,) * m, Permutation([1, 2, 0])),
    ),
)
print("components of X0 (all equal):")
for d in range(m):
    print(f"  {d}:", sorted(str(e) for e in X0.component(d).enumerate_elements()))

# scatter the components with a random base element
y = WreathElement(
    tuple(random_permutation(rng, q) for _ in range(m)), Permutation.identity(m)
)
X = conjugate_subgroup(X0, y)
print("\nafter conjugating by y =", y)
for d in range(m):
    print(f"  {d}:", sorted(str(e) for e in X.component(d).enumerate_elements()))

# the normalizing element restores constancy and can fix a chosen point
phi = (0, 0, 0)
result = normalizing_element(X, phi=phi)
print("\nnormalizing element x =", result.x)
print("x fixes", phi, ":", result.fixes_point)
for d in range(m):
    closure = sorted(str(e) for e in result.conjugated.component(d).enumerate_elements())
    print(f"  component {d} of X^x:", closure)

# with a transitive coordinate action, X^x lands in G wr H
embedding = embed_in_wreath(X, delta1=0, phi=phi)
print("\nembedding certificate passed:", embedding.certificate.passed)
print("G:", [str(g) for g in embedding.G.generators])
print("H:", [str(h) for h in embedding.H.generators])
for k, g in enumerate(embedding.conjugated.generators):
    print(f"conjugated generator {k}:", g)
