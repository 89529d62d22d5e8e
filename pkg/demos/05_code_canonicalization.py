"""Pinning two words of a code by an equivalence.

For a code whose automorphisms act transitively on the coordinates with a
2-transitive component, an equivalence x = x1*x2*x3*x4 moves the code so
it contains the constant word (gamma,...,gamma) and the word starting
with d letters nu, d the minimum distance, while the conjugated
automorphism group sits inside G wr K.
"""

import itertools

from wreathact import (
    Code,
    Permutation,
    WreathContext,
    WreathElement,
    WreathSubgroup,
    canonicalize,
)

s = Permutation([1, 0])
id2 = Permutation.identity(2)
id3 = Permutation.identity(3)

# the even-weight code of length 3
ctx = WreathContext(2, 3)
code = Code(ctx, [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)])
automorphisms = WreathSubgroup(
    ctx,
    (
        WreathElement((id2, s, s), id3),     # translation by 011
        WreathElement((s, id2, s), id3),     # translation by 101
        WreathElement((id2,) * 3, Permutation([1, 2, 0])),
        WreathElement((id2,) * 3, Permutation([1, 0, 2])),
    ),
)
result = canonicalize(code, automorphisms, gamma=0, nu=1)
print("even-weight code, minimum distance", code.min_distance())
for name, factor in (("x1", result.x1), ("x2", result.x2), ("x3", result.x3), ("x4", result.x4)):
    print(f"  {name} =", factor)
print("pinned words:", result.pinned_constant, "and", result.pinned_mixed)
print("transformed code:", result.code.sorted_words())
print("certificate:", result.certificate.passed)

# the binary Hamming code of length 7: coordinate d carries the nonzero
# vector d+1 of the 3-dimensional binary space, a word is in the code when
# its coordinatewise sum of vectors vanishes
def vector(d):
    return ((d + 1) & 1, (d + 1) >> 1 & 1, (d + 1) >> 2 & 1)

words = []
for w in itertools.product(range(2), repeat=7):
    syndrome = (0, 0, 0)
    for d in range(7):
        if w[d]:
            syndrome = tuple((a + b) % 2 for a, b in zip(syndrome, vector(d)))
    if syndrome == (0, 0, 0):
        words.append(w)
ctx7 = WreathContext(2, 7)
hamming = Code(ctx7, words)

# automorphisms: invertible linear maps permuting the coordinate vectors,
# plus translations by codewords
def linear_coordinate_perm(matrix):
    images = []
    for d in range(7):
        v = vector(d)
        image = tuple(sum(matrix[i][j] * v[j] for j in range(3)) % 2 for i in range(3))
        images.append((image[0] | image[1] << 1 | image[2] << 2) - 1)
    return Permutation(images)

def elementary(i, j):
    matrix = [[1 if a == b else 0 for b in range(3)] for a in range(3)]
    matrix[i][j] = 1
    return matrix

id7 = Permutation.identity(7)
generators = [
    WreathElement((id2,) * 7, linear_coordinate_perm(elementary(i, j)))
    for i, j in ((0, 1), (1, 2), (2, 0))
]
generators += [
    WreathElement(tuple(s if w[d] else id2 for d in range(7)), id7)
    for w in ((1, 1, 1, 0, 0, 0, 0), (1, 0, 0, 1, 1, 0, 0), (0, 1, 0, 1, 0, 1, 0), (1, 1, 0, 1, 0, 0, 1))
]
aut7 = WreathSubgroup(ctx7, tuple(generators))
assert all(g.apply(w) in hamming for g in aut7.generators for w in hamming.words)

print("\nHamming code:", len(hamming), "words, distance", hamming.min_distance())
result = canonicalize(hamming, aut7, gamma=0, nu=1)
print("pinned words:", result.pinned_constant, "and", result.pinned_mixed)
print("distance preserved:", result.code.min_distance() == 3)
print("certificate:", result.certificate.passed)
print("first transformed words:", result.code.sorted_words()[:4])
