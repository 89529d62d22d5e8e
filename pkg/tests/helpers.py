"""Shared builders and independent brute-force oracles for the test suite.

The oracles here deliberately avoid the library code paths they are used
to check: permutation closures run on raw image tuples, and the Hamming
code is built straight from its parity checks.
"""

from __future__ import annotations

import itertools
import random

from wreathact import (
    Code,
    GenGroup,
    Permutation,
    WreathContext,
    WreathElement,
    WreathSubgroup,
    conjugate_subgroup,
    random_permutation,
)


def p(*images: int) -> Permutation:
    return Permutation(images)


def we(base_images, top_images) -> WreathElement:
    return WreathElement(
        tuple(Permutation(b) for b in base_images), Permutation(top_images)
    )


def swap2() -> Permutation:
    return Permutation([1, 0])


def cycle(n: int) -> Permutation:
    """The n-cycle (0 1 ... n-1); the identity for n = 1."""
    return Permutation(list(range(1, n)) + [0])


def transposition(n: int, i: int, j: int) -> Permutation:
    images = list(range(n))
    images[i], images[j] = images[j], images[i]
    return Permutation(images)


def sym_perms(n: int) -> list[Permutation]:
    """All of Sym(n), straight from itertools."""
    return [Permutation(images) for images in itertools.permutations(range(n))]


# ----- independent closure oracles -----


def tuple_compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(b[i] for i in a)


def tuple_closure(gens: list[tuple[int, ...]], degree: int) -> set[tuple[int, ...]]:
    """Closure of raw image tuples under composition; independent of GenGroup."""
    identity = tuple(range(degree))
    elements = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for e in frontier:
            for s in gens:
                c = tuple_compose(e, s)
                if c not in elements:
                    elements.add(c)
                    new.append(c)
        frontier = new
    return elements


def perm_closure(gens) -> set[Permutation]:
    degree = gens[0].degree if gens else 1
    raw = tuple_closure([g.images for g in gens], degree)
    return {Permutation(images) for images in raw}


def wreath_closure(gens, cap: int = 100000) -> set[WreathElement]:
    """Plain BFS closure of wreath elements (multiplication only)."""
    if not gens:
        raise ValueError("need at least one generator to infer the context")
    identity = gens[0].ctx.identity_element()
    elements = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for e in frontier:
            for s in gens:
                c = e * s
                if c not in elements:
                    if len(elements) >= cap:
                        raise RuntimeError("oracle closure exceeded cap")
                    elements.add(c)
                    new.append(c)
        frontier = new
    return elements


# ----- random instance families -----


def random_wreath_subgroup(rng: random.Random, q: int, m: int, n_gens: int = 2) -> WreathSubgroup:
    ctx = WreathContext(q, m)
    return WreathSubgroup(ctx, tuple(ctx.random_element(rng) for _ in range(n_gens)))


def diagonal_instance(
    rng: random.Random,
    q: int,
    m: int,
    transitive_component: bool = False,
    delta_transitive: bool = False,
):
    """A conjugate X = y^-1 X0 y of a subgroup X0 with constant components.

    X0 is generated by diagonal base elements (the same Gamma-permutation
    at every coordinate) plus top-only elements, so its component at every
    coordinate is the diagonal group D. Conjugating by a random base
    element y scatters the components into per-coordinate conjugates of D.

    Returns (X0, X, y, D).
    """
    ctx = WreathContext(q, m)
    id_q = Permutation.identity(q)
    id_m = Permutation.identity(m)

    diag_perms = []
    if transitive_component:
        diag_perms.append(cycle(q))
    for _ in range(rng.randint(1, 2)):
        diag_perms.append(random_permutation(rng, q))
    tops = []
    if delta_transitive:
        tops.append(cycle(m))
    for _ in range(rng.randint(1, 2)):
        tops.append(random_permutation(rng, m))

    gens = [WreathElement((g,) * m, id_m) for g in diag_perms]
    gens += [WreathElement((id_q,) * m, h) for h in tops]
    X0 = WreathSubgroup(ctx, tuple(gens))
    y = WreathElement(tuple(random_permutation(rng, q) for _ in range(m)), id_m)
    X = conjugate_subgroup(X0, y)
    D = GenGroup(q, tuple(diag_perms))
    return X0, X, y, D


def block_intransitive_subgroup(rng: random.Random, q: int, m: int) -> WreathSubgroup:
    """A subgroup whose induced coordinate action preserves a proper block."""
    assert m >= 2
    ctx = WreathContext(q, m)
    k = rng.randint(1, m - 1)

    def block_top() -> Permutation:
        left = list(range(k))
        rng.shuffle(left)
        right = list(range(k, m))
        rng.shuffle(right)
        return Permutation(left + right)

    gens = tuple(
        WreathElement(
            tuple(random_permutation(rng, q) for _ in range(m)), block_top()
        )
        for _ in range(2)
    )
    return WreathSubgroup(ctx, gens)


# ----- the binary Hamming [7,4,3] code and its automorphisms -----


def _coordinate_vector(d: int) -> tuple[int, int, int]:
    return ((d + 1) & 1, (d + 1) >> 1 & 1, (d + 1) >> 2 & 1)


def _vector_coordinate(v) -> int:
    return (v[0] | v[1] << 1 | v[2] << 2) - 1


def hamming_words() -> list[tuple[int, ...]]:
    """All 16 words with zero syndrome, coordinate d matching the vector d+1."""
    words = []
    for w in itertools.product(range(2), repeat=7):
        syndrome = [0, 0, 0]
        for d in range(7):
            if w[d]:
                v = _coordinate_vector(d)
                syndrome = [(syndrome[j] + v[j]) % 2 for j in range(3)]
        if syndrome == [0, 0, 0]:
            words.append(w)
    return words


def _matrix_coordinate_perm(matrix) -> Permutation:
    images = [0] * 7
    for d in range(7):
        v = _coordinate_vector(d)
        image = tuple(
            sum(matrix[i][j] * v[j] for j in range(3)) % 2 for i in range(3)
        )
        images[d] = _vector_coordinate(image)
    return Permutation(images)


def invertible_coordinate_perms() -> list[Permutation]:
    """Transvection generators of the linear coordinate permutations.

    The three elementary matrices E(0,1), E(1,2), E(2,0) generate the full
    group of invertible 3x3 matrices over the field with two elements; the
    tests confirm the order 168 by closure.
    """
    def elementary(i, j):
        matrix = [[1 if a == b else 0 for b in range(3)] for a in range(3)]
        matrix[i][j] = 1
        return matrix

    return [
        _matrix_coordinate_perm(elementary(0, 1)),
        _matrix_coordinate_perm(elementary(1, 2)),
        _matrix_coordinate_perm(elementary(2, 0)),
    ]


def hamming_code_with_automorphisms() -> tuple[Code, WreathSubgroup]:
    words = hamming_words()
    ctx = WreathContext(2, 7)
    code = Code(ctx, words)

    s = Permutation([1, 0])
    id2 = Permutation.identity(2)
    id7 = Permutation.identity(7)
    gens = [
        WreathElement((id2,) * 7, top) for top in invertible_coordinate_perms()
    ]
    # translations by a basis of the code (greedy independent words)
    basis = []
    span = {0}
    for w in sorted(words):
        mask = sum(bit << i for i, bit in enumerate(w))
        if mask not in span:
            basis.append(w)
            span = span | {x ^ mask for x in span}
        if len(basis) == 4:
            break
    gens += [
        WreathElement(tuple(s if w[d] else id2 for d in range(7)), id7)
        for w in basis
    ]
    return code, WreathSubgroup(ctx, tuple(gens))
