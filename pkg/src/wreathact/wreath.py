"""Wreath products Sym(Gamma) wr Sym(Delta) in product action.

A wreath element is a pair ``(f, h)`` where ``f`` assigns a permutation of
Gamma = {0..q-1} to every coordinate in Delta = {0..m-1} and ``h``
permutes the coordinates. The group acts on the right on the set Pi of
functions Delta -> Gamma, represented as plain tuples of length m:

    (phi * fh)[d] = f[d * h^-1][ phi[d * h^-1] ]

i.e. entry d of the image is the old entry at ``d h^-1`` moved by the base
permutation sitting at ``d h^-1``. Multiplication is stated in evaluated
form and is exactly the rule that makes ``apply`` a right action; the test
suite enforces the action-homomorphism property exhaustively at small
scale.
"""

from __future__ import annotations

import itertools
import math
import random
import re
from typing import Iterable, Iterator

from .errors import DegreeMismatchError, EnumerationOverflow, ParseError
from .perm import DEFAULT_CAP, Permutation, random_permutation

Point = tuple[int, ...]


class WreathContext:
    """The pair of sizes (q, m) of Gamma = {0..q-1} and Delta = {0..m-1}."""

    __slots__ = ("gamma_size", "delta_size")

    def __init__(self, gamma_size: int, delta_size: int):
        if gamma_size < 1 or delta_size < 1:
            raise ValueError("gamma_size and delta_size must be at least 1")
        self.gamma_size = gamma_size
        self.delta_size = delta_size

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, WreathContext)
            and self.gamma_size == other.gamma_size
            and self.delta_size == other.delta_size
        )

    def __hash__(self) -> int:
        return hash((self.gamma_size, self.delta_size))

    def __repr__(self) -> str:
        return f"WreathContext(q={self.gamma_size}, m={self.delta_size})"

    def point_count(self) -> int:
        """|Pi| = q^m."""
        return self.gamma_size**self.delta_size

    def wreath_order(self) -> int:
        """Order of the full wreath product, (q!)^m * m!."""
        q, m = self.gamma_size, self.delta_size
        return math.factorial(q) ** m * math.factorial(m)

    def identity_element(self) -> "WreathElement":
        base = (Permutation.identity(self.gamma_size),) * self.delta_size
        return WreathElement(base, Permutation.identity(self.delta_size))

    def constant_point(self, gamma: int) -> Point:
        """The function sending every coordinate to ``gamma``."""
        if not 0 <= gamma < self.gamma_size:
            raise ValueError(f"gamma {gamma} out of range")
        return (gamma,) * self.delta_size

    def all_points(self) -> Iterator[Point]:
        """All of Pi in lexicographic order."""
        return itertools.product(range(self.gamma_size), repeat=self.delta_size)

    def all_elements(self, cap: int = DEFAULT_CAP) -> Iterator["WreathElement"]:
        """Every element of the full wreath product, or a loud overflow."""
        if self.wreath_order() > cap:
            raise EnumerationOverflow(
                f"full wreath product has order {self.wreath_order()}, cap is {cap}"
            )
        gamma_perms = [Permutation(p) for p in itertools.permutations(range(self.gamma_size))]
        delta_perms = [Permutation(p) for p in itertools.permutations(range(self.delta_size))]
        for base in itertools.product(gamma_perms, repeat=self.delta_size):
            for top in delta_perms:
                yield WreathElement(base, top)

    def random_element(self, rng: random.Random) -> "WreathElement":
        base = tuple(
            random_permutation(rng, self.gamma_size) for _ in range(self.delta_size)
        )
        return WreathElement(base, random_permutation(rng, self.delta_size))

    def check_point(self, point: Point) -> Point:
        point = tuple(point)
        if len(point) != self.delta_size:
            raise ValueError(
                f"point has length {len(point)}, expected {self.delta_size}"
            )
        for entry in point:
            if not 0 <= entry < self.gamma_size:
                raise ValueError(f"point entry {entry} out of range 0..{self.gamma_size - 1}")
        return point


class WreathElement:
    """An element ``(f, h)`` of Sym(Gamma) wr Sym(Delta).

    ``base[d]`` is the Gamma-permutation at coordinate d and ``top`` is the
    coordinate permutation. Immutable and hashable.
    """

    __slots__ = ("base", "top")

    def __init__(self, base: Iterable[Permutation], top: Permutation):
        base = tuple(base)
        if not base:
            raise ValueError("base must have at least one coordinate")
        q = base[0].degree
        for p in base:
            if p.degree != q:
                raise DegreeMismatchError("base entries have mixed degrees")
        if top.degree != len(base):
            raise DegreeMismatchError(
                f"top degree {top.degree} != number of coordinates {len(base)}"
            )
        self.base = base
        self.top = top

    @classmethod
    def identity(cls, ctx: WreathContext) -> "WreathElement":
        return ctx.identity_element()

    @property
    def ctx(self) -> WreathContext:
        return WreathContext(self.base[0].degree, self.top.degree)

    def _check_ctx(self, other: "WreathElement") -> None:
        if (
            self.base[0].degree != other.base[0].degree
            or self.top.degree != other.top.degree
        ):
            raise DegreeMismatchError("wreath elements live in different contexts")

    def __mul__(self, other: "WreathElement") -> "WreathElement":
        """Apply ``self`` first, then ``other`` (right-action convention)."""
        if not isinstance(other, WreathElement):
            return NotImplemented
        self._check_ctx(other)
        top = self.top * other.top
        base = tuple(
            self.base[d] * other.base[self.top[d]] for d in range(len(self.base))
        )
        return WreathElement(base, top)

    def inverse(self) -> "WreathElement":
        tinv = self.top.inverse()
        base = tuple(self.base[tinv[d]].inverse() for d in range(len(self.base)))
        return WreathElement(base, tinv)

    def conjugate(self, x: "WreathElement") -> "WreathElement":
        """Return ``x^-1 * self * x``."""
        return x.inverse() * self * x

    def apply(self, point: Point) -> Point:
        """Image of a point of Pi under the product action."""
        if len(point) != len(self.base):
            raise ValueError(
                f"point has length {len(point)}, expected {len(self.base)}"
            )
        tinv = self.top.inverse()
        return tuple(
            self.base[tinv[d]][point[tinv[d]]] for d in range(len(self.base))
        )

    def is_identity(self) -> bool:
        return self.top.is_identity() and all(p.is_identity() for p in self.base)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, WreathElement)
            and self.base == other.base
            and self.top == other.top
        )

    def __hash__(self) -> int:
        return hash((self.base, self.top))

    def __repr__(self) -> str:
        return f"WreathElement(base={[list(p.images) for p in self.base]}, top={list(self.top.images)})"

    def __str__(self) -> str:
        """Serialize as ``base=[p0;p1;...] top=p`` with bracketed image lists."""
        base = ";".join(str(p) for p in self.base)
        return f"base=[{base}] top={self.top}"

    _PARSE_RE = re.compile(r"base=\[(.*)\]\s+top=(\[[^\[\]]*\])\s*$")

    @classmethod
    def parse(cls, text: str) -> "WreathElement":
        match = cls._PARSE_RE.match(text.strip())
        if match is None:
            raise ParseError(f"expected 'base=[...;...] top=[...]', got {text!r}")
        base_blob, top_text = match.groups()
        base = [Permutation.parse(part) for part in base_blob.split(";")]
        top = Permutation.parse(top_text)
        return cls(base, top)


def format_point(point: Point) -> str:
    """Serialize a point of Pi as a bare comma list, e.g. ``0,1,1``."""
    return ",".join(str(v) for v in point)


def parse_point(text: str, ctx: WreathContext | None = None) -> Point:
    try:
        point = tuple(int(part) for part in text.strip().split(","))
    except ValueError:
        raise ParseError(f"non-integer entry in point {text!r}") from None
    if not point:
        raise ParseError("empty point")
    if ctx is not None:
        try:
            ctx.check_point(point)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    return point


def stabilizer_order_oracle(
    ctx: WreathContext, point: Point, cap: int = DEFAULT_CAP
) -> int:
    """Exact order of the stabilizer of ``point`` in the full wreath product.

    Brute force over all (q!)^m * m! elements; for a constant point the
    answer is ((q-1)!)^m * m!.
    """
    ctx.check_point(point)
    return sum(1 for w in ctx.all_elements(cap) if w.apply(point) == point)
