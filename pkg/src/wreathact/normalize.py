"""Conjugation normal form: components constant on coordinate orbits.

Given X <= Sym(Gamma) wr Sym(Delta), there is a base-group element x such
that every component of x^-1 X x depends only on the orbit of its
coordinate under the induced action of X. The construction picks, for each
coordinate d, a transversal element t_d of X carrying the orbit
representative to d, and sets the entry of x at d to the inverse of the
base entry of t_d at the representative. When every component is
transitive the transversal can be corrected so that x additionally fixes a
prescribed point of Pi.

When the induced coordinate action is transitive this conjugation lands X
inside G wr H, where G is the component at a chosen coordinate and H is
the induced group; ``embed_in_wreath`` returns that embedding along with a
sifting certificate for every conjugated generator.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeMismatchError, HypothesisViolation
from .perm import DEFAULT_CAP, GenGroup, Permutation
from .components import WreathSubgroup
from .wreath import Point, WreathElement


@dataclass
class Transversal:
    """Per-orbit representatives with elements carrying them to each coordinate.

    ``elements[d]`` is an element of X whose top maps the representative of
    d's orbit to d; the representative itself gets the identity.
    """

    orbits: tuple[tuple[int, ...], ...]
    reps: tuple[int, ...]
    elements: dict[int, WreathElement]
    rep_of: dict[int, int]


def build_transversal(
    X: WreathSubgroup, preferred_reps: tuple[int, ...] = ()
) -> Transversal:
    """BFS transversal of the coordinate orbits, lifted to wreath elements.

    Representatives default to the minimum index of each orbit; a preferred
    representative may be supplied instead (at most one per orbit).
    """
    m = X.ctx.delta_size
    for rep in preferred_reps:
        if not 0 <= rep < m:
            raise ValueError(f"representative {rep} out of range")
    reps: list[int] = []
    elements: dict[int, WreathElement] = {}
    rep_of: dict[int, int] = {}
    for orbit in X.delta_orbits:
        chosen = [r for r in preferred_reps if r in orbit]
        if len(chosen) > 1:
            raise ValueError(f"two preferred representatives in orbit {orbit}")
        rep = chosen[0] if chosen else orbit[0]
        reps.append(rep)
        _, witness = X.delta_orbit_with_witnesses(rep)
        for d in orbit:
            elements[d] = witness[d]
            rep_of[d] = rep
    return Transversal(X.delta_orbits, tuple(reps), elements, rep_of)


def adjust_transversal(
    X: WreathSubgroup, transversal: Transversal, phi: Point
) -> Transversal:
    """Premultiply transversal elements so their entry at the representative
    fixes the prescribed point.

    For each coordinate d with representative r, the base entry at r of the
    returned t_d fixes phi[d]. Requires the component at every
    representative to be transitive (all components along an orbit are
    conjugate, so this is equivalent to all components being transitive);
    the correcting element is the BFS-first witness, which keeps the result
    deterministic. Representatives keep the identity.
    """
    phi = X.ctx.check_point(phi)
    new_elements = dict(transversal.elements)
    for orbit, rep in zip(transversal.orbits, transversal.reps):
        if not X.component(rep).is_transitive():
            raise HypothesisViolation(
                f"component at coordinate {rep} is not transitive on its alphabet",
                delta=rep,
            )
        for d in orbit:
            if d == rep:
                continue
            t = transversal.elements[d]
            entry = t.base[rep]
            p = phi[d]
            if entry[p] == p:
                continue
            target = entry.inverse()[p]
            orbit_data = X.component_witness_orbit(rep, p)
            if target not in orbit_data.witness:
                raise RuntimeError(
                    "internal invariant: transitive component misses a point"
                )
            corrected = orbit_data.witness[target] * t
            if corrected.base[rep][p] != p:
                raise RuntimeError("internal invariant: corrected entry moves point")
            new_elements[d] = corrected
    return Transversal(
        transversal.orbits, transversal.reps, new_elements, transversal.rep_of
    )


@dataclass
class NormalizationResult:
    """Base element x with the conjugate X^x and its per-orbit certificate.

    ``component_flags[d]`` records that the component of X^x at d equals,
    as a closure set, the component of X at the representative of d's
    orbit. ``common_components`` maps each representative to that common
    value, presented by the lifted Schreier images of the conjugate at the
    representative.
    """

    x: WreathElement
    conjugated: WreathSubgroup
    transversal: Transversal
    component_flags: dict[int, bool]
    common_components: dict[int, GenGroup]
    fixed_point: Point | None
    fixes_point: bool | None

    @property
    def ok(self) -> bool:
        flags_ok = all(self.component_flags.values())
        return flags_ok and (self.fixes_point is None or self.fixes_point)


def conjugate_subgroup(X: WreathSubgroup, x: WreathElement) -> WreathSubgroup:
    """The subgroup generated by x^-1 g x over the generators g of X."""
    if x.ctx != X.ctx:
        raise DegreeMismatchError("conjugating element lives in a different context")
    x_inv = x.inverse()
    return WreathSubgroup(X.ctx, tuple(x_inv * g * x for g in X.generators))


def normalizing_element(
    X: WreathSubgroup,
    phi: Point | None = None,
    preferred_reps: tuple[int, ...] = (),
    cap: int = DEFAULT_CAP,
) -> NormalizationResult:
    """Base element x making the components of X^x constant on each orbit.

    The entry of x at coordinate d is the inverse of the base entry, at the
    orbit representative, of the transversal element for d. When ``phi`` is
    given, every component must be transitive and the returned x fixes
    ``phi``. The certificate compares closure sets, so the components must
    stay below ``cap``.
    """
    transversal = build_transversal(X, preferred_reps)
    if phi is not None:
        transversal = adjust_transversal(X, transversal, phi)
    m = X.ctx.delta_size
    base = [
        transversal.elements[d].base[transversal.rep_of[d]].inverse()
        for d in range(m)
    ]
    x = WreathElement(base, Permutation.identity(m))
    conjugated = conjugate_subgroup(X, x)

    component_flags: dict[int, bool] = {}
    common_components: dict[int, GenGroup] = {}
    for orbit, rep in zip(transversal.orbits, transversal.reps):
        reference = X.component(rep).enumerate_elements(cap)
        common_components[rep] = conjugated.component(rep)
        for d in orbit:
            component_flags[d] = (
                conjugated.component(d).enumerate_elements(cap) == reference
            )
    fixes_point = None if phi is None else (x.apply(phi) == phi)
    return NormalizationResult(
        x=x,
        conjugated=conjugated,
        transversal=transversal,
        component_flags=component_flags,
        common_components=common_components,
        fixed_point=phi,
        fixes_point=fixes_point,
    )


@dataclass
class EmbedCertificate:
    """Sifting record for the containment of conjugated generators in G wr H.

    Each failure names the generator index, whether a base entry or the top
    fell outside, and the offending coordinate for base entries.
    """

    passed: bool
    failures: tuple[tuple[int, str, int | None], ...]


def sift_embedding(
    generators: tuple[WreathElement, ...], G: GenGroup, H: GenGroup
) -> EmbedCertificate:
    """Check every base entry into G and every top into H by sifting."""
    failures: list[tuple[int, str, int | None]] = []
    for k, w in enumerate(generators):
        for d, p in enumerate(w.base):
            if not G.contains(p):
                failures.append((k, "base", d))
        if not H.contains(w.top):
            failures.append((k, "top", None))
    return EmbedCertificate(passed=not failures, failures=tuple(failures))


@dataclass
class EmbedResult:
    """Certified embedding X^x <= G wr H for a coordinate-transitive X."""

    G: GenGroup
    H: GenGroup
    x: WreathElement
    conjugated: WreathSubgroup
    delta1: int
    normalization: NormalizationResult
    certificate: EmbedCertificate

    @property
    def ok(self) -> bool:
        return self.certificate.passed and self.normalization.ok


def embed_in_wreath(
    X: WreathSubgroup,
    delta1: int = 0,
    phi: Point | None = None,
    cap: int = DEFAULT_CAP,
) -> EmbedResult:
    """Conjugate X into G wr H, G the component at ``delta1``, H the induced group.

    Requires the induced coordinate action to be transitive. With ``phi``
    supplied, G must additionally be transitive and the conjugating element
    fixes ``phi``. The certificate sifts every base entry of every
    conjugated generator into G and every top into H.
    """
    if not 0 <= delta1 < X.ctx.delta_size:
        raise ValueError(f"coordinate {delta1} out of range")
    if not X.is_delta_transitive:
        raise HypothesisViolation(
            "induced action on the coordinates is not transitive"
        )
    G = X.component(delta1)
    H = X.induced_group
    normalization = normalizing_element(X, phi, preferred_reps=(delta1,), cap=cap)
    certificate = sift_embedding(normalization.conjugated.generators, G, H)
    return EmbedResult(
        G=G,
        H=H,
        x=normalization.x,
        conjugated=normalization.conjugated,
        delta1=delta1,
        normalization=normalization,
        certificate=certificate,
    )
