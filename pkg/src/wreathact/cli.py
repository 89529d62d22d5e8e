"""Batch front-end over text files.

Subcommands cover every pipeline: ``components``, ``normalize``, ``embed``,
``split``, ``code-canon`` and the oracle suite ``verify``. All input and
output is plain ASCII text with newline endings; reports are ``key: value``
lines with every iteration order fixed, so identical inputs produce
byte-identical reports.

Group files: a header line ``q m`` followed by one wreath element per
line, serialized as ``base=[[...];...] top=[...]``. Code files: the same
header followed by one word per line as a bare comma list. Blank lines and
``#`` comments are allowed in both.

Exit status: 0 on success, 1 when a hypothesis of the requested
construction fails (reported, expected), 2 on parse or internal errors.
The environment variable ``WREATHACT_CAP`` overrides the default
enumeration cap.
"""

from __future__ import annotations

import argparse
import math
import os
import random
import sys
from typing import Sequence

from .errors import EnumerationOverflow, HypothesisViolation, ParseError
from .perm import DEFAULT_CAP
from .wreath import WreathContext, WreathElement, format_point, parse_point, stabilizer_order_oracle
from .components import WreathSubgroup
from .normalize import embed_in_wreath, normalizing_element
from .codes import canonicalize, parse_code

ENV_CAP = "WREATHACT_CAP"


def default_cap() -> int:
    raw = os.environ.get(ENV_CAP)
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ParseError(f"{ENV_CAP} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ParseError(f"{ENV_CAP} must be positive, got {cap}")
    return cap


def parse_group_text(text: str) -> WreathSubgroup:
    """Parse a group file: header ``q m`` then one wreath element per line."""
    ctx: WreathContext | None = None
    generators: list[WreathElement] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ctx is None:
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(f"line {number}: expected header 'q m'")
            try:
                ctx = WreathContext(int(parts[0]), int(parts[1]))
            except ValueError as exc:
                raise ParseError(f"line {number}: {exc}") from None
            continue
        try:
            element = WreathElement.parse(line)
        except ValueError as exc:
            raise ParseError(f"line {number}: {exc}") from None
        if element.ctx != ctx:
            raise ParseError(
                f"line {number}: element context {element.ctx!r} does not match header {ctx!r}"
            )
        generators.append(element)
    if ctx is None:
        raise ParseError("missing header line 'q m'")
    return WreathSubgroup(ctx, generators)


def load_group(path: str) -> WreathSubgroup:
    with open(path, "r", encoding="ascii") as handle:
        return parse_group_text(handle.read())


def load_code(path: str):
    with open(path, "r", encoding="ascii") as handle:
        return parse_code(handle.read())


def _emit(out, key: str, value) -> None:
    out.write(f"{key}: {value}\n")


def _fmt_ctx(ctx: WreathContext) -> str:
    return f"q={ctx.gamma_size} m={ctx.delta_size}"


def _fmt_perm_list(perms) -> str:
    return "[" + ";".join(str(p) for p in perms) + "]"


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _parse_fix(arg: str | None, ctx: WreathContext):
    if arg is None:
        return None
    return parse_point(arg, ctx)


# ----- subcommand handlers -----


def cmd_components(args, out) -> int:
    X = load_group(args.group)
    _emit(out, "context", _fmt_ctx(X.ctx))
    _emit(out, "generator-count", len(X.generators))
    for k, g in enumerate(X.generators):
        _emit(out, f"generator {k}", g)
    _emit(out, "delta-orbit-count", len(X.delta_orbits))
    for k, orbit in enumerate(X.delta_orbits):
        _emit(out, f"delta-orbit {k}", ",".join(str(d) for d in orbit))
    for d in range(X.ctx.delta_size):
        comp = X.component(d)
        _emit(
            out,
            f"component {d}",
            f"generators={_fmt_perm_list(comp.generators)}"
            f" transitivity={comp.transitivity_degree()}",
        )
    return 0


def cmd_normalize(args, out) -> int:
    X = load_group(args.group)
    phi = _parse_fix(args.fix, X.ctx)
    result = normalizing_element(X, phi, cap=args.cap)
    _emit(out, "context", _fmt_ctx(X.ctx))
    transversal = result.transversal
    for k, (orbit, rep) in enumerate(zip(transversal.orbits, transversal.reps)):
        _emit(
            out,
            f"delta-orbit {k}",
            f"points={','.join(str(d) for d in orbit)} rep={rep}",
        )
    _emit(out, "x", result.x)
    for k, g in enumerate(result.conjugated.generators):
        _emit(out, f"conjugated-generator {k}", g)
    for rep in transversal.reps:
        comp = result.common_components[rep]
        _emit(
            out,
            f"common-component rep={rep}",
            f"generators={_fmt_perm_list(comp.generators)}",
        )
    _emit(out, "components-constant", _yn(all(result.component_flags.values())))
    if phi is not None:
        _emit(out, "fixed-point", format_point(phi))
        _emit(out, "fixed-point-preserved", _yn(bool(result.fixes_point)))
    _emit(out, "certificate", "PASS" if result.ok else "FAIL")
    return 0 if result.ok else 2


def cmd_embed(args, out) -> int:
    X = load_group(args.group)
    phi = _parse_fix(args.fix, X.ctx)
    result = embed_in_wreath(X, delta1=args.delta1, phi=phi, cap=args.cap)
    _emit(out, "context", _fmt_ctx(X.ctx))
    _emit(out, "delta1", result.delta1)
    _emit(out, "G-generators", _fmt_perm_list(result.G.generators))
    _emit(out, "G-transitivity", result.G.transitivity_degree())
    _emit(out, "H-generators", _fmt_perm_list(result.H.generators))
    _emit(out, "x", result.x)
    for k, g in enumerate(result.conjugated.generators):
        _emit(out, f"conjugated-generator {k}", g)
    _emit(
        out,
        "components-constant",
        _yn(all(result.normalization.component_flags.values())),
    )
    if phi is not None:
        _emit(out, "fixed-point", format_point(phi))
        _emit(out, "fixed-point-preserved", _yn(bool(result.normalization.fixes_point)))
    _emit(out, "certificate", "PASS" if result.ok else "FAIL")
    return 0 if result.ok else 2


def cmd_split(args, out) -> int:
    X = load_group(args.group)
    try:
        delta0 = [int(part) for part in args.delta0.split(",")]
    except ValueError:
        raise ParseError(f"--delta0 expects a comma list of coordinates, got {args.delta0!r}") from None
    result = X.split(delta0, cap=args.cap)
    _emit(out, "context", _fmt_ctx(X.ctx))
    for line in result.report_lines():
        out.write(line + "\n")
    for name, half in (("part0", result.first), ("part1", result.second)):
        _emit(out, f"{name}-context", _fmt_ctx(half.ctx))
        for k, g in enumerate(half.generators):
            _emit(out, f"{name}-generator {k}", g)
    _emit(out, "result", "PASS" if result.ok else "FAIL")
    return 0 if result.ok else 2


def cmd_code_canon(args, out) -> int:
    code = load_code(args.code)
    X = load_group(args.group)
    result = canonicalize(code, X, args.gamma, args.nu, cap=args.cap)
    _emit(out, "context", _fmt_ctx(code.ctx))
    _emit(out, "code-size", len(code))
    _emit(out, "min-distance", code.min_distance())
    for name, factor in (
        ("x1", result.x1),
        ("x2", result.x2),
        ("x3", result.x3),
        ("x4", result.x4),
        ("x", result.x),
    ):
        _emit(out, name, factor)
    _emit(out, "pinned-constant", format_point(result.pinned_constant))
    _emit(out, "pinned-mixed", format_point(result.pinned_mixed))
    _emit(out, "transformed-size", len(result.code))
    _emit(out, "transformed-min-distance", result.code.min_distance())
    for k, word in enumerate(result.code.sorted_words()):
        _emit(out, f"transformed-word {k}", format_point(word))
    _emit(out, "G-generators", _fmt_perm_list(result.component_group.generators))
    _emit(out, "K-generators", _fmt_perm_list(result.induced_group.generators))
    _emit(out, "certificate", "PASS" if result.certificate.passed else "FAIL")
    return 0 if result.certificate.passed else 2


def cmd_verify(args, out) -> int:
    ctx = WreathContext(args.q, args.m)
    rng = random.Random(args.seed)
    _emit(out, "context", _fmt_ctx(ctx))
    _emit(out, "seed", args.seed)

    # right-action axiom: applying a product equals applying the factors in turn
    failures = 0
    points = list(ctx.all_points())
    for _ in range(args.pairs):
        a = ctx.random_element(rng)
        b = ctx.random_element(rng)
        ab = a * b
        for phi in points:
            if ab.apply(phi) != b.apply(a.apply(phi)):
                failures += 1
    _emit(out, "action-pairs", args.pairs)
    _emit(out, "action-failures", failures)

    # stabilizer of the constant word in the full wreath product
    constant = ctx.constant_point(0)
    count = stabilizer_order_oracle(ctx, constant, cap=args.cap)
    expected = math.factorial(ctx.gamma_size - 1) ** ctx.delta_size * math.factorial(
        ctx.delta_size
    )
    _emit(out, "stabilizer-point", format_point(constant))
    _emit(out, "stabilizer-count", count)
    _emit(out, "stabilizer-expected", expected)

    # random 2-generated subgroups: transitivity forces transitive components
    violations = 0
    transitive = 0
    for _ in range(args.samples):
        gens = [ctx.random_element(rng) for _ in range(2)]
        report = WreathSubgroup(ctx, gens).transitivity_report(cap=args.cap)
        if report.transitive_on_points:
            transitive += 1
        if report.violation:
            violations += 1
    _emit(out, "scan-samples", args.samples)
    _emit(out, "scan-transitive-count", transitive)
    _emit(out, "scan-violations", violations)

    ok = failures == 0 and count == expected and violations == 0
    _emit(out, "result", "PASS" if ok else "FAIL")
    return 0 if ok else 2


# ----- argument parsing -----


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wreathact",
        description="Exact computations with subgroups of wreath products in product action.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cap(p):
        p.add_argument(
            "--cap",
            type=int,
            default=None,
            help="enumeration cap for brute-force checks (default from "
            f"{ENV_CAP} or {DEFAULT_CAP})",
        )

    p = sub.add_parser("components", help="coordinate components and orbits")
    p.add_argument("group", help="group file")
    add_cap(p)
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("normalize", help="conjugate so components are constant per orbit")
    p.add_argument("group", help="group file")
    p.add_argument("--fix", help="point of Pi the conjugating element must fix")
    add_cap(p)
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("embed", help="certified embedding into G wr H")
    p.add_argument("group", help="group file")
    p.add_argument("--delta1", type=int, default=0, help="coordinate whose component is G")
    p.add_argument("--fix", help="point of Pi the conjugating element must fix")
    add_cap(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("split", help="split along an invariant coordinate subset")
    p.add_argument("group", help="group file")
    p.add_argument("--delta0", required=True, help="comma list of coordinates")
    add_cap(p)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("code-canon", help="pin two words of an equivalent code")
    p.add_argument("code", help="code file")
    p.add_argument("group", help="group file of code automorphisms")
    p.add_argument("--gamma", type=int, required=True, help="letter of the constant word")
    p.add_argument("--nu", type=int, required=True, help="letter of the first d entries")
    add_cap(p)
    p.set_defaults(func=cmd_code_canon)

    p = sub.add_parser("verify", help="oracle suite at a given context size")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--pairs", type=int, default=200, help="random pairs for the action axiom")
    p.add_argument("--samples", type=int, default=500, help="random subgroups for the scan")
    p.add_argument("--seed", type=int, default=0)
    add_cap(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "cap", None) is None:
            args.cap = default_cap()
        return args.func(args, out)
    except HypothesisViolation as exc:
        out.write(f"error: {exc}\n")
        return 1
    except (ParseError, EnumerationOverflow, ValueError, OSError) as exc:
        out.write(f"error: {exc}\n")
        return 2
    except Exception as exc:  # pragma: no cover - internal errors still exit 2
        out.write(f"internal error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
