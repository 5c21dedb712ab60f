"""Command line front end.

Exit status: 0 success / equivalent, 1 not equivalent (criterion or
verification failed), 2 input error (parse failure, inadmissible relations,
incompatible automorphisms, jump-0 orbit request).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import NonAdmissibleError, has_no_nonzero_oriented_cycles
from .criterion import (
    GaugePreconditionError,
    ObjectMismatchError,
    build_cocycle,
    build_gauge,
    check_scaling_condition,
    extend_gauge,
)
from .oracle import all_cycles_pass, enumerate_all_cycles, structure_table
from .orbit import (
    JumpZeroError,
    build_orbit,
    graded_iso_from_gauge,
    orbit_window_bounds,
    verify_graded_iso,
)
from .problem import ProblemParseError, load_problem, serialize_problem
from .quiver import cycle_value, enumerate_simple_cycles
from .repetitive import build_window
from . import __version__

INPUT_ERROR = 2
NOT_EQUIVALENT = 1


class InputError(Exception):
    pass


def _parse_window(text: str) -> tuple[int, int]:
    try:
        lo_text, hi_text = text.split("..")
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise InputError(f"bad --window {text!r}, expected lo..hi")
    if lo > hi:
        raise InputError(f"bad --window {text!r}: empty range")
    return lo, hi


def _load(path: str):
    problem = load_problem(path)
    return problem, problem.algebra()


def _auto(problem, algebra, name: str):
    return problem.jump_auto(algebra, name)


def _window_for(args, algebra, jump: int):
    if args.window:
        lo, hi = _parse_window(args.window)
    else:
        lo, hi = orbit_window_bounds(jump if jump != 0 else 1)
    return build_window(algebra, lo, hi)


def _gauge_lines(gauge) -> list[str]:
    def key(item):
        k = item[0]
        return k if isinstance(k, tuple) else (0, k)

    out = []
    for k, c in sorted(gauge.items(), key=lambda item: str(key(item))):
        if isinstance(k, tuple):
            out.append(f"  rho {k[1]}[{k[0]}] = {c}")
        else:
            out.append(f"  rho {k} = {c}")
    return out


def cmd_cycles(args) -> int:
    _, algebra = _load(args.file)
    reps = enumerate_simple_cycles(algebra.quiver)
    if not reps:
        print("no simple cycles")
        return 0
    for c in reps:
        print(f"cycle at {c.start}: {c}")
    return 0


def _criterion(problem, algebra, args):
    """Shared criterion stage; returns (phi, psi, gauge0, window_gauge) or
    exits with the failing datum printed."""
    phi = _auto(problem, algebra, args.auto1)
    psi = _auto(problem, algebra, args.auto2)
    if not has_no_nonzero_oriented_cycles(algebra):
        raise InputError(
            "the algebra has nonzero oriented cycles; the criterion assumes "
            "every endomorphism space is one-dimensional"
        )
    if phi.jump != psi.jump:
        raise InputError(f"jump mismatch: {phi.jump} vs {psi.jump}")
    ratio = check_scaling_condition(phi.base, psi.base)
    if ratio is None:
        print("not equivalent: the ratio of the base automorphisms is not a "
              "single scalar per parallel arrow class")
        return None
    for cyc in enumerate_simple_cycles(algebra.quiver):
        value = cycle_value(ratio, cyc)
        if value != 1:
            print(f"not equivalent: cycle {cyc} has ratio value {value}")
            return None
    if args.oracle:
        bound = args.max_cycle_len or 2 * len(algebra.quiver.vertices)
        agreed = all_cycles_pass(ratio, enumerate_all_cycles(algebra.quiver, bound))
        print(f"oracle: all cycles up to length {bound} pass: {agreed}")
    gauge0 = build_gauge(phi.base, psi.base)
    assert gauge0 is not None
    window = _window_for(args, algebra, phi.jump)
    gauge = extend_gauge(phi, psi, gauge0, window)
    return phi, psi, gauge0, gauge


def cmd_check(args) -> int:
    problem, algebra = _load(args.file)
    result = _criterion(problem, algebra, args)
    if result is None:
        return NOT_EQUIVALENT
    phi, _psi, gauge0, gauge = result
    kind = "isomorphic as graded algebras" if phi.jump else "equivalent as graded categories"
    print(f"equivalent: orbit categories are {kind}")
    print("base gauge:")
    print("\n".join(_gauge_lines(gauge0)))
    print("window gauge:")
    print("\n".join(_gauge_lines(gauge)))
    return 0


def cmd_rho(args) -> int:
    problem, algebra = _load(args.file)
    result = _criterion(problem, algebra, args)
    if result is None:
        return NOT_EQUIVALENT
    _phi, _psi, gauge0, gauge = result
    print("\n".join(_gauge_lines(gauge0)))
    print("\n".join(_gauge_lines(gauge)))
    return 0


def _orbit_json(g) -> dict:
    def obj(o):
        return f"{o[1]}[{o[0]}]"

    def name(e):
        return f"{obj(e.src)}->{obj(e.dst)}|deg {e.degree}|{e.welt}"

    products = []
    for (h, f), (c, e) in g.table.items():
        products.append({"left": name(h), "right": name(f), "scalar": str(c), "result": name(e)})
    products.sort(key=lambda d: (d["left"], d["right"]))
    return {
        "dim": g.dim,
        "objects": [obj(o) for o in g.objects],
        "basis": [name(e) for e in g.basis],
        "products": products,
    }


def cmd_orbit(args) -> int:
    problem, algebra = _load(args.file)
    phi = _auto(problem, algebra, args.auto)
    if phi.jump == 0:
        raise InputError(
            "jump 0 gives an infinite orbit category (one object per level); "
            "only nonzero jumps produce a finite algebra; use `check` for the "
            "equivalence certificate"
        )
    window = _window_for(args, algebra, phi.jump)
    orbit = build_orbit(window, phi)
    text = (
        json.dumps(_orbit_json(orbit), indent=2) + "\n"
        if args.format == "json"
        else structure_table(orbit)
    )
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    problem, algebra = _load(args.file)
    phi = _auto(problem, algebra, args.auto1)
    psi = _auto(problem, algebra, args.auto2)
    if phi.jump == 0 or psi.jump == 0:
        raise InputError(
            "jump 0 gives an infinite orbit category; the graded-iso pipeline "
            "needs a nonzero jump (use `check` for the jump-0 certificate)"
        )
    result = _criterion(problem, algebra, args)
    if result is None:
        return NOT_EQUIVALENT
    phi, psi, _gauge0, gauge = result
    print("criterion: ok")
    window = _window_for(args, algebra, phi.jump)
    orbit_phi = build_orbit(window, phi)
    print(f"orbit of {args.auto1}: dim {orbit_phi.dim}")
    orbit_psi = build_orbit(window, psi)
    print(f"orbit of {args.auto2}: dim {orbit_psi.dim}")
    cocycle = build_cocycle(phi, psi, gauge, degree_range=2, objects=orbit_phi.objects)
    print("cocycle: ok")
    iso = graded_iso_from_gauge(orbit_phi, orbit_psi, gauge, cocycle)
    if verify_graded_iso(iso, orbit_phi, orbit_psi):
        print("isomorphic (graded)")
        return 0
    print("verification failed")
    return NOT_EQUIVALENT


def cmd_dump(args) -> int:
    problem, _algebra = _load(args.file)
    if args.format == "json":
        data = {
            "vertices": problem.vertices,
            "arrows": [list(a) for a in problem.arrows],
            "relations": problem.relations,
            "autos": {
                name: {
                    "jump": spec.jump,
                    "sigma": {a: str(c) for a, c in spec.sigma_scalars.items()},
                    "permute_vertices": spec.vertex_map,
                    "permute_arrows": spec.arrow_map,
                    "lambda": {f"{i} {v}": str(c) for (i, v), c in spec.level_scalars.items()},
                }
                for name, spec in problem.autos.items()
            },
        }
        print(json.dumps(data, indent=2))
    else:
        sys.stdout.write(serialize_problem(problem))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiverorbit",
        description="orbit categories of repetitive quiver algebras",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--window", help="level window lo..hi (default: auto)")
        p.add_argument("--max-cycle-len", type=int, default=None,
                       help="bound for the brute-force cycle oracle")
        p.add_argument("--oracle", action="store_true",
                       help="cross-check the verdict against the all-cycles oracle")

    p = sub.add_parser("cycles", help="list simple-cycle representatives")
    p.add_argument("file")
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("check", help="decide the cycle criterion, print the gauge")
    p.add_argument("file")
    p.add_argument("auto1")
    p.add_argument("auto2")
    add_common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("rho", help="print the gauge certificate only")
    p.add_argument("file")
    p.add_argument("auto1")
    p.add_argument("auto2")
    add_common(p)
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("orbit", help="dump the structure constants of an orbit algebra")
    p.add_argument("file")
    p.add_argument("auto")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--window", help="level window lo..hi (default: auto)")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("verify", help="end-to-end graded isomorphism verification")
    p.add_argument("file")
    p.add_argument("auto1")
    p.add_argument("auto2")
    add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dump", help="re-serialize the problem file canonically")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_dump)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (
        InputError,
        ProblemParseError,
        NonAdmissibleError,
        ObjectMismatchError,
        GaugePreconditionError,
        JumpZeroError,
        FileNotFoundError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
