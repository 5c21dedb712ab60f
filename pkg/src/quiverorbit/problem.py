"""Line-oriented problem files: quiver, zero relations, named automorphisms.

Scalars are written exactly as integers or ratios ``p/q``; decimals are
rejected.  Paths are written in traversal order (first arrow first).  Example:

    [quiver]
    vertices = 1 2 3
    arrow alpha = 1 -> 2
    arrow beta = 2 -> 3

    [relations]
    zero = alpha beta

    [auto phi]
    jump = 1
    sigma alpha = 2
    lambda 0 1 = 1/6
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Algebra, ScalingAuto
from .quiver import Quiver
from .repetitive import JumpAuto


class ProblemParseError(ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line


@dataclass
class AutoSpec:
    name: str
    jump: int = 0
    sigma_scalars: dict[str, Fraction] = field(default_factory=dict)
    vertex_map: dict[str, str] = field(default_factory=dict)
    arrow_map: dict[str, str] = field(default_factory=dict)
    level_scalars: dict[tuple[int, str], Fraction] = field(default_factory=dict)


@dataclass
class Problem:
    vertices: list[str]
    arrows: list[tuple[str, str, str]]
    relations: list[list[str]]
    autos: dict[str, AutoSpec]

    def quiver(self) -> Quiver:
        return Quiver(self.vertices, self.arrows)

    def algebra(self) -> Algebra:
        return Algebra(self.quiver(), self.relations)

    def jump_auto(self, algebra: Algebra, name: str) -> JumpAuto:
        if name not in self.autos:
            raise ProblemParseError(
                f"no automorphism named {name!r}; file defines {sorted(self.autos)}"
            )
        spec = self.autos[name]
        sigma = ScalingAuto(
            algebra,
            scalars=spec.sigma_scalars,
            vertex_map=spec.vertex_map or None,
            arrow_map=spec.arrow_map or None,
        )
        return JumpAuto(algebra, spec.jump, sigma, spec.level_scalars)


def parse_scalar(text: str, line: int | None = None) -> Fraction:
    try:
        if "/" in text:
            num, den = text.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError):
        raise ProblemParseError(f"bad scalar {text!r} (expected integer or p/q)", line)


def parse_problem(text: str) -> Problem:
    problem = Problem([], [], [], {})
    section: str | None = None
    auto: AutoSpec | None = None
    seen_ids: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        if stripped.startswith("["):
            if not stripped.endswith("]"):
                raise ProblemParseError("unterminated section header", lineno)
            header = stripped[1:-1].split()
            if header == ["quiver"]:
                section = "quiver"
            elif header == ["relations"]:
                section = "relations"
            elif len(header) == 2 and header[0] == "auto":
                section = "auto"
                if header[1] in problem.autos:
                    raise ProblemParseError(f"duplicate auto {header[1]!r}", lineno)
                auto = AutoSpec(header[1])
                problem.autos[auto.name] = auto
            else:
                raise ProblemParseError(f"unknown section {stripped!r}", lineno)
            continue
        if "=" not in stripped:
            raise ProblemParseError("expected 'key = value'", lineno)
        key, _, value = stripped.partition("=")
        key_parts = key.split()
        value = value.strip()
        if section == "quiver":
            if key_parts == ["vertices"]:
                problem.vertices.extend(value.split())
            elif len(key_parts) == 2 and key_parts[0] == "arrow":
                ends = value.split("->")
                if len(ends) != 2:
                    raise ProblemParseError("arrow wants 'source -> target'", lineno)
                src, dst = ends[0].strip(), ends[1].strip()
                if not src or not dst:
                    raise ProblemParseError("arrow wants 'source -> target'", lineno)
                if src not in problem.vertices or dst not in problem.vertices:
                    raise ProblemParseError(
                        f"arrow endpoint {src!r} or {dst!r} not a declared vertex", lineno
                    )
                if key_parts[1] in seen_ids:
                    raise ProblemParseError(f"duplicate arrow {key_parts[1]!r}", lineno)
                seen_ids.add(key_parts[1])
                problem.arrows.append((key_parts[1], src, dst))
            else:
                raise ProblemParseError(f"unknown quiver entry {key.strip()!r}", lineno)
        elif section == "relations":
            if key_parts != ["zero"]:
                raise ProblemParseError(f"unknown relations entry {key.strip()!r}", lineno)
            word = value.split()
            if not word:
                raise ProblemParseError("empty relation", lineno)
            for name in word:
                if name not in seen_ids:
                    raise ProblemParseError(f"relation uses unknown arrow {name!r}", lineno)
            problem.relations.append(word)
        elif section == "auto":
            assert auto is not None
            if key_parts == ["jump"]:
                try:
                    auto.jump = int(value)
                except ValueError:
                    raise ProblemParseError(f"bad jump {value!r}", lineno)
            elif len(key_parts) == 2 and key_parts[0] == "sigma":
                if key_parts[1] not in seen_ids:
                    raise ProblemParseError(f"unknown arrow {key_parts[1]!r}", lineno)
                auto.sigma_scalars[key_parts[1]] = parse_scalar(value, lineno)
            elif len(key_parts) == 3 and key_parts[:1] == ["permute"] and key_parts[1] == "vertex":
                if key_parts[2] not in problem.vertices or value not in problem.vertices:
                    raise ProblemParseError("vertex permutation uses unknown vertex", lineno)
                auto.vertex_map[key_parts[2]] = value
            elif len(key_parts) == 3 and key_parts[0] == "permute" and key_parts[1] == "arrow":
                if key_parts[2] not in seen_ids or value not in seen_ids:
                    raise ProblemParseError("arrow permutation uses unknown arrow", lineno)
                auto.arrow_map[key_parts[2]] = value
            elif len(key_parts) == 3 and key_parts[0] == "lambda":
                try:
                    level = int(key_parts[1])
                except ValueError:
                    raise ProblemParseError(f"bad level {key_parts[1]!r}", lineno)
                if key_parts[2] not in problem.vertices:
                    raise ProblemParseError(f"unknown vertex {key_parts[2]!r}", lineno)
                auto.level_scalars[(level, key_parts[2])] = parse_scalar(value, lineno)
            else:
                raise ProblemParseError(f"unknown auto entry {key.strip()!r}", lineno)
        else:
            raise ProblemParseError("entry outside any section", lineno)
    if not problem.vertices:
        raise ProblemParseError("no [quiver] section with vertices")
    return problem


def serialize_problem(problem: Problem) -> str:
    """Canonical re-serialization; parses back to an identical problem."""
    lines = ["[quiver]"]
    lines.append("vertices = " + " ".join(problem.vertices))
    for name, src, dst in problem.arrows:
        lines.append(f"arrow {name} = {src} -> {dst}")
    if problem.relations:
        lines.append("")
        lines.append("[relations]")
        for word in problem.relations:
            lines.append("zero = " + " ".join(word))
    for name in problem.autos:
        spec = problem.autos[name]
        lines.append("")
        lines.append(f"[auto {name}]")
        lines.append(f"jump = {spec.jump}")
        for arrow, c in spec.sigma_scalars.items():
            lines.append(f"sigma {arrow} = {c}")
        for v, w in spec.vertex_map.items():
            lines.append(f"permute vertex {v} = {w}")
        for a, b in spec.arrow_map.items():
            lines.append(f"permute arrow {a} = {b}")
        for (level, v), c in spec.level_scalars.items():
            lines.append(f"lambda {level} {v} = {c}")
    return "\n".join(lines) + "\n"


def load_problem(path: str) -> Problem:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_problem(handle.read())
