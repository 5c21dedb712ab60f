"""Quivers, walks in the double quiver, and cycle combinatorics.

Walks are stored in traversal order: ``steps[0]`` is taken first.  A step is
an arrow traversed forwards or backwards; reversed steps print with a ``~``
suffix.  Cycle representatives emitted by :func:`enumerate_simple_cycles` are
canonical: the lexicographically least rotation of the cycle or of its
inverse, keyed by (arrow declaration index, direction flag).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

VertexId = Hashable
ArrowId = Hashable


@dataclass(frozen=True)
class Arrow:
    name: ArrowId
    source: VertexId
    target: VertexId


class Quiver:
    """Finite directed multigraph; vertices and arrows keep declaration order."""

    def __init__(
        self,
        vertices: Iterable[VertexId],
        arrows: Iterable[Arrow | tuple[ArrowId, VertexId, VertexId]],
    ) -> None:
        self.vertices: tuple[VertexId, ...] = tuple(vertices)
        self.arrows: tuple[Arrow, ...] = tuple(
            a if isinstance(a, Arrow) else Arrow(*a) for a in arrows
        )
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex ids")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("duplicate arrow ids")
        self._vertex_order = {v: i for i, v in enumerate(self.vertices)}
        self._arrow_order = {a.name: i for i, a in enumerate(self.arrows)}
        self._by_name = {a.name: a for a in self.arrows}
        for a in self.arrows:
            if a.source not in self._vertex_order or a.target not in self._vertex_order:
                raise ValueError(f"arrow {a.name!r} has undeclared endpoint")

    def arrow(self, name: ArrowId) -> Arrow:
        return self._by_name[name]

    def has_arrow(self, name: ArrowId) -> bool:
        return name in self._by_name

    def vertex_order(self, v: VertexId) -> int:
        return self._vertex_order[v]

    def arrow_order(self, name: ArrowId) -> int:
        return self._arrow_order[name]

    def out_arrows(self, v: VertexId) -> tuple[Arrow, ...]:
        return tuple(a for a in self.arrows if a.source == v)

    def in_arrows(self, v: VertexId) -> tuple[Arrow, ...]:
        return tuple(a for a in self.arrows if a.target == v)

    def components(self) -> tuple[tuple[VertexId, ...], ...]:
        """Connected components of the underlying undirected graph."""
        seen: set[VertexId] = set()
        out: list[tuple[VertexId, ...]] = []
        for v in self.vertices:
            if v in seen:
                continue
            comp = []
            stack = [v]
            seen.add(v)
            while stack:
                w = stack.pop()
                comp.append(w)
                for a in self.arrows:
                    for u, t in ((a.source, a.target), (a.target, a.source)):
                        if u == w and t not in seen:
                            seen.add(t)
                            stack.append(t)
            comp.sort(key=self.vertex_order)
            out.append(tuple(comp))
        return tuple(out)

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def __repr__(self) -> str:
        return f"Quiver({list(self.vertices)!r}, {len(self.arrows)} arrows)"


def double_quiver(q: Quiver) -> Quiver:
    """Add a fresh reversed arrow with swapped endpoints for every arrow.

    The reversed copy of arrow ``a`` is named ``(a, '~')``.
    """
    arrows: list[Arrow] = list(q.arrows)
    arrows.extend(Arrow((a.name, "~"), a.target, a.source) for a in q.arrows)
    return Quiver(q.vertices, arrows)


@dataclass(frozen=True)
class Step:
    arrow: ArrowId
    inverse: bool = False

    def flipped(self) -> "Step":
        return Step(self.arrow, not self.inverse)

    def __str__(self) -> str:
        return f"{self.arrow}~" if self.inverse else f"{self.arrow}"


@dataclass(frozen=True)
class Walk:
    """A path in the double quiver; empty walks carry their anchor vertex."""

    quiver: Quiver = field(repr=False, compare=False)
    start: VertexId
    steps: tuple[Step, ...] = ()

    def __post_init__(self) -> None:
        at = self.start
        for s in self.steps:
            src, dst = self._endpoints(s)
            if src != at:
                raise ValueError(f"step {s} starts at {src!r}, expected {at!r}")
            at = dst

    def _endpoints(self, s: Step) -> tuple[VertexId, VertexId]:
        a = self.quiver.arrow(s.arrow)
        return (a.target, a.source) if s.inverse else (a.source, a.target)

    @property
    def source(self) -> VertexId:
        return self.start

    @property
    def target(self) -> VertexId:
        at = self.start
        for s in self.steps:
            at = self._endpoints(s)[1]
        return at

    def visited(self) -> tuple[VertexId, ...]:
        """Vertices in traversal order, length ``len(self) + 1``."""
        out = [self.start]
        for s in self.steps:
            out.append(self._endpoints(s)[1])
        return tuple(out)

    def __len__(self) -> int:
        return len(self.steps)

    def inverse(self) -> "Walk":
        return Walk(self.quiver, self.target, tuple(s.flipped() for s in reversed(self.steps)))

    def concat(self, other: "Walk") -> "Walk":
        """Traverse ``self`` first, then ``other``."""
        if other.start != self.target:
            raise ValueError("walks not composable")
        return Walk(self.quiver, self.start, self.steps + other.steps)

    def __str__(self) -> str:
        if not self.steps:
            return f"(at {self.start})"
        return ".".join(str(s) for s in self.steps)


class Cycle(Walk):
    """Nonempty closed walk."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not self.steps:
            raise ValueError("cycles are nonempty")
        if self.target != self.start:
            raise ValueError("walk is not closed")

    @property
    def is_simple(self) -> bool:
        starts = self.visited()[:-1]
        return len(set(starts)) == len(starts)


def rotate_cycle(c: Cycle, shift: int) -> Cycle:
    """Rotate the traversal left by ``shift`` steps, ``1 <= shift <= len(c)``."""
    m = len(c)
    if not 1 <= shift <= m:
        raise ValueError(f"shift {shift} out of range 1..{m}")
    k = shift % m
    return Cycle(c.quiver, c.visited()[k], c.steps[k:] + c.steps[:k])


def cycles_equivalent(c1: Cycle, c2: Cycle) -> bool:
    """True iff some rotation of ``c1`` equals ``c2`` or its inverse."""
    if len(c1) != len(c2):
        return False
    inv = c2.inverse()
    for shift in range(1, len(c1) + 1):
        r = rotate_cycle(c1, shift)
        if (r.start, r.steps) in (
            (c2.start, c2.steps),
            (inv.start, inv.steps),
        ):
            return True
    return False


def _step_key(q: Quiver, s: Step) -> tuple[int, int]:
    return (q.arrow_order(s.arrow), 1 if s.inverse else 0)


def canonical_cycle(c: Cycle) -> Cycle:
    """Least rotation of ``c`` or of its inverse, in step-key order."""
    best: Cycle | None = None
    best_key: tuple | None = None
    for base in (c, c.inverse()):
        base = Cycle(base.quiver, base.start, base.steps)
        for shift in range(1, len(base) + 1):
            r = rotate_cycle(base, shift)
            key = tuple(_step_key(c.quiver, s) for s in r.steps)
            if best_key is None or key < best_key:
                best, best_key = r, key
    assert best is not None
    return best


def _moves(q: Quiver, v: VertexId) -> list[tuple[Step, VertexId]]:
    out: list[tuple[Step, VertexId]] = []
    for a in q.arrows:
        if a.source == v:
            out.append((Step(a.name), a.target))
        if a.target == v:
            out.append((Step(a.name, inverse=True), a.source))
    return out


def enumerate_simple_cycles(q: Quiver) -> list[Cycle]:
    """One canonical representative per equivalence class of simple cycles.

    Length-2 backtracking classes (an arrow followed by its own inverse) are
    omitted: their value under any scalar family is identically 1, so they
    never constrain the cycle criterion.  Output is sorted by (length, key).
    """
    found: dict[tuple, Cycle] = {}

    def dfs(base: VertexId, at: VertexId, steps: list[Step], visited: set[VertexId]) -> None:
        for step, nxt in _moves(q, at):
            if steps and step == steps[-1].flipped():
                continue
            if nxt == base:
                if len(steps) == 1 and step.arrow == steps[0].arrow:
                    continue  # backtracking 2-cycle
                cyc = Cycle(q, base, tuple(steps) + (step,))
                can = canonical_cycle(cyc)
                found.setdefault((can.start, can.steps), can)
                continue
            if nxt in visited or q.vertex_order(nxt) < q.vertex_order(base):
                continue
            if len(steps) + 1 >= len(q.vertices):
                continue
            visited.add(nxt)
            steps.append(step)
            dfs(base, nxt, steps, visited)
            steps.pop()
            visited.remove(nxt)

    for v in q.vertices:
        dfs(v, v, [], {v})
    # loops (length-1 cycles) are found above; dedupe handled by canonical keys
    reps = sorted(
        found.values(),
        key=lambda c: (len(c), tuple(_step_key(q, s) for s in c.steps)),
    )
    return reps


def cycle_value(scalars: Mapping[ArrowId, Fraction | int], w: Walk) -> Fraction:
    """Product of arrow scalars along the walk, inverted on reversed steps."""
    value = Fraction(1)
    for s in w.steps:
        try:
            x = Fraction(scalars[s.arrow])
        except KeyError:
            raise KeyError(f"no scalar for arrow {s.arrow!r}") from None
        if x == 0:
            raise ValueError(f"scalar for arrow {s.arrow!r} is zero")
        value = value / x if s.inverse else value * x
    return value


def spanning_walks(q: Quiver) -> list[tuple[VertexId, dict[VertexId, Walk]]]:
    """Per connected component: (base vertex, walk from the base to each vertex).

    The tree is grown breadth-first scanning arrows in declaration order, so
    the result is deterministic; the base of each component is its least
    vertex and receives the empty walk.
    """
    out: list[tuple[VertexId, dict[VertexId, Walk]]] = []
    for comp in q.components():
        base = comp[0]
        walks: dict[VertexId, Walk] = {base: Walk(q, base)}
        frontier = [base]
        while frontier:
            nxt: list[VertexId] = []
            for v in frontier:
                for step, w in _moves(q, v):
                    if w not in walks:
                        walks[w] = walks[v].concat(Walk(q, v, (step,)))
                        nxt.append(w)
            frontier = nxt
        out.append((base, walks))
    return out
