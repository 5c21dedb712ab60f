"""The isomorphism criterion: arrow ratios, cycle values, gauge certificates.

Two automorphisms that agree on objects are intertwined by a *gauge*: a
nonzero scalar per object with ``gauge(target) * g(f) = h(f) * gauge(source)``
on every basis morphism.  On the base algebra a gauge exists iff the ratio of
the two automorphisms is diagonal on arrows with value 1 along every simple
cycle; the construction walks a spanning tree and is pinned to 1 at each
component base.  Gauges extend to the repetitive window level by level, and
the per-degree products of gauge values form the cocycle that twists one
orbit algebra into the other.

All equalities here are exact; there is no tolerance anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Optional

from .algebra import Algebra, ScalingAuto
from .quiver import ArrowId, VertexId, cycle_value, enumerate_simple_cycles, spanning_walks
from .repetitive import JumpAuto, Obj, RepetitiveWindow, WinElt

__all__ = [
    "Gauge",
    "Cocycle",
    "ObjectMismatchError",
    "GaugePreconditionError",
    "check_scaling_condition",
    "check_cycle_condition",
    "build_gauge",
    "gauge_failure_on_algebra",
    "extend_gauge",
    "window_gauge_failure",
    "shift_gauge",
    "build_cocycle",
]


class ObjectMismatchError(ValueError):
    """The two automorphisms do not agree on objects."""

    def __init__(self, message: str, obj=None) -> None:
        super().__init__(message)
        self.obj = obj


class GaugePreconditionError(ValueError):
    """A gauge precondition fails; carries the failing generator."""

    def __init__(self, message: str, generator=None) -> None:
        super().__init__(message)
        self.generator = generator


class Gauge(dict):
    """Nonzero scalar per object (vertices, or (level, vertex) pairs)."""

    def __init__(self, values: Mapping) -> None:
        super().__init__()
        for key, c in values.items():
            c = Fraction(c)
            if c == 0:
                raise ValueError(f"gauge value at {key!r} is zero")
            self[key] = c


def check_scaling_condition(
    g: ScalingAuto, h: ScalingAuto
) -> Optional[dict[ArrowId, Fraction]]:
    """Per-arrow ratio of ``h`` to ``g`` when it is diagonal.

    Returns None when the ratio permutes arrows nontrivially or scales two
    parallel arrows differently (no single constant per vertex pair exists).
    """
    if g.algebra is not h.algebra:
        raise ValueError("autos live on different algebras")
    if g.vertex_map != h.vertex_map:
        raise ObjectMismatchError("automorphisms disagree on vertices")
    if g.arrow_map != h.arrow_map:
        return None
    ratio = {a: h.scalars[a] / g.scalars[a] for a in g.scalars}
    per_pair: dict[tuple[VertexId, VertexId], Fraction] = {}
    for arrow in g.algebra.quiver.arrows:
        key = (arrow.source, arrow.target)
        if key in per_pair and per_pair[key] != ratio[arrow.name]:
            return None
        per_pair[key] = ratio[arrow.name]
    return ratio


def check_cycle_condition(ratio: Mapping[ArrowId, Fraction], q) -> bool:
    """True iff the ratio has value 1 along every simple-cycle representative."""
    return all(cycle_value(ratio, c) == 1 for c in enumerate_simple_cycles(q))


def build_gauge(g: ScalingAuto, h: ScalingAuto) -> Optional[Gauge]:
    """Vertex gauge intertwining ``g`` and ``h`` on the base algebra.

    Normalized to 1 at the base of each connected component; None when the
    scaling or cycle condition fails.  Well-definedness along different walks
    is exactly the cycle condition.
    """
    ratio = check_scaling_condition(g, h)
    if ratio is None:
        return None
    quiver = g.algebra.quiver
    if not check_cycle_condition(ratio, quiver):
        return None
    values: dict[VertexId, Fraction] = {}
    for _base, walks in spanning_walks(quiver):
        for v, walk in walks.items():
            values[v] = cycle_value(ratio, walk)
    return Gauge(values)


def gauge_failure_on_algebra(
    g: ScalingAuto, h: ScalingAuto, gauge: Mapping[VertexId, Fraction]
) -> Optional[object]:
    """First basis path violating the intertwining, or None if valid."""
    alg = g.algebra
    for (x, y), paths in alg.basis.items():
        for p in paths:
            cg, pg = g.path_scalar(p), g.map_path(p)
            ch, ph = h.path_scalar(p), h.map_path(p)
            if pg != ph or gauge[y] * cg != ch * gauge[x]:
                return p
    return None


def _ensure_comparable(phi: JumpAuto, psi: JumpAuto) -> None:
    if phi.algebra is not psi.algebra:
        raise ValueError("automorphisms live on different algebras")
    if phi.jump != psi.jump:
        raise ObjectMismatchError(
            f"jump mismatch: {phi.jump} vs {psi.jump}", obj=None
        )
    for x in phi.algebra.quiver.vertices:
        if phi.base.vertex_map[x] != psi.base.vertex_map[x]:
            raise ObjectMismatchError(
                f"automorphisms disagree on the object {x!r}[0]: "
                f"{phi.base.vertex_map[x]!r} vs {psi.base.vertex_map[x]!r}",
                obj=(0, x),
            )


def window_gauge_failure(
    window: RepetitiveWindow,
    phi: JumpAuto,
    psi: JumpAuto,
    gauge: Mapping[Obj, Fraction],
) -> Optional[WinElt]:
    """First window generator violating ``gauge(v) phi(f) = psi(f) gauge(u)``.

    Only generators whose images stay inside the window are examined.
    """
    for elt in window.basis():
        cp, ep = phi.apply_elt(elt)
        cq, eq = psi.apply_elt(elt)
        if not (window.contains_elt(ep) and window.contains_elt(eq)):
            continue
        u, v = elt.source, elt.target
        if u not in gauge or v not in gauge:
            continue
        if ep != eq or gauge[v] * cp != cq * gauge[u]:
            return elt
    return None


def extend_gauge(
    phi: JumpAuto,
    psi: JumpAuto,
    gauge0: Mapping[VertexId, Fraction],
    window: RepetitiveWindow,
) -> Gauge:
    """Extend a base gauge over the window objects.

    ``gauge0`` must intertwine the base components of ``phi`` and ``psi``
    (their jump-0 parts at level 0); level ``i`` rescales it by the ratio of
    the accumulated level scalars at ``i + jump``.  The result satisfies the
    intertwining on every window generator; for jump 0 its restriction to
    level 0 is ``gauge0`` itself.
    """
    _ensure_comparable(phi, psi)
    if phi.base.arrow_map != psi.base.arrow_map:
        raise GaugePreconditionError(
            "base automorphisms permute arrows differently", generator=None
        )
    fail = gauge_failure_on_algebra(phi.base, psi.base, gauge0)
    if fail is not None:
        raise GaugePreconditionError(
            f"gauge0 does not intertwine the base components on {fail}",
            generator=fail,
        )
    n = phi.jump
    values: dict[Obj, Fraction] = {}
    for (i, x) in window.objects:
        values[(i, x)] = (
            phi.cumulative(i + n, x) / psi.cumulative(i + n, x) * Fraction(gauge0[x])
        )
    gauge = Gauge(values)
    bad = window_gauge_failure(window, phi, psi, gauge)
    assert bad is None, f"internal error: extension fails on {bad}"
    return gauge


def shift_gauge(
    phi: JumpAuto,
    psi: JumpAuto,
    gauge: Mapping[VertexId, Fraction],
    i: int,
    j: int,
) -> Gauge:
    """Move a gauge valid between levels ``(i, j)`` of the jump-0 parts to
    level (0, 0).

    The input must satisfy ``gauge(y) phi_i(a) = psi_j(a) gauge(x)`` on every
    arrow, where ``phi_i`` is the level-``i`` component of ``phi . nu^-jump``;
    the output satisfies the same at level 0 and can be fed to
    :func:`extend_gauge`.
    """
    _ensure_comparable(phi, psi)
    alg = phi.algebra
    for a in alg.quiver.arrows:
        x, y = a.source, a.target
        cp = phi.cumulative(i, x) / phi.cumulative(i, y) * phi.base.scalars[a.name]
        cq = psi.cumulative(j, x) / psi.cumulative(j, y) * psi.base.scalars[a.name]
        pa = phi.base.arrow_map[a.name]
        qa = psi.base.arrow_map[a.name]
        if pa != qa or Fraction(gauge[y]) * cp != cq * Fraction(gauge[x]):
            raise GaugePreconditionError(
                f"gauge is not valid at levels ({i}, {j}) on arrow {a.name!r}",
                generator=a.name,
            )
    return Gauge(
        {
            x: psi.cumulative(j, x) / phi.cumulative(i, x) * Fraction(gauge[x])
            for x in alg.quiver.vertices
        }
    )


class Cocycle(dict):
    """Scalars ``(degree, object) -> value`` with the product law
    ``value(m + n, x) = value(m, g^n x) * value(n, x)``."""

    def value(self, k: int, obj: Obj) -> Fraction:
        return self[(k, obj)]


def build_cocycle(
    g: JumpAuto,
    h: JumpAuto,
    gauge: Mapping[Obj, Fraction],
    degree_range: int,
    objects: tuple[Obj, ...] | None = None,
) -> Cocycle:
    """Degree-indexed scalars twisting ``g``-orbits into ``h``-orbits.

    ``value(k, x)`` is the product of gauge values along the ``g``-orbit of
    ``x``: forward for ``k > 0``, inverted backward for ``k < 0``; degree 0 is
    identically 1.  Raises KeyError-like errors when the requested range needs
    gauge values outside the window the gauge was built on.
    """
    _ensure_comparable(g, h)
    if objects is None:
        objects = tuple(gauge.keys())
    values: dict[tuple[int, Obj], Fraction] = {}
    for obj in objects:
        values[(0, obj)] = Fraction(1)
        forward = Fraction(1)
        at = obj
        for k in range(1, degree_range + 1):
            if at not in gauge:
                raise GaugePreconditionError(
                    f"cocycle range {degree_range} needs a gauge value at {at}, "
                    "outside the extended window",
                    generator=at,
                )
            forward *= Fraction(gauge[at])
            at = g.object_image(at)
            values[(k, obj)] = forward
        backward = Fraction(1)
        at = obj
        for k in range(-1, -degree_range - 1, -1):
            at = (at[0] - g.jump, {w: v for v, w in g.base.vertex_map.items()}[at[1]])
            if at not in gauge:
                raise GaugePreconditionError(
                    f"cocycle range {degree_range} needs a gauge value at {at}, "
                    "outside the extended window",
                    generator=at,
                )
            backward /= Fraction(gauge[at])
            values[(k, obj)] = backward
    return Cocycle(values)
