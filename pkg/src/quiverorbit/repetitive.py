"""Finite windows of the repetitive category and its jump automorphisms.

A window materializes the levels ``lo..hi`` of the repetitive category of a
monomial algebra A: same-level hom spaces are copies of the hom spaces of A,
the space from ``x^[i]`` to ``y^[i+1]`` is the dual of ``A(y, x)``, and
everything else vanishes.  Because A is monomial, composing two basis
morphisms yields a scalar multiple of a single basis morphism (or zero), so
morphisms are represented as ``(coefficient, element)`` pairs and ``None``
stands for zero.

Automorphisms are kept as finite data: a jump (the level offset on objects),
a base scaling automorphism, and a level-indexed family of per-vertex units
that defaults to 1 outside its finite support.  Every automorphism treated by
the criterion factors this way, and composition and inversion stay inside the
representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Optional

from .algebra import (
    Algebra,
    Path,
    ScalingAuto,
    compose_autos,
    identity_auto,
    invert_auto,
)
from .quiver import VertexId

Obj = tuple[int, VertexId]  # (level, vertex)
Mor = Optional[tuple[Fraction, "WinElt"]]


class WindowExitError(ValueError):
    """An operation would leave the materialized level window."""


@dataclass(frozen=True)
class WinElt:
    """Basis morphism of the window.

    ``kind == "path"``: the morphism ``path^[level]: src^[level] -> dst^[level]``
    with ``path`` a basis path of ``A(src, dst)``.

    ``kind == "dual"``: the morphism ``src^[level] -> dst^[level + 1]`` dual to
    the basis path ``path`` of ``A(dst, src)``.
    """

    kind: str
    level: int
    src: VertexId
    dst: VertexId
    path: Path

    @property
    def source(self) -> Obj:
        return (self.level, self.src)

    @property
    def target(self) -> Obj:
        return (self.level + (1 if self.kind == "dual" else 0), self.dst)

    @property
    def is_identity(self) -> bool:
        return self.kind == "path" and self.path.is_identity

    def __str__(self) -> str:
        if self.kind == "path":
            return f"{self.path}[{self.level}]"
        return f"dual({self.path})[{self.level}]"


class RepetitiveWindow:
    """Levels ``lo..hi`` of the repetitive category of ``algebra``."""

    def __init__(self, algebra: Algebra, lo: int, hi: int) -> None:
        if lo > hi:
            raise ValueError("empty window")
        self.algebra = algebra
        self.lo = lo
        self.hi = hi
        self.objects: tuple[Obj, ...] = tuple(
            (i, x) for i in range(lo, hi + 1) for x in algebra.quiver.vertices
        )
        self._hom: dict[tuple[Obj, Obj], tuple[WinElt, ...]] = {}
        for i in range(lo, hi + 1):
            for x in algebra.quiver.vertices:
                for y in algebra.quiver.vertices:
                    same = tuple(
                        WinElt("path", i, x, y, p) for p in algebra.basis_paths(x, y)
                    )
                    if same:
                        self._hom[((i, x), (i, y))] = same
                    if i < hi:
                        dual = tuple(
                            WinElt("dual", i, x, y, p) for p in algebra.basis_paths(y, x)
                        )
                        if dual:
                            self._hom[((i, x), (i + 1, y))] = dual

    def contains_object(self, obj: Obj) -> bool:
        return self.lo <= obj[0] <= self.hi and obj[1] in self.algebra.quiver._vertex_order

    def contains_elt(self, elt: WinElt) -> bool:
        return self.contains_object(elt.source) and self.contains_object(elt.target)

    def hom(self, u: Obj, v: Obj) -> tuple[WinElt, ...]:
        return self._hom.get((u, v), ())

    def basis(self) -> Iterator[WinElt]:
        for elts in self._hom.values():
            yield from elts

    def identity(self, obj: Obj) -> WinElt:
        if not self.contains_object(obj):
            raise WindowExitError(f"object {obj} outside window [{self.lo}, {self.hi}]")
        return WinElt("path", obj[0], obj[1], obj[1], self.algebra.identity(obj[1]))

    def compose_elts(self, g: WinElt, f: WinElt) -> Mor:
        """The composite ``g . f`` (f first); None when the composite is zero."""
        if f.target != g.source:
            raise ValueError(f"{g} . {f}: objects do not match")
        alg = self.algebra
        if f.kind == "path" and g.kind == "path":
            p = alg.concat(f.path, g.path)
            return None if p is None else (Fraction(1), WinElt("path", f.level, f.src, g.dst, p))
        if f.kind == "path" and g.kind == "dual":
            # right action of f on the dual index of g
            p = alg.dual.right(g.path, f.path)
            return None if p is None else (Fraction(1), WinElt("dual", f.level, f.src, g.dst, p))
        if f.kind == "dual" and g.kind == "path":
            # left action of g on the dual index of f
            p = alg.dual.left(g.path, f.path)
            return None if p is None else (Fraction(1), WinElt("dual", f.level, f.src, g.dst, p))
        return None  # two level-raising morphisms compose to zero

    def compose(self, g: Mor, f: Mor) -> Mor:
        if g is None or f is None:
            return None
        cg, ge = g
        cf, fe = f
        out = self.compose_elts(ge, fe)
        if out is None:
            return None
        c, elt = out
        return (cg * cf * c, elt)

    def composition_table(self) -> dict[tuple[WinElt, WinElt], tuple[Fraction, WinElt]]:
        """All nonzero composites ``(g, f) -> g . f`` over the window basis."""
        table: dict[tuple[WinElt, WinElt], tuple[Fraction, WinElt]] = {}
        by_source: dict[Obj, list[WinElt]] = {}
        for elt in self.basis():
            by_source.setdefault(elt.source, []).append(elt)
        for f in self.basis():
            for g in by_source.get(f.target, ()):
                out = self.compose_elts(g, f)
                if out is not None:
                    table[(g, f)] = out
        return table

    def __repr__(self) -> str:
        return f"RepetitiveWindow({self.algebra!r}, [{self.lo}, {self.hi}])"


def build_window(algebra: Algebra, lo: int, hi: int) -> RepetitiveWindow:
    return RepetitiveWindow(algebra, lo, hi)


def nakayama_shift(w: RepetitiveWindow, m: Mor | WinElt, steps: int = 1) -> Mor:
    """Shift levels by ``steps``; raises when the image leaves the window."""
    if isinstance(m, WinElt):
        m = (Fraction(1), m)
    if m is None:
        return None
    c, elt = m
    out = WinElt(elt.kind, elt.level + steps, elt.src, elt.dst, elt.path)
    if not w.contains_elt(out):
        raise WindowExitError(f"shift of {elt} by {steps} leaves window [{w.lo}, {w.hi}]")
    return (c, out)


class JumpAuto:
    """Automorphism ``hat(base) . Phi(level_scalars) . nu^jump`` as finite data.

    ``level_scalars`` maps ``(level, vertex)`` to a nonzero scalar and is 1
    where unspecified.  The object action sends ``x^[i]`` to
    ``base(x)^[i + jump]``.
    """

    def __init__(
        self,
        algebra: Algebra,
        jump: int = 0,
        base: ScalingAuto | None = None,
        level_scalars: Mapping[tuple[int, VertexId], Fraction | int] | None = None,
    ) -> None:
        self.algebra = algebra
        self.jump = jump
        self.base = base if base is not None else identity_auto(algebra)
        if self.base.algebra is not algebra:
            raise ValueError("base automorphism belongs to a different algebra")
        self.level_scalars: dict[tuple[int, VertexId], Fraction] = {}
        for (i, x), c in (level_scalars or {}).items():
            c = Fraction(c)
            if c == 0:
                raise ValueError(f"level scalar at ({i}, {x!r}) is zero")
            if x not in algebra.quiver._vertex_order:
                raise ValueError(f"unknown vertex {x!r}")
            if c != 1:
                self.level_scalars[(int(i), x)] = c

    # -- scalar bookkeeping ----------------------------------------------

    def level_scalar(self, i: int, x: VertexId) -> Fraction:
        return self.level_scalars.get((i, x), Fraction(1))

    def cumulative(self, i: int, x: VertexId) -> Fraction:
        """Running product of the level scalars below ``i`` (1 at level 0).

        Satisfies ``cumulative(i + 1, x) = cumulative(i, x) * level_scalar(i, x)``
        for every integer ``i``.
        """
        value = Fraction(1)
        if i > 0:
            for j in range(0, i):
                value *= self.level_scalar(j, x)
        elif i < 0:
            for j in range(i, 0):
                value *= self.level_scalar(j, x)
            value = 1 / value
        return value

    def support_levels(self) -> tuple[int, int]:
        """Smallest interval outside of which every level scalar is 1."""
        if not self.level_scalars:
            return (0, 0)
        levels = [i for i, _ in self.level_scalars]
        return (min(levels), max(levels))

    # -- action ------------------------------------------------------------

    def object_image(self, obj: Obj) -> Obj:
        return (obj[0] + self.jump, self.base.vertex_map[obj[1]])

    def apply_elt(self, elt: WinElt) -> tuple[Fraction, WinElt]:
        i, n = elt.level, self.jump
        sigma = self.base
        if elt.kind == "path":
            x, y = elt.path.source, elt.path.target
            coeff = (
                self.cumulative(i + n, x)
                / self.cumulative(i + n, y)
                * sigma.path_scalar(elt.path)
            )
            return coeff, WinElt(
                "path",
                i + n,
                sigma.vertex_map[elt.src],
                sigma.vertex_map[elt.dst],
                sigma.map_path(elt.path),
            )
        # dual element indexed by a basis path of A(dst, src): the action is
        # transported through the pairing, hence the inverted coefficient
        y, x = elt.path.source, elt.path.target  # path runs dst -> src
        coeff = self.cumulative(i + n, x) / (
            self.cumulative(i + n + 1, y) * sigma.path_scalar(elt.path)
        )
        return coeff, WinElt(
            "dual",
            i + n,
            sigma.vertex_map[elt.src],
            sigma.vertex_map[elt.dst],
            sigma.map_path(elt.path),
        )

    def apply(self, m: Mor | WinElt, window: RepetitiveWindow | None = None) -> Mor:
        if isinstance(m, WinElt):
            m = (Fraction(1), m)
        if m is None:
            return None
        c, elt = m
        coeff, out = self.apply_elt(elt)
        if window is not None and not window.contains_elt(out):
            raise WindowExitError(
                f"image of {elt} leaves window [{window.lo}, {window.hi}]"
            )
        return (c * coeff, out)

    def __repr__(self) -> str:
        return (
            f"JumpAuto(jump={self.jump}, base={self.base!r}, "
            f"level_scalars={dict(self.level_scalars)!r})"
        )


def nakayama(algebra: Algebra, steps: int = 1) -> JumpAuto:
    return JumpAuto(algebra, jump=steps)


def hat_lift(sigma: ScalingAuto) -> JumpAuto:
    """The jump-0 lift acting level-wise by ``sigma`` (dual spaces by the
    transported inverse)."""
    return JumpAuto(sigma.algebra, jump=0, base=sigma)


def level_scaling_auto(
    algebra: Algebra, lam: Mapping[tuple[int, VertexId], Fraction | int]
) -> JumpAuto:
    """Jump-0 automorphism built from per-level per-vertex units.

    Level 0 acts as the identity; level ``i`` acts by the vertex rescaling of
    the units accumulated between level 0 and ``i``; the level-raising parts
    pick up the level-``i`` unit at the path source.  A group homomorphism in
    the family.
    """
    return JumpAuto(algebra, jump=0, level_scalars=lam)


class NonzeroJumpError(ValueError):
    pass


def base_automorphism(f: JumpAuto) -> ScalingAuto:
    """Level-0 component of a jump-0 automorphism."""
    if f.jump != 0:
        raise NonzeroJumpError(f"automorphism has jump {f.jump}, expected 0")
    return f.base


def decompose(f: JumpAuto) -> tuple[int, JumpAuto]:
    """Split off the Nakayama power: ``f = (jump-0 part) . nu^jump``."""
    return f.jump, JumpAuto(f.algebra, 0, f.base, f.level_scalars)


def compose_jump(f: JumpAuto, g: JumpAuto) -> JumpAuto:
    """The composite ``f . g`` (apply ``g`` first), renormalized to canonical
    ``hat(base) . Phi(levels) . nu^jump`` form."""
    if f.algebra is not g.algebra:
        raise ValueError("autos live on different algebras")
    alg = f.algebra
    n, m = f.jump, g.jump
    tau_v = g.base.vertex_map
    levels: dict[tuple[int, VertexId], Fraction] = {}
    lo_f, hi_f = f.support_levels()
    lo_g, hi_g = g.support_levels()
    lo = min(lo_f, lo_g + n)
    hi = max(hi_f, hi_g + n)
    for i in range(lo, hi + 1):
        for x in alg.quiver.vertices:
            c = g.level_scalar(i - n, x) * f.level_scalar(i, tau_v[x])
            if c != 1:
                levels[(i, x)] = c
    correction = {x: g.cumulative(-n, x) for x in alg.quiver.vertices}
    xi_corr = ScalingAuto(
        alg,
        scalars={
            a.name: correction[a.source] / correction[a.target]
            for a in alg.quiver.arrows
        },
    )
    base = compose_autos(compose_autos(f.base, g.base), xi_corr)
    return JumpAuto(alg, n + m, base, levels)


def invert_jump(f: JumpAuto) -> JumpAuto:
    alg = f.algebra
    n = f.jump
    inv_v = {w: v for v, w in f.base.vertex_map.items()}
    levels: dict[tuple[int, VertexId], Fraction] = {}
    lo, hi = f.support_levels()
    for j in range(lo - n - 1, hi - n + 2):
        for x in alg.quiver.vertices:
            c = f.level_scalar(j + n, inv_v[x])
            if c != 1:
                levels[(j, x)] = 1 / c
    tmp = JumpAuto(alg, -n, None, levels)
    correction = {x: tmp.cumulative(-n, x) for x in alg.quiver.vertices}
    xi_corr = ScalingAuto(
        alg,
        scalars={
            a.name: correction[a.target] / correction[a.source]
            for a in alg.quiver.arrows
        },
    )
    base = compose_autos(invert_auto(f.base), xi_corr)
    return JumpAuto(alg, -n, base, levels)


def jump_power(f: JumpAuto, k: int) -> JumpAuto:
    if k == 0:
        return JumpAuto(f.algebra)
    g = f if k > 0 else invert_jump(f)
    out = g
    for _ in range(abs(k) - 1):
        out = compose_jump(out, g)
    return out


def autos_equal_on_window(w: RepetitiveWindow, f: JumpAuto, g: JumpAuto) -> bool:
    """Compare two automorphisms by their action on every window basis element."""
    for elt in w.basis():
        if f.apply_elt(elt) != g.apply_elt(elt):
            return False
    return True


def is_identity_on_window(w: RepetitiveWindow, f: JumpAuto) -> bool:
    for elt in w.basis():
        if f.apply_elt(elt) != (Fraction(1), elt):
            return False
    return True
