"""Finite graded orbit algebras of the repetitive category and their isos.

For an automorphism with nonzero jump ``n`` the orbit category is a finite
algebra: objects are the level ``0 .. |n|-1`` representatives, and the hom
space of degree ``k`` from ``u`` to ``v`` is the window hom from the ``k``-th
power image of ``u`` to ``v``.  Only the degrees whose level offset lands on
the same or the adjacent level contribute, so every graded hom has at most
two nonzero components.  Degree bookkeeping follows the grading formula
literally; in particular the dual part of a trivial extension sits in degree
-1 when ``n > 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from .algebra import Algebra, ScalingAuto
from .criterion import Cocycle, Gauge
from .repetitive import (
    JumpAuto,
    Obj,
    RepetitiveWindow,
    WinElt,
    WindowExitError,
    build_window,
    hat_lift,
    invert_jump,
    nakayama,
    compose_jump,
)

__all__ = [
    "OrbitElt",
    "GradedAlgebra",
    "GradedIso",
    "JumpZeroError",
    "orbit_window_bounds",
    "build_orbit",
    "twisted_extension",
    "graded_iso_from_gauge",
    "verify_graded_iso",
]


class JumpZeroError(ValueError):
    """Jump 0 gives an infinite orbit category; only certificates exist."""


@dataclass(frozen=True)
class OrbitElt:
    """Basis element of degree ``degree`` from ``src`` to ``dst``: a window
    morphism out of the ``degree``-th power image of ``src``."""

    src: Obj
    dst: Obj
    degree: int
    welt: WinElt

    def sort_key(self, algebra: Algebra):
        order = algebra.quiver.vertex_order
        return (
            self.src[0],
            order(self.src[1]),
            self.dst[0],
            order(self.dst[1]),
            self.degree,
            self.welt.kind,
            tuple(map(str, self.welt.path.arrows)),
        )

    def __str__(self) -> str:
        return (
            f"{self.src[1]}[{self.src[0]}]->{self.dst[1]}[{self.dst[0]}]"
            f" deg {self.degree}: {self.welt}"
        )


class GradedAlgebra:
    """Objects, graded hom bases, and exact structure constants."""

    def __init__(
        self,
        algebra: Algebra,
        objects: tuple[Obj, ...],
        basis: tuple[OrbitElt, ...],
        identities: dict[Obj, OrbitElt],
        table: dict[tuple[OrbitElt, OrbitElt], tuple[Fraction, OrbitElt]],
    ) -> None:
        self.algebra = algebra
        self.objects = objects
        self.basis = basis
        self.identities = identities
        self.table = table
        self._index = set(basis)
        self.hom: dict[tuple[Obj, Obj], tuple[OrbitElt, ...]] = {}
        for elt in basis:
            self.hom.setdefault((elt.src, elt.dst), ())
        for key in self.hom:
            self.hom[key] = tuple(e for e in basis if (e.src, e.dst) == key)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def product(self, g: OrbitElt, f: OrbitElt) -> Optional[tuple[Fraction, OrbitElt]]:
        """``g . f`` (f first); None when zero.  Raises if not composable."""
        if f.dst != g.src:
            raise ValueError("orbit elements not composable")
        return self.table.get((g, f))

    def degrees(self, u: Obj, v: Obj) -> tuple[int, ...]:
        return tuple(sorted({e.degree for e in self.hom.get((u, v), ())}))

    def __repr__(self) -> str:
        return f"GradedAlgebra(dim={self.dim}, objects={len(self.objects)})"


def orbit_window_bounds(n: int, cocycle_range: int = 2) -> tuple[int, int]:
    """Window wide enough for orbit products and cocycles up to the range."""
    width = (max(2, cocycle_range) + 1) * abs(n) + 2
    return (-width, width)


def _orbit_degrees(r: int, s: int, n: int) -> list[tuple[int, int]]:
    """Degrees k with hom components from level ``r + k n`` to level ``s``,
    paired with the source level; only same-level and adjacent contribute."""
    out = []
    for target_level in (s, s - 1):
        offset = target_level - r
        if offset % n == 0:
            out.append((offset // n, target_level))
    return out


def build_orbit(window: RepetitiveWindow, phi: JumpAuto) -> GradedAlgebra:
    """Graded orbit algebra of the window by a nonzero-jump automorphism."""
    n = phi.jump
    if n == 0:
        raise JumpZeroError(
            "jump-0 orbit categories are infinite; use the criterion certificate"
        )
    alg = window.algebra
    reps = tuple((r, x) for r in range(abs(n)) for x in alg.quiver.vertices)

    powers: dict[int, JumpAuto] = {0: JumpAuto(alg)}

    def power(k: int) -> JumpAuto:
        if k not in powers:
            if k > 0:
                powers[k] = compose_jump(phi, power(k - 1))
            else:
                powers[k] = compose_jump(invert_jump(phi), power(k + 1))
        return powers[k]

    basis: list[OrbitElt] = []
    for u in reps:
        for v in reps:
            for k, _level in _orbit_degrees(u[0], v[0], n):
                src_obj = power(k).object_image(u)
                if not (window.contains_object(src_obj) and window.contains_object(v)):
                    raise WindowExitError(
                        f"window [{window.lo}, {window.hi}] too narrow for the "
                        f"degree-{k} component at {u} -> {v}"
                    )
                for welt in window.hom(src_obj, v):
                    basis.append(OrbitElt(u, v, k, welt))
    basis.sort(key=lambda e: e.sort_key(alg))

    identities = {
        u: OrbitElt(u, u, 0, window.identity(u)) for u in reps
    }

    table: dict[tuple[OrbitElt, OrbitElt], tuple[Fraction, OrbitElt]] = {}
    by_pair: dict[tuple[Obj, Obj, int, WinElt], OrbitElt] = {
        (e.src, e.dst, e.degree, e.welt): e for e in basis
    }
    applied: dict[tuple[int, WinElt], tuple[Fraction, WinElt]] = {}

    def apply_power(k: int, welt: WinElt) -> tuple[Fraction, WinElt]:
        key = (k, welt)
        if key not in applied:
            applied[key] = power(k).apply_elt(welt)
        return applied[key]

    for f in basis:
        for g in basis:
            if g.src != f.dst:
                continue
            c1, shifted = apply_power(g.degree, f.welt)
            if not window.contains_elt(shifted):
                raise WindowExitError(
                    f"window [{window.lo}, {window.hi}] too narrow to compose "
                    f"degrees {g.degree} and {f.degree}"
                )
            out = window.compose_elts(g.welt, shifted)
            if out is None:
                continue
            c2, welt = out
            target = by_pair.get((f.src, g.dst, f.degree + g.degree, welt))
            assert target is not None, "composite landed outside the collected basis"
            table[(g, f)] = (c1 * c2, target)

    return GradedAlgebra(alg, reps, tuple(basis), identities, table)


def twisted_extension(algebra: Algebra, sigma: ScalingAuto, n: int) -> GradedAlgebra:
    """Orbit algebra of ``hat(sigma) . nu^n``; ``n = 1`` with the identity is
    the trivial extension."""
    if n == 0:
        raise JumpZeroError("twisted extensions need a nonzero fold count")
    lo, hi = orbit_window_bounds(n)
    window = build_window(algebra, lo, hi)
    return build_orbit(window, JumpAuto(algebra, n, sigma))


@dataclass
class GradedIso:
    """Degree-preserving diagonal map between two orbit algebras."""

    mapping: dict[OrbitElt, tuple[OrbitElt, Fraction]]

    def image(self, elt: OrbitElt) -> tuple[OrbitElt, Fraction]:
        return self.mapping[elt]


def graded_iso_from_gauge(
    src: GradedAlgebra,
    dst: GradedAlgebra,
    gauge: Mapping[Obj, Fraction],
    cocycle: Cocycle,
) -> GradedIso:
    """Assemble the isomorphism twisting each degree-k component by the
    inverse cocycle value at the source object."""
    mapping: dict[OrbitElt, tuple[OrbitElt, Fraction]] = {}
    dst_index = {(e.src, e.dst, e.degree, e.welt): e for e in dst.basis}
    for elt in src.basis:
        scalar = 1 / cocycle.value(elt.degree, elt.src)
        target = dst_index.get((elt.src, elt.dst, elt.degree, elt.welt))
        if target is None:
            raise ValueError(f"no matching basis element for {elt} in the target")
        mapping[elt] = (target, scalar)
    return GradedIso(mapping)


def verify_graded_iso(iso: GradedIso, src: GradedAlgebra, dst: GradedAlgebra) -> bool:
    """Independent checker: never trusts how the candidate was built.

    Checks object sets, per-degree bijectivity, identity preservation, and
    multiplicativity of every composable basis pair against both structure
    tables.
    """
    if src.objects != dst.objects:
        return False
    if set(iso.mapping.keys()) != set(src.basis):
        return False
    images = list(iso.mapping.values())
    if len({e for e, _ in images}) != len(images):
        return False
    dst_set = set(dst.basis)
    for elt, (target, scalar) in iso.mapping.items():
        if target not in dst_set or scalar == 0:
            return False
        if (elt.src, elt.dst, elt.degree) != (target.src, target.dst, target.degree):
            return False
    for degree_pair in {(e.src, e.dst, e.degree) for e in src.basis}:
        src_count = sum(1 for e in src.basis if (e.src, e.dst, e.degree) == degree_pair)
        dst_count = sum(1 for e in dst.basis if (e.src, e.dst, e.degree) == degree_pair)
        if src_count != dst_count:
            return False
    for u, ident in src.identities.items():
        target, scalar = iso.mapping[ident]
        if target != dst.identities[u] or scalar != 1:
            return False
    for f in src.basis:
        for g in src.basis:
            if g.src != f.dst:
                continue
            left = src.table.get((g, f))
            gi, cg = iso.mapping[g]
            fi, cf = iso.mapping[f]
            right = dst.table.get((gi, fi))
            if (left is None) != (right is None):
                return False
            if left is None:
                continue
            c, elt = left
            cr, elt_r = right
            ei, ce = iso.mapping[elt]
            if ei != elt_r or ce * c != cg * cf * cr:
                return False
    return True
