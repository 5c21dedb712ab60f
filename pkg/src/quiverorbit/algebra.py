"""Monomial bound quiver algebras with explicit path bases.

Paths are stored source-to-target as arrow-id sequences (``arrows[0]`` is
traversed first); written multiplicatively they compose right to left, so the
stored sequence ``(alpha, beta)`` is the product ``beta . alpha``.  Scalars
are exact rationals; any exact field with decidable equality would do, the
constructions never use more than field axioms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .quiver import ArrowId, Quiver, VertexId


@dataclass(frozen=True)
class Path:
    source: VertexId
    target: VertexId
    arrows: tuple[ArrowId, ...]

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def is_identity(self) -> bool:
        return not self.arrows

    def __str__(self) -> str:
        if not self.arrows:
            return f"e_{self.source}"
        return ".".join(str(a) for a in self.arrows)


class NonAdmissibleError(ValueError):
    """The zero relations do not generate an admissible ideal."""

    def __init__(self, message: str, cycle: Path | None = None) -> None:
        super().__init__(message)
        self.cycle = cycle


class Algebra:
    """Path algebra of a connected quiver modulo monomial (zero) relations.

    The basis of each hom space lists the paths that contain no relation as a
    contiguous subword; admissibility (finite dimension) is checked up front
    and violations are reported with an offending cycle.
    """

    def __init__(self, quiver: Quiver, relations: Iterable[Sequence[ArrowId]]) -> None:
        self.quiver = quiver
        if not quiver.is_connected():
            raise ValueError("quiver is not connected")
        rels: list[tuple[ArrowId, ...]] = []
        for rel in relations:
            word = tuple(rel)
            if len(word) < 2:
                raise ValueError(f"relation {word!r} has length < 2; ideal not admissible")
            self._validate_word(word)
            rels.append(word)
        self.relations: tuple[tuple[ArrowId, ...], ...] = tuple(rels)
        self._check_admissible()
        self.basis: dict[tuple[VertexId, VertexId], tuple[Path, ...]] = self._build_basis()
        self._basis_sets = {key: set(paths) for key, paths in self.basis.items()}
        self.dim = sum(len(paths) for paths in self.basis.values())

    # -- construction helpers ------------------------------------------------

    def _validate_word(self, word: tuple[ArrowId, ...]) -> None:
        at = None
        for name in word:
            if not self.quiver.has_arrow(name):
                raise ValueError(f"unknown arrow {name!r} in path")
            a = self.quiver.arrow(name)
            if at is not None and a.source != at:
                raise ValueError(f"path {word!r} is not composable at {name!r}")
            at = a.target

    def is_zero_word(self, word: Sequence[ArrowId]) -> bool:
        word = tuple(word)
        for rel in self.relations:
            k = len(rel)
            for i in range(len(word) - k + 1):
                if word[i : i + k] == rel:
                    return True
        return False

    def _check_admissible(self) -> None:
        # States of the suffix automaton are nonzero words of length
        # max(relation length) - 1; a directed cycle among them pumps into
        # arbitrarily long nonzero paths.  Without relations this degenerates
        # to plain directed-cycle detection.
        if not self.relations:
            cyc = self._directed_cycle()
            if cyc is not None:
                raise NonAdmissibleError(
                    f"no relations but the quiver has the oriented cycle {cyc}", cyc
                )
            return
        w = max(len(r) for r in self.relations) - 1
        states = [tuple(word) for word in self._nonzero_words_of_length(w)]
        edges: dict[tuple, list[tuple[tuple, ArrowId]]] = {s: [] for s in states}
        for s in states:
            end = self.quiver.arrow(s[-1]).target if s else None
            for a in self.quiver.arrows:
                if s and a.source != end:
                    continue
                word = s + (a.name,)
                if self.is_zero_word(word):
                    continue
                edges[s].append((word[-w:], a.name))
        cyc = self._automaton_cycle(states, edges)
        if cyc is not None:
            raise NonAdmissibleError(
                f"relations are not admissible: the cycle {cyc} has no vanishing power",
                cyc,
            )

    def _nonzero_words_of_length(self, length: int) -> list[tuple[ArrowId, ...]]:
        words: list[tuple[ArrowId, ...]] = [()]
        for _ in range(length):
            nxt = []
            for word in words:
                end = self.quiver.arrow(word[-1]).target if word else None
                for a in self.quiver.arrows:
                    if word and a.source != end:
                        continue
                    cand = word + (a.name,)
                    if not self.is_zero_word(cand):
                        nxt.append(cand)
            words = nxt
        return words

    def _automaton_cycle(self, states, edges) -> Path | None:
        # DFS with an explicit path stack so the reported word is exactly the
        # arrows appended around the automaton cycle (a closed quiver path
        # every power of which is nonzero).
        color: dict[tuple, int] = {}
        path_states: list[tuple] = []
        path_arrows: list[ArrowId] = []

        def visit(s) -> Optional[list[ArrowId]]:
            color[s] = 1
            path_states.append(s)
            for t, arrow in edges[s]:
                if color.get(t, 0) == 1:
                    i = path_states.index(t)
                    return path_arrows[i:] + [arrow]
                if color.get(t, 0) == 0:
                    path_arrows.append(arrow)
                    sub = visit(t)
                    if sub is not None:
                        return sub
                    path_arrows.pop()
            color[s] = 2
            path_states.pop()
            return None

        for s in states:
            if color.get(s, 0) == 0:
                word = visit(s)
                if word is not None:
                    return self.path(word)
        return None

    def _directed_cycle(self) -> Path | None:
        color: dict[VertexId, int] = {}
        path_vertices: list[VertexId] = []
        path_arrows: list[ArrowId] = []

        def visit(v) -> Optional[list[ArrowId]]:
            color[v] = 1
            path_vertices.append(v)
            for a in self.quiver.out_arrows(v):
                if color.get(a.target, 0) == 1:
                    i = path_vertices.index(a.target)
                    return path_arrows[i:] + [a.name]
                if color.get(a.target, 0) == 0:
                    path_arrows.append(a.name)
                    sub = visit(a.target)
                    if sub is not None:
                        return sub
                    path_arrows.pop()
            color[v] = 2
            path_vertices.pop()
            return None

        for v in self.quiver.vertices:
            if color.get(v, 0) == 0:
                word = visit(v)
                if word is not None:
                    return self.path(word)
        return None

    def _build_basis(self) -> dict[tuple[VertexId, VertexId], tuple[Path, ...]]:
        basis: dict[tuple[VertexId, VertexId], list[Path]] = {
            (x, y): [] for x in self.quiver.vertices for y in self.quiver.vertices
        }
        layer: list[Path] = [self.identity(v) for v in self.quiver.vertices]
        while layer:
            for p in layer:
                basis[(p.source, p.target)].append(p)
            nxt = []
            for p in layer:
                for a in self.quiver.arrows:
                    if a.source != p.target:
                        continue
                    word = p.arrows + (a.name,)
                    if not self.is_zero_word(word):
                        nxt.append(Path(p.source, a.target, word))
            layer = nxt
        return {key: tuple(paths) for key, paths in basis.items()}

    # -- path arithmetic -----------------------------------------------------

    def identity(self, v: VertexId) -> Path:
        if v not in self.quiver.vertices:
            raise ValueError(f"unknown vertex {v!r}")
        return Path(v, v, ())

    def path(self, word: Sequence[ArrowId]) -> Path:
        word = tuple(word)
        if not word:
            raise ValueError("use identity(v) for empty paths")
        self._validate_word(word)
        return Path(
            self.quiver.arrow(word[0]).source, self.quiver.arrow(word[-1]).target, word
        )

    def concat(self, p: Path, q: Path) -> Path | None:
        """Traverse ``p`` then ``q`` (the product ``q . p``); None if zero."""
        if q.source != p.target:
            raise ValueError("paths not composable")
        word = p.arrows + q.arrows
        if self.is_zero_word(word):
            return None
        return Path(p.source, q.target, word)

    def basis_paths(self, x: VertexId, y: VertexId) -> tuple[Path, ...]:
        return self.basis[(x, y)]

    def in_basis(self, p: Path) -> bool:
        return p in self._basis_sets[(p.source, p.target)]

    @property
    def dual(self) -> "DualBasis":
        return DualBasis(self)

    def __repr__(self) -> str:
        return f"Algebra(dim={self.dim}, relations={len(self.relations)})"


def build_algebra(q: Quiver, relations: Iterable[Sequence[ArrowId]]) -> Algebra:
    return Algebra(q, relations)


def has_no_nonzero_oriented_cycles(a: Algebra) -> bool:
    """True iff every endomorphism space is spanned by the identity alone."""
    return all(len(a.basis_paths(x, x)) == 1 for x in a.quiver.vertices)


class DualBasis:
    """Dual basis elements of the hom spaces, with their bimodule actions.

    The dual of hom space ``x -> y`` is indexed by the basis paths of
    ``A(y, x)``; ``pairing`` is 1 on the matching path and 0 elsewhere.  All
    actions return the single surviving dual index or None, since monomial
    products of basis paths are basis paths or zero.
    """

    def __init__(self, algebra: Algebra) -> None:
        self.algebra = algebra

    def duals(self, x: VertexId, y: VertexId) -> tuple[Path, ...]:
        """Index paths for the dual of hom ``x -> y``: the basis of A(y, x)."""
        return self.algebra.basis_paths(y, x)

    def pairing(self, p: Path, q: Path) -> int:
        return 1 if p == q else 0

    def left(self, u: Path, p: Path) -> Path | None:
        """``u . beta_p``: defined when ``u`` is a traversal prefix of ``p``."""
        if u.source != p.source:
            return None
        k = len(u.arrows)
        if p.arrows[:k] != u.arrows:
            return None
        return Path(u.target, p.target, p.arrows[k:])

    def right(self, p: Path, v: Path) -> Path | None:
        """``beta_p . v``: defined when ``v`` is a traversal suffix of ``p``."""
        if v.target != p.target:
            return None
        k = len(p.arrows) - len(v.arrows)
        if k < 0 or p.arrows[k:] != v.arrows:
            return None
        return Path(p.source, v.source, p.arrows[:k])

    def sandwich(self, u: Path, p: Path, v: Path) -> Path | None:
        """``u . beta_p . v``, evaluated as ``q -> pairing(p, v q u)``."""
        step = self.left(u, p)
        if step is None:
            return None
        return self.right(step, v)


def dual_pairing_action(a: Algebra) -> DualBasis:
    return a.dual


class ScalingAuto:
    """Algebra automorphism given by vertex/arrow permutations and arrow scalars.

    The permutation part must be a quiver automorphism that preserves the
    zero relations; the scalar part is a nonzero scalar per arrow.
    """

    def __init__(
        self,
        algebra: Algebra,
        scalars: Mapping[ArrowId, Fraction | int] | None = None,
        vertex_map: Mapping[VertexId, VertexId] | None = None,
        arrow_map: Mapping[ArrowId, ArrowId] | None = None,
    ) -> None:
        self.algebra = algebra
        q = algebra.quiver
        self.vertex_map = {v: v for v in q.vertices}
        if vertex_map:
            self.vertex_map.update(vertex_map)
        self.arrow_map = {a.name: a.name for a in q.arrows}
        if arrow_map:
            self.arrow_map.update(arrow_map)
        self.scalars: dict[ArrowId, Fraction] = {a.name: Fraction(1) for a in q.arrows}
        if scalars:
            for name, c in scalars.items():
                c = Fraction(c)
                if c == 0:
                    raise ValueError(f"scalar for arrow {name!r} is zero")
                if not q.has_arrow(name):
                    raise ValueError(f"unknown arrow {name!r}")
                self.scalars[name] = c
        self._validate()

    def _validate(self) -> None:
        q = self.algebra.quiver
        if sorted(map(q.vertex_order, self.vertex_map.values())) != list(range(len(q.vertices))):
            raise ValueError("vertex map is not a bijection")
        if sorted(map(q.arrow_order, self.arrow_map.values())) != list(range(len(q.arrows))):
            raise ValueError("arrow map is not a bijection")
        for a in q.arrows:
            img = q.arrow(self.arrow_map[a.name])
            if img.source != self.vertex_map[a.source] or img.target != self.vertex_map[a.target]:
                raise ValueError(f"arrow map incompatible with vertex map at {a.name!r}")
        for rel in self.algebra.relations:
            image = tuple(self.arrow_map[name] for name in rel)
            if not self.algebra.is_zero_word(image):
                raise ValueError(f"image of relation {rel!r} is not zero; map does not descend")

    @property
    def is_identity_on_objects(self) -> bool:
        return all(v == w for v, w in self.vertex_map.items())

    def scalar(self, arrow: ArrowId) -> Fraction:
        return self.scalars[arrow]

    def path_scalar(self, p: Path) -> Fraction:
        value = Fraction(1)
        for name in p.arrows:
            value *= self.scalars[name]
        return value

    def map_path(self, p: Path) -> Path:
        return Path(
            self.vertex_map[p.source],
            self.vertex_map[p.target],
            tuple(self.arrow_map[name] for name in p.arrows),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ScalingAuto):
            return NotImplemented
        return (
            self.algebra is other.algebra
            and self.vertex_map == other.vertex_map
            and self.arrow_map == other.arrow_map
            and self.scalars == other.scalars
        )

    def __repr__(self) -> str:
        nontrivial = {a: str(c) for a, c in self.scalars.items() if c != 1}
        return f"ScalingAuto(scalars={nontrivial})"


def apply_auto(f: ScalingAuto, p: Path) -> tuple[Fraction, Path]:
    """Image of a basis path: (product of arrow scalars, permuted path)."""
    return f.path_scalar(p), f.map_path(p)


def compose_autos(f: ScalingAuto, g: ScalingAuto) -> ScalingAuto:
    """The composite ``f . g`` (apply ``g`` first)."""
    if f.algebra is not g.algebra:
        raise ValueError("autos live on different algebras")
    return ScalingAuto(
        f.algebra,
        scalars={
            a: g.scalars[a] * f.scalars[g.arrow_map[a]] for a in g.scalars
        },
        vertex_map={v: f.vertex_map[g.vertex_map[v]] for v in g.vertex_map},
        arrow_map={a: f.arrow_map[g.arrow_map[a]] for a in g.arrow_map},
    )


def invert_auto(f: ScalingAuto) -> ScalingAuto:
    inv_vertex = {w: v for v, w in f.vertex_map.items()}
    inv_arrow = {b: a for a, b in f.arrow_map.items()}
    return ScalingAuto(
        f.algebra,
        scalars={b: 1 / f.scalars[inv_arrow[b]] for b in inv_arrow},
        vertex_map=inv_vertex,
        arrow_map=inv_arrow,
    )


def identity_auto(algebra: Algebra) -> ScalingAuto:
    return ScalingAuto(algebra)


def vertex_scaling_auto(
    algebra: Algebra, lam: Mapping[VertexId, Fraction | int]
) -> ScalingAuto:
    """Automorphism scaling each arrow ``a: x -> y`` by ``lam(x) / lam(y)``.

    A group homomorphism from per-vertex units; constant families give the
    identity, and its value along any cycle telescopes to 1.
    """
    values: dict[VertexId, Fraction] = {}
    for v in algebra.quiver.vertices:
        if v not in lam:
            raise ValueError(f"missing scalar for vertex {v!r}")
        c = Fraction(lam[v])
        if c == 0:
            raise ValueError(f"scalar for vertex {v!r} is zero")
        values[v] = c
    return ScalingAuto(
        algebra,
        scalars={
            a.name: values[a.source] / values[a.target] for a in algebra.quiver.arrows
        },
    )
