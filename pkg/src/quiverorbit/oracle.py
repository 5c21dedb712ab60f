"""Brute-force checks backing the criterion and the orbit constructions.

The cycle inventory enumerates every cycle (anchored closed walk) of the
double quiver up to a length bound, with no equivalence quotient; it is
exponential in the bound by design and meant for desk-scale cross checks.
``all_cycles_pass`` never materializes the inventory: it streams the same
search through the cycle kernel, encoding each scalar as an exponent vector
over a multiplicatively independent integer basis so the product-is-1 test
becomes integer vector addition.
"""

from __future__ import annotations

from array import array
from fractions import Fraction
from math import gcd
from typing import Iterator, Mapping

from . import kernels
from .orbit import GradedAlgebra
from .quiver import ArrowId, Cycle, Quiver, Step, VertexId, Walk, cycle_value

__all__ = [
    "CycleInventory",
    "enumerate_all_cycles",
    "all_cycles_pass",
    "structure_table",
]


class CycleInventory:
    """All cycles of a quiver up to ``max_len``, unreduced.

    Cycles materialize lazily; iteration and ``len`` force them.  The set is
    closed under rotation and inversion within the bound because every
    anchored traversal is enumerated separately.
    """

    def __init__(self, quiver: Quiver, max_len: int) -> None:
        if max_len < 1:
            raise ValueError("max_len must be >= 1")
        self.quiver = quiver
        self.max_len = max_len
        self._cycles: list[Cycle] | None = None

    @property
    def cycles(self) -> list[Cycle]:
        if self._cycles is None:
            self._cycles = list(_walk_cycles(self.quiver, self.max_len))
        return self._cycles

    def __iter__(self) -> Iterator[Cycle]:
        return iter(self.cycles)

    def __len__(self) -> int:
        return len(self.cycles)


def _moves(q: Quiver, v: VertexId) -> list[tuple[Step, VertexId]]:
    out = []
    for a in q.arrows:
        if a.source == v:
            out.append((Step(a.name), a.target))
        if a.target == v:
            out.append((Step(a.name, inverse=True), a.source))
    return out


def _walk_cycles(q: Quiver, max_len: int) -> Iterator[Cycle]:
    moves = {v: _moves(q, v) for v in q.vertices}

    def extend(start: VertexId, at: VertexId, steps: list[Step]) -> Iterator[Cycle]:
        for step, nxt in moves[at]:
            steps.append(step)
            if nxt == start:
                yield Cycle(q, start, tuple(steps))
            if len(steps) < max_len:
                yield from extend(start, nxt, steps)
            steps.pop()

    for v in q.vertices:
        yield from extend(v, v, [])


def enumerate_all_cycles(q: Quiver, max_len: int) -> CycleInventory:
    return CycleInventory(q, max_len)


def _coprime_basis(values: list[int]) -> list[int]:
    """Pairwise coprime integers over which every input factors (refinement
    by gcd splitting; no prime factorization needed)."""
    basis: list[int] = []
    work = [v for v in values if v > 1]
    while work:
        n = work.pop()
        if n == 1:
            continue
        for i, b in enumerate(basis):
            g = gcd(n, b)
            if g > 1:
                del basis[i]
                work.extend((g, b // g, n // g))
                break
        else:
            basis.append(n)
    return sorted(set(basis))


def _exponents(value: int, basis: list[int]) -> list[int]:
    out = []
    for b in basis:
        e = 0
        while value % b == 0:
            value //= b
            e += 1
        out.append(e)
    if value != 1:
        raise ArithmeticError("value does not factor over the refined basis")
    return out


def _encode(quiver: Quiver, scalars: Mapping[ArrowId, Fraction | int]):
    """CSR double-quiver adjacency plus per-arc exponent rows.

    Column 0 counts negative factors (sign parity); the remaining columns are
    exponents over the coprime basis of all numerators and denominators.
    """
    fracs: dict[ArrowId, Fraction] = {}
    for a in quiver.arrows:
        c = Fraction(scalars[a.name])
        if c == 0:
            raise ValueError(f"scalar for arrow {a.name!r} is zero")
        fracs[a.name] = c
    basis = _coprime_basis(
        [abs(c.numerator) for c in fracs.values()]
        + [c.denominator for c in fracs.values()]
    )
    ncols = len(basis) + 1
    order = {v: i for i, v in enumerate(quiver.vertices)}
    arcs: list[tuple[int, int, list[int]]] = []
    for a in quiver.arrows:
        c = fracs[a.name]
        row = [1 if c.numerator < 0 else 0]
        num = _exponents(abs(c.numerator), basis)
        den = _exponents(c.denominator, basis)
        row.extend(n - d for n, d in zip(num, den))
        arcs.append((order[a.source], order[a.target], row))
        arcs.append((order[a.target], order[a.source], [-e for e in row]))
    arcs.sort(key=lambda t: t[0])
    head = array("q", [0] * (len(quiver.vertices) + 1))
    adj_to = array("q", [0] * len(arcs))
    adj_row = array("q", [0] * len(arcs))
    exps = array("q", [0] * (len(arcs) * ncols))
    for i, (src, dst, row) in enumerate(arcs):
        head[src + 1] += 1
        adj_to[i] = dst
        adj_row[i] = i
        exps[i * ncols : (i + 1) * ncols] = array("q", row)
    for v in range(len(quiver.vertices)):
        head[v + 1] += head[v]
    return head, adj_to, adj_row, exps, ncols


def _all_cycles_pass_fracs(
    quiver: Quiver, scalars: Mapping[ArrowId, Fraction | int], max_len: int
) -> bool:
    for cyc in _walk_cycles(quiver, max_len):
        if cycle_value(scalars, cyc) != 1:
            return False
    return True


def all_cycles_pass(
    scalars: Mapping[ArrowId, Fraction | int], inv: CycleInventory
) -> bool:
    """True iff the scalar product along every inventoried cycle is 1.

    Streams the search through the cycle kernel rather than touching the
    materialized list, so it stays usable at bounds where the inventory
    itself would not fit in memory.
    """
    try:
        head, adj_to, adj_row, exps, ncols = _encode(inv.quiver, scalars)
    except ArithmeticError:  # pragma: no cover - refinement is total
        return _all_cycles_pass_fracs(inv.quiver, scalars, inv.max_len)
    return bool(
        kernels.active.trivial_products(
            len(inv.quiver.vertices), head, adj_to, adj_row, exps, ncols, inv.max_len
        )
    )


def structure_table(g: GradedAlgebra) -> str:
    """Deterministic text table of all nonzero basis products.

    One line per product, plus a basis header; names are intrinsic (objects,
    degree, window element), so two rescaled-but-isomorphic algebras differ
    only in the scalar column.
    """

    def obj(o) -> str:
        return f"{o[1]}[{o[0]}]"

    def name(e) -> str:
        return f"{obj(e.src)}->{obj(e.dst)}|deg {e.degree}|{e.welt}"

    lines = [f"dim {g.dim} objects {' '.join(obj(o) for o in g.objects)}"]
    for e in g.basis:
        lines.append(f"basis {name(e)}")
    for f in g.basis:
        for h in g.basis:
            if h.src != f.dst:
                continue
            out = g.table.get((h, f))
            if out is None:
                continue
            c, e = out
            lines.append(f"{name(h)} * {name(f)} = {c} * {name(e)}")
    return "\n".join(lines) + "\n"
