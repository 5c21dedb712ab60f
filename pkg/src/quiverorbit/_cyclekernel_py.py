"""Pure-Python fallback for the exhaustive cycle-value check.

Same semantics as the compiled kernel in ``_cyclekernel.pyx``: depth-first
search over all walks of bounded length in the double quiver, accumulating
exponent vectors, reporting whether every closed walk has trivial value.
"""

from __future__ import annotations

IMPLEMENTATION = "pure"


def trivial_products(n_vertices, head, adj_to, adj_row, exps, ncols, max_len) -> bool:
    """True iff every closed walk of length <= max_len has exponent vector 0.

    ``head``/``adj_to``/``adj_row`` form a CSR adjacency of the double quiver;
    ``exps`` is the flattened per-arc exponent matrix whose column 0 counts
    sign flips (checked mod 2) and whose remaining columns are exponents over
    a multiplicatively independent basis (checked exactly zero).
    """
    acc = [0] * ncols
    arc_stack = [0] * (max_len + 1)
    vertex_stack = [0] * (max_len + 1)
    for start in range(n_vertices):
        depth = 0
        vertex_stack[0] = start
        arc_stack[0] = head[start]
        while depth >= 0:
            arc = arc_stack[depth]
            if arc >= head[vertex_stack[depth] + 1]:
                # exhausted arcs at this depth: pop
                depth -= 1
                if depth >= 0:
                    row = adj_row[arc_stack[depth] - 1] * ncols
                    for c in range(ncols):
                        acc[c] -= exps[row + c]
                continue
            arc_stack[depth] += 1
            target = adj_to[arc]
            row = adj_row[arc] * ncols
            for c in range(ncols):
                acc[c] += exps[row + c]
            if target == start:
                if acc[0] % 2 != 0 or any(acc[c] != 0 for c in range(1, ncols)):
                    return False
            if depth + 1 < max_len:
                depth += 1
                vertex_stack[depth] = target
                arc_stack[depth] = head[target]
            else:
                for c in range(ncols):
                    acc[c] -= exps[row + c]
    return True
