# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_cyclekernel_py``: exhaustive cycle-value check.

Keep the traversal logic in lock step with the pure fallback; the test suite
runs both implementations against each other.
"""

from libc.stdlib cimport calloc, free

IMPLEMENTATION = "compiled"


def trivial_products(int n_vertices,
                     long long[::1] head,
                     long long[::1] adj_to,
                     long long[::1] adj_row,
                     long long[::1] exps,
                     int ncols,
                     int max_len):
    """True iff every closed walk of length <= max_len has exponent vector 0."""
    cdef long long *acc = <long long *> calloc(ncols, sizeof(long long))
    cdef long long *arc_stack = <long long *> calloc(max_len + 1, sizeof(long long))
    cdef long long *vertex_stack = <long long *> calloc(max_len + 1, sizeof(long long))
    if acc == NULL or arc_stack == NULL or vertex_stack == NULL:
        free(acc); free(arc_stack); free(vertex_stack)
        raise MemoryError()

    cdef int depth, c, ok = 1
    cdef long long start, arc, target, row
    try:
        for start in range(n_vertices):
            depth = 0
            vertex_stack[0] = start
            arc_stack[0] = head[start]
            while depth >= 0:
                arc = arc_stack[depth]
                if arc >= head[vertex_stack[depth] + 1]:
                    depth -= 1
                    if depth >= 0:
                        row = adj_row[arc_stack[depth] - 1] * ncols
                        for c in range(ncols):
                            acc[c] -= exps[row + c]
                    continue
                arc_stack[depth] = arc + 1
                target = adj_to[arc]
                row = adj_row[arc] * ncols
                for c in range(ncols):
                    acc[c] += exps[row + c]
                if target == start:
                    if acc[0] % 2 != 0:
                        ok = 0
                    else:
                        for c in range(1, ncols):
                            if acc[c] != 0:
                                ok = 0
                                break
                    if not ok:
                        return False
                if depth + 1 < max_len:
                    depth += 1
                    vertex_stack[depth] = target
                    arc_stack[depth] = head[target]
                else:
                    for c in range(ncols):
                        acc[c] -= exps[row + c]
    finally:
        free(acc)
        free(arc_stack)
        free(vertex_stack)
    return True
