# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled unit-capacity vertex-disjoint path kernel.

Same algorithm, tie-breaking and operation counter as ``_flow_py.max_flow``.
"""

from libc.stdlib cimport malloc, free

cdef enum:
    UNSEEN = -2


def max_flow(list adj, Py_ssize_t x, Py_ssize_t y, Py_ssize_t cap, bint want_cut):
    cdef Py_ssize_t n = len(adj)
    cdef Py_ssize_t nn = 2 * n
    cdef Py_ssize_t *prv = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
    cdef Py_ssize_t *parent = <Py_ssize_t *> malloc(nn * sizeof(Py_ssize_t))
    cdef Py_ssize_t *queue = <Py_ssize_t *> malloc(nn * sizeof(Py_ssize_t))
    # path scratch: (a, b, is_add) triples, at most one per split node
    cdef Py_ssize_t *path = <Py_ssize_t *> malloc(3 * nn * sizeof(Py_ssize_t))
    if prv == NULL or parent == NULL or queue == NULL or path == NULL:
        free(prv); free(parent); free(queue); free(path)
        raise MemoryError()

    cdef Py_ssize_t i, head, tail, node, w, b, nb, p, par, a, plen, j
    cdef Py_ssize_t value = 0
    cdef long long ops = 0
    cdef bint direct = False
    cdef bint found = False
    cdef bint searched = False
    cdef Py_ssize_t src = 2 * x + 1
    cdef Py_ssize_t target = 2 * y
    cdef list nbrs
    cdef Py_ssize_t deg

    for i in range(n):
        prv[i] = -1

    try:
        while value < cap:
            searched = True
            for i in range(nn):
                parent[i] = UNSEEN
            parent[src] = src
            parent[2 * x] = 2 * x
            head = 0
            tail = 0
            queue[tail] = src
            tail += 1
            found = False
            while head < tail:
                node = queue[head]
                head += 1
                ops += 1
                w = node >> 1
                if node & 1:
                    nbrs = <list> adj[w]
                    deg = len(nbrs)
                    for i in range(deg):
                        b = <Py_ssize_t> nbrs[i]
                        ops += 1
                        nb = 2 * b
                        if parent[nb] != UNSEEN:
                            continue
                        if direct and w == x and b == y:
                            continue
                        parent[nb] = node
                        if nb == target:
                            found = True
                            break
                        queue[tail] = nb
                        tail += 1
                    if found:
                        break
                    if w != x and prv[w] != -1 and parent[2 * w] == UNSEEN:
                        parent[2 * w] = node
                        queue[tail] = 2 * w
                        tail += 1
                else:
                    p = prv[w]
                    if p == -1:
                        nb = 2 * w + 1
                    else:
                        nb = 2 * p + 1
                    if parent[nb] == UNSEEN:
                        parent[nb] = node
                        queue[tail] = nb
                        tail += 1
            if not found:
                break

            plen = 0
            node = target
            while node != src:
                par = parent[node]
                a = par >> 1
                b = node >> 1
                if a != b:
                    if par & 1:
                        if prv[a] == b:
                            path[3 * plen] = b
                            path[3 * plen + 1] = a
                            path[3 * plen + 2] = 0
                        else:
                            path[3 * plen] = a
                            path[3 * plen + 1] = b
                            path[3 * plen + 2] = 1
                    else:
                        path[3 * plen] = b
                        path[3 * plen + 1] = a
                        path[3 * plen + 2] = 0
                    plen += 1
                node = par
            for j in range(plen):
                if path[3 * j + 2] == 0:
                    a = path[3 * j]
                    b = path[3 * j + 1]
                    if b != y:
                        prv[b] = -1
                    elif a == x:
                        direct = False
            for j in range(plen):
                if path[3 * j + 2] == 1:
                    a = path[3 * j]
                    b = path[3 * j + 1]
                    if b != y:
                        prv[b] = a
                    elif a == x:
                        direct = True
            value += 1

        cut = None
        if want_cut and value < cap and searched:
            cut = [
                w for w in range(n)
                if w != x and w != y and parent[2 * w] != UNSEEN and parent[2 * w + 1] == UNSEEN
            ]
        return value, cut, ops
    finally:
        free(prv)
        free(parent)
        free(queue)
        free(path)
