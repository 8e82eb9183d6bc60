"""Pure-Python unit-capacity vertex-disjoint path kernel.

Mirrors ``_flow_ext.pyx`` line for line, including the operation counter, so
both backends return identical triples.

Split network: vertex ``w`` becomes ``w_in = 2w`` and ``w_out = 2w + 1``.
Flow is stored per vertex: ``prv[w]`` is the vertex sending the unit of flow
that enters ``w`` (``-1`` when ``w`` carries none). The internal arc of ``w``
is saturated exactly when ``prv[w] != -1``. Edge arcs behave as unbounded
except the direct ``x -> y`` arc, which carries at most one unit; this keeps
every minimum cut on internal arcs.
"""

from collections import deque

UNSEEN = -2


def max_flow(adj, x, y, cap, want_cut):
    """Return ``(min(kappa(x, y), cap), cut, ops)``.

    ``cut`` is the sorted list of vertices whose internal arc crosses the
    residual-reachability boundary when the flow stops below ``cap``, else
    ``None``. ``ops`` counts dequeued nodes plus adjacency entries scanned.
    """
    n = len(adj)
    prv = [-1] * n
    direct = False
    value = 0
    ops = 0
    src = 2 * x + 1
    target = 2 * y
    parent = None
    found = False
    while value < cap:
        parent = [UNSEEN] * (2 * n)
        parent[src] = src
        parent[2 * x] = 2 * x
        queue = deque([src])
        found = False
        while queue:
            node = queue.popleft()
            ops += 1
            w = node >> 1
            if node & 1:
                for b in adj[w]:
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
                    queue.append(nb)
                if found:
                    break
                if w != x and prv[w] != -1 and parent[2 * w] == UNSEEN:
                    parent[2 * w] = node
                    queue.append(2 * w)
            else:
                p = prv[w]
                nb = 2 * w + 1 if p == -1 else 2 * p + 1
                if parent[nb] == UNSEEN:
                    parent[nb] = node
                    queue.append(nb)
        if not found:
            break

        cancels = []
        adds = []
        node = target
        while node != src:
            par = parent[node]
            a = par >> 1
            b = node >> 1
            if a != b:
                if par & 1:
                    # forward edge arc a_out -> b_in
                    if prv[a] == b:
                        cancels.append((b, a))
                    else:
                        adds.append((a, b))
                else:
                    # backward over the flow arc b -> a
                    cancels.append((b, a))
            node = par
        for a, b in cancels:
            if b != y:
                prv[b] = -1
            elif a == x:
                direct = False
        for a, b in adds:
            if b != y:
                prv[b] = a
            elif a == x:
                direct = True
        value += 1

    cut = None
    if want_cut and value < cap and parent is not None:
        cut = [
            w
            for w in range(n)
            if w != x and w != y and parent[2 * w] != UNSEEN and parent[2 * w + 1] == UNSEEN
        ]
    return value, cut, ops
