"""Canonical labeling for small graphs and free trees.

Graphs use individualization-refinement: the vertex partition is refined
until equitable, then the first non-singleton cell is split by trying each
of its vertices in turn. Every discrete leaf yields an adjacency code and
the largest code wins. Two vertices of one cell that are twins (same
neighbourhood apart from each other) give isomorphic subtrees, so only one
of them is explored; this keeps cliques, stars and complete multipartite
graphs from blowing up factorially.
"""

from __future__ import annotations

from typing import Iterable

from .graph import Graph, from_edge_list, relabel


def _mask(cell: Iterable[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = [_mask(c) for c in cells]
        out: list[list[int]] = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                a = adj[v]
                key = tuple((a & m).bit_count() for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) > 1:
                split = True
                for key in sorted(groups):
                    out.append(groups[key])
            else:
                out.append(cell)
        cells = out
        if not split:
            return cells


def _code(adj: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def _twin_representatives(adj: tuple[int, ...], cell: list[int]) -> list[int]:
    reps: list[int] = []
    for v in cell:
        av = adj[v]
        for r in reps:
            if av & ~(1 << r) == adj[r] & ~(1 << v):
                break
        else:
            reps.append(v)
    return reps


def canonical_order(g: Graph) -> list[int]:
    """Vertex order whose relabeling is the canonical form of ``g``."""
    n = g.n
    if n <= 1:
        return list(range(n))
    adj = g.adj
    best_code = -1
    best_order: list[int] = []

    def search(cells: list[list[int]]) -> None:
        nonlocal best_code, best_order
        cells = _refine(adj, cells)
        k = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if k is None:
            order = [c[0] for c in cells]
            code = _code(adj, order)
            if code > best_code:
                best_code, best_order = code, order
            return
        cell = cells[k]
        for v in _twin_representatives(adj, cell):
            rest = [w for w in cell if w != v]
            search(cells[:k] + [[v], rest] + cells[k + 1 :])

    search([list(range(n))])
    return best_order


def canonical_code(g: Graph) -> int:
    """Integer certificate; equal for two graphs of equal order iff isomorphic."""
    return _code(g.adj, canonical_order(g))


def canonical_form(g: Graph) -> Graph:
    return relabel(g, canonical_order(g))


# free trees -----------------------------------------------------------------


def _tree_centers(g: Graph) -> list[int]:
    n = g.n
    if n <= 2:
        return list(range(n))
    deg = [a.bit_count() for a in g.adj]
    leaves = [v for v in range(n) if deg[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(leaves)
        nxt = []
        for leaf in leaves:
            a = g.adj[leaf]
            while a:
                low = a & -a
                w = low.bit_length() - 1
                a ^= low
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
            deg[leaf] = 0
        leaves = nxt
    return leaves


def _rooted_code(g: Graph, root: int, parent: int) -> str:
    kids = []
    a = g.adj[root]
    while a:
        low = a & -a
        w = low.bit_length() - 1
        a ^= low
        if w != parent:
            kids.append(_rooted_code(g, w, root))
    return "(" + "".join(sorted(kids)) + ")"


def tree_code(g: Graph) -> str:
    """AHU certificate of a free tree, rooted at its centre (or centre edge)."""
    centers = _tree_centers(g)
    if len(centers) == 1:
        return _rooted_code(g, centers[0], -1)
    if len(centers) == 0:
        return ""
    u, v = centers
    a, b = sorted((_rooted_code(g, u, v), _rooted_code(g, v, u)))
    return "[" + a + b + "]"


def tree_from_code(code: str) -> Graph:
    """Rebuild a tree from :func:`tree_code`, numbering vertices in preorder."""
    edges: list[tuple[int, int]] = []
    stack: list[int] = []
    roots: list[int] = []
    count = 0
    for ch in code:
        if ch == "(":
            if stack:
                edges.append((stack[-1], count))
            else:
                roots.append(count)
            stack.append(count)
            count += 1
        elif ch == ")":
            stack.pop()
    if len(roots) == 2:
        edges.append((roots[0], roots[1]))
    return from_edge_list(count, edges)
