"""Deterministic generators for the named graph families and witnesses.

Labeling conventions
--------------------
path / cycle / complete
    ``0..n-1`` in the obvious order.
complete_bipartite(a, b)
    side A is ``0..a-1``, side B is ``a..a+b-1``.
spider(legs)
    centre ``0``; each leg in turn, listed outward from the centre.
eperi_extremal(s)
    centre ``0``, then the clique vertices for ``i = -1, 0, ..., i_max``,
    then the chain vertices for ``i = -1, 0, ..., i_max`` listed from the
    clique end towards the centre.
espr_extremal(s)
    ``a_1..a_s, b_1..b_s, c_1..c_s, d_1..d_s`` as ``0..4s-1``; ``v = 4s``.
pendant_clique(n)
    clique ``0..k-1`` with ``k = ceil(n/2)``; pendant ``k + i`` hangs on
    clique vertex ``i``.
rhombic_dodecahedron / rhombic_triacontahedron
    polyhedron vertices first, then one vertex per face.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .graph import Graph, from_edge_list

__all__ = [
    "ALPHA",
    "ConstructionError",
    "ConstructionSpec",
    "FAMILIES",
    "build",
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "complete_multipartite",
    "star",
    "spider",
    "balanced_spider",
    "eperi_extremal",
    "eperi_extremal_layout",
    "espr_extremal",
    "pendant_clique",
    "rhombic_dodecahedron",
    "rhombic_triacontahedron",
    "table1_witness",
]

ALPHA = (math.sqrt(3) - 1) / 2
_FLOOR_EPS = 1e-9


class ConstructionError(ValueError):
    pass


def _floor(x: float) -> int:
    # guards against s*alpha**i landing just under an integer
    return math.floor(x + _FLOOR_EPS)


# standard families ----------------------------------------------------------


def path(n: int) -> Graph:
    if n < 1:
        raise ConstructionError("path needs at least one vertex")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ConstructionError("cycle needs at least three vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ConstructionError("complete graph needs at least one vertex")
    return from_edge_list(n, combinations(range(n), 2))


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    if not sizes or any(s < 1 for s in sizes):
        raise ConstructionError("part sizes must be positive")
    part = [p for p, s in enumerate(sizes) for _ in range(s)]
    n = len(part)
    return from_edge_list(n, [(u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]])


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite([a, b])


def spider(legs: Sequence[int]) -> Graph:
    """Paths of the given lengths glued at a common centre ``0``."""
    if not legs:
        raise ConstructionError("spider needs at least one leg")
    if any(length < 1 for length in legs):
        raise ConstructionError("spider legs must have length >= 1")
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return from_edge_list(nxt, edges)


def star(k: int) -> Graph:
    """``K_{1,k}`` with centre ``0``."""
    return spider([1] * k)


def balanced_spider(a: int, b: int) -> Graph:
    """``a`` legs of length ``b``; ``a*b + 1`` vertices."""
    return spider([b] * a)


# extremal constructions -----------------------------------------------------


@dataclass(frozen=True)
class EperiLayout:
    s: int
    i_max: int
    clique_sizes: tuple[int, ...]  # for i = -1, 0, ..., i_max
    chain_lengths: tuple[int, ...]
    n: int

    @property
    def largest_arm(self) -> int:
        return self.clique_sizes[0] + self.chain_lengths[0]


def eperi_extremal_layout(s: int) -> EperiLayout:
    """Clique and chain sizes of the edge-peripherality construction."""
    if s < 4:
        raise ConstructionError("eperi_extremal needs s >= 4")
    i_max = 0
    while s * ALPHA ** (i_max + 1) + _FLOOR_EPS >= 1:
        i_max += 1
    sizes = [_floor(s / (1 - ALPHA))] + [_floor(s * ALPHA**i) for i in range(i_max + 1)]
    chains = [2 * i_max + 1 - 2 * i for i in range(-1, i_max + 1)]
    n = 1 + sum(sizes) + sum(chains)
    return EperiLayout(s, i_max, tuple(sizes), tuple(chains), n)


def eperi_extremal(s: int) -> Graph:
    """Chain-of-cliques graph with many dominant (edge, vertex) pairs.

    Cliques of sizes ``floor(s/(1-alpha))`` and ``floor(s*alpha**i)`` for
    ``0 <= i <= i_max`` each hang off a common centre through a chain whose
    length shrinks by two per step down in clique size.
    """
    lay = eperi_extremal_layout(s)
    if 2 * lay.largest_arm >= lay.n:
        raise ConstructionError(
            f"largest arm has {lay.largest_arm} of {lay.n} vertices; it must be under half"
        )
    edges = []
    nxt = 1
    first = []
    for size in lay.clique_sizes:
        block = range(nxt, nxt + size)
        edges.extend(combinations(block, 2))
        first.append(nxt)
        nxt += size
    for head, length in zip(first, lay.chain_lengths):
        chain = list(range(nxt, nxt + length))
        nxt += length
        edges.append((head, chain[0]))
        edges.extend(zip(chain, chain[1:]))
        edges.append((chain[-1], 0))
    return from_edge_list(nxt, edges)


def espr_extremal(s: int) -> Graph:
    """Four ``s``-cliques joined a=b and c=d, with ``v`` adjacent to all b and c."""
    if s < 1:
        raise ConstructionError("espr_extremal needs s >= 1")
    a, b, c, d = (range(k * s, (k + 1) * s) for k in range(4))
    v = 4 * s
    edges = []
    for grp in (a, b, c, d):
        edges.extend(combinations(grp, 2))
    edges.extend((x, y) for x in a for y in b)
    edges.extend((x, y) for x in c for y in d)
    edges.extend((v, x) for x in (*b, *c))
    return from_edge_list(4 * s + 1, edges)


def pendant_clique(n: int) -> Graph:
    """``K_ceil(n/2)`` with ``floor(n/2)`` pendants, one per clique vertex."""
    if n < 2:
        raise ConstructionError("pendant_clique needs n >= 2")
    k = (n + 1) // 2
    edges = list(combinations(range(k), 2))
    edges.extend((i, k + i) for i in range(n // 2))
    return from_edge_list(n, edges)


# polyhedra --------------------------------------------------------------------

_DODECAHEDRON_FACES = (
    (0, 1, 2, 3, 19),
    (0, 1, 8, 9, 10),
    (0, 19, 18, 11, 10),
    (1, 2, 6, 7, 8),
    (2, 3, 4, 5, 6),
    (4, 5, 15, 16, 17),
    (6, 5, 15, 14, 7),
    (8, 7, 14, 13, 9),
    (10, 9, 13, 12, 11),
    (11, 12, 16, 17, 18),
    (12, 13, 14, 15, 16),
    (19, 3, 4, 17, 18),
)

# cube vertex k has coordinates (k>>2 & 1, k>>1 & 1, k & 1)
_CUBE_FACES = tuple(
    tuple(k for k in range(8) if (k >> axis) & 1 == side) for axis in (2, 1, 0) for side in (0, 1)
)


def _face_incidence(n_vertices: int, faces) -> Graph:
    edges = [(x, n_vertices + f) for f, face in enumerate(faces) for x in face]
    return from_edge_list(n_vertices + len(faces), edges)


def rhombic_dodecahedron() -> Graph:
    """14 vertices (8 degree-3 cube corners, 6 degree-4 face centres), 24 edges."""
    return _face_incidence(8, _CUBE_FACES)


def rhombic_triacontahedron() -> Graph:
    """32 vertices (20 of degree 3, 12 of degree 5), 60 edges."""
    return _face_incidence(20, _DODECAHEDRON_FACES)


# witnesses --------------------------------------------------------------------


def _one_based(n: int, edges) -> Graph:
    return from_edge_list(n, [(u - 1, v - 1) for u, v in edges])


_TABLE1 = {
    (3, "trees"): lambda: path(3),
    (3, "graphs"): lambda: path(3),
    (4, "trees"): lambda: path(4),
    (4, "graphs"): lambda: from_edge_list(4, [(0, 1), (1, 2), (0, 2), (2, 3)]),
    (5, "trees"): lambda: spider([1, 1, 2]),
    (5, "graphs"): lambda: spider([1, 1, 2]),
    (6, "trees"): lambda: spider([1, 2, 2]),
    (6, "graphs"): lambda: _one_based(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 5)]),
    (7, "trees"): lambda: spider([1, 2, 3]),
    (7, "graphs"): lambda: spider([1, 2, 3]),
    (8, "trees"): lambda: spider([1, 1, 2, 3]),
    (8, "graphs"): lambda: _one_based(
        8, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (4, 6)]
    ),
}


def table1_witness(n: int, cls: str) -> Graph:
    """Graph attaining the maximum peripherality for ``3 <= n <= 8``.

    ``cls`` is ``"trees"`` or ``"graphs"`` (connected graphs).
    """
    cls = "graphs" if cls == "connected_graphs" else cls
    if cls not in ("trees", "graphs"):
        raise ConstructionError(f"unknown class {cls!r}")
    try:
        return _TABLE1[(n, cls)]()
    except KeyError:
        raise ConstructionError(f"no tabulated witness for n={n}") from None


# dispatch by family name -------------------------------------------------------

FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "complete_multipartite": (lambda *p: complete_multipartite(p), None),
    "star": (star, 1),
    "spider": (lambda *legs: spider(legs), None),
    "balanced_spider": (balanced_spider, 2),
    "eperi_extremal": (eperi_extremal, 1),
    "espr_extremal": (espr_extremal, 1),
    "pendant_clique": (pendant_clique, 1),
    "rhombic_dodecahedron": (rhombic_dodecahedron, 0),
    "rhombic_triacontahedron": (rhombic_triacontahedron, 0),
}


@dataclass(frozen=True)
class ConstructionSpec:
    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.family == "table1_witness":
            if len(self.params) != 2:
                raise ConstructionError("table1_witness takes (n, class)")
            return
        if self.family not in FAMILIES:
            raise ConstructionError(f"unknown family {self.family!r}")
        arity = FAMILIES[self.family][1]
        if arity is not None and len(self.params) != arity:
            raise ConstructionError(f"{self.family} takes {arity} parameter(s)")
        if arity is None and not self.params:
            raise ConstructionError(f"{self.family} needs at least one parameter")


def build(spec: ConstructionSpec) -> Graph:
    if spec.family == "table1_witness":
        n, cls = spec.params
        return table1_witness(int(n), str(cls))
    fn, _ = FAMILIES[spec.family]
    return fn(*spec.params)
