"""Peripherality-family indices computed from a shared closeness matrix.

Everything here starts from ``counts[u, v]``, the number of vertices
strictly closer to ``u`` than to ``v``. Vertices at equal distance from both
count for neither side. Disconnected graphs are rejected.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from .graph import DisconnectedGraphError, DistanceMatrix, Graph, GraphError, distance_matrix

__all__ = [
    "ClosenessCounts",
    "IndexReport",
    "INDEX_NAMES",
    "closeness_counts",
    "shifted_count",
    "peri_vertex",
    "peri_graph",
    "is_dominant",
    "eperi_edge",
    "eperi_graph",
    "espr_edge",
    "espr_graph",
    "espr_degree_proxy",
    "mostar_pair",
    "mostar_graph",
    "total_mostar",
    "nt_pair",
    "nt_graph",
    "irr_edge",
    "irr_graph",
    "is_nt_balanced",
    "is_ultra_nt_balanced",
    "compute_index",
    "index_report",
]

INDEX_NAMES = ("peri", "eperi", "espr", "mo", "mo_star", "nt", "irr")

# NT <= C(n,2)(n-2)^2 must stay below 2**63 for int64 accumulation
_INT64_MAX = np.iinfo(np.int64).max


class ClosenessCounts:
    """Ordered closeness matrix of a connected graph.

    Attributes
    ----------
    n : int
        Vertex count.
    counts : ndarray of int64, shape (n, n)
        ``counts[u, v] = |{x : d(x, u) < d(x, v)}|``.
    dist : DistanceMatrix
        The distances the counts were derived from.

    The per-pair histograms of ``d(x, u) - d(x, v)`` are built lazily on
    first access of :attr:`diff_histograms`, since only the shifted counts
    and the ultra-balance test need them.
    """

    def __init__(self, graph: Graph, dist: DistanceMatrix, counts: np.ndarray):
        self.graph = graph
        self.n = graph.n
        self.dist = dist
        self.counts = counts
        self.counts.setflags(write=False)

    @cached_property
    def diameter(self) -> int:
        return int(self.dist.dist.max()) if self.n else 0

    @cached_property
    def diff_histograms(self) -> np.ndarray:
        """``h[u, v, k + diam]`` = number of ``x`` with ``d(x,u) - d(x,v) = k``.

        Stored for every ordered pair, so ``h[v, u]`` is ``h[u, v]`` reversed.
        """
        n, diam = self.n, self.diameter
        d = self.dist.dist.astype(np.int64)
        width = 2 * diam + 1
        h = np.zeros((n, n, width), dtype=np.int32)
        rows = np.arange(n)[:, None]
        for u in range(n):
            diffs = d[u][None, :] - d + diam  # row v: d(u,x) - d(v,x)
            np.add.at(h[u], (np.broadcast_to(rows, diffs.shape), diffs), 1)
        return h

    @cached_property
    def closer_than(self) -> np.ndarray:
        """Boolean ``P[u, v]``: strictly more vertices are closer to ``u``."""
        return self.counts > self.counts.T

    @cached_property
    def column_sums(self) -> np.ndarray:
        """``sum_x counts[x, u]`` for each ``u``."""
        return self.counts.sum(axis=0)


def _counts_from_distances(d: np.ndarray) -> np.ndarray:
    n = d.shape[0]
    counts = np.empty((n, n), dtype=np.int64)
    for u in range(n):
        # counts[u, v] = #{x : d(u,x) < d(v,x)}
        counts[u] = np.count_nonzero(d > d[u], axis=1)
    return counts


def closeness_counts(g: Graph, dist: Optional[DistanceMatrix] = None) -> ClosenessCounts:
    """Compute ``n_G(u, v)`` for all ordered pairs.

    Raises
    ------
    DisconnectedGraphError
        If ``g`` is not connected.
    """
    dist = dist if dist is not None else distance_matrix(g)
    if g.n and not dist.connected:
        raise DisconnectedGraphError("closeness counts need a connected graph")
    return ClosenessCounts(g, dist, _counts_from_distances(dist.dist))


def _pair(u: int, v: int) -> None:
    if u == v:
        raise GraphError("pair indices must be distinct")


def _require_edge(g: Graph, u: int, v: int) -> None:
    if not g.has_edge(u, v):
        raise GraphError(f"{{{u}, {v}}} is not an edge")


def shifted_count(cc: ClosenessCounts, a: int, u: int, v: int) -> int:
    """Number of ``x`` with ``d(x, u) < a + d(x, v)``.

    ``a = 0`` reproduces ``cc.counts[u, v]``.
    """
    _pair(u, v)
    diam = cc.diameter
    if a > diam:
        return cc.n
    if a <= -diam:
        return 0
    return int(cc.diff_histograms[u, v, : a + diam].sum())


# peripherality --------------------------------------------------------------


def peri_vertex(cc: ClosenessCounts, v: int) -> int:
    """Number of ``u`` with ``n(u, v) > n(v, u)``."""
    return int(cc.closer_than[:, v].sum())


def peri_graph(cc: ClosenessCounts) -> int:
    return int(cc.closer_than.sum())


def is_dominant(cc: ClosenessCounts, edge: Sequence[int], x: int) -> bool:
    u, v = edge
    _require_edge(cc.graph, u, v)
    p = cc.closer_than
    return bool(p[x, u] and p[x, v])


def eperi_edge(cc: ClosenessCounts, edge: Sequence[int]) -> int:
    u, v = edge
    _require_edge(cc.graph, u, v)
    p = cc.closer_than
    return int(np.count_nonzero(p[:, u] & p[:, v]))


def eperi_graph(g: Graph, cc: ClosenessCounts) -> int:
    """Number of dominant (edge, vertex) pairs."""
    if g.n < 2:
        return 0
    # float64 BLAS is exact here: every entry is at most n
    p = cc.closer_than.astype(np.float64)
    both = p.T @ p  # both[u, v] = #{x : P[x,u] and P[x,v]}
    return int(round(float((both * g.adjacency_matrix).sum()))) // 2


# edge sum peripherality -----------------------------------------------------


def espr_edge(cc: ClosenessCounts, edge: Sequence[int]) -> int:
    u, v = edge
    _require_edge(cc.graph, u, v)
    c, cs = cc.counts, cc.column_sums
    return int(cs[u] - c[v, u] + cs[v] - c[u, v])


def espr_graph(g: Graph, cc: ClosenessCounts) -> int:
    if g.edge_count == 0:
        return 0
    e = np.array(g.edges())
    u, v = e[:, 0], e[:, 1]
    c, cs = cc.counts, cc.column_sums
    return int((cs[u] + cs[v] - c[v, u] - c[u, v]).sum())


def espr_degree_proxy(g: Graph, cc: ClosenessCounts) -> int:
    """``sum_u deg(u) * sum_x n(x, u)``.

    Exceeds :func:`espr_graph` by exactly ``sum over edges of n(u,v) + n(v,u)``.
    """
    return int((g.degrees * cc.column_sums).sum())


# Mostar and Trinajstic ------------------------------------------------------


def mostar_pair(cc: ClosenessCounts, pair: Sequence[int]) -> int:
    u, v = pair
    _pair(u, v)
    return int(abs(cc.counts[u, v] - cc.counts[v, u]))


def mostar_graph(g: Graph, cc: ClosenessCounts) -> int:
    """Mostar index: sum of pair imbalances over edges."""
    if g.edge_count == 0:
        return 0
    e = np.array(g.edges())
    c = cc.counts
    return int(np.abs(c[e[:, 0], e[:, 1]] - c[e[:, 1], e[:, 0]]).sum())


def _upper_diffs(cc: ClosenessCounts) -> np.ndarray:
    c = cc.counts
    return (c - c.T)[np.triu_indices(cc.n, 1)]


def total_mostar(cc: ClosenessCounts) -> int:
    """Total Mostar index over all unordered vertex pairs."""
    return int(np.abs(_upper_diffs(cc)).sum())


def nt_pair(cc: ClosenessCounts, pair: Sequence[int]) -> int:
    u, v = pair
    _pair(u, v)
    return int((cc.counts[u, v] - cc.counts[v, u]) ** 2)


def nt_graph(cc: ClosenessCounts) -> int:
    """Trinajstic index over all unordered vertex pairs.

    Raises
    ------
    OverflowError
        If the worst-case value could exceed int64 accumulation.
    """
    n = cc.n
    if n >= 2 and (n * (n - 1) // 2) * (n - 2) ** 2 > _INT64_MAX:
        raise OverflowError(f"NT may overflow int64 for n={n}")
    d = _upper_diffs(cc)
    return int((d * d).sum())


# irregularity -----------------------------------------------------------------


def irr_edge(g: Graph, edge: Sequence[int]) -> int:
    u, v = edge
    _require_edge(g, u, v)
    return abs(g.degree(u) - g.degree(v))


def irr_graph(g: Graph) -> int:
    """Albertson irregularity; defined for any graph, connected or not."""
    if g.edge_count == 0:
        return 0
    e = np.array(g.edges())
    deg = g.degrees
    return int(np.abs(deg[e[:, 0]] - deg[e[:, 1]]).sum())


# balance --------------------------------------------------------------------


def is_nt_balanced(cc: ClosenessCounts) -> bool:
    return bool((cc.counts == cc.counts.T).all())


def is_ultra_nt_balanced(cc: ClosenessCounts) -> bool:
    """Every pair's distance-difference histogram is symmetric about zero.

    This is the same as ``n_a(u, v) = n_a(v, u)`` for every integer ``a``.
    """
    if not is_nt_balanced(cc):
        return False
    d = cc.dist.dist.astype(np.int32)
    for u in range(cc.n):
        diffs = np.sort(d[u][None, :] - d, axis=1)
        if not np.array_equal(diffs, -diffs[:, ::-1]):
            return False
    return True


# reports --------------------------------------------------------------------


def compute_index(g: Graph, name: str, cc: Optional[ClosenessCounts] = None) -> int:
    """Graph-level value of the index called ``name`` (see ``INDEX_NAMES``)."""
    if name == "irr":
        return irr_graph(g)
    cc = cc if cc is not None else closeness_counts(g)
    if name == "peri":
        return peri_graph(cc)
    if name == "eperi":
        return eperi_graph(g, cc)
    if name == "espr":
        return espr_graph(g, cc)
    if name == "mo":
        return mostar_graph(g, cc)
    if name == "mo_star":
        return total_mostar(cc)
    if name == "nt":
        return nt_graph(cc)
    raise ValueError(f"unknown index {name!r}; expected one of {INDEX_NAMES}")


@dataclass
class IndexReport:
    """All graph-level indices of one graph, with optional breakdowns."""

    n: int
    peri: int
    eperi: int
    espr: int
    mo: int
    mo_star: int
    nt: int
    irr: int
    breakdown: Optional[dict] = field(default=None, repr=False)

    def to_dict(self, indices: Optional[Sequence[str]] = None) -> dict:
        d = asdict(self)
        if d["breakdown"] is None:
            d.pop("breakdown")
        if indices is not None:
            keep = {"n", "breakdown", *indices}
            d = {k: v for k, v in d.items() if k in keep}
        return d

    def to_json(self, indices: Optional[Sequence[str]] = None) -> str:
        return json.dumps(self.to_dict(indices), sort_keys=True)


def index_report(g: Graph, breakdown: bool = False) -> IndexReport:
    cc = closeness_counts(g)
    report = IndexReport(
        n=g.n,
        peri=peri_graph(cc),
        eperi=eperi_graph(g, cc),
        espr=espr_graph(g, cc),
        mo=mostar_graph(g, cc),
        mo_star=total_mostar(cc),
        nt=nt_graph(cc),
        irr=irr_graph(g),
    )
    if breakdown:
        edges = g.edges()
        pairs = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)]
        report.breakdown = {
            "peri": [peri_vertex(cc, v) for v in range(g.n)],
            "edges": [list(e) for e in edges],
            "eperi": [eperi_edge(cc, e) for e in edges],
            "espr": [espr_edge(cc, e) for e in edges],
            "mo": [mostar_pair(cc, e) for e in edges],
            "irr": [irr_edge(g, e) for e in edges],
            "pairs": [list(p) for p in pairs],
            "nt": [nt_pair(cc, p) for p in pairs],
        }
    return report
