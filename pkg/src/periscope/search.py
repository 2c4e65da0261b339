"""Exhaustive search over small graph classes.

Connected graphs are generated by vertex augmentation: every connected graph
on ``n`` vertices has a vertex whose removal leaves it connected, so gluing a
new vertex onto each connected ``(n-1)``-graph in every possible way and
keeping one graph per canonical code reaches every class exactly once.
Free trees are grown leaf by leaf and deduplicated by their centre-rooted
AHU code.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Callable, Iterator, Optional, Sequence

from . import indices as ix
from .canon import canonical_code, canonical_form, tree_code, tree_from_code
from .graph import Graph, bipartition, diameter, parse_graph6, to_graph6

__all__ = [
    "SearchError",
    "SearchResult",
    "MAX_GRAPH_N",
    "MAX_TREE_N",
    "enumerate_connected_graphs",
    "enumerate_trees",
    "enumerate_class",
    "maximize_index",
    "find_nt_balanced",
]

MAX_GRAPH_N = 9
MAX_TREE_N = 12
SLOW_GRAPH_N = 9


class SearchError(ValueError):
    pass


# enumeration ------------------------------------------------------------------


@lru_cache(maxsize=None)
def _connected_level(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph.from_rows([0]),)
    seen: dict[int, Graph] = {}
    new_bit = 1 << (n - 1)
    for parent in _connected_level(n - 1):
        for subset in range(1, 1 << (n - 1)):
            rows = [a | new_bit if subset >> u & 1 else a for u, a in enumerate(parent.adj)]
            rows.append(subset)
            child = Graph(n, tuple(rows), parent.edge_count + subset.bit_count())
            code = canonical_code(child)
            if code not in seen:
                seen[code] = child
    # emit canonical forms in a fixed order
    return tuple(canonical_form(seen[c]) for c in sorted(seen))


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """One canonical representative per class of connected ``n``-vertex graphs.

    ``n`` must lie in ``1..9``; ``n = 9`` (261080 classes) takes a long time.
    Levels are cached for the life of the process.
    """
    if not 1 <= n <= MAX_GRAPH_N:
        raise SearchError(f"connected-graph enumeration supports 1 <= n <= {MAX_GRAPH_N}")
    yield from _connected_level(n)


@lru_cache(maxsize=None)
def _tree_level(n: int) -> tuple[str, ...]:
    if n == 1:
        return ("()",)
    codes = set()
    for code in _tree_level(n - 1):
        t = tree_from_code(code)
        for u in range(t.n):
            rows = list(t.adj)
            rows[u] |= 1 << t.n
            rows.append(1 << u)
            codes.add(tree_code(Graph.from_rows(rows)))
    return tuple(sorted(codes))


def enumerate_trees(n: int) -> Iterator[Graph]:
    """One representative per free tree on ``n`` vertices (``1 <= n <= 12``)."""
    if not 1 <= n <= MAX_TREE_N:
        raise SearchError(f"tree enumeration supports 1 <= n <= {MAX_TREE_N}")
    for code in _tree_level(n):
        yield tree_from_code(code)


def _parse_class(cls: str) -> tuple[str, Optional[int]]:
    if cls in ("graphs", "connected_graphs"):
        return "connected_graphs", None
    if cls in ("trees", "bipartite"):
        return cls, None
    if cls.startswith("diameter:") or cls.startswith("fixed_diameter:"):
        return "fixed_diameter", int(cls.split(":", 1)[1])
    raise SearchError(f"unknown graph class {cls!r}")


def enumerate_class(n: int, cls: str) -> Iterator[Graph]:
    """Graphs of a class: ``trees``, ``graphs``, ``bipartite`` or ``diameter:<d>``.

    All classes besides ``trees`` are filtered from the connected graphs.
    """
    kind, d = _parse_class(cls)
    if kind == "trees":
        yield from enumerate_trees(n)
        return
    for g in enumerate_connected_graphs(n):
        if kind == "bipartite" and bipartition(g) is None:
            continue
        if kind == "fixed_diameter" and diameter(g) != d:
            continue
        yield g


# maximization -------------------------------------------------------------------


@dataclass
class SearchResult:
    """Maximum of one index over one class at fixed ``n``."""

    n: int
    cls: str
    index: str
    max_value: Optional[int]
    witnesses: list[str] = field(default_factory=list)
    enumerated_count: int = 0

    def merge(self, other: "SearchResult") -> "SearchResult":
        """Max-reduce two shard results; associative and commutative."""
        if other.max_value is None or (
            self.max_value is not None and self.max_value > other.max_value
        ):
            best, wit = self.max_value, self.witnesses
        elif self.max_value is None or other.max_value > self.max_value:
            best, wit = other.max_value, other.witnesses
        else:
            best, wit = self.max_value, self.witnesses + other.witnesses
        return SearchResult(
            self.n,
            self.cls,
            self.index,
            best,
            sorted(set(wit)),
            self.enumerated_count + other.enumerated_count,
        )

    def to_dict(self) -> dict:
        d = asdict(self)
        d["class"] = d.pop("cls")
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def _scan(n: int, cls: str, index: str, graphs: Sequence[Graph]) -> SearchResult:
    best: Optional[int] = None
    wit: list[Graph] = []
    for g in graphs:
        val = ix.compute_index(g, index)
        if best is None or val > best:
            best, wit = val, [g]
        elif val == best:
            wit.append(g)
    g6 = sorted({to_graph6(canonical_form(w)) for w in wit})
    return SearchResult(n, cls, index, best, g6, len(graphs))


def _scan_g6(args) -> SearchResult:
    n, cls, index, g6s = args
    return _scan(n, cls, index, [parse_graph6(s) for s in g6s])


def maximize_index(
    n: int, cls: str, index: str, workers: int = 1, shards: int = 16
) -> SearchResult:
    """Exact maximum of ``index`` over the class, with every witness class.

    Parameters
    ----------
    n : int
        Vertex count.
    cls : str
        ``"trees"``, ``"graphs"`` (connected), ``"bipartite"`` or ``"diameter:<d>"``.
    index : str
        One of :data:`periscope.indices.INDEX_NAMES`.
    workers : int
        Processes to use. The result does not depend on it.

    Returns
    -------
    SearchResult
        Witnesses are canonical graph6 strings in sorted order.
    """
    if index not in ix.INDEX_NAMES:
        raise SearchError(f"unknown index {index!r}")
    if workers < 1:
        raise SearchError("workers must be >= 1")
    graphs = list(enumerate_class(n, cls))
    if workers == 1 or len(graphs) < 2 * shards:
        return _scan(n, cls, index, graphs)
    step = -(-len(graphs) // shards)
    jobs = [
        (n, cls, index, [to_graph6(g) for g in graphs[i : i + step]])
        for i in range(0, len(graphs), step)
    ]
    result = SearchResult(n, cls, index, None)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_scan_g6, jobs):
            result = result.merge(part)
    return result


def find_nt_balanced(
    n: int,
    require_not_ultra: bool = False,
    progress: Optional[Callable[[Graph], None]] = None,
) -> list[Graph]:
    """Connected ``n``-vertex graphs with Trinajstic index 0.

    With ``require_not_ultra`` only those that fail the ultra-balance test are
    kept, i.e. counterexamples to "NT-balanced implies ultra NT-balanced".
    """
    out = []
    for g in enumerate_connected_graphs(n):
        cc = ix.closeness_counts(g)
        if not ix.is_nt_balanced(cc):
            continue
        if require_not_ultra and ix.is_ultra_nt_balanced(cc):
            continue
        if progress is not None:
            progress(g)
        out.append(g)
    return out
