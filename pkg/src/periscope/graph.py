"""Core graph type, interchange formats, distances and structural helpers.

Vertices are the dense integers ``0..n-1``. Adjacency is kept as one Python
``int`` bitset per vertex, which keeps the small-graph enumeration code fast
and makes graphs hashable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from typing import Iterable, Optional, Sequence

import numpy as np

__all__ = [
    "Graph",
    "DistanceMatrix",
    "Bipartition",
    "GraphError",
    "DisconnectedGraphError",
    "from_edge_list",
    "from_adjacency_matrix",
    "parse_graph6",
    "to_graph6",
    "from_json",
    "to_json",
    "distance_matrix",
    "is_connected",
    "diameter",
    "degree_sequence",
    "bipartition",
    "cartesian_product",
    "relabel",
    "has_nontrivial_automorphism",
]


class GraphError(ValueError):
    """Malformed graph input (bad vertex, self-loop, bad encoding)."""


class DisconnectedGraphError(GraphError):
    """Raised where an operation is only defined for connected graphs."""


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    ``adj[u]`` is a bitset whose bit ``v`` is set iff ``{u, v}`` is an edge.
    Build instances through :func:`from_edge_list` and friends, which
    validate symmetry and the absence of loops.
    """

    n: int
    adj: tuple[int, ...]
    edge_count: int = field(compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        total = 0
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {u} has neighbours outside 0..{self.n - 1}")
            if row >> u & 1:
                raise GraphError(f"self-loop at vertex {u}")
            for v in _bits(row):
                if not self.adj[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
            total += row.bit_count()
        if total != 2 * self.edge_count:
            raise GraphError("edge_count does not match adjacency")

    @classmethod
    def from_rows(cls, adj: Sequence[int]) -> "Graph":
        adj = tuple(int(a) for a in adj)
        return cls(len(adj), adj, sum(a.bit_count() for a in adj) // 2)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.array([a.bit_count() for a in self.adj], dtype=np.int64)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(_bits(self.adj[u]))

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    @cached_property
    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int8)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph.from_rows([(full ^ a) & ~(1 << u) for u, a in enumerate(self.adj)])

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count}, g6={to_graph6(self)!r})"


# construction ---------------------------------------------------------------


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``n`` vertices; repeated pairs are collapsed.

    >>> from_edge_list(3, [(0, 1), (1, 2)]).edge_count
    2
    """
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    rows = [0] * n
    for pair in edges:
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph.from_rows(rows)


def from_adjacency_matrix(a: np.ndarray) -> Graph:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise GraphError("adjacency matrix must be square")
    n = a.shape[0]
    if np.any(np.diag(a)):
        raise GraphError("self-loop on the diagonal")
    if np.any((a != 0) != (a.T != 0)):
        raise GraphError("adjacency matrix is not symmetric")
    weights = 1 << np.arange(n, dtype=object) if n > 62 else (1 << np.arange(n, dtype=np.int64))
    rows = [int((a[u] != 0).astype(weights.dtype) @ weights) for u in range(n)]
    return Graph.from_rows(rows)


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Return the graph whose vertex ``i`` is ``order[i]`` of ``g``."""
    pos = {v: i for i, v in enumerate(order)}
    if sorted(pos) != list(range(g.n)):
        raise GraphError("order must be a permutation of the vertices")
    rows = [0] * g.n
    for i, v in enumerate(order):
        r = 0
        for w in _bits(g.adj[v]):
            r |= 1 << pos[w]
        rows[i] = r
    return Graph.from_rows(rows)


# graph6 -------------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in range(30, -1, -6))
    raise GraphError("graph too large for graph6")


def to_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 (upper triangle, column-major, 6 bits per char)."""
    bits = []
    for v in range(1, g.n):
        row = g.adj[v]
        bits.extend(row >> u & 1 for u in range(v))
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[i : i + 6])), 2)) for i in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (an optional ``>>graph6<<`` header is accepted)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise GraphError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise GraphError("graph6 characters must lie in 63..126")
    vals = [ord(c) - 63 for c in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] < 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    elif len(vals) >= 8 and vals[1] == 63:
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        pos = 8
    else:
        raise GraphError("malformed graph6 size header")
    nbits = n * (n - 1) // 2
    body = vals[pos:]
    if len(body) != (nbits + 5) // 6:
        raise GraphError(f"graph6 body has {len(body)} chars, expected {(nbits + 5) // 6}")
    stream = 0
    for x in body:
        stream = (stream << 6) | x
    pad = 6 * len(body) - nbits
    if stream & ((1 << pad) - 1):
        raise GraphError("nonzero padding bits in graph6 string")
    stream >>= pad
    rows = [0] * n
    k = nbits - 1
    for v in range(1, n):
        for u in range(v):
            if stream >> k & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k -= 1
    return Graph.from_rows(rows)


def to_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]})


def from_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
        return from_edge_list(int(obj["n"]), obj["edges"])
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise GraphError(f"bad JSON edge list: {exc}") from exc


# distances ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs hop distances; unreachable pairs hold ``UNREACHABLE``."""

    n: int
    dist: np.ndarray

    @property
    def UNREACHABLE(self) -> int:
        return self.n + 1

    @property
    def connected(self) -> bool:
        return bool((self.dist < self.UNREACHABLE).all())

    def __getitem__(self, key):
        return self.dist[key]


def distance_matrix(g: Graph) -> DistanceMatrix:
    """BFS distances between every pair of vertices.

    Unreachable pairs get the sentinel ``n + 1``, which exceeds every finite
    distance. The array is ``int16`` (``int32`` for huge graphs) and read-only.
    """
    n = g.n
    dtype = np.int16 if n < 32766 else np.int32
    d = np.full((n, n), n + 1, dtype=dtype)
    adj = g.adj
    if n <= 64:
        for s in range(n):
            row = d[s]
            seen = frontier = 1 << s
            k = 0
            while frontier:
                nxt = 0
                for u in _bits(frontier):
                    row[u] = k
                    nxt |= adj[u]
                frontier = nxt & ~seen
                seen |= frontier
                k += 1
    else:
        nbytes = (n + 7) // 8
        for s in range(n):
            row = d[s]
            seen = frontier = 1 << s
            k = 0
            while frontier:
                raw = np.frombuffer(frontier.to_bytes(nbytes, "little"), dtype=np.uint8)
                hit = np.flatnonzero(np.unpackbits(raw, bitorder="little")[:n])
                row[hit] = k
                nxt = 0
                for u in hit.tolist():
                    nxt |= adj[u]
                frontier = nxt & ~seen
                seen |= frontier
                k += 1
    d.setflags(write=False)
    return DistanceMatrix(n, d)


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen, frontier = 1, 1
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= g.adj[u]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def diameter(g: Graph, dm: Optional[DistanceMatrix] = None) -> int:
    """Largest finite distance; only defined for connected graphs."""
    if not is_connected(g):
        raise DisconnectedGraphError("diameter is undefined for a disconnected graph")
    if g.n <= 1:
        return 0
    dm = dm or distance_matrix(g)
    return int(dm.dist.max())


def degree_sequence(g: Graph) -> list[int]:
    """Degrees sorted in non-increasing order."""
    return sorted((a.bit_count() for a in g.adj), reverse=True)


# bipartite structure --------------------------------------------------------


@dataclass(frozen=True)
class Bipartition:
    side_a: int
    side_b: int

    def sides(self) -> tuple[list[int], list[int]]:
        return list(_bits(self.side_a)), list(_bits(self.side_b))


def bipartition(g: Graph) -> Optional[Bipartition]:
    """2-colour ``g`` or return ``None`` when it has an odd cycle.

    Each component's lowest vertex goes to ``side_a``.
    """
    colour = [-1] * g.n
    a = b = 0
    for root in range(g.n):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in _bits(g.adj[u]):
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    stack.append(w)
                elif colour[w] == colour[u]:
                    return None
    for u, c in enumerate(colour):
        if c == 0:
            a |= 1 << u
        else:
            b |= 1 << u
    return Bipartition(a, b)


# products -------------------------------------------------------------------


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex ``(i, j)`` is numbered ``i * h.n + j``."""
    m = h.n
    edges = []
    for i in range(g.n):
        for j, jj in h.edges():
            edges.append((i * m + j, i * m + jj))
    for i, ii in g.edges():
        for j in range(m):
            edges.append((i * m + j, ii * m + j))
    return from_edge_list(g.n * m, edges)


# automorphisms --------------------------------------------------------------


def _vertex_profiles(g: Graph) -> list[tuple]:
    d = distance_matrix(g).dist
    profiles = []
    for u in range(g.n):
        counts = np.bincount(d[u], minlength=g.n + 2)
        nbr_degrees = sorted(g.degree(w) for w in _bits(g.adj[u]))
        profiles.append((g.degree(u), tuple(counts.tolist()), tuple(nbr_degrees)))
    return profiles


def has_nontrivial_automorphism(g: Graph) -> bool:
    """Whether some non-identity permutation of the vertices preserves adjacency.

    Vertices are first coloured by degree, distance multiset and neighbour
    degrees; the backtracking search then only maps vertices of equal
    colour. Meant for small graphs (roughly ``n <= 10``).
    """
    n = g.n
    if n < 2:
        return False
    # twins give a transposition automorphism directly
    for u in range(n):
        for v in range(u + 1, n):
            if g.adj[u] & ~(1 << v) == g.adj[v] & ~(1 << u):
                return True
    prof = _vertex_profiles(g)
    classes: dict[tuple, list[int]] = {}
    for u, p in enumerate(prof):
        classes.setdefault(p, []).append(u)
    if all(len(c) == 1 for c in classes.values()):
        return False
    # map the most constrained vertices first
    order = sorted(range(n), key=lambda u: (len(classes[prof[u]]), -g.degree(u), u))
    return _find_automorphism(g, order, prof, classes, nontrivial_only=True) is not None


def _find_automorphism(g, order, prof, classes, nontrivial_only):
    n = g.n
    image = [-1] * n
    used = [False] * n

    def extend(k: int, moved: bool):
        if k == n:
            return list(image) if (moved or not nontrivial_only) else None
        u = order[k]
        for v in classes[prof[u]]:
            if used[v]:
                continue
            ok = True
            for j in range(k):
                w = order[j]
                if (g.adj[u] >> w & 1) != (g.adj[v] >> image[w] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[u] = v
            used[v] = True
            found = extend(k + 1, moved or v != u)
            if found is not None:
                return found
            used[v] = False
            image[u] = -1
        return None

    return extend(0, False)


def automorphisms_bruteforce(g: Graph) -> list[tuple[int, ...]]:
    """Every automorphism by enumerating all ``n!`` permutations (tiny n only)."""
    es = set(g.edges())
    out = []
    for p in permutations(range(g.n)):
        if all(tuple(sorted((p[u], p[v]))) in es for u, v in es):
            out.append(p)
    return out
