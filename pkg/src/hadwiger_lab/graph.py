"""Labeled simple undirected graphs, graph6 I/O, generators and edge contraction.

Vertex labels are small non-negative integers. They stay fixed for the life of
a graph and across contractions; only graph6 serialization reindexes them
(sorted label order maps onto 0..p-1).
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Callable, Iterable, Iterator, Mapping

GRAPH6_HEADER = ">>graph6<<"
MAX_GRAPH6_ORDER = 62
MAX_ENUMERATION_ORDER = 7


class GraphError(ValueError):
    """Raised for structurally invalid graphs or illegal graph operations."""


class NotAdjacentError(GraphError):
    """Raised when a contraction is requested for a pair that is not an edge."""


class Graph6Error(ValueError):
    """Malformed graph6 input. ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class Graph:
    """Immutable labeled simple graph.

    >>> g = Graph([0, 1, 2], [(0, 1), (1, 2)])
    >>> g.order, g.size
    (3, 2)
    """

    __slots__ = ("_adj", "_vertices", "_edges")

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]] = ()):
        adj: dict[int, set[int]] = {}
        for v in vertices:
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise GraphError(f"vertex labels must be non-negative integers, got {v!r}")
            if v in adj:
                raise GraphError(f"duplicate vertex {v}")
            adj[v] = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if u not in adj or v not in adj:
                raise GraphError(f"edge ({u}, {v}) has an endpoint that is not a vertex")
            if v in adj[u]:
                raise GraphError(f"parallel edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        self._vertices = tuple(sorted(adj))
        self._adj = {v: frozenset(adj[v]) for v in self._vertices}
        self._edges = None

    @classmethod
    def _from_adj(cls, adj: Mapping[int, frozenset[int]]) -> Graph:
        # trusted constructor: adj must already be symmetric and loop-free
        g = cls.__new__(cls)
        g._vertices = tuple(sorted(adj))
        g._adj = {v: adj[v] for v in g._vertices}
        g._edges = None
        return g

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def order(self) -> int:
        return len(self._vertices)

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``."""
        if self._edges is None:
            self._edges = frozenset((u, v) for u in self._vertices for v in self._adj[u] if u < v)
        return self._edges

    @property
    def size(self) -> int:
        return sum(len(n) for n in self._adj.values()) // 2

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v}") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def max_degree(self) -> int:
        return max((len(n) for n in self._adj.values()), default=0)

    def is_connected(self) -> bool:
        if not self._vertices:
            return True
        return len(self.component(self._vertices[0])) == len(self._vertices)

    def component(self, v: int) -> set[int]:
        seen = {v}
        stack = [v]
        while stack:
            for w in self._adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    def is_complete(self) -> bool:
        p = len(self._vertices)
        return all(len(n) == p - 1 for n in self._adj.values())

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = set(vertices)
        return all(not (self._adj[v] & vs) for v in vs)

    def induces_connected(self, vertices: Iterable[int]) -> bool:
        vs = set(vertices)
        if not vs:
            return False
        start = next(iter(vs))
        seen = {start}
        stack = [start]
        while stack:
            for w in self._adj[stack.pop()] & vs:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(vs)

    def subgraph(self, vertices: Iterable[int]) -> Graph:
        vs = frozenset(vertices)
        missing = vs - self._adj.keys()
        if missing:
            raise GraphError(f"unknown vertices {sorted(missing)}")
        return Graph._from_adj({v: self._adj[v] & vs for v in vs})

    def remove_vertex(self, v: int) -> Graph:
        if v not in self._adj:
            raise GraphError(f"unknown vertex {v}")
        return self.subgraph(w for w in self._vertices if w != v)

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise NotAdjacentError(f"({u}, {v}) is not an edge")
        adj = dict(self._adj)
        adj[u] = adj[u] - {v}
        adj[v] = adj[v] - {u}
        return Graph._from_adj(adj)

    def contract(self, i: int, j: int) -> Graph:
        """Contract edge ``(i, j)`` by merging ``i`` into ``j``; ``i`` disappears."""
        return contract_edge(self, i, j)

    def relabel(self, mapping: Mapping[int, int] | Callable[[int], int]) -> Graph:
        f = mapping if callable(mapping) else mapping.__getitem__
        new = {v: f(v) for v in self._vertices}
        if len(set(new.values())) != len(new):
            raise GraphError("relabeling is not injective")
        return Graph(new.values(), ((new[u], new[v]) for u, v in self.edges))

    def adjacency_matrix(self) -> list[list[int]]:
        idx = {v: k for k, v in enumerate(self._vertices)}
        p = len(self._vertices)
        a = [[0] * p for _ in range(p)]
        for u, v in self.edges:
            a[idx[u]][idx[v]] = a[idx[v]][idx[u]] = 1
        return a

    def to_graph6(self) -> str:
        return emit_graph6(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._vertices, self.edges))

    def __repr__(self) -> str:
        return f"Graph(vertices={list(self._vertices)}, edges={self.sorted_edges()})"


def contract_edge(g: Graph, i: int, j: int) -> Graph:
    """Return ``g`` with ``i`` merged into its neighbour ``j``.

    The survivor ``j`` receives ``N(i) | N(j) - {i, j}``; parallel edges collapse
    and the loop is dropped, so the size falls by one plus the number of common
    neighbours of ``i`` and ``j``.
    """
    if i == j:
        raise GraphError(f"cannot contract vertex {i} onto itself")
    if not g.has_vertex(i) or not g.has_vertex(j):
        raise GraphError(f"unknown vertex in pair ({i}, {j})")
    adj = g._adj
    if j not in adj[i]:
        raise NotAdjacentError(f"pair ({i}, {j}) not available for contraction: not adjacent")
    merged = (adj[i] | adj[j]) - {i, j}
    new: dict[int, frozenset[int]] = {}
    for v, nb in adj.items():
        if v == i:
            continue
        if v == j:
            new[v] = merged
        elif i in nb:
            new[v] = (nb - {i}) | {j}
        else:
            new[v] = nb
    return Graph._from_adj(new)


# -- graph6 -----------------------------------------------------------------


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line (short form, up to 62 vertices).

    An optional ``>>graph6<<`` header and trailing newline are accepted.
    """
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    base = 0
    if text.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
    s = text[base:].rstrip("\r\n")
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for k, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside the graph6 range", base + k)
    n = ord(s[0]) - 63
    if n == 63:
        raise Graph6Error(f"long-form order prefix unsupported (max order {MAX_GRAPH6_ORDER})", base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated: order {n} needs {nbytes} data bytes, got {len(body)}", base + len(s))
    if len(body) > nbytes:
        raise Graph6Error("trailing characters after graph data", base + 1 + nbytes)

    bits = []
    for ch in body:
        x = ord(ch) - 63
        bits.extend((x >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("non-zero padding bits", base + nbytes)
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                edges.append((u, v))
            k += 1
    return Graph(range(n), edges)


def emit_graph6(g: Graph) -> str:
    """Canonical short-form graph6 line for ``g`` (no header, no newline)."""
    n = g.order
    if n > MAX_GRAPH6_ORDER:
        raise GraphError(f"graph6 short form supports at most {MAX_GRAPH6_ORDER} vertices, got {n}")
    vs = g.vertices
    bits = [1 if g.has_edge(vs[u], vs[v]) else 0 for v in range(1, n) for u in range(v)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k : k + 6]:
            x = (x << 1) | b
        out.append(chr(x + 63))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a stream of graph6 lines, skipping blank ones."""
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


# -- generators -------------------------------------------------------------


def cycle(n: int) -> Graph:
    if n < 1:
        raise GraphError("cycle needs n >= 1")
    if n < 3:
        # C1 and C2 degenerate to K1 and K2 in a simple graph
        return complete(n)
    return Graph(range(n), ((k, (k + 1) % n) for k in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(range(n), ((k, k + 1) for k in range(n - 1)))


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph(range(n), combinations(range(n), 2))


def complete_minus_edge(n: int) -> Graph:
    """K_n without the edge between its two highest-labelled vertices."""
    if n < 2:
        raise GraphError("complete_minus_edge needs n >= 2")
    return Graph(range(n), (e for e in combinations(range(n), 2) if e != (n - 2, n - 1)))


def star(leaves: int) -> Graph:
    return Graph(range(leaves + 1), ((0, k) for k in range(1, leaves + 1)))


def complete_multipartite(*sizes: int) -> Graph:
    parts = []
    start = 0
    for s in sizes:
        parts.append(range(start, start + s))
        start += s
    edges = [(u, v) for a, b in combinations(parts, 2) for u in a for v in b]
    return Graph(range(start), edges)


def petersen() -> Graph:
    outer = [(k, (k + 1) % 5) for k in range(5)]
    spokes = [(k, k + 5) for k in range(5)]
    inner = [(5 + k, 5 + (k + 2) % 5) for k in range(5)]
    return Graph(range(10), outer + spokes + inner)


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), reproducible from ``seed``."""
    if n < 1:
        raise GraphError("gnp needs n >= 1")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    return Graph(range(n), (e for e in combinations(range(n), 2) if rng.random() < p))


def random_connected(n: int, p: float, seed: int) -> Graph:
    """First connected draw from G(n, p) using seeds derived from ``seed``."""
    rng = random.Random(seed)
    for _ in range(10_000):
        g = gnp(n, p, rng.getrandbits(63))
        if g.is_connected():
            return g
    raise GraphError(f"no connected G({n}, {p}) found; raise p")


def all_labeled_connected(max_n: int) -> Iterator[Graph]:
    """Every connected labeled graph on 1..max_n vertices, each exactly once.

    Order: by vertex count, then by the integer whose bits select edges from
    the column-major upper triangle (the graph6 bit order).
    """
    if max_n < 1:
        raise GraphError("max_n must be >= 1")
    if max_n > MAX_ENUMERATION_ORDER:
        raise GraphError(f"enumeration bound exceeded: max_n <= {MAX_ENUMERATION_ORDER}")
    for n in range(1, max_n + 1):
        pairs = [(u, v) for v in range(1, n) for u in range(v)]
        full = (1 << n) - 1
        for mask in range(1 << len(pairs)):
            nbr = [0] * n
            for k, (u, v) in enumerate(pairs):
                if mask >> k & 1:
                    nbr[u] |= 1 << v
                    nbr[v] |= 1 << u
            seen = 1
            frontier = 1
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    low = f & -f
                    nxt |= nbr[low.bit_length() - 1]
                    f ^= low
                frontier = nxt & ~seen
                seen |= nxt
            if seen == full:
                adj = {
                    v: frozenset(w for w in range(n) if nbr[v] >> w & 1) for v in range(n)
                }
                yield Graph._from_adj(adj)


def from_spec(spec: str, seed: int | None = None) -> Graph | Iterator[Graph]:
    """Build graphs from a compact generator spec.

    Accepted forms: ``cycle:N``, ``path:N``, ``complete:N``,
    ``complete_minus_edge:N``, ``star:L``, ``petersen``, ``gnp:N:P[:SEED]``
    and ``connected:MAX_N`` (a stream of every connected labeled graph).
    """
    name, *args = spec.strip().split(":")
    try:
        if name == "gnp":
            if len(args) not in (2, 3):
                raise GraphError("gnp spec is gnp:N:P[:SEED]")
            if len(args) == 3:
                if seed is not None and seed != int(args[2]):
                    raise GraphError("conflicting seeds in spec and --seed")
                seed = int(args[2])
            if seed is None:
                raise GraphError("gnp requires a seed")
            return gnp(int(args[0]), float(args[1]), seed)
        if seed is not None:
            raise GraphError(f"a seed only applies to gnp, not {name!r}")
        simple = {
            "cycle": cycle,
            "path": path,
            "complete": complete,
            "complete_minus_edge": complete_minus_edge,
            "star": star,
        }
        if name in simple:
            (n,) = args
            return simple[name](int(n))
        if name == "petersen" and not args:
            return petersen()
        if name == "connected":
            (n,) = args
            return all_labeled_connected(int(n))
    except (TypeError, ValueError) as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"bad generator spec {spec!r}: {exc}") from None
    raise GraphError(f"unknown generator spec {spec!r}")
