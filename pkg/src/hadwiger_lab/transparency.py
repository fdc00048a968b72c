"""All-pairs hop-distance ("transparency") matrices and the queries read off them."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence, Union

from .graph import Graph, GraphError

MAX_SEARCH_ORDER = 20


class _Unreachable:
    """Distance between vertices in different components.

    Absorbs addition, loses every ``min`` against a finite distance and
    compares greater than any integer.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __add__(self, other):
        if isinstance(other, (int, _Unreachable)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __lt__(self, other):
        if isinstance(other, (int, _Unreachable)):
            return False
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, (int, _Unreachable)):
            return other is self
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, (int, _Unreachable)):
            return other is not self
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, (int, _Unreachable)):
            return True
        return NotImplemented

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("hadwiger_lab.UNREACHABLE")

    def __repr__(self):
        return "UNREACHABLE"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Unreachable, ())


UNREACHABLE = _Unreachable()
Distance = Union[int, _Unreachable]


class TransparencyMatrix:
    """Symmetric hop-distance matrix indexed by vertex label.

    Rows follow the sorted vertex labels. ``t[m, n]`` reads one entry by label.
    """

    __slots__ = ("vertices", "_index", "_rows")

    def __init__(self, vertices: Sequence[int], rows: Sequence[Sequence[Distance]]):
        self.vertices = tuple(vertices)
        self._index = {v: k for k, v in enumerate(self.vertices)}
        self._rows = tuple(tuple(r) for r in rows)
        p = len(self.vertices)
        if len(self._index) != p or len(self._rows) != p or any(len(r) != p for r in self._rows):
            raise ValueError("matrix shape does not match vertex list")

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def rows(self) -> tuple[tuple[Distance, ...], ...]:
        return self._rows

    def index(self, v: int) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v}") from None

    def __getitem__(self, key: tuple[int, int]) -> Distance:
        m, n = key
        return self._rows[self.index(m)][self.index(n)]

    def row(self, v: int) -> tuple[Distance, ...]:
        return self._rows[self.index(v)]

    def unit_count(self, v: int) -> int:
        return self.row(v).count(1)

    def unit_pairs(self) -> set[tuple[int, int]]:
        """Unordered label pairs with entry 1, i.e. the pairs open to contraction."""
        vs = self.vertices
        return {
            (vs[a], vs[b])
            for a, r in enumerate(self._rows)
            for b in range(a + 1, len(vs))
            if r[b] == 1
        }

    def is_connected(self) -> bool:
        return not any(UNREACHABLE in r for r in self._rows)

    def submatrix(self, vertices: Iterable[int]) -> TransparencyMatrix:
        vs = sorted(vertices)
        idx = [self.index(v) for v in vs]
        return TransparencyMatrix(vs, [[self._rows[a][b] for b in idx] for a in idx])

    def to_text(self) -> str:
        """Right-aligned grid, one row per line, ``inf`` for unreachable pairs."""
        cells = [[str(x) for x in r] for r in self._rows]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TransparencyMatrix):
            return NotImplemented
        return self.vertices == other.vertices and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.vertices, self._rows))

    def __repr__(self) -> str:
        return f"TransparencyMatrix(vertices={list(self.vertices)})\n{self.to_text()}"


def compute(g: Graph) -> TransparencyMatrix:
    """Breadth-first hop distances from every vertex."""
    vs = g.vertices
    idx = {v: k for k, v in enumerate(vs)}
    nbrs = [[idx[w] for w in g.neighbors(v)] for v in vs]
    p = len(vs)
    rows = []
    for s in range(p):
        dist: list[Distance] = [UNREACHABLE] * p
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = dist[u] + 1
            for w in nbrs[u]:
                if dist[w] is UNREACHABLE:
                    dist[w] = du
                    queue.append(w)
        rows.append(dist)
    return TransparencyMatrix(vs, rows)


def parse_text(text: str, vertices: Sequence[int] | None = None) -> TransparencyMatrix:
    """Inverse of :meth:`TransparencyMatrix.to_text`."""
    rows = [
        [UNREACHABLE if tok == "inf" else int(tok) for tok in line.split()]
        for line in text.strip().splitlines()
    ]
    if vertices is None:
        vertices = range(len(rows))
    return TransparencyMatrix(vertices, rows)


def threshold_to_adjacency(t: TransparencyMatrix) -> list[list[int]]:
    """Zero out every entry other than 1; what remains is the adjacency matrix."""
    return [[1 if x == 1 else 0 for x in r] for r in t.rows]


def is_complete(t: TransparencyMatrix) -> bool:
    return all(x == 1 for a, r in enumerate(t.rows) for b, x in enumerate(r) if a != b)


def degree_of(t: TransparencyMatrix, v: int) -> int:
    return t.unit_count(v)


def _max_clique_size(masks: list[int]) -> int:
    """Size of a maximum clique in the graph given by neighbour bitmasks.

    Branch and bound on candidate sets with a greedy-colouring upper bound.
    """
    best = 0

    def colour_bound(cand: int) -> int:
        colours = 0
        rest = cand
        while rest:
            colours += 1
            avail = rest
            while avail:
                low = avail & -avail
                avail &= ~masks[low.bit_length() - 1] & ~low
                rest &= ~low
        return colours

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + colour_bound(cand) <= best:
            return
        while cand:
            if size + bin(cand).count("1") <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            expand(size + 1, cand & masks[v])
            cand ^= low

    expand(0, (1 << len(masks)) - 1)
    return best


def _pair_masks(t: TransparencyMatrix, keep) -> list[int]:
    masks = []
    for a, r in enumerate(t.rows):
        m = 0
        for b, x in enumerate(r):
            if a != b and keep(x):
                m |= 1 << b
        masks.append(m)
    return masks


def _check_search_order(t: TransparencyMatrix) -> None:
    if t.order > MAX_SEARCH_ORDER:
        raise ValueError(f"exact search limited to {MAX_SEARCH_ORDER} vertices, got {t.order}")


def clique_number(t: TransparencyMatrix) -> int:
    """Largest principal submatrix whose off-diagonal entries are all 1."""
    _check_search_order(t)
    return _max_clique_size(_pair_masks(t, lambda x: x == 1))


def independence_number(t: TransparencyMatrix) -> int:
    """Largest principal submatrix whose off-diagonal entries all exceed 1.

    Unreachable entries count as exceeding 1.
    """
    _check_search_order(t)
    return _max_clique_size(_pair_masks(t, lambda x: x > 1))
