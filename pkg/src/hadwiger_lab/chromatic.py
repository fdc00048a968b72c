"""Exact colouring, minimal partite representations and the colour-class predicates."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .graph import Graph, GraphError, contract_edge
from .transparency import TransparencyMatrix, clique_number, compute

MAX_CHI_ORDER = 16
MAX_ENUMERATION_ORDER = 8


@dataclass(frozen=True)
class PartiteRepresentation:
    """Disjoint independent vertex sets covering the graph (colour classes)."""

    parts: tuple[frozenset[int], ...]

    def __init__(self, parts):
        object.__setattr__(self, "parts", tuple(frozenset(p) for p in parts))

    def __len__(self) -> int:
        return len(self.parts)

    def violations(self, g: Graph) -> list[str]:
        problems = []
        seen: set[int] = set()
        for k, part in enumerate(self.parts):
            if not part:
                problems.append(f"part {k} is empty")
            if part & seen:
                problems.append(f"part {k} overlaps an earlier part")
            seen |= part
        if seen != set(g.vertices):
            problems.append("parts do not cover exactly the vertex set")
            return problems
        t = compute(g)
        for k, part in enumerate(self.parts):
            for u, v in combinations(sorted(part), 2):
                if t[u, v] < 2:
                    problems.append(f"part {k} contains adjacent vertices {u}, {v}")
        return problems

    def is_valid(self, g: Graph) -> bool:
        return not self.violations(g)

    def to_lists(self) -> list[list[int]]:
        return [sorted(p) for p in self.parts]


@dataclass(frozen=True)
class SeparatorPair:
    first: int
    second: int
    witness: int


def _bitmasks(g: Graph) -> tuple[tuple[int, ...], list[int]]:
    vs = g.vertices
    idx = {v: k for k, v in enumerate(vs)}
    masks = []
    for v in vs:
        m = 0
        for w in g.neighbors(v):
            m |= 1 << idx[w]
        masks.append(m)
    return vs, masks


def _greedy_colouring(order: Sequence[int], masks: list[int]) -> list[int]:
    colour = [-1] * len(masks)
    for v in order:
        used = {colour[w] for w in range(len(masks)) if masks[v] >> w & 1}
        c = 0
        while c in used:
            c += 1
        colour[v] = c
    return colour


def _find_colouring(order: Sequence[int], masks: list[int], k: int) -> list[int] | None:
    """Backtracking k-colouring along a fixed vertex order; classes opened in order."""
    p = len(masks)
    colour = [-1] * p
    class_masks = [0] * k

    def place(pos: int, used: int) -> bool:
        if pos == p:
            return True
        v = order[pos]
        nb = masks[v]
        for c in range(min(used + 1, k)):
            if class_masks[c] & nb:
                continue
            colour[v] = c
            class_masks[c] |= 1 << v
            if place(pos + 1, max(used, c + 1)):
                return True
            class_masks[c] &= ~(1 << v)
        colour[v] = -1
        return False

    return colour if place(0, 0) else None


def _degree_order(masks: list[int]) -> list[int]:
    return sorted(range(len(masks)), key=lambda v: (-bin(masks[v]).count("1"), v))


def optimal_colouring(g: Graph) -> dict[int, int]:
    """A proper colouring with exactly chi(g) colours, as ``{vertex: colour}``."""
    if g.order > MAX_CHI_ORDER:
        raise ValueError(f"exact colouring limited to {MAX_CHI_ORDER} vertices, got {g.order}")
    vs, masks = _bitmasks(g)
    if not vs:
        return {}
    order = _degree_order(masks)
    upper = _greedy_colouring(order, masks)
    best = upper
    hi = max(upper) + 1
    lo = clique_number(compute(g))
    for k in range(lo, hi):
        found = _find_colouring(order, masks, k)
        if found is not None:
            best = found
            break
    return {vs[a]: c for a, c in enumerate(best)}


def chromatic_number(g: Graph) -> int:
    colouring = optimal_colouring(g)
    return max(colouring.values(), default=-1) + 1


def minimal_partite_representation(g: Graph) -> PartiteRepresentation:
    colouring = optimal_colouring(g)
    k = max(colouring.values(), default=-1) + 1
    parts = [sorted(v for v, c in colouring.items() if c == colour) for colour in range(k)]
    parts.sort()
    return PartiteRepresentation(parts)


def partite_representation_from_matrix(t: TransparencyMatrix) -> PartiteRepresentation:
    """Greedy cover by principal submatrices with every off-diagonal entry at least 2.

    Valid but not necessarily minimal.
    """
    parts: list[list[int]] = []
    for v in t.vertices:
        for part in parts:
            if all(t[v, u] >= 2 for u in part):
                part.append(v)
                break
        else:
            parts.append([v])
    return PartiteRepresentation(parts)


def all_minimal_representations(g: Graph, chi: int | None = None) -> Iterator[PartiteRepresentation]:
    """Every partition of the vertex set into exactly chi(g) independent sets."""
    if g.order > MAX_ENUMERATION_ORDER:
        raise ValueError(f"representation enumeration limited to {MAX_ENUMERATION_ORDER} vertices")
    if chi is None:
        chi = chromatic_number(g)
    vs, masks = _bitmasks(g)
    p = len(vs)
    classes: list[int] = []

    def extend(v: int) -> Iterator[PartiteRepresentation]:
        if len(classes) + (p - v) < chi:
            return
        if v == p:
            yield PartiteRepresentation(
                sorted(sorted(vs[a] for a in range(p) if cm >> a & 1) for cm in classes)
            )
            return
        bit = 1 << v
        for c in range(len(classes)):
            if not classes[c] & masks[v]:
                classes[c] |= bit
                yield from extend(v + 1)
                classes[c] &= ~bit
        if len(classes) < chi:
            classes.append(bit)
            yield from extend(v + 1)
            classes.pop()

    yield from extend(0)


def is_essentially_singleton(
    g: Graph, rep: PartiteRepresentation, part_index: int, target: int | None = None
) -> bool:
    """Can the part give all but one of its vertices to another part, keeping both independent?

    Every other part is tried unless ``target`` names a single receiving part.
    """
    part = rep.parts[part_index]
    if len(part) <= 1:
        raise ValueError(f"part {part_index} has {len(part)} element(s); the predicate needs more than one")
    if target == part_index:
        raise ValueError("target must differ from the donating part")
    for k, other in enumerate(rep.parts):
        if k == part_index or (target is not None and k != target):
            continue
        for e in part:
            moved = part - {e}
            if g.is_independent(other | moved):
                return True
    return False


def every_part_essentially_singleton(g: Graph, rep: PartiteRepresentation) -> bool:
    """Vacuously true when every part is a singleton."""
    return all(
        is_essentially_singleton(g, rep, k) for k, part in enumerate(rep.parts) if len(part) > 1
    )


def find_separators(g: Graph, rep: PartiteRepresentation) -> list[SeparatorPair]:
    """Same-part pairs with a common neighbour outside the part (smallest witness)."""
    found = []
    for part in rep.parts:
        for u, v in combinations(sorted(part), 2):
            common = (g.neighbors(u) & g.neighbors(v)) - part
            if common:
                found.append(SeparatorPair(u, v, min(common)))
    return found


def is_contraction_sensitive(g: Graph) -> bool:
    """Does contracting any single edge lower the chromatic number?"""
    if g.size == 0:
        raise GraphError("contraction sensitivity needs at least one edge")
    if not g.is_connected():
        raise GraphError("contraction sensitivity is defined for connected graphs")
    chi = chromatic_number(g)
    return all(chromatic_number(contract_edge(g, u, v)) < chi for u, v in g.sorted_edges())


@dataclass(frozen=True)
class Criticality:
    """Edge- and vertex-criticality reported separately; truthy only when both hold."""

    edge_critical: bool
    vertex_critical: bool

    def __bool__(self) -> bool:
        return self.edge_critical and self.vertex_critical


def is_k_critical(g: Graph) -> Criticality:
    if not g.is_connected():
        raise GraphError("criticality is checked on connected graphs")
    chi = chromatic_number(g)
    edge = all(chromatic_number(g.remove_edge(u, v)) < chi for u, v in g.sorted_edges())
    vertex = all(chromatic_number(g.remove_vertex(v)) < chi for v in g.vertices)
    return Criticality(edge, vertex)

