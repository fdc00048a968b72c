"""Greedy contraction toward a complete graph, and an exact complete-minor search."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from .contraction import ContractionStep, replacement_count, update_exact
from .graph import Graph, GraphError, contract_edge
from .transparency import TransparencyMatrix, clique_number, compute, is_complete

DEFAULT_MAX_ORACLE_ORDER = 9


@dataclass(frozen=True)
class ContractionTrace:
    initial_order: int
    steps: tuple[ContractionStep, ...]
    terminal_order: int
    branch_sets: tuple[frozenset[int], ...] = field(default=())

    @property
    def step_count(self) -> int:
        return len(self.steps)

    def certificate(self) -> MinorCertificate:
        """Original vertices merged into each terminal vertex."""
        return MinorCertificate(self.branch_sets)

    def to_dict(self) -> dict:
        return {
            "initial_order": self.initial_order,
            "steps": [s.to_dict() for s in self.steps],
            "step_count": self.step_count,
            "terminal_order": self.terminal_order,
            "branch_sets": [sorted(b) for b in self.branch_sets],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> ContractionTrace:
        return cls(
            initial_order=d["initial_order"],
            steps=tuple(ContractionStep(s["removed"], s["survivor"], s["replacements"]) for s in d["steps"]),
            terminal_order=d["terminal_order"],
            branch_sets=tuple(frozenset(b) for b in d.get("branch_sets", ())),
        )


def _choose_step(t: TransparencyMatrix, g: Graph) -> ContractionStep:
    # rank: most replacements, then widest unit-count gap, then removing the
    # poorer row, then the smallest (survivor, removed) pair
    best_key = None
    best = None
    units = {v: t.unit_count(v) for v in t.vertices}
    for u, v in g.sorted_edges():
        gap = abs(units[u] - units[v])
        for i, j in ((u, v), (v, u)):
            count = replacement_count(t, None, i, j)
            key = (-count, -gap, units[i] > units[j], j, i)
            if best_key is None or key < best_key:
                best_key = key
                best = ContractionStep(removed=i, survivor=j, replacements=count)
    return best


def greedy_contract(g: Graph) -> ContractionTrace:
    """Contract edges until the distance matrix has no entry above 1.

    Every step re-scores all ordered adjacent pairs and keeps the trace
    reproducible through a fixed tie-break.
    """
    if not g.is_connected():
        raise GraphError("greedy contraction needs a connected graph")
    if g.order == 0:
        raise GraphError("greedy contraction needs at least one vertex")
    t = compute(g)
    branch = {v: frozenset([v]) for v in g.vertices}
    steps = []
    while not is_complete(t):
        step = _choose_step(t, g)
        t = update_exact(t, g, step.removed, step.survivor)
        g = contract_edge(g, step.removed, step.survivor)
        branch[step.survivor] |= branch.pop(step.removed)
        steps.append(step)
    return ContractionTrace(
        initial_order=len(steps) + g.order,
        steps=tuple(steps),
        terminal_order=g.order,
        branch_sets=tuple(branch[v] for v in g.vertices),
    )


@dataclass(frozen=True)
class MinorCertificate:
    """Disjoint connected branch sets, pairwise joined by an edge: a K_t model."""

    branch_sets: tuple[frozenset[int], ...]

    def __init__(self, branch_sets):
        object.__setattr__(self, "branch_sets", tuple(frozenset(b) for b in branch_sets))

    @property
    def order(self) -> int:
        return len(self.branch_sets)

    def to_lists(self) -> list[list[int]]:
        return [sorted(b) for b in self.branch_sets]


def verify_certificate(g: Graph, c: MinorCertificate) -> bool:
    seen: set[int] = set()
    for b in c.branch_sets:
        if not b or b & seen or not all(g.has_vertex(v) for v in b):
            return False
        seen |= b
        if not g.induces_connected(b):
            return False
    for a, b in combinations(c.branch_sets, 2):
        if not any(g.neighbors(v) & b for v in a):
            return False
    return True


def _connected_within(start: int, allowed: int, masks: list[int]) -> int:
    """Vertices reachable from bitmask ``start`` inside bitmask ``allowed``."""
    seen = start & allowed
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= masks[low.bit_length() - 1]
            f ^= low
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def _is_connected_mask(block: int, masks: list[int]) -> bool:
    low = block & -block
    return _connected_within(low, block, masks) == block


def _find_model(masks: list[int], order: list[int], t: int) -> list[int] | None:
    """Depth-first search for t branch sets; each vertex joins a set, opens one, or is dropped."""
    p = len(masks)
    blocks: list[int] = []
    suffix = [0] * (p + 1)
    for pos in range(p - 1, -1, -1):
        suffix[pos] = suffix[pos + 1] | (1 << order[pos])

    def nbhd(block: int) -> int:
        out = 0
        b = block
        while b:
            low = b & -b
            out |= masks[low.bit_length() - 1]
            b ^= low
        return out

    def viable(rest: int) -> bool:
        # every block must still be able to become connected and touch every other block
        for b in blocks:
            if _connected_within(b & -b, b | rest, masks) & b != b:
                return False
        for x, y in combinations(blocks, 2):
            if not nbhd(x) & y and not (nbhd(x) & rest and nbhd(y) & rest):
                return False
        return True

    def extend(pos: int) -> bool:
        if len(blocks) + (p - pos) < t:
            return False
        rest = suffix[pos]
        if not viable(rest):
            return False
        if pos == p:
            return len(blocks) == t
        v = order[pos]
        bit = 1 << v
        for k in range(len(blocks)):
            blocks[k] |= bit
            if extend(pos + 1):
                return True
            blocks[k] &= ~bit
        if len(blocks) < t:
            blocks.append(bit)
            if extend(pos + 1):
                return True
            blocks.pop()
        return extend(pos + 1)

    return list(blocks) if extend(0) else None


def hadwiger_number(g: Graph, max_order: int = DEFAULT_MAX_ORACLE_ORDER) -> tuple[int, MinorCertificate]:
    """Largest t with a K_t minor, plus branch sets witnessing it.

    Exhaustive over partitions of vertex subsets; feasible up to about ten
    vertices. Tries t downward from the edge-count bound and stops at the
    first success, so the clique number is the floor.
    """
    if g.order > max_order:
        raise ValueError(f"minor search limited to {max_order} vertices, got {g.order}")
    vs = g.vertices
    if not vs:
        return 0, MinorCertificate(())
    idx = {v: k for k, v in enumerate(vs)}
    masks = [sum(1 << idx[w] for w in g.neighbors(v)) for v in vs]
    # breadth-first order keeps partial blocks close to connected
    order: list[int] = []
    placed = 0
    for s in range(len(vs)):
        if placed >> s & 1:
            continue
        queue = [s]
        placed |= 1 << s
        while queue:
            u = queue.pop(0)
            order.append(u)
            for w in sorted(range(len(vs)), key=lambda w: -bin(masks[w]).count("1")):
                if masks[u] >> w & 1 and not placed >> w & 1:
                    placed |= 1 << w
                    queue.append(w)
    upper = 1
    while (upper + 1) * upper // 2 <= g.size and upper < len(vs):
        upper += 1
    lower = clique_number(compute(g))
    for t in range(upper, lower, -1):
        model = _find_model(masks, order, t)
        if model is not None:
            cert = MinorCertificate(frozenset(vs[a] for a in range(len(vs)) if b >> a & 1) for b in model)
            break
    else:
        t = lower
        cert = _clique_certificate(g, t)
    if not verify_certificate(g, cert):
        raise AssertionError("minor search produced an invalid certificate")
    return t, cert


def _clique_certificate(g: Graph, size: int) -> MinorCertificate:
    for combo in combinations(g.vertices, size):
        if all(g.has_edge(u, v) for u, v in combinations(combo, 2)):
            return MinorCertificate([v] for v in combo)
    raise AssertionError(f"no clique of size {size}")
