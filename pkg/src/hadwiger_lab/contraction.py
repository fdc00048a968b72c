"""Distance-matrix maintenance under a single edge contraction ``i => j``.

Two updaters live here. :func:`update_exact` is the corrected closed form and
must agree with recomputation. :func:`update_paper_literal` applies the
row-merge / delete / decrement rules exactly as written, including the
one-sided path test, so its disagreements with the exact updater can be
counted rather than argued about.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import IO, Iterable, Iterator

from .graph import Graph, GraphError, NotAdjacentError, contract_edge, emit_graph6
from .transparency import TransparencyMatrix, compute


@dataclass(frozen=True)
class ContractionStep:
    removed: int
    survivor: int
    replacements: int

    def __post_init__(self):
        if self.removed == self.survivor:
            raise ValueError("removed and survivor must differ")
        if self.replacements < 0:
            raise ValueError("replacements must be non-negative")

    def to_dict(self) -> dict:
        return {"removed": self.removed, "survivor": self.survivor, "replacements": self.replacements}


def _check_pair(t: TransparencyMatrix, i: int, j: int) -> tuple[int, int]:
    if i == j:
        raise GraphError(f"cannot contract vertex {i} onto itself")
    a, b = t.index(i), t.index(j)
    if t.rows[a][b] != 1:
        raise NotAdjacentError(f"pair ({i}, {j}) not available for contraction: entry is {t.rows[a][b]}")
    return a, b


def update_exact(t: TransparencyMatrix, g: Graph | None, i: int, j: int) -> TransparencyMatrix:
    """Distance matrix of ``g`` after merging ``i`` into ``j``.

    Distances to the merged vertex are the better of the two old rows; any
    other pair keeps its old distance unless routing through the merged vertex
    is shorter. ``g`` is only used to cross-check adjacency and may be None.
    """
    a, b = _check_pair(t, i, j)
    if g is not None and not g.has_edge(i, j):
        raise NotAdjacentError(f"pair ({i}, {j}) not available for contraction: matrix and graph disagree")
    rows = t.rows
    ri, rj = rows[a], rows[b]
    via = [x if x < y else y for x, y in zip(ri, rj)]
    keep = [k for k in range(len(rows)) if k != a]
    new_rows = []
    for m in keep:
        if m == b:
            new_rows.append([0 if n == b else via[n] for n in keep])
            continue
        rm = rows[m]
        vm = via[m]
        row = []
        for n in keep:
            if n == b:
                row.append(vm)
            else:
                d = rm[n]
                alt = vm + via[n]
                row.append(alt if alt < d else d)
        new_rows.append(row)
    return TransparencyMatrix([t.vertices[k] for k in keep], new_rows)


def uses_edge_condition(t: TransparencyMatrix, m: int, n: int, i: int, j: int) -> bool:
    """True when ``t[m, n] == t[m, i] + t[j, n] + 1``: some shortest m-n path runs m..i, j..n."""
    return t[m, n] == t[m, i] + t[j, n] + 1


def update_paper_literal(t: TransparencyMatrix, i: int, j: int) -> TransparencyMatrix:
    """Apply the five textual update rules for ``i => j`` verbatim.

    Row and column ``j`` become the entrywise minimum of rows ``i`` and ``j``;
    row and column ``i`` are deleted; every other surviving pair ``m < n`` (in
    row order) is decremented by one when the path test holds for the stated
    orientation ``t[m, n] == t[m, i] + t[j, n] + 1``, evaluated on the
    pre-contraction matrix. Everything else is copied.
    """
    a, b = _check_pair(t, i, j)
    rows = t.rows
    p = len(rows)
    new = [list(r) for r in rows]
    for k in range(p):
        if k != b:
            merged = min(rows[a][k], rows[b][k])
            new[b][k] = merged
            new[k][b] = merged
    for m in range(p):
        if m in (a, b):
            continue
        for n in range(m + 1, p):
            if n in (a, b):
                continue
            if rows[m][n] == rows[m][a] + rows[b][n] + 1:
                new[m][n] = rows[m][n] - 1
                new[n][m] = rows[n][m] - 1
    keep = [k for k in range(p) if k != a]
    return TransparencyMatrix([t.vertices[k] for k in keep], [[new[m][n] for n in keep] for m in keep])


def replacement_count(t: TransparencyMatrix, g: Graph | None, i: int, j: int) -> int:
    """Surviving label pairs whose entry drops from at least 2 to exactly 1 under ``i => j``."""
    after = update_exact(t, g, i, j)
    old = t.rows
    idx = [t.index(v) for v in after.vertices]
    count = 0
    for a, r in enumerate(after.rows):
        oa = old[idx[a]]
        for b in range(a + 1, len(r)):
            if r[b] == 1 and oa[idx[b]] >= 2:
                count += 1
    return count


def mismatch_positions(x: TransparencyMatrix, y: TransparencyMatrix) -> list[tuple[int, int]]:
    """Unordered label pairs where two same-shaped matrices differ."""
    if x.vertices != y.vertices:
        raise ValueError("matrices are indexed by different vertex sets")
    vs = x.vertices
    return [
        (vs[a], vs[b])
        for a in range(len(vs))
        for b in range(a, len(vs))
        if x.rows[a][b] != y.rows[a][b] or x.rows[b][a] != y.rows[b][a]
    ]


def exact_matches_recomputation(g: Graph, i: int, j: int, t: TransparencyMatrix | None = None) -> bool:
    t = compute(g) if t is None else t
    return update_exact(t, g, i, j) == compute(contract_edge(g, i, j))


@dataclass
class CensusResult:
    graphs: int = 0
    contractions: int = 0
    mismatched_contractions: int = 0
    mismatched_entries: int = 0

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def divergence_census(
    graphs: Iterable[Graph], out: IO[str] | None = None
) -> CensusResult:
    """Compare the literal updater with the exact one on every ordered contraction.

    One JSON line per diverging contraction is written to ``out``:
    ``{"graph6", "removed", "survivor", "mismatches": [[m, n, literal, exact], ...]}``.
    """
    result = CensusResult()
    for g in graphs:
        result.graphs += 1
        t = compute(g)
        g6 = None
        for u, v in g.sorted_edges():
            for i, j in ((u, v), (v, u)):
                result.contractions += 1
                lit = update_paper_literal(t, i, j)
                exact = update_exact(t, g, i, j)
                if lit == exact:
                    continue
                pos = mismatch_positions(lit, exact)
                result.mismatched_contractions += 1
                result.mismatched_entries += len(pos)
                if out is not None:
                    g6 = g6 or emit_graph6(g)
                    rec = {
                        "graph6": g6,
                        "removed": i,
                        "survivor": j,
                        "mismatches": [[m, n, _json_distance(lit[m, n]), _json_distance(exact[m, n])] for m, n in pos],
                    }
                    out.write(json.dumps(rec, separators=(",", ":")) + "\n")
    return result


def iter_census_records(lines: Iterable[str]) -> Iterator[dict]:
    for line in lines:
        if line.strip():
            yield json.loads(line)


def _json_distance(x):
    return x if isinstance(x, int) else None
