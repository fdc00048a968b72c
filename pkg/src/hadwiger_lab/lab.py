"""Corpus sweeps auditing chi <= h, the greedy contraction and the colour-class characterisation.

Records are plain dataclasses serialised to JSON lines; a CSV summary
aggregates them per graph order.
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .chromatic import (
    MAX_CHI_ORDER,
    MAX_ENUMERATION_ORDER,
    all_minimal_representations,
    chromatic_number,
    every_part_essentially_singleton,
    is_contraction_sensitive,
)
from .graph import Graph, emit_graph6
from .minors import DEFAULT_MAX_ORACLE_ORDER, greedy_contract, hadwiger_number, verify_certificate

SCHEMA_VERSION = 1

GREEDY_BELOW_CHI = "GREEDY_BELOW_CHI"
GREEDY_BELOW_HADWIGER = "GREEDY_BELOW_HADWIGER"
STEPCOUNT_EXCEEDS_L = "STEPCOUNT_EXCEEDS_L"
STEPCOUNT_EXCEEDS_K = "STEPCOUNT_EXCEEDS_K"
CHI_EXCEEDS_HADWIGER = "CHI_EXCEEDS_HADWIGER"
HADWIGER_SKIPPED = "HADWIGER_SKIPPED"
THM31_SKIPPED = "THM31_SKIPPED"
DISCONNECTED = "DISCONNECTED"
SKIPPED = "SKIPPED"

CSV_COLUMNS = ["order", "graphs", "greedy_success", "greedy_fail", "skipped", "max_steps"]
JSONL_NAME = "audit.jsonl"
CSV_NAME = "summary.csv"


class AuditInvariantError(AssertionError):
    """A hard invariant failed; this points at an implementation bug, not a finding."""


@dataclass(frozen=True)
class Budget:
    max_chi: int = MAX_CHI_ORDER
    max_oracle: int = DEFAULT_MAX_ORACLE_ORDER
    max_thm31: int = MAX_ENUMERATION_ORDER

    def __post_init__(self):
        if min(self.max_chi, self.max_oracle, self.max_thm31) < 1:
            raise ValueError("budgets must be positive")


@dataclass
class GraphAuditRecord:
    graph6: str
    order: int
    size: int
    chi: int | None = None
    hadwiger: int | None = None
    greedy_terminal: int | None = None
    greedy_steps: int | None = None
    contraction_sensitive: bool | None = None
    thm31: list[bool] | None = None
    flags: list[str] = field(default_factory=list)

    @property
    def skipped(self) -> bool:
        return SKIPPED in self.flags

    def to_dict(self) -> dict:
        d = {
            "schema_version": SCHEMA_VERSION,
            "graph6": self.graph6,
            "order": self.order,
            "size": self.size,
            "chi": self.chi,
        }
        if self.hadwiger is not None:
            d["hadwiger"] = self.hadwiger
        d["greedy_terminal"] = self.greedy_terminal
        d["greedy_steps"] = self.greedy_steps
        if self.contraction_sensitive is not None:
            d["contraction_sensitive"] = self.contraction_sensitive
        if self.thm31 is not None:
            d["thm31"] = self.thm31
        d["flags"] = list(self.flags)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> GraphAuditRecord:
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {d.get('schema_version')!r}")
        return cls(
            graph6=d["graph6"],
            order=d["order"],
            size=d["size"],
            chi=d["chi"],
            hadwiger=d.get("hadwiger"),
            greedy_terminal=d["greedy_terminal"],
            greedy_steps=d["greedy_steps"],
            contraction_sensitive=d.get("contraction_sensitive"),
            thm31=d.get("thm31"),
            flags=list(d["flags"]),
        )


def audit_graph(g: Graph, budget: Budget = Budget()) -> GraphAuditRecord:
    rec = GraphAuditRecord(graph6=emit_graph6(g), order=g.order, size=g.size)
    if g.order == 0 or not g.is_connected():
        rec.flags += [DISCONNECTED, SKIPPED]
        return rec
    if g.order > budget.max_chi:
        rec.flags.append(SKIPPED)
        return rec

    rec.chi = chromatic_number(g)
    trace = greedy_contract(g)
    rec.greedy_terminal = trace.terminal_order
    rec.greedy_steps = trace.step_count
    if rec.greedy_steps != rec.order - rec.greedy_terminal:
        raise AuditInvariantError(f"{rec.graph6}: step count does not match order drop")
    if not verify_certificate(g, trace.certificate()):
        raise AuditInvariantError(f"{rec.graph6}: greedy branch sets are not a minor model")

    if g.size > 0:
        rec.contraction_sensitive = is_contraction_sensitive(g)
        if g.order <= budget.max_thm31:
            rec.thm31 = [
                every_part_essentially_singleton(g, rep)
                for rep in all_minimal_representations(g, rec.chi)
            ]
        else:
            rec.flags.append(THM31_SKIPPED)

    if g.order <= budget.max_oracle:
        rec.hadwiger, _ = hadwiger_number(g, max_order=budget.max_oracle)
        if rec.greedy_terminal > rec.hadwiger:
            raise AuditInvariantError(f"{rec.graph6}: greedy terminal exceeds the exact Hadwiger number")
        if rec.greedy_terminal < rec.hadwiger:
            rec.flags.append(GREEDY_BELOW_HADWIGER)
        if rec.chi > rec.hadwiger:
            rec.flags.append(CHI_EXCEEDS_HADWIGER)
    else:
        rec.flags.append(HADWIGER_SKIPPED)

    if rec.greedy_terminal < rec.chi:
        rec.flags.append(GREEDY_BELOW_CHI)
    if rec.greedy_steps > rec.order - rec.chi:
        rec.flags.append(STEPCOUNT_EXCEEDS_L)
    if rec.greedy_steps > rec.chi:
        rec.flags.append(STEPCOUNT_EXCEEDS_K)
    return rec


def _audit_with_budget(args):
    return audit_graph(*args)


def sweep(corpus: Iterable[Graph], budget: Budget = Budget(), workers: int = 1) -> Iterator[GraphAuditRecord]:
    """One record per input graph, in input order."""
    if workers <= 1:
        for g in corpus:
            yield audit_graph(g, budget)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_audit_with_budget, ((g, budget) for g in corpus), chunksize=64)


def summarize(records: Iterable[GraphAuditRecord]) -> list[dict]:
    """Per-order aggregates; greedy success means the terminal clique reaches chi."""
    rows: dict[int, dict] = {}
    for r in records:
        row = rows.setdefault(
            r.order, {"order": r.order, "graphs": 0, "greedy_success": 0, "greedy_fail": 0, "skipped": 0, "max_steps": 0}
        )
        row["graphs"] += 1
        if r.skipped:
            row["skipped"] += 1
            continue
        if r.greedy_terminal >= r.chi:
            row["greedy_success"] += 1
        else:
            row["greedy_fail"] += 1
        row["max_steps"] = max(row["max_steps"], r.greedy_steps)
    return [rows[k] for k in sorted(rows)]


def _atomic_write(path: Path, text: str) -> None:
    partial = path.with_name(path.name + ".partial")
    with open(partial, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(partial, path)


def write_reports(records: Iterable[GraphAuditRecord], out_dir: str | os.PathLike) -> tuple[Path, Path]:
    """Write ``audit.jsonl`` (sorted by graph6) and ``summary.csv`` into ``out_dir``."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    ordered = sorted(records, key=lambda r: (r.graph6, r.to_json()))
    jsonl = "".join(r.to_json() + "\n" for r in ordered)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(summarize(ordered))
    jsonl_path, csv_path = out / JSONL_NAME, out / CSV_NAME
    _atomic_write(jsonl_path, jsonl)
    _atomic_write(csv_path, buf.getvalue())
    return jsonl_path, csv_path


def read_records(path: str | os.PathLike) -> list[GraphAuditRecord]:
    with open(path, encoding="utf-8") as fh:
        return [GraphAuditRecord.from_dict(json.loads(line)) for line in fh if line.strip()]


# -- colour-class characterisation audit ------------------------------------


@dataclass
class Theorem31Report:
    """Agreement table between contraction sensitivity and the essentially-singleton condition.

    "holds" means the condition is satisfied by at least one minimal
    representation; ``holds_for_all`` counts graphs where every minimal
    representation satisfies it. Complete graphs sit outside the hypothesis
    (order must exceed chi) and are listed separately, as are graphs where
    the condition is only vacuously true (all parts singletons).
    """

    sensitive_holds: list[str] = field(default_factory=list)
    sensitive_fails: list[str] = field(default_factory=list)
    insensitive_holds: list[str] = field(default_factory=list)
    insensitive_fails: list[str] = field(default_factory=list)
    holds_for_all: int = 0
    vacuous: list[str] = field(default_factory=list)
    outside_hypothesis: list[str] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    @property
    def table(self) -> dict[str, dict[str, int]]:
        return {
            "sensitive": {"holds": len(self.sensitive_holds), "fails": len(self.sensitive_fails)},
            "insensitive": {"holds": len(self.insensitive_holds), "fails": len(self.insensitive_fails)},
        }

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "table": self.table,
            "holds_for_all": self.holds_for_all,
            "counterexamples": {
                "sensitive_but_fails": sorted(self.sensitive_fails),
                "insensitive_but_holds": sorted(self.insensitive_holds),
            },
            "vacuous": sorted(self.vacuous),
            "outside_hypothesis": sorted(self.outside_hypothesis),
            "skipped": sorted(self.skipped),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        t = self.table
        lines = [
            f"{'':12} {'holds':>7} {'fails':>7}",
            f"{'sensitive':12} {t['sensitive']['holds']:>7} {t['sensitive']['fails']:>7}",
            f"{'insensitive':12} {t['insensitive']['holds']:>7} {t['insensitive']['fails']:>7}",
            f"sensitive but fails: {' '.join(sorted(self.sensitive_fails)) or '-'}",
            f"insensitive but holds: {' '.join(sorted(self.insensitive_holds)) or '-'}",
            f"outside hypothesis (complete): {len(self.outside_hypothesis)}; skipped: {len(self.skipped)}",
        ]
        return "\n".join(lines) + "\n"


def audit_theorem31(corpus: Iterable[Graph], max_order: int = MAX_ENUMERATION_ORDER) -> Theorem31Report:
    report = Theorem31Report()
    for g in corpus:
        g6 = emit_graph6(g)
        if g.order > max_order or g.order > MAX_ENUMERATION_ORDER or g.size == 0 or not g.is_connected():
            report.skipped.append(g6)
            continue
        chi = chromatic_number(g)
        if g.order == chi:
            report.outside_hypothesis.append(g6)
            continue
        sensitive = is_contraction_sensitive(g)
        verdicts = []
        for rep in all_minimal_representations(g, chi):
            verdicts.append(every_part_essentially_singleton(g, rep))
            if all(len(p) == 1 for p in rep.parts):
                report.vacuous.append(g6)
        holds = any(verdicts)
        report.holds_for_all += all(verdicts)
        if sensitive:
            (report.sensitive_holds if holds else report.sensitive_fails).append(g6)
        else:
            (report.insensitive_holds if holds else report.insensitive_fails).append(g6)
    return report


def write_theorem31_report(report: Theorem31Report, out_dir: str | os.PathLike) -> Path:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    path = out / "theorem31.json"
    _atomic_write(path, report.to_json())
    return path
