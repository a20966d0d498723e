"""Exhaustive classifier-versus-oracle comparison over small factor pairs."""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .classifier import classify
from .enumerate import graphs_up_to
from .graph6 import encode_graph6
from .perfection import is_perfect_oracle
from .products import wmp


@dataclass
class SweepReport:
    max_n: int
    classes: int
    pairs: int = 0
    # (case_id or None, oracle_perfect) -> count
    counts: Counter = field(default_factory=Counter)
    mismatches: list[tuple[str, str, bool, bool]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def table(self) -> str:
        lines = [f"{'case':>6} {'perfect':>8} {'imperfect':>10}"]
        for case in [*range(1, 11), None]:
            label = "none" if case is None else str(case)
            lines.append(f"{label:>6} {self.counts[case, True]:>8} {self.counts[case, False]:>10}")
        return "\n".join(lines)


def _row(args: tuple[int, int]) -> tuple[Counter, list]:
    max_n, i = args
    graphs = graphs_up_to(max_n)
    g = graphs[i]
    counts: Counter = Counter()
    bad = []
    for h in graphs:
        c = classify(g, h)
        perfect = is_perfect_oracle(wmp(g, h)).perfect
        counts[c.case_id, perfect] += 1
        if c.perfect != perfect:
            bad.append((encode_graph6(g), encode_graph6(h), c.perfect, perfect))
    return counts, bad


def run_sweep(max_n: int = 5, jobs: int | None = 1) -> SweepReport:
    """Compare ``classify`` with the oracle on all ordered pairs of classes.

    ``jobs`` > 1 spreads rows over worker processes; ``None`` uses every CPU.
    """
    graphs = graphs_up_to(max_n)
    report = SweepReport(max_n, len(graphs))
    tasks = [(max_n, i) for i in range(len(graphs))]
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            rows = list(pool.map(_row, tasks))
    else:
        rows = [_row(t) for t in tasks]
    for counts, bad in rows:
        report.counts.update(counts)
        report.mismatches.extend(bad)
    report.pairs = len(graphs) ** 2
    return report
