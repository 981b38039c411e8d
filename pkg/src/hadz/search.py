"""Exhaustive and symmetry-restricted searches, orbit decomposition, census tables."""

from __future__ import annotations

import enum
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import kernels, reference
from .cocycle import CoboundarySet, assemble, basis_expression, class_id, minimal_repartition
from .group import check_t
from .hadamard import NotHadamardSeed, is_hadamard, is_hadamard_set
from .ops import row_axes, to_rows
from .orbits import OrbitRecord, canon_rows, total_orbit
from .williamson import is_williamson_position

DEFAULT_BUDGET = 1 << 34
LO_BITS = 14


class InfeasibleScale(RuntimeError):
    pass


class SearchMode(enum.Enum):
    FULL = "full"
    SYMMETRIC_ONLY = "symmetric"


class Repartition(enum.Enum):
    ALL = "all"
    MINIMAL_ONLY = "minimal"


@dataclass
class SearchConfig:
    t: int
    mode: SearchMode = SearchMode.FULL
    repartition: Repartition = Repartition.ALL
    jobs: int = 1
    out: str | Path | None = None
    budget: int | None = None

    def __post_init__(self):
        self.t = check_t(self.t)
        self.mode = SearchMode(self.mode)
        self.repartition = Repartition(self.repartition)
        if self.jobs < 1:
            raise ValueError("jobs must be positive")

    def effective_budget(self) -> int:
        if self.budget is not None:
            return self.budget
        env = os.environ.get("HADZ_BUDGET")
        return int(env) if env else DEFAULT_BUDGET


@dataclass
class SearchReport:
    t: int
    mode: str
    tested: int
    hadamard_total: int
    sets: list[CoboundarySet] = field(default_factory=list, repr=False)
    orbits: list[OrbitRecord] = field(default_factory=list, repr=False)
    wall_time: float = 0.0

    @property
    def label(self) -> str:
        return {"full": "census", "symmetric": "symmetric census"}.get(self.mode, self.mode)

    @property
    def complete(self) -> bool:
        """Orbit sizes account for every reported set."""
        return bool(self.orbits) and sum(o.size for o in self.orbits) == self.hadamard_total

    def orbit_sizes(self) -> list[int]:
        return [o.size for o in self.orbits]

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "mode": self.mode,
            "label": self.label,
            "tested": self.tested,
            "hadamard_total": self.hadamard_total,
            "orbit_sizes": self.orbit_sizes(),
            "wall_time": round(self.wall_time, 3),
        }


def estimated_candidates(t: int, mode: SearchMode) -> int:
    if SearchMode(mode) is SearchMode.FULL:
        return 1 << (4 * t - 3)
    return t << (2 * t - 1)


# -- candidate generation ----------------------------------------------------


def _subset_masks(gens: Sequence[int]) -> np.ndarray:
    """OR of every subset of ``gens``, subset ``i`` using generator ``b`` iff bit ``b`` of ``i``."""
    out = np.zeros(1, dtype=np.uint64)
    for g in gens:
        out = np.concatenate([out, out | np.uint64(g)])
    return out


def _full_generators(t: int) -> list[int]:
    # enumeration bit b stands for coboundary b + 2, i.e. mask bit b + 1
    return [1 << (b + 1) for b in range(4 * t - 3)]


def symmetric_generators(t: int, qc: int) -> list[int]:
    """Free mask pieces for diagrams symmetric about the column of Z_t part ``qc``.

    Off-axis cells come in mirror pairs.  On the axis only the class-2 cell is
    free; the other classes can be cleared there by switching expression.
    """
    gens = []
    for r in (2, 3, 4, 1):
        for q in range(t):
            p = (2 * qc - q) % t
            if q == p:
                if r == 2:
                    gens.append(1 << (4 * q + r - 1))
            elif q < p:
                gens.append((1 << (4 * q + r - 1)) | (1 << (4 * p + r - 1)))
    return gens


def _split(gens: Sequence[int]) -> tuple[np.ndarray, list[Sequence[int]]]:
    lo = _subset_masks(gens[:LO_BITS])
    return lo, gens[LO_BITS:]


def _scan(args) -> np.ndarray:
    t, lo, hi, backend = args
    return kernels.scan_product(t, lo, hi, backend=backend)


def _shards(hi: np.ndarray, jobs: int) -> list[np.ndarray]:
    n = max(1, min(len(hi), jobs * 8))
    return [c for c in np.array_split(hi, n) if len(c)]


def _run_scan(t: int, gens: Sequence[int], jobs: int, backend: str | None) -> np.ndarray:
    lo, hi_gens = _split(gens)
    hi = _subset_masks(hi_gens)
    tasks = [(t, lo, chunk, backend) for chunk in _shards(hi, jobs)]
    if jobs == 1:
        parts = [_scan(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan, tasks))  # map keeps shard order
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.uint64)


# -- searches ----------------------------------------------------------------


def _sink(report: SearchReport, path: str | Path) -> None:
    reps = {}
    for o in report.orbits:
        for m in o.members:
            reps[m] = list(o.representative.indices)
    with open(path, "w") as fh:
        for s in report.sets:
            rows = to_rows(s)
            rec = {
                "t": s.t,
                "set": list(s.indices),
                "symmetric": bool(row_axes(rows, s.t)),
                "orbit_rep": reps.get(canon_rows(rows, s.t)),
            }
            fh.write(json.dumps(rec) + "\n")


def exhaustive_search(
    cfg: SearchConfig, decompose: bool = False, backend: str | None = None
) -> SearchReport:
    """Test every candidate of the configured space with the row-sum kernel.

    FULL enumerates all basis subsets.  SYMMETRIC_ONLY enumerates one
    expression per (axis, half pattern) and reports basis expressions,
    deduplicated across axes.  MINIMAL_ONLY reports each matrix by its
    minimal repartition, which is the one expression of that matrix surviving
    the filter "equals its own minimal repartition".
    """
    t = cfg.t
    tested = estimated_candidates(t, cfg.mode)
    budget = cfg.effective_budget()
    if tested > budget:
        raise InfeasibleScale(f"{tested} candidates exceed the budget of {budget}")
    start = time.perf_counter()
    if cfg.mode is SearchMode.FULL:
        hits = _run_scan(t, _full_generators(t), cfg.jobs, backend)
        sets = [CoboundarySet(t, int(m)) for m in hits]
    else:
        found: dict[int, int] = {}
        for qc in range(t):
            for m in _run_scan(t, symmetric_generators(t, qc), cfg.jobs, backend):
                found.setdefault(class_id(t, int(m)), int(m))
        sets = [basis_expression(CoboundarySet(t, m)) for m in found.values()]
    if cfg.repartition is Repartition.MINIMAL_ONLY:
        sets = [minimal_repartition(s) for s in sets]
    sets.sort(key=lambda s: s.indices)
    report = SearchReport(t, cfg.mode.value, tested, len(sets), sets)
    if decompose:
        report.orbits = orbit_decompose(sets)
    report.wall_time = time.perf_counter() - start
    if cfg.out:
        _sink(report, cfg.out)
    return report


def orbit_decompose(results: Iterable[CoboundarySet]) -> list[OrbitRecord]:
    """Split Hadamard sets into total orbits, in order of their smallest member."""
    by_key: dict = {}
    for s in results:
        by_key.setdefault(canon_rows(to_rows(s), s.t), s)
    covered: set = set()
    orbits = []
    for key in sorted(by_key):
        if key in covered:
            continue
        rec = total_orbit(by_key[key])
        covered |= rec.members
        orbits.append(rec)
    return orbits


def expand_from_representatives(
    reps: Iterable[CoboundarySet], verify: str = "matrix"
) -> SearchReport:
    """Union of the total orbits of ``reps``, every member re-verified.

    ``verify="matrix"`` checks ``H H^T = 4t I`` on every assembled member;
    ``verify="rows"`` uses the bitmask row test only.
    """
    if verify not in ("matrix", "rows"):
        raise ValueError(f"unknown verification {verify!r}")
    start = time.perf_counter()
    reps = list(reps)
    if not reps:
        return SearchReport(0, "expansion", 0, 0)
    t = reps[0].t
    orbits, covered = [], set()
    for s in reps:
        if s.t != t:
            raise ValueError("representatives must share one t")
        if not (is_hadamard_set(s) and is_hadamard(assemble(s))):
            raise NotHadamardSeed(f"{list(s.indices)} is not Hadamard")
        if canon_rows(to_rows(s), t) in covered:
            continue
        rec = total_orbit(s)
        covered |= rec.members
        orbits.append(rec)
    sets = sorted((m for o in orbits for m in o.member_sets()), key=lambda s: s.indices)
    for m in sets:
        ok = is_hadamard(assemble(m)) if verify == "matrix" else is_hadamard_set(m)
        if not ok:
            raise NotHadamardSeed(f"orbit member {list(m.indices)} is not Hadamard")
    report = SearchReport(t, "expansion", len(sets), len(sets), sets, orbits)
    report.wall_time = time.perf_counter() - start
    return report


# -- census tables -----------------------------------------------------------


@dataclass
class TableRow:
    t: int
    strategy: str
    computed: int
    expected: int | None
    orbit_sizes: list[int]
    williamson: int
    expected_williamson: int | None
    wall_time: float

    @property
    def match(self) -> bool:
        return self.computed == self.expected and self.williamson == self.expected_williamson

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "strategy": self.strategy,
            "computed": self.computed,
            "expected": self.expected,
            "orbit_sizes": self.orbit_sizes,
            "williamson": self.williamson,
            "expected_williamson": self.expected_williamson,
            "match": self.match,
            "wall_time": round(self.wall_time, 3),
        }


def default_strategy(t: int) -> str:
    if t <= 7:
        return "full"
    if t <= 13:
        return "symmetric"
    return "expansion"


def census(t: int, strategy: str | None = None, jobs: int = 1) -> SearchReport:
    strategy = strategy or default_strategy(t)
    if strategy == "expansion":
        reps = reference.representatives(t)
        if not reps:
            raise ValueError(f"no stored representatives for t={t}")
        return expand_from_representatives(reps)
    return exhaustive_search(SearchConfig(t, SearchMode(strategy), jobs=jobs), decompose=True)


def reproduce_tables(
    t_range: Iterable[int] = range(3, 20, 2), jobs: int = 1, strategy: str | None = None
) -> list[TableRow]:
    rows = []
    for t in t_range:
        report = census(t, strategy, jobs)
        members = [m for o in report.orbits for m in o.member_sets()]
        rows.append(
            TableRow(
                t,
                strategy or default_strategy(t),
                report.hadamard_total,
                reference.CENSUS.get(t),
                report.orbit_sizes(),
                sum(is_williamson_position(m) for m in members),
                reference.WILLIAMSON.get(t),
                report.wall_time,
            )
        )
    return rows
