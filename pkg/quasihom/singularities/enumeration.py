# quasihom/singularities/enumeration.py

"""
Exact enumeration of reduced weight systems with multiplicity >= 3.

The census universe for n variables and degree bound d_max is the set of
(v_1, ..., v_n; d) with d/2 > v_1 >= ... >= v_n >= 1, d <= d_max and
gcd(v_1, ..., v_n, d) = 1, visited in ascending lexicographic order of
(d, v_1, ..., v_n). Every system satisfying (C2-bar) becomes a CensusRow whose
index L counts the (C2-bar) systems up to and including it.

Work is split into one shard per degree. Shards run in a billiard process pool
or as Celery tasks, and are merged in degree order, which is where L is
assigned. With a checkpoint directory every finished shard is written as its own
CSV file and a rerun with `resume` skips it.
"""

# Standard library imports
import csv
import logging
import os
import random
import tempfile
import time
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

# Third-party imports
from billiard import Pool

# Local application imports
from .arith import check_int64, divisors, gcd_all, lcm_all
from .blocks import verify_theorem_1_4a
from .conf import get_setting
from .exceptions import (ContractViolation, EnumerationAborted, GoldenMismatch,
                         InvalidInputError, QuasihomError)
from .orders import map_compatible, weight_orders
from .weights import (WeightSystem, a_tuple, check_c2, check_c2bar, milnor_number,
                      psi_w, rho, saito_strong, saito_value, saito_weak, sigma_vs_divisor,
                      singleton_gcd_ok)

LOGGER = logging.getLogger(__name__)

DATA_DIR = Path(__file__).resolve().parent / "data"

BACKENDS = ("local", "celery")
SWEEP_CHECKS = ("theorem_6_6", "theorem_1_4a", "theorem_6_4", "rho_nonneg", "sigma_vs_divisor")


# ==============================================================================
# DOMAIN TYPES
# ==============================================================================

@dataclass(frozen=True)
class SearchSpec:
    """
    A census universe.

    Attributes:
        n (int): number of variables.
        d_max (int): largest degree visited.
        prune (bool): generate candidates with the singleton pruning; False
                      walks the full universe (debug).
    """
    n: int
    d_max: int
    prune: bool = True

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidInputError(f"n must be a positive integer, got {self.n!r}")
        if not isinstance(self.d_max, int) or self.d_max < 2:
            raise InvalidInputError(f"d_max must be at least 2, got {self.d_max!r}")

    @property
    def degrees(self) -> range:
        return range(2, self.d_max + 1)

    def to_json(self) -> dict:
        return {"n": self.n, "d_max": self.d_max, "prune": self.prune}


@dataclass(frozen=True)
class CensusRow:
    """
    One (C2-bar) system of the census.

    `L` is None until the row has passed the ordered merge.
    """
    v: Tuple[int, ...]
    d: int
    mu: int
    c2: bool
    saito_strong: bool
    saito_weak: bool
    a_tuple: Optional[Tuple[int, ...]] = None
    L: Optional[int] = None
    c2bar: bool = True

    @property
    def system(self) -> WeightSystem:
        return WeightSystem(self.v, self.d)

    @property
    def n(self) -> int:
        return len(self.v)

    def to_record(self) -> Dict[str, str]:
        record = {"d": str(self.d)}
        record.update({f"v{i}": str(x) for i, x in enumerate(self.v, start=1)})
        record.update({
            "mu": str(self.mu),
            "L": "" if self.L is None else str(self.L),
            "c2bar": _flag(self.c2bar),
            "c2": _flag(self.c2),
        })
        record.update({f"a{i}": str(a) for i, a in enumerate(self.a_tuple or ("",) * 6, start=1)})
        record.update({"saito_strong": _flag(self.saito_strong), "saito_weak": _flag(self.saito_weak)})
        return record

    @classmethod
    def from_record(cls, record: Dict[str, str], n: int) -> "CensusRow":
        try:
            a = tuple(int(record[f"a{i}"]) for i in range(1, 7)) if record.get("a1") else None
            return cls(
                v=tuple(int(record[f"v{i}"]) for i in range(1, n + 1)),
                d=int(record["d"]),
                mu=int(record["mu"]),
                c2=_parse_flag(record["c2"]),
                saito_strong=_parse_flag(record["saito_strong"]),
                saito_weak=_parse_flag(record["saito_weak"]),
                a_tuple=a,
                L=int(record["L"]) if record.get("L") else None,
                c2bar=_parse_flag(record["c2bar"]),
            )
        except (KeyError, ValueError) as e:
            raise InvalidInputError(f"Malformed census record {record}: {e}") from e

    def to_json(self) -> dict:
        data = {
            "weights": list(self.v), "d": self.d, "mu": self.mu, "L": self.L,
            "c2bar": self.c2bar, "c2": self.c2,
            "saito_strong": self.saito_strong, "saito_weak": self.saito_weak,
        }
        if self.a_tuple is not None:
            data["a_tuple"] = list(self.a_tuple)
        return data


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _parse_flag(text: str) -> bool:
    if text not in ("true", "false"):
        raise ValueError(f"expected true or false, got {text!r}")
    return text == "true"


def csv_columns(n: int) -> List[str]:
    return (["d"] + [f"v{i}" for i in range(1, n + 1)] + ["mu", "L", "c2bar", "c2"]
            + [f"a{i}" for i in range(1, 7)] + ["saito_strong", "saito_weak"])


def write_rows(rows: Iterable[CensusRow], stream, n: int) -> None:
    writer = csv.DictWriter(stream, fieldnames=csv_columns(n), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.to_record())


def read_rows(stream, n: int) -> List[CensusRow]:
    return [CensusRow.from_record(record, n) for record in csv.DictReader(stream)]


@dataclass
class CensusSummary:
    spec: SearchSpec
    count_c2bar: int = 0
    count_c2bar_not_c2: int = 0
    rows: List[CensusRow] = field(default_factory=list)
    elapsed: float = 0.0
    shards: List[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "counts": {"c2bar": self.count_c2bar, "c2bar_not_c2": self.count_c2bar_not_c2},
            "elapsed": round(self.elapsed, 3),
            "shards": self.shards,
        }


# ==============================================================================
# CANDIDATE GENERATION
# ==============================================================================

def _descending(n: int, top: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for x in range(1, top + 1):
        for rest in _descending(n - 1, x):
            yield (x,) + rest


def _unsatisfied_after(d: int, prefix: Tuple[int, ...], unsatisfied: frozenset, x: int) -> frozenset:
    """Weights v of prefix + (x,) that divide none of the d - v_k chosen so far."""
    still = {v for v in unsatisfied if (d - x) % v}
    if d % x and all((d - y) % x for y in prefix):
        still.add(x)
    return frozenset(still)


def _last_coordinates(d: int, prefix: Tuple[int, ...], unsatisfied: frozenset, bound: int) -> Iterator[int]:
    if unsatisfied:
        # Every open v needs v | d - x, i.e. x = d mod lcm(open weights).
        step = lcm_all(unsatisfied)
        xs: Iterable[int] = range(d % step or step, bound + 1, step)
    else:
        found = set(divisors(d))
        for y in prefix:
            found.update(divisors(d - y))
        xs = sorted(x for x in found if x <= bound)
    for x in xs:
        if d % x == 0 or any((d - y) % x == 0 for y in prefix):
            yield x


def _pruned(n: int, d: int, prefix: Tuple[int, ...], unsatisfied: frozenset, bound: int) -> Iterator[Tuple[int, ...]]:
    if len(prefix) == n - 1:
        for x in _last_coordinates(d, prefix, unsatisfied, bound):
            yield prefix + (x,)
        return
    for x in range(1, bound + 1):
        still = _unsatisfied_after(d, prefix, unsatisfied, x)
        # All later coordinates are <= x; the smallest one that serves v is d mod v.
        if any((d % v or v) > x for v in still):
            continue
        yield from _pruned(n, d, prefix + (x,), still, x)


def candidates(n: int, d: int, prune: bool = True) -> Iterator[Tuple[int, ...]]:
    """
    Reduced weight tuples of degree d in the census universe, lexicographically.

    With `prune`, tuples failing the singleton part of (C2-bar) are skipped
    without being visited.
    """
    top = (d - 1) // 2
    if n < 1 or top < 1:
        return
    walk = _pruned(n, d, (), frozenset(), top) if prune else _descending(n, top)
    for v in walk:
        if gcd_all(v + (d,)) == 1:
            yield v


def census_row(ws: WeightSystem) -> CensusRow:
    """The row of a (C2-bar) system, without its index. Saito flags stay False without (C2)."""
    c2 = check_c2(ws)
    return CensusRow(
        v=ws.v,
        d=ws.d,
        mu=check_int64(int(milnor_number(ws)), "mu"),
        c2=c2,
        saito_strong=c2 and saito_strong(ws),
        saito_weak=c2 and saito_weak(ws),
        a_tuple=tuple(a_tuple(ws)) if ws.n == 4 else None,
    )


def scan_degree(n: int, d: int, prune: bool = True) -> List[CensusRow]:
    """All (C2-bar) rows of degree d in census order."""
    rows = []
    for v in candidates(n, d, prune):
        ws = WeightSystem(v, d)
        if check_c2bar(ws):
            rows.append(census_row(ws))
    return rows


def _scan_shard(args: Tuple[int, int, bool]) -> Tuple[int, List[CensusRow]]:
    n, d, prune = args
    return d, scan_degree(n, d, prune)


# ==============================================================================
# CHECKPOINTS
# ==============================================================================

def shard_path(checkpoint_dir: Path, n: int, d: int) -> Path:
    return Path(checkpoint_dir) / f"census_n{n}_d{d}.csv"


def write_shard(checkpoint_dir: Path, n: int, d: int, rows: Sequence[CensusRow]) -> Path:
    """Writes a shard through a temporary file so a shard file is always complete."""
    target = shard_path(checkpoint_dir, n, d)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=target.parent, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as stream:
            write_rows((replace(row, L=None) for row in rows), stream, n)
        os.replace(tmp, target)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise
    return target


def read_shard(checkpoint_dir: Path, n: int, d: int) -> Optional[List[CensusRow]]:
    path = shard_path(checkpoint_dir, n, d)
    if not path.exists():
        return None
    with path.open(encoding="utf-8", newline="") as stream:
        return read_rows(stream, n)


# ==============================================================================
# THE ENGINE
# ==============================================================================

def _local_shards(spec: SearchSpec, degrees: Sequence[int], workers: int) -> Iterator[Tuple[int, List[CensusRow]]]:
    jobs = [(spec.n, d, spec.prune) for d in degrees]
    if workers <= 1:
        yield from map(_scan_shard, jobs)
        return
    with Pool(processes=workers) as pool:
        # imap keeps submission order, so the merge sees degrees ascending.
        yield from pool.imap(_scan_shard, jobs)


def _celery_shards(spec: SearchSpec, degrees: Sequence[int]) -> Iterator[Tuple[int, List[CensusRow]]]:
    from .tasks import scan_degree_task

    pending = [(d, scan_degree_task.delay(spec.n, d, spec.prune)) for d in degrees]
    for d, result in pending:
        payload = result.get()
        yield d, [CensusRow.from_record(record, spec.n) for record in payload]


def enumerate_weight_systems(
    spec: SearchSpec,
    sink: Optional[Callable[[CensusRow], None]] = None,
    keep: Optional[Callable[[CensusRow], bool]] = None,
    workers: Optional[int] = None,
    backend: Optional[str] = None,
    checkpoint_dir: Optional[Path] = None,
    resume: bool = False,
    time_limit: Optional[float] = None,
) -> CensusSummary:
    """
    Runs the census of `spec`.

    Rows reach `sink` in census order with their final index L; rows accepted
    by `keep` are also collected in the summary. Shards already on disk are
    reused when `resume` is set. If `time_limit` seconds pass, the run stops
    after the current shard with EnumerationAborted.
    """
    workers = workers if workers is not None else get_setting("ENUMERATION_WORKERS")
    backend = backend or get_setting("ENUMERATION_BACKEND")
    if backend not in BACKENDS:
        raise InvalidInputError(f"Unknown enumeration backend {backend!r}")
    if checkpoint_dir is None and resume:
        checkpoint_dir = get_setting("ENUMERATION_CHECKPOINT_DIR")
    checkpoint_dir = Path(checkpoint_dir) if checkpoint_dir else None

    summary = CensusSummary(spec)
    started = time.monotonic()
    LOGGER.info(f"Census n={spec.n} d<={spec.d_max} started (backend={backend}, workers={workers})")

    cached: Dict[int, List[CensusRow]] = {}
    if resume and checkpoint_dir:
        for d in spec.degrees:
            rows = read_shard(checkpoint_dir, spec.n, d)
            if rows is not None:
                cached[d] = rows
        LOGGER.info(f"Resuming with {len(cached)} finished shards from {checkpoint_dir}")
    todo = [d for d in spec.degrees if d not in cached]

    fresh = _celery_shards(spec, todo) if backend == "celery" else _local_shards(spec, todo, workers)
    completed: List[int] = []
    try:
        for d in spec.degrees:
            resumed = d in cached
            if resumed:
                rows = cached[d]
            else:
                got, rows = next(fresh)
                if got != d:
                    raise ContractViolation(f"Shard for d={got} arrived while merging d={d}")
                if checkpoint_dir:
                    write_shard(checkpoint_dir, spec.n, d, rows)
            for row in rows:
                summary.count_c2bar += 1
                if not row.c2:
                    summary.count_c2bar_not_c2 += 1
                row = replace(row, L=check_int64(summary.count_c2bar, "L"))
                if sink is not None:
                    sink(row)
                if keep is not None and keep(row):
                    summary.rows.append(row)
            completed.append(d)
            summary.shards.append({"d": d, "rows": len(rows), "resumed": resumed})
            LOGGER.debug(f"Shard d={d}: {len(rows)} rows (running L={summary.count_c2bar})")
            if time_limit is not None and time.monotonic() - started > time_limit and d != spec.d_max:
                raise EnumerationAborted(
                    f"Census stopped after d={d}: time limit of {time_limit}s reached",
                    completed=completed,
                    checkpoint_dir=str(checkpoint_dir) if checkpoint_dir else None,
                )
    finally:
        fresh.close()

    summary.elapsed = time.monotonic() - started
    LOGGER.info(
        f"Census n={spec.n} d<={spec.d_max} finished in {summary.elapsed:.1f}s: "
        f"{summary.count_c2bar} (C2-bar) systems, {summary.count_c2bar_not_c2} without (C2)"
    )
    return summary


# ==============================================================================
# TABLES
# ==============================================================================

TABLE1_COLUMNS = ["d", "v1", "v2", "v3", "v4", "mu", "L", "a1", "a2", "a3", "a4", "a5", "a6"]
TABLE2_COLUMNS = ["d", "v1", "v2", "v3", "v4", "v5", "mu", "L", "saito_strong"]


def load_golden(name: str) -> List[Dict[str, str]]:
    with (DATA_DIR / name).open(encoding="utf-8", newline="") as stream:
        return list(csv.DictReader(stream))


def compare_golden(rows: Sequence[CensusRow], golden: Sequence[Dict[str, str]], columns: Sequence[str]) -> None:
    """Raises GoldenMismatch naming the first row where `rows` and `golden` differ."""
    for index in range(max(len(rows), len(golden))):
        actual = rows[index].to_record() if index < len(rows) else None
        expected = golden[index] if index < len(golden) else None
        actual_cut = {c: actual[c] for c in columns} if actual else None
        expected_cut = {c: expected[c] for c in columns} if expected else None
        if actual_cut != expected_cut:
            raise GoldenMismatch(
                f"Row {index + 1} differs: expected {expected_cut}, got {actual_cut}",
                index + 1, expected_cut, actual_cut,
            )


def table1(**engine_options) -> List[CensusRow]:
    """The 23 systems with n = 4, d <= 200 satisfying (C2-bar) but not (C2)."""
    summary = enumerate_weight_systems(SearchSpec(4, 200), keep=lambda row: not row.c2, **engine_options)
    compare_golden(summary.rows, load_golden("table1.csv"), TABLE1_COLUMNS)
    return summary.rows


def table2(**engine_options) -> List[CensusRow]:
    """The 10 systems with n = 5, d <= 200 satisfying (C2) with psi_w(d_w) = 0."""
    summary = enumerate_weight_systems(
        SearchSpec(5, 200),
        keep=lambda row: row.c2 and not row.saito_strong and saito_value(row.system) == 0,
        **engine_options,
    )
    compare_golden(summary.rows, load_golden("table2.csv"), TABLE2_COLUMNS)
    return summary.rows


# ==============================================================================
# SWEEPS
# ==============================================================================

@dataclass
class SweepReport:
    spec: SearchSpec
    checked: Dict[str, int] = field(default_factory=dict)
    violations: Dict[str, List[str]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "checks": {
                name: {"checked": self.checked[name], "violations": self.violations[name]}
                for name in self.checked
            },
            "ok": self.ok,
        }


def _sweep_check(name: str, ws: WeightSystem) -> bool:
    if name == "theorem_6_6":
        return map_compatible(psi_w(ws), weight_orders(ws))
    if name == "theorem_1_4a":
        return verify_theorem_1_4a(ws)
    if name == "theorem_6_4":
        return psi_w(ws).is_multiplicity_map and rho(ws).is_nonnegative
    if name == "rho_nonneg":
        return rho(ws).is_nonnegative
    return sigma_vs_divisor(ws)


def _applies(name: str, row: CensusRow) -> bool:
    """rho_nonneg concerns (C2-bar) systems without (C2); every other check needs (C2)."""
    return not row.c2 if name == "rho_nonneg" else row.c2


def verify_sweep(spec: SearchSpec, checks: Iterable[str] = SWEEP_CHECKS, **engine_options) -> SweepReport:
    checks = list(checks)
    unknown = [name for name in checks if name not in SWEEP_CHECKS]
    if unknown:
        raise InvalidInputError(f"Unknown sweep checks {unknown}")
    report = SweepReport(spec, {name: 0 for name in checks}, {name: [] for name in checks})

    def sink(row: CensusRow) -> None:
        ws = row.system
        for name in checks:
            if not _applies(name, row):
                continue
            report.checked[name] += 1
            try:
                passed = _sweep_check(name, ws)
            except QuasihomError as e:
                LOGGER.error(f"{name} raised on {ws}: {e}")
                passed = False
            if not passed:
                LOGGER.warning(f"{name} violated by {ws}")
                report.violations[name].append(str(ws))

    enumerate_weight_systems(spec, sink=sink, **engine_options)
    for name in checks:
        LOGGER.info(f"Sweep {name}: {report.checked[name]} checked, {len(report.violations[name])} violations")
    return report


def audit_pruning(spec: SearchSpec, rate: float = 1e-4, seed: Optional[int] = None) -> dict:
    """
    Re-walks the unpruned universe and checks a random sample of it.

    Every sampled tuple that passes the singleton test must also be produced by
    the pruned generator; pruned tuples must fail it.
    """
    rng = random.Random(seed)
    sampled = 0
    misses: List[str] = []
    for d in spec.degrees:
        pruned = None
        for v in candidates(spec.n, d, prune=False):
            if rng.random() >= rate:
                continue
            sampled += 1
            if pruned is None:
                pruned = set(candidates(spec.n, d, prune=True))
            ws = WeightSystem(v, d)
            if singleton_gcd_ok(ws) != (v in pruned):
                misses.append(str(ws))
    LOGGER.info(f"Pruning audit over n={spec.n} d<={spec.d_max}: {sampled} sampled, {len(misses)} misses")
    return {"spec": spec.to_json(), "sampled": sampled, "misses": misses}
