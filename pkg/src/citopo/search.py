"""Degree-space search: enumerate canonical multidegrees and hash-join the
ones sharing a matching key.

Keys are exact integer tuples, so grouping by hash is collision-free.
The scan is partitioned by the largest degree; workers build local tables
that are merged and sorted deterministically, so output is byte-identical
for any worker count.  Every emitted group is re-verified through the
profile-based route, independent of the scan kernel.
"""

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple, Union

from . import _core
from .classify import ClassificationVerdict, classify_pair, rigidity_excludes_pair
from .invariants import Multidegree, canonicalize, power_sums, profile, total_degree


class KeyMode(enum.Enum):
    INVARIANT = "invariants"
    POWER_SUM = "power-sums"


class SearchLimitExceeded(RuntimeError):
    """The grouping table outgrew the configured cap."""


@dataclass
class SearchConfig:
    n: int
    max_degree: int
    max_codim: int
    min_codim: int = 1
    max_total_degree: Optional[int] = None
    mode: KeyMode = KeyMode.INVARIANT
    require_distinct_c1: bool = False
    require_equal_c1: bool = False
    apply_rigidity_pruning: bool = False
    worker_count: int = 1
    max_table_size: int = 5_000_000

    def __post_init__(self) -> None:
        if not 2 <= self.n <= 7:
            raise ValueError(f"dimension must be in 2..7, got {self.n}")
        if self.max_degree < 2:
            raise ValueError("max_degree must be >= 2")
        if not 1 <= self.min_codim <= self.max_codim:
            raise ValueError("need 1 <= min_codim <= max_codim")
        if self.require_distinct_c1 and self.require_equal_c1:
            raise ValueError("the distinct-c1 and equal-c1 filters are mutually exclusive")
        if self.worker_count < 1:
            raise ValueError("worker_count must be >= 1")


@dataclass(frozen=True)
class MatchKey:
    """The joined-on key: grouping folds in r for power-sum mode only.

    Invariant values already absorb the codimension (matches across
    distinct codimensions must remain discoverable); equal power sums do
    not, so that mode groups within a codimension.
    """

    mode: KeyMode
    n: int
    r: int
    values: Tuple[int, ...]

    @property
    def field_names(self) -> Tuple[str, ...]:
        if self.mode is KeyMode.POWER_SUM:
            return ("d",) + tuple(f"s{i}" for i in range(1, self.n + 1))
        if self.n == 2:
            return ("d_p1", "e", "c1_parity")
        return ("d",) + tuple(f"p{k}" for k in range(1, self.n // 2 + 1)) + ("e",)

    def grouping(self) -> Tuple:
        if self.mode is KeyMode.POWER_SUM:
            return (self.mode.value, self.r, self.values)
        return (self.mode.value, self.values)

    def to_record(self) -> Dict[str, object]:
        return {
            "mode": self.mode.value,
            "r": self.r,
            "fields": dict(zip(self.field_names, (str(v) for v in self.values))),
        }


def match_key(n: int, md: Multidegree, mode: KeyMode = KeyMode.INVARIANT) -> MatchKey:
    """Profile-based key computation (the slow, kernel-independent route)."""
    if not 2 <= n <= 7:
        raise ValueError(f"dimension must be in 2..7, got {n}")
    if mode is KeyMode.POWER_SUM:
        values = (total_degree(md),) + tuple(power_sums(md, n) if md else [0] * n)
        return MatchKey(mode, n, len(md), values)
    pr = profile(n, md)
    if n == 2:
        values = (pr.d_p1, pr.e, pr.c1 % 2)
    elif n == 3:
        values = (pr.d, pr.p[0], pr.e)
    else:
        values = (pr.d,) + pr.p + (pr.e,)
    return MatchKey(mode, n, len(md), values)


@dataclass
class PairReport:
    members: Tuple[Multidegree, ...]  # lexicographically sorted, all distinct
    key: MatchKey
    c1: Dict[Multidegree, int]
    verdicts: List[Tuple[Multidegree, Multidegree, ClassificationVerdict]] = field(
        default_factory=list
    )

    def to_record(self) -> Dict[str, object]:
        return {
            "members": [list(m) for m in self.members],
            "key": self.key.to_record(),
            "c1": {",".join(map(str, m)): str(self.c1[m]) for m in self.members},
            "verdicts": [
                {"a": list(a), "b": list(b), **v.to_record()}
                for a, b, v in self.verdicts
            ],
        }


@dataclass
class KeyMismatch:
    """First disagreeing key field when two multidegrees fail to match."""

    field_name: str
    a_value: str
    b_value: str

    def to_record(self) -> Dict[str, object]:
        return {
            "mismatch": self.field_name,
            "a": self.a_value,
            "b": self.b_value,
        }


def enumerate_multidegrees(config: SearchConfig) -> Iterator[Multidegree]:
    """Every canonical multidegree within the bounds, exactly once, ordered
    by codimension then ascending lexicographically."""
    for r in range(config.min_codim, config.max_codim + 1):
        yield from _lex_tuples(r, config.max_degree, config.max_total_degree)


def _lex_tuples(r: int, max_degree: int, cap: Optional[int]) -> Iterator[Multidegree]:
    """Non-increasing r-tuples over [2, max_degree] in ascending lex order."""

    def rec(prefix: List[int], prod: int) -> Iterator[Multidegree]:
        if len(prefix) == r:
            yield tuple(prefix)
            return
        hi = prefix[-1] if prefix else max_degree
        for v in range(2, hi + 1):
            nxt = prod * v
            if cap is not None and nxt > cap:
                break
            prefix.append(v)
            yield from rec(prefix, nxt)
            prefix.pop()

    yield from rec([], 1)


def _scan_task(args) -> List[Tuple[Tuple, Multidegree]]:
    n, max_degree, min_codim, max_codim, max_total, power_mode, d1_values = args
    return _core.scan(n, max_degree, min_codim, max_codim, max_total, power_mode, d1_values)


def _group_scan(config: SearchConfig, min_codim: int) -> Dict[Tuple, set]:
    power_mode = config.mode is KeyMode.POWER_SUM
    d1_all = list(range(2, config.max_degree + 1))
    workers = min(config.worker_count, len(d1_all)) or 1
    chunks = [d1_all[w::workers] for w in range(workers)]
    args = [
        (config.n, config.max_degree, min_codim, config.max_codim,
         config.max_total_degree, power_mode, chunk)
        for chunk in chunks if chunk
    ]
    if workers == 1:
        results = [_scan_task(args[0])] if args else []
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_task, args))
    groups: Dict[Tuple, set] = {}
    for part in results:
        for key, md in part:
            groups.setdefault(key, set()).add(md)
            if len(groups) > config.max_table_size:
                raise SearchLimitExceeded(
                    f"grouping table exceeded {config.max_table_size} keys"
                )
    return groups


def search_pairs(config: SearchConfig) -> List[PairReport]:
    """Find every group of >= 2 distinct multidegrees sharing a key.

    Deterministic: output is sorted by (smallest total degree, smallest
    member), members within a group lexicographically, regardless of
    worker count.
    """
    min_codim = config.min_codim
    if config.apply_rigidity_pruning and config.n > 2:
        # rigidity: r <= (n+2)/2 admits no nontrivial matches
        min_codim = max(min_codim, (config.n + 2) // 2 + 1)
        if min_codim > config.max_codim:
            return []
    groups = _group_scan(config, min_codim)

    reports = []
    for members in groups.values():
        if len(members) < 2:
            continue
        ordered = tuple(sorted(members))
        # re-verify through the profile route, independent of the kernel
        keys = [match_key(config.n, md, config.mode) for md in ordered]
        first = keys[0].grouping()
        assert all(k.grouping() == first for k in keys[1:]), "kernel/profile key mismatch"

        c1 = {md: profile(config.n, md).c1 for md in ordered}
        if config.require_distinct_c1 and len(set(c1.values())) < 2:
            continue
        if config.require_equal_c1:
            counts: Dict[int, int] = {}
            for v in c1.values():
                counts[v] = counts.get(v, 0) + 1
            if max(counts.values()) < 2:
                continue
        report = PairReport(members=ordered, key=keys[0], c1=c1)
        for i in range(len(ordered)):
            for j in range(i + 1, len(ordered)):
                report.verdicts.append(
                    (ordered[i], ordered[j], classify_pair(config.n, ordered[i], ordered[j]))
                )
        reports.append(report)

    reports.sort(key=lambda rep: (min(total_degree(m) for m in rep.members), rep.members[0]))
    return reports


def verify_known_pair(
    n: int,
    a_raw: List[int],
    b_raw: List[int],
    mode: KeyMode = KeyMode.POWER_SUM,
) -> Union[PairReport, KeyMismatch]:
    """Spot-check a known pair without enumerating anything.

    Returns a classified PairReport when the keys agree, otherwise the
    first disagreeing key field.
    """
    a, b = canonicalize(a_raw), canonicalize(b_raw)
    ka, kb = match_key(n, a, mode), match_key(n, b, mode)
    if ka.grouping() != kb.grouping():
        for name, va, vb in zip(ka.field_names, ka.values, kb.values):
            if va != vb:
                return KeyMismatch(name, str(va), str(vb))
        return KeyMismatch("r", str(ka.r), str(kb.r))
    members = tuple(sorted({a, b}))
    report = PairReport(
        members=members,
        key=ka,
        c1={md: profile(n, md).c1 for md in members},
    )
    if len(members) == 2:
        report.verdicts.append((members[0], members[1], classify_pair(n, members[0], members[1])))
    else:
        report.verdicts.append((a, b, classify_pair(n, a, b)))
    return report
