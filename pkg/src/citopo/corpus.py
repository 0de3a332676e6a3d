"""Embedded regression corpus: every published table row and large example,
as TOML records, plus the verifier that recomputes each expected value.

A record passes iff every expected field matches exactly and the claimed
relation for its pair is reproduced.  Fields under ``informational`` are
recomputed and reported but never fail a run (they transcribe ambiguously
labeled source lines).
"""

import sys
from dataclasses import dataclass, field
from importlib import resources
from typing import Dict, List, Optional, Tuple

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .classify import DIFFEOMORPHIC, HOMEO_NOT_DIFFEO, HOMEOMORPHIC, classify_pair
from .factor import (
    factorize_multidegree,
    format_factorization,
    padic_valuation,
    parse_factorization,
)
from .invariants import Multidegree, canonicalize, power_sums, profile, total_degree

CLAIMS = {HOMEOMORPHIC, DIFFEOMORPHIC, HOMEO_NOT_DIFFEO}

# a claimed relation is reproduced by itself or anything stronger
ACCEPTABLE = {
    HOMEOMORPHIC: {HOMEOMORPHIC, DIFFEOMORPHIC, HOMEO_NOT_DIFFEO},
    DIFFEOMORPHIC: {DIFFEOMORPHIC},
    HOMEO_NOT_DIFFEO: {HOMEO_NOT_DIFFEO},
}


class CorpusError(Exception):
    """The corpus itself is malformed (parse failure, bad cross-reference)."""


@dataclass(frozen=True)
class CorpusRecord:
    id: str
    n: int
    degrees: Tuple[int, ...]
    partner: str
    claim: str
    expected: Dict[str, str]
    informational: Dict[str, str] = field(default_factory=dict)


@dataclass
class FieldDiff:
    name: str
    expected: str
    computed: str


@dataclass
class RecordResult:
    id: str
    failures: List[FieldDiff] = field(default_factory=list)
    informational: List[Tuple[FieldDiff, bool]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class PairResult:
    a: str
    b: str
    claim: str
    relation: str
    ok: bool


@dataclass
class VerificationReport:
    records: List[RecordResult]
    pairs: List[PairResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records) and all(p.ok for p in self.pairs)

    @property
    def counts(self) -> Dict[str, int]:
        return {
            "records": len(self.records),
            "records_failed": sum(not r.passed for r in self.records),
            "pairs": len(self.pairs),
            "pairs_failed": sum(not p.ok for p in self.pairs),
        }

    def to_record(self) -> Dict[str, object]:
        return {
            "passed": self.passed,
            "counts": self.counts,
            "records": [
                {
                    "id": r.id,
                    "passed": r.passed,
                    "failures": [vars(d) for d in r.failures],
                    "informational": [
                        {**vars(d), "match": ok} for d, ok in r.informational
                    ],
                }
                for r in self.records
            ],
            "pairs": [vars(p) for p in self.pairs],
        }


def _parse_records(raw: Dict, source: str) -> List[CorpusRecord]:
    records = []
    for entry in raw.get("record", []):
        try:
            rec = CorpusRecord(
                id=entry["id"],
                n=int(entry["n"]),
                degrees=tuple(int(v) for v in entry["degrees"]),
                partner=entry["partner"],
                claim=entry["claim"],
                expected={k: str(v) for k, v in entry.get("expected", {}).items()},
                informational={k: str(v) for k, v in entry.get("informational", {}).items()},
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise CorpusError(f"{source}: bad record {entry.get('id', '?')}: {exc}") from exc
        if not rec.degrees:
            raise CorpusError(f"{source}: record {rec.id} has no degrees")
        if rec.claim not in CLAIMS:
            raise CorpusError(f"{source}: record {rec.id} has unknown claim {rec.claim!r}")
        for name, value in rec.expected.items():
            if name != "factorization":
                try:
                    int(value)
                except ValueError as exc:
                    raise CorpusError(
                        f"{source}: record {rec.id} field {name} is not an integer"
                    ) from exc
        records.append(rec)
    return records


def load_corpus(path: Optional[str] = None) -> List[CorpusRecord]:
    """Load corpus records from a TOML file, or the embedded corpus."""
    records: List[CorpusRecord] = []
    if path is not None:
        try:
            with open(path, "rb") as fh:
                records = _parse_records(tomllib.load(fh), path)
        except (OSError, tomllib.TOMLDecodeError) as exc:
            raise CorpusError(f"cannot read corpus {path}: {exc}") from exc
    else:
        data = resources.files("citopo") / "data"
        for entry in sorted(data.iterdir(), key=lambda p: p.name):
            if entry.name.endswith(".toml"):
                try:
                    records.extend(_parse_records(tomllib.loads(entry.read_text()), entry.name))
                except tomllib.TOMLDecodeError as exc:
                    raise CorpusError(f"cannot parse {entry.name}: {exc}") from exc
    by_id = {}
    for rec in records:
        if rec.id in by_id:
            raise CorpusError(f"duplicate record id {rec.id}")
        by_id[rec.id] = rec
    for rec in records:
        partner = by_id.get(rec.partner)
        if partner is None:
            raise CorpusError(f"record {rec.id} references missing partner {rec.partner}")
        if partner.partner != rec.id:
            raise CorpusError(f"records {rec.id} and {rec.partner} do not cross-reference")
    return records


def _compute_field(name: str, n: int, md: Multidegree) -> str:
    if name == "d":
        return str(total_degree(md))
    if name in {"c1", "e", "d_p1"} or (name.startswith("p") and name[1:].isdigit()):
        pr = profile(n, md)
        if name == "c1":
            return str(pr.c1)
        if name == "e":
            return str(pr.e)
        if name == "d_p1":
            return str(pr.d * pr.p[0])
        return str(pr.p[int(name[1:]) - 1])
    if name == "e_over_d":
        pr = profile(n, md)
        return str(pr.e // pr.d) if pr.e % pr.d == 0 else f"{pr.e}/{pr.d}"
    if name.startswith("s") and name[1:].isdigit():
        i = int(name[1:])
        return str(power_sums(md, i)[i - 1])
    if name.startswith("nu") and name[2:].isdigit():
        return str(padic_valuation(factorize_multidegree(md), int(name[2:])))
    if name == "factorization":
        return format_factorization(factorize_multidegree(md))
    raise CorpusError(f"unknown expected field {name!r}")


def _values_match(name: str, expected: str, computed: str) -> bool:
    if name == "factorization":
        return parse_factorization(expected) == parse_factorization(computed)
    return int(expected) == int(computed)


def verify_corpus(path: Optional[str] = None) -> VerificationReport:
    """Recompute every expected value and pair claim in the corpus."""
    records = load_corpus(path)
    results = []
    for rec in records:
        md = canonicalize(rec.degrees)
        result = RecordResult(rec.id)
        for name, expected in rec.expected.items():
            computed = _compute_field(name, rec.n, md)
            if not _values_match(name, expected, computed):
                result.failures.append(FieldDiff(name, expected, computed))
        for name, expected in rec.informational.items():
            computed = _compute_field(name, rec.n, md)
            result.informational.append(
                (FieldDiff(name, expected, computed), _values_match(name, expected, computed))
            )
        results.append(result)

    by_id = {rec.id: rec for rec in records}
    pairs = []
    for rec in records:
        if rec.id >= rec.partner:
            continue
        other = by_id[rec.partner]
        verdict = classify_pair(rec.n, canonicalize(rec.degrees), canonicalize(other.degrees))
        pairs.append(
            PairResult(
                a=rec.id,
                b=other.id,
                claim=rec.claim,
                relation=verdict.relation,
                ok=verdict.relation in ACCEPTABLE[rec.claim],
            )
        )
    return VerificationReport(records=results, pairs=pairs)
