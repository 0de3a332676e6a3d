"""Executable classification criteria for pairs of complete intersections.

Implements the dimension-2 sufficient conditions for homeomorphic but
non-diffeomorphic pairs, the Jupp-Wall dimension-3 diffeomorphism
criterion, the Fang-Klaus / Fang-Wang homeomorphism criterion for
n = 4..7, the Traving diffeomorphism upgrade driven by p-adic valuations
of the total degree, and the small-codimension rigidity rule used to
prune the search.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .factor import Factorization, factorize_multidegree, padic_valuation
from .invariants import InvariantProfile, Multidegree, profile

# Relations a verdict can report.
IDENTICAL = "identical-multidegree"
DIFFEOMORPHIC = "diffeomorphic"
HOMEOMORPHIC = "homeomorphic"
HOMEO_NOT_DIFFEO = "homeomorphic-not-diffeomorphic"
INVARIANTS_DIFFER = "invariants-differ"
UNDECIDED = "undecided"

# Criterion labels.
CRIT_DIM2 = "ebeling-libgober-wood"
CRIT_JUPP_WALL = "jupp-wall"
CRIT_FKW = "fang-klaus-fang-wang"
CRIT_TRAVING = "traving"


@dataclass(frozen=True)
class TravingThreshold:
    p: int
    threshold: Fraction  # (2n+1)/(2(p-1)) + 1, kept exact


def traving_thresholds(n: int) -> List[TravingThreshold]:
    """Thresholds for every prime p with p(p-1) <= n+1."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    out = []
    p = 2
    while p * (p - 1) <= n + 1:
        if all(p % q for q in range(2, p)):
            out.append(TravingThreshold(p, Fraction(2 * n + 1, 2 * (p - 1)) + 1))
        p += 1
    return out


def traving_condition(n: int, f: Factorization) -> bool:
    """True iff nu_p(d) meets the threshold for every qualifying prime.

    Comparison is exact rational: an integer nu satisfies nu >= 11/2 iff
    nu >= 6; no rounding is involved.
    """
    if n <= 2:
        raise ValueError(f"the diffeomorphism upgrade needs n > 2, got {n}")
    return all(padic_valuation(f, t.p) >= t.threshold for t in traving_thresholds(n))


def _check_same_dim(a: InvariantProfile, b: InvariantProfile, allowed) -> None:
    if a.n != b.n:
        raise ValueError(f"profiles computed at different dimensions {a.n} and {b.n}")
    if a.n not in allowed:
        raise ValueError(f"criterion applies only for n in {sorted(allowed)}, got {a.n}")


def fkw_homeomorphic(n: int, a: InvariantProfile, b: InvariantProfile) -> bool:
    """Homeomorphism test for n = 4..7: equal d, all p_k, and e."""
    _check_same_dim(a, b, {4, 5, 6, 7})
    if a.n != n:
        raise ValueError(f"profiles are for n={a.n}, not n={n}")
    return a.d == b.d and a.p == b.p and a.e == b.e


def jupp_wall_diffeomorphic(a: InvariantProfile, b: InvariantProfile) -> bool:
    """Dimension-3 diffeomorphism iff d, p_1 and e agree (c_1 may differ)."""
    _check_same_dim(a, b, {3})
    return a.d == b.d and a.p[0] == b.p[0] and a.e == b.e


def dim2_homeo_not_diffeo(a: InvariantProfile, b: InvariantProfile) -> bool:
    """Dimension-2 sufficient conditions for homeomorphic-not-diffeomorphic.

    Requires d*p_1 and e to agree, c_1 to agree mod 2, and c_1 to differ.
    Total degrees themselves may differ.
    """
    _check_same_dim(a, b, {2})
    return (
        a.d_p1 == b.d_p1
        and a.e == b.e
        and (a.c1 - b.c1) % 2 == 0
        and a.c1 != b.c1
    )


def rigidity_excludes_pair(n: int, md: Multidegree) -> bool:
    """True iff n > 2 and r <= (n+2)/2, where total degree and Pontrjagin
    classes pin down the multidegree, so no nontrivial match can involve md."""
    return n > 2 and 2 * len(md) <= n + 2


@dataclass(frozen=True)
class ClassificationVerdict:
    relation: str
    criterion: Optional[str] = None
    notes: str = ""
    compared: Dict[str, Tuple[str, str]] = field(default_factory=dict)

    def to_record(self) -> Dict[str, object]:
        return {
            "relation": self.relation,
            "criterion": self.criterion,
            "notes": self.notes,
            "compared": {k: list(v) for k, v in self.compared.items()},
        }


def _compared(a: InvariantProfile, b: InvariantProfile) -> Dict[str, Tuple[str, str]]:
    out = {"d": (str(a.d), str(b.d)), "c1": (str(a.c1), str(b.c1))}
    for k, (pa, pb) in enumerate(zip(a.p, b.p), start=1):
        out[f"p{k}"] = (str(pa), str(pb))
    out["e"] = (str(a.e), str(b.e))
    if a.n == 2:
        out["d_p1"] = (str(a.d_p1), str(b.d_p1))
    return out


def _first_difference(a: InvariantProfile, b: InvariantProfile, fields: List[str]) -> str:
    cmp = _compared(a, b)
    for name in fields:
        va, vb = cmp[name]
        if va != vb:
            return f"{name} differs ({va} vs {vb})"
    return "invariants differ"


def classify_pair(n: int, a: Multidegree, b: Multidegree) -> ClassificationVerdict:
    """Dispatch the applicable criteria for a pair of canonical multidegrees."""
    if not 2 <= n <= 7:
        raise ValueError(f"classification implemented for 2 <= n <= 7, got {n}")
    if tuple(a) == tuple(b):
        return ClassificationVerdict(IDENTICAL, notes="same multidegree")
    pa, pb = profile(n, a), profile(n, b)
    cmp = _compared(pa, pb)

    if n == 2:
        if dim2_homeo_not_diffeo(pa, pb):
            return ClassificationVerdict(
                HOMEO_NOT_DIFFEO, CRIT_DIM2,
                notes=f"c_1 differs ({pa.c1} vs {pb.c1}) with equal parity",
                compared=cmp,
            )
        if pa.d_p1 == pb.d_p1 and pa.e == pb.e:
            # Matching c_1 (or parity mismatch) is outside the sufficient
            # conditions; no claim either way.
            return ClassificationVerdict(
                UNDECIDED, CRIT_DIM2,
                notes="d*p_1 and e agree but the c_1 conditions fail",
                compared=cmp,
            )
        return ClassificationVerdict(
            INVARIANTS_DIFFER, CRIT_DIM2,
            notes=_first_difference(pa, pb, ["d_p1", "e"]),
            compared=cmp,
        )

    if n == 3:
        if jupp_wall_diffeomorphic(pa, pb):
            notes = ""
            if pa.c1 != pb.c1:
                notes = (
                    f"distinct c_1 ({pa.c1} vs {pb.c1}) "
                    "- disconnected moduli space witness"
                )
            return ClassificationVerdict(DIFFEOMORPHIC, CRIT_JUPP_WALL, notes, cmp)
        return ClassificationVerdict(
            INVARIANTS_DIFFER, CRIT_JUPP_WALL,
            notes=_first_difference(pa, pb, ["d", "p1", "e"]),
            compared=cmp,
        )

    # n in 4..7
    if fkw_homeomorphic(n, pa, pb):
        assert pa.d == pb.d
        if traving_condition(n, factorize_multidegree(a)):
            return ClassificationVerdict(
                DIFFEOMORPHIC, CRIT_TRAVING,
                notes="homeomorphic and the total degree meets every valuation threshold",
                compared=cmp,
            )
        return ClassificationVerdict(
            HOMEOMORPHIC, CRIT_FKW,
            notes="total degree misses a valuation threshold; no diffeomorphism upgrade",
            compared=cmp,
        )
    fields = ["d"] + [f"p{k}" for k in range(1, n // 2 + 1)] + ["e"]
    return ClassificationVerdict(
        INVARIANTS_DIFFER, CRIT_FKW,
        notes=_first_difference(pa, pb, fields),
        compared=cmp,
    )
