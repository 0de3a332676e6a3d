"""Multidegrees and their exact topological invariants.

A complete intersection of complex dimension n cut out by hypersurfaces of
degrees d_1 >= ... >= d_r has total degree d = prod(d_i), Chern coefficient
c_k = g_k(n+r+1-s_1, ..., n+r+1-s_k)/k!, Pontrjagin coefficient
p_k = g_k(n+r+1-s_2, n+r+1-s_4, ..., n+r+1-s_{2k})/k! and Euler
characteristic e = d * g_n(n+r+1-s_1, ..., n+r+1-s_n)/n!, where s_i are
the power sums of the degrees.  Everything here is exact integer
arithmetic; coefficients of the hyperplane-class powers are stored as
plain integers.
"""

from dataclasses import dataclass
from math import factorial, prod
from typing import Dict, Iterable, List, Optional, Tuple

from .newton import IntegralityError, newton_g

# Canonical multidegree: non-increasing tuple of integers >= 2.
# The empty tuple is projective space itself (r = 0).
Multidegree = Tuple[int, ...]


def canonicalize(raw: Iterable[int]) -> Multidegree:
    """Sort non-increasing and strip degree-1 entries.

    A degree-1 hypersurface just re-embeds the same variety in a smaller
    ambient space, so stripping keeps multidegree equality meaningful.
    """
    degrees = list(raw)
    for v in degrees:
        if v < 1:
            raise ValueError(f"degree {v} is not positive")
    return tuple(sorted((v for v in degrees if v > 1), reverse=True))


def total_degree(md: Multidegree) -> int:
    return prod(md)


def power_sums(md: Multidegree, m: int) -> List[int]:
    """Exact power sums s_1..s_m of the degrees."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return [sum(v**i for v in md) for i in range(1, m + 1)]


def chern_coefficient(n: int, md: Multidegree, k: int) -> int:
    """Coefficient of x^k in the k-th Chern class."""
    if not 1 <= k <= n:
        raise ValueError(f"k must be in 1..{n}, got {k}")
    r = len(md)
    s = power_sums(md, k) if md else [0] * k
    c = n + r + 1
    g = newton_g(k, [c - si for si in s])
    q, rem = divmod(g, factorial(k))
    if rem:
        raise IntegralityError(f"k! does not divide g_{k} for c_{k} of {md} at n={n}")
    return q


def pontrjagin_coefficient(n: int, md: Multidegree, k: int) -> int:
    """Coefficient of x^{2k} in the k-th Pontrjagin class.

    Uses the even power sums s_2, s_4, ..., s_{2k} only.
    """
    if not 1 <= k <= n // 2:
        raise ValueError(f"k must be in 1..{n // 2}, got {k}")
    r = len(md)
    s = power_sums(md, 2 * k) if md else [0] * (2 * k)
    c = n + r + 1
    g = newton_g(k, [c - s[2 * i - 1] for i in range(1, k + 1)])
    q, rem = divmod(g, factorial(k))
    if rem:
        raise IntegralityError(f"k! does not divide g_{k} for p_{k} of {md} at n={n}")
    return q


def euler_characteristic(n: int, md: Multidegree) -> int:
    """Euler characteristic d * g_n(shifted sums)/n!."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    r = len(md)
    d = total_degree(md)
    s = power_sums(md, n) if md else [0] * n
    c = n + r + 1
    g = newton_g(n, [c - si for si in s])
    q, rem = divmod(d * g, factorial(n))
    if rem:
        raise IntegralityError(f"n! does not divide d*g_n for e of {md} at n={n}")
    return q


@dataclass(frozen=True)
class InvariantProfile:
    """Exact invariants of one complete intersection at fixed dimension n."""

    n: int
    r: int
    d: int
    c1: int
    p: Tuple[int, ...]  # p_1 .. p_{n//2}
    e: int
    chern: Optional[Tuple[int, ...]] = None  # full c_1 .. c_n when requested

    @property
    def d_p1(self) -> int:
        """Composite d*p_1 (the invariant the dim-2 criterion compares)."""
        return self.d * self.p[0]

    def to_record(self) -> Dict[str, object]:
        """Flat record with every integer as a decimal string.

        Values exceed 64 bits, so text round-trips must be bit-exact.
        """
        rec: Dict[str, object] = {
            "n": self.n,
            "r": self.r,
            "d": str(self.d),
            "c1": str(self.c1),
            "p": [str(v) for v in self.p],
            "e": str(self.e),
        }
        if self.n == 2:
            rec["d_p1"] = str(self.d_p1)
        if self.chern is not None:
            rec["chern"] = [str(v) for v in self.chern]
        return rec

    @classmethod
    def from_record(cls, rec: Dict[str, object]) -> "InvariantProfile":
        chern = rec.get("chern")
        return cls(
            n=int(rec["n"]),
            r=int(rec["r"]),
            d=int(rec["d"]),
            c1=int(rec["c1"]),
            p=tuple(int(v) for v in rec["p"]),
            e=int(rec["e"]),
            chern=tuple(int(v) for v in chern) if chern is not None else None,
        )


def profile(n: int, md: Multidegree, with_chern: bool = False) -> InvariantProfile:
    """Compute the full invariant profile of X_n(md)."""
    if n < 2:
        raise ValueError(f"profiles need n >= 2, got {n}")
    chern = tuple(chern_coefficient(n, md, k) for k in range(1, n + 1)) if with_chern else None
    return InvariantProfile(
        n=n,
        r=len(md),
        d=total_degree(md),
        c1=chern_coefficient(n, md, 1),
        p=tuple(pontrjagin_coefficient(n, md, k) for k in range(1, n // 2 + 1)),
        e=euler_characteristic(n, md),
        chern=chern,
    )
